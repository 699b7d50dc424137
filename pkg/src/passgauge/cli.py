"""Command-line interface: train, evaluate, score, rank-features, serve.

Exit codes: 0 success, 1 usage error, 2 data/model error.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from pathlib import Path

from . import dataset, metrics, pipeline, service
from .errors import PassgaugeError
from .features import BreachedDictionary, default_dictionary

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DATA = 2


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        print(f"error: {message}", file=sys.stderr)
        raise SystemExit(EXIT_USAGE)


def _model_path(args) -> str:
    path = args.model or os.environ.get("PASSGAUGE_MODEL")
    if not path:
        raise PassgaugeError("no model file given (use --model or PASSGAUGE_MODEL)")
    return path


def _load_dictionary(path) -> BreachedDictionary:
    return BreachedDictionary.from_file(path) if path else default_dictionary()


def _file_hash(path) -> str:
    return hashlib.sha256(Path(path).read_bytes()).hexdigest()


def cmd_train(args) -> int:
    records, report = dataset.load_csv(args.data)
    config = pipeline.TrainConfig(
        model=args.model_type,
        n_trees=args.trees,
        max_depth=None if args.max_depth == 0 else args.max_depth,
        ngram_max_features=args.ngram_max_features,
        seed=args.seed,
    )
    trained, split = pipeline.train_pipeline(
        records,
        config,
        dictionary=_load_dictionary(args.dict),
        data_hash=_file_hash(args.data),
        grid_search=args.grid_search,
    )
    pipeline.save_pipeline(trained, args.out)
    print(json.dumps({
        "ingest": report.to_dict(),
        "train_size": len(split.train),
        "validation_size": len(split.validation),
        "test_size": len(split.test),
        "model": args.out,
        "config": config.to_dict(),
    }, indent=2))
    return EXIT_OK


def cmd_evaluate(args) -> int:
    trained = pipeline.load_pipeline(_model_path(args))
    records, _ = dataset.load_csv(args.data)
    seed = trained.metadata.get("seed", 42)
    split = dataset.stratified_split(records, seed=seed)
    _, cm, report = pipeline.evaluate_pipeline(trained, records, split.test)
    ranking = pipeline.feature_ranking_for(records, split.train, trained.dictionary)
    paths = metrics.emit_report(report, cm, ranking, args.out_dir)
    print(json.dumps({
        "accuracy": report.accuracy,
        "weighted_f1": report.weighted_f1,
        "files": {k: str(v) for k, v in paths.items()},
    }, indent=2))
    return EXIT_OK


def cmd_score(args) -> int:
    trained = pipeline.load_pipeline(_model_path(args))
    password = sys.stdin.readline().rstrip("\n") if args.stdin else args.password
    if password is None:
        print("error: give a password argument or --stdin", file=sys.stderr)
        return EXIT_USAGE
    result = pipeline.score_password(trained, password)
    print(json.dumps(result.to_dict(), indent=2))
    return EXIT_OK


def cmd_rank_features(args) -> int:
    records, _ = dataset.load_csv(args.data)
    ranking = pipeline.feature_ranking_for(records, range(len(records)))
    out = Path(args.out)
    out.parent.mkdir(parents=True, exist_ok=True)
    with out.open("w", newline="", encoding="utf-8") as fh:
        fh.write("rank,feature,anova_f\n")
        for rank, (name, score) in enumerate(ranking, start=1):
            fh.write(f"{rank},{name},{score}\n")
    print(f"wrote {out}")
    return EXIT_OK


def cmd_serve(args) -> int:
    trained = pipeline.load_pipeline(_model_path(args))
    host, _, port = args.addr.rpartition(":")
    server = service.make_server(trained, host or "127.0.0.1", int(port), args.static)
    print(f"serving on http://{host or '127.0.0.1'}:{port}", file=sys.stderr)
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        server.server_close()
    return EXIT_OK


def build_parser() -> _Parser:
    parser = _Parser(prog="passgauge", description=__doc__)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", help="train a model from a password,strength CSV")
    p.add_argument("--data", required=True)
    p.add_argument("--out", required=True)
    p.add_argument("--trees", type=int, default=100)
    p.add_argument("--max-depth", type=int, default=0, help="0 = unlimited")
    p.add_argument("--ngram-max-features", type=int, default=500)
    p.add_argument("--dict", default=None)
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--model", dest="model_type", choices=["rf", "logreg"], default="rf")
    p.add_argument("--grid-search", action="store_true")
    p.set_defaults(func=cmd_train)

    p = sub.add_parser("evaluate", help="evaluate a model on the test split")
    p.add_argument("--model", default=None)
    p.add_argument("--data", required=True)
    p.add_argument("--out-dir", required=True)
    p.set_defaults(func=cmd_evaluate)

    p = sub.add_parser("score", help="score a single password")
    p.add_argument("--model", default=None)
    p.add_argument("password", nargs="?", default=None)
    p.add_argument("--stdin", action="store_true")
    p.set_defaults(func=cmd_score)

    p = sub.add_parser("rank-features", help="ANOVA F-value feature ranking")
    p.add_argument("--data", required=True)
    p.add_argument("--out", required=True)
    p.set_defaults(func=cmd_rank_features)

    p = sub.add_parser("serve", help="run the JSON scoring service")
    p.add_argument("--model", default=None)
    p.add_argument("--addr", default="127.0.0.1:8000")
    p.add_argument("--static", default=None, help="directory of web meter assets")
    p.set_defaults(func=cmd_serve)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (PassgaugeError, FileNotFoundError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DATA


if __name__ == "__main__":
    sys.exit(main())
