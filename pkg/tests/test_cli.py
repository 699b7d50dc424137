import json

import pytest

from passgauge import cli
from passgauge.pipeline import save_pipeline


@pytest.fixture(scope="module")
def model_file(tmp_path_factory, small_csv):
    """Train once via the CLI and reuse the archive across tests."""
    path = tmp_path_factory.mktemp("cli") / "model.pgz"
    code = cli.main([
        "train", "--data", str(small_csv), "--out", str(path),
        "--trees", "15", "--ngram-max-features", "100", "--seed", "7",
    ])
    assert code == 0
    return path


def test_train_writes_model(model_file):
    assert model_file.stat().st_size > 0


def test_evaluate(model_file, small_csv, tmp_path, capsys):
    code = cli.main([
        "evaluate", "--model", str(model_file),
        "--data", str(small_csv), "--out-dir", str(tmp_path),
    ])
    assert code == 0
    summary = json.loads(capsys.readouterr().out)
    assert 0.0 <= summary["accuracy"] <= 1.0
    assert (tmp_path / "metrics.json").is_file()
    assert (tmp_path / "confusion.csv").is_file()
    assert (tmp_path / "feature_ranking.csv").is_file()


def test_score(model_file, capsys):
    code = cli.main(["score", "--model", str(model_file), "123456"])
    assert code == 0
    result = json.loads(capsys.readouterr().out)
    assert result["class_name"] == "weak"
    assert "dictionary_hit" in result["issues"]


def test_score_stdin(model_file, capsys, monkeypatch):
    import io

    monkeypatch.setattr("sys.stdin", io.StringIO("correct horse battery\n"))
    code = cli.main(["score", "--model", str(model_file), "--stdin"])
    assert code == 0
    result = json.loads(capsys.readouterr().out)
    assert result["diagnostics"]["length"] == len("correct horse battery")


def test_rank_features(small_csv, tmp_path, capsys):
    out = tmp_path / "ranking.csv"
    code = cli.main(["rank-features", "--data", str(small_csv), "--out", str(out)])
    assert code == 0
    header = out.read_text().splitlines()[0]
    assert header == "rank,feature,anova_f"


def test_unknown_flag_is_usage_error(capsys):
    assert cli.main(["train", "--nonsense"]) == 1


def test_missing_subcommand_is_usage_error(capsys):
    assert cli.main([]) == 1


def test_score_without_password_is_usage_error(model_file, capsys):
    assert cli.main(["score", "--model", str(model_file)]) == 1


def test_missing_model_file_is_data_error(tmp_path, capsys):
    assert cli.main(["score", "--model", str(tmp_path / "nope.pgz"), "x"]) == 2


def test_no_model_anywhere_is_data_error(capsys, monkeypatch):
    monkeypatch.delenv("PASSGAUGE_MODEL", raising=False)
    assert cli.main(["score", "abc"]) == 2


def test_missing_data_file_is_data_error(tmp_path, capsys):
    code = cli.main([
        "train", "--data", str(tmp_path / "nope.csv"), "--out", str(tmp_path / "m.pgz"),
    ])
    assert code == 2


def test_env_var_fallback(model_file, capsys, monkeypatch):
    monkeypatch.setenv("PASSGAUGE_MODEL", str(model_file))
    assert cli.main(["score", "zq8#Kv!mW4x&Tz9p"]) == 0
    assert json.loads(capsys.readouterr().out)["class_name"] in ("weak", "medium", "strong")


def test_flag_beats_env_var(small_pipeline, tmp_path, capsys, monkeypatch):
    trained, _, _ = small_pipeline
    real = tmp_path / "real.pgz"
    save_pipeline(trained, real)
    monkeypatch.setenv("PASSGAUGE_MODEL", str(tmp_path / "bogus.pgz"))
    assert cli.main(["score", "--model", str(real), "hello"]) == 0
