"""JSON-over-HTTP scoring service.

Endpoints:
  POST /v1/score   {"password": "..."} -> ScoreResult
  GET  /v1/health  -> {"status": "ok", "model_schema": n}
  GET  /v1/model   -> training metadata (no vocabulary dump)

Passwords are never logged or persisted; only aggregate request counters
are kept. The loaded pipeline is immutable, so the threaded server needs
no locking around scoring. Static files (the web meter) are served from an
optional directory for any path outside /v1/.
"""

from __future__ import annotations

import json
import threading
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from .pipeline import SCHEMA_VERSION, TrainedPipeline, score_password

_CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "application/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".json": "application/json; charset=utf-8",
    ".svg": "image/svg+xml",
    ".ico": "image/x-icon",
}


class ScoringServer(ThreadingHTTPServer):
    daemon_threads = True

    def __init__(self, addr, pipeline: TrainedPipeline, static_dir=None):
        super().__init__(addr, _Handler)
        self.pipeline = pipeline
        self.static_dir = Path(static_dir).resolve() if static_dir else None
        self.counters = {"requests": 0, "weak": 0, "medium": 0, "strong": 0}
        self.counter_lock = threading.Lock()


class _Handler(BaseHTTPRequestHandler):
    server: ScoringServer

    def log_message(self, fmt, *args):
        # Quiet by design: request lines could echo sensitive paths.
        pass

    def _send_json(self, status: int, body: dict) -> None:
        data = json.dumps(body).encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json; charset=utf-8")
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)

    def do_POST(self):
        if self.path != "/v1/score":
            self._send_json(404, {"error": "not found"})
            return
        try:
            length = int(self.headers.get("Content-Length", "0"))
            body = json.loads(self.rfile.read(length) or b"{}")
        except (ValueError, json.JSONDecodeError):
            self._send_json(400, {"error": "invalid JSON body"})
            return
        if not isinstance(body, dict) or "password" not in body or not isinstance(body["password"], str):
            self._send_json(400, {"error": "missing 'password' field"})
            return
        result = score_password(self.server.pipeline, body["password"])
        with self.server.counter_lock:
            self.server.counters["requests"] += 1
            self.server.counters[result.class_name] += 1
        self._send_json(200, result.to_dict())

    def do_GET(self):
        if self.path == "/v1/health":
            self._send_json(200, {"status": "ok", "model_schema": SCHEMA_VERSION})
            return
        if self.path == "/v1/model":
            meta = dict(self.server.pipeline.metadata)
            meta["model_type"] = self.server.pipeline.model_type
            meta["label_names"] = list(self.server.pipeline.label_names)
            with self.server.counter_lock:
                meta["counters"] = dict(self.server.counters)
            self._send_json(200, meta)
            return
        self._serve_static()

    def _serve_static(self):
        root = self.server.static_dir
        if root is None:
            self._send_json(404, {"error": "not found"})
            return
        rel = self.path.split("?", 1)[0].lstrip("/") or "index.html"
        target = (root / rel).resolve()
        if not str(target).startswith(str(root)) or not target.is_file():
            self._send_json(404, {"error": "not found"})
            return
        data = target.read_bytes()
        self.send_response(200)
        self.send_header("Content-Type", _CONTENT_TYPES.get(target.suffix, "application/octet-stream"))
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)


def make_server(pipeline: TrainedPipeline, host: str = "127.0.0.1", port: int = 8000,
                static_dir=None) -> ScoringServer:
    return ScoringServer((host, port), pipeline, static_dir)
