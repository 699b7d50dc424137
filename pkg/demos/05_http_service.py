"""
The scoring service over HTTP
=============================

Starts the threaded JSON service on an ephemeral port, exercises all three
endpoints with plain urllib, and shuts it down. This is exactly what
`passgauge serve` runs; the web meter in frontend/ talks to the same API.
"""

import json
import threading
import urllib.request
from importlib import resources

from passgauge import TrainConfig, load_csv, train_pipeline
from passgauge.service import make_server

with resources.as_file(
    resources.files("passgauge.data").joinpath("sample_5k.csv")
) as path:
    records, _ = load_csv(path)
trained, _ = train_pipeline(records, TrainConfig(n_trees=25, seed=42))

# Port 0 asks the OS for a free port; the CLI defaults to 127.0.0.1:8000.
server = make_server(trained, "127.0.0.1", 0)
threading.Thread(target=server.serve_forever, daemon=True).start()
base = f"http://127.0.0.1:{server.server_address[1]}"
print(f"service up at {base}\n")

with urllib.request.urlopen(base + "/v1/health") as resp:
    print("GET /v1/health ->", resp.read().decode())

req = urllib.request.Request(
    base + "/v1/score",
    data=json.dumps({"password": "Tr0ub4dor&3"}).encode(),
    headers={"Content-Type": "application/json"},
    method="POST",
)
with urllib.request.urlopen(req) as resp:
    body = json.loads(resp.read())
print(f"\nPOST /v1/score 'Tr0ub4dor&3' -> {body['class_name']}")
for rec in body["recommendations"]:
    print(f"  advice: {rec}")

# /v1/model exposes training metadata and aggregate counters, never
# passwords: the service keeps no per-request state.
with urllib.request.urlopen(base + "/v1/model") as resp:
    meta = json.loads(resp.read())
print(f"\nGET /v1/model -> model_type={meta['model_type']}, "
      f"counters={meta['counters']}")

server.shutdown()
server.server_close()
print("\nservice stopped")
