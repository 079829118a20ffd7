"""Record HTTP fixtures for the explorer tests from a live service.

Starts the backend in-process on an ephemeral port, replays the exact
request sequence the explorer issues, and stores every raw response body
(byte-exact) with its status in tests/fixtures/fixtures.json.  Rerun
after any change to the backend's payloads:

    python3 scripts/record_fixtures.py
"""

from __future__ import annotations

import json
import pathlib
import threading
import urllib.error
import urllib.request

from clustertilt.server import make_server

OUT = pathlib.Path(__file__).resolve().parent.parent / "tests" / "fixtures" / "fixtures.json"

QUIVER = "1->2 2->3"


def call(base: str, name: str, method: str, path: str, body=None):
    data = None if body is None else json.dumps(body).encode("utf-8")
    req = urllib.request.Request(base + path, data=data, method=method)
    try:
        with urllib.request.urlopen(req, timeout=10) as resp:
            status, raw = resp.status, resp.read().decode("utf-8")
    except urllib.error.HTTPError as err:
        status, raw = err.code, err.read().decode("utf-8")
    return {
        "name": name,
        "method": method,
        "path": path,
        "requestBody": body,
        "status": status,
        "raw": raw.rstrip("\n"),
    }


def main():
    srv = make_server("127.0.0.1", 0)
    thread = threading.Thread(target=srv.serve_forever, daemon=True)
    thread.start()
    host, port = srv.server_address[:2]
    base = f"http://{host}:{port}"
    try:
        records = []
        created = call(base, "session", "POST", "/api/session", {"quiver": QUIVER})
        records.append(created)
        sid = json.loads(created["raw"])["session"]
        p = f"/api/session/{sid}"
        records.append(call(base, "ar_c", "GET", f"{p}/ar?mode=C"))
        records.append(call(base, "ar_gamma_initial", "GET", f"{p}/ar?mode=gamma"))
        records.append(call(base, "tilting_initial", "GET", f"{p}/tilting"))
        records.append(call(base, "endo_initial", "GET", f"{p}/endo"))
        # click on the projective at id 1 (P2): S1 (id 5) comes in
        records.append(
            call(base, "mutate_p2", "POST", f"{p}/mutate",
                 {"at": "1", "expect": [2, 1, 0]})
        )
        records.append(call(base, "tilting_after_p2", "GET", f"{p}/tilting"))
        # a mutation carrying the pre-click summands is refused
        records.append(
            call(base, "mutate_stale", "POST", f"{p}/mutate",
                 {"at": "2", "expect": [2, 1, 0]})
        )
        # ...after which the explorer refreshes everything it shows
        records.append(call(base, "tilting_after_stale", "GET", f"{p}/tilting"))
        records.append(call(base, "ar_gamma_after_stale", "GET", f"{p}/ar?mode=gamma"))
        records.append(call(base, "endo_after_stale", "GET", f"{p}/endo"))
        # double-click on the incoming summand restores the original object
        records.append(
            call(base, "mutate_back", "POST", f"{p}/mutate",
                 {"at": "5", "expect": [2, 0, 5]})
        )
        records.append(call(base, "tilting_restored", "GET", f"{p}/tilting"))
    finally:
        srv.shutdown()
        srv.server_close()
    OUT.parent.mkdir(parents=True, exist_ok=True)
    OUT.write_text(json.dumps(records, indent=2) + "\n", encoding="utf-8")
    print(f"wrote {len(records)} fixtures to {OUT}")
    initial = next(r for r in records if r["name"] == "tilting_initial")
    restored = next(r for r in records if r["name"] == "tilting_restored")
    print("round trip byte-identical:", initial["raw"] == restored["raw"])


if __name__ == "__main__":
    main()
