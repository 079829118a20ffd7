"""HTTP JSON service backing the mutation explorer.

Sessions live in memory and are cheap to rebuild: every response carries
the (quiver, tilting) pair needed to recreate the state elsewhere.  State
transitions are serialized per session; reads are lock-free.  Responses
are compact JSON with sorted keys, so identical request sequences produce
byte-identical bodies.
"""

from __future__ import annotations

import hashlib
import json
import re
import threading
from dataclasses import dataclass, field
from http.server import BaseHTTPRequestHandler, ThreadingHTTPServer
from pathlib import Path

from . import dotout, naming
from .category import ClusterCategory
from .cli import dumps, mutate_payload, run_verify
from .clustertilted import endo_presentation
from .errors import (
    ClusterTiltError,
    InternalError,
    UnknownObject,
    VerificationFailed,
    WindowTooSmall,
)
from .quiver import parse_quiver
from .tilting import TiltingObject, enumerate_tilting

_SESSION_RE = re.compile(r"^/api/session/([^/]+)/(ar|tilting|mutate|endo)$")
_VERIFY_RE = re.compile(r"^/api/verify/(theorem-a|theorem-b|corollary-count|apr)$")

_CONTENT_TYPES = {
    ".html": "text/html; charset=utf-8",
    ".js": "text/javascript; charset=utf-8",
    ".css": "text/css; charset=utf-8",
    ".json": "application/json",
    ".svg": "image/svg+xml",
    ".map": "application/json",
}


@dataclass
class Session:
    sid: str
    quiver_text: str
    cat: ClusterCategory
    current: TiltingObject
    history: list = field(default_factory=list)
    lock: threading.Lock = field(default_factory=threading.Lock)


class Api:
    def __init__(self):
        self.sessions: dict[str, Session] = {}
        self._lock = threading.Lock()
        self._counter = 0

    def _tilting_json(self, cat: ClusterCategory, t: TiltingObject) -> dict:
        ids = naming.object_ids(cat)
        return {"summands": [ids[z] for z in t.summands]}

    def create_session(self, quiver_text: str) -> dict:
        cat = ClusterCategory(parse_quiver(quiver_text))
        initial = TiltingObject(
            tuple(
                sorted(
                    (cat.region.proj_pos[v] for v in cat.q.vertices),
                    key=lambda z: cat.cluster.index[z],
                )
            )
        )
        with self._lock:
            self._counter += 1
            ordinal = self._counter
        digest = hashlib.sha1(quiver_text.strip().encode("utf-8")).hexdigest()[:8]
        sid = f"s{ordinal}-{digest}"
        self.sessions[sid] = Session(sid, quiver_text, cat, initial)
        ids = naming.object_ids(cat)
        return {
            "session": sid,
            "n": cat.n,
            "h": cat.h,
            "objects": len(cat.cluster.domain),
            "quiver": quiver_text,
            "tilting": self._tilting_json(cat, initial),
            "names": [naming.object_name(cat, z) for z in naming.object_list(cat)],
        }

    def session(self, sid: str) -> Session:
        s = self.sessions.get(sid)
        if s is None:
            raise UnknownObject(f"unknown session {sid!r}")
        return s

    def ar(self, sid: str, mode: str) -> dict:
        s = self.session(sid)
        tilting = s.current if mode == "gamma" else None
        view = dotout.ar_view(s.cat, mode, tilting)
        view["session"] = sid
        return view

    def tilting(self, sid: str) -> dict:
        s = self.session(sid)
        all_t = enumerate_tilting(s.cat)
        return {
            "session": sid,
            "current": self._tilting_json(s.cat, s.current),
            "count": len(all_t),
            "all": [self._tilting_json(s.cat, t) for t in all_t],
        }

    def endo(self, sid: str) -> dict:
        s = self.session(sid)
        payload = endo_presentation(s.cat, s.current).to_json()
        payload["session"] = sid
        payload["tilting"] = self._tilting_json(s.cat, s.current)
        return payload

    def mutate(self, sid: str, body: dict) -> dict:
        s = self.session(sid)
        if "at" not in body:
            raise ClusterTiltError("mutate body needs an 'at' field")
        with s.lock:
            expected = body.get("expect")
            current_ids = self._tilting_json(s.cat, s.current)["summands"]
            if expected is not None and list(expected) != current_ids:
                raise StaleTilting(
                    f"expected summands {expected} but session has {current_ids}"
                )
            payload = mutate_payload(s.cat, s.current, body["at"])
            ids = naming.object_ids(s.cat)
            by_id = {ids[z]: z for z in naming.object_list(s.cat)}
            s.current = TiltingObject(
                tuple(
                    sorted(
                        (by_id[i] for i in payload["tilting"]["summands"]),
                        key=lambda z: s.cat.cluster.index[z],
                    )
                )
            )
            s.history.append(payload["exchange"])
            payload["session"] = sid
            payload["history"] = len(s.history)
        return payload

    def verify(self, kind: str, body: dict) -> dict:
        if "quiver" not in body:
            raise ClusterTiltError("verify body needs a 'quiver' field")
        q = parse_quiver(body["quiver"])
        tbar = None
        if body.get("tbar") is not None:
            cat = ClusterCategory(q)
            summands = naming.resolve_many(cat, body["tbar"])
            tbar = tuple(sorted(set(summands), key=lambda z: cat.cluster.index[z]))
        try:
            line = run_verify(
                kind,
                q,
                tbar=tbar,
                samples=int(body.get("samples", 0)),
                seed=int(body.get("seed", 20240815)),
            )
        except VerificationFailed as exc:
            return {"pass": False, "report": str(exc)}
        return {"pass": True, "report": line}

    def snapshot(self) -> dict:
        return {
            sid: {
                "quiver": s.quiver_text,
                "tilting": self._tilting_json(s.cat, s.current)["summands"],
            }
            for sid, s in sorted(self.sessions.items())
        }


class StaleTilting(ClusterTiltError):
    pass


_STATUS_BY_ERROR = {
    "UnknownObject": 404,
    "StaleTilting": 409,
    "InternalError": 500,
}


def _status_for(exc: ClusterTiltError) -> int:
    return _STATUS_BY_ERROR.get(type(exc).__name__, 400)


class Handler(BaseHTTPRequestHandler):
    server_version = "cluster-tilt"
    protocol_version = "HTTP/1.1"

    def log_message(self, fmt, *args):  # quiet by default
        pass

    def _send_json(self, payload, status: int = 200):
        body = (dumps(payload) + "\n").encode("utf-8")
        self.send_response(status)
        self.send_header("Content-Type", "application/json")
        self.send_header("Content-Length", str(len(body)))
        self.send_header("Access-Control-Allow-Origin", "*")
        self.end_headers()
        self.wfile.write(body)

    def _send_error_json(self, exc: ClusterTiltError):
        self._send_json(
            {"error": type(exc).__name__, "message": str(exc)}, _status_for(exc)
        )

    def _read_body(self) -> dict:
        length = int(self.headers.get("Content-Length") or 0)
        raw = self.rfile.read(length) if length else b"{}"
        try:
            body = json.loads(raw.decode("utf-8") or "{}")
        except (ValueError, UnicodeDecodeError):
            raise ClusterTiltError("request body is not valid JSON")
        if not isinstance(body, dict):
            raise ClusterTiltError("request body must be a JSON object")
        return body

    def do_GET(self):
        try:
            path, _, query = self.path.partition("?")
            m = _SESSION_RE.match(path)
            if m and m.group(2) == "ar":
                mode = "C"
                for part in query.split("&"):
                    if part.startswith("mode="):
                        mode = part[len("mode=") :]
                return self._send_json(self.server.api.ar(m.group(1), mode))
            if m and m.group(2) == "tilting":
                return self._send_json(self.server.api.tilting(m.group(1)))
            if m and m.group(2) == "endo":
                return self._send_json(self.server.api.endo(m.group(1)))
            if path.startswith("/api/"):
                raise UnknownObject(f"no such endpoint {path}")
            return self._send_static(path)
        except ClusterTiltError as exc:
            self._send_error_json(exc)

    def do_POST(self):
        try:
            path = self.path.partition("?")[0]
            body = self._read_body()
            if path == "/api/session":
                if "quiver" not in body:
                    raise ClusterTiltError("session body needs a 'quiver' field")
                return self._send_json(self.server.api.create_session(body["quiver"]))
            m = _SESSION_RE.match(path)
            if m and m.group(2) == "mutate":
                return self._send_json(self.server.api.mutate(m.group(1), body))
            m = _VERIFY_RE.match(path)
            if m:
                return self._send_json(self.server.api.verify(m.group(1), body))
            raise UnknownObject(f"no such endpoint {path}")
        except ClusterTiltError as exc:
            self._send_error_json(exc)

    def _send_static(self, path: str):
        root = self.server.static_dir
        if root is None:
            raise UnknownObject("no static assets configured")
        rel = path.lstrip("/") or "index.html"
        target = (root / rel).resolve()
        if root not in target.parents and target != root:
            raise UnknownObject("path outside static root")
        if target.is_dir():
            target = target / "index.html"
        if not target.is_file():
            raise UnknownObject(f"no such file {path}")
        data = target.read_bytes()
        self.send_response(200)
        ctype = _CONTENT_TYPES.get(target.suffix, "application/octet-stream")
        self.send_header("Content-Type", ctype)
        self.send_header("Content-Length", str(len(data)))
        self.end_headers()
        self.wfile.write(data)


class ApiServer(ThreadingHTTPServer):
    daemon_threads = True

    def __init__(self, address, static_dir: str | None = None):
        super().__init__(address, Handler)
        self.api = Api()
        self.static_dir = Path(static_dir).resolve() if static_dir else None


def make_server(
    host: str = "127.0.0.1", port: int = 0, static_dir: str | None = None
) -> ApiServer:
    return ApiServer((host, port), static_dir=static_dir)


def serve(
    host: str = "127.0.0.1",
    port: int = 8642,
    static_dir: str | None = None,
    snapshot: str | None = None,
):
    httpd = make_server(host, port, static_dir)
    try:
        httpd.serve_forever()
    except KeyboardInterrupt:
        pass
    finally:
        if snapshot:
            with open(snapshot, "w", encoding="utf-8") as fh:
                fh.write(dumps(httpd.api.snapshot()) + "\n")
        httpd.server_close()
