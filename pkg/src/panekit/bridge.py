"""Line-delimited TCP bridge exposing a live replay session.

Clients send trace records, one JSON object per line; after every record
the server replies with any output events (same serialization as the
events file) followed by a ``{"snapshot": ...}`` line. All connections
share one session; a lock serializes records, so concurrent clients are
queued and never interleaved mid-record.

Unlike file replay, a live session is lenient: malformed lines and clock
regressions come back as ``error`` events instead of killing the session.
"""

from __future__ import annotations

import json
import socketserver
import threading

from .errors import EngineError
from .geom import DisplayBounds
from .trace import DEFAULT_DISPLAY, ReplaySession, parse_record


class BridgeServer(socketserver.ThreadingTCPServer):
    allow_reuse_address = True
    daemon_threads = True

    def __init__(self, address: tuple[str, int], display: DisplayBounds = DEFAULT_DISPLAY):
        super().__init__(address, _BridgeHandler)
        self.session = ReplaySession(display=display)
        self.session_lock = threading.Lock()
        self.lines_seen = 0


class _BridgeHandler(socketserver.StreamRequestHandler):
    server: BridgeServer

    def handle(self) -> None:
        while True:
            raw = self.rfile.readline()
            if not raw:
                return
            line = raw.decode("utf-8", errors="replace").strip()
            if not line:
                continue
            with self.server.session_lock:
                self.server.lines_seen += 1
                responses = self._apply_line(line, self.server.lines_seen)
            out = "".join(r + "\n" for r in responses)
            self.wfile.write(out.encode("utf-8"))

    def _apply_line(self, line: str, line_no: int) -> list[str]:
        session = self.server.session
        try:
            record = parse_record(line, line_no)
            events, _ = session.apply(record)
        except EngineError as exc:
            error = {
                "t": session.desktop.clock,
                "event": "error",
                "line": line_no,
                "error": exc.kind,
                "detail": str(exc),
            }
            events = [json.dumps(error, separators=(",", ":"))]
        return events + [f'{{"snapshot":{session.snapshot_line()}}}']


def serve(host: str, port: int, display: DisplayBounds = DEFAULT_DISPLAY) -> BridgeServer:
    """Create a bridge server; caller runs ``serve_forever`` (or a thread)."""
    return BridgeServer((host, port), display=display)
