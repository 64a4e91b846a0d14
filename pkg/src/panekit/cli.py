"""The ``wmsim`` command line: replay traces, verify goldens, serve the bridge."""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .bridge import serve
from .errors import EngineError
from .geom import DisplayBounds
from .trace import replay, verify

SNAPSHOTS_FILE = "snapshots.txt"
EVENTS_FILE = "events.txt"


def _write_lines(path: Path, lines: list[str]) -> None:
    path.write_text("".join(line + "\n" for line in lines), encoding="utf-8")


def _read_lines(path: Path) -> list[str]:
    return [line for line in path.read_text(encoding="utf-8").splitlines() if line]


def _parse_display(value: str) -> DisplayBounds:
    try:
        w, h = value.lower().split("x")
        return DisplayBounds(int(w), int(h))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"expected WxH, got {value!r}") from exc


def cmd_replay(args: argparse.Namespace) -> int:
    trace_path = Path(args.trace)
    out_dir = Path(args.out)
    out_dir.mkdir(parents=True, exist_ok=True)
    with trace_path.open(encoding="utf-8") as fh:
        result = replay(fh, display=args.display)
    _write_lines(out_dir / SNAPSHOTS_FILE, result.snapshots)
    _write_lines(out_dir / EVENTS_FILE, result.events)
    print(
        f"replayed {trace_path}: {len(result.snapshots)} snapshots, "
        f"{len(result.events)} events -> {out_dir}"
    )
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    golden = _read_lines(Path(args.golden) / SNAPSHOTS_FILE)
    with Path(args.trace).open(encoding="utf-8") as fh:
        report = verify(fh, golden)
    print(("PASS: " if report.ok else "FAIL: ") + report.message)
    return 0 if report.ok else 1


def cmd_serve(args: argparse.Namespace) -> int:
    server = serve(args.host, args.port, display=args.display)
    host, port = server.server_address[:2]
    print(f"bridge listening on {host}:{port}")
    try:
        server.serve_forever()
    except KeyboardInterrupt:
        print("shutting down")
    finally:
        server.server_close()
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="wmsim", description="Window-management policy engine trace tool"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_replay = sub.add_parser("replay", help="replay a trace to snapshot/event files")
    p_replay.add_argument("--trace", required=True, help="trace file to replay")
    p_replay.add_argument("--out", required=True, help="output directory")
    p_replay.add_argument(
        "--display", type=_parse_display, default=DisplayBounds(800, 600),
        help="initial display bounds as WxH (default 800x600)",
    )
    p_replay.set_defaults(func=cmd_replay)

    p_verify = sub.add_parser("verify", help="verify a trace against golden snapshots")
    p_verify.add_argument("--trace", required=True, help="trace file to replay")
    p_verify.add_argument("--golden", required=True, help="directory with snapshots.txt")
    p_verify.set_defaults(func=cmd_verify)

    p_serve = sub.add_parser("serve", help="serve a live session for the playground UI")
    p_serve.add_argument("--port", type=int, required=True)
    p_serve.add_argument("--host", default="127.0.0.1")
    p_serve.add_argument(
        "--display", type=_parse_display, default=DisplayBounds(800, 600),
        help="initial display bounds as WxH (default 800x600)",
    )
    p_serve.set_defaults(func=cmd_serve)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except EngineError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
