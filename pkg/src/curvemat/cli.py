"""Command-line front: a thin client over the same handlers as the service.

Reads a JSON payload (--input file, --json literal, or flags), dispatches,
prints the report, and exits 0 when every check passed, 1 on a failed
verification, 2 on malformed input.
"""

from __future__ import annotations

import argparse
import json
import sys

from .serialization import InputError
from .service import HANDLERS, run_command

PAYLOAD_COMMANDS = sorted(HANDLERS)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curvemat",
        description="Exact checks for curve models, point schemes, splitting types and real signatures.",
    )
    sub = parser.add_subparsers(dest="command", required=True)
    for name in PAYLOAD_COMMANDS:
        p = sub.add_parser(name, help=f"run the {name} check")
        p.add_argument("--input", help="path to a JSON payload")
        p.add_argument("--json", dest="inline", help="inline JSON payload")
        p.add_argument("--output", help="write the report to this path")
        p.add_argument("--seed", type=int, default=0, help="seed echoed into the report")
        p.add_argument("--timing", action="store_true", help="include timing in the report")
        if name == "signature":
            p.add_argument("--d", type=int, help="degree of the family")
        if name == "obstruction":
            p.add_argument("--m", help="inline multiplicity table, e.g. '{\"1\": 2}'")
    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    return parser


def _load_payload(args) -> dict:
    payload: dict = {}
    if getattr(args, "input", None):
        with open(args.input, "r", encoding="utf-8") as fh:
            payload = json.load(fh)
    if getattr(args, "inline", None):
        payload = json.loads(args.inline)
    if not isinstance(payload, dict):
        raise InputError("$", "payload must be a JSON object")
    if getattr(args, "d", None) is not None:
        payload["d"] = args.d
    if getattr(args, "m", None) is not None:
        payload["m"] = json.loads(args.m)
    return payload


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if args.command == "serve":
        import uvicorn

        from .service import app

        uvicorn.run(app, host=args.host, port=args.port)
        return 0
    try:
        payload = _load_payload(args)
    except (OSError, json.JSONDecodeError) as exc:
        print(json.dumps({"error": f"unreadable payload: {exc}"}), file=sys.stderr)
        return 2
    except InputError as exc:
        print(json.dumps({"error": exc.message, "path": exc.path}), file=sys.stderr)
        return 2
    try:
        report = run_command(args.command, payload, seed=args.seed, timing=args.timing)
    except InputError as exc:
        print(json.dumps({"error": exc.message, "path": exc.path}), file=sys.stderr)
        return 2
    text = json.dumps(report, indent=2, sort_keys=True)
    if args.output:
        with open(args.output, "w", encoding="utf-8") as fh:
            fh.write(text + "\n")
    else:
        print(text)
    return 0 if report["ok"] else 1


if __name__ == "__main__":
    sys.exit(main())
