"""Command-line client.

Every request goes through the HTTP API: against a remote server when
--server is given, otherwise against an in-process instance of the service.
Exit codes: 0 sat/true, 1 unsat/false, 2 error, 3 budget exceeded.
"""

from __future__ import annotations

import argparse
import asyncio
import json
import sys
from typing import Optional

import httpx

from . import __version__


def _post(path: str, payload: dict, server: Optional[str]) -> dict:
    if server:
        response = httpx.post(server.rstrip("/") + path, json=payload, timeout=None)
        response.raise_for_status()
        return response.json()

    from .service import create_app

    async def go() -> dict:
        transport = httpx.ASGITransport(app=create_app())
        async with httpx.AsyncClient(transport=transport, base_url="http://solver") as client:
            response = await client.post(path, json=payload, timeout=None)
            response.raise_for_status()
            return response.json()

    return asyncio.run(go())


def _solve_options(args) -> dict:
    options = {
        "operator": args.operator,
        "mode": args.mode,
        "product_ec": args.product_ec,
        "cell_cap": args.cell_cap,
        "model_digits": args.model_digits,
        "stats": args.stats,
    }
    if args.order:
        options["order"] = [name.strip() for name in args.order.split(",") if name.strip()]
    if args.time_cap is not None:
        options["time_cap_s"] = args.time_cap
    return options


def cmd_solve(args) -> int:
    if args.file == "-":
        text = sys.stdin.read()
    else:
        try:
            with open(args.file, "r", encoding="utf-8") as handle:
                text = handle.read()
        except OSError as e:
            print(f"error: {e}", file=sys.stderr)
            return 2
    payload = {"script": text, "options": _solve_options(args)}
    response = _post("/solve", payload, args.server)
    for result in response["results"]:
        if args.json:
            print(json.dumps(result["data"], sort_keys=True))
        else:
            if result["kind"] == "error":
                print(result["text"], file=sys.stderr)
            elif result["text"]:
                print(result["text"])
    return response["exit_code"]


def cmd_bench(args) -> int:
    constraints = [int(n) for n in args.constraints.split(",") if n.strip()]
    payload = {
        "vars": args.vars,
        "degree": args.degree,
        "constraints": constraints,
        "ecs": args.ecs,
        "seeds": args.seeds,
        "operators": [op.strip() for op in args.operators.split(",") if op.strip()],
        "cells": not args.no_cells,
        "times": args.times,
    }
    response = _post("/bench", payload, args.server)
    if args.json:
        print(json.dumps(response["rows"], sort_keys=True))
    else:
        print(response["table"], end="")
    return 0


def cmd_serve(args) -> int:
    import uvicorn

    from .service import app

    uvicorn.run(app, host=args.host, port=args.port, log_level="info")
    return 0


def build_arg_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="realcad",
        description="Exact decision procedure for polynomial constraints over the reals",
    )
    parser.add_argument("--version", action="version", version=f"realcad {__version__}")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    solve = sub.add_parser("solve", help="run a script file ('-' for stdin)")
    solve.add_argument("file", nargs="?", default="-")
    solve.add_argument("--operator", choices=["collins", "mccallum", "ec-reduced"],
                       default="ec-reduced")
    solve.add_argument("--order", help="comma-separated variable order", default=None)
    solve.add_argument("--mode", choices=["auto", "sat", "decide"], default="auto")
    solve.add_argument("--stats", action="store_true")
    solve.add_argument("--json", action="store_true",
                       help="one structured document per command")
    solve.add_argument("--cell-cap", type=int, default=10 ** 6)
    solve.add_argument("--time-cap", type=float, default=None, metavar="SEC")
    solve.add_argument("--product-ec", action="store_true",
                       help="allow the product rewrite for disjunctions of equations")
    solve.add_argument("--model-digits", type=int, default=6)
    solve.add_argument("--server", default=None, metavar="URL")
    solve.set_defaults(func=cmd_solve)

    bench = sub.add_parser("bench", help="operator comparison on seeded families")
    bench.add_argument("--vars", type=int, default=2)
    bench.add_argument("--degree", type=int, default=2)
    bench.add_argument("--constraints", default="3,4,5",
                       help="comma-separated constraint counts")
    bench.add_argument("--ecs", type=int, default=1)
    bench.add_argument("--seeds", type=int, default=5, help="seeds 0..N-1 per count")
    bench.add_argument("--operators", default="mccallum,ec-reduced")
    bench.add_argument("--no-cells", action="store_true",
                       help="projection counts only (skip lifting)")
    bench.add_argument("--times", action="store_true",
                       help="include wall times (breaks byte-determinism)")
    bench.add_argument("--json", action="store_true")
    bench.add_argument("--server", default=None, metavar="URL")
    bench.set_defaults(func=cmd_bench)

    serve = sub.add_parser("serve", help="run the HTTP service")
    serve.add_argument("--host", default="127.0.0.1")
    serve.add_argument("--port", type=int, default=8000)
    serve.set_defaults(func=cmd_serve)
    return parser


def main(argv: Optional[list] = None) -> int:
    args = build_arg_parser().parse_args(argv)
    try:
        return args.func(args)
    except httpx.HTTPError as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
