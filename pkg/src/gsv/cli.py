"""Command-line front end.

The CLI is a thin client over the HTTP service: it validates the run
configuration locally, builds a request, and renders the service's
report payload.  By default the service runs in-process (no socket);
``--server URL`` targets a remote instance, and ``serve`` starts one.

Exit codes: 0 success, 1 usage or configuration problems, 2 domain
errors (bad expressions, indices outside the instance, csv for a
non-tabular command, transport failures), 3 when a check suite finds
a violation.
"""

from __future__ import annotations

import argparse
import asyncio
import sys
from typing import Optional

import httpx

from .config import RunConfig, default_config, load_config
from .errors import DomainError, EngineError, UsageError
from .reports import render, render_text

_FORMATS = ("text", "json", "csv")
_SUITES = ("jacobi", "ideal", "rewrite", "vanishing", "filtration", "relations")


class _ArgumentParser(argparse.ArgumentParser):
    """argparse exits with code 2 on bad usage; the contract here is 1."""

    def error(self, message: str):
        raise UsageError(f"{self.prog}: {message}")


def _add_global_flags(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--config", metavar="PATH", help="run configuration file")
    parser.add_argument(
        "--format", choices=_FORMATS, default=None, help="report rendering"
    )
    parser.add_argument(
        "--seed", type=int, default=None, help="seed for sampled checks"
    )
    parser.add_argument(
        "--server", metavar="URL", default=None, help="remote service URL"
    )


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(
        prog="gsv",
        description="Exact computer algebra for graded L/M/Y Lie algebras.",
    )
    _add_global_flags(parser)
    sub = parser.add_subparsers(dest="command", metavar="COMMAND")

    p = sub.add_parser("bracket", help="bracket of two algebra elements")
    p.add_argument("left")
    p.add_argument("right")

    p = sub.add_parser("act", help="evaluate a module expression to normal form")
    p.add_argument("expr")

    p = sub.add_parser("weights", help="weight-space basis at a depth")
    p.add_argument("--depth", required=True)

    p = sub.add_parser("singular", help="singular vectors up to a depth")
    p.add_argument("--max-depth", required=True, dest="max_depth")

    p = sub.add_parser("reduce", help="raise a vector back to the highest weight")
    p.add_argument("vector")

    p = sub.add_parser("iso", help="scale isomorphism against another instance")
    p.add_argument("--other", required=True, metavar="PATH")
    p.add_argument("--window", default="3")

    p = sub.add_parser("aut", help="automorphism operations")
    aut_sub = p.add_subparsers(dest="aut_command", metavar="ACTION")
    q = aut_sub.add_parser("apply", help="apply an automorphism literal")
    q.add_argument("automorphism")
    q.add_argument("element")
    q = aut_sub.add_parser("residual", help="homomorphism residual on sampled pairs")
    q.add_argument("automorphism")
    q.add_argument("--window", default="3")
    q.add_argument("--samples", type=int, default=50)
    q = aut_sub.add_parser("compose", help="compose and merge automorphism literals")
    q.add_argument("literals", nargs="+")

    p = sub.add_parser("check", help="run an invariant suite")
    p.add_argument("suite", choices=_SUITES)
    p.add_argument("--window", default=None)
    p.add_argument("--samples", type=int, default=None)

    p = sub.add_parser("partitions", help="L-partition counts by depth")
    p.add_argument("--depth", required=True)

    p = sub.add_parser("serve", help="start the HTTP service")
    p.add_argument("--host", default="127.0.0.1")
    p.add_argument("--port", type=int, default=8000)

    return parser


def _instance_payload(cfg: RunConfig) -> dict:
    return {
        "g": str(cfg.group.g),
        "primes": sorted(cfg.group.primes),
        "m": cfg.group.m,
        "order": cfg.group.direction.value,
    }


def _module_payload(cfg: RunConfig) -> dict:
    return {"c": str(cfg.hw.c), "h": str(cfg.hw.h)}


def _trunc_payload(cfg: RunConfig) -> Optional[dict]:
    if cfg.trunc is None:
        return None
    return {
        "max_depth": str(cfg.trunc.max_depth),
        "lattice": {str(p): e for p, e in sorted(cfg.trunc.caps.items())},
    }


def _build_request(args, cfg: RunConfig, seed: int) -> tuple[str, dict]:
    instance = _instance_payload(cfg)
    module = _module_payload(cfg)
    trunc = _trunc_payload(cfg)

    def with_trunc(payload: dict) -> dict:
        if trunc is not None:
            payload["trunc"] = trunc
        return payload

    if args.command == "bracket":
        return "/bracket", {"instance": instance, "left": args.left, "right": args.right}
    if args.command == "act":
        return "/act", {"instance": instance, "module": module, "expr": args.expr}
    if args.command == "weights":
        return "/weights", with_trunc(
            {"instance": instance, "module": module, "depth": args.depth}
        )
    if args.command == "singular":
        return "/singular", with_trunc(
            {"instance": instance, "module": module, "max_depth": args.max_depth}
        )
    if args.command == "reduce":
        return "/reduce", {"instance": instance, "module": module, "vector": args.vector}
    if args.command == "iso":
        other_cfg = load_config(args.other)
        return "/iso", {
            "instance": instance,
            "other": _instance_payload(other_cfg),
            "window": args.window,
        }
    if args.command == "aut":
        if args.aut_command == "apply":
            return "/aut/apply", {
                "instance": instance,
                "automorphism": args.automorphism,
                "element": args.element,
            }
        if args.aut_command == "residual":
            return "/aut/residual", {
                "instance": instance,
                "automorphism": args.automorphism,
                "window": args.window,
                "samples": args.samples,
                "seed": seed,
            }
        if args.aut_command == "compose":
            return "/aut/compose", {
                "instance": instance,
                "automorphism": "*".join(args.literals),
            }
        raise UsageError("aut requires an action: apply, residual, or compose")
    if args.command == "check":
        payload = with_trunc({"instance": instance, "module": module, "seed": seed})
        if args.window is not None:
            payload["window"] = args.window
        if args.samples is not None:
            payload["samples"] = args.samples
        return f"/check/{args.suite}", payload
    if args.command == "partitions":
        return "/partitions", with_trunc({"instance": instance, "depth": args.depth})
    raise UsageError(f"unknown command {args.command!r}")


def _post_in_process(path: str, payload: dict) -> httpx.Response:
    from .service import create_app

    app = create_app()

    async def go() -> httpx.Response:
        transport = httpx.ASGITransport(app=app)
        async with httpx.AsyncClient(
            transport=transport, base_url="http://engine"
        ) as client:
            return await client.post(path, json=payload)

    return asyncio.run(go())


def _post_remote(server: str, path: str, payload: dict) -> httpx.Response:
    with httpx.Client(base_url=server, timeout=120.0) as client:
        return client.post(path, json=payload)


def _emit(report: dict, fmt: str) -> int:
    status = report.get("status")
    result = report.get("result")
    if status == "ok":
        code = 0
    elif status == "check-failed":
        code = 3
    else:
        category = result.get("category") if isinstance(result, dict) else "domain"
        code = 1 if category == "usage" else 2
    if status == "error" and fmt == "csv":
        sys.stderr.write(render_text(report))
        return code
    try:
        rendered = render(report, fmt)
    except DomainError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 2
    sys.stdout.write(rendered)
    if status == "error" and isinstance(result, dict):
        sys.stderr.write(f"error: {result['kind']}: {result['message']}\n")
    return code


def main(argv: Optional[list[str]] = None) -> int:
    if argv is None:
        argv = sys.argv[1:]
    try:
        # Global flags are accepted anywhere on the line, so extract them
        # first; the command parser then sees only the remaining tokens.
        globals_parser = _ArgumentParser(prog="gsv", add_help=False)
        _add_global_flags(globals_parser)
        gargs, rest = globals_parser.parse_known_args(argv)
        args = _build_parser().parse_args(rest)
        args.config = gargs.config
        args.format = gargs.format or "text"
        args.seed = gargs.seed
        args.server = gargs.server
        if args.command is None:
            raise UsageError("a command is required; see gsv --help")
        cfg = load_config(args.config) if args.config else default_config()
        seed = args.seed if args.seed is not None else cfg.seed

        if args.command == "serve":
            import uvicorn

            from .service import create_app

            uvicorn.run(create_app(), host=args.host, port=args.port)
            return 0

        path, payload = _build_request(args, cfg, seed)
        try:
            if args.server:
                response = _post_remote(args.server, path, payload)
            else:
                response = _post_in_process(path, payload)
            report = response.json()
        except httpx.HTTPError as exc:
            sys.stderr.write(f"error: transport failure: {exc}\n")
            return 2
        except ValueError:
            sys.stderr.write("error: server returned a non-JSON response\n")
            return 2
        if not isinstance(report, dict) or "status" not in report:
            sys.stderr.write("error: server returned an unexpected payload\n")
            return 2
        return _emit(report, args.format)
    except UsageError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1
    except EngineError as exc:
        sys.stderr.write(f"error: {exc}\n")
        return 1 if exc.category == "usage" else 2


def entrypoint() -> None:
    raise SystemExit(main(sys.argv[1:]))


if __name__ == "__main__":
    entrypoint()
