"""HTTP service: one POST endpoint per engine command.

Endpoints never keep state; each request carries its own instance
description.  The response body is always the uniform report payload
(see reports.py).  Engine errors map to HTTP 400 with status "error";
a check suite that finds violations answers 200 with status
"check-failed" so transport success and mathematical failure stay
distinguishable.
"""

from __future__ import annotations

import random
from typing import Callable, Optional

from fastapi import FastAPI
from fastapi.responses import JSONResponse

from .. import automorphisms as aut
from .. import checks as checks_mod
from ..errors import DomainError, EngineError
from ..expressions import (
    format_automorphism,
    format_element,
    format_vector,
    format_word,
    parse_automorphism,
    parse_element,
    parse_lie,
    parse_vector,
)
from ..groups import GroupPresentation, as_rational, iso_scale
from ..lie import LieElement, bracket
from ..reports import (
    error_result,
    instance_payload,
    make_report,
    module_payload,
    rat,
    table,
)
from ..verma import (
    Truncation,
    count_L_partitions,
    monomial_vector,
    reduce_to_highest,
    singular_vectors,
    weight_basis,
)
from . import schemas as sch

_CHECK_DEFAULTS = {
    "jacobi": (5, 500),
    "ideal": (5, 500),
    "rewrite": (3, 300),
    "vanishing": (3, 300),
    "filtration": (3, 300),
    "relations": (4, 200),
}


def _positive_depth(gp: GroupPresentation, raw: str, what: str):
    value = as_rational(raw)
    if value <= 0:
        raise DomainError(f"{what} must be positive, got {raw}")
    return value


def _depths_up_to(gp: GroupPresentation, bound, trunc: Optional[Truncation]):
    caps = trunc.caps if trunc is not None else None
    return gp.positive_values(bound, caps)


def _mono_word(gp, hw, mono) -> str:
    return format_vector(monomial_vector(gp, hw, mono.lparts, mono.mparts, mono.yparts))


def create_app() -> FastAPI:
    from .. import __version__

    app = FastAPI(title="exact graded Lie algebra engine", version=__version__)

    def run(
        command: str,
        instance: sch.InstanceSpec,
        worker: Callable[[GroupPresentation], tuple[dict, str]],
    ) -> JSONResponse:
        try:
            gp = instance.to_group()
        except EngineError as exc:
            return JSONResponse(
                status_code=400,
                content=make_report(command, None, error_result(exc), "error"),
            )
        try:
            result, status = worker(gp)
        except EngineError as exc:
            return JSONResponse(
                status_code=400,
                content=make_report(
                    command, instance_payload(gp), error_result(exc), "error"
                ),
            )
        return JSONResponse(
            content=make_report(command, instance_payload(gp), result, status)
        )

    @app.get("/")
    def root() -> dict:
        return {"service": app.title, "version": app.version}

    @app.post("/bracket")
    def do_bracket(req: sch.BracketRequest) -> JSONResponse:
        def worker(gp):
            left = parse_lie(req.left, gp)
            right = parse_lie(req.right, gp)
            return {"value": format_element(bracket(left, right))}, "ok"

        return run("bracket", req.instance, worker)

    @app.post("/act")
    def do_act(req: sch.ActRequest) -> JSONResponse:
        def worker(gp):
            hw = req.module.to_hw()
            vec = parse_vector(req.expr, gp, hw)
            result = {
                "module": module_payload(hw),
                "value": format_vector(vec),
                "depths": [rat(d) for d in vec.depths()],
            }
            return result, "ok"

        return run("act", req.instance, worker)

    @app.post("/weights")
    def do_weights(req: sch.WeightsRequest) -> JSONResponse:
        def worker(gp):
            hw = req.module.to_hw()
            trunc = req.trunc.to_trunc() if req.trunc else None
            depth = _positive_depth(gp, req.depth, "depth")
            basis = weight_basis(depth, hw, gp, trunc)
            words = [_mono_word(gp, hw, mono) for mono in basis]
            result = {
                "module": module_payload(hw),
                "depth": rat(depth),
                "dimension": len(basis),
                "weight": rat(hw.h - depth),
                "basis": words,
                "table": table(
                    ["depth", "index", "monomial"],
                    [[rat(depth), i, w] for i, w in enumerate(words)],
                ),
            }
            return result, "ok"

        return run("weights", req.instance, worker)

    @app.post("/singular")
    def do_singular(req: sch.SingularRequest) -> JSONResponse:
        def worker(gp):
            hw = req.module.to_hw()
            trunc = req.trunc.to_trunc() if req.trunc else None
            bound = _positive_depth(gp, req.max_depth, "max_depth")
            by_depth = []
            rows = []
            total = 0
            for depth in _depths_up_to(gp, bound, trunc):
                vecs = singular_vectors(depth, hw, gp, trunc)
                formatted = [format_vector(v) for v in vecs]
                total += len(vecs)
                by_depth.append(
                    {
                        "depth": rat(depth),
                        "dimension": len(vecs),
                        "vectors": formatted,
                    }
                )
                rows += [[rat(depth), i, s] for i, s in enumerate(formatted)]
            result = {
                "module": module_payload(hw),
                "max_depth": rat(bound),
                "total": total,
                "by_depth": by_depth,
                "table": table(["depth", "index", "vector"], rows),
            }
            return result, "ok"

        return run("singular", req.instance, worker)

    @app.post("/reduce")
    def do_reduce(req: sch.ReduceRequest) -> JSONResponse:
        def worker(gp):
            hw = req.module.to_hw()
            vec = parse_vector(req.vector, gp, hw)
            witness = reduce_to_highest(vec)
            result = {
                "module": module_payload(hw),
                "word": format_word(witness.word),
                "scalar": rat(witness.scalar),
                "length": len(witness.word),
            }
            return result, "ok"

        return run("reduce", req.instance, worker)

    @app.post("/iso")
    def do_iso(req: sch.IsoRequest) -> JSONResponse:
        def worker(gp):
            other = req.other.to_group()
            a = iso_scale(gp, other)
            result = {
                "other": {
                    "g": rat(other.g),
                    "primes": sorted(other.primes),
                    "m": other.m,
                    "order": other.direction.value,
                },
                "a": None if a is None else rat(a),
                "isomorphic": a is not None,
            }
            if a is not None:
                iso = aut.build_isomorphism(gp, other)
                window = _positive_depth(gp, req.window, "window")
                syms = checks_mod.window_symbols(gp, window)
                singles = [LieElement(gp, {s: as_rational(1)}) for s in syms]
                pairs = [(x, y) for x in singles for y in singles]
                bad = aut.hom_residual(iso.apply, pairs)
                result["window"] = rat(window)
                result["residual_empty"] = not bad
            return result, "ok"

        return run("iso", req.instance, worker)

    @app.post("/aut/apply")
    def do_aut_apply(req: sch.AutApplyRequest) -> JSONResponse:
        def worker(gp):
            theta = parse_automorphism(req.automorphism, gp)
            element = parse_lie(req.element, gp)
            result = {
                "automorphism": format_automorphism(theta),
                "value": format_element(theta.apply(element)),
            }
            return result, "ok"

        return run("aut apply", req.instance, worker)

    @app.post("/aut/residual")
    def do_aut_residual(req: sch.AutResidualRequest) -> JSONResponse:
        def worker(gp):
            theta = parse_automorphism(req.automorphism, gp)
            window = _positive_depth(gp, req.window, "window")
            if req.pairs is not None:
                pairs = [
                    (parse_lie(x, gp), parse_lie(y, gp)) for x, y in req.pairs
                ]
            else:
                rng = random.Random(req.seed)
                caps = {p: 2 for p in gp.primes} or None
                pairs = [
                    (
                        checks_mod.sample_element(rng, gp, window, caps),
                        checks_mod.sample_element(rng, gp, window, caps),
                    )
                    for _ in range(req.samples)
                ]
            bad = aut.hom_residual(theta, pairs)
            result = {
                "automorphism": format_automorphism(theta),
                "pairs": len(pairs),
                "violations": [
                    {
                        "x": format_element(x),
                        "y": format_element(y),
                        "residual": format_element(res),
                    }
                    for (x, y), res in bad
                ],
                "empty": not bad,
            }
            return result, "ok"

        return run("aut residual", req.instance, worker)

    @app.post("/aut/compose")
    def do_aut_compose(req: sch.AutComposeRequest) -> JSONResponse:
        def worker(gp):
            theta = parse_automorphism(req.automorphism, gp)
            merged = aut.compose(aut.identity(gp), theta)
            result = {
                "automorphism": format_automorphism(merged),
                "chain_length": len(merged.chain),
            }
            return result, "ok"

        return run("aut compose", req.instance, worker)

    @app.post("/check/{suite}")
    def do_check(suite: str, req: sch.CheckRequest) -> JSONResponse:
        def worker(gp):
            if suite not in checks_mod.SUITES:
                known = ", ".join(sorted(checks_mod.SUITES))
                raise DomainError(f"unknown check suite {suite!r} (known: {known})")
            hw = req.module.to_hw()
            trunc = req.trunc.to_trunc() if req.trunc else None
            default_window, default_samples = _CHECK_DEFAULTS[suite]
            window = _positive_depth(
                gp,
                req.window if req.window is not None else str(default_window),
                "window",
            )
            samples = req.samples if req.samples is not None else default_samples
            report = checks_mod.SUITES[suite](
                gp, hw, window=window, samples=samples, seed=req.seed, trunc=trunc
            )
            result = report.as_dict()
            result["window"] = rat(window)
            result["samples"] = samples
            result["seed"] = req.seed
            return result, ("ok" if report.passed else "check-failed")

        return run(f"check {suite}", req.instance, worker)

    @app.post("/partitions")
    def do_partitions(req: sch.PartitionsRequest) -> JSONResponse:
        def worker(gp):
            trunc = req.trunc.to_trunc() if req.trunc else None
            bound = _positive_depth(gp, req.depth, "depth")
            rows = []
            counts = []
            for depth in _depths_up_to(gp, bound, trunc):
                n = count_L_partitions(depth, gp, trunc)
                counts.append({"depth": rat(depth), "count": n})
                rows.append([rat(depth), n])
            result = {
                "max_depth": rat(bound),
                "counts": counts,
                "table": table(["depth", "count"], rows),
            }
            return result, "ok"

        return run("partitions", req.instance, worker)

    return app
