"""Uniform report payloads and deterministic renderers.

Every command — via the CLI or the HTTP service — produces the same
JSON-serializable payload shape:

    {"command": ..., "instance": {g, primes, m, order},
     "result": ..., "status": "ok" | "error" | "check-failed"}

All scalars inside ``result`` are exact ``p/q`` strings or integers;
nothing is ever rendered in floating point.  Rendering a payload twice
yields byte-identical output in every format.

Tabular results additionally carry a ``table`` entry
(``{"columns": [...], "rows": [[...], ...]}``): the CSV renderer uses
only that entry, the text renderer skips it, and JSON keeps everything.
"""

from __future__ import annotations

import csv
import io
import json
from fractions import Fraction
from typing import Any, Optional

from .errors import DomainError, EngineError
from .groups import GroupPresentation
from .verma import HighestWeight


def rat(value) -> str:
    return str(Fraction(value))


def instance_payload(gp: GroupPresentation) -> dict:
    return {
        "g": rat(gp.g),
        "primes": sorted(gp.primes),
        "m": gp.m,
        "order": gp.direction.value,
    }


def module_payload(hw: HighestWeight) -> dict:
    return {"c": rat(hw.c), "h": rat(hw.h)}


def make_report(
    command: str,
    instance: Optional[dict],
    result: Any,
    status: str = "ok",
) -> dict:
    return {
        "command": command,
        "instance": instance or {},
        "result": result,
        "status": status,
    }


def error_result(exc: EngineError) -> dict:
    return {"kind": exc.kind, "message": str(exc), "category": exc.category}


def table(columns: list[str], rows: list[list]) -> dict:
    return {"columns": list(columns), "rows": [list(r) for r in rows]}


# ---------------------------------------------------------------- render


def render_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=True) + "\n"


def _scalar_text(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "null"
    return str(value)


def _text_block(key: str, value, indent: int) -> list[str]:
    pad = "  " * indent
    if isinstance(value, dict):
        if not value:
            return [f"{pad}{key}: {{}}"]
        lines = [f"{pad}{key}:"]
        for k, v in value.items():
            if k == "table":
                continue
            lines += _text_block(k, v, indent + 1)
        return lines
    if isinstance(value, list):
        if not value:
            return [f"{pad}{key}: []"]
        if all(not isinstance(v, (dict, list)) for v in value):
            joined = ", ".join(_scalar_text(v) for v in value)
            return [f"{pad}{key}: [{joined}]"]
        lines = [f"{pad}{key}:"]
        for v in value:
            if isinstance(v, (dict, list)):
                lines += _text_block("-", v, indent + 1)
            else:
                lines.append(f"{pad}  - {_scalar_text(v)}")
        return lines
    return [f"{pad}{key}: {_scalar_text(value)}"]


def render_text(report: dict) -> str:
    inst = report.get("instance") or {}
    lines = [f"command: {report['command']}"]
    if inst:
        primes = ",".join(str(p) for p in inst["primes"]) or "-"
        lines.append(
            f"instance: g={inst['g']} primes={primes} m={inst['m']} "
            f"order={inst['order']}"
        )
    lines.append(f"status: {report['status']}")
    lines += _text_block("result", report["result"], 0)
    return "\n".join(lines) + "\n"


def render_csv(report: dict) -> str:
    result = report.get("result")
    tab = result.get("table") if isinstance(result, dict) else None
    if not tab:
        raise DomainError(
            f"csv output is not available for command {report['command']!r}; "
            "use --format text or json"
        )
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(tab["columns"])
    for row in tab["rows"]:
        writer.writerow(row)
    return buf.getvalue()


_RENDERERS = {"text": render_text, "json": render_json, "csv": render_csv}


def render(report: dict, fmt: str) -> str:
    try:
        renderer = _RENDERERS[fmt]
    except KeyError:
        raise DomainError(f"unknown format {fmt!r}; expected text, json, or csv")
    return renderer(report)
