"""Sectioned key = value run configuration.

Grammar (one directive per line, ``#`` starts a comment):

    [algebra]
    g = 1             # positive rational lattice generator
    primes = 3 5      # inverted odd primes; empty or "none" for a
                      # discrete presentation
    m = 1             # odd integer selecting the half-integer coset

    [order]
    direction = natural   # or: reversed

    [module]
    c = 1             # central charge
    h = 0             # highest weight

    [trunc]
    max_depth = 3     # optional depth bound for dense enumerations
    lattice = 3:2     # per-prime denominator exponent caps, "p:e" pairs

    [run]
    seed = 0          # seed for randomized check suites

Every section and key is optional; omitted keys fall back to the
defaults shown above (no truncation unless [trunc] appears).  The
parser is deliberately hand-rolled so that syntax errors carry the
offending line number and text.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .errors import EngineError, ParseError, ValidationError
from .groups import GroupPresentation, make_group
from .verma import HighestWeight, Truncation

_SECTIONS = {
    "algebra": {"g", "primes", "m"},
    "order": {"direction"},
    "module": {"c", "h"},
    "trunc": {"max_depth", "lattice"},
    "run": {"seed"},
}


@dataclass(frozen=True)
class RunConfig:
    group: GroupPresentation
    hw: HighestWeight
    trunc: Optional[Truncation]
    seed: int


def _rational(raw: str, where: str) -> Fraction:
    try:
        return Fraction(raw)
    except (ValueError, ZeroDivisionError):
        raise ParseError(f"{where}: expected a rational number, got {raw!r}")


def _integer(raw: str, where: str) -> int:
    try:
        return int(raw, 10)
    except ValueError:
        raise ParseError(f"{where}: expected an integer, got {raw!r}")


def _primes(raw: str, where: str) -> tuple[int, ...]:
    cleaned = raw.replace(",", " ").strip()
    if cleaned.lower() in ("", "none"):
        return ()
    return tuple(_integer(tok, where) for tok in cleaned.split())


def _lattice(raw: str, where: str) -> dict[int, int]:
    caps: dict[int, int] = {}
    for tok in raw.replace(",", " ").split():
        if ":" not in tok:
            raise ParseError(f"{where}: expected p:e pairs, got {tok!r}")
        p_raw, e_raw = tok.split(":", 1)
        caps[_integer(p_raw, where)] = _integer(e_raw, where)
    return caps


def parse_config(text: str, source: str = "<config>") -> RunConfig:
    values: dict[tuple[str, str], str] = {}
    lines: dict[tuple[str, str], str] = {}
    section: Optional[str] = None
    for lineno, raw_line in enumerate(text.splitlines(), start=1):
        line = raw_line.split("#", 1)[0].strip()
        where = f"{source}:{lineno}"
        if not line:
            continue
        if line.startswith("["):
            if not line.endswith("]"):
                raise ParseError(f"{where}: unterminated section header {line!r}")
            name = line[1:-1].strip().lower()
            if name not in _SECTIONS:
                known = ", ".join(sorted(_SECTIONS))
                raise ParseError(f"{where}: unknown section [{name}] (known: {known})")
            section = name
            continue
        if "=" not in line:
            raise ParseError(f"{where}: expected key = value, got {line!r}")
        key, _, raw_value = line.partition("=")
        key = key.strip().lower()
        value = raw_value.strip()
        if section is None:
            if key == "seed":  # accepted bare as well as under [run]
                if ("run", "seed") in values:
                    raise ParseError(f"{where}: duplicate key 'seed'")
                values[("run", "seed")] = value
                lines[("run", "seed")] = where
                continue
            raise ParseError(f"{where}: directive before any [section]")
        if key not in _SECTIONS[section]:
            known = ", ".join(sorted(_SECTIONS[section]))
            raise ParseError(
                f"{where}: unknown key {key!r} in [{section}] (known: {known})"
            )
        if (section, key) in values:
            raise ParseError(f"{where}: duplicate key {key!r} in [{section}]")
        values[(section, key)] = value
        lines[(section, key)] = where

    def get(section: str, key: str, default: str) -> tuple[str, str]:
        if (section, key) in values:
            return values[(section, key)], lines[(section, key)]
        return default, f"{source}:[{section}] {key}"

    g_raw, g_at = get("algebra", "g", "1")
    primes_raw, primes_at = get("algebra", "primes", "")
    m_raw, m_at = get("algebra", "m", "1")
    dir_raw, dir_at = get("order", "direction", "natural")
    c_raw, c_at = get("module", "c", "1")
    h_raw, h_at = get("module", "h", "0")
    seed_raw, seed_at = get("run", "seed", "0")

    if dir_raw not in ("natural", "reversed"):
        raise ValidationError(
            f"{dir_at}: direction must be natural or reversed, got {dir_raw!r}"
        )
    g_val = _rational(g_raw, g_at)
    primes_val = _primes(primes_raw, primes_at)
    m_val = _integer(m_raw, m_at)
    try:
        group = make_group(g=g_val, primes=primes_val, m=m_val, direction=dir_raw)
    except EngineError as exc:
        raise ValidationError(f"{source}: [algebra] rejected: {exc}")

    hw = HighestWeight(_rational(c_raw, c_at), _rational(h_raw, h_at))

    trunc: Optional[Truncation] = None
    if ("trunc", "max_depth") in values or ("trunc", "lattice") in values:
        depth_raw, depth_at = get("trunc", "max_depth", "3")
        lattice_raw, lattice_at = get("trunc", "lattice", "")
        caps = _lattice(lattice_raw, lattice_at)
        missing = [p for p in group.primes if p not in caps]
        if group.primes and missing:
            raise ValidationError(
                f"{lattice_at}: lattice must cap every inverted prime; "
                f"missing {sorted(missing)}"
            )
        trunc = Truncation(_rational(depth_raw, depth_at), caps)

    return RunConfig(
        group=group, hw=hw, trunc=trunc, seed=_integer(seed_raw, seed_at)
    )


def load_config(path: str) -> RunConfig:
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise ParseError(f"cannot read config {path}: {exc}")
    return parse_config(text, source=path)


def default_config() -> RunConfig:
    return parse_config("", source="<defaults>")
