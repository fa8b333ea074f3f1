"""The Lie algebra gsv[G, alpha] as sparse exact-rational elements.

Basis symbols come in three kinds: L_u and M_u for u in G, and Y_x for
x in the shifted coset G1.  All indices are absolute weights, so the
bracket table is uniform:

    [L_u, L_v] = (v - u) L_{u+v}
    [L_u, M_v] = v M_{u+v}
    [L_u, Y_x] = (x - u/2) Y_{u+x}
    [Y_x, Y_y] = (y - x) M_{x+y}
    [M_*, M_*] = [M_*, Y_*] = 0

M_0 is central, the span of all M and Y symbols is the unique maximal
ideal I, and ad(x)^3 = 0 for every x in I.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Optional

from .errors import DomainError
from .groups import ElementClass, GroupPresentation, Rational, as_rational


class MixedPresentation(DomainError):
    pass


class IndexDomainError(DomainError):
    pass


_KIND_RANK = {"L": 0, "M": 1, "Y": 2}


@dataclass(frozen=True)
class GeneratorSymbol:
    kind: str
    index: Fraction

    def sort_key(self) -> tuple[int, Fraction]:
        return (_KIND_RANK[self.kind], self.index)

    def __repr__(self):
        return f"{self.kind}({self.index})"


def validate_symbol(sym: GeneratorSymbol, gp: GroupPresentation) -> None:
    cls = gp.classify(sym.index)
    if sym.kind in ("L", "M") and cls is not ElementClass.IN_G:
        raise IndexDomainError(f"{sym.kind} index {sym.index} is not in G")
    if sym.kind == "Y" and cls is not ElementClass.IN_G1:
        raise IndexDomainError(f"Y index {sym.index} is not in G1 = alpha + G")


class LieElement:
    """Finite rational combination of generator symbols over one presentation."""

    __slots__ = ("group", "_terms")

    def __init__(self, group: GroupPresentation, terms=None, validate: bool = False):
        self.group = group
        clean: dict[GeneratorSymbol, Fraction] = {}
        for sym, coeff in (terms or {}).items():
            coeff = as_rational(coeff)
            if coeff == 0:
                continue
            if validate:
                validate_symbol(sym, group)
            clean[sym] = coeff
        self._terms = clean

    def terms(self) -> Iterator[tuple[GeneratorSymbol, Fraction]]:
        """Terms in canonical order: kind L < M < Y, then index."""
        for sym in sorted(self._terms, key=GeneratorSymbol.sort_key):
            yield sym, self._terms[sym]

    def coeff(self, sym: GeneratorSymbol) -> Fraction:
        return self._terms.get(sym, Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, LieElement):
            return NotImplemented
        return self.group == other.group and self._terms == other._terms

    def __add__(self, other: "LieElement") -> "LieElement":
        _same_presentation(self, other)
        terms = dict(self._terms)
        for sym, coeff in other._terms.items():
            terms[sym] = terms.get(sym, Fraction(0)) + coeff
        return LieElement(self.group, terms)

    def __neg__(self) -> "LieElement":
        return LieElement(self.group, {s: -c for s, c in self._terms.items()})

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def scaled(self, r: Rational) -> "LieElement":
        r = as_rational(r)
        return LieElement(self.group, {s: r * c for s, c in self._terms.items()})

    def __rmul__(self, r) -> "LieElement":
        return self.scaled(r)

    def __repr__(self):
        from .expressions import format_element

        return f"<{format_element(self)}>"


def _same_presentation(a: LieElement, b: LieElement) -> None:
    if a.group != b.group:
        raise MixedPresentation("operands live over different presentations")


def zero(gp: GroupPresentation) -> LieElement:
    return LieElement(gp, {})


def generator(gp: GroupPresentation, kind: str, index: Rational) -> LieElement:
    sym = GeneratorSymbol(kind, as_rational(index))
    validate_symbol(sym, gp)
    return LieElement(gp, {sym: Fraction(1)})


def L(gp: GroupPresentation, u: Rational) -> LieElement:
    return generator(gp, "L", u)


def M(gp: GroupPresentation, u: Rational) -> LieElement:
    return generator(gp, "M", u)


def Y(gp: GroupPresentation, x: Rational) -> LieElement:
    return generator(gp, "Y", x)


def bracket_symbols(
    a: GeneratorSymbol, b: GeneratorSymbol
) -> Optional[tuple[GeneratorSymbol, Fraction]]:
    """[a, b] for single symbols: at most one term, or None when it vanishes."""
    ka, kb = a.kind, b.kind
    if ka != "L" and kb == "L":
        flipped = bracket_symbols(b, a)
        if flipped is None:
            return None
        sym, coeff = flipped
        return (sym, -coeff)
    if ka == "L":
        if kb == "L":
            coeff = b.index - a.index
            if coeff == 0:
                return None
            return (GeneratorSymbol("L", a.index + b.index), coeff)
        if kb == "M":
            if b.index == 0:
                return None
            return (GeneratorSymbol("M", a.index + b.index), b.index)
        # kb == "Y"
        coeff = b.index - a.index / 2
        if coeff == 0:
            return None
        return (GeneratorSymbol("Y", a.index + b.index), coeff)
    if ka == "Y" and kb == "Y":
        coeff = b.index - a.index
        if coeff == 0:
            return None
        return (GeneratorSymbol("M", a.index + b.index), coeff)
    # [M, M], [M, Y], [Y, M]
    return None


def bracket(e1: LieElement, e2: LieElement) -> LieElement:
    _same_presentation(e1, e2)
    acc: dict[GeneratorSymbol, Fraction] = {}
    for s1, c1 in e1._terms.items():
        for s2, c2 in e2._terms.items():
            hit = bracket_symbols(s1, s2)
            if hit is None:
                continue
            sym, coeff = hit
            acc[sym] = acc.get(sym, Fraction(0)) + c1 * c2 * coeff
    return LieElement(e1.group, acc)


def grade_decompose(e: LieElement) -> dict[Fraction, LieElement]:
    """Split into weight-homogeneous pieces; the weight of a symbol is its index."""
    buckets: dict[Fraction, dict] = {}
    for sym, coeff in e._terms.items():
        buckets.setdefault(sym.index, {})[sym] = coeff
    return {w: LieElement(e.group, t) for w, t in sorted(buckets.items())}


def jacobi_residual(a: LieElement, b: LieElement, c: LieElement) -> LieElement:
    """[[a,b],c] + [[b,c],a] + [[c,a],b]; zero for a true Lie bracket."""
    return bracket(bracket(a, b), c) + bracket(bracket(b, c), a) + bracket(bracket(c, a), b)


def ideal_membership(e: LieElement) -> bool:
    """True when e lies in the maximal ideal I = span(M) + span(Y)."""
    return all(sym.kind != "L" for sym in e._terms)
