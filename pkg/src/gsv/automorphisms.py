"""Automorphisms of gsv[G, alpha] and cross-presentation isomorphisms.

Four primitive families generate the automorphism group:

    diagonal(t; s):  L_u -> chi(u) L_u,  M_u -> s^2 chi(u) M_u,
                     Y_x -> s chi(x) Y_x   (chi the character with chi(g/2) = t)
    scale(a):        X_u -> a^{-1} X_{au}  for each kind, a a unit of Z[1/P]
    cocycle(l):      L_u -> L_u + l*u*M_u, M and Y fixed
    inner(x):        exp(ad x) for x in the ideal I = span(M, Y); since
                     (ad x)^3 = 0 the exponential is the exact quadratic
                     e + [x, e] + 1/2 [x, [x, e]]

An Automorphism is a chain of primitives applied right to left.
Composition concatenates chains and merges adjacent primitives of the
same family: characters and s-parameters multiply, scales multiply,
cocycle slopes add, and inner parts combine by the (here exact, since
[I, I] is central in I) rule x * y -> x + y + 1/2 [x, y].
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Iterable, Mapping, Optional, Sequence, Union

from .errors import DomainError
from .groups import (
    Character,
    ElementClass,
    GroupPresentation,
    Rational,
    as_rational,
    char_eval,
    iso_scale,
    member_S,
)
from .lie import (
    GeneratorSymbol,
    LieElement,
    MixedPresentation,
    bracket,
    ideal_membership,
    validate_symbol,
)


class NotInIdeal(DomainError):
    pass


class MissingEntry(DomainError):
    pass


class ScaleNotAdmissible(DomainError):
    pass


@dataclass(frozen=True)
class Diagonal:
    character: Character
    s: Fraction

    def apply(self, e: LieElement) -> LieElement:
        terms = {}
        s = self.s
        for sym, coeff in e.terms():
            chi = char_eval(self.character, sym.index)
            if sym.kind == "L":
                factor = chi
            elif sym.kind == "M":
                factor = s * s * chi
            else:
                factor = s * chi
            terms[sym] = coeff * factor
        return LieElement(e.group, terms)

    def is_identity(self) -> bool:
        return self.character.t == 1 and self.s == 1

    def inverted(self) -> "Diagonal":
        chi = Character(self.character.group, 1 / self.character.t)
        return Diagonal(chi, 1 / self.s)


@dataclass(frozen=True)
class Scale:
    a: Fraction

    def apply(self, e: LieElement) -> LieElement:
        inv = 1 / self.a
        terms = {}
        for sym, coeff in e.terms():
            terms[GeneratorSymbol(sym.kind, self.a * sym.index)] = coeff * inv
        return LieElement(e.group, terms)

    def is_identity(self) -> bool:
        return self.a == 1

    def inverted(self) -> "Scale":
        return Scale(1 / self.a)


@dataclass(frozen=True)
class Cocycle:
    slope: Fraction

    def apply(self, e: LieElement) -> LieElement:
        terms = dict(e._terms)
        for sym, coeff in e.terms():
            if sym.kind == "L" and sym.index != 0:
                msym = GeneratorSymbol("M", sym.index)
                bump = coeff * self.slope * sym.index
                terms[msym] = terms.get(msym, Fraction(0)) + bump
        return LieElement(e.group, terms)

    def is_identity(self) -> bool:
        return self.slope == 0

    def inverted(self) -> "Cocycle":
        return Cocycle(-self.slope)


@dataclass(frozen=True)
class Inner:
    x: LieElement

    def apply(self, e: LieElement) -> LieElement:
        once = bracket(self.x, e)
        twice = bracket(self.x, once)
        return e + once + twice.scaled(Fraction(1, 2))

    def is_identity(self) -> bool:
        return self.x.is_zero

    def inverted(self) -> "Inner":
        return Inner(-self.x)


Primitive = Union[Diagonal, Scale, Cocycle, Inner]


def _merged(p: Primitive, q: Primitive) -> Optional[Primitive]:
    """p followed-after q (p is applied second); None when families differ."""
    if isinstance(p, Diagonal) and isinstance(q, Diagonal):
        chi = Character(p.character.group, p.character.t * q.character.t)
        return Diagonal(chi, p.s * q.s)
    if isinstance(p, Scale) and isinstance(q, Scale):
        return Scale(p.a * q.a)
    if isinstance(p, Cocycle) and isinstance(q, Cocycle):
        return Cocycle(p.slope + q.slope)
    if isinstance(p, Inner) and isinstance(q, Inner):
        mid = bracket(p.x, q.x).scaled(Fraction(1, 2))
        return Inner(p.x + q.x + mid)
    return None


@dataclass(frozen=True)
class Automorphism:
    group: GroupPresentation
    chain: tuple[Primitive, ...] = field(default_factory=tuple)

    def __post_init__(self):
        for prim in self.chain:
            if isinstance(prim, Diagonal):
                if prim.character.group != self.group:
                    raise MixedPresentation("character belongs to another presentation")
                if prim.s == 0:
                    raise ScaleNotAdmissible("diagonal parameter s must be nonzero")
            elif isinstance(prim, Scale):
                if not member_S(self.group, prim.a):
                    raise ScaleNotAdmissible(
                        f"{prim.a} is not a unit of the index lattice"
                    )
            elif isinstance(prim, Inner):
                if prim.x.group != self.group:
                    raise MixedPresentation("inner part belongs to another presentation")
                if not ideal_membership(prim.x):
                    raise NotInIdeal("exp(ad x) needs x inside the ideal I")

    def apply(self, e: LieElement) -> LieElement:
        if e.group != self.group:
            raise MixedPresentation("element belongs to another presentation")
        for prim in reversed(self.chain):
            e = prim.apply(e)
        return e

    def __call__(self, e: LieElement) -> LieElement:
        return self.apply(e)


def identity(gp: GroupPresentation) -> Automorphism:
    return Automorphism(gp, ())


def diagonal(gp: GroupPresentation, t: Rational, s: Rational) -> Automorphism:
    return Automorphism(gp, (Diagonal(Character(gp, as_rational(t)), as_rational(s)),))


def scale(gp: GroupPresentation, a: Rational) -> Automorphism:
    return Automorphism(gp, (Scale(as_rational(a)),))


def cocycle(gp: GroupPresentation, slope: Rational) -> Automorphism:
    return Automorphism(gp, (Cocycle(as_rational(slope)),))


def exp_ad(x: LieElement) -> Automorphism:
    if not ideal_membership(x):
        raise NotInIdeal("exp(ad x) needs x inside the ideal I")
    if x.is_zero:
        return identity(x.group)
    return Automorphism(x.group, (Inner(x),))


def normalize_chain(chain: Sequence[Primitive]) -> tuple[Primitive, ...]:
    """Drop identity primitives and merge mergeable neighbours."""
    chain = list(chain)
    changed = True
    while changed:
        changed = False
        chain = [p for p in chain if not p.is_identity()]
        for i in range(len(chain) - 1):
            merged = _merged(chain[i], chain[i + 1])
            if merged is not None:
                chain[i : i + 2] = [merged]
                changed = True
                break
    return tuple(chain)


def compose(first: Automorphism, second: Automorphism) -> Automorphism:
    """first o second: the right automorphism acts first."""
    if first.group != second.group:
        raise MixedPresentation("cannot compose over different presentations")
    return Automorphism(first.group, normalize_chain(first.chain + second.chain))


def invert(theta: Automorphism) -> Automorphism:
    return Automorphism(theta.group, tuple(p.inverted() for p in reversed(theta.chain)))


ElementMap = Union[Automorphism, Callable[[LieElement], LieElement]]


def _as_map(theta: ElementMap) -> Callable[[LieElement], LieElement]:
    return theta.apply if isinstance(theta, Automorphism) else theta


def hom_residual(
    theta: ElementMap,
    pairs: Iterable[tuple[LieElement, LieElement]],
) -> list[tuple[tuple[LieElement, LieElement], LieElement]]:
    """Nonzero values of theta([x,y]) - [theta(x), theta(y)] over the pairs."""
    f = _as_map(theta)
    bad = []
    for x, y in pairs:
        residual = f(bracket(x, y)) - bracket(f(x), f(y))
        if not residual.is_zero:
            bad.append(((x, y), residual))
    return bad


def validate_cocycle(
    table: Mapping[Rational, Rational],
    window: Iterable[Rational],
    gp: GroupPresentation,
) -> bool:
    """Check (v-u) a_{u+v} = v a_v - u a_u and a_{-u} = -a_u on the window.

    The table must cover the window, its negatives and its pairwise sums;
    a gap raises MissingEntry rather than guessing.
    """
    entries = {as_rational(k): as_rational(v) for k, v in table.items()}

    def lookup(u: Fraction) -> Fraction:
        if u not in entries:
            raise MissingEntry(f"cocycle table lacks index {u}")
        return entries[u]

    win = [as_rational(u) for u in window]
    for u in win:
        if lookup(-u) != -lookup(u):
            return False
    for u in win:
        for v in win:
            lhs = (v - u) * lookup(u + v)
            rhs = v * lookup(v) - u * lookup(u)
            if lhs != rhs:
                return False
    return True


@dataclass
class ShapeReport:
    """Canonical action shape extracted from images of M and Y symbols.

    A structure-respecting map sends M_u to a single term b_u * M_{a*u}
    with one scale a shared by every index, and Y_x to c_x * Y_{a*x}
    plus M terms only.  `ok` is False when any image breaks the shape.
    """

    ok: bool
    a: Optional[Fraction]
    b: dict[Fraction, Fraction]
    c: dict[Fraction, Fraction]
    problems: list[str]

    def as_dict(self) -> dict:
        return {
            "ok": self.ok,
            "a": None if self.a is None else str(self.a),
            "b": {str(k): str(v) for k, v in sorted(self.b.items())},
            "c": {str(k): str(v) for k, v in sorted(self.c.items())},
            "problems": list(self.problems),
        }


def canonical_shape(
    theta: ElementMap,
    gp: GroupPresentation,
    window: Rational = 4,
    caps: Optional[dict[int, int]] = None,
) -> ShapeReport:
    f = _as_map(theta)
    problems: list[str] = []
    a: Optional[Fraction] = None
    b: dict[Fraction, Fraction] = {}
    c: dict[Fraction, Fraction] = {}

    bound = as_rational(window)
    m_indices = [Fraction(0)]
    y_indices = []
    for v in gp.positive_values(bound, caps):
        if gp.classify(v) is ElementClass.IN_G:
            m_indices += [v, -v]
        else:
            y_indices += [v, -v]

    for u in m_indices:
        img = f(LieElement(gp, {GeneratorSymbol("M", u): Fraction(1)}))
        terms = list(img.terms())
        if len(terms) != 1 or terms[0][0].kind != "M":
            problems.append(f"image of M({u}) is not a single M term")
            continue
        sym, coeff = terms[0]
        b[u] = coeff
        if u == 0:
            if sym.index != 0:
                problems.append("image of M(0) moved off index 0")
        else:
            ratio = sym.index / u
            if a is None:
                a = ratio
            elif a != ratio:
                problems.append(
                    f"M indices scale inconsistently: {ratio} vs {a} at M({u})"
                )
    if a is None:
        problems.append("window contained no nonzero M index to infer the scale")

    for x in y_indices:
        img = f(LieElement(gp, {GeneratorSymbol("Y", x): Fraction(1)}))
        y_terms = [(s, co) for s, co in img.terms() if s.kind == "Y"]
        l_terms = [s for s, _ in img.terms() if s.kind == "L"]
        if l_terms:
            problems.append(f"image of Y({x}) leaks L terms")
            continue
        if len(y_terms) != 1:
            problems.append(f"image of Y({x}) has {len(y_terms)} Y terms, wanted 1")
            continue
        sym, coeff = y_terms[0]
        if a is not None and sym.index != a * x:
            problems.append(f"image of Y({x}) sits at {sym.index}, wanted {a * x}")
            continue
        c[x] = coeff

    return ShapeReport(ok=not problems, a=a, b=b, c=c, problems=problems)


@dataclass(frozen=True)
class IsomorphismMap:
    """X_u -> a^{-1} X'_{a u} between presentations with the same primes."""

    source: GroupPresentation
    target: GroupPresentation
    a: Fraction

    def apply(self, e: LieElement) -> LieElement:
        if e.group != self.source:
            raise MixedPresentation("element not over the source presentation")
        inv = 1 / self.a
        terms = {}
        for sym, coeff in e.terms():
            moved = GeneratorSymbol(sym.kind, self.a * sym.index)
            validate_symbol(moved, self.target)
            terms[moved] = coeff * inv
        return LieElement(self.target, terms)

    def __call__(self, e: LieElement) -> LieElement:
        return self.apply(e)


def build_isomorphism(
    gp: GroupPresentation, gp2: GroupPresentation
) -> Optional[IsomorphismMap]:
    a = iso_scale(gp, gp2)
    if a is None:
        return None
    return IsomorphismMap(source=gp, target=gp2, a=a)
