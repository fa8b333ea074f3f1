"""Verma modules V(c, h) over gsv[G, alpha] in exact arithmetic.

V(c, h) is induced from a highest-weight line: L_0 acts by h, the
central M_0 by c, and every order-positive generator kills v_h.  A PBW
basis is indexed by triples of weakly increasing part tuples,

    L_{-i_1} ... L_{-i_r} M_{-j_1} ... M_{-j_s} Y_{alpha-k_1} ... Y_{alpha-k_t} v_h,

with 0 < i_1 <= ... <= i_r and 0 < j_1 <= ... <= j_s in G, and
alpha < k_1 <= ... <= k_t in G (all comparisons in the presentation's
order).  The depth sum(i) + sum(j) + sum(k - alpha) grades the module:
the monomial has L_0-weight h - depth.

The generator action is computed by straightening words against the
bracket table; nothing is ever truncated or approximated, so the
classical filtration identities hold on the nose and are used as
oracles by the test suite.  Truncation enters only where a Dense
instance would make an index enumeration infinite (weight bases,
singular vectors, submodule slices).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Iterator, Optional, Sequence

from .errors import DomainError
from .groups import (
    Density,
    ElementClass,
    GroupPresentation,
    IndexOutsideT,
    Rational,
    as_rational,
)
from .lie import (
    GeneratorSymbol,
    IndexDomainError,
    LieElement,
    MixedPresentation,
    bracket_symbols,
    validate_symbol,
)
from . import linalg


class ZeroVector(DomainError):
    pass


class CZero(DomainError):
    pass


class NonHomogeneous(DomainError):
    pass


class DenseWithoutTruncation(DomainError):
    pass


@dataclass(frozen=True)
class HighestWeight:
    c: Fraction
    h: Fraction


def highest_weight(c: Rational, h: Rational) -> HighestWeight:
    return HighestWeight(as_rational(c), as_rational(h))


@dataclass(frozen=True)
class Truncation:
    """Finite sub-lattice bound: a depth cap plus per-prime denominator
    exponent caps.  The capped lattice is closed under addition, so all
    module operations stay inside it."""

    max_depth: Fraction
    caps: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "max_depth", as_rational(self.max_depth))


@dataclass(frozen=True)
class PBWMonomial:
    lparts: tuple[Fraction, ...] = ()
    mparts: tuple[Fraction, ...] = ()
    yparts: tuple[Fraction, ...] = ()

    @property
    def is_highest(self) -> bool:
        return not (self.lparts or self.mparts or self.yparts)


def make_monomial(
    gp: GroupPresentation,
    lparts: Iterable[Rational] = (),
    mparts: Iterable[Rational] = (),
    yparts: Iterable[Rational] = (),
) -> PBWMonomial:
    """Build and validate a PBW monomial, sorting each block."""
    lp = sorted((as_rational(i) for i in lparts), key=gp.okey)
    mp = sorted((as_rational(j) for j in mparts), key=gp.okey)
    yp = sorted((as_rational(k) for k in yparts), key=gp.okey)
    for i in lp + mp:
        if not gp.is_positive(i) or gp.classify(i) is not ElementClass.IN_G:
            raise IndexDomainError(f"L/M part {i} is not a positive G element")
    for k in yp:
        if gp.okey(k) <= gp.okey(gp.alpha) or gp.classify(k) is not ElementClass.IN_G:
            raise IndexDomainError(f"Y part {k} is not a G element above alpha")
    return PBWMonomial(tuple(lp), tuple(mp), tuple(yp))


def monomial_depth(m: PBWMonomial, gp: GroupPresentation) -> Fraction:
    alpha = gp.alpha
    return sum(m.lparts, Fraction(0)) + sum(m.mparts, Fraction(0)) + sum(
        (k - alpha for k in m.yparts), Fraction(0)
    )


def monomial_weight(m: PBWMonomial, hw: HighestWeight, gp: GroupPresentation) -> Fraction:
    return hw.h - monomial_depth(m, gp)


def monomial_letters(m: PBWMonomial, gp: GroupPresentation) -> tuple[GeneratorSymbol, ...]:
    alpha = gp.alpha
    return (
        tuple(GeneratorSymbol("L", -i) for i in m.lparts)
        + tuple(GeneratorSymbol("M", -j) for j in m.mparts)
        + tuple(GeneratorSymbol("Y", alpha - k) for k in m.yparts)
    )


def _mono_key(m: PBWMonomial, gp: GroupPresentation):
    return (
        gp.okey(monomial_depth(m, gp)),
        tuple(gp.okey(i) for i in m.lparts),
        tuple(gp.okey(j) for j in m.mparts),
        tuple(gp.okey(k) for k in m.yparts),
    )


class VermaVector:
    """Finite rational combination of PBW monomials in one V(c, h)."""

    __slots__ = ("group", "hw", "_terms")

    def __init__(self, group: GroupPresentation, hw: HighestWeight, terms=None):
        self.group = group
        self.hw = hw
        clean: dict[PBWMonomial, Fraction] = {}
        for mono, coeff in (terms or {}).items():
            coeff = as_rational(coeff)
            if coeff != 0:
                clean[mono] = coeff
        self._terms = clean

    def terms(self) -> Iterator[tuple[PBWMonomial, Fraction]]:
        for mono in sorted(self._terms, key=lambda m: _mono_key(m, self.group)):
            yield mono, self._terms[mono]

    def coeff(self, mono: PBWMonomial) -> Fraction:
        return self._terms.get(mono, Fraction(0))

    @property
    def is_zero(self) -> bool:
        return not self._terms

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if not isinstance(other, VermaVector):
            return NotImplemented
        return (
            self.group == other.group
            and self.hw == other.hw
            and self._terms == other._terms
        )

    def __add__(self, other: "VermaVector") -> "VermaVector":
        self._check_compatible(other)
        terms = dict(self._terms)
        for mono, coeff in other._terms.items():
            terms[mono] = terms.get(mono, Fraction(0)) + coeff
        return VermaVector(self.group, self.hw, terms)

    def __neg__(self) -> "VermaVector":
        return VermaVector(self.group, self.hw, {m: -c for m, c in self._terms.items()})

    def __sub__(self, other: "VermaVector") -> "VermaVector":
        return self + (-other)

    def scaled(self, r: Rational) -> "VermaVector":
        r = as_rational(r)
        return VermaVector(self.group, self.hw, {m: r * c for m, c in self._terms.items()})

    def __rmul__(self, r) -> "VermaVector":
        return self.scaled(r)

    def depths(self) -> set[Fraction]:
        return {monomial_depth(m, self.group) for m in self._terms}

    def _check_compatible(self, other: "VermaVector") -> None:
        if self.group != other.group or self.hw != other.hw:
            raise MixedPresentation("vectors live in different modules")

    def __repr__(self):
        from .expressions import format_vector

        return f"<{format_vector(self)}>"


def highest_weight_vector(gp: GroupPresentation, hw: HighestWeight) -> VermaVector:
    return VermaVector(gp, hw, {PBWMonomial(): Fraction(1)})


def monomial_vector(
    gp: GroupPresentation,
    hw: HighestWeight,
    lparts: Iterable[Rational] = (),
    mparts: Iterable[Rational] = (),
    yparts: Iterable[Rational] = (),
) -> VermaVector:
    return VermaVector(gp, hw, {make_monomial(gp, lparts, mparts, yparts): Fraction(1)})


def _fkey(sym: GeneratorSymbol, gp: GroupPresentation):
    # factor position inside a normal word: kind block, then raw part
    rank = 0 if sym.kind == "L" else (1 if sym.kind == "M" else 2)
    return (rank, -gp.okey(sym.index))


def _straighten(
    gp: GroupPresentation,
    hw: HighestWeight,
    word: tuple[GeneratorSymbol, ...],
    coeff: Fraction,
    out: dict[tuple[GeneratorSymbol, ...], Fraction],
) -> None:
    """Rewrite word * v_h into normal words, accumulating into out.

    Repeatedly locate the longest normal suffix; the letter just before
    it either annihilates v_h, acts by h or c, or commutes rightward
    producing the swapped word plus one shorter bracket word.  Length
    plus disorder decreases lexicographically, so this terminates.
    """
    stack = [(word, coeff)]
    while stack:
        w, co = stack.pop()
        n = len(w)
        j = n
        while j > 0:
            s = w[j - 1]
            if gp.okey(s.index) >= 0:
                break
            if j < n and _fkey(s, gp) > _fkey(w[j], gp):
                break
            j -= 1
        if j == 0:
            out[w] = out.get(w, Fraction(0)) + co
            continue
        x = w[j - 1]
        if j == n:
            if gp.okey(x.index) > 0:
                continue  # raising letter meets v_h
            factor = hw.h if x.kind == "L" else hw.c
            if factor != 0:
                stack.append((w[:-1], co * factor))
            continue
        y = w[j]
        stack.append((w[: j - 1] + (y, x) + w[j + 1 :], co))
        hit = bracket_symbols(x, y)
        if hit is not None:
            sym, bc = hit
            stack.append((w[: j - 1] + (sym,) + w[j + 1 :], co * bc))


def _word_to_monomial(w: tuple[GeneratorSymbol, ...], gp: GroupPresentation) -> PBWMonomial:
    alpha = gp.alpha
    lp, mp, yp = [], [], []
    for s in w:
        if s.kind == "L":
            lp.append(-s.index)
        elif s.kind == "M":
            mp.append(-s.index)
        else:
            yp.append(alpha - s.index)
    return PBWMonomial(tuple(lp), tuple(mp), tuple(yp))


def act_generator(sym: GeneratorSymbol, v: VermaVector) -> VermaVector:
    gp = v.group
    validate_symbol(sym, gp)
    words: dict[tuple[GeneratorSymbol, ...], Fraction] = {}
    for mono, coeff in v._terms.items():
        _straighten(gp, v.hw, (sym,) + monomial_letters(mono, gp), coeff, words)
    terms: dict[PBWMonomial, Fraction] = {}
    for w, co in words.items():
        if co == 0:
            continue
        mono = _word_to_monomial(w, gp)
        terms[mono] = terms.get(mono, Fraction(0)) + co
    return VermaVector(gp, v.hw, terms)


def act_word(word: Sequence[GeneratorSymbol], v: VermaVector) -> VermaVector:
    """Apply a product of generators; the last letter acts first."""
    for sym in reversed(list(word)):
        v = act_generator(sym, v)
    return v


def act_element(e: LieElement, v: VermaVector) -> VermaVector:
    if e.group != v.group:
        raise MixedPresentation("element and vector presentations differ")
    out = VermaVector(v.group, v.hw, {})
    for sym, coeff in e.terms():
        out = out + act_generator(sym, v).scaled(coeff)
    return out


def _require_enumerable(gp: GroupPresentation, trunc: Optional[Truncation]) -> Optional[dict[int, int]]:
    if gp.density() is Density.DENSE and trunc is None:
        raise DenseWithoutTruncation(
            "a Dense instance needs a truncation to make index sets finite"
        )
    return trunc.caps if trunc else None


def _part_values(
    gp: GroupPresentation, bound: Fraction, caps: Optional[dict[int, int]]
) -> tuple[list[Fraction], list[Fraction]]:
    """(positive G values, positive G1 values) up to the okey bound."""
    g_vals, g1_vals = [], []
    for v in gp.positive_values(bound, caps):
        if gp.classify(v) is ElementClass.IN_G:
            g_vals.append(v)
        else:
            g1_vals.append(v)
    return g_vals, g1_vals


def _exact_multisets(
    values: list[Fraction], total: Fraction, gp: GroupPresentation, start: int = 0
) -> Iterator[tuple[Fraction, ...]]:
    """Weakly increasing tuples from values with the given exact sum."""
    if total == 0:
        yield ()
        return
    for idx in range(start, len(values)):
        v = values[idx]
        if gp.okey(v) > gp.okey(total):
            break
        for rest in _exact_multisets(values, total - v, gp, idx):
            yield (v,) + rest


def _bounded_multisets(
    values: list[Fraction], bound: Fraction, gp: GroupPresentation, start: int = 0
) -> Iterator[tuple[tuple[Fraction, ...], Fraction]]:
    """All weakly increasing tuples whose sum stays within the okey bound."""
    yield (), Fraction(0)
    for idx in range(start, len(values)):
        v = values[idx]
        if gp.okey(v) > gp.okey(bound):
            break
        for tail, s in _bounded_multisets(values, bound - v, gp, idx):
            yield (v,) + tail, s + v


def weight_basis(
    depth: Rational,
    hw: HighestWeight,
    gp: GroupPresentation,
    trunc: Optional[Truncation] = None,
) -> list[PBWMonomial]:
    """PBW monomials of the given depth, in canonical graded order."""
    depth = as_rational(depth)
    caps = _require_enumerable(gp, trunc)
    if depth == 0:
        return [PBWMonomial()]
    if gp.okey(depth) < 0:
        return []
    if not gp.in_T(depth):
        raise IndexOutsideT(f"depth {depth} is not an element of T")
    bound = gp.okey(depth)
    g_vals, g1_vals = _part_values(gp, bound, caps)
    alpha = gp.alpha
    basis = []
    for lt, ls in _bounded_multisets(g_vals, depth, gp):
        rem1 = depth - ls
        for mt, ms in _bounded_multisets(g_vals, rem1, gp):
            rem2 = rem1 - ms
            for yt in _exact_multisets(g1_vals, rem2, gp):
                yparts = tuple(alpha + d for d in yt)
                basis.append(PBWMonomial(lt, mt, yparts))
    basis.sort(key=lambda m: _mono_key(m, gp))
    return basis


def count_L_partitions(
    depth: Rational,
    gp: GroupPresentation,
    trunc: Optional[Truncation] = None,
) -> int:
    """Number of weakly increasing positive-G tuples summing to depth."""
    depth = as_rational(depth)
    caps = _require_enumerable(gp, trunc)
    if depth == 0:
        return 1
    if gp.okey(depth) < 0 or not gp.in_T(depth):
        return 0
    g_vals, _ = _part_values(gp, gp.okey(depth), caps)
    return sum(1 for _ in _exact_multisets(g_vals, depth, gp))


def raising_symbols(
    gp: GroupPresentation,
    bound: Rational,
    caps: Optional[dict[int, int]] = None,
) -> list[GeneratorSymbol]:
    """L_u, M_u, Y_x with order-positive index of okey at most the bound."""
    out = []
    for v in gp.positive_values(as_rational(bound), caps):
        if gp.classify(v) is ElementClass.IN_G:
            out.append(GeneratorSymbol("L", v))
            out.append(GeneratorSymbol("M", v))
        else:
            out.append(GeneratorSymbol("Y", v))
    return out


def singular_vectors(
    depth: Rational,
    hw: HighestWeight,
    gp: GroupPresentation,
    trunc: Optional[Truncation] = None,
) -> list[VermaVector]:
    """Basis of the singular part of the weight space at the given depth.

    A vector is singular when every raising generator kills it; by
    weight grading only raising indices up to the depth can act
    nontrivially, so stacking those finitely many linear maps and
    taking the exact kernel is a complete test (within the truncation
    lattice on Dense instances).
    """
    depth = as_rational(depth)
    caps = _require_enumerable(gp, trunc)
    basis = weight_basis(depth, hw, gp, trunc)
    if not basis or depth == 0:
        return []
    images = []
    for sym in raising_symbols(gp, gp.okey(depth), caps):
        images.append(
            [act_generator(sym, VermaVector(gp, hw, {b: Fraction(1)})) for b in basis]
        )
    rows: list[list[Fraction]] = []
    for image_list in images:
        targets = sorted(
            {m for img in image_list for m in img._terms},
            key=lambda m: _mono_key(m, gp),
        )
        for tgt in targets:
            rows.append([img.coeff(tgt) for img in image_list])
    kernel = linalg.nullspace(rows, len(basis))
    vectors = []
    for coords in kernel:
        terms = {b: x for b, x in zip(basis, coords) if x != 0}
        vectors.append(VermaVector(gp, hw, terms))
    return vectors


def length_of(v: VermaVector) -> int:
    """Largest number of L factors appearing in any term."""
    if v.is_zero:
        raise ZeroVector("the zero vector has no length")
    return max(len(m.lparts) for m in v._terms)


def _require_homogeneous(v: VermaVector) -> Fraction:
    depths = v.depths()
    if len(depths) != 1:
        raise NonHomogeneous(f"vector mixes depths {sorted(map(str, depths))}")
    return depths.pop()


@dataclass(frozen=True)
class ReductionWitness:
    """Word of raising generators driving a vector back to the highest
    weight line, with the resulting nonzero multiple of v_h."""

    word: tuple[GeneratorSymbol, ...]
    scalar: Fraction


def reduce_to_highest(v: VermaVector) -> ReductionWitness:
    """Constructively witness that v generates v_h when c != 0.

    Three phases, each picking the extremal index so that exactly the
    extremal terms survive (with an M_0 = c factor) and everything else
    dies against v_h:

      1. strip L factors with raising M at the largest L part among
         maximal-length terms; the length drops by one each step,
      2. strip Y factors with raising Y at the largest Y part,
      3. strip M factors with raising L at the largest M part.
    """
    gp = v.group
    if v.is_zero:
        raise ZeroVector("cannot reduce the zero vector")
    if v.hw.c == 0:
        raise CZero("the reduction argument needs central charge c != 0")
    _require_homogeneous(v)
    word: list[GeneratorSymbol] = []
    alpha = gp.alpha

    while length_of(v) > 0:
        l = length_of(v)
        tops = [m for m in v._terms if len(m.lparts) == l]
        i0 = gp.maximum(m.lparts[-1] for m in tops)
        sym = GeneratorSymbol("M", i0)
        nxt = act_generator(sym, v)
        assert not nxt.is_zero and (
            max(len(m.lparts) for m in nxt._terms) == l - 1
        ), "L-stripping invariant failed"
        word.insert(0, sym)
        v = nxt

    while any(m.yparts for m in v._terms):
        k0 = gp.maximum(m.yparts[-1] for m in v._terms if m.yparts)
        sym = GeneratorSymbol("Y", k0 - alpha)
        nxt = act_generator(sym, v)
        assert not nxt.is_zero, "Y-stripping invariant failed"
        word.insert(0, sym)
        v = nxt

    while any(m.mparts for m in v._terms):
        j0 = gp.maximum(m.mparts[-1] for m in v._terms if m.mparts)
        sym = GeneratorSymbol("L", j0)
        nxt = act_generator(sym, v)
        assert not nxt.is_zero, "M-stripping invariant failed"
        word.insert(0, sym)
        v = nxt

    scalar = v.coeff(PBWMonomial())
    assert len(v) == 1 and scalar != 0
    return ReductionWitness(tuple(word), scalar)


def l_string_scalar(
    i_list: Sequence[Rational], h: Rational, gp: Optional[GroupPresentation] = None
) -> Fraction:
    """Closed form for L_i L_{-i_1} ... L_{-i_r} v_h with i = sum(i_p):

        (-1)^r (i + i_1)(i - i_1 + i_2) ... (i - i_1 - ... - i_{r-1} + i_r) h
    """
    parts = [as_rational(i) for i in i_list]
    if not parts:
        raise DomainError("need at least one L part")
    if gp is not None:
        for i in parts:
            if not gp.is_positive(i) or gp.classify(i) is not ElementClass.IN_G:
                raise IndexDomainError(f"{i} is not a positive G element")
    h = as_rational(h)
    total = sum(parts, Fraction(0))
    scalar = Fraction(1)
    prefix = Fraction(0)
    for i in parts:
        scalar *= total - prefix + i
        prefix += i
    if len(parts) % 2:
        scalar = -scalar
    return scalar * h


def canonical_submodule_generators(
    hw: HighestWeight,
    bound: Rational,
    gp: GroupPresentation,
    trunc: Optional[Truncation] = None,
) -> list[VermaVector]:
    """Generators of the maximal proper submodule of V(0, h) up to depth.

    At c = 0 these are M_{-u} v_h and Y_{alpha-k} v_h for all admissible
    positive depths, plus L_{-u} v_h when additionally h = 0.  (For
    c != 0 the module is irreducible and the returned set generates
    everything; the name refers to the degenerate case.)
    """
    caps = _require_enumerable(gp, trunc)
    g_vals, g1_vals = _part_values(gp, as_rational(bound), caps)
    gens = []
    for u in g_vals:
        gens.append(monomial_vector(gp, hw, mparts=[u]))
        if hw.h == 0:
            gens.append(monomial_vector(gp, hw, lparts=[u]))
    for d in g1_vals:
        gens.append(monomial_vector(gp, hw, yparts=[gp.alpha + d]))
    return gens


@dataclass(frozen=True)
class SubmoduleSlice:
    dim_space: int
    dim_submodule: int

    @property
    def codim(self) -> int:
        return self.dim_space - self.dim_submodule


def submodule_weight_dim(
    generators: Sequence[VermaVector],
    depth: Rational,
    hw: HighestWeight,
    gp: GroupPresentation,
    trunc: Optional[Truncation] = None,
) -> SubmoduleSlice:
    """Dimension of the slice of U(negative part) * generators at depth.

    Every generator is pushed down by all normal lowering words of the
    complementary depth; the exact rank of the resulting coordinate
    matrix is the slice dimension.
    """
    depth = as_rational(depth)
    basis = weight_basis(depth, hw, gp, trunc)
    index = {m: i for i, m in enumerate(basis)}
    rows = []
    for gen in generators:
        if gen.is_zero:
            continue
        d_gen = _require_homogeneous(gen)
        delta = depth - d_gen
        if gp.okey(delta) < 0:
            continue
        for wm in weight_basis(delta, hw, gp, trunc):
            vec = act_word(monomial_letters(wm, gp), gen)
            row = [Fraction(0)] * len(basis)
            for mono, coeff in vec._terms.items():
                row[index[mono]] = coeff
            rows.append(row)
    return SubmoduleSlice(dim_space=len(basis), dim_submodule=linalg.rank(rows))
