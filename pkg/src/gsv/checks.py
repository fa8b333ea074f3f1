"""Seeded invariant suites over random or exhaustive windows.

Each suite replays deterministically from its seed and returns a
CheckReport listing every violation it found.  The suites double as
the CLI `check` subcommands and as oracles in the test suite:

    jacobi      cyclic bracket identity on symbol triples
    ideal       brackets against span(M, Y) stay inside it
    rewrite     raising M against L-strings drops the L-length by one
                modulo two, and raising L on M-strings matches the
                exact deletion formula
    vanishing   raising Y kills Y-strings beyond (or at, when c = 0)
                the largest part
    filtration  raising M lowers the L-length filtration
    relations   automorphism families: residuals, composition laws,
                inversion, conjugation closures
"""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from . import automorphisms as aut
from . import verma
from .groups import Character, Density, ElementClass, GroupPresentation, as_rational
from .lie import (
    GeneratorSymbol,
    LieElement,
    bracket,
    ideal_membership,
    jacobi_residual,
)
from .verma import (
    HighestWeight,
    Truncation,
    VermaVector,
    act_generator,
    act_word,
    highest_weight_vector,
    length_of,
    monomial_vector,
)


@dataclass
class CheckReport:
    suite: str
    cases: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, ok: bool, describe: Callable[[], str]) -> None:
        self.cases += 1
        if not ok:
            self.failures.append(describe())

    def as_dict(self) -> dict:
        return {
            "suite": self.suite,
            "cases": self.cases,
            "failures": list(self.failures),
            "passed": self.passed,
        }


def _caps_for(gp: GroupPresentation, trunc: Optional[Truncation]) -> Optional[dict[int, int]]:
    if trunc is not None and trunc.caps:
        return trunc.caps
    if gp.density() is Density.DENSE:
        return {p: 2 for p in gp.primes}
    return None


def window_symbols(
    gp: GroupPresentation, bound, caps: Optional[dict[int, int]] = None
) -> list[GeneratorSymbol]:
    """Every basis symbol with |okey(index)| at most the bound (within caps)."""
    syms = [GeneratorSymbol("L", Fraction(0)), GeneratorSymbol("M", Fraction(0))]
    for v in gp.positive_values(bound, caps):
        if gp.classify(v) is ElementClass.IN_G:
            syms += [
                GeneratorSymbol("L", v),
                GeneratorSymbol("L", -v),
                GeneratorSymbol("M", v),
                GeneratorSymbol("M", -v),
            ]
        else:
            syms += [GeneratorSymbol("Y", v), GeneratorSymbol("Y", -v)]
    syms.sort(key=GeneratorSymbol.sort_key)
    return syms


def sample_g_value(
    rng: random.Random,
    gp: GroupPresentation,
    bound,
    caps: Optional[dict[int, int]] = None,
    nonzero: bool = False,
    positive: bool = False,
) -> Fraction:
    """Random element of G with |okey| <= bound, uniform over the window grid."""
    caps = caps or {}
    d = 1
    for p in sorted(gp.primes):
        d *= p ** rng.randint(0, caps.get(p, 0))
    n_max = int(as_rational(bound) * d / gp.g)
    lo = 1 if (positive or nonzero) else -n_max
    if positive:
        n = rng.randint(1, max(1, n_max))
    else:
        n = rng.randint(lo, n_max)
        while nonzero and n == 0:
            n = rng.randint(lo, n_max)
    value = gp.g * Fraction(n, d)
    if positive and gp.direction.value == "reversed":
        value = -value
    return value


def sample_ypart(
    rng: random.Random,
    gp: GroupPresentation,
    bound,
    caps: Optional[dict[int, int]] = None,
) -> Fraction:
    """Random G element k beyond alpha (a Y(alpha-k) lowering letter)."""
    e = sample_g_value(rng, gp, bound, caps)
    delta = gp.alpha + e
    if gp.okey(delta) < 0:
        delta = -delta
    return gp.alpha + delta


def sample_symbol(
    rng: random.Random,
    gp: GroupPresentation,
    bound,
    caps: Optional[dict[int, int]] = None,
    kinds: str = "LMY",
) -> GeneratorSymbol:
    kind = rng.choice(kinds)
    base = sample_g_value(rng, gp, bound, caps)
    if kind == "Y":
        return GeneratorSymbol("Y", gp.alpha + base)
    return GeneratorSymbol(kind, base)


def sample_element(
    rng: random.Random,
    gp: GroupPresentation,
    bound,
    caps: Optional[dict[int, int]] = None,
    terms: int = 2,
    kinds: str = "LMY",
) -> LieElement:
    out: dict[GeneratorSymbol, Fraction] = {}
    for _ in range(rng.randint(1, terms)):
        sym = sample_symbol(rng, gp, bound, caps, kinds)
        coeff = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
        if coeff == 0:
            coeff = Fraction(1)
        out[sym] = out.get(sym, Fraction(0)) + coeff
    e = LieElement(gp, out)
    if e.is_zero:
        e = LieElement(gp, {sample_symbol(rng, gp, bound, caps, kinds): Fraction(1)})
    return e


def _sample_monomial_at_depth(
    rng: random.Random,
    gp: GroupPresentation,
    depth: Fraction,
    caps: Optional[dict[int, int]],
):
    """Random PBW monomial of exactly the given depth.

    Splits the depth into random admissible lattice values front to
    back; any order-positive remainder is itself a valid final part,
    so the walk always terminates.
    """
    lparts: list[Fraction] = []
    mparts: list[Fraction] = []
    yparts: list[Fraction] = []
    remaining = depth
    while gp.okey(remaining) > 0:
        candidates = gp.positive_values(abs(remaining), caps)
        v = rng.choice(candidates)
        if gp.classify(v) is ElementClass.IN_G:
            (lparts if rng.random() < 0.5 else mparts).append(v)
        else:
            yparts.append(gp.alpha + v)
        remaining -= v
    return verma.make_monomial(gp, lparts, mparts, yparts)


def sample_homogeneous_vector(
    rng: random.Random,
    gp: GroupPresentation,
    hw: HighestWeight,
    max_depth,
    trunc: Optional[Truncation] = None,
) -> VermaVector:
    """Random nonzero homogeneous vector of random admissible depth."""
    caps = _caps_for(gp, trunc)
    depths = gp.positive_values(as_rational(max_depth), caps)
    depth = rng.choice(depths)
    terms = {}
    for _ in range(rng.randint(1, 3)):
        mono = _sample_monomial_at_depth(rng, gp, depth, caps)
        coeff = Fraction(rng.randint(1, 9) * rng.choice((1, -1)), rng.randint(1, 3))
        terms[mono] = coeff
    return VermaVector(gp, hw, terms)


# ---------------------------------------------------------------- suites


def check_jacobi(
    gp: GroupPresentation,
    hw: Optional[HighestWeight] = None,
    window=5,
    samples: int = 500,
    seed: int = 0,
    trunc: Optional[Truncation] = None,
) -> CheckReport:
    report = CheckReport("jacobi")
    caps = _caps_for(gp, trunc)
    if gp.density() is Density.DISCRETE:
        syms = window_symbols(gp, window)
        singles = [LieElement(gp, {s: Fraction(1)}) for s in syms]
        for a in singles:
            for b in singles:
                for c in singles:
                    r = jacobi_residual(a, b, c)
                    report.record(
                        r.is_zero, lambda a=a, b=b, c=c: f"jacobi fails on {a},{b},{c}"
                    )
    else:
        rng = random.Random(seed)
        for _ in range(samples):
            a, b, c = (
                LieElement(
                    gp, {sample_symbol(rng, gp, window, caps): Fraction(1)}
                )
                for _ in range(3)
            )
            r = jacobi_residual(a, b, c)
            report.record(
                r.is_zero, lambda a=a, b=b, c=c: f"jacobi fails on {a},{b},{c}"
            )
    return report


def check_ideal(
    gp: GroupPresentation,
    hw: Optional[HighestWeight] = None,
    window=5,
    samples: int = 500,
    seed: int = 0,
    trunc: Optional[Truncation] = None,
) -> CheckReport:
    report = CheckReport("ideal")
    caps = _caps_for(gp, trunc)
    rng = random.Random(seed)
    for _ in range(samples):
        x = sample_element(rng, gp, window, caps)
        y = sample_element(rng, gp, window, caps, kinds="MY")
        ok = ideal_membership(bracket(x, y))
        report.record(ok, lambda x=x, y=y: f"[{x}, {y}] escaped the ideal")
    return report


def _sample_unit(rng: random.Random, gp: GroupPresentation) -> Fraction:
    a = Fraction(rng.choice((1, -1)))
    for p in sorted(gp.primes):
        a *= Fraction(p) ** rng.randint(-2, 2)
    return a


def _sample_diag(rng: random.Random, gp: GroupPresentation) -> aut.Automorphism:
    if gp.primes:
        t = rng.choice((1, -1))
    else:
        t = Fraction(rng.randint(1, 5), rng.randint(1, 5)) * rng.choice((1, -1))
    s = Fraction(rng.randint(1, 5), rng.randint(1, 4)) * rng.choice((1, -1))
    return aut.diagonal(gp, t, s)


def _sample_primitive(
    rng: random.Random,
    gp: GroupPresentation,
    window,
    caps,
    family: Optional[str] = None,
) -> aut.Automorphism:
    family = family or rng.choice(("diag", "scale", "cocycle", "inner"))
    if family == "diag":
        return _sample_diag(rng, gp)
    if family == "scale":
        return aut.scale(gp, _sample_unit(rng, gp))
    if family == "cocycle":
        return aut.cocycle(gp, Fraction(rng.randint(-6, 6), rng.randint(1, 3)))
    return aut.exp_ad(sample_element(rng, gp, window, caps, kinds="MY"))


def _acts_equally(
    f: aut.ElementMap,
    g: aut.ElementMap,
    gp: GroupPresentation,
    window,
    caps,
) -> bool:
    fa = f.apply if isinstance(f, aut.Automorphism) else f
    ga = g.apply if isinstance(g, aut.Automorphism) else g
    for sym in window_symbols(gp, window, caps):
        e = LieElement(gp, {sym: Fraction(1)})
        if fa(e) != ga(e):
            return False
    return True


def check_relations(
    gp: GroupPresentation,
    hw: Optional[HighestWeight] = None,
    window=4,
    samples: int = 200,
    seed: int = 0,
    trunc: Optional[Truncation] = None,
    chains: int = 50,
) -> CheckReport:
    report = CheckReport("relations")
    caps = _caps_for(gp, trunc)
    rng = random.Random(seed)

    tested: list[aut.Automorphism] = [
        _sample_primitive(rng, gp, window, caps, family)
        for family in ("diag", "scale", "cocycle", "inner")
    ]
    for _ in range(chains):
        theta = aut.identity(gp)
        for _ in range(rng.randint(1, 4)):
            theta = aut.Automorphism(
                gp, theta.chain + _sample_primitive(rng, gp, window, caps).chain
            )
        tested.append(theta)

    for n, theta in enumerate(tested):
        pairs = [
            (
                sample_element(rng, gp, window, caps),
                sample_element(rng, gp, window, caps),
            )
            for _ in range(samples)
        ]
        bad = aut.hom_residual(theta, pairs)
        report.cases += len(pairs)
        for (x, y), res in bad:
            report.failures.append(f"chain #{n}: residual {res} at [{x}, {y}]")

    # composition: merged chains act like sequential application
    for _ in range(20):
        t1 = _sample_primitive(rng, gp, window, caps)
        t2 = _sample_primitive(rng, gp, window, caps)
        both = aut.compose(t1, t2)
        e = sample_element(rng, gp, window, caps)
        ok = both.apply(e) == t1.apply(t2.apply(e))
        report.record(ok, lambda t1=t1, t2=t2: "compose disagrees with sequencing")

    # same-family composition merges to a single primitive
    for family in ("diag", "scale", "cocycle", "inner"):
        t1 = _sample_primitive(rng, gp, window, caps, family)
        t2 = _sample_primitive(rng, gp, window, caps, family)
        merged = aut.compose(t1, t2)
        report.record(
            len(merged.chain) <= 1,
            lambda family=family: f"{family}*{family} failed to merge",
        )

    # inversion
    for _ in range(10):
        theta = rng.choice(tested)
        ok = _acts_equally(
            aut.compose(theta, aut.invert(theta)), aut.identity(gp), gp, window, caps
        )
        report.record(ok, lambda: "theta * theta^-1 is not the identity")

    # conjugation closures
    for _ in range(10):
        lam = Fraction(rng.randint(-5, 5), rng.randint(1, 3))
        coc = aut.cocycle(gp, lam)
        diag = _sample_diag(rng, gp)
        d = diag.chain[0]
        conj = aut.compose(aut.compose(diag, coc), aut.invert(diag))
        expected = aut.cocycle(gp, lam * d.s * d.s)
        report.record(
            _acts_equally(conj, expected, gp, window, caps),
            lambda: "diag conjugate of a cocycle left the cocycle family",
        )

        a = _sample_unit(rng, gp)
        sc = aut.scale(gp, a)
        conj = aut.compose(aut.compose(sc, coc), aut.invert(sc))
        expected = aut.cocycle(gp, lam / a)
        report.record(
            _acts_equally(conj, expected, gp, window, caps),
            lambda: "scale conjugate of a cocycle left the cocycle family",
        )

        x = sample_element(rng, gp, window, caps, kinds="MY")
        theta = rng.choice(tested)
        conj = aut.compose(aut.compose(theta, aut.exp_ad(x)), aut.invert(theta))
        expected = aut.exp_ad(theta.apply(x))
        report.record(
            _acts_equally(conj, expected, gp, window, caps),
            lambda: "conjugate of exp(ad x) is not exp(ad theta(x))",
        )

        diag2 = _sample_diag(rng, gp)
        a2 = _sample_unit(rng, gp)
        sc2 = aut.scale(gp, a2)
        conj = aut.compose(aut.compose(sc2, diag2), aut.invert(sc2))
        d2 = diag2.chain[0]
        transported = aut.Automorphism(
            gp,
            (
                aut.Diagonal(
                    Character(gp, _transport_t(d2.character, a2, gp)), d2.s
                ),
            ),
        )
        report.record(
            _acts_equally(conj, transported, gp, window, caps),
            lambda: "scale conjugate of a diagonal left the diagonal family",
        )
    return report


def _transport_t(chi: Character, a: Fraction, gp: GroupPresentation) -> Fraction:
    """Parameter of x -> chi(x / a): evaluate at the generator g/2."""
    from .groups import char_eval

    return char_eval(chi, gp.step / a)


def check_rewrite(
    gp: GroupPresentation,
    hw: Optional[HighestWeight] = None,
    window=3,
    samples: int = 300,
    seed: int = 0,
    trunc: Optional[Truncation] = None,
) -> CheckReport:
    report = CheckReport("rewrite")
    hw = hw or HighestWeight(Fraction(1), Fraction(0))
    caps = _caps_for(gp, trunc)
    rng = random.Random(seed)
    alpha = gp.alpha

    for _ in range(samples):
        r = rng.randint(1, 3)
        lparts = sorted(
            (sample_g_value(rng, gp, window, caps, positive=True) for _ in range(r)),
            key=gp.okey,
        )
        mparts = sorted(
            (
                sample_g_value(rng, gp, window, caps, positive=True)
                for _ in range(rng.randint(0, 2))
            ),
            key=gp.okey,
        )
        yparts = sorted(
            (sample_ypart(rng, gp, window, caps) for _ in range(rng.randint(0, 2))),
            key=gp.okey,
        )
        base = monomial_vector(gp, hw, lparts, mparts, yparts)
        j = sample_g_value(rng, gp, window, caps, positive=True)

        lhs = act_generator(GeneratorSymbol("M", j), base)
        tail = [GeneratorSymbol("M", -jj) for jj in mparts] + [
            GeneratorSymbol("Y", alpha - k) for k in yparts
        ]
        rhs = VermaVector(gp, hw, {})
        for p in range(r):
            kept = [GeneratorSymbol("L", -i) for q, i in enumerate(lparts) if q != p]
            word = kept + [GeneratorSymbol("M", j - lparts[p])] + tail
            rhs = rhs + act_word(word, highest_weight_vector(gp, hw))
        rhs = rhs.scaled(-j)
        diff = lhs - rhs
        ok = diff.is_zero or length_of(diff) <= r - 2
        report.record(
            ok,
            lambda lparts=lparts, j=j: f"M({j}) on L-string {lparts} broke the rewrite",
        )

    for _ in range(samples):
        r = rng.randint(1, 4)
        mparts = sorted(
            (sample_g_value(rng, gp, window, caps, positive=True) for _ in range(r)),
            key=gp.okey,
        )
        beyond = rng.random() < 0.4
        if beyond:
            j = gp.maximum(mparts) + sample_g_value(rng, gp, window, caps, positive=True)
        else:
            j = sample_g_value(rng, gp, window, caps, positive=True)
        base = monomial_vector(gp, hw, mparts=mparts)
        lhs = act_generator(GeneratorSymbol("L", j), base)
        rhs = VermaVector(gp, hw, {})
        for p in range(r):
            kept = [GeneratorSymbol("M", -i) for q, i in enumerate(mparts) if q != p]
            word = kept + [GeneratorSymbol("M", j - mparts[p])]
            rhs = rhs + act_word(word, highest_weight_vector(gp, hw)).scaled(-mparts[p])
        ok = lhs == rhs
        if beyond:
            ok = ok and lhs.is_zero
        report.record(
            ok,
            lambda mparts=mparts, j=j: f"L({j}) on M-string {mparts} broke the formula",
        )
    return report


def check_vanishing(
    gp: GroupPresentation,
    hw: Optional[HighestWeight] = None,
    window=3,
    samples: int = 300,
    seed: int = 0,
    trunc: Optional[Truncation] = None,
) -> CheckReport:
    report = CheckReport("vanishing")
    hw = hw or HighestWeight(Fraction(1), Fraction(0))
    hw0 = HighestWeight(Fraction(0), hw.h)
    caps = _caps_for(gp, trunc)
    rng = random.Random(seed)
    alpha = gp.alpha

    for _ in range(samples):
        t = rng.randint(1, 3)
        yparts = sorted(
            (sample_ypart(rng, gp, window, caps) for _ in range(t)),
            key=gp.okey,
        )
        k_top = yparts[-1]
        j_beyond = k_top + sample_g_value(rng, gp, window, caps, positive=True)
        for module, j, expect_zero in (
            (hw, j_beyond, True),
            (hw0, j_beyond, True),
            (hw, k_top, None),
            (hw0, k_top, True),
        ):
            base = monomial_vector(gp, module, yparts=yparts)
            out = act_generator(GeneratorSymbol("Y", -alpha + j), base)
            if expect_zero is None:
                continue
            report.record(
                out.is_zero == expect_zero,
                lambda yparts=yparts, j=j, module=module: (
                    f"Y(-alpha+{j}) on Y-string {yparts} at c={module.c} "
                    f"should vanish"
                ),
            )
    return report


def check_filtration(
    gp: GroupPresentation,
    hw: Optional[HighestWeight] = None,
    window=3,
    samples: int = 300,
    seed: int = 0,
    trunc: Optional[Truncation] = None,
) -> CheckReport:
    report = CheckReport("filtration")
    hw = hw or HighestWeight(Fraction(1), Fraction(0))
    caps = _caps_for(gp, trunc)
    rng = random.Random(seed)

    for _ in range(samples):
        terms = {}
        for _ in range(rng.randint(1, 3)):
            lparts = [
                sample_g_value(rng, gp, window, caps, positive=True)
                for _ in range(rng.randint(0, 3))
            ]
            mparts = [
                sample_g_value(rng, gp, window, caps, positive=True)
                for _ in range(rng.randint(0, 2))
            ]
            yparts = [
                sample_ypart(rng, gp, window, caps) for _ in range(rng.randint(0, 2))
            ]
            mono = verma.make_monomial(gp, lparts, mparts, yparts)
            terms[mono] = Fraction(rng.randint(1, 5) * rng.choice((1, -1)))
        v = VermaVector(gp, hw, terms)
        r = length_of(v)
        j = sample_g_value(rng, gp, window, caps, positive=True)
        out = act_generator(GeneratorSymbol("M", j), v)
        ok = out.is_zero or length_of(out) <= r - 1
        report.record(ok, lambda r=r, j=j: f"M({j}) kept length {r}")
    return report


SUITES: dict[str, Callable[..., CheckReport]] = {
    "jacobi": check_jacobi,
    "ideal": check_ideal,
    "rewrite": check_rewrite,
    "vanishing": check_vanishing,
    "filtration": check_filtration,
    "relations": check_relations,
}
