"""Rank-one index groups for the generalized Schrodinger-Virasoro family.

The algebras handled by this package are graded by a subgroup G of the
rationals together with a shifted coset G1 = alpha + G.  A presentation
fixes a generator g > 0, a finite set P of odd primes whose inverses are
adjoined, and an odd integer m fixing alpha = m*g/2:

    G = g * Z[1/P],    G1 = alpha + G,    T = G u G1 = (g/2) * Z[1/P].

Because m is odd and 2 is never inverted, alpha lies outside G while
2*alpha lies inside, so G and G1 are disjoint and T is again a group.
Everything downstream (bracket table, module theory) needs only exact
membership tests, a total order on T, and the multiplicative characters
of T, all provided here on top of stdlib Fraction arithmetic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from typing import Iterable, Optional, Union

from .errors import DomainError

Rational = Union[Fraction, int, str]


def as_rational(x: Rational) -> Fraction:
    """Coerce ints, 'p/q' strings and Fractions to an exact Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, bool):
        raise DomainError("booleans are not rationals")
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        try:
            return Fraction(x.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise DomainError(f"not a rational: {x!r}") from exc
    raise DomainError(f"cannot interpret {type(x).__name__} as a rational")


class EvenPrimeInverted(DomainError):
    pass


class EvenM(DomainError):
    pass


class NonPositiveGenerator(DomainError):
    pass


class NotAPrime(DomainError):
    pass


class IndexOutsideT(DomainError):
    pass


class UnrepresentableRoot(DomainError):
    pass


class ZeroScale(DomainError):
    pass


class ElementClass(Enum):
    IN_G = "InG"
    IN_G1 = "InG1"
    OUTSIDE = "Outside"


class Ordering(Enum):
    LESS = "Less"
    EQUAL = "Equal"
    GREATER = "Greater"


class Density(Enum):
    DISCRETE = "Discrete"
    DENSE = "Dense"


class Direction(Enum):
    NATURAL = "natural"
    REVERSED = "reversed"


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    d = 2
    while d * d <= n:
        if n % d == 0:
            return False
        d += 1
    return True


@dataclass(frozen=True)
class GroupPresentation:
    """G = g*Z[1/P] with the half-shift alpha = m*g/2 and a total order."""

    g: Fraction
    primes: frozenset[int]
    m: int
    direction: Direction = Direction.NATURAL

    @property
    def alpha(self) -> Fraction:
        return self.m * self.g / 2

    @property
    def step(self) -> Fraction:
        """Generator g/2 of the ambient group T."""
        return self.g / 2

    def in_lattice(self, q: Fraction) -> bool:
        """Is q in Z[1/P], i.e. does its denominator factor over P?"""
        d = q.denominator
        for p in self.primes:
            while d % p == 0:
                d //= p
        return d == 1

    def classify(self, x: Rational) -> ElementClass:
        x = as_rational(x)
        if self.in_lattice(x / self.g):
            return ElementClass.IN_G
        if self.in_lattice((x - self.alpha) / self.g):
            return ElementClass.IN_G1
        return ElementClass.OUTSIDE

    def in_T(self, x: Rational) -> bool:
        return self.classify(x) is not ElementClass.OUTSIDE

    # Order helpers.  okey is monotone for the presentation's order, so
    # every comparison below reduces to ordinary Fraction comparison.
    def okey(self, x: Rational) -> Fraction:
        x = as_rational(x)
        return -x if self.direction is Direction.REVERSED else x

    def cmp(self, x: Rational, y: Rational) -> Ordering:
        a, b = self.okey(x), self.okey(y)
        if a < b:
            return Ordering.LESS
        if a == b:
            return Ordering.EQUAL
        return Ordering.GREATER

    def is_positive(self, x: Rational) -> bool:
        return self.okey(x) > 0

    def maximum(self, xs: Iterable[Rational]) -> Fraction:
        return max((as_rational(x) for x in xs), key=self.okey)

    def density(self) -> Density:
        return Density.DENSE if self.primes else Density.DISCRETE

    def positive_values(
        self,
        bound: Rational,
        caps: Optional[dict[int, int]] = None,
    ) -> list[Fraction]:
        """Order-positive x in T with okey(x) <= bound, for a plain
        rational magnitude bound; denominators are restricted to the
        exponent caps (needed for Dense instances).

        Returned sorted ascending in the order.  For a Discrete instance
        caps are irrelevant and the list is the arithmetic progression
        g/2, g, 3g/2, ... up to the bound (negated under reversal).
        """
        limit = as_rational(bound)
        if limit <= 0:
            return []
        caps = caps or {}
        denominators = [1]
        for p in sorted(self.primes):
            e_max = caps.get(p, 0)
            denominators = [d * p**e for d in denominators for e in range(e_max + 1)]
        sgn = -1 if self.direction is Direction.REVERSED else 1
        step = self.step
        found = set()
        for d in denominators:
            n_max = (limit * d) // step
            for n in range(1, int(n_max) + 1):
                found.add(sgn * step * Fraction(n, d))
        return sorted(found, key=self.okey)


def make_group(
    g: Rational,
    primes: Iterable[int] = (),
    m: int = 1,
    direction: Union[Direction, str] = Direction.NATURAL,
) -> GroupPresentation:
    g = as_rational(g)
    if g <= 0:
        raise NonPositiveGenerator(f"generator must be positive, got {g}")
    pset = set()
    for p in primes:
        p = int(p)
        if p == 2 or p % 2 == 0:
            raise EvenPrimeInverted("inverting 2 would pull alpha into G")
        if not _is_prime(p):
            raise NotAPrime(f"{p} is not prime")
        pset.add(p)
    if not isinstance(m, int) or m % 2 == 0:
        raise EvenM(f"shift multiplier must be an odd integer, got {m!r}")
    if isinstance(direction, str):
        try:
            direction = Direction(direction)
        except ValueError:
            raise DomainError(f"unknown order direction {direction!r}") from None
    return GroupPresentation(g=g, primes=frozenset(pset), m=m, direction=direction)


def classify(gp: GroupPresentation, x: Rational) -> ElementClass:
    return gp.classify(x)


def order_cmp(gp: GroupPresentation, x: Rational, y: Rational) -> Ordering:
    return gp.cmp(x, y)


def order_density(gp: GroupPresentation) -> Density:
    return gp.density()


@dataclass(frozen=True)
class Character:
    """Multiplicative character of T determined by its value t at g/2.

    T is generated over Z[1/P] by g/2, so chi is fixed by t = chi(g/2).
    When some odd prime is inverted, exponents acquire denominators
    p^j and t must admit exact p^j-th roots for all j; inside the
    rationals that forces t in {1, -1}, where the unique odd root of
    -1 is -1 itself.  With no primes inverted any nonzero t works.
    """

    group: GroupPresentation
    t: Fraction

    def __post_init__(self):
        t = as_rational(self.t)
        object.__setattr__(self, "t", t)
        if t == 0:
            raise ZeroScale("character values must be invertible; got t=0")
        if self.group.primes and t not in (1, -1):
            raise UnrepresentableRoot(
                f"t={t} has no exact p-th roots; only 1 and -1 are "
                "representable once a prime is inverted"
            )

    def __call__(self, x: Rational) -> Fraction:
        return char_eval(self, x)


def char_eval(chi: Character, x: Rational) -> Fraction:
    """chi(x) = t**(x/(g/2)), exact.

    The exponent e = 2x/g lies in Z[1/P]; write e = k/d in lowest terms
    with d an odd product of primes from P.  For t = +-1 the unique
    rational d-th root of t**k is (+-1)**k; otherwise d = 1 and the
    value is a plain integer power.
    """
    gp = chi.group
    x = as_rational(x)
    if not gp.in_T(x):
        raise IndexOutsideT(f"{x} is not in T")
    e = x / gp.step
    k = e.numerator
    if chi.t == 1:
        return Fraction(1)
    if chi.t == -1:
        return Fraction(-1 if k % 2 else 1)
    # no primes inverted, so e is an integer
    return chi.t**k


def member_S(gp: GroupPresentation, a: Rational) -> bool:
    """Does scaling by a preserve the presentation (aG = G and aT = T)?

    Holds exactly when a is a unit of Z[1/P]: both a and 1/a lie in
    Z[1/P], i.e. numerator and denominator factor over P up to sign.
    """
    a = as_rational(a)
    if a == 0:
        raise ZeroScale("0 does not scale anything invertibly")
    return gp.in_lattice(a) and gp.in_lattice(1 / a)


def iso_scale(gp: GroupPresentation, gp2: GroupPresentation) -> Optional[Fraction]:
    """Canonical scale a with a*G = G' and a*T = T', if one exists.

    Two presentations carry isomorphic structure exactly when the same
    primes are inverted; then a = g'/g works (any other choice differs
    by a unit of Z[1/P]).  Distinct prime sets scale onto each other by
    no rational at all, so None is returned.
    """
    if gp.primes != gp2.primes:
        return None
    return gp2.g / gp.g
