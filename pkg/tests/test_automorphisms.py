import random
from fractions import Fraction as F

import pytest

from gsv import (
    Character,
    bracket,
    build_isomorphism,
    canonical_shape,
    cocycle,
    compose,
    diagonal,
    exp_ad,
    generator,
    hom_residual,
    identity,
    invert,
    iso_scale,
    make_group,
    scale,
    validate_cocycle,
)
from gsv.automorphisms import (
    Automorphism,
    Cocycle,
    Diagonal,
    Inner,
    NotInIdeal,
    Scale,
    ScaleNotAdmissible,
)
from gsv.checks import sample_element, window_symbols
from gsv.lie import LieElement


def L(gp, u):
    return generator(gp, "L", u)


def M(gp, u):
    return generator(gp, "M", u)


def Y(gp, x):
    return generator(gp, "Y", x)


def acts_equally(f, g, gp, window=3):
    fa = f.apply if hasattr(f, "apply") else f
    ga = g.apply if hasattr(g, "apply") else g
    return all(
        fa(LieElement(gp, {s: F(1)})) == ga(LieElement(gp, {s: F(1)}))
        for s in window_symbols(gp, window)
    )


class TestPrimitives:
    def test_diagonal_frozen_values(self, standard):
        # chi is fixed by t = chi(g/2), so chi(u) = t^(u/(g/2))
        theta = diagonal(standard, 2, 3)
        assert theta.apply(M(standard, 1)) == M(standard, 1).scaled(36)  # s^2 t^2
        assert theta.apply(L(standard, 2)) == L(standard, 2).scaled(16)  # t^4
        assert theta.apply(Y(standard, F(1, 2))) == Y(standard, F(1, 2)).scaled(6)

    def test_diagonal_rejects_zero_s(self, standard):
        with pytest.raises(ScaleNotAdmissible):
            diagonal(standard, 1, 0)

    def test_scale_moves_indices(self, standard):
        theta = scale(standard, -1)
        assert theta.apply(L(standard, 2)) == L(standard, -2).scaled(-1)
        assert theta.apply(Y(standard, F(1, 2))) == Y(standard, F(-1, 2)).scaled(-1)

    def test_scale_admissibility(self, standard, dense):
        with pytest.raises(ScaleNotAdmissible):
            scale(standard, 2)
        assert scale(dense, F(1, 3)).apply(M(dense, 3)) == M(dense, 1).scaled(3)

    def test_cocycle_shears_L_only(self, standard):
        theta = cocycle(standard, F(5, 2))
        assert theta.apply(L(standard, 2)) == L(standard, 2) + M(standard, 2).scaled(5)
        assert theta.apply(L(standard, 0)) == L(standard, 0)
        assert theta.apply(M(standard, 2)) == M(standard, 2)
        assert theta.apply(Y(standard, F(1, 2))) == Y(standard, F(1, 2))

    def test_exp_ad_frozen_values(self, standard):
        theta = exp_ad(Y(standard, F(1, 2)))
        assert theta.apply(L(standard, -1)) == (
            L(standard, -1) - Y(standard, F(-1, 2)) + M(standard, 0).scaled(F(1, 2))
        )
        theta = exp_ad(M(standard, 5))
        assert theta.apply(L(standard, 1)) == L(standard, 1) - M(standard, 6).scaled(5)

    def test_exp_ad_requires_ideal_element(self, standard):
        with pytest.raises(NotInIdeal):
            exp_ad(L(standard, 1))

    def test_exp_ad_quadratic_term(self, standard):
        from gsv import GeneratorSymbol

        # theta(L_{-1}) = L_{-1} - 2 Y_{-1/2} + 2 M_0: the quadratic term
        # carries the exact 1/2 factor of the truncated exponential
        x = Y(standard, F(1, 2)).scaled(2)
        out = exp_ad(x).apply(L(standard, -1))
        assert out.coeff(GeneratorSymbol("M", F(0))) == F(2)
        assert out.coeff(GeneratorSymbol("Y", F(-1, 2))) == F(-2)


class TestHomomorphism:
    def test_all_primitives_preserve_brackets(self, standard, dense):
        rng = random.Random(11)
        for gp in (standard, dense):
            caps = {p: 1 for p in gp.primes} or None
            thetas = [
                diagonal(gp, -1, F(3, 2)),
                scale(gp, -1),
                cocycle(gp, F(2, 3)),
                exp_ad(M(gp, 1) + Y(gp, F(1, 2)).scaled(F(-1, 2))),
            ]
            pairs = [
                (sample_element(rng, gp, 3, caps), sample_element(rng, gp, 3, caps))
                for _ in range(40)
            ]
            for theta in thetas:
                assert hom_residual(theta, pairs) == []

    def test_residual_flags_non_homomorphism(self, standard):
        def fake(e):
            return e + M(standard, 0)  # shifts, destroys additivity of brackets

        pairs = [(L(standard, 1), L(standard, -1))]
        bad = hom_residual(fake, pairs)
        assert len(bad) == 1
        (xy, res) = bad[0]
        assert not res.is_zero


class TestComposition:
    def test_same_family_merges(self, standard):
        d = compose(diagonal(standard, 2, 3), diagonal(standard, -1, F(1, 3)))
        assert len(d.chain) == 1 and isinstance(d.chain[0], Diagonal)
        assert d.chain[0].character.t == -2 and d.chain[0].s == 1

        s = compose(scale(standard, -1), scale(standard, -1))
        assert s.chain == ()  # merged to scale(1) == identity, then dropped

        c = compose(cocycle(standard, 2), cocycle(standard, F(1, 2)))
        assert len(c.chain) == 1 and c.chain[0].slope == F(5, 2)

    def test_inner_merge_is_bch(self, standard):
        x = M(standard, 1) + Y(standard, F(1, 2))
        y = Y(standard, F(3, 2)).scaled(2)
        merged = compose(exp_ad(x), exp_ad(y))
        assert len(merged.chain) == 1 and isinstance(merged.chain[0], Inner)
        # exact BCH: x + y + [x, y]/2  (series stops: [I, I] is central in I)
        expected = x + y + bracket(x, y).scaled(F(1, 2))
        assert merged.chain[0].x == expected
        # and the merged map acts like the sequential pair
        seq = lambda e: exp_ad(x).apply(exp_ad(y).apply(e))
        assert acts_equally(merged, seq, standard)

    def test_compose_acts_like_sequencing(self, standard):
        t1 = compose(diagonal(standard, 2, 1), cocycle(standard, 3))
        t2 = compose(scale(standard, -1), exp_ad(M(standard, 2)))
        both = compose(t1, t2)
        seq = lambda e: t1.apply(t2.apply(e))
        assert acts_equally(both, seq, standard)

    def test_invert_round_trip(self, standard):
        theta = compose(
            compose(diagonal(standard, 2, 3), cocycle(standard, F(1, 2))),
            compose(scale(standard, -1), exp_ad(Y(standard, F(1, 2)))),
        )
        assert acts_equally(compose(theta, invert(theta)), identity(standard), standard)
        assert acts_equally(compose(invert(theta), theta), identity(standard), standard)

    def test_identity_is_empty_chain(self, standard):
        assert identity(standard).chain == ()
        assert compose(identity(standard), identity(standard)).chain == ()


class TestConjugation:
    def test_diag_conjugate_of_cocycle(self, standard):
        lam = F(3, 2)
        diag = diagonal(standard, 5, F(2, 3))
        conj = compose(compose(diag, cocycle(standard, lam)), invert(diag))
        assert acts_equally(conj, cocycle(standard, lam * F(4, 9)), standard)

    def test_scale_conjugate_of_cocycle(self, standard):
        lam = F(3)
        sc = scale(standard, -1)
        conj = compose(compose(sc, cocycle(standard, lam)), invert(sc))
        assert acts_equally(conj, cocycle(standard, -lam), standard)

    def test_conjugate_of_inner(self, standard):
        x = M(standard, 1) + Y(standard, F(1, 2)).scaled(2)
        theta = compose(diagonal(standard, 2, 3), scale(standard, -1))
        conj = compose(compose(theta, exp_ad(x)), invert(theta))
        assert acts_equally(conj, exp_ad(theta.apply(x)), standard)

    def test_scale_conjugate_of_diagonal(self, dense):
        from gsv.groups import char_eval

        diag = diagonal(dense, -1, F(5, 2))
        sc = scale(dense, 3)
        conj = compose(compose(sc, diag), invert(sc))
        chi = diag.chain[0].character
        t_moved = char_eval(chi, dense.step / 3)
        assert acts_equally(conj, diagonal(dense, t_moved, F(5, 2)), dense)


class TestCocycleTable:
    def test_linear_table_is_cocycle(self, standard):
        window = [F(u) for u in range(1, 4)]
        lam = F(7, 3)
        table = {F(u): lam * u for u in range(-6, 7)}
        assert validate_cocycle(table, window, standard)

    def test_broken_table_rejected(self, standard):
        table = {F(u): F(u * u) for u in range(-6, 7)}  # even function: fails oddness
        assert not validate_cocycle(table, [F(1), F(2)], standard)

    def test_missing_entry(self, standard):
        from gsv.automorphisms import MissingEntry

        with pytest.raises(MissingEntry):
            validate_cocycle({F(1): F(1)}, [F(1)], standard)


class TestCanonicalShape:
    def test_scale_shape(self, standard):
        rep = canonical_shape(scale(standard, -1).apply, standard)
        assert rep.ok and rep.a == -1
        assert set(rep.b.values()) == {F(-1)}

    def test_diagonal_shape(self, standard):
        rep = canonical_shape(diagonal(standard, 1, 2).apply, standard)
        assert rep.ok and rep.a == 1
        assert set(rep.b.values()) == {F(4)}  # s^2 on every M_u

    def test_compound_chain_still_canonical(self, standard):
        theta = compose(
            compose(scale(standard, -1), diagonal(standard, 3, F(1, 2))),
            exp_ad(M(standard, 1)),
        )
        rep = canonical_shape(theta.apply, standard)
        assert rep.ok and rep.a == -1

    def test_non_automorphism_flagged(self, standard):
        def mangle(e):
            return LieElement(
                standard, {s.__class__("L", s.index): c for s, c in e.terms()}
            )

        rep = canonical_shape(mangle, standard)
        assert not rep.ok and rep.problems


class TestIsomorphism:
    @pytest.mark.parametrize("target_g", [3, 5])
    def test_scale_map_preserves_brackets(self, standard, target_g):
        other = make_group(target_g, (), 1)
        assert other.alpha == F(target_g, 2)
        a = iso_scale(standard, other)
        assert a == target_g  # a = 2 alpha'
        iso = build_isomorphism(standard, other)
        # L_i -> (2 alpha)^{-1} L_{2 alpha i}
        img = iso.apply(L(standard, 2))
        assert img == L(other, 2 * target_g).scaled(F(1, target_g))
        singles = [
            LieElement(standard, {s: F(1)}) for s in window_symbols(standard, 3)
        ]
        pairs = [(x, y) for x in singles for y in singles]
        assert hom_residual(iso.apply, pairs) == []

    def test_discrete_dense_not_isomorphic(self, standard, dense):
        assert iso_scale(standard, dense) is None
        assert build_isomorphism(standard, dense) is None
