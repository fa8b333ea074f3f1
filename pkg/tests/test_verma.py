"""Verma-module tests: PBW monomials, straightening, weight bases,
singular vectors, reduction witnesses, and the L-string closed form."""

from fractions import Fraction as F

import pytest

from gsv import (
    HighestWeight,
    IndexDomainError,
    IndexOutsideT,
    PBWMonomial,
    Truncation,
    act_element,
    act_generator,
    act_word,
    canonical_submodule_generators,
    count_L_partitions,
    generator,
    highest_weight,
    highest_weight_vector,
    l_string_scalar,
    length_of,
    make_monomial,
    monomial_depth,
    monomial_letters,
    monomial_vector,
    monomial_weight,
    raising_symbols,
    reduce_to_highest,
    singular_vectors,
    weight_basis,
)
from gsv.lie import GeneratorSymbol, MixedPresentation
from gsv.verma import (
    CZero,
    DenseWithoutTruncation,
    NonHomogeneous,
    ZeroVector,
    submodule_weight_dim,
)


def sym(kind, idx):
    return GeneratorSymbol(kind, F(idx))


class TestHighestWeight:
    def test_coerces_to_fractions(self):
        hw = highest_weight("1/2", 3)
        assert hw.c == F(1, 2) and hw.h == F(3)
        assert isinstance(hw.c, F) and isinstance(hw.h, F)


class TestMonomials:
    def test_parts_are_sorted(self, standard):
        m = make_monomial(standard, lparts=[2, 1], mparts=[3, 1, 1], yparts=[2, 1])
        assert m.lparts == (F(1), F(2))
        assert m.mparts == (F(1), F(1), F(3))
        assert m.yparts == (F(1), F(2))

    def test_rejects_nonpositive_lm_parts(self, standard):
        with pytest.raises(IndexDomainError):
            make_monomial(standard, lparts=[0])
        with pytest.raises(IndexDomainError):
            make_monomial(standard, mparts=[-1])

    def test_rejects_non_group_parts(self, standard):
        with pytest.raises(IndexDomainError):
            make_monomial(standard, lparts=[F(1, 2)])
        with pytest.raises(IndexDomainError):
            make_monomial(standard, yparts=[F(3, 2)])

    def test_rejects_y_parts_at_or_below_alpha(self, standard):
        # y-parts are G elements strictly above alpha = 1/2
        with pytest.raises(IndexDomainError):
            make_monomial(standard, yparts=[0])
        with pytest.raises(IndexDomainError):
            make_monomial(standard, yparts=[-1])

    def test_depth_weight_letters(self, standard, hw_degenerate):
        m = make_monomial(standard, lparts=[1, 2], mparts=[1], yparts=[1])
        assert monomial_depth(m, standard) == F(9, 2)
        assert monomial_weight(m, hw_degenerate, standard) == F(2) - F(9, 2)
        assert monomial_letters(m, standard) == (
            sym("L", -1),
            sym("L", -2),
            sym("M", -1),
            sym("Y", F(-1, 2)),
        )

    def test_highest_monomial(self, standard):
        m = make_monomial(standard)
        assert m.is_highest
        assert monomial_depth(m, standard) == 0
        assert monomial_letters(m, standard) == ()
        assert not make_monomial(standard, mparts=[1]).is_highest

    def test_wide_instance_y_parts(self, wide):
        # alpha = 3/2 and G = 3Z, so the smallest y-part is k = 3
        m = make_monomial(wide, yparts=[3])
        assert monomial_depth(m, wide) == F(3, 2)
        assert monomial_letters(m, wide) == (sym("Y", F(-3, 2)),)
        with pytest.raises(IndexDomainError):
            make_monomial(wide, yparts=[F(3, 2)])


class TestVectorAlgebra:
    def test_linear_operations(self, standard, hw_generic):
        a = monomial_vector(standard, hw_generic, lparts=[1])
        b = monomial_vector(standard, hw_generic, mparts=[1])
        v = 2 * a - b.scaled(3)
        assert v.coeff(make_monomial(standard, lparts=[1])) == 2
        assert v.coeff(make_monomial(standard, mparts=[1])) == -3
        assert v.coeff(make_monomial(standard, yparts=[1])) == 0
        assert len(v) == 2
        assert (v - v).is_zero
        assert -v + v == v.scaled(0)
        assert v.depths() == {F(1)}

    def test_zero_coefficients_are_dropped(self, standard, hw_generic):
        a = monomial_vector(standard, hw_generic, lparts=[1])
        assert len(a - a) == 0
        assert (a.scaled(0)).is_zero

    def test_mixed_modules_rejected(self, standard, dense, hw_generic, hw_degenerate):
        a = highest_weight_vector(standard, hw_generic)
        with pytest.raises(MixedPresentation):
            a + highest_weight_vector(standard, hw_degenerate)
        with pytest.raises(MixedPresentation):
            a + highest_weight_vector(dense, hw_generic)


class TestStraightening:
    def test_raising_kills_highest_weight_vector(self, standard, hw_generic):
        vh = highest_weight_vector(standard, hw_generic)
        for s in raising_symbols(standard, F(2)):
            assert act_generator(s, vh).is_zero

    def test_l0_eigenvalue_is_h_minus_depth(self, standard, hw_degenerate):
        for depth in (F(1, 2), F(1), F(2)):
            for m in weight_basis(depth, hw_degenerate, standard):
                v = monomial_vector(standard, hw_degenerate, m.lparts, m.mparts, m.yparts)
                assert act_generator(sym("L", 0), v) == v.scaled(F(2) - depth)

    def test_central_m0_acts_by_c(self, standard, hw_generic, hw_degenerate):
        for hw in (hw_generic, hw_degenerate):
            v = monomial_vector(standard, hw, lparts=[2], yparts=[1])
            assert act_generator(sym("M", 0), v) == v.scaled(hw.c)

    def test_m1_on_l_minus_one(self, standard, hw_generic):
        # [M_1, L_{-1}] = -M_0, so M_1 L_{-1} v = -c v
        vh = highest_weight_vector(standard, hw_generic)
        out = act_word((sym("M", 1), sym("L", -1)), vh)
        assert out == vh.scaled(-hw_generic.c)

    def test_y_pair_contraction(self, standard, hw_generic):
        # [Y_{1/2}, Y_{-1/2}] = -M_0, so Y_{1/2} Y_{-1/2} v = -c v
        vh = highest_weight_vector(standard, hw_generic)
        out = act_word((sym("Y", F(1, 2)), sym("Y", F(-1, 2))), vh)
        assert out == vh.scaled(-hw_generic.c)

    def test_word_application_order(self, standard, hw_generic):
        # the last letter of the word acts first, like reading a product
        vh = highest_weight_vector(standard, hw_generic)
        assert not act_word((sym("M", 1), sym("L", -1)), vh).is_zero
        assert act_word((sym("L", -1), sym("M", 1)), vh).is_zero

    def test_normal_words_reproduce_monomials(self, standard, hw_generic):
        # straightening an already-normal word is the identity
        for depth in (F(1, 2), F(1), F(3, 2), F(2), F(5, 2), F(3)):
            for m in weight_basis(depth, hw_generic, standard):
                vh = highest_weight_vector(standard, hw_generic)
                assert act_word(monomial_letters(m, standard), vh) == monomial_vector(
                    standard, hw_generic, m.lparts, m.mparts, m.yparts
                )

    def test_action_is_homogeneous(self, standard, hw_generic):
        vs = [
            monomial_vector(standard, hw_generic, m.lparts, m.mparts, m.yparts)
            for m in weight_basis(2, hw_generic, standard)
        ]
        symbols = [
            sym("L", 1), sym("L", -1), sym("M", 1), sym("M", 2),
            sym("Y", F(1, 2)), sym("Y", F(-1, 2)), sym("Y", F(3, 2)),
        ]
        for s in symbols:
            for v in vs:
                out = act_generator(s, v)
                assert out.is_zero or out.depths() == {F(2) - s.index}

    def test_act_element_is_linear(self, standard, hw_generic):
        v = monomial_vector(standard, hw_generic, lparts=[1])
        e = 2 * generator(standard, "M", 1) - generator(standard, "L", 0)
        expected = act_generator(sym("M", 1), v).scaled(2) - act_generator(sym("L", 0), v)
        assert act_element(e, v) == expected


class TestWeightBasis:
    def test_frozen_dimensions(self, standard, hw_generic):
        dims = {d: len(weight_basis(d, hw_generic, standard))
                for d in (F(1, 2), F(1), F(3, 2), F(2), F(5, 2), F(3))}
        assert dims == {F(1, 2): 1, F(1): 3, F(3, 2): 4, F(2): 9, F(5, 2): 12, F(3): 23}

    def test_depth_one_contents(self, standard, hw_generic):
        basis = weight_basis(1, hw_generic, standard)
        assert set(basis) == {
            make_monomial(standard, lparts=[1]),
            make_monomial(standard, mparts=[1]),
            make_monomial(standard, yparts=[1, 1]),
        }

    def test_depth_zero_and_negative(self, standard, hw_generic):
        assert weight_basis(0, hw_generic, standard) == [PBWMonomial()]
        assert weight_basis(-1, hw_generic, standard) == []

    def test_reversed_order_uses_negative_depths(self, reversed_standard, hw_generic):
        assert len(weight_basis(-1, hw_generic, reversed_standard)) == 3
        assert weight_basis(1, hw_generic, reversed_standard) == []

    def test_depth_outside_T_rejected(self, standard, hw_generic):
        with pytest.raises(IndexOutsideT):
            weight_basis(F(1, 3), hw_generic, standard)

    def test_deterministic(self, standard, hw_generic):
        assert weight_basis(3, hw_generic, standard) == weight_basis(3, hw_generic, standard)

    def test_every_monomial_has_requested_depth(self, standard, hw_generic):
        for m in weight_basis(F(5, 2), hw_generic, standard):
            assert monomial_depth(m, standard) == F(5, 2)

    def test_dense_needs_truncation(self, dense, hw_generic):
        with pytest.raises(DenseWithoutTruncation):
            weight_basis(1, hw_generic, dense)

    def test_dense_frozen_dimensions(self, dense, hw_generic, dense_trunc):
        assert len(weight_basis(F(1, 3), hw_generic, dense, dense_trunc)) == 23
        assert len(weight_basis(F(1, 2), hw_generic, dense, dense_trunc)) == 73

    def test_dense_caps_restrict_parts(self, dense, hw_generic):
        # with all denominators capped out, only integer parts remain
        flat = Truncation(F(3), {3: 0})
        assert len(weight_basis(1, hw_generic, dense, flat)) == 3


class TestCountPartitions:
    def test_frozen_counts(self, standard):
        counts = {d: count_L_partitions(d, standard)
                  for d in (F(0), F(1, 2), F(1), F(3, 2), F(2), F(5, 2), F(3), F(4))}
        assert counts == {F(0): 1, F(1, 2): 0, F(1): 1, F(3, 2): 0,
                          F(2): 2, F(5, 2): 0, F(3): 3, F(4): 5}

    def test_dense_needs_truncation(self, dense):
        with pytest.raises(DenseWithoutTruncation):
            count_L_partitions(1, dense)


class TestSingularVectors:
    def test_generic_module_has_none(self, standard, hw_generic):
        for d in (F(1, 2), F(1), F(3, 2), F(2), F(5, 2), F(3)):
            assert singular_vectors(d, hw_generic, standard) == []

    def test_degenerate_frozen_vectors(self, standard, hw_degenerate):
        assert singular_vectors(F(1, 2), hw_degenerate, standard) == [
            monomial_vector(standard, hw_degenerate, yparts=[1]),
        ]
        assert singular_vectors(F(1), hw_degenerate, standard) == [
            monomial_vector(standard, hw_degenerate, yparts=[1, 1]),
            monomial_vector(standard, hw_degenerate, mparts=[1]),
        ]

    def test_returned_vectors_are_singular(self, standard, hw_degenerate):
        for d in (F(1, 2), F(1), F(3, 2)):
            for v in singular_vectors(d, hw_degenerate, standard):
                for s in raising_symbols(standard, standard.okey(d)):
                    assert act_generator(s, v).is_zero

    def test_depth_zero_is_excluded(self, standard, hw_degenerate):
        assert singular_vectors(0, hw_degenerate, standard) == []

    def test_dense_needs_truncation(self, dense, hw_degenerate):
        with pytest.raises(DenseWithoutTruncation):
            singular_vectors(F(1, 2), hw_degenerate, dense)


class TestReduceToHighest:
    CASES = [
        ("L", {"lparts": [1]}, ("M", 1), F(-1)),
        ("Y", {"yparts": [1]}, ("Y", F(1, 2)), F(-1)),
    ]

    def test_frozen_single_letter_witnesses(self, standard, hw_generic):
        for _, parts, (kind, idx), scalar in self.CASES:
            v = monomial_vector(standard, hw_generic, **parts)
            w = reduce_to_highest(v)
            assert w.word == (sym(kind, idx),)
            assert w.scalar == scalar

    def test_frozen_m_string_witness(self, standard, hw_generic):
        v = monomial_vector(standard, hw_generic, mparts=[1, 2])
        w = reduce_to_highest(v)
        assert w.word == (sym("L", 1), sym("L", 2))
        assert w.scalar == F(2)

    def test_frozen_mixed_sum_witness(self, standard, hw_generic):
        v = 2 * monomial_vector(standard, hw_generic, lparts=[1, 1]) - 3 * monomial_vector(
            standard, hw_generic, mparts=[2]
        )
        w = reduce_to_highest(v)
        assert w.word == (sym("M", 1), sym("M", 1))
        assert w.scalar == F(4)

    def test_witness_replays(self, standard, hw_generic):
        vh = highest_weight_vector(standard, hw_generic)
        vectors = [
            monomial_vector(standard, hw_generic, lparts=[1, 2], yparts=[1]),
            monomial_vector(standard, hw_generic, lparts=[3]) + monomial_vector(
                standard, hw_generic, mparts=[2], yparts=[1, 1]
            ),
            monomial_vector(standard, hw_generic, yparts=[1, 1, 2]),
        ]
        for v in vectors:
            w = reduce_to_highest(v)
            assert w.scalar != 0
            assert act_word(w.word, v) == vh.scaled(w.scalar)

    def test_zero_vector_rejected(self, standard, hw_generic):
        v = monomial_vector(standard, hw_generic, lparts=[1])
        with pytest.raises(ZeroVector):
            reduce_to_highest(v - v)

    def test_zero_central_charge_rejected(self, standard, hw_degenerate):
        with pytest.raises(CZero):
            reduce_to_highest(monomial_vector(standard, hw_degenerate, lparts=[1]))

    def test_inhomogeneous_rejected(self, standard, hw_generic):
        v = monomial_vector(standard, hw_generic, lparts=[1]) + monomial_vector(
            standard, hw_generic, lparts=[2]
        )
        with pytest.raises(NonHomogeneous):
            reduce_to_highest(v)

    def test_length_of(self, standard, hw_generic):
        assert length_of(monomial_vector(standard, hw_generic, lparts=[1, 2])) == 2
        assert length_of(monomial_vector(standard, hw_generic, mparts=[1])) == 0
        with pytest.raises(ZeroVector):
            length_of(highest_weight_vector(standard, hw_generic).scaled(0))


class TestLStringScalar:
    def test_frozen_values(self):
        h = F(7)
        assert l_string_scalar([1], h) == -2 * h
        assert l_string_scalar([1, 1], h) == 6 * h
        assert l_string_scalar([1, 2], h) == 16 * h
        assert l_string_scalar([2, 1], h) == 10 * h
        assert l_string_scalar([1], 0) == 0

    def test_agrees_with_straightening(self, standard):
        # L_i L_{-i_1} ... L_{-i_r} v_h with i = sum(i_p), computed
        # through the straightening engine, lands on the same multiple
        compositions = [[1], [2], [1, 1], [1, 2], [2, 1], [3, 3],
                        [1, 1, 1], [1, 2, 3], [3, 2, 1], [2, 2, 2]]
        for h in (F(0), F(2), F(-1, 3)):
            hw = HighestWeight(F(1), h)
            vh = highest_weight_vector(standard, hw)
            for comp in compositions:
                word = (sym("L", sum(comp)),) + tuple(sym("L", -i) for i in comp)
                assert act_word(word, vh) == vh.scaled(l_string_scalar(comp, h))

    def test_group_validation(self, standard):
        with pytest.raises(IndexDomainError):
            l_string_scalar([F(1, 2)], 1, standard)
        with pytest.raises(IndexDomainError):
            l_string_scalar([-1], 1, standard)


class TestSubmodules:
    def test_generator_shapes(self, standard, hw_degenerate):
        gens = {
            tuple(sorted(str(m) for m, _ in g.terms()))
            for g in canonical_submodule_generators(hw_degenerate, 2, standard)
        }
        # h = 2 is nonzero: only M and Y generators appear
        assert len(gens) == 4
        zero_h = HighestWeight(F(0), F(0))
        gens_h0 = canonical_submodule_generators(zero_h, 1, standard)
        assert len(gens_h0) == 3

    def test_degenerate_codimensions(self, standard, hw_degenerate):
        gens = canonical_submodule_generators(hw_degenerate, 3, standard)
        for depth, codim in ((F(1, 2), 0), (F(1), 1), (F(2), 2), (F(3), 3)):
            s = submodule_weight_dim(gens, depth, hw_degenerate, standard)
            assert s.codim == codim
            assert s.dim_space == len(weight_basis(depth, hw_degenerate, standard))

    def test_h_zero_submodule_is_everything(self, standard):
        hw = HighestWeight(F(0), F(0))
        gens = canonical_submodule_generators(hw, 2, standard)
        for depth in (F(1), F(2)):
            assert submodule_weight_dim(gens, depth, hw, standard).codim == 0

    def test_generic_module_is_irreducible_at_low_depth(self, standard, hw_generic):
        gens = canonical_submodule_generators(hw_generic, 2, standard)
        for depth in (F(1), F(3, 2), F(2)):
            assert submodule_weight_dim(gens, depth, hw_generic, standard).codim == 0

    def test_dense_needs_truncation(self, dense, hw_degenerate):
        with pytest.raises(DenseWithoutTruncation):
            canonical_submodule_generators(hw_degenerate, 1, dense)
