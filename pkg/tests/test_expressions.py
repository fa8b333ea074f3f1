"""Expression grammar tests: parsing, printing, and round trips for
algebra elements, module vectors, and automorphism literals."""

from fractions import Fraction as F

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from gsv import (
    HighestWeight,
    IndexDomainError,
    LieElement,
    VermaVector,
    cocycle,
    diagonal,
    format_automorphism,
    format_element,
    format_vector,
    format_word,
    generator,
    identity,
    monomial_vector,
    parse_automorphism,
    parse_element,
    parse_lie,
    parse_vector,
    scale,
    weight_basis,
)
from gsv.automorphisms import ScaleNotAdmissible
from gsv.expressions import ExpressionSyntaxError, format_rational, format_symbol
from gsv.lie import GeneratorSymbol


class TestFormatting:
    def test_rational_and_symbol(self):
        assert format_rational(F(3, 2)) == "3/2"
        assert format_rational(F(-4)) == "-4"
        assert format_symbol(GeneratorSymbol("Y", F(-1, 2))) == "Y(-1/2)"

    def test_element_frozen_forms(self, standard):
        L1 = generator(standard, "L", 1)
        Y = generator(standard, "Y", F(-1, 2))
        assert format_element(-3 * L1) == "-3*L(1)"
        assert format_element(F(3, 2) * L1 + Y) == "3/2*L(1) + Y(-1/2)"
        assert format_element(L1 - L1) == "0"
        assert format_element(L1 - Y) == "L(1) - Y(-1/2)"

    def test_vector_frozen_forms(self, standard, hw_generic):
        vh = monomial_vector(standard, hw_generic)
        assert format_vector(vh) == "v"
        w = monomial_vector(standard, hw_generic, lparts=[1], mparts=[2], yparts=[1])
        assert format_vector(w) == "L(-1)M(-2)Y(-1/2)v"
        assert format_vector(vh - vh) == "0"

    def test_format_word(self):
        word = (GeneratorSymbol("M", F(1)), GeneratorSymbol("L", F(-2)))
        assert format_word(word) == "M(1)L(-2)"


class TestParsing:
    def test_single_generator(self, standard):
        assert parse_lie("L(1)", standard) == generator(standard, "L", 1)
        assert parse_lie("1*L(1)", standard) == generator(standard, "L", 1)
        assert parse_lie("- L(1)", standard) == -generator(standard, "L", 1)

    def test_coefficients_merge(self, standard):
        assert format_element(parse_lie("L(1) + L(1)", standard)) == "2*L(1)"
        assert parse_lie("L(1) - L(1)", standard).is_zero

    def test_zero_literal(self, standard, hw_generic):
        assert parse_lie("0", standard).is_zero
        assert parse_vector("0", standard, hw_generic).is_zero

    def test_highest_weight_vector(self, standard, hw_generic):
        v = parse_vector("v", standard, hw_generic)
        assert v == monomial_vector(standard, hw_generic)

    def test_unsorted_word_is_straightened(self, standard, hw_generic):
        v = parse_vector("M(-2)L(-1)v", standard, hw_generic)
        assert format_vector(v) == "2*M(-3)v + L(-1)M(-2)v"

    def test_fractional_indices_follow_the_instance(self, standard, dense):
        assert parse_lie("L(1/3)", dense) == generator(dense, "L", F(1, 3))
        with pytest.raises(IndexDomainError):
            parse_lie("L(1/3)", standard)

    def test_y_index_must_lie_in_g1(self, standard):
        with pytest.raises(IndexDomainError):
            parse_lie("Y(1)", standard)

    def test_mixing_algebra_and_module_terms(self, standard, hw_generic):
        with pytest.raises(ExpressionSyntaxError):
            parse_element("L(1) + v", standard, hw_generic)

    def test_module_term_needs_highest_weight(self, standard):
        with pytest.raises(ExpressionSyntaxError):
            parse_lie("v", standard)

    def test_vector_context_rejects_algebra_elements(self, standard, hw_generic):
        with pytest.raises(ExpressionSyntaxError):
            parse_vector("L(1)", standard, hw_generic)

    @pytest.mark.parametrize(
        "bad",
        ["", "L(", "L(1", "L(1) +", "Q(1)", "L(1) M(2)", "L(1)L(2)", "1/0*L(1)"],
    )
    def test_syntax_errors(self, standard, bad):
        with pytest.raises(ExpressionSyntaxError):
            parse_lie(bad, standard)


class TestAutomorphismLiterals:
    def test_primitive_round_trips(self, standard):
        for text in ("diag(-1; 2)", "scale(-1)", "cocycle(3/2)", "inner(M(1))"):
            theta = parse_automorphism(text, standard)
            assert format_automorphism(theta) == text
            assert parse_automorphism(format_automorphism(theta), standard) == theta

    def test_identity_prints_as_scale_one(self, standard):
        assert format_automorphism(identity(standard)) == "scale(1)"
        assert parse_automorphism("scale(1)", standard) == identity(standard)

    def test_nested_inner_chain(self, standard):
        text = "diag(-1; 2)*inner(2*Y(1/2) - M(3))*scale(-1)"
        theta = parse_automorphism(text, standard)
        formatted = format_automorphism(theta)
        assert formatted == "diag(-1; 2)*inner(-M(3) + 2*Y(1/2))*scale(-1)"
        assert parse_automorphism(formatted, standard) == theta

    def test_unknown_family(self, standard):
        with pytest.raises(ExpressionSyntaxError):
            parse_automorphism("twist(2)", standard)

    def test_invalid_primitive_rejected_even_if_it_would_merge_away(self, standard):
        # scale(2)*scale(1/2) would normalize to the identity, but each
        # literal must be admissible on its own
        with pytest.raises(ScaleNotAdmissible):
            parse_automorphism("scale(2)*scale(1/2)", standard)

    def test_diag_needs_semicolon(self, standard):
        with pytest.raises(ExpressionSyntaxError):
            parse_automorphism("diag(1, 2)", standard)

    def test_chain_round_trip(self, standard):
        theta = diagonal(standard, -1, F(3, 2))
        chain = parse_automorphism("scale(-1)*cocycle(2)", standard)
        for t in (theta, chain, cocycle(standard, F(-1, 2)), scale(standard, -1)):
            assert parse_automorphism(format_automorphism(t), standard) == t


def elements(gp):
    def build(pairs):
        e = LieElement(gp, {})
        for kind, n, num, den in pairs:
            idx = F(n) + (F(1, 2) if kind == "Y" else 0)
            e = e + F(num, den) * generator(gp, kind, idx)
        return e

    return st.lists(
        st.tuples(
            st.sampled_from(["L", "M", "Y"]),
            st.integers(-4, 4),
            st.integers(-6, 6),
            st.integers(1, 4),
        ),
        max_size=4,
    ).map(build)


class TestRoundTrips:
    @given(data=st.data())
    @settings(max_examples=150, deadline=None)
    def test_element_round_trip(self, standard, data):
        e = data.draw(elements(standard))
        assert parse_lie(format_element(e), standard) == e

    @given(data=st.data())
    @settings(max_examples=60, deadline=None)
    def test_vector_round_trip(self, standard, hw_generic, data):
        basis = weight_basis(2, hw_generic, standard)
        coeffs = data.draw(
            st.lists(st.integers(-5, 5), min_size=len(basis), max_size=len(basis))
        )
        v = VermaVector(
            standard, hw_generic, {m: F(c) for m, c in zip(basis, coeffs) if c}
        )
        assert parse_vector(format_vector(v), standard, hw_generic) == v
