"""Exact sparse polynomial arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blockalg.cpoly import CPoly, InexactDivision, parse_monomial


def P(nvars, terms):
    return CPoly(nvars, {tuple(e): Fraction(c) for e, c in terms.items()})


x1 = CPoly.variable(1, 2)
x2 = CPoly.variable(2, 2)


class TestArithmetic:
    def test_cancellation(self):
        assert (x1 + (-x1)).is_zero()

    def test_distributivity_example(self):
        assert (x1 * x2) * (x1 - x2) == P(2, {(2, 1): 1, (1, 2): -1})

    def test_scale(self):
        assert P(2, {(2, 0): 1}).scale(Fraction(3, 2)) == P(2, {(2, 0): Fraction(3, 2)})
        assert 3 * x1 == P(2, {(1, 0): 3})

    def test_var_count_mismatch(self):
        with pytest.raises(ValueError):
            x1 + CPoly.variable(1, 3)
        with pytest.raises(ValueError):
            x1 * CPoly.variable(1, 3)

    def test_homogeneity_bookkeeping(self):
        f = P(2, {(2, 1): 1, (0, 3): -2})
        g = P(2, {(1, 1): 1})
        assert f.homogeneous_degree() == 3
        assert (f * g).homogeneous_degree() == 5
        assert not (f + g).is_homogeneous()


class TestDivision:
    def test_linear_quotient(self):
        num = P(2, {(2, 1): 1, (1, 2): -1})
        assert num.divide_exact(x1 - x2) == x1 * x2

    def test_generator_reduction(self):
        # independent expansion of the closed form at k=1 divided by x1 x2 (x1-x2)
        p3 = P(2, {(4, 1): -2, (3, 2): -1, (2, 3): 1, (1, 4): 2})
        den = x1 * x2 * (x1 - x2)
        assert p3.divide_exact(den) == P(2, {(2, 0): -2, (1, 1): -3, (0, 2): -2})

    def test_inexact_raises(self):
        with pytest.raises(InexactDivision):
            P(2, {(2, 0): 1}).divide_exact(x2)

    def test_zero_denominator(self):
        with pytest.raises(ZeroDivisionError):
            x1.divide_exact(CPoly.zero(2))


class TestSubstitute:
    def test_swap(self):
        f = P(2, {(2, 1): 1})
        assert f.substitute([(1, 2), (1, 1)]) == P(2, {(1, 2): 1})

    def test_even_power_absorbs_sign(self):
        f = P(2, {(2, 1): 1})
        assert f.substitute([(-1, 1), (1, 2)]) == f

    def test_diagonal_collapse(self):
        f = P(2, {(1, 1): 1})
        assert f.substitute([(1, 1), (1, 1)]) == CPoly.monomial((2,))

    def test_malformed_slots(self):
        with pytest.raises(ValueError):
            x1.substitute([(1, 1)])
        with pytest.raises(ValueError):
            x1.substitute([(2, 1), (1, 2)])

    def test_map_slots_zero_and_scale(self):
        f = P(2, {(2, 1): 1, (0, 2): 1})
        assert f.map_slots([None, (1, 1)], 1) == CPoly.monomial((2,))
        assert f.map_slots([(Fraction(1, 2), 1), (1, 2)], 2) == P(
            2, {(2, 1): Fraction(1, 4), (0, 2): 1}
        )


class TestSerialization:
    def test_wire_format(self):
        f = P(2, {(1, 4): 2, (3, 2): Fraction(-1, 2)})
        data = f.to_dict()
        assert data == {
            "vars": 2,
            "terms": [
                {"coeff": "2", "exps": [1, 4]},
                {"coeff": "-1/2", "exps": [3, 2]},
            ],
        }
        assert CPoly.from_dict(data) == f

    def test_parse_monomial(self):
        assert parse_monomial("x1^3*x2^2") == CPoly.monomial((3, 2))
        assert parse_monomial("x2") == CPoly.monomial((0, 1))
        with pytest.raises(ValueError, match="position"):
            parse_monomial("x1^3*y2")


coeffs = st.fractions(min_value=-4, max_value=4, max_denominator=3)


def polys(nvars):
    exps = st.tuples(*[st.integers(min_value=0, max_value=3)] * nvars)
    return st.dictionaries(exps, coeffs, max_size=4).map(lambda t: CPoly(nvars, t))


class TestRingAxioms:
    @given(polys(2), polys(2), polys(2))
    @settings(max_examples=60, deadline=None)
    def test_associativity_distributivity(self, a, b, c):
        assert (a * b) * c == a * (b * c)
        assert a * (b + c) == a * b + a * c
        assert (a + b) + c == a + (b + c)

    @given(polys(2), polys(2))
    @settings(max_examples=60, deadline=None)
    def test_divide_recovers_factor(self, a, b):
        if b.is_zero():
            return
        assert (a * b).divide_exact(b) == a
