"""Word series arithmetic."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blockalg.ncpoly import NCPoly, commutator


def test_construction_cleans_zeros():
    p = NCPoly({"01": 1}) + NCPoly({"01": -1})
    assert p.is_zero()
    assert len(p) == 0


def test_concatenation():
    p = NCPoly({"0": 1, "1": 2})
    q = NCPoly({"10": 1})
    assert p * q == NCPoly({"010": 1, "110": 2})


def test_unit_word():
    one = NCPoly.word("")
    p = NCPoly({"011": Fraction(1, 2)})
    assert one * p == p == p * one


def test_commutator_weight_two():
    assert commutator(NCPoly.word("0"), NCPoly.word("1")) == NCPoly({"01": 1, "10": -1})


def test_invalid_letters_rejected():
    with pytest.raises(ValueError):
        NCPoly({"012": 1})


series = st.dictionaries(
    st.text(alphabet="01", max_size=3),
    st.fractions(min_value=-3, max_value=3, max_denominator=2),
    max_size=3,
).map(NCPoly)


@given(series, series, series)
@settings(max_examples=50, deadline=None)
def test_ring_axioms(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c
