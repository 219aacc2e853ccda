"""Exact rank and nullspace computations."""

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blockalg.blockpoly import generator_poly
from blockalg.cpoly import CPoly
from blockalg.linalg import in_row_span, nullspace, rank_int, rank_over_q


def test_rank_examples():
    x1sq = CPoly.monomial((2, 0))
    x2sq = CPoly.monomial((0, 2))
    assert rank_over_q([x1sq, x2sq, x1sq + x2sq]) == 2
    assert rank_over_q([]) == 0


def test_antisymmetric_pair_is_rank_one():
    p3 = generator_poly(1)
    swapped = p3.substitute([(1, 2), (1, 1)])
    assert rank_over_q([p3, swapped]) == 1


def test_mixed_inputs_rejected():
    with pytest.raises(ValueError):
        rank_over_q([CPoly.monomial((2, 0)), CPoly.monomial((1, 1, 0))])
    with pytest.raises(ValueError):
        rank_over_q([CPoly.monomial((2, 0)), CPoly.monomial((1, 0))])


def test_zero_vectors_ignored():
    assert rank_over_q([CPoly.zero(2), CPoly.monomial((1, 1))]) == 1


def test_nullspace_solves():
    rows = [[Fraction(1), Fraction(1), Fraction(0)], [Fraction(0), Fraction(1), Fraction(1)]]
    basis = nullspace(rows, 3)
    assert len(basis) == 1
    v = basis[0]
    for row in rows:
        assert sum(a * b for a, b in zip(row, v)) == 0


def test_in_row_span():
    rows = [[1, 0, 1], [0, 1, 1]]
    assert in_row_span(rows, [1, 1, 2])
    assert not in_row_span(rows, [0, 0, 1])


matrices = st.lists(
    st.lists(st.integers(min_value=-6, max_value=6), min_size=4, max_size=4),
    min_size=1,
    max_size=5,
)


@given(matrices, st.randoms(use_true_random=False))
@settings(max_examples=50, deadline=None)
def test_rank_invariant_under_scaling_and_permutation(rows, rng):
    base = rank_int(rows)
    shuffled = list(rows)
    rng.shuffle(shuffled)
    scaled = [[3 * v for v in row] for row in shuffled]
    assert rank_int(scaled) == base
