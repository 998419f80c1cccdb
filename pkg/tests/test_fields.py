from __future__ import annotations

from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from milnorgraph.exceptions import PreconditionError
from milnorgraph.fields import FieldTag, WeightVector, integer_rank, is_prime, nullspace, rank, row_reduce

Q = FieldTag.rationals()

matrices = st.integers(1, 5).flatmap(
    lambda c: st.lists(st.lists(st.integers(-4, 4), min_size=c, max_size=c), min_size=0, max_size=6)
)


def test_is_prime():
    assert [p for p in range(20) if is_prime(p)] == [2, 3, 5, 7, 11, 13, 17, 19]


def test_field_tag_rejects_composite():
    with pytest.raises(PreconditionError):
        FieldTag.prime(6)


def test_prime_field_arithmetic():
    F = FieldTag.prime(7)
    assert F.characteristic == 7
    assert all(F.reduce(x * F.inv(x)) == 1 for x in range(1, 7))
    assert F.element(Fraction(1, 3)) == 5


def test_weight_vector_coercion():
    F = FieldTag.prime(3)
    w = WeightVector(F, (3, 4, -1))
    assert tuple(w) == (0, 1, 2)
    assert (w - w).is_zero()
    assert WeightVector.ones(3, F) + WeightVector.ones(3, F) == WeightVector.constant(3, 2, F)


def test_weight_vector_field_mismatch():
    with pytest.raises(PreconditionError):
        WeightVector.ones(2, FieldTag.prime(2)) + WeightVector.ones(2, FieldTag.prime(3))


def test_rank_depends_on_characteristic():
    rows = [[1, 1], [1, -1]]
    assert rank(rows, 2, Q) == 2
    assert rank(rows, 2, FieldTag.prime(2)) == 1


@given(matrices)
def test_bareiss_matches_fraction_rank(rows):
    ncols = len(rows[0]) if rows else 1
    assert integer_rank(rows) == rank(rows, ncols, Q)


@settings(max_examples=60)
@given(matrices, st.sampled_from([2, 3, 5]))
def test_nullspace_is_kernel(rows, p):
    F = FieldTag.prime(p)
    ncols = len(rows[0]) if rows else 1
    basis = nullspace(rows, ncols, F)
    assert len(basis) == ncols - rank(rows, ncols, F)
    for v in basis:
        for r in rows:
            assert F.reduce(sum(a * b for a, b in zip(r, v))) == 0


def test_row_reduce_echelon():
    reduced, pivots = row_reduce([[2, 4], [1, 2]], 2, Q)[:2]
    assert pivots == [0]
    assert reduced[0] == [1, 2]
