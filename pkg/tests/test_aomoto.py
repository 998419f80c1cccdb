from __future__ import annotations

from fractions import Fraction

import pytest
from conftest import signed_graphs
from hypothesis import given, settings
from hypothesis import strategies as st

from milnorgraph.aomoto import (
    beta1,
    beta_p,
    brute_force_beta_p,
    cocycle_space,
    count_cocycles,
    os2_matrix_beta,
    rank2_flats_by_span,
    rational_ones,
    sigma,
)
from milnorgraph.arrangement import build_arrangement, center, pencil, rank2_flats
from milnorgraph.exceptions import CapExceeded, PreconditionError
from milnorgraph.fields import FieldTag, WeightVector, rank
from milnorgraph.graph import SignedGraph, complete_graph, coxeter_d, enumerate_graphs

D3 = build_arrangement(coxeter_d(3))
D4 = build_arrangement(coxeter_d(4))
K3 = build_arrangement(complete_graph(3))
K4 = build_arrangement(complete_graph(4))
K4_MINUS_EDGE = build_arrangement(SignedGraph(4, [], [(1, 2, -1), (1, 3, -1), (1, 4, -1), (2, 3, -1), (2, 4, -1)]))


def ones(A, p):
    return WeightVector.ones(A.n, FieldTag.prime(p))


def triple(A):
    return next(X for X in rank2_flats(A) if X.multiplicity == 3)


def test_sigma():
    assert sigma(D3, ones(D3, 3), triple(D3)) == 0
    assert sigma(D3, rational_ones(6, 3), triple(D3)) == 1
    assert sigma(D3, rational_ones(6, 3), center(D3)) == 2


def test_sigma_index_mismatch():
    with pytest.raises(PreconditionError):
        sigma(D3, ones(K3, 3), triple(D3))


def test_cocycle_space_examples():
    assert len(cocycle_space(D3, ones(D3, 3))) == 2
    assert len(cocycle_space(K3, ones(K3, 2))) == 1


@settings(max_examples=40, deadline=None)
@given(signed_graphs(max_vertices=4), st.sampled_from([2, 3, 5]))
def test_constant_vector_is_a_cocycle(G, p):
    A = build_arrangement(G)
    F = FieldTag.prime(p)
    basis = cocycle_space(A, ones(A, p))
    rows = [list(v) for v in basis]
    assert rank(rows + [[1] * A.n], A.n, F) == rank(rows, A.n, F)


def test_beta1_examples():
    assert beta1(D3, ones(D3, 3)) == 1
    assert beta1(D3, ones(D3, 2)) == 0
    P4 = pencil(4)
    assert beta1(P4, ones(P4, 2)) == 2


def test_beta1_rejects_zero_weight():
    with pytest.raises(PreconditionError):
        beta1(D3, WeightVector(FieldTag.prime(3), (0,) * 6))


def test_beta_p_examples():
    assert beta_p(D4, 3) == 1
    assert beta_p(K4, 5) == 0
    assert beta_p(K4_MINUS_EDGE, 3) == 0
    assert beta_p(K4, 3) == 1


def test_beta_over_rationals_for_one_third_on_d3():
    assert beta1(D3, rational_ones(6, 3)) == 0


def test_os2_matrix_agrees_on_examples():
    assert os2_matrix_beta(D3, ones(D3, 3)) == 1
    P4 = pencil(4)
    assert os2_matrix_beta(P4, ones(P4, 2)) == 2


def test_span_grouping_matches_closure():
    for A in (D3, D4, K4_MINUS_EDGE):
        assert sorted(rank2_flats_by_span(A)) == sorted(X.sorted_members() for X in rank2_flats(A))


def test_os2_matrix_agrees_on_fifty_graphs():
    graphs = [G for G in enumerate_graphs(4)][::17][:50]
    assert len(graphs) == 50
    for G in graphs:
        A = build_arrangement(G)
        for p in (2, 3, 5):
            assert os2_matrix_beta(A, ones(A, p)) == beta_p(A, p), (G, p)


@settings(max_examples=40, deadline=None)
@given(signed_graphs(max_vertices=4), st.lists(st.integers(-3, 3), min_size=20, max_size=20), st.sampled_from([None, 3, 5]))
def test_general_weight_condition_matches_os2_matrix(G, raw, p):
    A = build_arrangement(G)
    F = FieldTag.rationals() if p is None else FieldTag.prime(p)
    w = WeightVector(F, tuple(Fraction(x) for x in raw[: A.n]))
    if w.is_zero():
        return
    assert beta1(A, w) == os2_matrix_beta(A, w)


def test_brute_force_examples():
    assert brute_force_beta_p(D3, 3) == 1
    assert brute_force_beta_p(K3, 3) == 1
    path = build_arrangement(SignedGraph(3, [], [(1, 2, -1), (2, 3, -1)]))
    assert brute_force_beta_p(path, 2) == 0


def test_brute_force_cap():
    with pytest.raises(CapExceeded):
        brute_force_beta_p(D4, 5)


@settings(max_examples=30, deadline=None)
@given(signed_graphs(max_vertices=3), st.sampled_from([2, 3]), st.integers(1, 7))
def test_brute_force_partition_invariance(G, p, parts):
    A = build_arrangement(G)
    assert brute_force_beta_p(A, p, parts=parts) == brute_force_beta_p(A, p) == beta_p(A, p)


@settings(max_examples=30, deadline=None)
@given(signed_graphs(max_vertices=3), st.sampled_from([2, 3, 5]))
def test_cocycle_count_is_power_of_p(G, p):
    A = build_arrangement(G)
    count = count_cocycles(A, p, 0, p**A.n)
    assert count == p ** (beta_p(A, p) + 1)


@pytest.mark.parametrize("n", range(2, 9))
@pytest.mark.parametrize("p", [2, 3, 5, 7])
def test_rank_two_closed_form(n, p):
    A = pencil(n)
    assert beta_p(A, p) == (n - 2 if n % p == 0 else 0)
