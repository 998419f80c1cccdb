from __future__ import annotations

import pytest
from conftest import signed_graphs, transforms
from hypothesis import given, settings
from hypothesis import strategies as st

from milnorgraph.arrangement import Arrangement, build_arrangement, pencil
from milnorgraph.exceptions import PreconditionError
from milnorgraph.graph import SignedGraph, complete_graph, coxeter_d, transform
from milnorgraph.milnor import (
    EXCEPTIONAL_PATTERNS,
    ExceptionalClass,
    classify_exceptional,
    divisors,
    h1_decomposition,
    matches_exceptional_pattern,
    sharpness_report,
    totient,
    twisted_betti_equimonodromic,
)

K4_MINUS_EDGE = SignedGraph(4, [], [(1, 2, -1), (1, 3, -1), (1, 4, -1), (2, 3, -1), (2, 4, -1)])
PENCIL_GRAPH = SignedGraph(2, [1, 2], [(1, 2, 1), (1, 2, -1)])


def test_number_theory_helpers():
    assert divisors(12) == [1, 2, 3, 4, 6, 12]
    assert [totient(d) for d in (1, 2, 3, 4, 5, 6, 12)] == [1, 1, 2, 2, 4, 2, 4]


def test_classify():
    assert classify_exceptional(coxeter_d(3)) == ExceptionalClass.D3
    assert classify_exceptional(complete_graph(4), cross_check=True) == ExceptionalClass.D3
    assert classify_exceptional(coxeter_d(4)) == ExceptionalClass.D4
    assert classify_exceptional(K4_MINUS_EDGE, cross_check=True) == ExceptionalClass.NOT_EXCEPTIONAL


def test_classify_needs_rank_three():
    with pytest.raises(PreconditionError):
        classify_exceptional(PENCIL_GRAPH)


@pytest.mark.parametrize("name", list(EXCEPTIONAL_PATTERNS))
def test_every_pattern_is_exceptional(name):
    G = EXCEPTIONAL_PATTERNS[name]
    assert matches_exceptional_pattern(G)
    assert classify_exceptional(G, cross_check=True) != ExceptionalClass.NOT_EXCEPTIONAL


def test_decompositions():
    assert h1_decomposition(coxeter_d(3)).as_dict() == {1: 5, 3: 1}
    assert h1_decomposition(coxeter_d(4)).as_dict() == {1: 11, 3: 1}
    assert h1_decomposition(K4_MINUS_EDGE).as_dict() == {1: 4}
    assert h1_decomposition(complete_graph(4)).as_dict() == {1: 5, 3: 1}
    assert h1_decomposition(PENCIL_GRAPH).as_dict() == {1: 3, 2: 2, 4: 2}
    assert h1_decomposition(SignedGraph(1, [1])).as_dict() == {}


def test_formula_lists_all_blocks():
    assert h1_decomposition(coxeter_d(3)).formula == "(t-1)^5 ⊕ Φ2^0 ⊕ Φ4^0 ⊕ Φ3^1 ⊕ Φ5^0"


def test_non_graphic_rank_three_rejected():
    A = Arrangement.from_normals([(1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 2, 3)])
    with pytest.raises(PreconditionError):
        h1_decomposition(A)


@pytest.mark.parametrize("n", range(2, 10))
def test_rank_two_dimension(n):
    # Euler characteristic of the Milnor fiber of a pencil gives dim H_1 = (n-1)^2
    dec = h1_decomposition(pencil(n))
    assert dec.dimension == (n - 1) ** 2
    assert all(dec[d] == n - 2 for d in divisors(n) if d > 1)


def test_twisted_betti():
    assert twisted_betti_equimonodromic(coxeter_d(3), 3) == 1
    assert twisted_betti_equimonodromic(coxeter_d(3), 2) == 0
    assert twisted_betti_equimonodromic(pencil(4), 4) == 2
    with pytest.raises(PreconditionError):
        twisted_betti_equimonodromic(coxeter_d(3), 4)


def test_sharpness_examples():
    r = sharpness_report(coxeter_d(3), 3)
    assert (r.beta, r.b, r.equal) == (1, 1, True)
    r = sharpness_report(coxeter_d(3), 2)
    assert (r.beta, r.b, r.equal) == (0, 0, True)
    r = sharpness_report(complete_graph(3), 3)
    assert (r.beta, r.b, r.equal) == (1, 1, True)
    with pytest.raises(PreconditionError):
        sharpness_report(coxeter_d(3), 5)


@settings(max_examples=40, deadline=None)
@given(signed_graphs(max_vertices=4), st.data())
def test_decomposition_is_class_invariant(G, data):
    perm, switched = data.draw(transforms(G.vertex_count))
    H = transform(G, perm, switched)
    assert h1_decomposition(G) == h1_decomposition(H)
    A = build_arrangement(G)
    if A.rank >= 3:
        dec = h1_decomposition(G)
        assert dec[2] == dec[4] == 0
        assert all(dec[d] == 0 for d in divisors(A.n) if d not in (1, 3))
        assert (dec[3] == 1) == (classify_exceptional(G) != ExceptionalClass.NOT_EXCEPTIONAL)
