"""Degree-one cohomology of Aomoto complexes (A*, multiplication by w).

Three independent routes compute the same number:

* :func:`cocycle_space` solves the flat-local conditions: for every rank-2
  flat X and every H in X, ``(sum_X w) eta_H - (sum_X eta) w_H = 0``.
* :func:`os2_matrix_beta` writes multiplication A^1 -> A^2 as a matrix in the
  broken-circuit basis of A^2, with rank-2 flats found by grouping pairs
  according to the plane they span (no closure code involved).
* :func:`brute_force_beta_p` counts every vector of F_p^n satisfying the
  per-flat rules for w = (1, ..., 1) and takes a base-p logarithm.
"""

from __future__ import annotations

from collections import defaultdict
from fractions import Fraction
from itertools import combinations

import numpy as np

from .arrangement import FULL_LATTICE_CAP, Arrangement, Flat, rank2_flats
from .exceptions import CapExceeded, PreconditionError, TheoremViolation
from .fields import FieldTag, WeightVector, nullspace, rank, row_reduce

BRUTE_FORCE_CAP = 10**7


def _check(A: Arrangement, w: WeightVector) -> None:
    if len(w) != A.n:
        raise PreconditionError(f"weight vector has {len(w)} entries, arrangement has {A.n} hyperplanes")
    if w.is_zero():
        raise PreconditionError("weight vector is zero")


def sigma(A: Arrangement, w: WeightVector, X: Flat):
    """Sum of the weights of the hyperplanes containing X."""
    if len(w) != A.n:
        raise PreconditionError("index mismatch between weights and arrangement")
    if any(not 0 <= h < A.n for h in X.members):
        raise PreconditionError("flat refers to hyperplanes outside the arrangement")
    return w.field.reduce(sum((w[h] for h in X.members), w.field.zero()))


def cocycle_conditions(A: Arrangement, w: WeightVector) -> list[list]:
    F = w.field
    rows = []
    for X in rank2_flats(A):
        s = sigma(A, w, X)
        for H in sorted(X.members):
            row = [F.zero()] * A.n
            for K in X.members:
                row[K] = F.reduce(-w[K])
            row[H] = F.reduce(row[H] + s)
            rows.append(row)
    return rows


def cocycle_space(A: Arrangement, w: WeightVector) -> list[WeightVector]:
    """Basis of the degree-one cocycles {eta : eta * w = 0 in A^2}."""
    _check(A, w)
    basis = nullspace(cocycle_conditions(A, w), A.n, w.field)
    return [WeightVector(w.field, tuple(v)) for v in basis]


def beta1(A: Arrangement, w: WeightVector) -> int:
    """dim H^1 of the Aomoto complex of ``w``; the coboundaries are the line through w."""
    _check(A, w)
    return A.n - rank(cocycle_conditions(A, w), A.n, w.field) - 1


def beta_p(A: Arrangement, p: int) -> int:
    """beta_1 of the all-ones weight over F_p."""
    cache = A._cache.setdefault("beta_p", {})
    if p not in cache:
        cache[p] = beta1(A, WeightVector.ones(A.n, FieldTag.prime(p)))
    return cache[p]


# -- broken-circuit matrix -----------------------------------------------------


def _span_key(u, v) -> tuple:
    R, _ = row_reduce([u, v], len(u), FieldTag.rationals())
    return tuple(tuple(r) for r in R)


def rank2_flats_by_span(A: Arrangement) -> list[list[int]]:
    """Rank-2 flats as classes of hyperplane pairs spanning the same plane."""
    groups: dict[tuple, set] = defaultdict(set)
    for H, K in combinations(range(A.n), 2):
        groups[_span_key(A.normals[H], A.normals[K])].update((H, K))
    return sorted(sorted(g) for g in groups.values())


def os2_matrix(A: Arrangement, w: WeightVector) -> list[list]:
    """Matrix of eta -> eta * w from A^1 into A^2.

    A^2 has basis a_min(X) a_H for each rank-2 flat X and H in X other than
    its lowest index; other products are rewritten with the relation
    a_H a_K = a_min a_K - a_min a_H.
    """
    F = w.field
    rows = []
    for X in rank2_flats_by_span(A):
        h0 = X[0]
        row_of = {}
        for H in X[1:]:
            row_of[H] = len(rows)
            rows.append([F.zero()] * A.n)
        for H, K in combinations(X, 2):
            # coefficient of a_H a_K in eta * w is eta_H w_K - eta_K w_H
            terms = [(H, w[K]), (K, -w[H])]
            if H == h0:
                targets = [(row_of[K], 1)]
            else:
                targets = [(row_of[K], 1), (row_of[H], -1)]
            for r, sgn in targets:
                for col, c in terms:
                    rows[r][col] = F.reduce(rows[r][col] + sgn * c)
    return rows


def os2_matrix_beta(A: Arrangement, w: WeightVector) -> int:
    _check(A, w)
    if A.n > FULL_LATTICE_CAP:
        raise CapExceeded(f"broken-circuit matrix capped at n <= {FULL_LATTICE_CAP}")
    M = os2_matrix(A, w)
    return A.n - rank(M, A.n, w.field) - 1


# -- brute-force oracle ------------------------------------------------------


def _flat_rules(A: Arrangement, p: int) -> list[tuple[list[int], bool]]:
    """(members, p divides m) per rank-2 flat; ordered to cut the search early."""
    rules = [(sorted(X.members), X.multiplicity % p == 0) for X in rank2_flats(A)]
    rules.sort(key=lambda r: (r[1], len(r[0])))
    return rules


def count_cocycles(A: Arrangement, p: int, start: int, stop: int, chunk: int = 1 << 20) -> int:
    """Number of vectors with index in ``[start, stop)`` obeying the per-flat rules.

    Vector number ``k`` has base-p digits of ``k`` as its coordinates.  The
    rules are: the weights on X sum to zero when p divides m_X, and are all
    equal otherwise.  Counts over disjoint ranges add up.
    """
    rules = _flat_rules(A, p)
    powers = [p**j for j in range(A.n)]
    total = 0
    for lo in range(start, stop, chunk):
        idx = np.arange(lo, min(lo + chunk, stop), dtype=np.int64)
        digits: dict[int, np.ndarray] = {}

        def digit(j):
            if j not in digits:
                digits[j] = (idx // powers[j]) % p
            return digits[j]

        for members, divisible in rules:
            if idx.size == 0:
                break
            if divisible:
                keep = sum(digit(j) for j in members) % p == 0
            else:
                first = digit(members[0])
                keep = np.ones(idx.size, dtype=bool)
                for j in members[1:]:
                    keep &= digit(j) == first
            idx = idx[keep]
            digits = {j: d[keep] for j, d in digits.items()}
        total += int(idx.size)
    return total


def brute_force_beta_p(A: Arrangement, p: int, parts: int = 1) -> int:
    """beta_p by exhaustive enumeration of F_p^n (capped at p^n <= 10^7).

    ``parts`` splits the range into independent pieces whose counts are summed.
    """
    FieldTag.prime(p)
    size = p**A.n
    if size > BRUTE_FORCE_CAP:
        raise CapExceeded(f"{p}^{A.n} vectors exceeds the enumeration cap")
    bounds = [size * k // parts for k in range(parts + 1)]
    count = sum(count_cocycles(A, p, a, b) for a, b in zip(bounds, bounds[1:]))
    e, c = 0, count
    while c > 1 and c % p == 0:
        c //= p
        e += 1
    if c != 1:
        raise TheoremViolation(f"cocycle count {count} is not a power of {p}")
    return e - 1


def rational_ones(n: int, d: int) -> WeightVector:
    """The weight vector (1/d, ..., 1/d) over Q."""
    return WeightVector.constant(n, Fraction(1, d), FieldTag.rationals())
