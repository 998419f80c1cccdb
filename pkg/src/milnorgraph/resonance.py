"""Nonresonance, admissibility and vanishing certificates for rational weights.

A rational weight w assigns a number to every hyperplane; for a flat X the
quantity sum_X w adds the weights of the hyperplanes through X.  Integer
shifts of w do not change the rank-one local system it exponentiates to,
which is what makes the shift searches below meaningful.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .aomoto import beta1, sigma
from .arrangement import Arrangement, Flat, build_arrangement, center, flats, is_dense, m_list
from .exceptions import PreconditionError, TheoremViolation
from .fields import FieldTag, WeightVector
from .graph import coxeter_d

Q = FieldTag.rationals()


def _positive_integer(x: Fraction) -> bool:
    return x.denominator == 1 and x > 0


def _negative_integer(x: Fraction) -> bool:
    return x.denominator == 1 and x < 0


def _require_rational(A: Arrangement, w: WeightVector) -> None:
    if not w.field.is_rational:
        raise PreconditionError("nonresonance is defined for rational weights")
    if len(w) != A.n:
        raise PreconditionError("index mismatch between weights and arrangement")


def is_nonresonant(A: Arrangement, w: WeightVector) -> bool:
    """No dense flat has a positive-integer weight sum and the center's is not a negative integer."""
    _require_rational(A, w)
    for X in A.lattice():
        if X.rank >= 1 and is_dense(A, X) and _positive_integer(sigma(A, w, X)):
            return False
    return not _negative_integer(sigma(A, w, center(A)))


def is_k_nonresonant(A: Arrangement, w: WeightVector, k: int) -> bool:
    """Dense flats of rank at most k+1 avoid positive integers; the center sums to zero."""
    _require_rational(A, w)
    if k < 1:
        raise PreconditionError("k must be at least 1")
    if sigma(A, w, center(A)) != 0:
        return False
    for X in flats(A, min(k + 1, A.rank)):
        if is_dense(A, X) and _positive_integer(sigma(A, w, X)):
            return False
    return True


def _check_certificate_args(A: Arrangement, d: int, k: int) -> None:
    if A.rank < 3:
        raise PreconditionError(f"needs rank >= 3, arrangement has rank {A.rank}")
    if not 1 <= k < A.rank - 1:
        raise PreconditionError(f"k={k} must satisfy 1 <= k < rank - 1 = {A.rank - 1}")
    if d == 1:
        raise PreconditionError("d must differ from 1")
    if d < 1 or A.n % d:
        raise PreconditionError(f"d={d} does not divide n={A.n}")


def vanishing_certificate(A: Arrangement, d: int, k: int = 1) -> int | None:
    """A hyperplane K such that d divides no multiplicity in m_{k+1} away from K.

    A returned K proves b_{q,d}(A) = 0 for all q <= k.  None means no
    hyperplane works, which proves nothing.
    """
    _check_certificate_args(A, d, k)
    for K in range(A.n):
        if all(m % d for m in m_list(A, k + 1, avoid=K)):
            return K
    return None


def certificate_weight(A: Arrangement, d: int, K: int) -> WeightVector:
    """(1/d, ..., 1/d) minus the integer spike n/d at K."""
    coeffs = [Fraction(1, d)] * A.n
    coeffs[K] -= Fraction(A.n, d)
    return WeightVector(Q, tuple(coeffs))


def certified_vanishing_divisors(A: Arrangement) -> set[int]:
    if A.rank < 3:
        raise PreconditionError(f"needs rank >= 3, arrangement has rank {A.rank}")
    return {d for d in range(2, A.n + 1) if A.n % d == 0 and vanishing_certificate(A, d, 1) is not None}


# -- admissibility -------------------------------------------------------------


@dataclass(frozen=True)
class Found:
    """The shift ``alpha`` makes ``1/d + sign * alpha`` k-nonresonant."""

    alpha: tuple
    sign: int

    def weight(self, d: int) -> WeightVector:
        return WeightVector(Q, tuple(Fraction(1, d) + self.sign * a for a in self.alpha))


@dataclass(frozen=True)
class NotFoundWithinBound:
    """No shift in the searched box works.  Not a proof of inadmissibility."""

    bound: int


def admissibility_search(A: Arrangement, d: int, k: int, bound: int) -> Found | NotFoundWithinBound:
    """Look for an integer shift making the weight 1/d on every hyperplane k-nonresonant.

    Candidates are the single spikes n/d (subtracted) at each hyperplane,
    then every vector in [-bound, bound]^n (added) in lexicographic order.
    The box is symmetric, so subtracting box vectors yields nothing new.
    """
    if d < 2:
        raise PreconditionError("d must be at least 2")
    if bound < 1:
        raise PreconditionError("bound must be at least 1")
    if k < 1:
        raise PreconditionError("k must be at least 1")
    n = A.n
    if n % d == 0:
        for K in range(n):
            alpha = tuple(n // d if h == K else 0 for h in range(n))
            cand = Found(alpha, -1)
            if is_k_nonresonant(A, cand.weight(d), k):
                return cand
    t = _box_search(A, d, k, bound)
    if t is None:
        return NotFoundWithinBound(bound)
    cand = Found(t, 1)
    if not is_k_nonresonant(A, cand.weight(d), k):
        raise TheoremViolation("box search returned a resonant shift")
    return cand


def _box_search(A: Arrangement, d: int, k: int, bound: int) -> tuple | None:
    n = A.n
    # weight sums are integral only where d | m_X; there sum_X t <= -m_X/d
    if n % d:
        return None
    target = -(n // d)
    ineqs = []
    for X in flats(A, min(k + 1, A.rank)):
        if X.multiplicity % d == 0 and is_dense(A, X):
            ineqs.append((sorted(X.members), -(X.multiplicity // d)))
    touching = [[] for _ in range(n)]
    last_member = []
    for c, (members, _) in enumerate(ineqs):
        for h in members:
            touching[h].append(c)
        last_member.append(members[-1])
    sums = [0] * len(ineqs)
    remaining = [len(m) for m, _ in ineqs]
    limits = [u for _, u in ineqs]
    t = [0] * n

    def feasible(j: int, total: int) -> bool:
        rest = n - j - 1
        if not total - bound * rest <= target <= total + bound * rest:
            return False
        return all(sums[c] - bound * remaining[c] <= limits[c] for c in touching[j])

    def dfs(j: int, total: int) -> bool:
        if j == n:
            return total == target
        for v in range(-bound, bound + 1):
            t[j] = v
            for c in touching[j]:
                sums[c] += v
                remaining[c] -= 1
            if feasible(j, total + v) and dfs(j + 1, total + v):
                return True
            for c in touching[j]:
                sums[c] -= v
                remaining[c] += 1
        return False

    return tuple(t) if dfs(0, 0) else None


# -- characteristic-zero b_3 of D_3, D_4 -----------------------------------------


def abc_shift(A: Arrangement, abc: tuple[int, int, int]) -> tuple:
    """Integer shift constant on opposite pairs: 12,34 -> a; 13,24 -> b; 23,14 -> c."""
    a, b, c = abc
    table = {(1, 2): a, (3, 4): a, (1, 3): b, (2, 4): b, (2, 3): c, (1, 4): c}
    out = []
    for H in A.hyperplanes:
        o = H.origin
        if o is None or not hasattr(o, "j") or (o.i, o.j) not in table:
            raise PreconditionError("shift pattern only covers edges among vertices 1..4")
        out.append(table[(o.i, o.j)])
    return tuple(out)


def deligne_b3_coxeter_d(v: int, abc: tuple[int, int, int] = (1, 1, -3)) -> int:
    """b_3 of the type-D Coxeter arrangement of rank 3 or 4, over Q.

    Shifts 1/3 by an integer pattern with a + b + c = -1, checks the result
    is 1-nonresonant, and returns beta_1 of the shifted weight.
    """
    if v not in (3, 4):
        raise PreconditionError("only D_3 and D_4 are supported")
    if sum(abc) != -1:
        raise PreconditionError("the shift needs a + b + c = -1")
    A = build_arrangement(coxeter_d(v))
    alpha = abc_shift(A, abc)
    w = WeightVector(Q, tuple(Fraction(1, 3) + x for x in alpha))
    if not is_k_nonresonant(A, w, 1):
        raise TheoremViolation(f"1/3 + {abc} shift is not 1-nonresonant on D_{v}")
    return beta1(A, w)
