"""Cyclotomic decomposition of H_1 of the Milnor fiber of a graphic arrangement.

For rank >= 3 the monodromy is governed by the mod-p Aomoto Betti numbers of
the all-ones weight: only the cyclotomic factor Phi_3 can occur beside t - 1,
with exponent beta_3 in {0, 1}, and beta_3 = 1 exactly for the graphs whose
arrangement is lattice-isotopic to D_3 or D_4.  Rank-2 arrangements use the
closed form b_d = n - 2 for every divisor d != 1 of n.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import lru_cache
from math import gcd

from .aomoto import beta_p
from .arrangement import Arrangement, build_arrangement
from .exceptions import PreconditionError, TheoremViolation
from .fields import is_prime
from .graph import SignedGraph, canonical_form, compact, complete_graph, coxeter_d


class ExceptionalClass(str, enum.Enum):
    NOT_EXCEPTIONAL = "NotExceptional"
    D3 = "D3"
    D4 = "D4"


def totient(d: int) -> int:
    return sum(1 for k in range(1, d + 1) if gcd(k, d) == 1)


def divisors(n: int) -> list[int]:
    return [d for d in range(1, n + 1) if n % d == 0]


@dataclass(frozen=True)
class CyclotomicDecomposition:
    """Exponent b_d of Q[t]/Phi_d for every divisor d of n."""

    n: int
    rank: int
    exponents: dict = field(hash=False)
    betas: dict = field(default_factory=dict, hash=False)

    def __getitem__(self, d: int) -> int:
        return self.exponents.get(d, 0)

    def as_dict(self) -> dict[int, int]:
        return {d: b for d, b in sorted(self.exponents.items()) if b}

    @property
    def dimension(self) -> int:
        """dim_Q H_1(F, Q)."""
        return sum(b * totient(d) for d, b in self.exponents.items())

    @property
    def formula(self) -> str:
        if self.rank >= 3:
            b2, b3, b5 = (self.betas[p] for p in (2, 3, 5))
            return f"(t-1)^{self.n - 1} ⊕ Φ2^{b2} ⊕ Φ4^{b2} ⊕ Φ3^{b3} ⊕ Φ5^{b5}"
        parts = [f"(t-1)^{self[1]}"] + [f"Φ{d}^{b}" for d, b in sorted(self.exponents.items()) if d > 1]
        return " ⊕ ".join(parts)


def _arrangement(G) -> Arrangement:
    return G if isinstance(G, Arrangement) else build_arrangement(G)


# -- exceptional patterns ------------------------------------------------------

#: triangle and tetrahedron patterns with beta_3 = 1, with one sign choice each
EXCEPTIONAL_PATTERNS: dict[str, SignedGraph] = {
    "all double edges on a triangle": coxeter_d(3),
    "negative triangle with a loop at every vertex": SignedGraph(3, [1, 2, 3], [(1, 2, -1), (1, 3, -1), (2, 3, -1)]),
    "loop at the apex of two double edges, simple base": SignedGraph(
        3, [3], [(1, 3, 1), (1, 3, -1), (2, 3, 1), (2, 3, -1), (1, 2, -1)]
    ),
    "K4 with every triangle negative": complete_graph(4),
    "all double edges on K4": coxeter_d(4),
}


@lru_cache(maxsize=None)
def exceptional_canonical_forms() -> frozenset:
    return frozenset(canonical_form(g).to_json() for g in EXCEPTIONAL_PATTERNS.values())


def matches_exceptional_pattern(G: SignedGraph) -> bool:
    return canonical_form(compact(G)).to_json() in exceptional_canonical_forms()


def classify_exceptional(G: SignedGraph, cross_check: bool = False) -> ExceptionalClass:
    A = build_arrangement(G)
    if A.rank < 3:
        raise PreconditionError(f"needs rank >= 3, got {A.rank}")
    b3 = beta_p(A, 3)
    if b3 == 0:
        cls = ExceptionalClass.NOT_EXCEPTIONAL
    elif b3 != 1:
        raise TheoremViolation(f"beta_3 = {b3}, but exceptional graphs have beta_3 = 1")
    elif A.n == 6:
        cls = ExceptionalClass.D3
    elif A.n == 12:
        cls = ExceptionalClass.D4
    else:
        raise TheoremViolation(f"beta_3 = 1 with n = {A.n}; exceptional graphs have n in {{6, 12}}")
    if cross_check and matches_exceptional_pattern(G) != (cls != ExceptionalClass.NOT_EXCEPTIONAL):
        raise TheoremViolation(f"beta_3 = {b3} disagrees with the exceptional pattern table for {G}")
    return cls


# -- decomposition -------------------------------------------------------------


def h1_decomposition(G) -> CyclotomicDecomposition:
    """Monodromy decomposition of H_1(F, Q) for a graph (or a rank <= 2 arrangement)."""
    A = _arrangement(G)
    n, r = A.n, A.rank
    if r == 1:
        return CyclotomicDecomposition(n, r, {1: 0})
    if r == 2:
        return CyclotomicDecomposition(n, r, {d: (n - 1 if d == 1 else n - 2) for d in divisors(n)})
    if not A.is_graphic:
        raise PreconditionError("rank >= 3 decomposition is only known for graphic arrangements")
    betas = {p: beta_p(A, p) for p in (2, 3, 5)}
    if betas[2] or betas[5]:
        raise TheoremViolation(f"beta_2 = {betas[2]}, beta_5 = {betas[5]}; both vanish in rank >= 3")
    if betas[3] not in (0, 1):
        raise TheoremViolation(f"beta_3 = {betas[3]} outside {{0, 1}}")
    if n % 3 and betas[3]:
        raise TheoremViolation(f"beta_3 = {betas[3]} although 3 does not divide n = {n}")
    block = {2: betas[2], 4: betas[2], 3: betas[3], 5: betas[5]}
    exps = {d: (n - 1 if d == 1 else block.get(d, 0)) for d in divisors(n)}
    return CyclotomicDecomposition(n, r, exps, betas)


def twisted_betti_equimonodromic(G, d: int) -> int:
    """b_1 of the complement with the rank-one local system sending every meridian to a primitive d-th root of 1."""
    A = _arrangement(G)
    if d == 1 or d < 1 or A.n % d:
        raise PreconditionError(f"d={d} must be a divisor of n={A.n} other than 1")
    return h1_decomposition(A)[d]


@dataclass(frozen=True)
class SharpnessReport:
    beta: int
    b: int
    equal: bool


def sharpness_report(G, p: int) -> SharpnessReport:
    """Compare the mod-p bound beta_p with the twisted Betti number at denominator p."""
    A = _arrangement(G)
    if not is_prime(p):
        raise PreconditionError(f"{p} is not prime")
    if A.n % p:
        raise PreconditionError(f"p={p} does not divide n={A.n}")
    beta = beta_p(A, p)
    b = twisted_betti_equimonodromic(A, p)
    if beta != b:
        raise TheoremViolation(f"modular bound beta_{p} = {beta} differs from b_{p} = {b}")
    return SharpnessReport(beta, b, True)
