"""Batch self-checks over every graph class up to a vertex bound.

Each suite walks the enumerated classes and counts passes and failures.  A
failure is a disagreement between independent computations or a result that
contradicts the known structure of graphic arrangements.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb
from typing import Callable, Iterable

from .aomoto import BRUTE_FORCE_CAP, beta_p, brute_force_beta_p, os2_matrix_beta
from .arrangement import Arrangement, build_arrangement, rank2_flats, rank2_profile
from .exceptions import MilnorGraphError
from .fields import FieldTag, WeightVector, is_prime
from .graph import SignedGraph, enumerate_graphs
from .milnor import classify_exceptional, h1_decomposition, matches_exceptional_pattern, sharpness_report
from .resonance import certified_vanishing_divisors

ORACLE_MAX_N = 14


@dataclass
class SuiteResult:
    name: str
    passed: int = 0
    failed: int = 0
    failures: list = field(default_factory=list)

    def record(self, ok: bool, what: str) -> None:
        if ok:
            self.passed += 1
        else:
            self.failed += 1
            if len(self.failures) < 20:
                self.failures.append(what)

    @property
    def ok(self) -> bool:
        return self.failed == 0

    def to_dict(self) -> dict:
        return {"name": self.name, "passed": self.passed, "failed": self.failed, "failures": self.failures}


def _guard(fn: Callable[[], bool]) -> tuple[bool, str]:
    try:
        return bool(fn()), ""
    except MilnorGraphError as exc:
        return False, f": {type(exc).__name__}: {exc}"


def oracle_equivalence(cases, primes=(2, 3, 5), cap: int = BRUTE_FORCE_CAP) -> SuiteResult:
    """Flat-local solve, broken-circuit matrix and enumeration agree."""
    res = SuiteResult("oracle_equivalence")
    for G, A in cases:
        for p in primes:
            def check(A=A, p=p):
                b = beta_p(A, p)
                if b != os2_matrix_beta(A, WeightVector.ones(A.n, FieldTag.prime(p))):
                    return False
                if A.n <= ORACLE_MAX_N and p**A.n <= cap:
                    return b == brute_force_beta_p(A, p)
                return True

            ok, why = _guard(check)
            res.record(ok, f"{G} p={p}{why}")
    return res


def exceptional_graphs(cases) -> SuiteResult:
    """beta_3 is nonzero exactly on the exceptional patterns, and equals 1 there."""
    res = SuiteResult("exceptional_graphs")
    for G, A in cases:
        if A.rank < 3:
            continue

        def check(G=G, A=A):
            b3 = beta_p(A, 3)
            classify_exceptional(G)
            return (b3 != 0) == matches_exceptional_pattern(G) and b3 in (0, 1)

        ok, why = _guard(check)
        res.record(ok, f"{G}{why}")
    return res


def prime_vanishing(cases, primes=(2, 5, 7)) -> SuiteResult:
    res = SuiteResult("prime_vanishing")
    for G, A in cases:
        if A.rank < 3:
            continue
        ok, why = _guard(lambda A=A: all(beta_p(A, p) == 0 for p in primes))
        res.record(ok, f"{G}{why}")
    return res


def sharpness(cases) -> SuiteResult:
    res = SuiteResult("sharpness")
    for G, A in cases:
        for p in range(2, A.n + 1):
            if is_prime(p) and A.n % p == 0:
                ok, why = _guard(lambda G=G, p=p: sharpness_report(G, p).equal)
                res.record(ok, f"{G} p={p}{why}")
    return res


def certificates(cases) -> SuiteResult:
    """Divisors outside {2, 3, 4} are certified, and certified divisors carry exponent 0."""
    res = SuiteResult("certificates")
    for G, A in cases:
        if A.rank < 3:
            continue

        def check(G=G, A=A):
            cert = certified_vanishing_divisors(A)
            expected = {d for d in range(5, A.n + 1) if A.n % d == 0}
            dec = h1_decomposition(G)
            return expected <= cert and all(dec[d] == 0 for d in cert)

        ok, why = _guard(check)
        res.record(ok, f"{G}{why}")
    return res


def pair_counting(cases) -> SuiteResult:
    """Each pair of hyperplanes lies in exactly one rank-2 flat; shapes are all known."""
    res = SuiteResult("pair_counting")
    for G, A in cases:
        def check(A=A):
            total = sum(comb(X.multiplicity, 2) for X in rank2_flats(A))
            rank2_profile(A)
            return total == comb(A.n, 2)

        ok, why = _guard(check)
        res.record(ok, f"{G}{why}")
    return res


def run_all(v_max: int, oracle_cap: int = BRUTE_FORCE_CAP, graphs: Iterable[SignedGraph] | None = None) -> list[SuiteResult]:
    if graphs is None:
        graphs = enumerate_graphs(v_max)
    cases: list[tuple[SignedGraph, Arrangement]] = [(G, build_arrangement(G)) for G in graphs]
    return [
        oracle_equivalence(cases, cap=oracle_cap),
        exceptional_graphs(cases),
        prime_vanishing(cases),
        sharpness(cases),
        certificates(cases),
        pair_counting(cases),
    ]
