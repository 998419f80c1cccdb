"""Command-line front end.

Usage examples
--------------
  milnorgraph milnor d3.json
  milnorgraph beta k4.json --p 11 --cross-check
  milnorgraph lattice d3.json --max-rank 2
  milnorgraph certify d3.json --d 2
  milnorgraph enumerate --vmax 3
  milnorgraph verify --vmax 4

Graph documents are read from a file path, or standard input when the path
is omitted or ``-``.  Exit status: 0 success, 1 bad input, 2 a computed value
contradicted a theorem (an internal bug).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .aomoto import BRUTE_FORCE_CAP, beta_p, brute_force_beta_p, os2_matrix_beta
from .arrangement import (
    FULL_LATTICE_CAP,
    build_arrangement,
    flats,
    is_dense,
    poincare_polynomial,
    rank2_profile,
    rank2_shape,
)
from .exceptions import MilnorGraphError, PreconditionError, TheoremViolation
from .fields import FieldTag, WeightVector, is_prime
from .graph import SignedGraph, enumerate_graphs, parse_graph
from .milnor import ExceptionalClass, classify_exceptional, h1_decomposition
from .resonance import vanishing_certificate
from .verify import run_all

EXIT_OK, EXIT_INPUT, EXIT_THEOREM = 0, 1, 2
DEFAULT_PRIMES = (2, 3, 5, 7)


def _read_graph(path: str | None) -> SignedGraph:
    if path in (None, "-"):
        return parse_graph(sys.stdin.read())
    with open(path, encoding="utf-8") as fh:
        return parse_graph(fh.read())


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj, indent=2, ensure_ascii=False) + "\n")


def _primes(args) -> list[int]:
    extra = args.p or []
    for p in extra:
        if not is_prime(p):
            raise PreconditionError(f"--p {p} is not prime")
    return sorted(set(DEFAULT_PRIMES) | set(extra))


def _beta_table(A, primes, cross_check: bool, oracle: bool) -> dict:
    table = {}
    for p in primes:
        b = beta_p(A, p)
        if cross_check:
            other = os2_matrix_beta(A, WeightVector.ones(A.n, FieldTag.prime(p)))
            if other != b:
                raise TheoremViolation(f"beta_{p}: flat-local {b} vs broken-circuit matrix {other}")
        if oracle and p**A.n <= BRUTE_FORCE_CAP:
            other = brute_force_beta_p(A, p)
            if other != b:
                raise TheoremViolation(f"beta_{p}: flat-local {b} vs enumeration {other}")
        table[str(p)] = b
    return table


def _class_name(G, A, cross_check: bool) -> str:
    if A.rank < 3:
        return ExceptionalClass.NOT_EXCEPTIONAL.value
    return classify_exceptional(G, cross_check=cross_check).value


def _milnor_report(G, A, cross_check: bool) -> dict:
    dec = h1_decomposition(G)
    return {
        "n": A.n,
        "rank": A.rank,
        "decomposition": [{"d": d, "exp": b} for d, b in sorted(dec.exponents.items())],
        "class": _class_name(G, A, cross_check),
        "formula": dec.formula,
    }


def _flat_entry(A, X) -> dict:
    return {
        "members": X.sorted_members(),
        "rank": X.rank,
        "m": X.multiplicity,
        "dense": is_dense(A, X),
        "shape": rank2_shape(A, X).value if X.rank == 2 else None,
    }


def cmd_beta(args) -> int:
    G = _read_graph(args.graph)
    A = build_arrangement(G)
    _emit({"n": A.n, "rank": A.rank, "beta": _beta_table(A, _primes(args), args.cross_check, args.oracle)})
    return EXIT_OK


def cmd_milnor(args) -> int:
    G = _read_graph(args.graph)
    A = build_arrangement(G)
    if args.cross_check or args.oracle:
        _beta_table(A, (2, 3, 5), args.cross_check, args.oracle)
    _emit(_milnor_report(G, A, args.cross_check))
    return EXIT_OK


def cmd_lattice(args) -> int:
    G = _read_graph(args.graph)
    A = build_arrangement(G)
    top = A.rank if args.max_rank is None else args.max_rank
    _emit([_flat_entry(A, X) for X in flats(A, top)])
    return EXIT_OK


def cmd_certify(args) -> int:
    G = _read_graph(args.graph)
    A = build_arrangement(G)
    K = vanishing_certificate(A, args.d, args.k)
    if K is None:
        statement = f"no hyperplane certifies vanishing for d={args.d}; nothing is concluded"
        cert = "none"
    else:
        cert = A.origin_label(K)
        qs = "q = 1" if args.k == 1 else f"all q <= {args.k}"
        statement = f"b_(q,{args.d}) = 0 for {qs}: {args.d} divides no dense multiplicity away from {cert}"
    _emit({"d": args.d, "k": args.k, "certificate": cert, "index": K, "statement": statement})
    return EXIT_OK


def cmd_analyze(args) -> int:
    G = _read_graph(args.graph)
    A = build_arrangement(G)
    report = {
        "graph": G.to_dict(),
        "n": A.n,
        "rank": A.rank,
        "ambient_dim": A.ambient_dim,
        "hyperplanes": [A.origin_label(h) for h in range(A.n)],
        "rank2_profile": [
            {"members": X.sorted_members(), "m": X.multiplicity, "shape": shape.value}
            for X, shape in rank2_profile(A)
        ],
        "poincare": list(poincare_polynomial(A).coeffs) if A.n <= FULL_LATTICE_CAP else None,
        "beta": _beta_table(A, _primes(args), args.cross_check, args.oracle),
    }
    report.update({k: v for k, v in _milnor_report(G, A, args.cross_check).items() if k not in ("n", "rank")})
    _emit(report)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    out = []
    for G in enumerate_graphs(args.vmax, connected_only=args.connected):
        A = build_arrangement(G)
        out.append({"graph": G.to_dict(), "n": A.n, "rank": A.rank, "beta3": beta_p(A, 3)})
    _emit(out)
    return EXIT_OK


def cmd_verify(args) -> int:
    results = run_all(args.vmax, oracle_cap=args.oracle_cap)
    ok = all(r.ok for r in results)
    _emit({"vmax": args.vmax, "ok": ok, "suites": [r.to_dict() for r in results]})
    return EXIT_OK if ok else EXIT_THEOREM


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="milnorgraph", description=__doc__.split("\n")[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True)

    def graph_cmd(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("graph", nargs="?", help="graph JSON file (default: stdin)")
        sp.add_argument("--format", choices=["json"], default="json")
        sp.add_argument("--cross-check", action="store_true", help="recompute beta via the broken-circuit matrix")
        sp.add_argument("--oracle", action="store_true", help="recompute beta by enumeration when within cap")
        sp.set_defaults(func=func)
        return sp

    sp = graph_cmd("analyze", cmd_analyze, "full report")
    sp.add_argument("--p", type=int, action="append", help="extra prime (repeatable)")
    sp = graph_cmd("beta", cmd_beta, "mod-p Aomoto Betti numbers")
    sp.add_argument("--p", type=int, action="append", help="extra prime (repeatable)")
    graph_cmd("milnor", cmd_milnor, "cyclotomic decomposition of H_1 of the Milnor fiber")
    sp = graph_cmd("lattice", cmd_lattice, "intersection lattice report")
    sp.add_argument("--max-rank", type=int, default=None)
    sp = graph_cmd("certify", cmd_certify, "vanishing certificate for a divisor d of n")
    sp.add_argument("--d", type=int, required=True)
    sp.add_argument("--k", type=int, default=1)

    sp = sub.add_parser("enumerate", help="one graph per switching/relabel class")
    sp.add_argument("--vmax", type=int, required=True)
    sp.add_argument("--connected", action="store_true")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("verify", help="run the self-check suites over all classes")
    sp.add_argument("--vmax", type=int, default=4)
    sp.add_argument("--oracle-cap", type=int, default=10**6, help="max p^n for the enumeration oracle")
    sp.set_defaults(func=cmd_verify)
    return parser


def run_cli(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code == 0 else EXIT_INPUT
    try:
        return args.func(args)
    except TheoremViolation as exc:
        print(f"theorem violation: {exc}", file=sys.stderr)
        return EXIT_THEOREM
    except (MilnorGraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


def main() -> None:
    sys.exit(run_cli())
