"""Signed graphs with loops, switching, canonical forms and enumeration.

A graph on vertices ``1..l`` carries a set of loops (at most one per vertex)
and a set of signed edges ``(i, j, s)`` with ``i < j`` and ``s`` in ``{+1, -1}``.
A pair ``{i, j}`` may carry both signs (a double edge).  The edge ``(i, j, s)``
stands for the hyperplane ``x_i + s x_j = 0``; an unlabelled edge in a drawing
is negative, so an ordinary simple graph corresponds to the braid arrangement.
"""

from __future__ import annotations

import itertools
import json
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator, NamedTuple

import numpy as np

from .exceptions import CapExceeded, GraphFormatError, PreconditionError

ENUMERATION_CAP = 6


class Loop(NamedTuple):
    vertex: int

    def __str__(self) -> str:
        return f"loop {self.vertex}"


class Edge(NamedTuple):
    i: int
    j: int
    sign: int

    def __str__(self) -> str:
        return f"edge {self.i}-{self.j} ({'+' if self.sign > 0 else '-'})"


@dataclass(frozen=True)
class UnsignedGraph:
    vertex_count: int
    edges: frozenset  # of (i, j) with i < j


@dataclass(frozen=True)
class SignedGraph:
    vertex_count: int
    loops: frozenset = frozenset()
    edges: frozenset = frozenset()

    def __init__(self, vertex_count: int, loops: Iterable[int] = (), edges: Iterable = ()):
        loops = list(loops)
        edges = [tuple(e) for e in edges]
        if not isinstance(vertex_count, int) or isinstance(vertex_count, bool) or vertex_count < 1:
            raise GraphFormatError(f"vertex count must be a positive integer, got {vertex_count!r}")
        for v in loops:
            _check_vertex(v, vertex_count)
        if len(set(loops)) != len(loops):
            raise GraphFormatError("duplicate loop")
        norm = []
        for e in edges:
            if len(e) != 3:
                raise GraphFormatError(f"edge must be [i, j, sign], got {list(e)}")
            i, j, s = e
            _check_vertex(i, vertex_count)
            _check_vertex(j, vertex_count)
            if s not in (1, -1) or isinstance(s, bool):
                raise GraphFormatError(f"edge sign must be 1 or -1, got {s!r}")
            if i == j:
                raise GraphFormatError("self-edge must be a loop")
            if i > j:
                i, j = j, i
            norm.append(Edge(i, j, s))
        if len(set(norm)) != len(norm):
            raise GraphFormatError("duplicate edge")
        object.__setattr__(self, "vertex_count", vertex_count)
        object.__setattr__(self, "loops", frozenset(loops))
        object.__setattr__(self, "edges", frozenset(norm))

    # -- basic views ---------------------------------------------------------

    @property
    def n(self) -> int:
        """Number of hyperplanes the graph defines."""
        return len(self.loops) + len(self.edges)

    def sorted_loops(self) -> list[int]:
        return sorted(self.loops)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def origins(self) -> list:
        """Hyperplane sources in serialized order: loops, then edges."""
        return [Loop(v) for v in self.sorted_loops()] + self.sorted_edges()

    def support(self) -> set[int]:
        """Vertices touched by a loop or an edge."""
        s = set(self.loops)
        for i, j, _ in self.edges:
            s.update((i, j))
        return s

    def has_edge(self, i: int, j: int, sign: int) -> bool:
        if i > j:
            i, j = j, i
        return Edge(i, j, sign) in self.edges

    def is_double(self, i: int, j: int) -> bool:
        return self.has_edge(i, j, 1) and self.has_edge(i, j, -1)

    # -- serialization -------------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "vertices": self.vertex_count,
            "loops": self.sorted_loops(),
            "edges": [[i, j, s] for i, j, s in self.sorted_edges()],
        }

    def to_json(self) -> str:
        return serialize(self)

    def __str__(self) -> str:
        return self.to_json()


def _check_vertex(v, l: int) -> None:
    if not isinstance(v, int) or isinstance(v, bool):
        raise GraphFormatError(f"vertex id must be an integer, got {v!r}")
    if not 1 <= v <= l:
        raise GraphFormatError(f"vertex id {v} out of range 1..{l}")


def serialize(G: SignedGraph) -> str:
    """Canonical compact JSON document for ``G``."""
    return json.dumps(G.to_dict(), separators=(",", ":"))


def from_dict(doc) -> SignedGraph:
    if not isinstance(doc, dict):
        raise GraphFormatError("graph document must be a JSON object")
    unknown = set(doc) - {"vertices", "loops", "edges"}
    if unknown:
        raise GraphFormatError(f"unknown keys {sorted(unknown)}")
    if "vertices" not in doc:
        raise GraphFormatError("missing 'vertices'")
    loops = doc.get("loops", [])
    edges = doc.get("edges", [])
    if not isinstance(loops, list) or not isinstance(edges, list):
        raise GraphFormatError("'loops' and 'edges' must be arrays")
    for e in edges:
        if not isinstance(e, list):
            raise GraphFormatError(f"edge must be an array, got {e!r}")
    return SignedGraph(doc["vertices"], loops, edges)


def parse_graph(text: str) -> SignedGraph:
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GraphFormatError(f"malformed JSON: {exc}") from None
    return from_dict(doc)


def underlying(G: SignedGraph) -> UnsignedGraph:
    return UnsignedGraph(G.vertex_count, frozenset((i, j) for i, j, _ in G.edges))


def switch(G: SignedGraph, v: int) -> SignedGraph:
    """Flip the sign of every edge at ``v`` (the coordinate change x_v -> -x_v)."""
    if not 1 <= v <= G.vertex_count:
        raise PreconditionError(f"vertex {v} out of range 1..{G.vertex_count}")
    edges = [(i, j, -s if v in (i, j) else s) for i, j, s in G.edges]
    return SignedGraph(G.vertex_count, G.loops, edges)


def relabel(G: SignedGraph, perm) -> SignedGraph:
    """Apply a vertex permutation given as a mapping ``old -> new`` on ``1..l``."""
    perm = _as_mapping(perm, G.vertex_count)
    return SignedGraph(
        G.vertex_count,
        [perm[v] for v in G.loops],
        [(perm[i], perm[j], s) for i, j, s in G.edges],
    )


def transform(G: SignedGraph, perm, switched: Iterable[int] = ()) -> SignedGraph:
    """Switch at every vertex of ``switched``, then relabel by ``perm``."""
    sw = set(switched)
    edges = [(i, j, s * (-1 if i in sw else 1) * (-1 if j in sw else 1)) for i, j, s in G.edges]
    return relabel(SignedGraph(G.vertex_count, G.loops, edges), perm)


def _as_mapping(perm, l: int) -> dict:
    if isinstance(perm, dict):
        mapping = dict(perm)
    else:
        perm = list(perm)
        mapping = {v + 1: perm[v] for v in range(len(perm))}
    if sorted(mapping) != list(range(1, l + 1)) or sorted(mapping.values()) != list(range(1, l + 1)):
        raise PreconditionError("not a permutation of the vertex set")
    return mapping


def compact(G: SignedGraph) -> SignedGraph:
    """Drop isolated vertices, renumbering the rest in increasing order."""
    keep = sorted(G.support())
    if not keep:
        return G
    ren = {v: k + 1 for k, v in enumerate(keep)}
    return SignedGraph(len(keep), [ren[v] for v in G.loops], [(ren[i], ren[j], s) for i, j, s in G.edges])


def is_connected(G: SignedGraph) -> bool:
    """Whether the non-isolated vertices form one connected piece."""
    sup = G.support()
    if not sup:
        return False
    adj = {v: set() for v in sup}
    for i, j, _ in G.edges:
        adj[i].add(j)
        adj[j].add(i)
    start = next(iter(sup))
    seen = {start}
    stack = [start]
    while stack:
        for w in adj[stack.pop()]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen == sup


# -- bit codes -----------------------------------------------------------------
#
# A graph on l vertices is packed into an integer: bit v-1 for the loop at v,
# then two bits per vertex pair (negative sign first).  Each switching/relabel
# transform is a permutation of these bit positions.


def _pairs(l: int) -> list[tuple[int, int]]:
    return list(itertools.combinations(range(1, l + 1), 2))


def _bit_layout(l: int):
    pairs = _pairs(l)
    pair_index = {p: k for k, p in enumerate(pairs)}
    nbits = l + 2 * len(pairs)
    return pairs, pair_index, nbits


def encode(G: SignedGraph) -> int:
    l = G.vertex_count
    _, pair_index, _ = _bit_layout(l)
    code = 0
    for v in G.loops:
        code |= 1 << (v - 1)
    for i, j, s in G.edges:
        code |= 1 << (l + 2 * pair_index[(i, j)] + (0 if s < 0 else 1))
    return code


def decode(code: int, l: int) -> SignedGraph:
    pairs, _, nbits = _bit_layout(l)
    loops = [v for v in range(1, l + 1) if code >> (v - 1) & 1]
    edges = []
    for k, (i, j) in enumerate(pairs):
        for b, s in ((0, -1), (1, 1)):
            if code >> (l + 2 * k + b) & 1:
                edges.append((i, j, s))
    return SignedGraph(l, loops, edges)


@lru_cache(maxsize=None)
def _transform_tables(l: int) -> np.ndarray:
    """Byte lookup tables, shape ``(T, nbytes, 256)``, one row per transform.

    ``image(code) = OR_b tables[t, b, byte_b(code)]``.
    """
    pairs, pair_index, nbits = _bit_layout(l)
    nbytes = (nbits + 7) // 8
    perms = list(itertools.permutations(range(1, l + 1)))
    subsets = list(itertools.product((1, -1), repeat=l))
    bitmaps = []
    for perm in perms:
        for sigma in subsets:
            target = [0] * nbits
            for v in range(1, l + 1):
                target[v - 1] = perm[v - 1] - 1
            for (i, j), k in pair_index.items():
                a, b = perm[i - 1], perm[j - 1]
                if a > b:
                    a, b = b, a
                flip = sigma[i - 1] * sigma[j - 1]
                kk = pair_index[(a, b)]
                for bit, s in ((0, -1), (1, 1)):
                    s2 = s * flip
                    target[l + 2 * k + bit] = l + 2 * kk + (0 if s2 < 0 else 1)
            bitmaps.append(target)
    T = len(bitmaps)
    tables = np.zeros((T, nbytes, 256), dtype=np.uint64)
    values = np.arange(256, dtype=np.uint64)
    for t, target in enumerate(bitmaps):
        for src in range(nbits):
            b, off = divmod(src, 8)
            hit = (values >> np.uint64(off)) & np.uint64(1)
            tables[t, b] |= hit << np.uint64(target[src])
    return tables


def orbit_codes(code: int, l: int) -> np.ndarray:
    """Images of ``code`` under all ``l! * 2**l`` switching/relabel transforms."""
    tables = _transform_tables(l)
    T, nbytes, _ = tables.shape
    out = np.zeros(T, dtype=np.uint64)
    for b in range(nbytes):
        out |= tables[:, b, (code >> (8 * b)) & 0xFF]
    return out


def canonical_code(G: SignedGraph) -> int:
    """Smallest bit code in the switching/relabel orbit (a class invariant)."""
    return int(orbit_codes(encode(G), G.vertex_count).min())


def canonical_form(G: SignedGraph) -> SignedGraph:
    """Orbit representative whose serialization is smallest as a byte string.

    Cost is ``l! * 2**l`` transforms; fine for the desk-scale range ``l <= 6``.
    """
    l = G.vertex_count
    images = np.unique(orbit_codes(encode(G), l))
    best = min((serialize(decode(int(c), l)) for c in images))
    return parse_graph(best)


def switching_isomorphic(G: SignedGraph, H: SignedGraph) -> bool:
    if G.vertex_count != H.vertex_count:
        return False
    return canonical_code(G) == canonical_code(H)


# -- enumeration ---------------------------------------------------------------


def enumerate_graphs(v_max: int, connected_only: bool = False) -> Iterator[SignedGraph]:
    """One representative per class of nonempty graphs on at most ``v_max`` vertices.

    Classes are taken up to relabeling and switching, ignoring isolated
    vertices: every representative is the canonical form of a graph with no
    isolated vertex.  Output is ordered by vertex count, hyperplane count and
    serialization.  ``v_max <= 5`` runs by orbit marking over all bit codes;
    ``v_max == 6`` falls back to element-by-element augmentation, which is
    correct but takes hours in pure Python.
    """
    if not isinstance(v_max, int) or v_max < 1:
        raise PreconditionError("v_max must be a positive integer")
    if v_max > ENUMERATION_CAP:
        raise CapExceeded(f"enumeration is capped at {ENUMERATION_CAP} vertices")
    if v_max <= 5:
        reps = _orbit_representatives(v_max)
    else:
        reps = _augmentation_representatives(v_max)
    graphs = []
    for code in reps:
        G = canonical_form(compact(decode(code, v_max)))
        if connected_only and not is_connected(G):
            continue
        graphs.append(G)
    graphs.sort(key=lambda g: (g.vertex_count, g.n, serialize(g)))
    yield from graphs


def _orbit_representatives(l: int) -> list[int]:
    nbits = _bit_layout(l)[2]
    seen = np.zeros(1 << nbits, dtype=bool)
    seen[0] = True
    reps = []
    pos = 1
    total = 1 << nbits
    while pos < total:
        if seen[pos]:
            nxt = np.argmin(seen[pos:])
            if seen[pos + nxt]:
                break
            pos += int(nxt)
        orbit = orbit_codes(pos, l)
        seen[orbit.astype(np.int64)] = True
        reps.append(pos)
        pos += 1
    return reps


def _augmentation_representatives(l: int) -> list[int]:
    nbits = _bit_layout(l)[2]
    level = {0}
    reps = []
    for _ in range(nbits):
        nxt = set()
        for code in level:
            for b in range(nbits):
                if not code >> b & 1:
                    nxt.add(int(orbit_codes(code | (1 << b), l).min()))
        reps.extend(sorted(nxt))
        level = nxt
    return reps


# -- named families ------------------------------------------------------------


def complete_graph(l: int, signs=(-1,), loops: bool = False) -> SignedGraph:
    """Complete graph on ``l`` vertices with the given edge signs on every pair.

    ``signs=(-1,)`` is the braid arrangement, ``(1, -1)`` the type-D Coxeter
    arrangement, and adding ``loops=True`` to the latter gives type B.
    """
    edges = [(i, j, s) for i, j in _pairs(l) for s in signs]
    return SignedGraph(l, range(1, l + 1) if loops else (), edges)


def coxeter_d(l: int) -> SignedGraph:
    return complete_graph(l, (1, -1))
