"""Central hyperplane arrangements with integer normals and their lattices.

Flats are stored as sets of hyperplane indices (0-based, in arrangement
order) closed under rational span.  All rank computations are exact.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from itertools import combinations
from typing import Iterable, Sequence

from .exceptions import CapExceeded, PreconditionError, TheoremViolation
from .fields import integer_rank
from .graph import Edge, Loop, SignedGraph

FULL_LATTICE_CAP = 20


@dataclass(frozen=True)
class Hyperplane:
    normal: tuple
    origin: Loop | Edge | None = None

    def __str__(self) -> str:
        if self.origin is not None:
            return str(self.origin)
        return "normal " + str(list(self.normal))


@dataclass(frozen=True)
class Flat:
    members: frozenset
    rank: int

    @property
    def multiplicity(self) -> int:
        return len(self.members)

    m = multiplicity

    def sorted_members(self) -> list[int]:
        return sorted(self.members)

    def __contains__(self, h: int) -> bool:
        return h in self.members


class Polynomial:
    """Integer polynomial, coefficients by ascending degree."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int]):
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs = tuple(c)

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __call__(self, t):
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * t + c
        return acc

    def __eq__(self, other) -> bool:
        if isinstance(other, Polynomial):
            return self.coeffs == other.coeffs
        if isinstance(other, (list, tuple)):
            return self.coeffs == Polynomial(other).coeffs
        return NotImplemented

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __add__(self, other: "Polynomial") -> "Polynomial":
        a, b = self.coeffs, other.coeffs
        k = max(len(a), len(b))
        return Polynomial((a[i] if i < len(a) else 0) + (b[i] if i < len(b) else 0) for i in range(k))

    def __mul__(self, other: "Polynomial") -> "Polynomial":
        out = [0] * (len(self.coeffs) + len(other.coeffs))
        for i, x in enumerate(self.coeffs):
            for j, y in enumerate(other.coeffs):
                out[i + j] += x * y
        return Polynomial(out)

    def shift(self, k: int = 1) -> "Polynomial":
        """Multiply by t**k."""
        return Polynomial((0,) * k + self.coeffs)

    def divmod_linear(self, root: int):
        """Synthetic division by ``t - root``: returns (quotient, remainder)."""
        if not self.coeffs:
            return Polynomial(()), 0
        q = []
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * root + c
            q.append(acc)
        rem = q.pop()
        return Polynomial(reversed(q)), rem

    def __repr__(self) -> str:
        terms = []
        for k, c in enumerate(self.coeffs):
            if c:
                terms.append(str(c) if k == 0 else f"{c}t" if k == 1 else f"{c}t^{k}")
        return " + ".join(terms) or "0"


def divides_one_plus_t_squared(P: Polynomial) -> bool:
    q, r = P.divmod_linear(-1)
    if r != 0:
        return False
    return q.divmod_linear(-1)[1] == 0


class Shape(str, enum.Enum):
    """Graph shapes of the rank-2 flats of a graphic arrangement.

    The first six have two hyperplanes, the last four three or four.
    """

    DOUBLE_EDGE = "DoubleEdge"  # i=j double edge, no loops at i, j
    DISJOINT_EDGES = "DisjointEdges"
    PATH_OF_TWO = "PathOfTwoEdges"  # ij, jk with the closing edge absent
    LOOP_AT_EDGE_END = "LoopAtEdgeEnd"  # loop at i, simple edge ij, no loop at j
    LOOP_AWAY_FROM_EDGE = "LoopAwayFromEdge"
    TWO_LOOPS = "TwoLoops"
    LOOP_LOOP_EDGE = "LoopLoopEdge"
    LOOP_DOUBLE_EDGE = "LoopDoubleEdge"
    NEGATIVE_TRIANGLE = "NegativeTriangle"
    FULL_PENCIL_4 = "FullPencil4"


@dataclass(frozen=True)
class Arrangement:
    hyperplanes: tuple
    ambient_dim: int
    graph: SignedGraph | None = field(default=None, compare=False)

    def __post_init__(self) -> None:
        for H in self.hyperplanes:
            if len(H.normal) != self.ambient_dim:
                raise PreconditionError("normal has the wrong length")
            if not any(H.normal):
                raise PreconditionError("zero normal")
        for H, K in combinations(self.hyperplanes, 2):
            if integer_rank([H.normal, K.normal]) < 2:
                raise PreconditionError(f"hyperplanes {H} and {K} coincide")

    @classmethod
    def from_normals(cls, normals: Iterable[Sequence[int]]) -> "Arrangement":
        hs = tuple(Hyperplane(tuple(int(x) for x in v)) for v in normals)
        if not hs:
            raise PreconditionError("empty arrangement")
        return cls(hs, len(hs[0].normal))

    @property
    def n(self) -> int:
        return len(self.hyperplanes)

    def __len__(self) -> int:
        return len(self.hyperplanes)

    @property
    def normals(self) -> list[tuple]:
        return [H.normal for H in self.hyperplanes]

    @property
    def is_graphic(self) -> bool:
        return all(H.origin is not None for H in self.hyperplanes)

    @cached_property
    def rank(self) -> int:
        return integer_rank(self.normals)

    @cached_property
    def _cache(self) -> dict:
        return {}

    def origin_label(self, h: int) -> str:
        return str(self.hyperplanes[h])

    def localize(self, members: Iterable[int]) -> "Arrangement":
        """The subarrangement on the given hyperplane indices, in index order."""
        return Arrangement(tuple(self.hyperplanes[h] for h in sorted(members)), self.ambient_dim)

    # -- lattice --------------------------------------------------------------

    def closure(self, members: Iterable[int]) -> frozenset:
        members = sorted(set(members))
        basis = _independent([self.normals[h] for h in members])
        r = len(basis)
        closed = set(members)
        for h in range(self.n):
            if h not in closed and integer_rank(basis + [self.normals[h]]) == r:
                closed.add(h)
        return frozenset(closed)

    def _flats_by_rank(self, up_to: int) -> list[list[Flat]]:
        levels = self._cache.setdefault("levels", [[Flat(frozenset(), 0)]])
        while len(levels) <= up_to:
            k = len(levels)
            found: dict[frozenset, Flat] = {}
            for F in levels[-1]:
                absorbed = set(F.members)
                for h in range(self.n):
                    if h in absorbed:
                        continue
                    S = self.closure(F.members | {h})
                    absorbed |= S
                    if S not in found:
                        found[S] = Flat(S, k)
            if not found:
                break
            levels.append(sorted(found.values(), key=lambda X: sorted(X.members)))
        return levels

    def lattice(self) -> list[Flat]:
        """Every flat, including the bottom (empty set, rank 0)."""
        if self.n > FULL_LATTICE_CAP:
            raise CapExceeded(f"full lattice capped at n <= {FULL_LATTICE_CAP}")
        levels = self._flats_by_rank(self.rank)
        return [X for level in levels for X in level]


def _independent(vectors: list) -> list:
    basis: list = []
    for v in vectors:
        if integer_rank(basis + [v]) > len(basis):
            basis.append(v)
    return basis


def build_arrangement(G: SignedGraph) -> Arrangement:
    """Hyperplanes x_i = 0 per loop and x_i + s x_j = 0 per signed edge."""
    if G.n == 0:
        raise PreconditionError("graph has no edges or loops")
    l = G.vertex_count
    hs = []
    for origin in G.origins():
        v = [0] * l
        if isinstance(origin, Loop):
            v[origin.vertex - 1] = 1
        else:
            v[origin.i - 1] = 1
            v[origin.j - 1] = origin.sign
        hs.append(Hyperplane(tuple(v), origin))
    return Arrangement(tuple(hs), l, G)


def pencil(n: int) -> Arrangement:
    """``n`` distinct lines through the origin of the plane (a rank-2 arrangement)."""
    if n < 1:
        raise PreconditionError("pencil needs at least one line")
    return Arrangement.from_normals([(0, 1)] + [(1, k) for k in range(n - 1)])


def flats(A: Arrangement, up_to_rank: int) -> list[Flat]:
    """All flats of rank ``1..up_to_rank``, ordered by rank then members."""
    if not 1 <= up_to_rank <= A.rank:
        raise PreconditionError(f"rank bound {up_to_rank} outside 1..{A.rank}")
    levels = A._flats_by_rank(up_to_rank)
    return [X for level in levels[1 : up_to_rank + 1] for X in level]


def rank2_flats(A: Arrangement) -> list[Flat]:
    if A.rank < 2:
        return []
    return [X for X in flats(A, 2) if X.rank == 2]


def center(A: Arrangement) -> Flat:
    return Flat(frozenset(range(A.n)), A.rank)


def poincare_polynomial(A: Arrangement) -> Polynomial:
    """Sum of |mu(0, X)| t^rk(X) over the whole lattice."""
    cache = A._cache
    if "poincare" in cache:
        return cache["poincare"]
    L = A.lattice()
    mu: dict[frozenset, int] = {}
    coeffs = [0] * (A.rank + 1)
    for X in L:
        if X.rank == 0:
            mu[X.members] = 1
        else:
            mu[X.members] = -sum(v for Y, v in mu.items() if Y < X.members)
        coeffs[X.rank] += abs(mu[X.members])
    cache["poincare"] = P = Polynomial(coeffs)
    return P


def poincare_by_deletion_restriction(A: Arrangement) -> Polynomial:
    """P_A = P_{A - H} + t P_{A^H}, recursing on the last hyperplane.

    Independent of the lattice code: restriction is done by projecting
    normals away from H and merging parallel images.  Exponential in n.
    """
    return _dr([_primitive(v) for v in A.normals])


def _primitive(v) -> tuple:
    from math import gcd

    g = 0
    for x in v:
        g = gcd(g, x)
    v = [x // g for x in v]
    lead = next(x for x in v if x)
    return tuple(-x for x in v) if lead < 0 else tuple(v)


def _dr(vs: list) -> Polynomial:
    if not vs:
        return Polynomial([1])
    h = vs[-1]
    rest = vs[:-1]
    c = next(k for k, x in enumerate(h) if x)
    projected = []
    for v in rest:
        w = [h[c] * v[k] - v[c] * h[k] for k in range(len(v)) if k != c]
        if any(w):
            w = _primitive(w)
            if w not in projected:
                projected.append(w)
    return _dr(rest) + _dr(projected).shift(1)


def is_dense(A: Arrangement, X: Flat) -> bool:
    """A flat is dense when its localization does not split as a product.

    Decided by whether (1 + t)^2 divides the Poincare polynomial of the
    localization.
    """
    cache = A._cache.setdefault("dense", {})
    key = X.members
    if key not in cache:
        if X.rank <= 1:
            cache[key] = True
        else:
            cache[key] = not divides_one_plus_t_squared(poincare_polynomial(A.localize(X.members)))
    return cache[key]


def m_list(A: Arrangement, k: int, avoid: int | None = None) -> list[int]:
    """Multiplicities of dense flats of rank 2..k, optionally only those off ``avoid``."""
    if not 2 <= k <= A.rank:
        raise PreconditionError(f"k={k} outside 2..{A.rank}")
    if avoid is not None and not 0 <= avoid < A.n:
        raise PreconditionError(f"hyperplane index {avoid} out of range")
    out = []
    for X in flats(A, k):
        if X.rank < 2 or (avoid is not None and avoid in X.members):
            continue
        if is_dense(A, X):
            out.append(X.multiplicity)
    return sorted(out)


def rank2_shape(A: Arrangement, X: Flat) -> Shape:
    if X.rank != 2:
        raise PreconditionError(f"shape tags are for rank-2 flats, got rank {X.rank}")
    origins = [A.hyperplanes[h].origin for h in sorted(X.members)]
    if any(o is None for o in origins):
        raise PreconditionError("shape tags need a graphic arrangement")
    loops = sorted(o.vertex for o in origins if isinstance(o, Loop))
    edges = [o for o in origins if isinstance(o, Edge)]
    m = len(origins)
    pairs = {(e.i, e.j) for e in edges}
    shape = None
    if m == 2:
        if len(edges) == 2:
            e, f = edges
            common = {e.i, e.j} & {f.i, f.j}
            if len(common) == 2:
                shape = Shape.DOUBLE_EDGE
            elif not common:
                shape = Shape.DISJOINT_EDGES
            else:
                shape = Shape.PATH_OF_TWO
        elif len(edges) == 1:
            e = edges[0]
            shape = Shape.LOOP_AT_EDGE_END if loops[0] in (e.i, e.j) else Shape.LOOP_AWAY_FROM_EDGE
        else:
            shape = Shape.TWO_LOOPS
    elif m == 3:
        if len(loops) == 2 and len(edges) == 1 and pairs == {tuple(loops)}:
            shape = Shape.LOOP_LOOP_EDGE
        elif len(loops) == 1 and len(edges) == 2 and len(pairs) == 1 and loops[0] in next(iter(pairs)):
            shape = Shape.LOOP_DOUBLE_EDGE
        elif len(edges) == 3 and len(pairs) == 3:
            verts = {v for e in edges for v in (e.i, e.j)}
            sign = edges[0].sign * edges[1].sign * edges[2].sign
            if len(verts) == 3 and sign == -1:
                shape = Shape.NEGATIVE_TRIANGLE
    elif m == 4:
        if len(loops) == 2 and len(edges) == 2 and pairs == {tuple(loops)}:
            shape = Shape.FULL_PENCIL_4
    if shape is None:
        raise TheoremViolation(f"rank-2 flat {[str(o) for o in origins]} matches no known shape")
    return shape


def rank2_profile(A: Arrangement) -> list[tuple[Flat, Shape]]:
    if not A.is_graphic:
        raise PreconditionError("shape tags need a graphic arrangement")
    return [(X, rank2_shape(A, X)) for X in rank2_flats(A)]
