"""Exact scalar fields and the linear algebra the rest of the package needs.

Two kinds of field are supported: prime fields F_p (elements are Python ints
in ``range(p)``) and the rationals (elements are ``fractions.Fraction``).
Everything is exact; there is no floating point anywhere in this module.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .exceptions import PreconditionError


def is_prime(p: int) -> bool:
    if p < 2:
        return False
    if p < 4:
        return True
    if p % 2 == 0:
        return False
    f = 3
    while f * f <= p:
        if p % f == 0:
            return False
        f += 2
    return True


@dataclass(frozen=True)
class FieldTag:
    """A prime field ``F_p`` (``p`` set) or the rationals (``p`` is None)."""

    p: int | None = None

    def __post_init__(self) -> None:
        if self.p is not None and not is_prime(self.p):
            raise PreconditionError(f"{self.p} is not prime")

    @classmethod
    def prime(cls, p: int) -> "FieldTag":
        return cls(p)

    @classmethod
    def rationals(cls) -> "FieldTag":
        return cls(None)

    @property
    def is_rational(self) -> bool:
        return self.p is None

    @property
    def characteristic(self) -> int:
        return 0 if self.p is None else self.p

    def __str__(self) -> str:
        return "Q" if self.p is None else f"F_{self.p}"

    def element(self, x) -> int | Fraction:
        """Coerce an int or Fraction into this field."""
        if self.p is None:
            return Fraction(x)
        if isinstance(x, Fraction):
            if x.denominator % self.p == 0:
                raise PreconditionError(f"{x} has no image in F_{self.p}")
            return x.numerator * pow(x.denominator, -1, self.p) % self.p
        return int(x) % self.p

    def zero(self):
        return Fraction(0) if self.p is None else 0

    def one(self):
        return Fraction(1) if self.p is None else 1

    def inv(self, x):
        if self.p is None:
            return 1 / x
        return pow(x, -1, self.p)

    def reduce(self, x):
        return x if self.p is None else x % self.p


@dataclass(frozen=True)
class WeightVector:
    """One field scalar per hyperplane, indexed like the arrangement."""

    field: FieldTag
    coeffs: tuple

    def __post_init__(self) -> None:
        object.__setattr__(self, "coeffs", tuple(self.field.element(c) for c in self.coeffs))

    @classmethod
    def ones(cls, n: int, field: FieldTag) -> "WeightVector":
        return cls(field, (1,) * n)

    @classmethod
    def constant(cls, n: int, value, field: FieldTag) -> "WeightVector":
        return cls(field, (value,) * n)

    def __len__(self) -> int:
        return len(self.coeffs)

    def __getitem__(self, i):
        return self.coeffs[i]

    def __iter__(self):
        return iter(self.coeffs)

    def __add__(self, other: "WeightVector") -> "WeightVector":
        self._check(other)
        return WeightVector(self.field, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __sub__(self, other: "WeightVector") -> "WeightVector":
        self._check(other)
        return WeightVector(self.field, tuple(a - b for a, b in zip(self.coeffs, other.coeffs)))

    def _check(self, other: "WeightVector") -> None:
        if self.field != other.field or len(self) != len(other):
            raise PreconditionError("weight vectors live in different spaces")

    def is_zero(self) -> bool:
        return all(c == 0 for c in self.coeffs)


# -- elimination over an exact field -------------------------------------------


def row_reduce(rows: Iterable[Sequence], ncols: int, field: FieldTag):
    """Reduced row echelon form.  Returns ``(rref_rows, pivot_columns)``."""
    p = field.p
    if p is None:
        M = [[Fraction(x) for x in r] for r in rows]
    else:
        M = [[int(x) % p for x in r] for r in rows]
    pivots: list[int] = []
    r = 0
    nrows = len(M)
    for c in range(ncols):
        if r == nrows:
            break
        piv = next((i for i in range(r, nrows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        inv = field.inv(M[r][c])
        if p is None:
            M[r] = [x * inv for x in M[r]]
        else:
            M[r] = [x * inv % p for x in M[r]]
        lead = M[r]
        for i in range(nrows):
            if i != r and M[i][c] != 0:
                f = M[i][c]
                if p is None:
                    M[i] = [a - f * b for a, b in zip(M[i], lead)]
                else:
                    M[i] = [(a - f * b) % p for a, b in zip(M[i], lead)]
        pivots.append(c)
        r += 1
    return M[:r], pivots


def rank(rows: Iterable[Sequence], ncols: int, field: FieldTag) -> int:
    return len(row_reduce(rows, ncols, field)[1])


def nullspace(rows: Iterable[Sequence], ncols: int, field: FieldTag) -> list[list]:
    """Basis of ``{x : M x = 0}``, one vector per free column."""
    R, pivots = row_reduce(rows, ncols, field)
    free = [c for c in range(ncols) if c not in set(pivots)]
    basis = []
    for f in free:
        v = [field.zero()] * ncols
        v[f] = field.one()
        for row, pc in zip(R, pivots):
            v[pc] = field.reduce(-row[f])
        basis.append(v)
    return basis


def integer_rank(rows: Sequence[Sequence[int]]) -> int:
    """Rank over Q of an integer matrix by fraction-free (Bareiss) elimination."""
    M = [list(r) for r in rows]
    if not M:
        return 0
    nrows, ncols = len(M), len(M[0])
    r = 0
    prev = 1
    for c in range(ncols):
        piv = next((i for i in range(r, nrows) if M[i][c] != 0), None)
        if piv is None:
            continue
        M[r], M[piv] = M[piv], M[r]
        for i in range(r + 1, nrows):
            for j in range(c + 1, ncols):
                # exact division is guaranteed by Sylvester's identity
                M[i][j] = (M[r][c] * M[i][j] - M[i][c] * M[r][j]) // prev
            M[i][c] = 0
        prev = M[r][c]
        r += 1
        if r == nrows:
            break
    return r
