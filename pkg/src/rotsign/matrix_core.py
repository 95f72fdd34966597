"""Exact integer matrices, signings and +/-1 diagonal / permutation conjugation.

Matrices are stored densely as tuples of tuples of Python ints so that every
value is immutable and hashable, and arithmetic never overflows.
"""

from __future__ import annotations

import json
import os
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Mapping, Sequence

from rotsign.errors import BaseMismatch, CapExceeded, OrderMismatch, ParseError

IntMatrix = tuple[tuple[int, ...], ...]
Position = tuple[int, int]

DEFAULT_MAX_N = 64


def default_max_n() -> int:
    """Size cap, overridable with the ``ROTSIGN_MAX_N`` environment variable."""
    value = os.environ.get("ROTSIGN_MAX_N")
    return int(value) if value else DEFAULT_MAX_N


def as_rows(m) -> IntMatrix:
    """Normalise a square matrix-like object to an ``IntMatrix``."""
    if isinstance(m, NonnegMatrix):
        return m.rows
    if isinstance(m, Signing):
        return m.matrix
    rows = tuple(tuple(int(x) for x in row) for row in m)
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise OrderMismatch(f"matrix is not square: {n} rows of lengths {[len(r) for r in rows]}")
    return rows


@dataclass(frozen=True)
class NonnegMatrix:
    """Square matrix of nonnegative integers."""

    rows: IntMatrix

    def __post_init__(self):
        rows = as_rows(self.rows)
        object.__setattr__(self, "rows", rows)
        if not rows:
            raise ValueError("matrix order must be at least 1")
        if any(x < 0 for r in rows for x in r):
            raise ValueError("entries must be nonnegative")

    @property
    def n(self) -> int:
        return len(self.rows)

    @cached_property
    def support(self) -> tuple[Position, ...]:
        """Nonzero positions in row-major order."""
        return tuple((i, j) for i, r in enumerate(self.rows) for j, x in enumerate(r) if x)

    def __getitem__(self, ij: Position) -> int:
        i, j = ij
        return self.rows[i][j]


@dataclass(frozen=True)
class Signing:
    """A signing of ``base``: one sign per support position, in row-major order.

    Storing the signs apart from the base keeps ``|B| = A`` true by construction.
    """

    base: NonnegMatrix
    signs: tuple[int, ...]

    def __post_init__(self):
        signs = tuple(int(s) for s in self.signs)
        object.__setattr__(self, "signs", signs)
        if len(signs) != len(self.base.support):
            raise ValueError(f"expected {len(self.base.support)} signs, got {len(signs)}")
        if any(s not in (1, -1) for s in signs):
            raise ValueError("signs must be +1 or -1")

    @classmethod
    def positive(cls, base: NonnegMatrix) -> Signing:
        return cls(base, (1,) * len(base.support))

    @classmethod
    def negative(cls, base: NonnegMatrix) -> Signing:
        return cls(base, (-1,) * len(base.support))

    @classmethod
    def from_map(cls, base: NonnegMatrix, signs: Mapping[Position, int]) -> Signing:
        if set(signs) != set(base.support):
            raise ValueError("sign map domain must equal the support of the base")
        return cls(base, tuple(signs[ij] for ij in base.support))

    @classmethod
    def from_matrix(cls, base: NonnegMatrix, m) -> Signing:
        """Read the signs off a signed matrix, checking ``|m| = base``."""
        rows = as_rows(m)
        if len(rows) != base.n:
            raise BaseMismatch(f"order {len(rows)} does not match base order {base.n}")
        for i, (r, a) in enumerate(zip(rows, base.rows)):
            for j, (x, y) in enumerate(zip(r, a)):
                if abs(x) != y:
                    raise BaseMismatch(f"|B[{i}][{j}]| = {abs(x)} but A[{i}][{j}] = {y}")
        return cls(base, tuple(1 if rows[i][j] > 0 else -1 for i, j in base.support))

    @property
    def n(self) -> int:
        return self.base.n

    @property
    def sign_map(self) -> dict[Position, int]:
        return dict(zip(self.base.support, self.signs))

    @cached_property
    def matrix(self) -> IntMatrix:
        return realize(self)

    def negate(self) -> Signing:
        return Signing(self.base, tuple(-s for s in self.signs))


@dataclass(frozen=True)
class SignDiagonal:
    diag: tuple[int, ...]

    def __post_init__(self):
        diag = tuple(int(d) for d in self.diag)
        object.__setattr__(self, "diag", diag)
        if any(d not in (1, -1) for d in diag):
            raise ValueError("diagonal entries must be +1 or -1")

    @classmethod
    def identity(cls, n: int) -> SignDiagonal:
        return cls((1,) * n)

    @classmethod
    def from_set(cls, n: int, w: Iterable[int]) -> SignDiagonal:
        """Indicator diagonal of a vertex set: -1 on ``w``, +1 elsewhere."""
        w = set(w)
        return cls(tuple(-1 if v in w else 1 for v in range(n)))

    @property
    def n(self) -> int:
        return len(self.diag)

    def __neg__(self) -> SignDiagonal:
        return SignDiagonal(tuple(-d for d in self.diag))

    def __mul__(self, other: SignDiagonal) -> SignDiagonal:
        return SignDiagonal(tuple(a * b for a, b in zip(self.diag, other.diag)))

    def normalized(self) -> SignDiagonal:
        """Representative of the pair {D, -D} with first entry +1."""
        return -self if self.diag and self.diag[0] == -1 else self

    def negative_set(self) -> frozenset[int]:
        return frozenset(i for i, d in enumerate(self.diag) if d == -1)


@dataclass(frozen=True)
class Permutation:
    """Bijection ``i -> image[i]`` on ``{0, ..., n-1}``."""

    image: tuple[int, ...]

    def __post_init__(self):
        image = tuple(int(x) for x in self.image)
        object.__setattr__(self, "image", image)
        if sorted(image) != list(range(len(image))):
            raise ValueError(f"not a bijection: {image}")

    @classmethod
    def identity(cls, n: int) -> Permutation:
        return cls(tuple(range(n)))

    @classmethod
    def from_order(cls, order: Sequence[int]) -> Permutation:
        """Permutation sending vertex ``order[t]`` to position ``t``."""
        image = [0] * len(order)
        for t, v in enumerate(order):
            image[v] = t
        return cls(tuple(image))

    @property
    def n(self) -> int:
        return len(self.image)

    def inverse(self) -> Permutation:
        return Permutation.from_order(self.image)

    def __call__(self, i: int) -> int:
        return self.image[i]


def realize(s: Signing) -> IntMatrix:
    n = s.base.n
    rows = [[0] * n for _ in range(n)]
    for (i, j), sign in zip(s.base.support, s.signs):
        rows[i][j] = sign * s.base.rows[i][j]
    return tuple(map(tuple, rows))


def conjugate_diag(b, d: SignDiagonal) -> IntMatrix:
    """``D B D`` (``D`` is its own inverse)."""
    rows = as_rows(b)
    if len(rows) != d.n:
        raise OrderMismatch(f"matrix order {len(rows)} != diagonal order {d.n}")
    dd = d.diag
    return tuple(tuple(dd[i] * x * dd[j] for j, x in enumerate(r)) for i, r in enumerate(rows))


def conjugate_diag_signing(s: Signing, d: SignDiagonal) -> Signing:
    if s.n != d.n:
        raise OrderMismatch(f"signing order {s.n} != diagonal order {d.n}")
    dd = d.diag
    return Signing(s.base, tuple(dd[i] * x * dd[j] for (i, j), x in zip(s.base.support, s.signs)))


def conjugate_perm(m, p: Permutation) -> IntMatrix:
    """``P M P^T``: entry ``(i, j)`` of ``m`` moves to ``(p(i), p(j))``."""
    rows = as_rows(m)
    n = len(rows)
    if n != p.n:
        raise OrderMismatch(f"matrix order {n} != permutation order {p.n}")
    out = [[0] * n for _ in range(n)]
    img = p.image
    for i, r in enumerate(rows):
        for j, x in enumerate(r):
            out[img[i]][img[j]] = x
    return tuple(map(tuple, out))


def negate(m) -> IntMatrix:
    return tuple(tuple(-x for x in r) for r in as_rows(m))


def absolute(m) -> IntMatrix:
    return tuple(tuple(abs(x) for x in r) for r in as_rows(m))


# --- text / JSON formats --------------------------------------------------


def parse_matrix(text: str, *, max_n: int | None = None, signed: bool = False) -> IntMatrix:
    """Parse the plain-text (``n`` then ``n`` rows) or JSON matrix format."""
    max_n = default_max_n() if max_n is None else max_n
    stripped = text.strip()
    if not stripped:
        raise ParseError("empty input")
    if stripped.startswith("{"):
        try:
            obj = json.loads(stripped)
            n = int(obj["n"])
            rows = [[int(x) for x in r] for r in obj["rows"]]
        except (ValueError, KeyError, TypeError) as exc:
            raise ParseError(f"bad JSON matrix: {exc}") from exc
    else:
        lines = [ln.split() for ln in stripped.splitlines() if ln.strip()]
        try:
            if len(lines[0]) != 1:
                raise ParseError("first line must hold the order n")
            n = int(lines[0][0])
            rows = [[int(x) for x in ln] for ln in lines[1:]]
        except ValueError as exc:
            raise ParseError(f"non-integer token: {exc}") from exc
    if n < 1:
        raise ParseError(f"order must be positive, got {n}")
    if n > max_n:
        raise CapExceeded(f"order {n} exceeds size cap {max_n}")
    if len(rows) != n or any(len(r) != n for r in rows):
        raise ParseError(f"expected {n} rows of {n} integers")
    if not signed and any(x < 0 for r in rows for x in r):
        raise ParseError("negative entry in a nonnegative matrix")
    return tuple(map(tuple, rows))


def parse_nonneg(text: str, *, max_n: int | None = None) -> NonnegMatrix:
    return NonnegMatrix(parse_matrix(text, max_n=max_n))


def format_matrix(m, *, as_json: bool = False) -> str:
    rows = as_rows(m)
    if as_json:
        return json.dumps({"n": len(rows), "rows": [list(r) for r in rows]})
    return "\n".join([str(len(rows))] + [" ".join(str(x) for x in r) for r in rows]) + "\n"
