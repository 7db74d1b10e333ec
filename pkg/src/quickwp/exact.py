"""Exact integer square matrices.

Entries are Python ints stored row-major in a flat tuple, so entry (i, j)
lives at index ``i * dim + j``.  The flat kernels (:func:`mul_flat` and
friends) operate on bare tuples and are what the solvers use in their hot
loops; :class:`ExactMatrix` wraps them with validation.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations
from typing import Sequence

from .errors import DimensionMismatch, FormatError, NotUnimodular

Flat = tuple  # tuple[int, ...] of length d*d


def _mul2(a: Flat, b: Flat) -> Flat:
    a0, a1, a2, a3 = a
    b0, b1, b2, b3 = b
    return (a0 * b0 + a1 * b2, a0 * b1 + a1 * b3,
            a2 * b0 + a3 * b2, a2 * b1 + a3 * b3)


def _mul3(a: Flat, b: Flat) -> Flat:
    a0, a1, a2, a3, a4, a5, a6, a7, a8 = a
    b0, b1, b2, b3, b4, b5, b6, b7, b8 = b
    return (
        a0 * b0 + a1 * b3 + a2 * b6, a0 * b1 + a1 * b4 + a2 * b7, a0 * b2 + a1 * b5 + a2 * b8,
        a3 * b0 + a4 * b3 + a5 * b6, a3 * b1 + a4 * b4 + a5 * b7, a3 * b2 + a4 * b5 + a5 * b8,
        a6 * b0 + a7 * b3 + a8 * b6, a6 * b1 + a7 * b4 + a8 * b7, a6 * b2 + a7 * b5 + a8 * b8,
    )


def _mul_generic(a: Flat, b: Flat, d: int) -> Flat:
    cols = [b[j::d] for j in range(d)]
    out = []
    for i in range(d):
        row = a[i * d:(i + 1) * d]
        for col in cols:
            out.append(sum(x * y for x, y in zip(row, col)))
    return tuple(out)


def flat_kernel(d: int):
    """Return a two-argument multiplication function for flat ``d x d`` tuples."""
    if d == 2:
        return _mul2
    if d == 3:
        return _mul3
    return lambda a, b: _mul_generic(a, b, d)


def mul_flat(a: Flat, b: Flat, d: int) -> Flat:
    return flat_kernel(d)(a, b)


def identity_flat(d: int) -> Flat:
    return tuple(1 if i == j else 0 for i in range(d) for j in range(d))


def bit_length(x: int) -> int:
    """Signed bit-size ``ceil(log2(|x| + 1)) + 1``; the extra bit encodes the sign."""
    return abs(x).bit_length() + 1


@dataclass(frozen=True)
class ExactMatrix:
    """A ``dim x dim`` matrix of arbitrary-precision integers."""

    dim: int
    entries: tuple

    def __post_init__(self):
        if not isinstance(self.dim, int) or self.dim < 1:
            raise FormatError(f"dimension must be a positive integer, got {self.dim!r}")
        entries = tuple(self.entries)
        if len(entries) != self.dim * self.dim:
            raise FormatError(
                f"expected {self.dim * self.dim} entries for dim={self.dim}, got {len(entries)}")
        for e in entries:
            if isinstance(e, bool) or not isinstance(e, int):
                raise FormatError(f"matrix entries must be integers, got {e!r}")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "ExactMatrix":
        d = len(rows)
        if d == 0 or any(len(r) != d for r in rows):
            raise FormatError("matrix must be a non-empty square array")
        return cls(d, tuple(x for r in rows for x in r))

    @classmethod
    def identity(cls, d: int) -> "ExactMatrix":
        return cls(d, identity_flat(d))

    def rows(self) -> list[list[int]]:
        d = self.dim
        return [list(self.entries[i * d:(i + 1) * d]) for i in range(d)]

    def __getitem__(self, ij: tuple[int, int]) -> int:
        i, j = ij
        return self.entries[i * self.dim + j]

    def __matmul__(self, other: "ExactMatrix") -> "ExactMatrix":
        return mat_mul(self, other)

    def transpose(self) -> "ExactMatrix":
        d = self.dim
        return ExactMatrix(d, tuple(self.entries[j * d + i] for i in range(d) for j in range(d)))

    def __repr__(self) -> str:
        return f"ExactMatrix({self.rows()})"


def mat_mul(a: ExactMatrix, b: ExactMatrix) -> ExactMatrix:
    if a.dim != b.dim:
        raise DimensionMismatch(f"cannot multiply {a.dim}x{a.dim} by {b.dim}x{b.dim}")
    return ExactMatrix(a.dim, mul_flat(a.entries, b.entries, a.dim))


def _perm_sign(p: tuple[int, ...]) -> int:
    sign = 1
    seen = [False] * len(p)
    for i in range(len(p)):
        if seen[i]:
            continue
        j, length = i, 0
        while not seen[j]:
            seen[j] = True
            j = p[j]
            length += 1
        if length % 2 == 0:
            sign = -sign
    return sign


def _det(rows: list[list[int]]) -> int:
    n = len(rows)
    if n == 0:
        return 1
    if n == 1:
        return rows[0][0]
    if n == 2:
        return rows[0][0] * rows[1][1] - rows[0][1] * rows[1][0]
    if n <= 5:
        total = 0
        for p in permutations(range(n)):
            term = _perm_sign(p)
            for i in range(n):
                term *= rows[i][p[i]]
                if not term:
                    break
            total += term
        return total
    # Laplace expansion along the first row for larger d.
    total = 0
    for j, a in enumerate(rows[0]):
        if a:
            minor = [r[:j] + r[j + 1:] for r in rows[1:]]
            total += (-1) ** j * a * _det(minor)
    return total


def determinant(a: ExactMatrix) -> int:
    return _det(a.rows())


def mat_inverse_unimodular(a: ExactMatrix) -> ExactMatrix:
    """Exact inverse of a unimodular matrix via the adjugate.

    Because ``det(a)`` is +1 or -1, ``adj(a) / det(a)`` has integer entries
    and no rational arithmetic is needed.

    Raises
    ------
    NotUnimodular
        If ``det(a)`` is not +1 or -1.
    """
    rows = a.rows()
    d = a.dim
    det = _det(rows)
    if det not in (1, -1):
        raise NotUnimodular(f"determinant {det} is not +1 or -1")
    if d == 1:
        return ExactMatrix(1, (det,))
    inv = [[0] * d for _ in range(d)]
    for i in range(d):
        for j in range(d):
            minor = [r[:j] + r[j + 1:] for k, r in enumerate(rows) if k != i]
            cof = (-1) ** (i + j) * _det(minor)
            inv[j][i] = cof * det  # 1/det == det when det = +-1
    return ExactMatrix.from_rows(inv)


def mod_reduce(a: ExactMatrix, m: int):
    """Project ``a`` to Z/mZ, mapping every entry into ``[0, m)``."""
    from .modular import ModMatrix

    if isinstance(m, bool) or not isinstance(m, int) or m < 2:
        raise ValueError(f"modulus must be an integer >= 2, got {m!r}")
    return ModMatrix(a.dim, m, tuple(x % m for x in a.entries))


def is_identity(a: ExactMatrix) -> bool:
    return a.entries == identity_flat(a.dim)


def max_norm(a: ExactMatrix) -> int:
    return max(abs(x) for x in a.entries)


def max_bit_length(a: ExactMatrix) -> int:
    return max(bit_length(x) for x in a.entries)


