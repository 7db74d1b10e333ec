"""Matrices over Z/mZ.

The modulus travels with each value and binary operations refuse to mix
moduli.  Residues are plain Python ints, so a modulus with thousands of bits
(as produced by :func:`quickwp.solvers.compute_q`) needs no special casing.
"""
from __future__ import annotations

from dataclasses import dataclass

from .errors import DimensionMismatch, FormatError, ModulusMismatch
from .exact import flat_kernel, identity_flat


@dataclass(frozen=True)
class ModMatrix:
    dim: int
    modulus: int
    entries: tuple

    def __post_init__(self):
        m = self.modulus
        if isinstance(m, bool) or not isinstance(m, int) or m < 2:
            raise ValueError(f"modulus must be an integer >= 2, got {m!r}")
        entries = tuple(self.entries)
        if len(entries) != self.dim * self.dim:
            raise FormatError(
                f"expected {self.dim * self.dim} entries for dim={self.dim}, got {len(entries)}")
        for e in entries:
            if not 0 <= e < m:
                raise ValueError(f"residue {e} outside [0, {m})")
        object.__setattr__(self, "entries", entries)

    @classmethod
    def identity(cls, d: int, m: int) -> "ModMatrix":
        return cls(d, m, identity_flat(d))

    @classmethod
    def from_rows(cls, rows, m: int) -> "ModMatrix":
        """Build from integer rows, reducing every entry into ``[0, m)``."""
        d = len(rows)
        return cls(d, m, tuple(x % m for r in rows for x in r))

    def rows(self) -> list[list[int]]:
        d = self.dim
        return [list(self.entries[i * d:(i + 1) * d]) for i in range(d)]

    def __matmul__(self, other: "ModMatrix") -> "ModMatrix":
        return mod_mul(self, other)

    def __repr__(self) -> str:
        return f"ModMatrix({self.rows()}, m={self.modulus})"


def mod_mul(x: ModMatrix, y: ModMatrix) -> ModMatrix:
    if x.dim != y.dim:
        raise DimensionMismatch(f"cannot multiply {x.dim}x{x.dim} by {y.dim}x{y.dim}")
    if x.modulus != y.modulus:
        raise ModulusMismatch(f"moduli differ: {x.modulus} vs {y.modulus}")
    m = x.modulus
    prod = flat_kernel(x.dim)(x.entries, y.entries)
    return ModMatrix(x.dim, m, tuple(e % m for e in prod))


def mod_is_identity(x: ModMatrix) -> bool:
    m = x.modulus
    return tuple(e % m for e in x.entries) == identity_flat(x.dim)


def encode_entries(entries) -> bytes:
    """Length-prefixed big-endian encoding of non-negative residues.

    Zero encodes as an empty byte string, so its prefix is ``0x00``.
    """
    out = bytearray()
    for e in entries:
        n = (e.bit_length() + 7) // 8
        if n > 255:
            raise ValueError("residue too large for a one-byte length prefix")
        out.append(n)
        out += e.to_bytes(n, "big")
    return bytes(out)


def canonical_key(x: ModMatrix) -> bytes:
    return encode_entries(x.entries)
