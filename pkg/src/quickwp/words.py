"""Generator systems, words over the symmetrized alphabet, and word sampling.

Letter convention: for a system with ``k`` generators, letter ``i < k``
stands for generator ``i`` and letter ``k + i`` for its inverse.  Textual
words use signed 1-based indices, so ``"2 -1"`` is ``[1, k + 0]``.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from pathlib import Path
from typing import Sequence

import numpy as np

from .errors import ConventionViolation, FormatError, ParseError
from .exact import (ExactMatrix, bit_length, is_identity, mat_inverse_unimodular)

RNG_ALGORITHM = "numpy.random.PCG64"


@dataclass(frozen=True)
class GeneratorSystem:
    d: int
    sigma: tuple
    sigma_inv: tuple
    L: int
    names: tuple = field(default=())

    @property
    def k(self) -> int:
        return len(self.sigma)

    @property
    def alphabet(self) -> tuple:
        """The symmetrized alphabet, indexed by letter."""
        return self.sigma + self.sigma_inv

    @classmethod
    def from_matrices(cls, matrices: Sequence, names: Sequence[str] | None = None) -> "GeneratorSystem":
        """Validate ``matrices`` and compute their inverses.

        Rows-of-ints and :class:`ExactMatrix` values are both accepted.
        """
        mats = [m if isinstance(m, ExactMatrix) else ExactMatrix.from_rows(m) for m in matrices]
        if not mats:
            raise FormatError("generator set must be non-empty")
        d = mats[0].dim
        for i, a in enumerate(mats):
            if a.dim != d:
                raise FormatError(f"generator {i + 1} is {a.dim}x{a.dim}, expected {d}x{d}")
        inverses = [mat_inverse_unimodular(a) for a in mats]
        for i, a in enumerate(mats):
            if is_identity(a):
                raise ConventionViolation(f"generator {i + 1} is the identity")
            if a == inverses[i]:
                raise ConventionViolation(f"generator {i + 1} is its own inverse")
        seen: dict = {}
        for idx, a in enumerate(mats + inverses):
            if a.entries in seen:
                j = seen[a.entries]
                raise ConventionViolation(
                    f"symmetrized alphabet repeats a matrix (letters {j} and {idx}); "
                    "generators must be distinct and contain no mutually inverse pair")
            seen[a.entries] = idx
        if names is not None:
            names = tuple(str(s) for s in names)
            if len(names) != len(mats):
                raise FormatError(f"{len(names)} names given for {len(mats)} generators")
        L = max(bit_length(x) for a in mats + inverses for x in a.entries)
        return cls(d, tuple(mats), tuple(inverses), L, names or ())


@dataclass(frozen=True)
class Word:
    letters: tuple
    k: int

    def __post_init__(self):
        letters = tuple(self.letters)
        if letters and (min(letters) < 0 or max(letters) >= 2 * self.k):
            raise ValueError(f"letter index out of range [0, {2 * self.k})")
        object.__setattr__(self, "letters", letters)

    def __len__(self) -> int:
        return len(self.letters)

    def to_text(self) -> str:
        k = self.k
        return " ".join(str(a + 1) if a < k else str(-(a - k + 1)) for a in self.letters)


def load_generator_system(doc) -> GeneratorSystem:
    """Build a system from generator-file content.

    ``doc`` is either the JSON text (str/bytes) or the already-decoded dict
    ``{"d": int, "generators": [[[...]]], "names": [...]}``.
    """
    if isinstance(doc, (str, bytes, bytearray)):
        try:
            doc = json.loads(doc)
        except json.JSONDecodeError as exc:
            raise FormatError(f"generator file is not valid JSON: {exc}") from None
    if not isinstance(doc, dict):
        raise FormatError("generator file must be a JSON object")
    d = doc.get("d")
    gens = doc.get("generators")
    if isinstance(d, bool) or not isinstance(d, int) or d < 1:
        raise FormatError(f"'d' must be a positive integer, got {d!r}")
    if not isinstance(gens, list) or not gens:
        raise FormatError("'generators' must be a non-empty list")
    mats = []
    for i, g in enumerate(gens):
        if not isinstance(g, list) or len(g) != d or any(
                not isinstance(r, list) or len(r) != d for r in g):
            raise FormatError(f"generator {i + 1} is not a {d}x{d} array")
        for r in g:
            for x in r:
                if isinstance(x, bool) or not isinstance(x, int):
                    raise FormatError(f"generator {i + 1} has non-integer entry {x!r}")
        mats.append(ExactMatrix.from_rows(g))
    names = doc.get("names")
    if names is not None and not isinstance(names, list):
        raise FormatError("'names' must be a list of strings")
    return GeneratorSystem.from_matrices(mats, names)


def read_generator_file(path) -> GeneratorSystem:
    return load_generator_system(Path(path).read_text())


def dump_generator_system(sys: GeneratorSystem) -> dict:
    doc = {"d": sys.d, "generators": [a.rows() for a in sys.sigma]}
    if sys.names:
        doc["names"] = list(sys.names)
    return doc


def letter_matrix(sys: GeneratorSystem, letter: int) -> ExactMatrix:
    k = sys.k
    if not 0 <= letter < 2 * k:
        raise IndexError(f"letter {letter} outside [0, {2 * k})")
    return sys.sigma[letter] if letter < k else sys.sigma_inv[letter - k]


def make_rng(seed: int, *stream: int) -> np.random.Generator:
    """PCG64 generator for ``seed``; ``stream`` selects an independent substream."""
    return np.random.Generator(np.random.PCG64(np.random.SeedSequence(seed, spawn_key=stream)))


def sample_uniform_word(sys: GeneratorSystem, n: int, rng: np.random.Generator) -> Word:
    if n < 0:
        raise ValueError("word length must be non-negative")
    return Word(tuple(rng.integers(0, 2 * sys.k, size=n).tolist()), sys.k)


def parse_word(sys: GeneratorSystem, text: str) -> Word:
    k = sys.k
    letters = []
    for tok in text.split():
        try:
            i = int(tok)
        except ValueError:
            raise ParseError(f"token {tok!r} is not an integer") from None
        if i == 0 or abs(i) > k:
            raise ParseError(f"token {tok!r} out of range: generator indices are 1..{k}")
        letters.append(i - 1 if i > 0 else k + (-i) - 1)
    return Word(tuple(letters), k)
