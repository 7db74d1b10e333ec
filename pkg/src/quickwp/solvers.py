"""Evaluation strategies for words over a generator system.

* :func:`evaluate_naive` -- left-to-right product, quadratic bit cost.
* :func:`evaluate_dc` -- balanced divide and conquer, splitting at ``n // 2``.
* :func:`evaluate_dc_mod` -- the same recursion over Z/mZ.
* :func:`quick_wp` -- modular filter with modulus ``q(n)``, exact fallback.

The recursion depth of the divide-and-conquer routines is ``ceil(log2 n)``,
so plain recursion is safe far beyond any practical word length (depth 24
at ``n = 2**24``).
"""
from __future__ import annotations

import decimal
from dataclasses import dataclass
from functools import lru_cache

import numpy as np

from .exact import ExactMatrix, flat_kernel, identity_flat
from .modular import ModMatrix, mod_is_identity
from .words import GeneratorSystem, Word

# Decimal digits used to evaluate (log2 n)**5; 40 digits is about 133 bits.
_THRESHOLD_DIGITS = 40


def _product_tree(leaves, lo, hi, mul, reduce, s_max):
    n = hi - lo
    if n == 1:
        return leaves[lo]
    mid = lo + n // 2
    r = mul(_product_tree(leaves, lo, mid, mul, reduce, s_max),
            _product_tree(leaves, mid, hi, mul, reduce, s_max))
    if n > s_max:
        r = reduce(r)
    return r


def evaluate_naive(sys: GeneratorSystem, w: Word) -> ExactMatrix:
    """``M(w)`` by ``n - 1`` successive right multiplications."""
    d = sys.d
    if not w.letters:
        return ExactMatrix.identity(d)
    mul = flat_kernel(d)
    table = [a.entries for a in sys.alphabet]
    letters = w.letters
    acc = table[letters[0]]
    for a in letters[1:]:
        acc = mul(acc, table[a])
    return ExactMatrix(d, acc)


def evaluate_dc(sys: GeneratorSystem, w: Word) -> ExactMatrix:
    """``M(w)`` by recursive halving: prefix of length ``n // 2`` times the rest."""
    d = sys.d
    n = len(w.letters)
    if n == 0:
        return ExactMatrix.identity(d)
    table = [a.entries for a in sys.alphabet]
    leaves = [table[a] for a in w.letters]
    return ExactMatrix(d, _product_tree(leaves, 0, n, flat_kernel(d), None, n))


def _centered(x: int, m: int, half: int) -> int:
    r = x % m
    return r - m if r > half else r


def evaluate_dc_mod(sys: GeneratorSystem, w: Word, m: int) -> ModMatrix:
    """``M(w)`` modulo ``m`` with the divide-and-conquer recursion.

    Generators are reduced once, to representatives in ``(-m/2, m/2]``.
    Internal nodes keep any congruent representative and are only reduced
    once the number of letters below them could push an entry past ``m/2``;
    the final matrix is normalised to ``[0, m)``.
    """
    if isinstance(m, bool) or not isinstance(m, int) or m < 2:
        raise ValueError(f"modulus must be an integer >= 2, got {m!r}")
    d = sys.d
    n = len(w.letters)
    if n == 0:
        return ModMatrix.identity(d, m)
    half = m // 2
    table = [tuple(_centered(x, m, half) for x in a.entries) for a in sys.alphabet]
    leaves = [table[a] for a in w.letters]

    # A product of s leaves has entries of absolute value <= d**(s-1) * N**s,
    # which is below 2**(b*s) with b = bitlen(d*N); no reduction is needed
    # while that stays <= m/2.
    norm = max(abs(x) for t in table for x in t)
    b = (d * norm).bit_length()
    s_max = max(1, (half.bit_length() - 1) // b)

    def reduce(r):
        return tuple(_centered(x, m, half) for x in r)

    r = _product_tree(leaves, 0, n, flat_kernel(d), reduce, s_max)
    return ModMatrix(d, m, tuple(x % m for x in r))


# ---------------------------------------------------------------- q(n)

@dataclass(frozen=True)
class QModulus:
    """``q(n)``: the product of all primes ``p <= (log2 n)**5``."""

    n: int
    primes: tuple
    value: int

    @property
    def bits(self) -> int:
        return self.value.bit_length()


def sieve_primes(limit: int) -> np.ndarray:
    """All primes ``<= limit`` by the sieve of Eratosthenes."""
    if limit < 2:
        return np.zeros(0, dtype=np.int64)
    is_p = np.ones(limit + 1, dtype=bool)
    is_p[:2] = False
    is_p[4::2] = False
    for p in range(3, int(limit ** 0.5) + 1, 2):
        if is_p[p]:
            is_p[p * p::2 * p] = False
    return np.flatnonzero(is_p)


def product(values) -> int:
    """Product of ints by a balanced tree (empty product is 1)."""
    vals = [int(v) for v in values]
    if not vals:
        return 1
    while len(vals) > 1:
        nxt = [vals[i] * vals[i + 1] for i in range(0, len(vals) - 1, 2)]
        if len(vals) % 2:
            nxt.append(vals[-1])
        vals = nxt
    return vals[0]


def q_threshold(n: int) -> int:
    """``floor((log2 n)**5)`` for ``n >= 2``, decided exactly.

    Powers of two give an integer threshold and are handled in integer
    arithmetic.  Otherwise ``log2 n`` is irrational, the threshold can never
    be an integer, and a 40-digit decimal evaluation fixes the floor; the
    precision is raised if the value lands implausibly close to an integer.
    """
    if n < 2:
        raise ValueError("threshold is defined for n >= 2")
    if n & (n - 1) == 0:
        return (n.bit_length() - 1) ** 5
    digits = _THRESHOLD_DIGITS
    while True:
        with decimal.localcontext() as ctx:
            ctx.prec = digits
            t = (decimal.Decimal(n).ln() / decimal.Decimal(2).ln()) ** 5
            floor = int(t.to_integral_value(rounding=decimal.ROUND_FLOOR))
            frac = t - floor
            guard = decimal.Decimal(10) ** (-(digits - 15))
            if guard < frac < 1 - guard:
                return floor
        digits *= 2


@lru_cache(maxsize=256)
def compute_q(n: int) -> QModulus:
    if n < 0:
        raise ValueError("n must be non-negative")
    if n <= 1:
        return QModulus(n, (), 1)
    primes = tuple(sieve_primes(q_threshold(n)).tolist())
    return QModulus(n, primes, product(primes))


# ----------------------------------------------------------- QuickWP

@dataclass(frozen=True)
class QuickWPResult:
    """Decision of :func:`quick_wp_report` and which stage produced it."""

    is_identity: bool
    stage: str  # "modular" or "exact"
    q: int


def passes_modular_filter(sys: GeneratorSystem, w: Word, q: QModulus) -> bool:
    """True iff ``M(w)`` is the identity modulo ``q.value``.

    With ``q.value == 1`` every word passes (Z/1Z is the zero ring).
    """
    if q.value < 2:
        return True
    return mod_is_identity(evaluate_dc_mod(sys, w, q.value))


def quick_wp_report(sys: GeneratorSystem, w: Word) -> QuickWPResult:
    q = compute_q(len(w.letters))
    if not passes_modular_filter(sys, w, q):
        return QuickWPResult(False, "modular", q.value)
    m = evaluate_dc(sys, w)
    return QuickWPResult(m.entries == identity_flat(sys.d), "exact", q.value)


def quick_wp(sys: GeneratorSystem, w: Word) -> bool:
    """Decide whether ``M(w)`` is the identity."""
    return quick_wp_report(sys, w).is_identity


def _is_upper(a: ExactMatrix) -> bool:
    d = a.dim
    return all(a.entries[i * d + j] == 0 for i in range(d) for j in range(i))


def is_triangular_system(sys: GeneratorSystem) -> str:
    """``"upper"``, ``"lower"`` or ``"none"`` according to the shape of every generator."""
    if all(_is_upper(a) for a in sys.sigma):
        return "upper"
    if all(_is_upper(a.transpose()) for a in sys.sigma):
        return "lower"
    return "none"
