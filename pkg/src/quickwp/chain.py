"""Cayley-graph Markov chains on the projection of a generated subgroup mod m.

``build_chain`` gives the walk that multiplies by a uniformly chosen letter
of the symmetrized alphabet (probability ``1/(2k)`` per edge);
``build_lazy_chain`` gives its two-step version restricted to the states
reachable from Id in an even number of steps.  Transition probabilities are
:class:`fractions.Fraction` so that symmetry, row sums and stationarity are
exact checks; only spectra and distance-to-uniform use floating point.
"""
from __future__ import annotations

import math
from collections import deque
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .errors import BudgetExceeded, InvariantViolation, PreconditionViolation
from .exact import ExactMatrix, flat_kernel, identity_flat, max_norm
from .modular import ModMatrix, encode_entries
from .solvers import compute_q, product, sieve_primes
from .words import GeneratorSystem

DEFAULT_CAP = 100_000
SPECTRAL_BUDGET = 2000


@dataclass(frozen=True)
class Chain:
    modulus: int
    d: int
    k: int
    kind: str  # "base" or "lazy"
    states: tuple  # canonical keys, BFS order from Id
    matrices: tuple  # flat residue tuples, parallel to ``states``
    rows: tuple  # rows[i] = ((j, Fraction), ...) sorted by j
    id_index: int = 0
    base_size: int = 0  # |H_m|; for a base chain equals len(states)
    period: int | None = None
    index: dict = field(default_factory=dict, compare=False, repr=False)

    def __len__(self) -> int:
        return len(self.states)

    def state_matrix(self, i: int) -> ModMatrix:
        return ModMatrix(self.d, self.modulus, self.matrices[i])

    def prob(self, i: int, j: int) -> Fraction:
        for jj, p in self.rows[i]:
            if jj == j:
                return p
        return Fraction(0)

    def dense(self) -> np.ndarray:
        n = len(self.states)
        P = np.zeros((n, n))
        for i, row in enumerate(self.rows):
            for j, p in row:
                P[i, j] = float(p)
        return P


def _residue_alphabet(sys: GeneratorSystem, m: int) -> list[tuple]:
    return [tuple(x % m for x in a.entries) for a in sys.alphabet]


def enumerate_subgroup(sys: GeneratorSystem, m: int, cap: int = DEFAULT_CAP) -> list[tuple]:
    """Breadth-first closure of ``{Id}`` under right multiplication by the alphabet mod m.

    Returns flat residue tuples in discovery order (Id first; neighbours
    visited in letter-index order).
    """
    if m < 2:
        raise ValueError("modulus must be >= 2")
    d = sys.d
    mul = flat_kernel(d)
    gens = _residue_alphabet(sys, m)
    start = identity_flat(d)
    seen = {start}
    order = [start]
    queue = deque([start])
    while queue:
        x = queue.popleft()
        for g in gens:
            y = tuple(e % m for e in mul(x, g))
            if y not in seen:
                if len(order) >= cap:
                    raise BudgetExceeded(f"subgroup mod {m} has more than {cap} elements")
                seen.add(y)
                order.append(y)
                queue.append(y)
    return order


def check_admissible(sys: GeneratorSystem, m: int) -> None:
    """Raise :class:`PreconditionViolation` unless the alphabet projects injectively mod m.

    Requires ``m`` to exceed every ``|entry|`` of the alphabet and, in
    addition, the ``2k`` residue matrices to be pairwise distinct and
    different from Id (the first condition alone does not imply this:
    ``[[1,1],[0,1]]`` is its own inverse mod 2).
    """
    norm = max(max_norm(a) for a in sys.alphabet)
    if m <= norm:
        raise PreconditionViolation(f"modulus {m} must exceed the largest |entry| {norm}")
    res = _residue_alphabet(sys, m)
    if len(set(res)) != len(res):
        raise PreconditionViolation(f"alphabet matrices are not pairwise distinct mod {m}")
    if identity_flat(sys.d) in res:
        raise PreconditionViolation(f"a generator is the identity mod {m}")


def build_chain(sys: GeneratorSystem, m: int, cap: int = DEFAULT_CAP) -> Chain:
    check_admissible(sys, m)
    d, k = sys.d, sys.k
    mul = flat_kernel(d)
    gens = _residue_alphabet(sys, m)
    mats = enumerate_subgroup(sys, m, cap)
    index = {x: i for i, x in enumerate(mats)}
    step = Fraction(1, 2 * k)
    rows = []
    for x in mats:
        acc: dict[int, Fraction] = {}
        for g in gens:
            j = index[tuple(e % m for e in mul(x, g))]
            acc[j] = acc.get(j, 0) + step
        if len(acc) != 2 * k:
            raise InvariantViolation("distinct letters produced coinciding edges")
        rows.append(tuple(sorted(acc.items())))
    keys = tuple(encode_entries(x) for x in mats)
    return Chain(m, d, k, "base", keys, tuple(mats), tuple(rows), 0, len(mats), None,
                 {key: i for i, key in enumerate(keys)})


def chain_period(c: Chain) -> int:
    """1 if the chain's graph is not bipartite, else 2 (2-colouring from Id)."""
    if c.kind != "base":
        raise ValueError("period is defined here for base chains")
    colour = [-1] * len(c)
    colour[c.id_index] = 0
    queue = deque([c.id_index])
    while queue:
        i = queue.popleft()
        for j, _ in c.rows[i]:
            if colour[j] < 0:
                colour[j] = 1 - colour[i]
                queue.append(j)
            elif colour[j] == colour[i]:
                return 1
    return 2


def build_lazy_chain(c: Chain) -> Chain:
    """Two-step chain ``P^2`` restricted to the states reachable from Id with it."""
    if c.kind != "base":
        raise ValueError("lazy chain is built from a base chain")

    def two_step(i):
        acc: dict[int, Fraction] = {}
        for j, p in c.rows[i]:
            for l, q in c.rows[j]:
                acc[l] = acc.get(l, 0) + p * q
        return acc

    seen = {c.id_index: 0}
    order = [c.id_index]
    full_rows = []
    pos = 0
    while pos < len(order):
        i = order[pos]
        pos += 1
        acc = two_step(i)
        full_rows.append(acc)
        for l in sorted(acc):
            if l not in seen:
                seen[l] = len(order)
                order.append(l)
    rows = tuple(tuple(sorted((seen[l], p) for l, p in acc.items())) for acc in full_rows)
    keys = tuple(c.states[i] for i in order)
    return Chain(c.modulus, c.d, c.k, "lazy", keys, tuple(c.matrices[i] for i in order), rows,
                 0, len(c), chain_period(c), {key: i for i, key in enumerate(keys)})


# ------------------------------------------------------- distributions

def distribution_after(c: Chain, steps: int) -> np.ndarray:
    """Distribution of the walk started at Id after ``steps`` transitions."""
    n = len(c)
    incoming: list[list[tuple[int, float]]] = [[] for _ in range(n)]
    for i, row in enumerate(c.rows):
        for j, p in row:
            incoming[j].append((i, float(p)))
    mu = [0.0] * n
    mu[c.id_index] = 1.0
    for _ in range(steps):
        mu = [math.fsum(mu[i] * p for i, p in inc) for inc in incoming]
    return np.array(mu)


def uniform(c: Chain) -> np.ndarray:
    return np.full(len(c), 1.0 / len(c))


def total_variation(u, v) -> float:
    u = np.asarray(u, dtype=float)
    v = np.asarray(v, dtype=float)
    if u.shape != v.shape:
        raise ValueError(f"dimension mismatch: {u.shape} vs {v.shape}")
    return 0.5 * math.fsum(np.abs(u - v).tolist())


def lemma_bound(c: Chain, steps: int) -> float:
    """``1/2 * sqrt(|H~|) * (1 - 1/(4 k^2 |H~|^2))**steps``."""
    h = len(c)
    return 0.5 * math.sqrt(h) * (1.0 - 1.0 / (4 * c.k ** 2 * h ** 2)) ** steps


@dataclass
class ChainAnalysis:
    m: int
    k: int
    size_H: int
    size_H_tilde: int
    period: int
    beta1: float | None
    beta_min: float | None
    beta_star: float | None
    bound: float
    eigenvalues: list = field(default_factory=list)
    tv_decay: list = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "m": self.m, "k": self.k,
            "size_H": self.size_H, "size_H_tilde": self.size_H_tilde,
            "period": self.period,
            "beta1": self.beta1, "beta_min": self.beta_min, "beta_star": self.beta_star,
            "bound": self.bound,
            "eigenvalues": self.eigenvalues,
            "tv_decay": self.tv_decay,
        }


def spectral_report(c: Chain, budget: int = SPECTRAL_BUDGET) -> ChainAnalysis:
    """Eigenvalue summary of a lazy chain, with the mixing bounds checked."""
    if c.kind != "lazy":
        raise ValueError("spectral_report expects a lazy chain")
    h = len(c)
    if h > budget:
        raise BudgetExceeded(f"{h} states exceed the dense eigensolve budget {budget}")
    eig = np.sort(np.linalg.eigvalsh(c.dense()))[::-1]
    beta1 = float(eig[1]) if h > 1 else 0.0
    beta_min = float(eig[-1]) if h > 1 else 1.0
    beta_star = max(beta1, abs(beta_min)) if h > 1 else 0.0
    bound = 1.0 - 1.0 / (4 * c.k ** 2 * h ** 2)
    if beta_star > bound + 1e-9:
        raise InvariantViolation(f"beta* = {beta_star} exceeds {bound}")
    if h > 1 and beta_min < -1 + 1 / c.k - 1e-9:
        raise InvariantViolation(f"smallest eigenvalue {beta_min} below -1 + 1/k")
    return ChainAnalysis(c.modulus, c.k, c.base_size, h, c.period, beta1, beta_min, beta_star,
                         bound, [float(x) for x in eig])


def tv_decay_table(c: Chain, max_steps: int = 200) -> list[dict]:
    """Measured distance to uniform against the mixing bound for ``0..max_steps``."""
    n = len(c)
    incoming: list[list[tuple[int, float]]] = [[] for _ in range(n)]
    for i, row in enumerate(c.rows):
        for j, p in row:
            incoming[j].append((i, float(p)))
    pi = uniform(c)
    mu = [0.0] * n
    mu[c.id_index] = 1.0
    table = []
    for nu in range(max_steps + 1):
        table.append({"nu": nu, "tv": total_variation(mu, pi), "bound": lemma_bound(c, nu)})
        mu = [math.fsum(mu[i] * p for i, p in inc) for inc in incoming]
    return table


# ------------------------------------------------ small-order primes

def order_mod_prime(a: ExactMatrix, p: int) -> int:
    """Multiplicative order of ``a`` mod ``p`` by repeated multiplication."""
    d = a.dim
    mul = flat_kernel(d)
    base = tuple(x % p for x in a.entries)
    one = identity_flat(d)
    cap = p ** (d * d)
    x = base
    n = 1
    while x != one:
        n += 1
        if n > cap:
            raise RuntimeError(f"order of matrix mod {p} exceeds the group-size bound")
        x = tuple(e % p for e in mul(x, base))
    return n


def _power_gcds(a: ExactMatrix, o: int) -> list[int]:
    """``g_n = gcd`` of the entries of ``a**n - Id`` for ``n = 1..o``."""
    d = a.dim
    mul = flat_kernel(d)
    one = identity_flat(d)
    out = []
    x = a.entries
    for n in range(1, o + 1):
        if n > 1:
            x = mul(x, a.entries)
        out.append(math.gcd(*(e - i for e, i in zip(x, one))))
    return out


def count_small_order_primes(a: ExactMatrix, o: int, P: int) -> int:
    """Number of primes ``p <= P`` for which ``a`` mod ``p`` has order at most ``o``.

    ``a`` has order ``<= o`` mod ``p`` exactly when ``p`` divides every entry
    of ``a**n - Id`` for some ``n <= o``, so only divisibility of the
    product of the ``g_n`` needs testing, not an order computation per prime.
    """
    if o < 1:
        return 0
    primes = sieve_primes(P).tolist()
    gcds = _power_gcds(a, o)
    if any(g == 0 for g in gcds):
        return len(primes)
    N = product(gcds)
    return sum(1 for p in primes if N % p == 0)


def find_good_prime(a: ExactMatrix, n: int) -> int | None:
    """Smallest prime factor ``p`` of ``q(n)`` with order of ``a`` mod ``p`` at least ``2 log2(n)^2``."""
    if n < 2:
        raise ValueError("n must be >= 2")
    need = 2 * math.log2(n) ** 2
    o = math.ceil(need) - 1  # orders <= o are too small
    d = a.dim
    mul = flat_kernel(d)
    one = identity_flat(d)
    for p in compute_q(n).primes:
        base = tuple(x % p for x in a.entries)
        x = base
        small = x == one
        for _ in range(1, o):
            if small:
                break
            x = tuple(e % p for e in mul(x, base))
            small = x == one
        if not small:
            return p
    return None
