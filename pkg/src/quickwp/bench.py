"""Monte-Carlo estimation of P_n and wall-clock benchmarks of the solvers.

Every trial draws its word from its own PCG64 substream, keyed by
``(seed, n, trial)``, so results do not depend on trial order or on which
algorithms are run alongside.
"""
from __future__ import annotations

import csv
import gc
import io
import itertools
import statistics
import time
from dataclasses import asdict, dataclass, field

from .errors import BudgetExceeded
from .exact import is_identity
from .modular import mod_is_identity
from .solvers import (compute_q, evaluate_dc, evaluate_dc_mod, evaluate_naive,
                      passes_modular_filter, quick_wp_report)
from .words import RNG_ALGORITHM, GeneratorSystem, Word, make_rng, sample_uniform_word

ALGORITHMS = ("naive", "dc", "dc_mod", "quickwp")
EXHAUSTIVE_LIMIT = 10 ** 7
CSV_COLUMNS = ("algo", "n", "trials", "mean_ns", "median_ns", "trivial_count",
               "modular_decisions", "exact_decisions", "seed")


def trial_word(sys: GeneratorSystem, n: int, seed: int, trial: int) -> Word:
    return sample_uniform_word(sys, n, make_rng(seed, n, trial))


@dataclass(frozen=True)
class PnEstimate:
    n: int
    trials: int
    hits: int
    q_bits: int
    seed: int | None
    exhaustive: bool
    rng: str = RNG_ALGORITHM

    @property
    def fraction(self) -> float:
        return self.hits / self.trials

    def to_dict(self) -> dict:
        return {**asdict(self), "fraction": self.fraction}


def estimate_pn(sys: GeneratorSystem, n: int, trials: int = 10_000, seed: int = 0,
                exhaustive: bool = False) -> PnEstimate:
    """Fraction of length-``n`` words whose value is Id modulo ``q(n)``.

    With ``exhaustive=True`` all ``(2k)**n`` words are enumerated and
    ``trials``/``seed`` are ignored.
    """
    q = compute_q(n)
    q_bits = q.value.bit_length()
    if exhaustive:
        total = (2 * sys.k) ** n
        if total > EXHAUSTIVE_LIMIT:
            raise BudgetExceeded(f"{total} words exceed the exhaustive limit {EXHAUSTIVE_LIMIT}")
        hits = sum(passes_modular_filter(sys, Word(letters, sys.k), q)
                   for letters in itertools.product(range(2 * sys.k), repeat=n))
        return PnEstimate(n, total, hits, q_bits, None, True)
    if trials < 1:
        raise ValueError("trials must be positive")
    hits = sum(passes_modular_filter(sys, trial_word(sys, n, seed, t), q) for t in range(trials))
    return PnEstimate(n, trials, hits, q_bits, seed, False)


@dataclass
class BenchRecord:
    algorithm: str
    n: int
    trials: int
    seed: int
    times_ns: list = field(default_factory=list)
    trivial_count: int = 0
    modular_decisions: int = 0
    exact_decisions: int = 0
    decisions: list = field(default_factory=list, repr=False)
    rng: str = RNG_ALGORITHM

    @property
    def mean_ns(self) -> float:
        return statistics.fmean(self.times_ns)

    @property
    def median_ns(self) -> float:
        return statistics.median(self.times_ns)

    def csv_row(self) -> dict:
        return {"algo": self.algorithm, "n": self.n, "trials": self.trials,
                "mean_ns": round(self.mean_ns), "median_ns": round(self.median_ns),
                "trivial_count": self.trivial_count,
                "modular_decisions": self.modular_decisions,
                "exact_decisions": self.exact_decisions, "seed": self.seed}


def _decide(sys: GeneratorSystem, algo: str, w: Word, modulus: int | None):
    """Return ``(is_trivial, stage)`` for one word."""
    if algo == "naive":
        return is_identity(evaluate_naive(sys, w)), "exact"
    if algo == "dc":
        return is_identity(evaluate_dc(sys, w)), "exact"
    if algo == "dc_mod":
        m = modulus if modulus is not None else compute_q(len(w)).value
        if m < 2:
            return True, "modular"
        return mod_is_identity(evaluate_dc_mod(sys, w, m)), "modular"
    if algo == "quickwp":
        r = quick_wp_report(sys, w)
        return r.is_identity, r.stage
    raise ValueError(f"unknown algorithm {algo!r}; choose from {', '.join(ALGORITHMS)}")


def bench_cell(sys: GeneratorSystem, algo: str, words: list[Word], seed: int,
               modulus: int | None = None) -> BenchRecord:
    """Time ``algo`` on each word; ``words[0]`` is a discarded warm-up."""
    if len(words) < 2:
        raise ValueError("need a warm-up word plus at least one timed word")
    _decide(sys, algo, words[0], modulus)
    rec = BenchRecord(algo, len(words[1]), len(words) - 1, seed)
    for w in words[1:]:
        gc_was_enabled = gc.isenabled()
        gc.disable()
        try:
            t0 = time.perf_counter_ns()
            trivial, stage = _decide(sys, algo, w, modulus)
            rec.times_ns.append(time.perf_counter_ns() - t0)
        finally:
            if gc_was_enabled:
                gc.enable()
        rec.decisions.append(trivial)
        rec.trivial_count += trivial
        if stage == "modular":
            rec.modular_decisions += 1
        else:
            rec.exact_decisions += 1
    return rec


def run_bench(sys: GeneratorSystem, algorithms, lengths, trials: int = 10, seed: int = 0,
              modulus: int | None = None) -> list[BenchRecord]:
    """One :class:`BenchRecord` per (algorithm, length).

    All algorithms at a given length see the same pre-sampled words, and
    the exact deciders (naive, dc, quickwp) must agree word by word;
    ``dc_mod`` is a one-sided filter and may only add trivial answers.
    """
    for a in algorithms:
        if a not in ALGORITHMS:
            raise ValueError(f"unknown algorithm {a!r}; choose from {', '.join(ALGORITHMS)}")
    records = []
    for n in lengths:
        words = [trial_word(sys, n, seed, t) for t in range(trials + 1)]
        cell = [bench_cell(sys, a, words, seed, modulus) for a in algorithms]
        exact = [r for r in cell if r.algorithm != "dc_mod"]
        for r in exact[1:]:
            if r.decisions != exact[0].decisions:
                raise RuntimeError(f"{r.algorithm} and {exact[0].algorithm} disagree at n={n}")
        for r in cell:
            if r.algorithm == "dc_mod" and exact:
                if any(e and not f for e, f in zip(exact[0].decisions, r.decisions)):
                    raise RuntimeError(f"dc_mod rejected an identity word at n={n}")
        records.extend(cell)
    return records


def bench_csv(records) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CSV_COLUMNS, lineterminator="\n")
    writer.writeheader()
    for r in records:
        writer.writerow(r.csv_row())
    return buf.getvalue()
