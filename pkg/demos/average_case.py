"""
How often does the modular stage fail to decide?
================================================

Estimate P_n, the fraction of random words that look like Id modulo q(n),
then time the two-stage solver as n doubles.
"""

import math

from quickwp import GeneratorSystem
from quickwp.bench import estimate_pn, run_bench

gens = GeneratorSystem.from_matrices([[[1, 2], [0, 1]], [[1, 0], [2, 1]]])

exact = estimate_pn(gens, 8, exhaustive=True)
sampled = estimate_pn(gens, 8, trials=4000, seed=7)
print(f"n = 8: exhaustive {exact.hits}/{exact.trials} = {exact.fraction:.4f}, sampled {sampled.fraction:.4f}")

for n in (16, 64, 256):
    est = estimate_pn(gens, n, trials=1000, seed=7)
    print(f"n = {n:4d}: P_n ~ {est.fraction:.4f}  P_n (log2 n)^2 ~ {est.fraction * math.log2(n) ** 2:.3f}")

records = run_bench(gens, ["dc", "quickwp"], [2 ** 10, 2 ** 11, 2 ** 12, 2 ** 13], trials=10)
prev = {}
for r in records:
    ratio = r.mean_ns / prev[r.algorithm] if r.algorithm in prev else float("nan")
    prev[r.algorithm] = r.mean_ns
    print(f"{r.algorithm:8s} n = {r.n:5d}  mean {r.mean_ns / 1e6:7.2f} ms  ratio {ratio:.2f}"
          f"  modular/exact = {r.modular_decisions}/{r.exact_decisions}")
