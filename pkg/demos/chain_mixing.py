"""
Random walks on a finite quotient
=================================

Reduce the generators modulo m, walk on the finite group they generate and
watch the distance to uniform shrink under the spectral bound.
"""

from quickwp import GeneratorSystem
from quickwp.chain import build_chain, build_lazy_chain, spectral_report, tv_decay_table

gens = GeneratorSystem.from_matrices([[[1, 2], [0, 1]], [[1, 0], [2, 1]]])

for m in (3, 5):
    base = build_chain(gens, m)
    lazy = build_lazy_chain(base)
    r = spectral_report(lazy)
    print(f"m = {m}: |H| = {r.size_H}, |H~| = {r.size_H_tilde}, period = {r.period}")
    print(f"  beta* = {r.beta_star:.4f} <= {r.bound:.6f}, beta_min = {r.beta_min:.4f}")
    for row in tv_decay_table(lazy, 40)[::8]:
        print(f"  nu = {row['nu']:3d}  TV = {row['tv']:.3e}  bound = {row['bound']:.3e}")

# A period-2 example: <U> mod 4 is a 4-cycle, and the squared walk lives on half of it.
u = GeneratorSystem.from_matrices([[[1, 1], [0, 1]]])
r = spectral_report(build_lazy_chain(build_chain(u, 4)))
print("U mod 4:", r.period, r.size_H_tilde, r.eigenvalues)
