"""
The filtering modulus q(n)
==========================

q(n) multiplies every prime up to (log2 n)**5.  It grows polylogarithmically
in n, so reducing modulo q(n) keeps the modular stage cheap.
"""

import math

from quickwp import compute_q

for e in (2, 3, 4, 6, 8, 12, 16, 20):
    n = 2 ** e
    q = compute_q(n)
    print(f"n = 2^{e:<2d}  primes = {len(q.primes):7d}  largest = {q.primes[-1] if q.primes else '-':>8}"
          f"  bits = {q.bits:8d}  bits/(log2 n)^5 = {q.bits / e ** 5:.3f}")

# Small cases spelled out.
print(compute_q(3).value, compute_q(3).primes)
print(compute_q(4).value, math.prod(compute_q(4).primes))
