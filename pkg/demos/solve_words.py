"""
Deciding words over integer matrices
====================================

Build a generator system, write a few words, and compare the solvers.
"""

from quickwp import (GeneratorSystem, evaluate_dc, evaluate_naive, parse_word, quick_wp,
                     quick_wp_report)

# The Sanov pair generates a free group, so only freely trivial words give Id.
gens = GeneratorSystem.from_matrices([[[1, 2], [0, 1]], [[1, 0], [2, 1]]], names=["a", "b"])
print("k =", gens.k, "d =", gens.d, "L =", gens.L)

# Letters are signed 1-based indices: -2 means the inverse of the second generator.
for text in ["1 -1", "1 2 -1 -2", "1 2 -2 -1", "2 2 2 -2 -2 -2 1 -1"]:
    w = parse_word(gens, text)
    r = quick_wp_report(gens, w)
    print(f"{text:24s} identity={r.is_identity!s:5s} decided at the {r.stage} stage (q = {r.q})")

# The naive and divide-and-conquer products agree entry for entry.
w = parse_word(gens, "1 2 " * 50)
assert evaluate_naive(gens, w) == evaluate_dc(gens, w)
print("largest entry of (ab)^50 has", max(abs(x) for x in evaluate_dc(gens, w).entries).bit_length(),
      "bits; trivial:", quick_wp(gens, w))
