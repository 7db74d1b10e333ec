import math

import mpmath
import pytest
import sympy
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import HEIS, ROT, SANOV, U
from quickwp import (GeneratorSystem, Word, compute_q, evaluate_dc, evaluate_dc_mod, evaluate_naive,
                     is_identity, is_triangular_system, make_rng, max_bit_length, mod_is_identity,
                     mod_reduce, parse_word, quick_wp, quick_wp_report, sample_uniform_word)
from quickwp.solvers import q_threshold, sieve_primes

SYSTEMS = {"U": [U], "sanov": SANOV, "rot": [ROT], "heis": HEIS}


def q_oracle(n):
    """Independent q(n): 256-bit mpmath threshold and sympy's prime range."""
    if n <= 1:
        return 1, []
    with mpmath.workprec(256):
        t = int(mpmath.floor(mpmath.log(n, 2) ** 5))
    primes = list(sympy.primerange(2, t + 1))
    return math.prod(primes), primes


# ------------------------------------------------------------ evaluators

def test_naive_examples(u_sys):
    assert is_identity(evaluate_naive(u_sys, Word((), 1)))
    assert evaluate_naive(u_sys, parse_word(u_sys, "1 1 1")).rows() == [[1, 3], [0, 1]]
    assert is_identity(evaluate_naive(u_sys, parse_word(u_sys, "1 -1")))


def test_dc_examples(sanov):
    assert is_identity(evaluate_dc(sanov, Word((), 2)))
    assert evaluate_dc(sanov, parse_word(sanov, "1")).rows() == [[1, 2], [0, 1]]


def test_dc_mod_examples(u_sys):
    w = parse_word(u_sys, "1 1 1")
    assert mod_is_identity(evaluate_dc_mod(u_sys, w, 3))
    assert evaluate_dc_mod(u_sys, w, 5).rows() == [[1, 3], [0, 1]]
    assert mod_is_identity(evaluate_dc_mod(u_sys, Word((), 1), 7))
    with pytest.raises(ValueError):
        evaluate_dc_mod(u_sys, w, 1)


@settings(deadline=None, max_examples=60)
@given(st.sampled_from(sorted(SYSTEMS)), st.integers(0, 512), st.integers(0, 2 ** 32))
def test_dc_equals_naive(name, n, seed):
    sys = GeneratorSystem.from_matrices(SYSTEMS[name])
    w = sample_uniform_word(sys, n, make_rng(seed))
    assert evaluate_dc(sys, w) == evaluate_naive(sys, w)
    assert quick_wp(sys, w) == is_identity(evaluate_naive(sys, w))


@settings(deadline=None, max_examples=80)
@given(st.sampled_from(sorted(SYSTEMS)), st.integers(0, 300), st.integers(0, 2 ** 32),
       st.one_of(st.integers(2, 40), st.integers(2, 2 ** 200)))
def test_dc_mod_is_reduction_of_dc(name, n, seed, m):
    sys = GeneratorSystem.from_matrices(SYSTEMS[name])
    w = sample_uniform_word(sys, n, make_rng(seed))
    exact = evaluate_dc(sys, w)
    mod = evaluate_dc_mod(sys, w, m)
    assert mod == mod_reduce(exact, m)
    # a failed modular test certifies non-identity
    if is_identity(exact):
        assert mod_is_identity(mod)


def test_identity_words_pass_every_modulus(sanov):
    # w followed by its formal inverse is always the identity
    rng = make_rng(9)
    for _ in range(20):
        w = sample_uniform_word(sanov, 50, rng)
        inv = tuple((a + 2) % 4 for a in reversed(w.letters))
        ww = Word(w.letters + inv, 2)
        assert is_identity(evaluate_dc(sanov, ww))
        for m in (2, 3, 6, 30, 210, compute_q(100).value):
            assert mod_is_identity(evaluate_dc_mod(sanov, ww, m))
        assert quick_wp_report(sanov, ww).stage == "exact"


# --------------------------------------------------------------- q(n)

def test_q_examples():
    assert compute_q(0).value == 1 and compute_q(1).value == 1 and compute_q(1).primes == ()
    assert compute_q(2).value == 1  # (log2 2)**5 = 1 admits no prime
    assert compute_q(3).primes == (2, 3, 5, 7) and compute_q(3).value == 210
    assert compute_q(4).primes == tuple(sympy.primerange(2, 32))
    assert compute_q(4).value == 200560490130


@pytest.mark.parametrize("n", [3, 5, 6, 7, 9, 10, 100, 1000, 4097, 65535])
def test_q_matches_oracle(n):
    value, primes = q_oracle(n)
    q = compute_q(n)
    assert list(q.primes) == primes and q.value == value


@pytest.mark.parametrize("e", range(1, 21))
def test_threshold_powers_of_two(e):
    assert q_threshold(2 ** e) == e ** 5


def test_threshold_brackets_power_of_two():
    # just below/above a power of two the floor moves by less than one prime gap
    for e in (4, 8, 12):
        assert q_threshold(2 ** e - 1) < e ** 5 <= q_threshold(2 ** e + 1)


def test_sieve_matches_sympy():
    assert sieve_primes(10_000).tolist() == list(sympy.primerange(2, 10_001))
    assert sieve_primes(1).tolist() == [] and sieve_primes(2).tolist() == [2]


def test_q_non_decreasing_on_small_n():
    prev = 1
    for n in range(0, 300):
        v = compute_q(n).value
        assert v >= prev and v % prev == 0
        prev = v
    thresholds = [q_threshold(n) for n in range(2, 20_000)]
    assert thresholds == sorted(thresholds)


# ------------------------------------------------------------- QuickWP

def test_quick_wp_examples(u_sys):
    assert quick_wp(u_sys, parse_word(u_sys, "1 -1"))
    r = quick_wp_report(u_sys, parse_word(u_sys, "1 1 1"))
    assert (r.is_identity, r.stage, r.q) == (False, "modular", 210)
    r = quick_wp_report(u_sys, parse_word(u_sys, "1 1"))
    assert (r.is_identity, r.stage, r.q) == (False, "exact", 1)


def test_finite_group_identity_words(rot_sys):
    w = parse_word(rot_sys, "1 1 1 1")
    assert quick_wp(rot_sys, w)
    assert quick_wp_report(rot_sys, w).stage == "exact"


# --------------------------------------------------------- triangular

def test_is_triangular_system(u_sys, sanov, heis):
    assert is_triangular_system(u_sys) == "upper"
    assert is_triangular_system(heis) == "upper"
    assert is_triangular_system(sanov) == "none"
    lower = GeneratorSystem.from_matrices([[[1, 0], [1, 1]]])
    assert is_triangular_system(lower) == "lower"


@settings(deadline=None, max_examples=40)
@given(st.integers(1, 4096), st.integers(0, 2 ** 32))
def test_unipotent_entries_polynomial_in_n(n, seed):
    heis = GeneratorSystem.from_matrices(HEIS)
    m = evaluate_dc(heis, sample_uniform_word(heis, n, make_rng(seed)))
    # entry (i, j) is bounded by a polynomial of degree j - i
    assert abs(m[0, 1]) <= n and abs(m[1, 2]) <= n
    assert abs(m[0, 2]) <= n * n


def test_triangular_bit_growth_logarithmic(heis):
    def max_bits(n):
        return max(max_bit_length(evaluate_dc(heis, sample_uniform_word(heis, n, make_rng(77, n, t))))
                   for t in range(40))
    c = max_bits(2 ** 10) / 10
    for e in (12, 14):
        assert max_bits(2 ** e) <= c * e
