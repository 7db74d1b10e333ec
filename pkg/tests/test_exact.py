import math

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import M, schoolbook
from quickwp import (ExactMatrix, NotUnimodular, DimensionMismatch, FormatError, GeneratorSystem,
                     bit_length, determinant, evaluate_dc, is_identity, make_rng, mat_inverse_unimodular,
                     mat_mul, max_bit_length, max_norm, mod_mul, mod_reduce, sample_uniform_word)

I2 = M([[1, 0], [0, 1]])
U = M([[1, 1], [0, 1]])
J = M([[0, -1], [1, 0]])


def test_mat_mul_examples():
    assert mat_mul(I2, U) == U
    assert mat_mul(U, U).rows() == schoolbook(U.rows(), U.rows()) == [[1, 2], [0, 1]]
    assert mat_mul(J, J).rows() == schoolbook(J.rows(), J.rows()) == [[-1, 0], [0, -1]]


def test_mat_mul_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        mat_mul(I2, ExactMatrix.identity(3))


def test_construction_rejects_bad_shapes():
    with pytest.raises(FormatError):
        ExactMatrix(2, (1, 2, 3))
    with pytest.raises(FormatError):
        ExactMatrix.from_rows([[1, 2], [3]])
    with pytest.raises(FormatError):
        ExactMatrix.from_rows([[1.0, 0], [0, 1]])


def test_inverse_examples():
    assert mat_inverse_unimodular(I2) == I2
    inv = mat_inverse_unimodular(U)
    assert inv.rows() == [[1, -1], [0, 1]]
    assert is_identity(mat_mul(U, inv)) and is_identity(mat_mul(inv, U))
    with pytest.raises(NotUnimodular):
        mat_inverse_unimodular(M([[2, 0], [0, 2]]))


def test_inverse_negative_determinant():
    a = M([[0, 1], [1, 0]])
    assert determinant(a) == -1
    assert is_identity(mat_mul(a, mat_inverse_unimodular(a)))


def test_mod_reduce_examples():
    assert mod_reduce(I2, 7).entries == (1, 0, 0, 1)
    assert mod_reduce(M([[1, -1], [0, 1]]), 3).rows() == [[1, 2], [0, 1]]
    assert mod_reduce(M([[1, 3], [0, 1]]), 3).rows() == [[1, 0], [0, 1]]
    with pytest.raises(ValueError):
        mod_reduce(I2, 1)


def test_is_identity_examples():
    assert is_identity(ExactMatrix.identity(3))
    assert not is_identity(U)
    assert not is_identity(M([[-1, 0], [0, -1]]))


def test_max_norm_examples():
    assert max_norm(I2) == 1
    assert max_norm(M([[2, -5], [3, 1]])) == 5
    assert max_norm(M([[0, 0], [0, 0]])) == 0


@pytest.mark.parametrize("x", [0, 1, -1, 2, 3, 4, 255, -256, 12345])
def test_bit_length_matches_definition(x):
    assert bit_length(x) == math.ceil(math.log2(abs(x) + 1)) + 1


def test_bit_length_large():
    # log2(2**70 + 1) is just above 70, so the ceiling is 71, plus a sign bit
    assert bit_length(2 ** 70) == 72
    assert bit_length(2 ** 70 - 1) == 71


# Random unimodular matrices: products of elementary transvections and
# signed permutations, so the determinant is +-1 by construction.
def _elementary(d, i, j, c):
    rows = [[int(r == s) for s in range(d)] for r in range(d)]
    rows[i][j] = c
    return M(rows)


@st.composite
def unimodular(draw, d=3):
    a = ExactMatrix.identity(d)
    for _ in range(draw(st.integers(0, 6))):
        i = draw(st.integers(0, d - 1))
        j = draw(st.integers(0, d - 1).filter(lambda j: j != i))
        a = mat_mul(a, _elementary(d, i, j, draw(st.integers(-4, 4))))
    if draw(st.booleans()):
        flip = [[int(r == s) * (-1 if r == 0 else 1) for s in range(d)] for r in range(d)]
        a = mat_mul(a, M(flip))
    return a


square3 = st.lists(st.integers(-10 ** 6, 10 ** 6), min_size=9, max_size=9).map(
    lambda e: ExactMatrix(3, tuple(e)))


@given(square3, square3, square3)
def test_associativity(a, b, c):
    assert mat_mul(mat_mul(a, b), c) == mat_mul(a, mat_mul(b, c))


@given(square3, square3)
def test_matches_schoolbook(a, b):
    assert mat_mul(a, b).rows() == schoolbook(a.rows(), b.rows())


@given(unimodular())
def test_inverse_round_trip(a):
    assert determinant(a) in (1, -1)
    b = mat_inverse_unimodular(a)
    assert is_identity(mat_mul(a, b)) and is_identity(mat_mul(b, a))


@given(unimodular(d=4))
def test_inverse_round_trip_d4(a):
    assert is_identity(mat_mul(a, mat_inverse_unimodular(a)))


@given(square3, square3, st.sampled_from([2, 3, 5, 6, 30]))
def test_reduction_is_a_homomorphism(a, b, m):
    assert mod_reduce(mat_mul(a, b), m) == mod_mul(mod_reduce(a, m), mod_reduce(b, m))


@settings(deadline=None, max_examples=30)
@given(st.sampled_from(["U", "sanov", "rot", "heis"]), st.integers(1, 2048), st.integers(0, 2 ** 32))
def test_entry_bit_length_grows_at_most_linearly(name, n, seed):
    from conftest import HEIS, ROT, SANOV, U as UROWS
    gens = {"U": [UROWS], "sanov": SANOV, "rot": [ROT], "heis": HEIS}[name]
    sys = GeneratorSystem.from_matrices(gens)
    w = sample_uniform_word(sys, n, make_rng(seed))
    value = evaluate_dc(sys, w)
    assert determinant(value) in (1, -1)
    assert max_bit_length(value) <= (1 + sys.L + math.log2(sys.d)) * n
