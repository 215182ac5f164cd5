"""GF(2) linear algebra tests, with independent elimination oracles."""

from __future__ import annotations

import itertools
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from sqtanner import gf2
from sqtanner.errors import DimensionError
from sqtanner.gf2 import BitMatrix


def oracle_rank(rows: list[list[int]]) -> int:
    """Plain list-of-lists Gauss elimination, kept independent of gf2."""
    m = [list(r) for r in rows]
    if not m:
        return 0
    ncols = len(m[0])
    rank = 0
    for col in range(ncols):
        piv = None
        for r in range(rank, len(m)):
            if m[r][col]:
                piv = r
                break
        if piv is None:
            continue
        m[rank], m[piv] = m[piv], m[rank]
        for r in range(len(m)):
            if r != rank and m[r][col]:
                m[r] = [(x + y) % 2 for x, y in zip(m[r], m[rank])]
        rank += 1
    return rank


def random_matrix(rng: random.Random, rows: int, cols: int) -> BitMatrix:
    return BitMatrix(rows, cols, [rng.getrandbits(cols) for _ in range(rows)])


def test_rank_identity():
    assert gf2.rank(BitMatrix.identity(5)) == 5


def test_rank_zero_matrix():
    assert gf2.rank(BitMatrix.zeros(3, 7)) == 0


def test_rank_matches_oracle_on_random_matrices():
    rng = random.Random(1)
    for _ in range(50):
        m = random_matrix(rng, 6, 9)
        assert gf2.rank(m) == oracle_rank(m.to_lists())


def test_rank_invariant_under_row_permutation():
    rng = random.Random(2)
    m = random_matrix(rng, 5, 8)
    rows = list(m.data)
    rng.shuffle(rows)
    assert gf2.rank(BitMatrix(5, 8, rows)) == gf2.rank(m)


def test_nullspace_identity_is_empty():
    basis = gf2.nullspace_basis(BitMatrix.identity(4))
    assert basis.rows == 0 and basis.cols == 4


def test_nullspace_single_parity_row():
    basis = gf2.nullspace_basis(BitMatrix.from_rows([[1, 1]]))
    assert basis.to_lists() == [[1, 1]]


def test_nullspace_repetition_code_exhaustive():
    parity = BitMatrix.from_rows([[1, 1, 0], [0, 1, 1]])
    basis = gf2.nullspace_basis(parity)
    assert basis.rows == 1
    kernel = {
        word
        for word in range(8)
        if all((parity.row(i) & word).bit_count() % 2 == 0 for i in range(2))
    }
    span = {0, basis.row(0)}
    assert span == kernel == {0, 0b111}


def test_nullspace_rows_orthogonal_to_matrix():
    rng = random.Random(3)
    for _ in range(20):
        m = random_matrix(rng, 4, 9)
        basis = gf2.nullspace_basis(m)
        assert basis.rows == m.cols - gf2.rank(m)
        assert m.mul(basis.transpose()).is_zero()
        assert gf2.rank(basis) == basis.rows


def test_kron_identities():
    assert gf2.kron(BitMatrix.identity(2), BitMatrix.identity(3)) == BitMatrix.identity(6)


def test_kron_hand_expansion():
    a = BitMatrix.from_rows([[1, 1]])
    b = BitMatrix.from_rows([[1, 0, 1]])
    assert gf2.kron(a, b).to_lists() == [[1, 0, 1, 1, 0, 1]]


def test_kron_index_formula_oracle():
    rng = random.Random(4)
    a = random_matrix(rng, 3, 4)
    b = random_matrix(rng, 2, 5)
    k = gf2.kron(a, b)
    for i, p, j, q in itertools.product(range(3), range(4), range(2), range(5)):
        assert k.bit(i * 2 + j, p * 5 + q) == a.bit(i, p) * b.bit(j, q)


def test_kron_rank_product_law():
    rng = random.Random(5)
    for _ in range(100):
        a = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 8))
        b = random_matrix(rng, rng.randint(1, 6), rng.randint(1, 8))
        assert gf2.rank(gf2.kron(a, b)) == gf2.rank(a) * gf2.rank(b)


def test_kron_associative():
    rng = random.Random(6)
    a, b, c = (random_matrix(rng, 2, 3) for _ in range(3))
    assert gf2.kron(gf2.kron(a, b), c) == gf2.kron(a, gf2.kron(b, c))


def test_row_space_contains_rows_and_zero():
    rng = random.Random(7)
    m = random_matrix(rng, 4, 6)
    for r in m.data:
        assert gf2.row_space_contains(m, r)
    assert gf2.row_space_contains(m, 0)


def test_row_space_matches_exhaustive_span():
    rng = random.Random(8)
    for _ in range(10):
        m = random_matrix(rng, 4, 6)
        span = set()
        for coeffs in range(16):
            w = 0
            for i in range(4):
                if (coeffs >> i) & 1:
                    w ^= m.row(i)
            span.add(w)
        for v in range(64):
            assert gf2.row_space_contains(m, v) == (v in span)


def test_row_space_outside_vector_exists_for_rank_deficient():
    m = BitMatrix.from_rows([[1, 0, 0, 0, 0, 0], [0, 1, 0, 0, 0, 0],
                             [1, 1, 0, 0, 0, 0], [0, 0, 1, 0, 0, 0]])
    assert not gf2.row_space_contains(m, [0, 0, 0, 1, 0, 0])


def test_row_space_length_mismatch_raises():
    with pytest.raises(DimensionError):
        gf2.row_space_contains(BitMatrix.identity(3), [1, 0])


def test_mul_and_transpose_roundtrip():
    rng = random.Random(9)
    a = random_matrix(rng, 3, 5)
    b = random_matrix(rng, 5, 4)
    prod = a.mul(b)
    lists_a, lists_b = a.to_lists(), b.to_lists()
    expect = [
        [sum(lists_a[i][k] * lists_b[k][j] for k in range(5)) % 2 for j in range(4)]
        for i in range(3)
    ]
    assert prod.to_lists() == expect
    assert a.transpose().transpose() == a


@settings(max_examples=60, deadline=None)
@given(
    st.integers(1, 5),
    st.integers(1, 8),
    st.randoms(use_true_random=False),
)
def test_rank_nullity(rows, cols, rnd):
    m = BitMatrix(rows, cols, [rnd.getrandbits(cols) for _ in range(rows)])
    assert gf2.rank(m) + gf2.nullspace_basis(m).rows == cols


def test_bits_beyond_cols_are_masked():
    m = BitMatrix(1, 3, [0b11111])
    assert m.row(0) == 0b111
