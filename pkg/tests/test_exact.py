"""Exact linear algebra: determinants, normal forms, kernels, LLL."""

from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leechkit.exact import (
    DiscriminantGroup,
    LatticeDesc,
    NonDefiniteError,
    det,
    discriminant_group,
    freeze,
    gram_of,
    hermite_normal_form,
    identity_matrix,
    inverse,
    left_kernel,
    lll_reduce,
    mat_mul,
    signature,
    smith_normal_form,
    solve,
    transpose,
)

small_int = st.integers(min_value=-6, max_value=6)


def square_matrices(n):
    return st.lists(
        st.lists(small_int, min_size=n, max_size=n), min_size=n, max_size=n
    ).map(freeze)


def _det_permanent_style(m):
    """Laplace-expansion determinant, the slow oracle."""
    n = len(m)
    if n == 1:
        return m[0][0]
    total = 0
    for j in range(n):
        minor = freeze(tuple(row[k] for k in range(n) if k != j) for row in m[1:])
        total += (-1) ** j * m[0][j] * _det_permanent_style(minor)
    return total


@settings(max_examples=60, deadline=None)
@given(square_matrices(3))
def test_det_matches_laplace(m):
    assert det(m) == _det_permanent_style(m)


@settings(max_examples=40, deadline=None)
@given(square_matrices(4))
def test_hnf_is_unimodular_transform(m):
    h, u = hermite_normal_form(m)
    assert abs(det(u)) == 1
    assert mat_mul(u, m) == h
    # rows echelon: pivot columns strictly increase
    pivots = [next((j for j, x in enumerate(row) if x), None) for row in h]
    seen = [p for p in pivots if p is not None]
    assert seen == sorted(seen) and len(set(seen)) == len(seen)


@settings(max_examples=40, deadline=None)
@given(square_matrices(3))
def test_snf_divisibility_chain(m):
    s, u, v = smith_normal_form(m)
    assert abs(det(u)) == 1 and abs(det(v)) == 1
    assert mat_mul(mat_mul(u, m), v) == s
    diag = [s[i][i] for i in range(3)]
    for a, b in zip(diag, diag[1:]):
        if a != 0:
            assert b % a == 0
        else:
            assert b == 0


def test_inverse_and_solve():
    m = freeze([[2, 1], [1, 1]])
    assert mat_mul(m, inverse(m)) == identity_matrix(2)
    assert solve(m, (3, 2)) == (Q(1), Q(1))


@settings(max_examples=40, deadline=None)
@given(square_matrices(3))
def test_left_kernel_annihilates(m):
    k = left_kernel(m)
    for row in k:
        assert all(
            sum(row[i] * m[i][j] for i in range(3)) == 0 for j in range(3)
        )
    # rank-nullity
    assert len(k) == 3 - _rank(m)


def _rank(m):
    rows = [[Q(x) for x in row] for row in m]
    r = 0
    for col in range(len(m[0])):
        piv = next((i for i in range(r, len(rows)) if rows[i][col]), None)
        if piv is None:
            continue
        rows[r], rows[piv] = rows[piv], rows[r]
        for i in range(len(rows)):
            if i != r and rows[i][col]:
                f = rows[i][col] / rows[r][col]
                rows[i] = [a - f * b for a, b in zip(rows[i], rows[r])]
        r += 1
    return r


def test_signature_hyperbolic_plane():
    assert signature(freeze([[0, 1], [1, 0]])) == (1, 1)


def test_signature_definite():
    assert signature(freeze([[2, 0], [0, 2]])) == (2, 0)
    assert signature(freeze([[-2, 1], [1, -2]])) == (0, 2)


def test_lll_preserves_lattice():
    gram = freeze([[-2, 1, 0], [1, -2, 1], [0, 1, -2]])
    lat = LatticeDesc(gram=gram, sig="negative-definite")
    reduced, t = lll_reduce(lat)
    assert abs(det(t)) == 1
    assert reduced.gram == freeze(mat_mul(mat_mul(t, gram), transpose(t)))
    assert det(reduced.gram) == det(gram)


def test_lll_rejects_indefinite():
    lat = LatticeDesc(gram=freeze([[0, 1], [1, 0]]), sig="indefinite(1,1)")
    with pytest.raises(NonDefiniteError):
        lll_reduce(lat)


def test_discriminant_group_a1():
    lat = LatticeDesc(gram=freeze([[-2]]), sig="negative-definite")
    d = discriminant_group(lat)
    assert isinstance(d, DiscriminantGroup)
    assert d.invariant_factors == (2,)
    assert d.order == 2


def test_discriminant_group_d4_is_two_two():
    gram = freeze(
        [[-2, 1, 1, 1], [1, -2, 0, 0], [1, 0, -2, 0], [1, 0, 0, -2]]
    )
    lat = LatticeDesc(gram=gram, sig="negative-definite")
    assert discriminant_group(lat).invariant_factors == (2, 2)


def test_gram_of_transports():
    gram = freeze([[-2, 1], [1, -2]])
    basis = freeze([[1, 1], [0, 1]])
    assert gram_of(basis, gram) == freeze([[-2, -1], [-1, -2]])
