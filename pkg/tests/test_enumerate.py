"""Short-vector enumeration against a brute-force box oracle."""

import itertools
from fractions import Fraction as Q

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from leechkit.enumerate import root_vectors, short_vectors, vectors_within
from leechkit.exact import LatticeDesc, NonDefiniteError, freeze
from leechkit.rootsys import ade, cartan_gram


def _box_oracle(gram, bound, center, box=8):
    """Exhaustive search over a coordinate box; valid when the box is wide
    enough for the bound, which holds for the small test lattices here."""
    n = len(gram)
    out = []
    for x in itertools.product(range(-box, box + 1), repeat=n):
        d = tuple(Q(a) - Q(c) for a, c in zip(x, center))
        val = -sum(
            d[i] * gram[i][j] * d[j] for i in range(n) for j in range(n)
        )
        if val <= bound:
            out.append((x, val))
    return out


diag_entries = st.integers(min_value=1, max_value=4)


@st.composite
def neg_definite_grams(draw, n=2):
    """Random small negative-definite Gram matrices via B * -I * B^T."""
    b = [[draw(st.integers(min_value=-2, max_value=2)) for _ in range(n)]
         for _ in range(n)]
    for i in range(n):
        b[i][i] = draw(st.integers(min_value=1, max_value=3))
        for j in range(i):
            b[i][j] = 0
    g = [[-sum(b[i][k] * b[j][k] for k in range(n)) for j in range(n)]
         for i in range(n)]
    return freeze(g)


@settings(max_examples=40, deadline=None)
@given(neg_definite_grams(), st.integers(min_value=1, max_value=6))
def test_homogeneous_matches_box(gram, bound):
    lat = LatticeDesc(gram=gram, sig="negative-definite")
    got = short_vectors(lat, bound=bound)
    want = sorted(
        x for x, val in _box_oracle(gram, Q(bound), (0, 0), box=10) if any(x)
    )
    assert got == want


@settings(max_examples=40, deadline=None)
@given(
    neg_definite_grams(),
    st.tuples(
        st.fractions(min_value=-2, max_value=2, max_denominator=4),
        st.fractions(min_value=-2, max_value=2, max_denominator=4),
    ),
)
def test_inhomogeneous_matches_box(gram, center):
    lat = LatticeDesc(gram=gram, sig="negative-definite")
    bound = Q(5)
    got = vectors_within(lat, center, bound)
    want = sorted(_box_oracle(gram, bound, center, box=12))
    assert got == want


def test_e8_has_240_roots():
    lat = cartan_gram(ade("E8"))
    assert len(root_vectors(lat)) == 240


def test_a2_has_6_roots():
    lat = cartan_gram(ade("A2"))
    roots = root_vectors(lat)
    assert len(roots) == 6
    assert roots == sorted(roots)
    # both signs present
    assert {tuple(-x for x in r) for r in roots} == set(roots)


def test_inhomogeneous_exact_target():
    lat = cartan_gram(ade("A2"))
    # vectors at squared distance 2/3 from the center of a deep triangle
    center = (Q(2, 3), Q(1, 3))
    sols = short_vectors(lat, center=center, target=Q(2, 3))
    assert len(sols) == 3


def test_rejects_indefinite():
    lat = LatticeDesc(gram=freeze([[0, 1], [1, 0]]), sig="indefinite(1,1)")
    with pytest.raises(NonDefiniteError):
        short_vectors(lat, bound=2)


def test_bound_must_be_positive():
    lat = cartan_gram(ade("A1"))
    with pytest.raises(ValueError):
        short_vectors(lat, bound=0)
