"""Exact Fincke-Pohst enumeration of short lattice vectors.

Works on an exact rational Cholesky decomposition of a (negated if needed)
positive-definite Gram matrix.  Candidate intervals are computed with exact
integer square roots; a float is used only to seed the interval search, never
to accept or reject anything.
"""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Optional, Sequence

from .exact import (
    LatticeDesc,
    NEGATIVE_DEFINITE,
    POSITIVE_DEFINITE,
    NonDefiniteError,
    freeze,
)


def cholesky_q(gram: Sequence[Sequence]) -> list:
    """Fincke-Pohst table q for a positive-definite Gram matrix:
    Q(x) = sum_i q[i][i] * (x_i + sum_{j>i} q[i][j] x_j)^2."""
    n = len(gram)
    q = [[Fraction(x) for x in row] for row in gram]
    for i in range(n):
        if q[i][i] <= 0:
            raise NonDefiniteError("Gram matrix is not positive definite")
        for j in range(i + 1, n):
            q[j][i] = q[i][j]
            q[i][j] = q[i][j] / q[i][i]
        for k in range(i + 1, n):
            for l in range(k, n):
                q[k][l] = q[k][l] - q[k][i] * q[i][l]
    return q


def _floor_upper(c: Fraction, t: Fraction, qii: Fraction) -> int:
    """floor(-c + sqrt(t/qii)) for t >= 0, exactly.

    An integer x is below the endpoint iff x + c <= 0 or qii*(x+c)^2 <= t.
    A float square root only seeds the search; the adjustment is exact.
    """

    def below(x: int) -> bool:
        d = x + c
        return d <= 0 or qii * d * d <= t

    x = math.floor(-c + Fraction(math.isqrt(int(t * 10**12 / qii) + 1), 10**6))
    while below(x + 1):
        x += 1
    while not below(x):
        x -= 1
    return x


def _interval(c: Fraction, t: Fraction, qii: Fraction) -> tuple[int, int]:
    """Integer range [lo, hi] with qii*(x + c)^2 <= t; empty when lo > hi."""
    hi = _floor_upper(c, t, qii)
    lo = -_floor_upper(-c, t, qii)
    return lo, hi


def _enumerate(q: list, bound: Fraction, center: Sequence[Fraction]):
    """Yield (coords, value) for all integer x with Q(x - center) <= bound."""
    n = len(q)
    x = [0] * n
    results = []

    def descend(i: int, t: Fraction):
        # offset c_i = -center_i + sum_{j>i} q[i][j]*(x_j - center_j)
        c = -center[i]
        row = q[i]
        for j in range(i + 1, n):
            c += row[j] * (x[j] - center[j])
        qii = row[i]
        lo, hi = _interval(c, t, qii)
        for xi in range(lo, hi + 1):
            x[i] = xi
            used = qii * (xi + c) ** 2
            if i == 0:
                results.append((tuple(x), bound - (t - used)))
            else:
                descend(i - 1, t - used)
        x[i] = 0

    if n:
        descend(n - 1, Fraction(bound))
    return results


def _prepare(lat: LatticeDesc):
    if lat.sig == NEGATIVE_DEFINITE:
        g = tuple(tuple(-x for x in row) for row in lat.gram)
    elif lat.sig == POSITIVE_DEFINITE:
        g = lat.gram
    else:
        raise NonDefiniteError(f"enumeration requires a definite lattice, got {lat.sig}")
    return cholesky_q(g)


def short_vectors(
    lat: LatticeDesc,
    bound: int = 0,
    center: Optional[Sequence] = None,
    target=None,
) -> list:
    """Short-vector enumeration on a definite lattice.

    Homogeneous mode (no center): all x != 0 with |q(x)| <= bound, both signs
    listed.  Inhomogeneous mode (center given): all integer x with
    |q(x - center)| == target exactly.

    Output is sorted lexicographically on the integer coordinates.
    """
    q = _prepare(lat)
    n = lat.rank
    if center is None:
        if bound <= 0:
            raise ValueError("bound must be a positive integer")
        zero = (Fraction(0),) * n
        sols = [x for x, val in _enumerate(q, Fraction(bound), zero)
                if any(x)]
    else:
        if len(center) != n:
            raise ValueError("center has wrong dimension")
        if target is None:
            raise ValueError("inhomogeneous enumeration needs a target value")
        c = tuple(Fraction(v) for v in center)
        tgt = abs(Fraction(target))
        sols = [x for x, val in _enumerate(q, tgt, c) if val == tgt]
    return sorted(sols)


def vectors_within(lat: LatticeDesc, center: Sequence, bound) -> list:
    """All (x, |q(x - center)|) with |q(x - center)| <= bound, sorted by x."""
    q = _prepare(lat)
    c = tuple(Fraction(v) for v in center)
    if len(c) != lat.rank:
        raise ValueError("center has wrong dimension")
    return sorted(_enumerate(q, Fraction(bound), c))


def root_vectors(lat: LatticeDesc) -> list:
    """The norm +-2 vectors of a definite even lattice."""
    return [v for v in short_vectors(lat, bound=2) if abs(lat.norm(v)) == 2]
