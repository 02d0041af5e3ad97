"""Exact integer and rational linear algebra.

Everything in this package that decides a mathematical question (evenness,
unimodularity, root counts, ...) runs on arbitrary-precision integers and
`fractions.Fraction`.  Floating point never appears in an accept/reject
decision.

Matrices are tuples of tuples (rows); vectors are tuples.  All functions
return fresh immutable values.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

Vector = tuple
Matrix = tuple


class NonDefiniteError(ValueError):
    """Raised when a definite lattice was required but not supplied."""


class DegenerateError(ValueError):
    """Raised when a nondegenerate Gram matrix was required."""


def freeze(rows) -> Matrix:
    return tuple(tuple(r) for r in rows)


def identity_matrix(n: int) -> Matrix:
    return tuple(tuple(1 if i == j else 0 for j in range(n)) for i in range(n))


def zero_vector(n: int) -> Vector:
    return (0,) * n


def transpose(a: Sequence[Sequence]) -> Matrix:
    return tuple(zip(*a)) if a else ()


def dot(x: Sequence, y: Sequence):
    if len(x) != len(y):
        raise ValueError("dimension mismatch")
    return sum(a * b for a, b in zip(x, y))


def vec_add(x: Sequence, y: Sequence) -> Vector:
    return tuple(a + b for a, b in zip(x, y))


def vec_sub(x: Sequence, y: Sequence) -> Vector:
    return tuple(a - b for a, b in zip(x, y))


def vec_scale(c, x: Sequence) -> Vector:
    return tuple(c * a for a in x)


def mat_vec(a: Sequence[Sequence], x: Sequence) -> Vector:
    return tuple(dot(row, x) for row in a)


def vec_mat(x: Sequence, a: Sequence[Sequence]) -> Vector:
    return mat_vec(transpose(a), x)


def mat_mul(a: Sequence[Sequence], b: Sequence[Sequence]) -> Matrix:
    bt = transpose(b)
    return tuple(tuple(dot(row, col) for col in bt) for row in a)


def mat_sub(a, b) -> Matrix:
    return tuple(tuple(x - y for x, y in zip(ra, rb)) for ra, rb in zip(a, b))


def gram_apply(g: Sequence[Sequence], x: Sequence, y: Sequence):
    """Pairing x^T g y."""
    return dot(x, mat_vec(g, y))


def gram_of(basis: Sequence[Sequence], g: Sequence[Sequence]) -> Matrix:
    """Gram matrix basis * g * basis^T of the rows of `basis`."""
    gb = [mat_vec(g, row) for row in basis]
    return tuple(tuple(dot(r, c) for c in gb) for r in basis)


def is_symmetric(a: Sequence[Sequence]) -> bool:
    n = len(a)
    return all(len(r) == n for r in a) and all(
        a[i][j] == a[j][i] for i in range(n) for j in range(i)
    )


def is_integer_matrix(a: Sequence[Sequence]) -> bool:
    return all(Fraction(x).denominator == 1 for row in a for x in row)


def is_even_gram(a: Sequence[Sequence]) -> bool:
    return all(Fraction(a[i][i]).denominator == 1 and a[i][i] % 2 == 0
               for i in range(len(a)))


def det(a: Sequence[Sequence]):
    """Determinant; fraction-free Bareiss on integers, Gauss on rationals."""
    n = len(a)
    if n == 0:
        return 1
    if all(isinstance(x, int) for row in a for x in row):
        return _det_bareiss([list(r) for r in a])
    return _det_fraction([[Fraction(x) for x in r] for r in a])


def _det_bareiss(m: list) -> int:
    n = len(m)
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for i in range(k + 1, n):
                if m[i][k] != 0:
                    m[k], m[i] = m[i], m[k]
                    sign = -sign
                    break
            else:
                return 0
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1]


def _det_fraction(m: list) -> Fraction:
    n = len(m)
    res = Fraction(1)
    for k in range(n):
        piv = None
        for i in range(k, n):
            if m[i][k] != 0:
                piv = i
                break
        if piv is None:
            return Fraction(0)
        if piv != k:
            m[k], m[piv] = m[piv], m[k]
            res = -res
        res *= m[k][k]
        inv = 1 / m[k][k]
        for i in range(k + 1, n):
            if m[i][k] != 0:
                f = m[i][k] * inv
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    return res


def inverse(a: Sequence[Sequence]) -> Matrix:
    """Exact inverse via Gauss-Jordan over Fractions."""
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)]
         for i, row in enumerate(a)]
    for k in range(n):
        piv = next((i for i in range(k, n) if m[i][k] != 0), None)
        if piv is None:
            raise DegenerateError("matrix is singular")
        m[k], m[piv] = m[piv], m[k]
        inv = 1 / m[k][k]
        m[k] = [x * inv for x in m[k]]
        for i in range(n):
            if i != k and m[i][k] != 0:
                f = m[i][k]
                m[i] = [x - f * y for x, y in zip(m[i], m[k])]
    return freeze(row[n:] for row in m)


def solve(a: Sequence[Sequence], b: Sequence) -> Vector:
    """Solve a x = b exactly (a square nonsingular)."""
    return mat_vec(inverse(a), b)


# ---------------------------------------------------------------------------
# Hermite and Smith normal forms

def hermite_normal_form(m: Sequence[Sequence]) -> tuple[Matrix, Matrix]:
    """Row-style HNF:  returns (H, U) with U*m = H and det U = +-1.

    Pivots are positive, entries above a pivot are reduced into [0, pivot),
    zero rows are pushed to the bottom.
    """
    h = [list(map(int, row)) for row in m]
    nrows = len(h)
    ncols = len(h[0]) if h else 0
    u = [list(row) for row in identity_matrix(nrows)]
    r = 0
    for c in range(ncols):
        while True:
            nz = [i for i in range(r, nrows) if h[i][c] != 0]
            if not nz:
                break
            i0 = min(nz, key=lambda i: abs(h[i][c]))
            if i0 != r:
                h[r], h[i0] = h[i0], h[r]
                u[r], u[i0] = u[i0], u[r]
            if h[r][c] < 0:
                h[r] = [-x for x in h[r]]
                u[r] = [-x for x in u[r]]
            done = True
            for i in range(r + 1, nrows):
                if h[i][c] != 0:
                    q = h[i][c] // h[r][c]
                    if q:
                        h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                        u[i] = [x - q * y for x, y in zip(u[i], u[r])]
                    if h[i][c] != 0:
                        done = False
            if done:
                break
        if r < nrows and h[r][c] != 0:
            for i in range(r):
                q = h[i][c] // h[r][c]
                if q:
                    h[i] = [x - q * y for x, y in zip(h[i], h[r])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[r])]
            r += 1
            if r == nrows:
                break
    return freeze(h), freeze(u)


def smith_normal_form(m: Sequence[Sequence]) -> tuple[Matrix, Matrix, Matrix]:
    """Returns (S, U, V) with U*m*V = S diagonal, d1 | d2 | ..., U,V unimodular."""
    s = [list(map(int, row)) for row in m]
    nrows = len(s)
    ncols = len(s[0]) if s else 0
    u = [list(row) for row in identity_matrix(nrows)]
    v = [list(row) for row in identity_matrix(ncols)]

    def col_op(j, k, q):
        for row in s:
            row[j] -= q * row[k]
        for row in v:
            row[j] -= q * row[k]

    def col_swap(j, k):
        for row in s:
            row[j], row[k] = row[k], row[j]
        for row in v:
            row[j], row[k] = row[k], row[j]

    t = 0
    while t < min(nrows, ncols):
        # locate a nonzero entry in the remaining block
        piv = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if s[i][j] != 0:
                    if piv is None or abs(s[i][j]) < abs(s[piv[0]][piv[1]]):
                        piv = (i, j)
        if piv is None:
            break
        i0, j0 = piv
        if i0 != t:
            s[t], s[i0] = s[i0], s[t]
            u[t], u[i0] = u[i0], u[t]
        if j0 != t:
            col_swap(t, j0)
        while True:
            # clear column t
            for i in range(t + 1, nrows):
                if s[i][t] != 0:
                    q = s[i][t] // s[t][t]
                    s[i] = [x - q * y for x, y in zip(s[i], s[t])]
                    u[i] = [x - q * y for x, y in zip(u[i], u[t])]
            # clear row t
            for j in range(t + 1, ncols):
                if s[t][j] != 0:
                    col_op(j, t, s[t][j] // s[t][t])
            rem_col = [i for i in range(t + 1, nrows) if s[i][t] != 0]
            rem_row = [j for j in range(t + 1, ncols) if s[t][j] != 0]
            if not rem_col and not rem_row:
                break
            # a division remainder became the new, smaller pivot
            if rem_col:
                i = min(rem_col, key=lambda i: abs(s[i][t]))
                s[t], s[i] = s[i], s[t]
                u[t], u[i] = u[i], u[t]
            else:
                j = min(rem_row, key=lambda j: abs(s[t][j]))
                col_swap(t, j)
        # enforce divisibility d_t | entries of the remaining block
        if s[t][t] != 0:
            bad = None
            for i in range(t + 1, nrows):
                for j in range(t + 1, ncols):
                    if s[i][j] % s[t][t] != 0:
                        bad = (i, j)
                        break
                if bad:
                    break
            if bad:
                i, j = bad
                s[t] = [x + y for x, y in zip(s[t], s[i])]
                u[t] = [x + y for x, y in zip(u[t], u[i])]
                continue  # redo this pivot
        if s[t][t] < 0:
            s[t] = [-x for x in s[t]]
            u[t] = [-x for x in u[t]]
        t += 1
    return freeze(s), freeze(u), freeze(v)


def left_kernel(m: Sequence[Sequence]) -> Matrix:
    """Saturated integer basis of {x : x*m = 0}, via HNF transformation rows."""
    h, u = hermite_normal_form(m)
    kern = [u[i] for i in range(len(h)) if all(x == 0 for x in h[i])]
    return freeze(kern)


# ---------------------------------------------------------------------------
# Lattice descriptions

POSITIVE_DEFINITE = "positive-definite"
NEGATIVE_DEFINITE = "negative-definite"
HYPERBOLIC = "hyperbolic"


def signature(g: Sequence[Sequence]) -> tuple[int, int]:
    """(positive, negative) inertia of a nondegenerate symmetric matrix."""
    n = len(g)
    m = [[Fraction(x) for x in row] for row in g]
    pos = neg = 0
    for k in range(n):
        if m[k][k] == 0:
            j = next((j for j in range(k + 1, n) if m[k][j] != 0), None)
            if j is None:
                raise DegenerateError("degenerate symmetric form")
            for col in range(n):
                m[k][col] += m[j][col]
            for row in m:
                row[k] += row[j]
        if m[k][k] > 0:
            pos += 1
        else:
            neg += 1
        inv = 1 / m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            f = m[i][k] * inv
            if f:
                for j in range(k + 1, n):
                    m[i][j] -= f * row_k[j]
                m[i][k] = Fraction(0)
    return pos, neg


def classify_signature(g: Sequence[Sequence]) -> str:
    pos, neg = signature(g)
    if neg == 0:
        return POSITIVE_DEFINITE
    if pos == 0:
        return NEGATIVE_DEFINITE
    if pos == 1:
        return HYPERBOLIC
    return f"indefinite({pos},{neg})"


@dataclass(frozen=True)
class LatticeDesc:
    """A lattice given by an exact Gram matrix, optionally with an embedding.

    `basis`, when present, has rows expressing the lattice basis in ambient
    rational coordinates; then basis * ambient_gram * basis^T = gram.
    """

    gram: Matrix
    basis: Optional[Matrix] = None
    sig: str = ""

    def __post_init__(self):
        if not is_symmetric(self.gram):
            raise ValueError("Gram matrix must be symmetric")
        if det(self.gram) == 0:
            raise DegenerateError("Gram matrix must be nondegenerate")
        if not self.sig:
            object.__setattr__(self, "sig", classify_signature(self.gram))

    @property
    def rank(self) -> int:
        return len(self.gram)

    @property
    def is_even(self) -> bool:
        return is_even_gram(self.gram)

    @property
    def determinant(self):
        return det(self.gram)

    def pairing(self, x: Sequence, y: Sequence):
        return gram_apply(self.gram, x, y)

    def norm(self, x: Sequence):
        return self.pairing(x, x)


def make_lattice(gram, basis=None) -> LatticeDesc:
    return LatticeDesc(gram=freeze(gram), basis=None if basis is None else freeze(basis))


# ---------------------------------------------------------------------------
# LLL reduction (exact, delta = 99/100)

LLL_DELTA = Fraction(99, 100)


def lll_reduce(lat: LatticeDesc) -> tuple[LatticeDesc, Matrix]:
    """Exact LLL on a definite lattice.  Returns (reduced, T) with
    T * old_basis = new_basis, i.e. new_gram = T * gram * T^T.

    A negative-definite input is negated internally; the returned Gram keeps
    the original sign.
    """
    if lat.sig == NEGATIVE_DEFINITE:
        g0 = freeze(tuple(-x for x in row) for row in lat.gram)
        sign = -1
    elif lat.sig == POSITIVE_DEFINITE:
        g0 = lat.gram
        sign = 1
    else:
        raise NonDefiniteError(f"LLL requires a definite lattice, got {lat.sig}")
    n = lat.rank
    t = [list(row) for row in identity_matrix(n)]

    def ip(i, j):
        return gram_apply(g0, t[i], t[j])

    # Cached Gram-Schmidt data: bstar_norm[i], mu[i][j] for j < i.
    bstar: list = [None] * n
    mu = [[Fraction(0)] * n for _ in range(n)]

    def compute_gs(k):
        for j in range(k):
            mu[k][j] = (ip(k, j) - sum(mu[k][i] * mu[j][i] * bstar[i]
                                       for i in range(j))) / bstar[j]
        bstar[k] = ip(k, k) - sum(mu[k][i] ** 2 * bstar[i] for i in range(k))

    def size_reduce(k, j):
        if abs(mu[k][j]) > Fraction(1, 2):
            q = round(mu[k][j])
            t[k] = [x - q * y for x, y in zip(t[k], t[j])]
            mu[k][j] -= q
            for i in range(j):
                mu[k][i] -= q * mu[j][i]

    compute_gs(0)
    k = 1
    while k < n:
        compute_gs(k)
        for j in range(k - 1, -1, -1):
            size_reduce(k, j)
        if bstar[k] >= (LLL_DELTA - mu[k][k - 1] ** 2) * bstar[k - 1]:
            k += 1
        else:
            t[k], t[k - 1] = t[k - 1], t[k]
            compute_gs(k - 1)
            k = max(k - 1, 1)
    tt = freeze(t)
    new_gram = gram_of(tt, lat.gram) if sign == -1 else gram_of(tt, g0)
    reduced = LatticeDesc(gram=freeze(new_gram), sig=lat.sig)
    return reduced, tt


# ---------------------------------------------------------------------------
# Discriminant group

@dataclass(frozen=True)
class DiscriminantGroup:
    """The quotient dual/lattice of a nondegenerate lattice.

    `invariant_factors` are the nontrivial elementary divisors d1 | d2 | ...;
    `generators[i]` is a rational coordinate vector (in the lattice basis)
    whose class has order invariant_factors[i].
    `dual_basis` rows are the dual basis vectors in lattice coordinates.
    """

    invariant_factors: tuple
    generators: Matrix
    dual_basis: Matrix

    @property
    def order(self) -> int:
        o = 1
        for d in self.invariant_factors:
            o *= d
        return o


def discriminant_group(lat: LatticeDesc) -> DiscriminantGroup:
    g = lat.gram
    if not is_integer_matrix(g):
        raise ValueError("discriminant group needs an integral Gram matrix")
    n = lat.rank
    ginv = inverse(g)
    s, u, v = smith_normal_form(g)
    uinv = inverse(u)
    factors = []
    gens = []
    # Z^n / g Z^n  =~  Z^n / S Z^n  via x -> u x; generators are columns
    # of u^{-1} in dual-basis coordinates.
    for i in range(n):
        d = abs(s[i][i])
        if d > 1:
            dual_coords = tuple(int(uinv[j][i]) for j in range(n))
            gens.append(vec_mat(dual_coords, ginv))
            factors.append(d)
    return DiscriminantGroup(
        invariant_factors=tuple(factors),
        generators=freeze(gens),
        dual_basis=ginv,
    )
