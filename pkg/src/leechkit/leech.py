"""Rootless even unimodular lattices from glued lattices with roots.

From a glued lattice N with Coxeter number h, Weyl vector rho, and a glue
codeword gamma with canonical representative v, the sublattice
{u in N : alpha_0(u) integral} carries a modified even unimodular form with
no roots.  The linear forms are

    alpha_0(u) = <h*v - rho, u> / a,      a = 2h + 1 + h*<v,v>/2,
    alpha_1(u) = (1 + <v,v>/2) * alpha_0(u) - <v, u>,

and the new pairing is <u,u'> + alpha_0(u) alpha_1(u') + alpha_1(u) alpha_0(u').
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .exact import (
    LatticeDesc,
    Matrix,
    NEGATIVE_DEFINITE,
    Vector,
    det,
    freeze,
    gram_of,
    hermite_normal_form,
    left_kernel,
    lll_reduce,
    vec_mat,
)
from .enumerate import short_vectors
from .niemeier import NiemeierLattice, canonical_representative


class ConstructionError(ValueError):
    """An exact identity guaranteed by the construction failed."""


@dataclass(frozen=True)
class ConstructedLattice:
    """A rootless lattice built from (N, gamma), with provenance.

    `basis` rows are integer vectors in the N-basis spanning the sublattice;
    `gram` is the modified form on that basis.
    """

    label: str
    gamma: tuple
    v_rep: Vector
    n_gamma: int
    a_gamma: int
    h: int
    basis: Matrix
    gram: Matrix
    index: int

    def lattice(self) -> LatticeDesc:
        return LatticeDesc(gram=self.gram, basis=self.basis, sig=NEGATIVE_DEFINITE)


def _congruence_kernel(form: Sequence[int], modulus: int) -> Matrix:
    """HNF basis of {u in Z^24 : form . u = 0 mod modulus}.

    Solutions correspond to integer vectors (u, k) with form.u + modulus*k
    = 0; the saturated left kernel of that column projects bijectively onto
    the solution lattice.
    """
    col = freeze([x] for x in list(form) + [modulus])
    rows = left_kernel(col)
    if len(rows) != 24:
        raise ConstructionError("congruence kernel does not have rank 24")
    h_mat, _ = hermite_normal_form(freeze(row[:24] for row in rows))
    return freeze(h_mat[:24])


def construct_leech(n: NiemeierLattice, gamma) -> ConstructedLattice:
    """The modified-form sublattice for one codeword, fully verified."""
    v = canonical_representative(n, gamma)
    lat = n.lattice()
    ng = int(lat.norm(v))
    if ng % 2:
        raise ConstructionError("representative norm is odd in an even lattice")
    h = n.h
    a = 2 * h + 1 + h * ng // 2
    if a == 0:
        raise ConstructionError("degenerate index form (a = 0)")

    ell = vec_mat(
        tuple(h * x - r for x, r in zip(v, n.rho)), n.gram
    )
    ell = tuple(int(x) for x in ell)
    basis = _congruence_kernel(ell, abs(a))
    index = abs(det(basis))

    alpha0 = [Fraction(sum(l * x for l, x in zip(ell, row)), a) for row in basis]
    if any(x.denominator != 1 for x in alpha0):
        raise ConstructionError("alpha_0 is not integral on the sublattice basis")
    alpha0 = [int(x) for x in alpha0]
    pair_v = [int(lat.pairing(v, row)) for row in basis]
    alpha1 = [(1 + ng // 2) * a0 - pv for a0, pv in zip(alpha0, pair_v)]

    inner = gram_of(basis, n.gram)
    gram = freeze(
        tuple(
            int(inner[i][j]) + alpha0[i] * alpha1[j] + alpha1[i] * alpha0[j]
            for j in range(24)
        )
        for i in range(24)
    )
    if any(gram[i][i] % 2 for i in range(24)):
        raise ConstructionError("modified form is not even")
    if abs(det(gram)) != 1:
        raise ConstructionError("modified form is not unimodular")

    return ConstructedLattice(
        label=n.label,
        gamma=tuple(gamma),
        v_rep=v,
        n_gamma=ng,
        a_gamma=a,
        h=h,
        basis=basis,
        gram=gram,
        index=index,
    )


def corollary_zero(n: NiemeierLattice) -> ConstructedLattice:
    """The zero-codeword specialization built from its own closed form.

    Sublattice {u : <u, rho> = 0 mod 2h+1} with the quadratic form
    u -> <u,u> + (2/(2h+1)^2) <u,rho>^2, polarized; must agree with
    construct_leech at the zero codeword exactly.
    """
    h = n.h
    m = 2 * h + 1
    lat = n.lattice()
    ell = tuple(int(x) for x in vec_mat(n.rho, n.gram))
    basis = _congruence_kernel(ell, m)
    pr = [int(lat.pairing(n.rho, row)) for row in basis]
    inner = gram_of(basis, n.gram)
    gram = []
    for i in range(24):
        row = []
        for j in range(24):
            x = inner[i][j] + Fraction(2 * pr[i] * pr[j], m * m)
            if Fraction(x).denominator != 1:
                raise ConstructionError("polarized form is not integral")
            row.append(int(x))
        gram.append(tuple(row))
    gram = freeze(gram)

    zero = tuple(
        (Fraction(0),) * c.rank for c in n.components
    )
    direct = construct_leech(n, zero)
    if direct.basis != basis or direct.gram != gram:
        raise ConstructionError(
            "closed-form zero-codeword lattice differs from the construction"
        )
    return direct


@dataclass(frozen=True)
class LeechVerdict:
    rank: int
    is_even: bool
    is_unimodular: bool
    is_rootless: bool
    norm4_count: Optional[int] = None

    @property
    def is_leech(self) -> bool:
        return self.rank == 24 and self.is_even and self.is_unimodular and self.is_rootless


def certify_leech(lat: LatticeDesc, deep: bool = False) -> LeechVerdict:
    """Evenness, unimodularity and rootlessness, checked exactly.

    With `deep`, also counts vectors of norm -4 by full enumeration.
    """
    even = lat.is_even
    uni = abs(lat.determinant) == 1
    reduced, _ = lll_reduce(lat)
    rootless = not short_vectors(reduced, bound=2)
    n4 = None
    if deep:
        vecs = short_vectors(reduced, bound=4)
        n4 = sum(1 for x in vecs if abs(reduced.norm(x)) == 4)
    return LeechVerdict(
        rank=lat.rank,
        is_even=even,
        is_unimodular=uni,
        is_rootless=rootless,
        norm4_count=n4,
    )


def positive_form(lat: LatticeDesc) -> LatticeDesc:
    """The same lattice with the sign convention flipped to positive definite."""
    g = freeze(tuple(-x for x in row) for row in lat.gram)
    return LatticeDesc(gram=g, basis=lat.basis, sig="positive-definite")
