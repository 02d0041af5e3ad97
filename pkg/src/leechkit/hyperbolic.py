"""The rank-26 hyperbolic side of the construction.

L = U + N with coordinates (a, b, v): the first two coordinates span a
hyperbolic plane with Gram [[0, 1], [1, 0]], the rest is the glued lattice
in its own basis.  This module provides the Weyl vector w = (h+1, h, rho),
section vectors, an independent enumeration of section classes, the
orthogonal-complement oracle, and deep-hole verification.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
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
    inverse,
    left_kernel,
    lll_reduce,
    mat_mul,
    solve,
    transpose,
    vec_mat,
    vec_scale,
    vec_sub,
)
from .enumerate import short_vectors, vectors_within
from .niemeier import NiemeierLattice, canonical_label, canonical_representative
from .rootsys import NotADEError, _order_component


class HyperbolicCheckError(ValueError):
    """A wall or pairing identity failed; signals upstream corruption."""


def build_LN(n: NiemeierLattice) -> LatticeDesc:
    """U + N as a rank-26 lattice in (a, b, v) coordinates."""
    g = [[0] * 26 for _ in range(26)]
    g[0][1] = g[1][0] = 1
    for i in range(24):
        for j in range(24):
            g[2 + i][2 + j] = n.gram[i][j]
    return LatticeDesc(gram=freeze(g), sig="indefinite(1,25)")


def f_vector(n: NiemeierLattice) -> Vector:
    return (1,) + (0,) * 25


def z_vector(n: NiemeierLattice) -> Vector:
    return (-1, 1) + (0,) * 24


def pair_LN(n: NiemeierLattice, x: Sequence, y: Sequence):
    """<(a,b,v), (a',b',v')> = ab' + a'b + <v, v'>."""
    s = x[0] * y[1] + x[1] * y[0]
    w = vec_mat(x[2:], n.gram)
    return s + sum(p * q for p, q in zip(w, y[2:]))


def weyl_vector_LN(n: NiemeierLattice) -> Vector:
    """w = (h+1, h, rho); every wall identity is asserted before returning.

    Walls: the norm -2 vectors z, the simple roots (0, 0, e_j), and the
    affine roots (1, 0, -mu_i); w pairs to 1 with all of them and is
    isotropic.
    """
    h = n.h
    w = (h + 1, h) + n.rho
    if pair_LN(n, w, w) != 0:
        raise HyperbolicCheckError("Weyl vector is not isotropic")
    if pair_LN(n, w, z_vector(n)) != 1:
        raise HyperbolicCheckError("Weyl vector does not pair to 1 with z")
    if pair_LN(n, w, f_vector(n)) != h:
        raise HyperbolicCheckError("Weyl vector does not pair to h with f")
    for r in simple_wall_vectors(n):
        if pair_LN(n, w, r) != 1:
            raise HyperbolicCheckError("a simple-root wall pairing is not 1")
    for t in affine_wall_vectors(n):
        if pair_LN(n, w, t) != 1:
            raise HyperbolicCheckError("an affine wall pairing is not 1")
    return w


def simple_wall_vectors(n: NiemeierLattice) -> list:
    """The simple roots of every component as (0, 0, e_j) in L-coordinates."""
    out = []
    for j in range(24):
        e = tuple(1 if k == j else 0 for k in range(24))
        v = n.theta_to_basis(e)
        if any(Fraction(x).denominator != 1 for x in v):
            raise HyperbolicCheckError("simple root not integral in the lattice basis")
        out.append((0, 0) + tuple(int(x) for x in v))
    return out


def affine_wall_vectors(n: NiemeierLattice) -> list:
    """One vector (1, 0, -mu_i) per component, mu_i its highest root."""
    out = []
    for comp, off in zip(n.components, n.offsets):
        mu_theta = [0] * 24
        for k, x in enumerate(comp.mu):
            mu_theta[off + k] = x
        v = n.theta_to_basis(tuple(mu_theta))
        if any(Fraction(x).denominator != 1 for x in v):
            raise HyperbolicCheckError("highest root not integral in the lattice basis")
        out.append((1, 0) + tuple(-int(x) for x in v))
    return out


def section_vector(n: NiemeierLattice, gamma) -> Vector:
    """s = (-1 - n_g/2, 1, v) for the canonical representative v of gamma."""
    v = canonical_representative(n, gamma)
    ng = n.lattice().norm(v)
    if ng % 2:
        raise HyperbolicCheckError("representative has odd norm in an even lattice")
    s = (-1 - ng // 2, 1) + v
    if pair_LN(n, s, s) != -2:
        raise HyperbolicCheckError("section vector norm is not -2")
    if pair_LN(n, s, f_vector(n)) != 1:
        raise HyperbolicCheckError("section vector does not pair to 1 with f")
    if pair_LN(n, s, weyl_vector_LN(n)) != 1:
        raise HyperbolicCheckError("section vector does not pair to 1 with w")
    return s


def enumerate_section_classes(n: NiemeierLattice) -> list:
    """All r in L with <f, r> = <w, r> = 1 and <r, r> = -2.

    Such r = (a, 1, v) reduce to integer solutions of
    <v - rho/h, v - rho/h> = -2(h+1)/h, an inhomogeneous definite problem.
    The count must equal the glue-code order; this is the independent oracle
    for the canonical representatives.
    """
    h = n.h
    lat = n.lattice()
    reduced, t = lll_reduce(lat)
    t_inv = inverse(t)
    center = vec_mat(tuple(Fraction(x, h) for x in n.rho), t_inv)
    target = Fraction(2 * (h + 1), h)
    sols = short_vectors(reduced, center=center, target=target)
    out = []
    for y in sols:
        v = tuple(int(x) for x in vec_mat(y, t))
        ng = lat.norm(v)
        out.append((-1 - ng // 2, 1) + v)
    out.sort()
    if len(out) != n.code_order:
        raise HyperbolicCheckError(
            f"{n.label}: found {len(out)} section classes, expected {n.code_order}"
        )
    return out


def orthocomplement_gram(n: NiemeierLattice, s: Sequence) -> tuple[LatticeDesc, Matrix]:
    """Basis and Gram of {x in L : <x, w> = <x, s> = 0}, plus the projection.

    Returns (lattice, projection) where the lattice's `basis` rows are
    L-coordinates of the complement and `projection` is the same basis with
    the two U-coordinates dropped, i.e. its image in N.
    """
    w = weyl_vector_LN(n)
    if pair_LN(n, w, s) != 1:
        raise HyperbolicCheckError("section vector does not pair to 1 with w")
    gl = build_LN(n).gram
    cols = [
        [sum(gl[i][j] * w[j] for j in range(26)) for i in range(26)],
        [sum(gl[i][j] * s[j] for j in range(26)) for i in range(26)],
    ]
    m = freeze(zip(*cols))
    basis = left_kernel(m)
    if len(basis) != 24:
        raise HyperbolicCheckError("orthogonal complement does not have rank 24")
    gram = gram_of(basis, gl)
    gram = freeze(tuple(int(x) for x in row) for row in gram)
    if any(gram[i][i] % 2 for i in range(24)):
        raise HyperbolicCheckError("complement Gram is not even")
    if abs(det(gram)) != 1:
        raise HyperbolicCheckError("complement Gram is not unimodular")
    projection = freeze(row[2:] for row in basis)
    lat = LatticeDesc(gram=gram, basis=basis, sig=NEGATIVE_DEFINITE)
    return lat, projection


def oracle_agreement(n: NiemeierLattice, gamma) -> bool:
    """Cross-check the closed-form construction against the complement.

    The projection of the (w, s)-orthogonal complement into N must equal the
    modified-form sublattice as a module, and the complement Gram must equal
    the modified form transported through that projection.  Raises on any
    mismatch; returns True otherwise.
    """
    from .leech import construct_leech

    built = construct_leech(n, gamma)
    s = section_vector(n, gamma)
    comp, proj = orthocomplement_gram(n, s)
    h_proj, _ = hermite_normal_form(proj)
    if freeze(h_proj) != built.basis:
        raise HyperbolicCheckError(
            f"{n.label}: complement projection differs from the construction"
        )
    change = mat_mul(proj, inverse(built.basis))
    if any(Fraction(x).denominator != 1 for row in change for x in row):
        raise HyperbolicCheckError(
            f"{n.label}: projection is not an integral change of basis"
        )
    transported = mat_mul(mat_mul(change, built.gram), transpose(change))
    if freeze(transported) != comp.gram:
        raise HyperbolicCheckError(
            f"{n.label}: complement Gram differs from the transported modified form"
        )
    return True


# --- deep holes -------------------------------------------------------------


@dataclass(frozen=True)
class DeepHoleInput:
    """A rootless even unimodular rank-24 Gram and a rational center."""

    gram: Matrix
    center: Vector
    declared_type: Optional[str] = None
    declared_h: Optional[int] = None


@dataclass(frozen=True)
class DeepHoleReport:
    is_deep_hole: bool
    min_distance_sq: Optional[Fraction]
    h: Optional[int]
    type_label: Optional[str]
    hc_primitive: bool
    half_h_norm_integral: bool
    xi0_count: int
    xi1_count: int
    component_sizes: tuple
    msum_ok: bool
    theta_unique_ok: bool

    @property
    def passed(self) -> bool:
        return (
            self.is_deep_hole
            and self.hc_primitive
            and self.half_h_norm_integral
            and self.msum_ok
            and self.theta_unique_ok
        )


def _r_vector(gram: Matrix, lam: Sequence) -> tuple:
    """r = (-1 - lam^2/2, 1, lam) in U + Lambda coordinates."""
    nrm = sum(a * b for a, b in zip(vec_mat(lam, gram), lam))
    return (-1 - nrm // 2, 1) + tuple(lam)


def _pair_U_lattice(gram: Matrix, x: Sequence, y: Sequence):
    s = x[0] * y[1] + x[1] * y[0]
    w = vec_mat(x[2:], gram)
    return s + sum(p * q for p, q in zip(w, y[2:]))


def _component_split(nodes: list, pairings: dict) -> list:
    comps = []
    todo = set(range(len(nodes)))
    while todo:
        seed = min(todo)
        comp = {seed}
        frontier = [seed]
        while frontier:
            i = frontier.pop()
            for j in list(todo - comp):
                if pairings[i, j] != 0:
                    comp.add(j)
                    frontier.append(j)
        comps.append(sorted(comp))
        todo -= comp
    return comps


def _extended_type(sub_gram: Matrix) -> tuple:
    """(ADE type, m-vector) of one extended-diagram component.

    The Gram must be negative semidefinite of corank 1 with a positive
    primitive kernel vector m; deleting a node with m = 1 leaves the
    ordinary diagram, which is identified exactly.
    """
    k = len(sub_gram)
    kern = left_kernel(freeze(sub_gram))
    if len(kern) != 1:
        raise NotADEError("extended configuration kernel is not rank 1")
    m = list(kern[0])
    if all(x < 0 for x in m):
        m = [-x for x in m]
    if not all(x > 0 for x in m):
        raise NotADEError("extended configuration kernel is not positive")
    g = 0
    for x in m:
        g = gcd(g, x)
    m = [x // g for x in m]
    drop = m.index(1)
    keep = [i for i in range(k) if i != drop]
    inner = freeze(tuple(sub_gram[i][j] for j in keep) for i in keep)
    units = [tuple(1 if a == b else 0 for b in range(k - 1)) for a in range(k - 1)]
    t, _ = _order_component(units, inner)
    return t, tuple(m)


def deep_hole_checks(d: DeepHoleInput, theta_sample: Optional[int] = None) -> DeepHoleReport:
    """Verify that a center is a deep hole and report its local structure.

    Checks: minimal distance-squared to the lattice is exactly 2; h times
    the center is a primitive lattice vector with h * <c,c> / 2 integral;
    the nearest vectors form extended ADE diagrams with a common Coxeter
    number h; the weighted node sum recovers h * (-<c,c>/2, 1, c) for every
    component; each second-shell vector pairs to 1 with exactly one node
    per component, always a node of weight 1.
    """
    lat = LatticeDesc(gram=d.gram, sig=NEGATIVE_DEFINITE)
    if not lat.is_even or abs(lat.determinant) != 1:
        raise ValueError("input Gram is not even unimodular")
    reduced, t = lll_reduce(lat)
    if short_vectors(reduced, bound=2):
        raise ValueError("input Gram has roots; not a rootless lattice")
    t_inv = inverse(t)
    c = tuple(Fraction(x) for x in d.center)
    c_red = vec_mat(c, t_inv)

    near = vectors_within(reduced, c_red, 2)
    min_d = min((val for _, val in near), default=None)
    if min_d != 2:
        return DeepHoleReport(
            is_deep_hole=False,
            min_distance_sq=min_d,
            h=None,
            type_label=None,
            hc_primitive=False,
            half_h_norm_integral=False,
            xi0_count=0,
            xi1_count=0,
            component_sizes=(),
            msum_ok=False,
            theta_unique_ok=False,
        )
    p0 = [tuple(int(x) for x in vec_mat(y, t)) for y, val in near if val == 2]

    xi0 = [_r_vector(d.gram, lam) for lam in p0]
    pairings = {}
    for i, r in enumerate(xi0):
        for j, s in enumerate(xi0):
            if i < j:
                pairings[i, j] = pairings[j, i] = _pair_U_lattice(d.gram, r, s)
    comps = _component_split(xi0, pairings)
    types = []
    h = None
    m_of = {}
    for comp in comps:
        sub = freeze(
            tuple(-2 if i == j else pairings[i, j] for j in comp) for i in comp
        )
        t_ade, m = _extended_type(sub)
        types.append(t_ade)
        if h is None:
            h = sum(m)
        elif sum(m) != h:
            raise NotADEError("components have different Coxeter numbers")
        for idx, node in enumerate(comp):
            m_of[node] = m[idx]
    if d.declared_h is not None and d.declared_h != h:
        raise ValueError(f"declared h = {d.declared_h} but computed h = {h}")

    hc = vec_scale(h, c)
    hc_integral = all(x.denominator == 1 for x in hc)
    hc_int = tuple(int(x) for x in hc) if hc_integral else None
    g = 0
    if hc_integral:
        for x in hc_int:
            g = gcd(g, x)
    hc_primitive = hc_integral and g == 1
    c_norm = sum(a * b for a, b in zip(vec_mat(c, d.gram), c))
    half = Fraction(h) * c_norm / 2
    half_integral = half.denominator == 1

    # second shell: distance^2 = 2(1 + 1/h)
    d1 = Fraction(2 * (h + 1), h)
    shell = vectors_within(reduced, c_red, d1)
    p1 = [tuple(int(x) for x in vec_mat(y, t)) for y, val in shell if val == d1]
    xi1 = sorted(_r_vector(d.gram, lam) for lam in p1)

    # f(c) = h * (-<c,c>/2, 1, c); weighted node sum per component
    fc = (Fraction(-h) * c_norm / 2, Fraction(h)) + tuple(hc)
    msum_ok = True
    for comp in comps:
        acc = [Fraction(0)] * 26
        for node in comp:
            for k, x in enumerate(xi0[node]):
                acc[k] += m_of[node] * x
        if tuple(acc) != fc:
            msum_ok = False

    theta_ok = True
    sample = xi1 if theta_sample is None else xi1[:theta_sample]
    for s in sample:
        for comp in comps:
            hits = [node for node in comp
                    if _pair_U_lattice(d.gram, s, xi0[node]) == 1]
            if len(hits) != 1 or m_of[hits[0]] != 1:
                theta_ok = False

    return DeepHoleReport(
        is_deep_hole=True,
        min_distance_sq=Fraction(2),
        h=h,
        type_label=canonical_label(types),
        hc_primitive=hc_primitive,
        half_h_norm_integral=half_integral,
        xi0_count=len(xi0),
        xi1_count=len(xi1),
        component_sizes=tuple(sorted(len(comp) for comp in comps)),
        msum_ok=msum_ok,
        theta_unique_ok=theta_ok,
    )


def derive_deep_hole_input(n: NiemeierLattice) -> DeepHoleInput:
    """A deep hole of type matching N, transported into a rootless Gram.

    Inside L = U + N, the vectors u0 = w and u1 = z + w form a hyperbolic
    pair; their orthogonal complement K is even unimodular rank 24 and
    rootless.  The isotropic vector f / h decomposes over u0, u1, K, and
    its K-component is a deep hole of K whose nearest-vector configuration
    has the type of N's root system.
    """
    h = n.h
    w = weyl_vector_LN(n)
    z = z_vector(n)
    u1 = tuple(a + b for a, b in zip(z, w))
    gl = build_LN(n).gram
    cols = [
        [sum(gl[i][j] * w[j] for j in range(26)) for i in range(26)],
        [sum(gl[i][j] * u1[j] for j in range(26)) for i in range(26)],
    ]
    basis = left_kernel(freeze(zip(*cols)))
    if len(basis) != 24:
        raise HyperbolicCheckError("complement of the hyperbolic pair has wrong rank")
    gram = freeze(tuple(int(x) for x in row) for row in gram_of(basis, gl))

    fbar = tuple(Fraction(x, h) for x in f_vector(n))
    a = _pair_U_lattice_full(gl, fbar, u1)
    b = _pair_U_lattice_full(gl, fbar, w)
    rem = vec_sub(vec_sub(fbar, vec_scale(a, w)), vec_scale(b, u1))
    # coordinates of the remainder in the K basis
    rhs = vec_mat(vec_mat(rem, gl), tuple(zip(*basis)))
    center = solve(gram, rhs)
    back = vec_mat(center, basis)
    if back != tuple(map(Fraction, rem)):
        raise HyperbolicCheckError("deep-hole center does not lie in the complement")
    return DeepHoleInput(
        gram=gram,
        center=tuple(center),
        declared_type=n.label,
        declared_h=h,
    )


def _pair_U_lattice_full(gl: Matrix, x: Sequence, y: Sequence):
    w = vec_mat(x, gl)
    return sum(p * q for p, q in zip(w, y))
