"""Assembly of the 23 rank-24 even unimodular lattices with roots.

Each lattice is built as an overlattice of an orthogonal sum of ADE root
lattices, glued by rational vectors shipped as bundled data.  Nothing is
trusted from the data file: every load re-verifies evenness, unimodularity,
the root count and the Weyl-vector identities before a lattice is returned.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction
from importlib import resources
from math import lcm
from typing import Optional, Sequence

from .exact import (
    LatticeDesc,
    Matrix,
    Vector,
    det,
    freeze,
    gram_of,
    hermite_normal_form,
    inverse,
    lll_reduce,
    vec_add,
    vec_mat,
)
from .enumerate import root_vectors
from .rootsys import (
    ADEType,
    RootComponent,
    ade,
    build_component,
    canonical_rep_of_class,
    class_key,
)

GLUE_DATA_VERSION = 1


class GlueDataError(ValueError):
    """Glue data failed validation; the message names the failing invariant."""


@dataclass(frozen=True)
class GlueData:
    """Bundled description of one glued lattice: component types in fixed
    order and glue generators in concatenated simple-root coordinates."""

    label: str
    components: tuple
    glue: tuple


# `Codeword` = tuple over components of class keys; a class key is the tuple
# of coordinates mod 1 in that component's simple-root basis.
Codeword = tuple


@dataclass(frozen=True)
class NiemeierLattice:
    """An assembled rank-24 even unimodular lattice with roots.

    `basis` rows express the lattice basis in concatenated simple-root
    coordinates; `gram` is the (negative-definite) Gram in that basis.
    """

    label: str
    types: tuple
    components: tuple
    offsets: tuple
    root_gram: Matrix
    basis: Matrix
    basis_inv: Matrix
    gram: Matrix
    code: tuple
    h: int
    rho_theta: Vector
    rho: Vector

    @property
    def rank(self) -> int:
        return 24

    @property
    def code_order(self) -> int:
        return len(self.code)

    def lattice(self) -> LatticeDesc:
        return LatticeDesc(gram=self.gram, basis=self.basis, sig="negative-definite")

    def theta_to_basis(self, v_theta: Sequence) -> Vector:
        return vec_mat(tuple(v_theta), self.basis_inv)

    def component_slices(self, v: Sequence) -> list:
        return [tuple(v[a:b]) for a, b in zip(self.offsets, self.offsets[1:])]


def canonical_label(types: Sequence[ADEType]) -> str:
    parts = []
    for t in sorted(types, key=ADEType.sort_key):
        if parts and parts[-1][0] == t:
            parts[-1][1] += 1
        else:
            parts.append([t, 1])
    return "".join(t.label if k == 1 else f"{t.label}^{k}" for t, k in parts)


def _block_diagonal(grams: Sequence[Matrix]) -> Matrix:
    n = sum(len(g) for g in grams)
    out = [[0] * n for _ in range(n)]
    off = 0
    for g in grams:
        for i, row in enumerate(g):
            for j, x in enumerate(row):
                out[off + i][off + j] = x
        off += len(g)
    return freeze(out)


def load_glue_data(path: Optional[str] = None) -> list:
    """Read and validate the bundled (or an external) glue-data file."""
    if path is None:
        text = resources.files("leechkit").joinpath("data/niemeier_glue.json").read_text()
    else:
        with open(path) as fh:
            text = fh.read()
    doc = json.loads(text)
    if doc.get("version") != GLUE_DATA_VERSION:
        raise GlueDataError(f"unsupported glue data version {doc.get('version')!r}")
    seen = set()
    out = []
    for rec in doc["lattices"]:
        types = tuple(ade(s) for s in rec["components"])
        if sum(t.rank for t in types) != 24:
            raise GlueDataError(f"{rec['label']}: component ranks do not sum to 24")
        if tuple(sorted(types, key=ADEType.sort_key)) != types:
            raise GlueDataError(f"{rec['label']}: components are not in canonical order")
        label = canonical_label(types)
        if label != rec["label"]:
            raise GlueDataError(f"label {rec['label']!r} does not match components ({label})")
        if label in seen:
            raise GlueDataError(f"duplicate label {label}")
        seen.add(label)
        glue = tuple(
            tuple(Fraction(x) for x in vec) for vec in rec["glue"]
        )
        for vec in glue:
            if len(vec) != 24:
                raise GlueDataError(f"{label}: glue vector of wrong dimension")
        out.append(GlueData(label=label, components=types, glue=glue))
    if len(out) != 23:
        raise GlueDataError(f"expected 23 lattices, found {len(out)}")
    return out


def _closure(generators: Sequence[Codeword], comps: Sequence[RootComponent]) -> list:
    zero = tuple((Fraction(0),) * c.rank for c in comps)
    seen = {zero}
    frontier = [zero]
    while frontier:
        nxt = []
        for w in frontier:
            for g in generators:
                s = tuple(class_key(vec_add(a, b)) for a, b in zip(w, g))
                if s not in seen:
                    seen.add(s)
                    nxt.append(s)
        frontier = nxt
    return sorted(seen)


def assemble_niemeier(g: GlueData) -> NiemeierLattice:
    """Build one glued lattice and verify every structural invariant."""
    comps = tuple(build_component(t) for t in g.components)
    offsets = [0]
    for c in comps:
        offsets.append(offsets[-1] + c.rank)
    root_gram = _block_diagonal([c.gram for c in comps])

    for vec in g.glue:
        pair = vec_mat(vec, root_gram)
        if any(x.denominator != 1 for x in map(Fraction, pair)):
            raise GlueDataError(f"{g.label}: glue vector outside the dual lattice")

    # integral basis of the overlattice: HNF over a common denominator
    den = lcm(1, *(x.denominator for vec in g.glue for x in vec))
    rows = [[den if i == j else 0 for j in range(24)] for i in range(24)]
    rows += [[int(x * den) for x in vec] for vec in g.glue]
    h_mat, _ = hermite_normal_form(rows)
    if any(any(x != 0 for x in row) for row in h_mat[24:]):
        raise GlueDataError(f"{g.label}: glue generators exceed rank 24")
    basis = freeze(tuple(Fraction(x, den) for x in row) for row in h_mat[:24])
    gram = gram_of(basis, root_gram)
    if any(Fraction(x).denominator != 1 for row in gram for x in row):
        raise GlueDataError(f"{g.label}: overlattice is not integral")
    gram = freeze(tuple(int(x) for x in row) for row in gram)
    if any(gram[i][i] % 2 for i in range(24)):
        raise GlueDataError(f"{g.label}: overlattice is not even")
    d = det(gram)
    if abs(d) != 1:
        raise GlueDataError(f"{g.label}: overlattice determinant is {d}, not +-1")
    basis_inv = inverse(basis)

    hs = {c.h for c in comps}
    if len(hs) != 1:
        raise GlueDataError(f"{g.label}: component Coxeter numbers differ: {hs}")
    h = hs.pop()

    # glue code as a subgroup of the product of component discriminant groups
    gens = [tuple(class_key(vec[a:b]) for a, b in zip(offsets, offsets[1:]))
            for vec in g.glue]
    code = _closure(gens, comps)
    if len(code) ** 2 != abs(det(root_gram)):
        raise GlueDataError(
            f"{g.label}: code order {len(code)} does not square to the root "
            f"lattice determinant {abs(det(root_gram))}"
        )

    # recompute the root system of the overlattice and match it to <R>
    lat = LatticeDesc(gram=gram, sig="negative-definite")
    reduced, t_red = lll_reduce(lat)
    roots_red = root_vectors(reduced)
    if len(roots_red) != 24 * h:
        raise GlueDataError(
            f"{g.label}: root count {len(roots_red)} != 24h = {24 * h}"
        )
    for y in roots_red:
        theta = vec_mat(vec_mat(y, t_red), basis)
        if any(Fraction(x).denominator != 1 for x in theta):
            raise GlueDataError(f"{g.label}: a root of the overlattice is not in <R>")

    # Weyl vector: componentwise solution, integral in the overlattice basis
    rho_theta = tuple(x for c in comps for x in c.rho)
    rho = vec_mat(rho_theta, basis_inv)
    if any(Fraction(x).denominator != 1 for x in rho):
        raise GlueDataError(f"{g.label}: Weyl vector is not integral")
    rho = tuple(int(x) for x in rho)
    rho_norm = vec_mat(rho, gram)
    rho_norm = sum(a * b for a, b in zip(rho_norm, rho))
    if rho_norm != -2 * h * (h + 1):
        raise GlueDataError(
            f"{g.label}: Weyl vector norm {rho_norm} != {-2 * h * (h + 1)}"
        )

    return NiemeierLattice(
        label=g.label,
        types=g.components,
        components=comps,
        offsets=tuple(offsets),
        root_gram=root_gram,
        basis=basis,
        basis_inv=basis_inv,
        gram=gram,
        code=tuple(code),
        h=h,
        rho_theta=rho_theta,
        rho=rho,
    )


def enumerate_codewords(n: NiemeierLattice) -> list:
    """Full transversal of the glue code, each word decomposed into component
    classes, in deterministic sorted order."""
    return list(n.code)


def canonical_representative(n: NiemeierLattice, gamma: Codeword) -> Vector:
    """The canonical representative v of a codeword, in the lattice basis.

    Built one dual-basis vector per nonzero component class; its membership
    in the overlattice is asserted, not assumed."""
    if gamma not in set(n.code):
        raise ValueError("codeword is not in the glue code")
    v_theta = tuple(
        x
        for comp, cls in zip(n.components, gamma)
        for x in canonical_rep_of_class(comp, cls)
    )
    v = n.theta_to_basis(v_theta)
    if any(Fraction(x).denominator != 1 for x in v):
        raise GlueDataError(f"{n.label}: canonical representative is not integral")
    # the class of v modulo <R> is the codeword itself
    back = tuple(class_key(s) for s in n.component_slices(v_theta))
    if back != gamma:
        raise GlueDataError(f"{n.label}: canonical representative is in the wrong class")
    return tuple(int(x) for x in v)


def theta_norm(n: NiemeierLattice, v_theta: Sequence) -> Fraction:
    w = vec_mat(tuple(v_theta), n.root_gram)
    return sum(a * b for a, b in zip(w, v_theta))


def weyl_data(n: NiemeierLattice) -> tuple:
    """(Coxeter number, Weyl vector in the lattice basis)."""
    return n.h, n.rho


def load_all(path: Optional[str] = None) -> dict:
    """Assemble every bundled lattice, keyed by label."""
    return {g.label: assemble_niemeier(g) for g in load_glue_data(path)}
