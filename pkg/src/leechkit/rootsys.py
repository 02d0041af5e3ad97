"""ADE root lattices: Cartan Gram matrices, simple-system extraction,
Dynkin-type recognition, highest roots, Coxeter numbers, Weyl vectors and
canonical discriminant-class representatives.

Sign convention: root lattices are negative definite, roots have norm -2 and
adjacent simple roots pair to +1.

Node numbering (0-based), fixed once and used everywhere:
  A_n : path 0 - 1 - ... - n-1
  D_n : path 0 - ... - n-3, leaves n-2 and n-1 both attached to n-3
  E_n : path 0 - ... - n-2, node n-1 attached to path node 2 (E6), 3 (E7),
        4 (E8)
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from fractions import Fraction
from math import gcd, isqrt
from typing import Sequence

from .exact import (
    DiscriminantGroup,
    LatticeDesc,
    Matrix,
    Vector,
    discriminant_group,
    dot,
    freeze,
    gram_apply,
    gram_of,
    identity_matrix,
    inverse,
    left_kernel,
    mat_mul,
    mat_vec,
    vec_add,
)
from .enumerate import root_vectors


class NotADEError(ValueError):
    """The given configuration is not an ordinary ADE Dynkin diagram."""


_E_BRANCH = {6: 2, 7: 3, 8: 4}


@dataclass(frozen=True, order=True)
class ADEType:
    """One connected simply-laced family member."""

    family: str
    rank: int

    def __post_init__(self):
        ok = (
            (self.family == "A" and self.rank >= 1)
            or (self.family == "D" and self.rank >= 4)
            or (self.family == "E" and self.rank in (6, 7, 8))
        )
        if not ok:
            raise NotADEError(f"invalid ADE type {self.family}{self.rank}")

    @property
    def label(self) -> str:
        return f"{self.family}{self.rank}"

    def sort_key(self):
        # component order inside a rank-24 label: rank descending, then family
        return (-self.rank, self.family)


def ade(label: str) -> ADEType:
    return ADEType(label[0], int(label[1:]))


def _edges(t: ADEType) -> list:
    n = t.rank
    if t.family == "A":
        return [(i, i + 1) for i in range(n - 1)]
    if t.family == "D":
        return [(i, i + 1) for i in range(n - 3)] + [(n - 3, n - 2), (n - 3, n - 1)]
    return [(i, i + 1) for i in range(n - 2)] + [(_E_BRANCH[n], n - 1)]


def cartan_gram(t: ADEType) -> LatticeDesc:
    """Negative-definite Gram of the simple roots in the fixed numbering."""
    n = t.rank
    g = [[0] * n for _ in range(n)]
    for i in range(n):
        g[i][i] = -2
    for i, j in _edges(t):
        g[i][j] = g[j][i] = 1
    return LatticeDesc(gram=freeze(g), sig="negative-definite")


# ---------------------------------------------------------------------------
# Simple-system extraction and recognition

def _is_lex_positive(v: Sequence) -> bool:
    for x in v:
        if x != 0:
            return x > 0
    return False


def extract_simple_system(roots: Sequence[Vector], gram: Matrix) -> list:
    """Split the full root set of a negative-definite root lattice into
    connected simple-root components, each in canonical node order.

    Positive roots are selected lexicographically (the functional
    (1, eps, eps^2, ...) with infinitesimal eps); simple roots are the
    indecomposable positive ones.
    """
    if not roots:
        raise ValueError("empty root set")
    positive = [tuple(r) for r in roots if _is_lex_positive(r)]
    pos_set = set(positive)
    simple = []
    for r in positive:
        # r is simple iff it is not a sum of two positive roots
        if not any(tuple(a - b for a, b in zip(r, p)) in pos_set for p in positive
                   if p != r):
            simple.append(r)
    # split into connected components of the dual graph
    comp_of = {}
    comps = []
    for r in simple:
        if r in comp_of:
            continue
        stack = [r]
        comp = []
        comp_of[r] = len(comps)
        while stack:
            cur = stack.pop()
            comp.append(cur)
            for s in simple:
                if s not in comp_of and gram_apply(gram, cur, s) != 0:
                    comp_of[s] = len(comps)
                    stack.append(s)
        comps.append(comp)
    ordered = [_order_component(c, gram)[1] for c in comps]
    ordered.sort(key=lambda c: (_order_component(c, gram)[0].sort_key(), c))
    return ordered


def _order_component(nodes: list, gram: Matrix):
    """Canonical node ordering of one connected simple-root component.

    Returns (ADEType, ordered nodes) with the pairing matrix of the ordered
    nodes equal to cartan_gram(type).
    """
    n = len(nodes)
    pair = {
        (i, j): gram_apply(gram, nodes[i], nodes[j])
        for i in range(n)
        for j in range(n)
    }
    for i in range(n):
        if pair[(i, i)] != -2:
            raise NotADEError("node with norm != -2")
        for j in range(n):
            if i != j and pair[(i, j)] not in (0, 1):
                raise NotADEError("off-diagonal pairing outside {0,1}")
    adj = {i: [j for j in range(n) if j != i and pair[(i, j)] == 1] for i in range(n)}
    deg3 = [i for i in range(n) if len(adj[i]) == 3]
    if any(len(adj[i]) > 3 for i in range(n)) or len(deg3) > 1:
        raise NotADEError("dual graph is not an ADE diagram")

    def walk(start, first):
        # path from start through first until a leaf / the branch node
        path = [first]
        prev, cur = start, first
        while len(adj[cur]) == 2:
            nxt = next(j for j in adj[cur] if j != prev)
            prev, cur = cur, nxt
            path.append(cur)
        return path

    if not deg3:
        if n == 1:
            order = [0]
        else:
            ends = [i for i in range(n) if len(adj[i]) == 1]
            if len(ends) != 2:
                raise NotADEError("dual graph is not a path")
            start = min(ends, key=lambda i: nodes[i])
            order = [start] + walk(start, adj[start][0])
        if len(order) != n:
            raise NotADEError("dual graph is not connected or has a cycle")
        return ADEType("A", n), [nodes[i] for i in order]

    b = deg3[0]
    arms = sorted((walk(b, j) for j in adj[b]),
                  key=lambda arm: (len(arm), [nodes[i] for i in arm]))
    if sum(len(a) for a in arms) + 1 != n:
        raise NotADEError("dual graph has a cycle")
    l1, l2, l3 = (len(a) for a in arms)
    if l1 != 1:
        raise NotADEError("dual graph is not an ADE diagram")
    if l2 == 1:
        # D_n: long arm first (far end inward), then the two leaves
        t = ADEType("D", n)
        order = arms[2][::-1] + [b] + sorted(arms[0] + arms[1],
                                             key=lambda i: nodes[i])
    elif (l2, l3) in ((2, 2), (2, 3), (2, 4)):
        t = ADEType("E", n)
        order = arms[2][::-1] + [b] + arms[1] + arms[0]
    else:
        raise NotADEError("dual graph is not an ADE diagram")
    ordered = [nodes[i] for i in order]
    expect = cartan_gram(t).gram
    got = gram_of(ordered, gram)
    if got != expect:
        raise NotADEError("ordered component does not match the Cartan template")
    return t, ordered


def identify_ade_decomposition(components: Sequence[Sequence[Vector]],
                               gram: Matrix) -> list:
    """ADE type multiset of a decomposed simple system, canonically sorted."""
    types = [_order_component(list(c), gram)[0] for c in components]
    return sorted(types, key=ADEType.sort_key)


# ---------------------------------------------------------------------------
# Highest root, m-function, Coxeter number, Weyl vector

def highest_root_and_m(theta: Sequence[Vector], gram: Matrix):
    """Highest root of a connected component and the m-function on the
    extended configuration.

    Returns (mu, m) where mu has integer coordinates in the theta basis and
    m has length len(theta) + 1, the last entry belonging to the extending
    node theta_ext = -mu.  m is the positive primitive generator of the
    rank-1 kernel of the extended configuration's pairing matrix.
    """
    sub = gram_of(theta, gram)
    n = len(theta)
    roots = root_vectors(LatticeDesc(gram=sub, sig="negative-definite"))
    dominant = [r for r in roots if all(x >= 0 for x in r)]
    mu = max(dominant, key=lambda r: sum(r))
    # extended pairing matrix: append theta_ext with <theta_ext, r_j> = -(sub mu)_j
    mu_pair = mat_vec(sub, mu)
    ext = [list(row) + [-mu_pair[i]] for i, row in enumerate(sub)]
    ext.append([-x for x in mu_pair] + [-2])
    kern = left_kernel(ext)
    if len(kern) != 1:
        raise NotADEError("extended configuration kernel is not rank 1")
    m = list(kern[0])
    g = 0
    for x in m:
        g = gcd(g, x)
    m = [x // g for x in m]
    if m[-1] < 0:
        m = [-x for x in m]
    if any(x <= 0 for x in m) or m[-1] != 1:
        raise NotADEError("kernel generator is not the coefficient function")
    if tuple(m[:n]) != tuple(mu):
        raise NotADEError("kernel coefficients disagree with the highest root")
    return tuple(mu), tuple(m)


def weyl_vector_of(theta: Sequence[Vector], gram: Matrix) -> Vector:
    """The rational vector pairing to 1 with every given simple root,
    in theta-basis coordinates."""
    sub = gram_of(theta, gram)
    ones = (Fraction(1),) * len(theta)
    return mat_vec(inverse(sub), ones)


def _exact_sqrt(x: Fraction) -> Fraction:
    num, den = x.numerator, x.denominator
    a, b = isqrt(num), isqrt(den)
    if a * a != num or b * b != den:
        raise ValueError(f"{x} is not a perfect square")
    return Fraction(a, b)


def _class_key(vec: Sequence) -> tuple:
    """Class of a dual vector modulo the lattice: coordinates mod 1."""
    return tuple(Fraction(x) % 1 for x in vec)


@dataclass(frozen=True)
class RootComponent:
    """One connected ADE component, in its own Cartan coordinates."""

    ade: ADEType
    gram: Matrix
    mu: Vector           # highest root, integer theta-coordinates
    m: Vector            # coefficient function on the extended diagram
    h: int               # Coxeter number
    rho: Vector          # Weyl vector, rational theta-coordinates
    dual_basis: Matrix   # rows r_j_dual in theta-coordinates
    disc: DiscriminantGroup
    j_set: tuple         # node indices with m == 1
    class_table: dict    # class key -> j in j_set

    @property
    def rank(self) -> int:
        return self.ade.rank


def reflection_matrix(gram: Matrix, idx: int) -> Matrix:
    """Matrix of the reflection in simple root e_idx, acting on coordinates
    (rows are images of basis vectors): s_r(x) = x + <x, r> r for norm -2."""
    n = len(gram)
    rows = []
    for j in range(n):
        row = [0] * n
        row[j] = 1
        row[idx] += gram[j][idx]
        rows.append(row)
    return freeze(rows)


def coxeter_number(comp: "RootComponent", mode: str) -> int:
    """The Coxeter number by one of four independent characterizations."""
    n = comp.rank
    lat = LatticeDesc(gram=comp.gram, sig="negative-definite")
    if mode == "a":
        count = len(root_vectors(lat))
        if count % n:
            raise NotADEError("root count is not divisible by the rank")
        return count // n
    if mode == "b":
        norm = gram_apply(comp.gram, comp.rho, comp.rho)
        disc = 1 - Fraction(48, n) * norm
        h = (_exact_sqrt(disc) - 1) / 2
        if h.denominator != 1:
            raise NotADEError("Weyl-vector norm does not determine an integer")
        return int(h)
    if mode == "c":
        return int(gram_apply(comp.gram, comp.mu, comp.rho)) + 1
    if mode == "d":
        cox = identity_matrix(n)
        for i in range(n):
            cox = mat_mul(cox, reflection_matrix(comp.gram, i))
        power = cox
        ident = identity_matrix(n)
        for order in range(1, 100):
            if power == ident:
                return order
            power = mat_mul(power, cox)
        raise NotADEError("Coxeter element order exceeds the search bound")
    raise ValueError(f"unknown mode {mode!r}")


@functools.lru_cache(maxsize=None)
def build_component(t: ADEType) -> RootComponent:
    """Construct (and cache) the fully-checked component for one ADE type."""
    n = t.rank
    lat = cartan_gram(t)
    gram = lat.gram
    theta = list(identity_matrix(n))
    mu, m = highest_root_and_m(theta, gram)
    rho = weyl_vector_of(theta, gram)
    dual = inverse(gram)
    disc = discriminant_group(lat)
    j_set = tuple(j for j in range(n) if m[j] == 1)

    comp = RootComponent(
        ade=t, gram=gram, mu=mu, m=m, h=0, rho=rho, dual_basis=dual,
        disc=disc, j_set=j_set, class_table={},
    )
    modes = {mode: coxeter_number(comp, mode) for mode in "abcd"}
    if len(set(modes.values())) != 1:
        raise NotADEError(f"Coxeter number modes disagree for {t.label}: {modes}")
    h = modes["a"]
    if sum(m) != h:
        raise NotADEError("sum of extended coefficients is not the Coxeter number")

    # canonical-representative bijection J -> nonzero discriminant classes
    table = {}
    for j in j_set:
        key = _class_key(dual[j])
        if key in table or all(x == 0 for x in key):
            raise NotADEError("canonical representatives do not separate classes")
        table[key] = j
    if len(table) != disc.order - 1:
        raise NotADEError("canonical representatives miss discriminant classes")
    all_keys = _span_classes(disc)
    if set(table) != {k for k in all_keys if any(k)}:
        raise NotADEError("canonical representatives do not cover the group")

    return RootComponent(
        ade=t, gram=gram, mu=mu, m=m, h=h, rho=tuple(rho), dual_basis=dual,
        disc=disc, j_set=j_set, class_table=table,
    )


def _span_classes(disc: DiscriminantGroup) -> set:
    """All class keys spanned by the discriminant-group generators."""
    n = len(disc.dual_basis)
    keys = {(Fraction(0),) * n}
    for gen, d in zip(disc.generators, disc.invariant_factors):
        new = set()
        for k in keys:
            cur = k
            for _ in range(d):
                new.add(cur)
                cur = _class_key(vec_add(cur, gen))
        keys = new
    return keys


def canonical_rep_component(comp: RootComponent, alpha: Sequence[int]) -> Vector:
    """Canonical representative of a discriminant class, given as exponents
    over the group generators.  Zero class maps to 0, any other class to the
    dual basis vector of its unique coefficient-1 node."""
    if len(alpha) != len(comp.disc.generators):
        raise ValueError("exponent tuple does not match the group generators")
    vec = (Fraction(0),) * comp.rank
    for a, gen in zip(alpha, comp.disc.generators):
        vec = vec_add(vec, tuple(a * x for x in gen))
    key = _class_key(vec)
    if not any(key):
        return (Fraction(0),) * comp.rank
    return tuple(comp.dual_basis[comp.class_table[key]])


def canonical_rep_of_class(comp: RootComponent, key: tuple) -> Vector:
    """Canonical representative of a class given directly by its key
    (theta-coordinates mod 1)."""
    if not any(key):
        return (Fraction(0),) * comp.rank
    if key not in comp.class_table:
        raise KeyError("class is not in the discriminant group")
    return tuple(comp.dual_basis[comp.class_table[key]])


def class_key(vec: Sequence) -> tuple:
    return _class_key(vec)
