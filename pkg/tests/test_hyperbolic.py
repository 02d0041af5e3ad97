"""The rank-26 hyperbolic oracle and the deep-hole checker."""

from fractions import Fraction as Q

import pytest

from conftest import get_lattice
from leechkit import hyperbolic as hy
from leechkit.exact import det, signature


def test_LN_gram_shape_and_signature():
    n = get_lattice("E8^3")
    lat = hy.build_LN(n)
    assert lat.rank == 26
    assert det(lat.gram) == -1
    assert signature(lat.gram) == (1, 25)


def test_f_z_pairings():
    n = get_lattice("E8^3")
    f, z = hy.f_vector(n), hy.z_vector(n)
    assert hy.pair_LN(n, f, z) == 1
    assert hy.pair_LN(n, z, z) == -2
    assert hy.pair_LN(n, f, f) == 0


def test_weyl_vector_walls():
    for label in ("A1^24", "E8^3", "D24"):
        n = get_lattice(label)
        w = hy.weyl_vector_LN(n)
        assert w[:2] == (n.h + 1, n.h)
        assert hy.pair_LN(n, w, w) == 0


def test_section_vector_zero_word_is_z():
    n = get_lattice("E8^3")
    assert hy.section_vector(n, n.code[0]) == hy.z_vector(n)


def test_section_vector_d24_nonzero():
    n = get_lattice("D24")
    gamma = next(w for w in n.code if any(any(c) for c in w))
    s = hy.section_vector(n, gamma)
    assert s[0] == 2 and s[1] == 1  # a = -1 - (-6)/2


def test_section_classes_match_representatives():
    for label in ("E8^3", "D24", "A24"):
        n = get_lattice(label)
        secs = hy.enumerate_section_classes(n)
        assert len(secs) == n.code_order
        got = {s[2:] for s in secs}
        want = {
            tuple(hy.canonical_representative(n, gamma)) for gamma in n.code
        }
        assert got == want


def test_orthocomplement_unimodular_even():
    n = get_lattice("D16E8")
    gamma = n.code[1]
    s = hy.section_vector(n, gamma)
    comp, proj = hy.orthocomplement_gram(n, s)
    assert comp.rank == 24
    assert abs(det(comp.gram)) == 1
    assert comp.is_even
    assert len(proj) == 24


def test_oracle_agreement_small():
    n = get_lattice("D12^2")
    for gamma in n.code:
        assert hy.oracle_agreement(n, gamma)


def test_deep_hole_rejects_lattice_point():
    from leechkit.serialize import import_deep_hole, load_json
    from importlib import resources

    doc_path = resources.files("leechkit").joinpath("data/deep_hole_a1_24.json")
    d = import_deep_hole(load_json(str(doc_path)))
    zero = hy.DeepHoleInput(gram=d.gram, center=(Q(0),) * 24)
    rep = hy.deep_hole_checks(zero)
    assert not rep.is_deep_hole
    assert rep.min_distance_sq == 0


def test_deep_hole_rejects_rooted_gram():
    n = get_lattice("A1^24")
    with pytest.raises(ValueError):
        hy.deep_hole_checks(hy.DeepHoleInput(gram=n.gram, center=(Q(0),) * 24))
