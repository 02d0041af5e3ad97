"""Acceptance suite: one test per top-level criterion, exact tolerances.

Each test prints a single summary line; any failure is a hard assert.
"""

from importlib import resources

import pytest

from conftest import all_labels, get_lattice
from leechkit import hyperbolic as hy
from leechkit import serialize
from leechkit.exact import det, gram_apply
from leechkit.enumerate import root_vectors
from leechkit.leech import certify_leech, construct_leech, corollary_zero
from leechkit.rootsys import build_component, coxeter_number

SWEEP_LABELS = ["A24", "D24", "D16E8", "E8^3"]
A1_SAMPLE_STRIDE = 128  # 4096 / 128 = 32 deterministic sample points


def _sample_indices(n):
    if n.label == "A1^24":
        return list(range(0, n.code_order, A1_SAMPLE_STRIDE))
    return list(range(n.code_order))


def test_criterion_01_assembly_roots_and_h():
    for label in all_labels():
        n = get_lattice(label)
        assert abs(det(n.gram)) == 1
        assert all(n.gram[i][i] % 2 == 0 for i in range(24))
        assert len({c.h for c in n.components}) == 1
        from leechkit.exact import lll_reduce

        reduced, _ = lll_reduce(n.lattice())
        assert len(root_vectors(reduced)) == 24 * n.h
    print("criterion 1 (assembly, 24h roots, common h): pass")


def test_criterion_02_weyl_identities():
    for label in all_labels():
        n = get_lattice(label)
        assert all(isinstance(x, int) for x in n.rho)
        assert gram_apply(n.gram, n.rho, n.rho) == -2 * n.h * (n.h + 1)
    print("criterion 2 (Weyl vector integral, norm -2h(h+1)): pass")


def test_criterion_03_coxeter_modes_agree():
    types = sorted(
        {t for label in all_labels() for t in get_lattice(label).types},
        key=lambda t: t.sort_key(),
    )
    for t in types:
        comp = build_component(t)
        values = {coxeter_number(comp, mode) for mode in "abcd"}
        assert values == {comp.h}
    print(f"criterion 3 (Coxeter modes a-d agree, {len(types)} types): pass")


def test_criterion_04_zero_codeword_certified():
    for label in all_labels():
        n = get_lattice(label)
        built = construct_leech(n, n.code[0])
        assert certify_leech(built.lattice()).is_leech
    print("criterion 4 (zero-codeword construction certified, 23 types): pass")


def test_criterion_05_corollary_equivalence():
    for label in all_labels():
        n = get_lattice(label)
        corollary_zero(n)  # raises on any mismatch with the construction
    print("criterion 5 (closed-form zero-codeword equivalence): pass")


def test_criterion_06_codeword_sweeps():
    total = 0
    for label in SWEEP_LABELS + ["A1^24"]:
        n = get_lattice(label)
        for idx in _sample_indices(n):
            built = construct_leech(n, n.code[idx])
            assert certify_leech(built.lattice()).is_leech
            total += 1
    print(f"criterion 6 (codeword sweeps, {total} certified lattices): pass")


@pytest.mark.slow
def test_criterion_06_full_a1_sweep():
    n = get_lattice("A1^24")
    for gamma in n.code:
        built = construct_leech(n, gamma)
        assert certify_leech(built.lattice()).is_leech
    print("criterion 6 (full A1^24 sweep, 4096 lattices): pass")


def test_criterion_07_oracle_agreement():
    total = 0
    for label in SWEEP_LABELS + ["A1^24"]:
        n = get_lattice(label)
        secs = hy.enumerate_section_classes(n)
        assert len(secs) == n.code_order
        got = {s[2:] for s in secs}
        want = {
            tuple(hy.canonical_representative(n, gamma)) for gamma in n.code
        }
        assert got == want
        for idx in _sample_indices(n):
            assert hy.oracle_agreement(n, n.code[idx])
            total += 1
    print(f"criterion 7 (hyperbolic oracle agreement, {total} codewords): pass")


def test_criterion_08_m_function_and_walls():
    for label in all_labels():
        n = get_lattice(label)
        for comp in n.components:
            assert sum(comp.m) == n.h
        hy.weyl_vector_LN(n)  # asserts <w, x> = 1 for z, Theta, affine walls
    print("criterion 8 (m-sums and wall pairings, 23 types): pass")


@pytest.mark.slow
def test_criterion_09_norm4_count():
    n = get_lattice("A1^24")
    built = construct_leech(n, n.code[0])
    verdict = certify_leech(built.lattice(), deep=True)
    assert verdict.norm4_count == 196560
    print("criterion 9 (norm-4 vector count 196560): pass")


def test_criterion_10_deep_hole_report():
    path = resources.files("leechkit").joinpath("data/deep_hole_a1_24.json")
    d = serialize.import_deep_hole(serialize.load_json(str(path)))
    report = hy.deep_hole_checks(d)
    assert report.is_deep_hole and report.min_distance_sq == 2
    assert report.hc_primitive and report.half_h_norm_integral
    assert report.type_label == "A1^24" and report.h == 2
    assert report.xi0_count == 48
    assert report.xi1_count == 4096
    assert report.msum_ok
    assert report.theta_unique_ok
    print("criterion 10 (deep-hole report for A1^24): pass")
