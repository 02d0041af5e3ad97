"""ADE root systems: recognition, Coxeter numbers, highest roots, classes."""

from fractions import Fraction as Q

import pytest

from leechkit.enumerate import root_vectors
from leechkit.exact import freeze, gram_apply
from leechkit.rootsys import (
    ADEType,
    NotADEError,
    ade,
    build_component,
    canonical_rep_of_class,
    cartan_gram,
    class_key,
    coxeter_number,
    extract_simple_system,
    identify_ade_decomposition,
)

EXPECTED_H = {
    "A1": 2, "A2": 3, "A5": 6, "D4": 6, "D5": 8, "E6": 12, "E7": 18, "E8": 30,
}


def test_ade_parser():
    t = ade("D12")
    assert t == ADEType(family="D", rank=12)
    assert t.label == "D12"
    with pytest.raises(NotADEError):
        ade("F4")
    with pytest.raises(NotADEError):
        ade("D3")
    with pytest.raises(NotADEError):
        ade("E9")


@pytest.mark.parametrize("label,h", sorted(EXPECTED_H.items()))
def test_coxeter_number_all_modes_agree(label, h):
    comp = build_component(ade(label))
    assert comp.h == h
    for mode in "abcd":
        assert coxeter_number(comp, mode) == h


@pytest.mark.parametrize("label", ["A3", "D4", "E6", "E8"])
def test_root_count_is_rank_times_h(label):
    comp = build_component(ade(label))
    roots = root_vectors(cartan_gram(comp.ade))
    assert len(roots) == comp.rank * comp.h


@pytest.mark.parametrize("label", ["A2", "D5", "E7"])
def test_weyl_vector_norm(label):
    comp = build_component(ade(label))
    n, h = comp.rank, comp.h
    assert gram_apply(comp.gram, comp.rho, comp.rho) == Q(-n * h * (h + 1), 12)


def test_highest_root_marks():
    comp = build_component(ade("D4"))
    assert comp.m == (1, 2, 1, 1, 1)
    assert sum(comp.m) == comp.h
    comp = build_component(ade("E8"))
    assert sum(comp.m) == 30
    assert comp.m[-1] == 1  # affine node


def test_j_set_are_unit_mark_nodes():
    for label in ("A4", "D6", "D7", "E6", "E7"):
        comp = build_component(ade(label))
        for j in comp.j_set:
            assert comp.m[j] == 1
    # E8 has trivial discriminant: no glue nodes
    assert build_component(ade("E8")).j_set == ()


def test_class_table_covers_discriminant():
    for label in ("A3", "D5", "D6", "E6", "E7"):
        comp = build_component(ade(label))
        assert len(comp.class_table) == comp.disc.order - 1


def test_canonical_rep_round_trip():
    comp = build_component(ade("A4"))
    for key in comp.class_table:
        rep = canonical_rep_of_class(comp, key)
        assert class_key(rep) == key


def test_extract_simple_system_e8():
    lat = cartan_gram(ade("E8"))
    roots = root_vectors(lat)
    simple = extract_simple_system(roots, lat.gram)
    types = identify_ade_decomposition(simple, lat.gram)
    assert [t.label for t in types] == ["E8"]


def test_extract_simple_system_direct_sum():
    a1 = cartan_gram(ade("A1")).gram
    g = freeze([[a1[0][0], 0], [0, a1[0][0]]])
    from leechkit.exact import LatticeDesc

    lat = LatticeDesc(gram=g, sig="negative-definite")
    roots = root_vectors(lat)
    simple = extract_simple_system(roots, g)
    types = identify_ade_decomposition(simple, g)
    assert sorted(t.label for t in types) == ["A1", "A1"]


def test_sort_key_orders_by_rank_then_family():
    types = [ade("E6"), ade("A11"), ade("D7")]
    assert sorted(types, key=ADEType.sort_key) == [
        ade("A11"), ade("D7"), ade("E6")
    ]
