from collections import Counter

import pytest

from nilpotent_selfdual.classical_orbits import (
    check_label,
    complex_parent,
    complexified_partition,
    component_count,
    enumerate_orbits,
    format_label,
    orbit_dimension,
    parse_label,
)
from nilpotent_selfdual.errors import FormError, LabelError
from nilpotent_selfdual.forms import Family, RealFormId, classical_forms, iso_equivalents, normalize, parse_form
from nilpotent_selfdual.partitions import FinePartition, Flavor, Partition, enumerate_partitions
from nilpotent_selfdual.selfdual import is_compact

R = RealFormId.of
P = Partition.from_parts


def fine(parts, flavor, split):
    return FinePartition.make(P(parts), flavor, split)


def test_component_count_examples():
    assert component_count(R(Family.SL_R, 2), P([2])) == 2
    assert component_count(R(Family.SO, 2, 1), fine([3], Flavor.FINE_SYMMETRIC, {3: (1, 0)})) == 2
    so33 = R(Family.SO, 3, 3)
    assert component_count(so33, fine([5, 1], Flavor.FINE_SYMMETRIC, {5: (1, 0), 1: (0, 1)})) == 1
    assert component_count(R(Family.SO, 2, 2), fine([2, 2], Flavor.FINE_SYMMETRIC, {})) == 4
    assert component_count(R(Family.SO_C, 4), P([2, 2])) == 2
    assert component_count(R(Family.SO_C, 5), P([3, 1, 1])) == 1
    assert component_count(R(Family.SU, 1, 1), fine([2], Flavor.FINE, {2: (1, 0)})) == 1


def test_orbit_dimension_examples():
    assert orbit_dimension(R(Family.SL_C, 3), P([3])) == 6
    assert orbit_dimension(R(Family.SO, 3, 3), fine([5, 1], Flavor.FINE_SYMMETRIC, {5: (1, 0), 1: (0, 1)})) == 12
    assert orbit_dimension(R(Family.SP_R, 4), fine([4], Flavor.FINE_SKEW_SYMMETRIC, {4: (1, 0)})) == 8


def test_enumerate_examples():
    su11 = enumerate_orbits(R(Family.SU, 1, 1))
    assert [r.real_dim for r in su11] == [2, 2]
    sl4 = enumerate_orbits(R(Family.SL_R, 4))
    assert [(format_label(r.label.data), r.label.component_index) for r in sl4] == [
        ("[4]", 1), ("[4]", 2), ("[3,1]", 1), ("[2,2]", 1), ("[2,2]", 2), ("[2,1,1]", 1)]
    assert enumerate_orbits(R(Family.SU, 2, 0)) == []
    assert enumerate_orbits(R(Family.SO, 5, 0)) == []
    assert enumerate_orbits(R(Family.SP_H, 3, 0)) == []


def test_enumerate_rejects_exceptional_and_low_rank():
    with pytest.raises((LabelError, FormError)):
        enumerate_orbits(RealFormId.exceptional("G2(2)"))
    with pytest.raises(FormError):
        enumerate_orbits(R(Family.SO, 2, 2))
    assert len(enumerate_orbits(R(Family.SO, 2, 2), strict=False)) == 8


def test_so33_hand_counts():
    recs = enumerate_orbits(R(Family.SO, 3, 3))
    assert sorted(r.real_dim for r in recs) == [6, 8, 8, 10, 12, 12]
    compact = {format_label(r.label.data) for r in recs if is_compact(r.form, r.label.data)}
    assert compact == {"[5:(1,0),1:(0,1)]", "[5:(0,1),1:(1,0)]"}


def test_so32_components():
    recs = enumerate_orbits(R(Family.SO, 3, 2))
    got = Counter(format_label(r.label.data) for r in recs)
    assert got == {"[5:(1,0)]": 2, "[3:(1,0),1:(1,1)]": 1, "[3:(0,1),1:(2,0)]": 2, "[2,2,1:(1,0)]": 2}


def test_label_checks():
    su21 = R(Family.SU, 2, 1)
    assert format_label(parse_label(su21, "[3:(1,0)]")) == "[3:(1,0)]"
    with pytest.raises(LabelError, match="signature"):
        parse_label(su21, "[3:(0,1)]")
    with pytest.raises(LabelError, match="trivial"):
        parse_label(su21, "[1:(2,1)]")
    with pytest.raises(LabelError, match="symmetric"):
        check_label(R(Family.SO_C, 5), P([4, 1]))
    with pytest.raises(LabelError):
        check_label(R(Family.SL_R, 3), fine([3], Flavor.FINE, {3: (1, 0)}))


@pytest.mark.parametrize("form", [f for f in classical_forms(8) if not f.family.complex], ids=str)
def test_parity(form):
    for r in enumerate_orbits(form):
        assert r.real_dim > 0 and r.real_dim % 2 == 0


@pytest.mark.parametrize("form", [f for f in classical_forms(8) if not f.family.complex], ids=str)
def test_complex_parent_consistency(form):
    parent = complex_parent(form)
    for r in enumerate_orbits(form):
        m = complexified_partition(form, r.label.data)
        check_label(normalize(parent, strict=False), m)
        assert orbit_dimension(parent, m) == r.real_dim


def _simple_iso_pairs():
    seen = []
    for form in classical_forms(8, strict=False):
        for other in iso_equivalents(form):
            key = frozenset((form, other))
            if key not in seen:
                seen.append(key)
                yield form, other


@pytest.mark.parametrize("a,b", list(_simple_iso_pairs()), ids=lambda f: str(f))
def test_iso_cross_check(a, b):
    def profile(f):
        f = normalize(f, strict=False)
        recs = enumerate_orbits(f, strict=False)
        # complex algebras viewed as real: real orbit dimension is twice the complex one
        dims = sorted(r.dim * (2 if f.family.complex else 1) for r in recs)
        return len(recs), dims

    assert profile(a) == profile(b)


@pytest.mark.parametrize(
    "fs,dims",
    [("sl(3,R)", [6, 4]), ("su(2,1)", [6, 4, 4]), ("sp(4,R)", [8, 8, 6, 6, 6, 4, 4]), ("u*(3,H)", [10, 6, 6])],
)
def test_dimension_lists(fs, dims):
    assert [r.real_dim for r in enumerate_orbits(parse_form(fs))] == dims


def test_complex_families_report_complex_dims():
    recs = enumerate_orbits(R(Family.SP_C, 4))
    assert all(r.real_dim is None for r in recs)
    assert [r.complex_dim for r in recs] == [8, 6, 4]
    assert recs[0].to_json()["complex_dim"] == 8 and "real_dim" not in recs[0].to_json()


def test_record_json_shape():
    r = enumerate_orbits(R(Family.SO, 3, 3))[0].to_json()
    assert r == {
        "form": "so(3,3)", "label": "[5:(1,0),1:(0,1)]", "partition": [5, 1],
        "fine_split": [[5, 1, 0], [1, 0, 1]], "component_index": 1, "component_count": 1, "real_dim": 12,
    }


def test_enumeration_duplicate_free():
    for form in classical_forms(7):
        recs = enumerate_orbits(form)
        keys = [(r.label.data, r.label.component_index) for r in recs]
        assert len(set(keys)) == len(keys)


def test_sl_counts_equal_partition_numbers():
    for n in range(2, 9):
        plain = len(enumerate_partitions(n))
        recs = enumerate_orbits(R(Family.SL_C, n))
        assert len(recs) == plain
