import pytest
from hypothesis import given
from hypothesis import strategies as st

from nilpotent_selfdual.errors import FormError, UsageError
from nilpotent_selfdual.forms import (
    EXCEPTIONAL_PAIRS,
    NON_SIMPLE,
    Family,
    RealFormId,
    classical_forms,
    complex_dimension,
    format_form,
    iso_classes,
    iso_equivalents,
    label_signature,
    low_rank,
    normalize,
    parse_form,
    real_dimension,
    symmetric_pair_dims,
)

R = RealFormId.of


def test_normalize_examples():
    assert normalize(R(Family.SO, 1, 2)) == R(Family.SO, 2, 1)
    assert normalize(R(Family.SU, 2, 2)) == R(Family.SU, 2, 2)
    with pytest.raises(FormError, match="even"):
        normalize(R(Family.SP_R, 3))


@pytest.mark.parametrize(
    "form",
    [R(Family.SL_R, 1), R(Family.SU, 1, 0), R(Family.SO, 2, 2), R(Family.SO_C, 4), R(Family.SP_C, 5),
     R(Family.USTAR_H, 2), R(Family.SL_H, 0), RealFormId.exceptional("E6(3)"), R(Family.SO, 1)],
)
def test_validation_rejects(form):
    with pytest.raises(FormError):
        normalize(form)


def test_low_rank_accepted_only_non_strict():
    for f in [R(Family.SO, 2, 2), R(Family.SO, 4, 0), R(Family.SO_C, 4), R(Family.USTAR_H, 1), R(Family.SO, 2, 0)]:
        assert normalize(f, strict=False) == f
        assert low_rank(f)
        with pytest.raises(FormError, match="non-strict"):
            normalize(f)


def test_real_dimension_examples():
    assert real_dimension(R(Family.SU, 2, 1)) == 8
    assert real_dimension(R(Family.SO, 3, 2)) == 10
    assert real_dimension(RealFormId.exceptional("G2(2)")) == 14
    assert real_dimension(R(Family.SL_C, 2)) == 6 and complex_dimension(R(Family.SL_C, 2)) == 3
    assert real_dimension(R(Family.SP_H, 1, 1)) == 10
    assert real_dimension(R(Family.USTAR_H, 3)) == 15
    assert real_dimension(R(Family.SL_H, 2)) == 15


def test_iso_examples():
    assert set(iso_equivalents(R(Family.SO, 2, 1))) == {R(Family.SU, 1, 1), R(Family.SL_R, 2), R(Family.SP_R, 2)}
    assert iso_equivalents(R(Family.SO, 3, 3)) == [R(Family.SL_R, 4)]
    assert set(iso_equivalents(R(Family.SU, 2, 0))) == {R(Family.SP_H, 1, 0), R(Family.SL_H, 1), R(Family.SO, 3, 0)}
    assert iso_equivalents(R(Family.SO, 7, 0)) == []
    assert iso_equivalents(R(Family.SO, 1, 2)) == iso_equivalents(R(Family.SO, 2, 1))


def test_iso_symmetric():
    for cls in iso_classes():
        for a in cls:
            for b in iso_equivalents(a):
                assert a in iso_equivalents(b)


def test_iso_dimensions_agree():
    for cls in iso_classes():
        assert len({real_dimension(f) for f in cls}) == 1, cls


def test_non_simple_markers():
    for f in NON_SIMPLE:
        assert low_rank(f)


def test_symmetric_pair_examples():
    d = symmetric_pair_dims(RealFormId.exceptional("E6(6)"))
    assert (d.dim_k, d.dim_p, d.signature_t) == (36, 42, 6)
    d = symmetric_pair_dims(RealFormId.exceptional("E8(-24)"))
    assert (d.dim_k, d.dim_p, d.signature_t) == (136, 112, -24)
    d = symmetric_pair_dims(RealFormId.exceptional("F4(-20)"))
    assert (d.dim_k, d.dim_p, d.signature_t) == (36, 16, -20)
    with pytest.raises(FormError):
        symmetric_pair_dims(R(Family.SO, 3, 2))


@pytest.mark.parametrize("label", list(EXCEPTIONAL_PAIRS))
def test_label_matches_signature(label):
    assert symmetric_pair_dims(RealFormId.exceptional(label)).signature_t == label_signature(label)


@pytest.mark.parametrize(
    "text,form",
    [
        ("sl(4,R)", R(Family.SL_R, 4)), ("sl(2,H)", R(Family.SL_H, 2)), ("su(2,1)", R(Family.SU, 2, 1)),
        ("so(3,2)", R(Family.SO, 3, 2)), ("sp(4,R)", R(Family.SP_R, 4)), ("sp(2,1)", R(Family.SP_H, 2, 1)),
        ("u*(3,H)", R(Family.USTAR_H, 3)), ("sl(3,C)", R(Family.SL_C, 3)), ("so(5,C)", R(Family.SO_C, 5)),
        ("sp(4,C)", R(Family.SP_C, 4)), ("E6(2)", RealFormId.exceptional("E6(2)")),
        ("F4(-20)", RealFormId.exceptional("F4(-20)")), ("G2(2)", RealFormId.exceptional("G2(2)")),
    ],
)
def test_form_grammar(text, form):
    assert parse_form(text) == form
    assert format_form(form) == text
    assert parse_form(text.upper()) == form


def test_form_grammar_variants():
    assert parse_form("F4(−20)") == RealFormId.exceptional("F4(-20)")
    assert parse_form(" so( 5 ) ") == R(Family.SO, 5, 0)
    for bad in ["so(3,", "sl(3)", "e9(1)", "su(2,1,1)", ""]:
        with pytest.raises(UsageError):
            parse_form(bad)


@given(st.sampled_from([Family.SU, Family.SO, Family.SP_H]), st.integers(0, 8), st.integers(0, 8))
def test_normalize_idempotent(fam, p, q):
    f = R(fam, p, q)
    try:
        g = normalize(f, strict=False)
    except FormError:
        return
    assert normalize(g, strict=False) == g
    assert real_dimension(g) == real_dimension(f)


def test_classical_forms_listing():
    fs = classical_forms(5, 3)
    assert R(Family.SO, 3, 2) in fs and R(Family.SP_H, 2, 1) in fs
    assert R(Family.SO, 2, 2) not in fs
    assert R(Family.SO, 2, 2) in classical_forms(5, 3, strict=False)
    assert all(f.n <= 3 for f in fs if f.family.division_algebra == "H")
    assert len(set(fs)) == len(fs)
