"""Compactness, (-1)-distinguished K-orbits and projective self-duality.

A nilpotent K-orbit closure in ``p`` is projectively self-dual exactly when the
orbit is (-1)-distinguished, and that happens exactly when the real orbit
matched to it by the Kostant-Sekiguchi bijection is compact. For classical
forms compactness is read off the (fine) partition; for exceptional forms the
(-1)-distinguished orbits are embedded data.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Union

from . import exceptional
from .classical_orbits import (
    LabelData,
    OrbitLabel,
    OrbitRecord,
    base_of,
    check_label,
    enumerate_orbits,
    format_label,
)
from .errors import LabelError, ValidationError
from .exceptional import ExceptionalRow
from .forms import Family, RealFormId, format_form, normalize
from .partitions import FinePartition


@dataclass(frozen=True)
class KOrbitRecord:
    form: RealFormId
    label: Union[OrbitLabel, ExceptionalRow]
    complex_dim: int
    minus1_distinguished: bool

    @property
    def g_orbit_complex_dim(self) -> int:
        return 2 * self.complex_dim

    @property
    def projective_dim(self) -> int:
        return self.complex_dim - 1

    @property
    def self_dual(self) -> bool:
        return self.minus1_distinguished

    def to_json(self) -> dict:
        out: dict = {"form": format_form(self.form)}
        if isinstance(self.label, ExceptionalRow):
            row = self.label
            out.update(row_no=row.row_no, dyn_k=list(row.dyn_k), dyn_g=list(row.dyn_g),
                       intersection_count=row.intersection_count)
        else:
            out.update(label=format_label(self.label.data), component_index=self.label.component_index,
                       component_count=self.label.component_count)
        out.update(
            complex_dim=self.complex_dim,
            g_orbit_complex_dim=self.g_orbit_complex_dim,
            projective_dim=self.projective_dim,
            minus1_distinguished=self.minus1_distinguished,
            self_dual=self.self_dual,
        )
        return out


def _no_mixed(data: FinePartition, parity: int) -> bool:
    return all(p * q == 0 for d, (p, q) in data.split if d % 2 == parity)


def is_compact(form: RealFormId, data: LabelData) -> bool:
    """Whether the real orbits labelled by ``data`` are compact.

    The verdict depends only on the (fine) partition, so every component of a
    split orbit gets the same answer.
    """
    fam = form.family
    if fam.complex:
        raise ValidationError("compactness is defined for real forms only", code="validation.complex_form")
    if fam is Family.EXCEPTIONAL:
        raise LabelError("exceptional orbits are not labelled by partitions")
    check_label(form, data)
    base = base_of(data)
    if fam in (Family.SL_R, Family.SL_H):
        return len(base.mult) == 1 and base.mult[0][1] == 1
    assert isinstance(data, FinePartition)
    if fam is Family.SO:
        return _no_mixed(data, 1) and all(d % 2 == 1 for d, _ in base.mult)
    if fam is Family.SP_R:
        return _no_mixed(data, 0) and all(d % 2 == 0 for d, _ in base.mult)
    if fam is Family.SU:
        return all(p * q == 0 for _, (p, q) in data.split)
    if fam is Family.SP_H:
        return _no_mixed(data, 1) and all(m <= 1 for d, m in base.mult if d % 2 == 0)
    if fam is Family.USTAR_H:
        return _no_mixed(data, 0) and all(m <= 1 for d, m in base.mult if d % 2 == 1)
    raise LabelError(f"no compactness criterion for {fam.value}")


def ks_k_orbit(rec: OrbitRecord) -> KOrbitRecord:
    """The K-orbit in ``p`` matched to a real orbit: complex dimension is half the real one."""
    if rec.form.family.complex or rec.real_dim is None:
        raise ValidationError("the Kostant-Sekiguchi correspondence needs a real form", code="validation.complex_form")
    if rec.real_dim % 2:
        raise AssertionError(f"odd real orbit dimension {rec.real_dim} for {rec.form} {rec.label}")
    return KOrbitRecord(rec.form, rec.label, rec.real_dim // 2, is_compact(rec.form, rec.label.data))


def _complex_guard(form: RealFormId) -> None:
    if form.family.complex:
        raise ValidationError(
            f"{format_form(form)} is a complex algebra; its symmetric pair is of the form (g + g, diagonal)"
            " and self-duality there is decided per simple ideal via compose_selfdual",
            code="validation.complex_form",
        )


def list_k_orbits(form: RealFormId, strict: bool = True) -> list[KOrbitRecord]:
    """Every nonzero nilpotent K-orbit of a classical real form, with its verdict."""
    _complex_guard(form)
    return [ks_k_orbit(r) for r in enumerate_orbits(form, strict)]


def exceptional_records(form: RealFormId) -> list[KOrbitRecord]:
    return [KOrbitRecord(form, row, row.dim_k_orbit, True) for row in exceptional.query(form)]


def list_selfdual(form: RealFormId, strict: bool = True) -> list[KOrbitRecord]:
    """The (-1)-distinguished, equivalently self-dual, K-orbits of a real form."""
    form = normalize(form, strict)
    _complex_guard(form)
    if form.family is Family.EXCEPTIONAL:
        return exceptional_records(form)
    return [k for k in list_k_orbits(form, strict) if k.minus1_distinguished]


def compose_selfdual(verdicts: Iterable[bool]) -> bool:
    """Self-duality of a direct sum: every summand must be self-dual."""
    vs = list(verdicts)
    if not vs:
        raise ValidationError("need at least one verdict", code="validation.empty_list")
    return all(vs)


def join_projective_dim(proj_dims: Iterable[int]) -> int:
    """Projective dimension of the join of projective varieties of the given dimensions."""
    ds = list(proj_dims)
    if not ds:
        raise ValidationError("need at least one dimension", code="validation.empty_list")
    if any(d < 0 for d in ds):
        raise ValidationError("projective dimensions must be non-negative", code="validation.negative_dim")
    return sum(ds) + len(ds) - 1
