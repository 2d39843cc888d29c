"""Nilpotent orbits of classical real forms: labels, component counts, dimensions."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .errors import LabelError
from .forms import Family, RealFormId, format_form, normalize
from .partitions import (
    FinePartition,
    Flavor,
    Partition,
    enumerate_fine,
    enumerate_partitions,
    format_fine,
    format_partition,
    is_skew_symmetric,
    is_symmetric,
    is_trivial,
    parse_fine,
    parse_partition,
    signature,
    transpose,
)

LabelData = Union[Partition, FinePartition]

_FLAVOR = {
    Family.SO: Flavor.FINE_SYMMETRIC,
    Family.SP_R: Flavor.FINE_SKEW_SYMMETRIC,
    Family.SU: Flavor.FINE,
    Family.SP_H: Flavor.FINE_HERMITIAN,
    Family.USTAR_H: Flavor.FINE_SKEW_HERMITIAN,
}


def label_flavor(family: Family) -> Flavor | None:
    """Refinement flavor of the orbit labels, or ``None`` for plain partitions."""
    if family is Family.EXCEPTIONAL:
        raise LabelError("exceptional orbits are not labelled by partitions")
    return _FLAVOR.get(family)


def base_of(data: LabelData) -> Partition:
    return data.base if isinstance(data, FinePartition) else data


@dataclass(frozen=True)
class OrbitLabel:
    data: LabelData
    component_index: int
    component_count: int

    def __str__(self) -> str:
        s = format_label(self.data)
        if self.component_count > 1:
            s += f"#{self.component_index}"
        return s


@dataclass(frozen=True)
class OrbitRecord:
    """One orbit. Exactly one of ``real_dim`` / ``complex_dim`` is set.

    Complex families report the complex dimension of the orbit under the
    complex group; real forms report the real dimension.
    """

    form: RealFormId
    label: OrbitLabel
    real_dim: int | None = None
    complex_dim: int | None = None

    @property
    def dim(self) -> int:
        return self.real_dim if self.real_dim is not None else self.complex_dim  # type: ignore[return-value]

    @property
    def dim_key(self) -> str:
        return "real_dim" if self.real_dim is not None else "complex_dim"

    def to_json(self) -> dict:
        data = self.label.data
        out = {
            "form": format_form(self.form),
            "label": format_label(data),
            "partition": list(base_of(data).parts),
            "fine_split": [[d, p, q] for d, (p, q) in data.split] if isinstance(data, FinePartition) else None,
            "component_index": self.label.component_index,
            "component_count": self.label.component_count,
        }
        out[self.dim_key] = self.dim
        return out


def format_label(data: LabelData) -> str:
    return format_fine(data) if isinstance(data, FinePartition) else format_partition(data)


def parse_label(form: RealFormId, text: str) -> LabelData:
    """Parse label text in the syntax appropriate for the form's family."""
    flavor = label_flavor(form.family)
    data: LabelData = parse_partition(text) if flavor is None else parse_fine(text, flavor)
    check_label(form, data)
    return data


def check_label(form: RealFormId, data: LabelData) -> None:
    """Raise ``LabelError`` unless ``data`` labels a nonzero orbit of ``form``."""
    flavor = label_flavor(form.family)
    base = base_of(data)
    if base.n != form.n:
        raise LabelError(f"label is a partition of {base.n}, but {format_form(form)} needs a partition of {form.n}",
                         code="validation.label.size")
    if is_trivial(base):
        raise LabelError("the trivial partition labels the zero orbit, which is excluded", code="validation.label.trivial")
    if flavor is None:
        if isinstance(data, FinePartition):
            raise LabelError(f"{format_form(form)} orbits are labelled by plain partitions", code="validation.label.flavor")
        if form.family is Family.SO_C and not is_symmetric(base):
            raise LabelError("so(n,C) orbits need a symmetric partition (even parts with even multiplicity)",
                             code="validation.label.parity")
        if form.family is Family.SP_C and not is_skew_symmetric(base):
            raise LabelError("sp(n,C) orbits need a skew-symmetric partition (odd parts with even multiplicity)",
                             code="validation.label.parity")
        return
    if not isinstance(data, FinePartition) or data.flavor is not flavor:
        raise LabelError(f"{format_form(form)} orbits are labelled by {flavor.value} partitions",
                         code="validation.label.flavor")
    if form.family.signed:
        sgn = signature(data)
        if sgn != form.p - form.q:
            raise LabelError(f"label has signature {sgn}, but {format_form(form)} needs p - q = {form.p - form.q}",
                             code="validation.label.signature")


def component_count(form: RealFormId, data: LabelData) -> int:
    """Number of orbits of the (possibly disconnected) classical group's orbit that split off."""
    fam = form.family
    base = base_of(data)
    no_odd = all(d % 2 == 0 for d, _ in base.mult)
    if fam in (Family.SL_R, Family.SO_C):
        return 2 if no_odd else 1
    if fam is Family.SO:
        if no_odd:
            return 4
        assert isinstance(data, FinePartition)
        odd = [(d, data.pq(d)) for d, _ in base.mult if d % 2 == 1]
        pattern1 = all((p == 0) if d % 4 == 1 else (q == 0) for d, (p, q) in odd)
        pattern2 = all((p == 0) if d % 4 == 3 else (q == 0) for d, (p, q) in odd)
        return 2 if (pattern1 or pattern2) else 1
    return 1


def _transpose_square_sum(base: Partition) -> int:
    return sum(d * d * m for d, m in transpose(base).mult)


def orbit_dimension(form: RealFormId, data: LabelData) -> int:
    """Real dimension (complex dimension for complex families) of the orbit."""
    fam = form.family
    base = base_of(data)
    n = form.n
    t = _transpose_square_sum(base)
    odd = sum(m for d, m in base.mult if d % 2 == 1)
    if fam in (Family.SL_R, Family.SU, Family.SL_C):
        return n * n - t
    if fam is Family.SL_H:
        return 4 * (n * n - t)
    if fam in (Family.SO, Family.SO_C):
        return (n * n - n - t + odd) // 2
    if fam in (Family.SP_R, Family.SP_C):
        return (n * n + n - t - odd) // 2
    if fam is Family.SP_H:
        return 2 * n * n + n - 2 * t - odd
    if fam is Family.USTAR_H:
        return 2 * n * n - n - 2 * t + odd
    raise LabelError(f"{fam.value} is not a classical family")


def enumerate_labels(form: RealFormId) -> list[LabelData]:
    """Orbit labels (without component indices) in canonical order."""
    flavor = label_flavor(form.family)
    out: list[LabelData] = []
    for base in enumerate_partitions(form.n):
        if flavor is None:
            if form.family is Family.SO_C and not is_symmetric(base):
                continue
            if form.family is Family.SP_C and not is_skew_symmetric(base):
                continue
            out.append(base)
        else:
            sf = form.p - form.q if form.family.signed else None
            out.extend(enumerate_fine(base, flavor, sf))
    return out


def enumerate_orbits(form: RealFormId, strict: bool = True) -> list[OrbitRecord]:
    """All nonzero nilpotent orbits of a classical form, with dimensions."""
    form = normalize(form, strict)
    if form.family is Family.EXCEPTIONAL:
        raise LabelError("use the exceptional module for exceptional forms")
    out = []
    for data in enumerate_labels(form):
        count = component_count(form, data)
        dim = orbit_dimension(form, data)
        for i in range(1, count + 1):
            lab = OrbitLabel(data, i, count)
            if form.family.complex:
                out.append(OrbitRecord(form, lab, complex_dim=dim))
            else:
                out.append(OrbitRecord(form, lab, real_dim=dim))
    return out


# complexification ------------------------------------------------------------

def complex_parent(form: RealFormId) -> RealFormId:
    """The complex family whose orbits the real orbits map into under complexification."""
    fam, n = form.family, form.n
    table = {
        Family.SL_R: (Family.SL_C, n),
        Family.SU: (Family.SL_C, n),
        Family.SL_H: (Family.SL_C, 2 * n),
        Family.SO: (Family.SO_C, n),
        Family.SP_R: (Family.SP_C, n),
        Family.SP_H: (Family.SP_C, 2 * n),
        Family.USTAR_H: (Family.SO_C, 2 * n),
    }
    if fam not in table:
        raise LabelError(f"{format_form(form)} has no classical complex parent")
    f, k = table[fam]
    return RealFormId(f, (k,))


def complexified_partition(form: RealFormId, data: LabelData) -> Partition:
    """Jordan type over C of the orbit: quaternionic multiplicities double."""
    base = base_of(data)
    if form.family.division_algebra == "H":
        return Partition.from_mult({d: 2 * m for d, m in base.mult})
    return base

