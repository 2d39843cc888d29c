"""Embedded tables of (-1)-distinguished nilpotent K-orbits for exceptional real forms.

Each row describes one K-orbit ``K.x`` in ``p``: the weighted Dynkin diagrams of
``K.x`` and of ``G.x``, the complex dimension of ``K.x``, how many K-orbits the
G-orbit meets ``p`` in, and the Levi type and unipotent-radical dimension of
the centralizer of ``x`` in ``k``.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass
from importlib import resources
from pathlib import Path
from typing import Callable, Iterable

from .errors import DataIntegrityError, FormError
from .forms import EXCEPTIONAL_PAIRS, EXCEPTIONAL_RANK, Family, RealFormId, parse_form

SCHEMA = "1"

_SIMPLE_DIM: dict[str, Callable[[int], int]] = {
    "A": lambda k: k * k + 2 * k,
    "B": lambda k: 2 * k * k + k,
    "C": lambda k: 2 * k * k + k,
    "D": lambda k: 2 * k * k - k,
    "T": lambda k: k,
}
_FIXED = {("G", 2): 14, ("F", 4): 52, ("E", 6): 78, ("E", 7): 133, ("E", 8): 248}
_TOKEN = re.compile(r"(\d*)([ABCDEFGT])_(\d+)")


@dataclass(frozen=True)
class LeviType:
    """Sum of simple (or toral) summands; ``()`` is the zero algebra."""

    summands: tuple[tuple[str, int], ...] = ()

    @classmethod
    def parse(cls, text: str) -> "LeviType":
        text = text.strip()
        if text == "0":
            return cls(())
        out = []
        for part in text.split("+"):
            mt = _TOKEN.fullmatch(part.strip())
            if mt is None:
                raise ValueError(f"bad Levi token {part!r}")
            mult = int(mt.group(1)) if mt.group(1) else 1
            tok = f"{mt.group(2)}_{mt.group(3)}"
            _token_dim(tok)
            if mult < 1:
                raise ValueError(f"multiplicity must be positive in {part!r}")
            out.append((tok, mult))
        return cls(tuple(out))

    def dimension(self) -> int:
        return sum(m * _token_dim(t) for t, m in self.summands)

    def rank(self) -> int:
        return sum(m * int(t.split("_")[1]) for t, m in self.summands)

    def __str__(self) -> str:
        if not self.summands:
            return "0"
        return "+".join((f"{m}{t}" if m > 1 else t) for t, m in self.summands)


def _token_dim(tok: str) -> int:
    letter, k = tok.split("_")
    k = int(k)
    if letter in _SIMPLE_DIM:
        if k < 1:
            raise ValueError(f"bad rank in {tok}")
        return _SIMPLE_DIM[letter](k)
    if (letter, k) in _FIXED:
        return _FIXED[(letter, k)]
    raise ValueError(f"unknown simple type {tok}")


@dataclass(frozen=True)
class ExceptionalRow:
    realform: RealFormId
    row_no: int
    dyn_k: tuple[int, ...]
    dyn_g: tuple[int, ...]
    dim_k_orbit: int
    intersection_count: int
    levi: LeviType
    radu_dim: int

    def to_json(self) -> dict:
        return {
            "form": self.realform.label,
            "row_no": self.row_no,
            "dyn_k": list(self.dyn_k),
            "dyn_g": list(self.dyn_g),
            "dim_k_orbit": self.dim_k_orbit,
            "intersection_count": self.intersection_count,
            "levi": str(self.levi),
            "radu_dim": self.radu_dim,
        }


@dataclass(frozen=True)
class PairData:
    """One symmetric pair: type of g, ``dim k``, ``dim p`` and the type of ``k``."""

    form: str
    g_type: str
    dim_k: int
    dim_p: int
    k_type: LeviType


@dataclass(frozen=True)
class Dataset:
    schema: str
    pairs: dict[str, PairData]
    rows: dict[str, tuple[ExceptionalRow, ...]]
    notes: tuple[str, ...]

    @property
    def total_rows(self) -> int:
        return sum(len(r) for r in self.rows.values())


def row_problems(row: ExceptionalRow, pairs: dict[str, PairData] | None = None) -> list[str]:
    """Every violated row invariant, as human-readable strings (empty when the row is sound)."""
    pairs = pairs if pairs is not None else _shipped().pairs
    label = row.realform.label
    if label not in pairs:
        return [f"{label} has no symmetric-pair data"]
    pair = pairs[label]
    probs = []
    total = row.dim_k_orbit + row.levi.dimension() + row.radu_dim
    if total != pair.dim_k:
        probs.append(
            f"{label} row {row.row_no}: {row.dim_k_orbit} + {row.levi.dimension()} + {row.radu_dim} = {total}"
            f" != dim k = {pair.dim_k}"
        )
    if not 1 <= row.dim_k_orbit <= pair.dim_p:
        probs.append(f"{label} row {row.row_no}: orbit dimension {row.dim_k_orbit} outside [1, {pair.dim_p}]")
    if row.intersection_count < 1:
        probs.append(f"{label} row {row.row_no}: intersection count must be positive")
    if row.radu_dim < 0:
        probs.append(f"{label} row {row.row_no}: negative radical dimension")
    if len(row.dyn_g) != EXCEPTIONAL_RANK[pair.g_type]:
        probs.append(f"{label} row {row.row_no}: dyn_g has {len(row.dyn_g)} weights, rank is {EXCEPTIONAL_RANK[pair.g_type]}")
    if len(row.dyn_k) != pair.k_type.rank():
        probs.append(f"{label} row {row.row_no}: dyn_k has {len(row.dyn_k)} weights, rank of k is {pair.k_type.rank()}")
    return probs


def check_row(row: ExceptionalRow, pairs: dict[str, PairData] | None = None) -> bool:
    return not row_problems(row, pairs)


def _ints(text: str) -> tuple[int, ...]:
    return tuple(int(x) for x in text.replace("−", "-").split(","))


def parse_dataset(text: str) -> Dataset:
    """Parse and fully validate the table file; any defect refuses the whole load."""
    schema = None
    notes: list[str] = []
    pairs: dict[str, PairData] = {}
    raw: dict[str, list[ExceptionalRow]] = {}
    for lineno, line in enumerate(text.splitlines(), 1):
        if not line.strip():
            continue
        if line.startswith("#"):
            body = line[1:].strip()
            if body.startswith("schema "):
                schema = body.split()[1]
            elif body.startswith("review:"):
                notes.append(body)
            continue
        f = line.split("\t")
        try:
            if f[0] == "pair":
                _, form, gt, dk, dp, kt = f
                pairs[form] = PairData(form, gt, int(dk), int(dp), LeviType.parse(kt))
            elif f[0] == "orbit":
                _, form, no, dk, dg, dim, cnt, levi, radu = f
                if form not in pairs:
                    raise ValueError(f"orbit row for {form} precedes its pair line")
                row = ExceptionalRow(
                    RealFormId.exceptional(form), int(no), _ints(dk), _ints(dg), int(dim), int(cnt),
                    LeviType.parse(levi), int(radu),
                )
                raw.setdefault(form, []).append(row)
            else:
                raise ValueError(f"unknown record type {f[0]!r}")
        except ValueError as exc:
            where = f"({f[1]}, row {f[2]})" if len(f) > 2 and f[0] == "orbit" else f"line {lineno}"
            raise DataIntegrityError(f"schema violation at {where}: {exc}") from exc
    if schema != SCHEMA:
        raise DataIntegrityError(f"data schema {schema!r} does not match expected {SCHEMA!r}")
    for label, (k, p, kt) in EXCEPTIONAL_PAIRS.items():
        pd = pairs.get(label)
        if pd is None or (pd.dim_k, pd.dim_p, str(pd.k_type)) != (k, p, kt):
            raise DataIntegrityError(f"symmetric-pair data for {label} disagrees with the built-in table")
        if pd.k_type.dimension() != k:
            raise DataIntegrityError(f"{label}: k of type {kt} has dimension {pd.k_type.dimension()}, not {k}")
    if set(pairs) != set(EXCEPTIONAL_PAIRS):
        raise DataIntegrityError("unexpected symmetric-pair lines in the data file")
    for label, rows in raw.items():
        for i, row in enumerate(rows, 1):
            if row.row_no != i:
                raise DataIntegrityError(f"({label}, row {row.row_no}): row numbers must run 1, 2, ... in order")
            probs = row_problems(row, pairs)
            if probs:
                raise DataIntegrityError(f"({label}, row {row.row_no}): " + "; ".join(probs))
    return Dataset(schema, pairs, {k: tuple(v) for k, v in raw.items()}, tuple(notes))


@functools.lru_cache(maxsize=None)
def _shipped() -> Dataset:
    text = resources.files("nilpotent_selfdual").joinpath("data/exceptional_tables.tsv").read_text("utf-8")
    return parse_dataset(text)


def load_tables(path: str | Path | None = None) -> Dataset:
    """The shipped dataset (cached), or the one at ``path``."""
    if path is None:
        return _shipped()
    return parse_dataset(Path(path).read_text("utf-8"))


def _as_label(form: RealFormId | str) -> str:
    if isinstance(form, str):
        form = parse_form(form)
    if form.family is not Family.EXCEPTIONAL:
        raise FormError(f"{form} is a classical form; the exceptional tables cover only exceptional forms",
                        code="validation.not_exceptional")
    if form.label not in EXCEPTIONAL_PAIRS:
        raise FormError(f"unknown exceptional real form {form.label!r}")
    return form.label  # type: ignore[return-value]


def query(
    form: RealFormId | str,
    predicate: Callable[[ExceptionalRow], bool] | None = None,
    dataset: Dataset | None = None,
) -> list[ExceptionalRow]:
    """Rows of the form's table, in table order, optionally filtered."""
    ds = dataset or load_tables()
    rows = ds.rows.get(_as_label(form), ())
    return [r for r in rows if predicate is None or predicate(r)]


def affine_minus1_distinguished(form: RealFormId | str, dataset: Dataset | None = None) -> list[ExceptionalRow]:
    """Rows whose centralizer in ``k`` has no unipotent radical (``radu_dim == 0``)."""
    return query(form, lambda r: r.radu_dim == 0, dataset)


def weight_anomalies(dataset: Dataset | None = None) -> list[ExceptionalRow]:
    """Rows whose G-side diagram has a weight outside {0, 1, 2}.

    Characteristics of nilpotent G-orbits only take those values, so such a
    row is a transcription or typesetting defect of the source table.
    """
    ds = dataset or load_tables()
    return [r for rows in ds.rows.values() for r in rows if any(w not in (0, 1, 2) for w in r.dyn_g)]


def all_rows(dataset: Dataset | None = None) -> Iterable[ExceptionalRow]:
    ds = dataset or load_tables()
    for label in EXCEPTIONAL_PAIRS:
        yield from ds.rows.get(label, ())
