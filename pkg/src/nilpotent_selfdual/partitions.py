"""Partitions and their fine refinements.

A partition of ``n`` is stored by multiplicities ``m_d`` (number of parts equal
to ``d``). A fine refinement attaches a pair ``(p_d, q_d)`` with
``p_d + q_d = m_d`` to every part-size the flavor refines.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass
from typing import Iterable, Iterator, Mapping

from .errors import PartitionError, TrivialPartitionError, UsageError


@dataclass(frozen=True)
class Partition:
    """Partition of ``n`` held as ``((d, m_d), ...)`` with ``d`` descending and ``m_d > 0``."""

    mult: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        last = None
        for d, m in self.mult:
            if not (isinstance(d, int) and isinstance(m, int)):
                raise PartitionError(f"part sizes and multiplicities must be integers, got {d!r}:{m!r}")
            if d < 1:
                raise PartitionError(f"part size must be positive, got {d}")
            if m < 1:
                raise PartitionError(f"stored multiplicities must be positive, got m_{d}={m}")
            if last is not None and d >= last:
                raise PartitionError("part sizes must be strictly descending")
            last = d
        if not self.mult:
            raise PartitionError("a partition must have at least one part")

    @classmethod
    def from_mult(cls, mult: Mapping[int, int]) -> "Partition":
        for d, m in mult.items():
            if m < 0:
                raise PartitionError(f"negative multiplicity m_{d}={m}")
        return cls(tuple(sorted(((d, m) for d, m in mult.items() if m), reverse=True)))

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        counts: dict[int, int] = {}
        for d in parts:
            counts[d] = counts.get(d, 0) + 1
        return cls.from_mult(counts)

    @property
    def n(self) -> int:
        return sum(d * m for d, m in self.mult)

    def m(self, d: int) -> int:
        for e, k in self.mult:
            if e == d:
                return k
        return 0

    def as_dict(self) -> dict[int, int]:
        return dict(self.mult)

    @property
    def parts(self) -> tuple[int, ...]:
        return tuple(d for d, m in self.mult for _ in range(m))

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(d for d, _ in self.mult)

    def __str__(self) -> str:
        return format_partition(self)


def transpose(p: Partition) -> Partition:
    """Conjugate partition: the column lengths of the Young diagram."""
    parts = p.parts
    return Partition.from_parts(sum(1 for x in parts if x > i) for i in range(parts[0]))


def is_trivial(p: Partition) -> bool:
    return p.sizes == (1,)


def _require_nontrivial(p: Partition) -> None:
    if is_trivial(p):
        raise TrivialPartitionError(f"the parity predicates are not defined for the trivial partition 1^{p.n}")


def is_symmetric(p: Partition) -> bool:
    """Even part-sizes occur with even multiplicity."""
    _require_nontrivial(p)
    return all(m % 2 == 0 for d, m in p.mult if d % 2 == 0)


def is_skew_symmetric(p: Partition) -> bool:
    """Odd part-sizes occur with even multiplicity."""
    _require_nontrivial(p)
    return all(m % 2 == 0 for d, m in p.mult if d % 2 == 1)


class Flavor(enum.Enum):
    FINE = "fine"
    FINE_HERMITIAN = "fine-hermitian"
    FINE_SKEW_HERMITIAN = "fine-skew-hermitian"
    FINE_SYMMETRIC = "fine-symmetric"
    FINE_SKEW_SYMMETRIC = "fine-skew-symmetric"

    def refines(self, d: int) -> bool:
        if self is Flavor.FINE:
            return True
        if self in (Flavor.FINE_HERMITIAN, Flavor.FINE_SYMMETRIC):
            return d % 2 == 1
        return d % 2 == 0

    @property
    def has_signature(self) -> bool:
        return self in (Flavor.FINE, Flavor.FINE_HERMITIAN, Flavor.FINE_SYMMETRIC)


def base_admissible(base: Partition, flavor: Flavor) -> bool:
    """Parity condition a base partition must meet for ``flavor``."""
    if flavor is Flavor.FINE_SYMMETRIC:
        return all(m % 2 == 0 for d, m in base.mult if d % 2 == 0)
    if flavor is Flavor.FINE_SKEW_SYMMETRIC:
        return all(m % 2 == 0 for d, m in base.mult if d % 2 == 1)
    return True


@dataclass(frozen=True)
class FinePartition:
    """A base partition with ``(p_d, q_d)`` recorded for every refined part-size."""

    base: Partition
    flavor: Flavor
    split: tuple[tuple[int, tuple[int, int]], ...]

    def __post_init__(self) -> None:
        if not base_admissible(self.base, self.flavor):
            kind = "even" if self.flavor is Flavor.FINE_SYMMETRIC else "odd"
            raise PartitionError(f"{self.flavor.value} refinement needs {kind} part-sizes to have even multiplicity")
        expected = tuple(d for d, _ in self.base.mult if self.flavor.refines(d))
        got = tuple(d for d, _ in self.split)
        if got != expected:
            raise PartitionError(
                f"{self.flavor.value} split must cover exactly the part-sizes {list(expected)}, got {list(got)}"
            )
        for d, (p, q) in self.split:
            if p < 0 or q < 0 or p + q != self.base.m(d):
                raise PartitionError(f"split for d={d} must satisfy p+q = m_d = {self.base.m(d)}, got ({p},{q})")

    @classmethod
    def make(cls, base: Partition, flavor: Flavor, split: Mapping[int, tuple[int, int]]) -> "FinePartition":
        return cls(base, flavor, tuple(sorted(((d, tuple(pq)) for d, pq in split.items()), reverse=True)))

    def pq(self, d: int) -> tuple[int, int]:
        for e, pq in self.split:
            if e == d:
                return pq
        return (0, 0)

    def split_dict(self) -> dict[int, tuple[int, int]]:
        return dict(self.split)

    def __str__(self) -> str:
        return format_fine(self)


def signature(fp: FinePartition) -> int:
    """Sum of ``p_d - q_d`` over refined odd ``d``."""
    if not fp.flavor.has_signature:
        raise PartitionError(f"signature is not defined for the {fp.flavor.value} flavor")
    return sum(p - q for d, (p, q) in fp.split if d % 2 == 1)


def _partitions_desc(n: int, largest: int) -> Iterator[list[int]]:
    if n == 0:
        yield []
        return
    for first in range(min(n, largest), 0, -1):
        for rest in _partitions_desc(n - first, first):
            yield [first] + rest


def enumerate_partitions(n: int, include_trivial: bool = False) -> list[Partition]:
    """All partitions of ``n`` in descending lexicographic order of their part lists."""
    if n < 1:
        raise PartitionError(f"n must be positive, got {n}")
    out = [Partition.from_parts(ps) for ps in _partitions_desc(n, n)]
    if not include_trivial:
        out = [p for p in out if not is_trivial(p)]
    return out


def enumerate_fine(
    base: Partition, flavor: Flavor, signature_filter: int | None = None
) -> list[FinePartition]:
    """Every refinement of ``base`` of the given flavor.

    Order: part-sizes descending, and within each part-size ``p_d`` descending.
    An empty list comes back when the base fails the flavor's parity condition.
    """
    if not base_admissible(base, flavor):
        return []
    if signature_filter is not None and not flavor.has_signature:
        raise PartitionError(f"signature filter makes no sense for the {flavor.value} flavor")
    refined = [(d, m) for d, m in base.mult if flavor.refines(d)]
    out: list[FinePartition] = []

    def rec(i: int, acc: list[tuple[int, tuple[int, int]]], sgn: int) -> None:
        if i == len(refined):
            if signature_filter is None or sgn == signature_filter:
                out.append(FinePartition(base, flavor, tuple(acc)))
            return
        d, m = refined[i]
        for p in range(m, -1, -1):
            q = m - p
            rec(i + 1, acc + [(d, (p, q))], sgn + (p - q if d % 2 else 0))

    rec(0, [], 0)
    return out


# text syntax -----------------------------------------------------------------

_ITEM = re.compile(r"\s*(\d+)\s*(?::\s*\(\s*(\d+)\s*,\s*(\d+)\s*\))?\s*")


def format_partition(p: Partition) -> str:
    return "[" + ",".join(str(d) for d in p.parts) + "]"


def format_fine(fp: FinePartition) -> str:
    """``[5:(1,0),1:(0,1)]``; unrefined part-sizes are listed as repeated plain parts."""
    items = []
    for d, m in fp.base.mult:
        if fp.flavor.refines(d):
            p, q = fp.pq(d)
            items.append(f"{d}:({p},{q})")
        else:
            items.extend([str(d)] * m)
    return "[" + ",".join(items) + "]"


def _split_items(text: str) -> list[str]:
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise UsageError(f"label must be enclosed in brackets: {text!r}", token=text, code="usage.label")
    body = s[1:-1]
    items, depth, cur = [], 0, []
    for ch in body:
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
        if ch == "," and depth == 0:
            items.append("".join(cur))
            cur = []
        else:
            cur.append(ch)
    items.append("".join(cur))
    if items == [""]:
        raise UsageError(f"empty label: {text!r}", token=text, code="usage.label")
    return items


def parse_label_items(text: str) -> tuple[dict[int, int], dict[int, tuple[int, int]]]:
    """Split label text into plain part counts and explicit ``d:(p,q)`` entries."""
    plain: dict[int, int] = {}
    split: dict[int, tuple[int, int]] = {}
    for item in _split_items(text):
        mt = _ITEM.fullmatch(item)
        if mt is None:
            raise UsageError(f"cannot parse label item {item.strip()!r}", token=item.strip(), code="usage.label")
        d = int(mt.group(1))
        if mt.group(2) is None:
            plain[d] = plain.get(d, 0) + 1
        else:
            if d in split:
                raise UsageError(f"part-size {d} refined twice", token=item.strip(), code="usage.label")
            split[d] = (int(mt.group(2)), int(mt.group(3)))
    clash = set(plain) & set(split)
    if clash:
        d = min(clash)
        raise UsageError(f"part-size {d} given both plainly and refined", token=str(d), code="usage.label")
    return plain, split


def parse_partition(text: str) -> Partition:
    plain, split = parse_label_items(text)
    if split:
        raise UsageError("plain partition expected, found a refined entry", token=text, code="usage.label")
    return Partition.from_mult(plain)


def parse_fine(text: str, flavor: Flavor) -> FinePartition:
    plain, split = parse_label_items(text)
    mult = dict(plain)
    for d, (p, q) in split.items():
        mult[d] = p + q
    base = Partition.from_mult(mult)
    for d in plain:
        if flavor.refines(d):
            raise PartitionError(f"part-size {d} must be refined as {d}:(p,q) for the {flavor.value} flavor",
                                 code="validation.partition.unrefined")
    for d in split:
        if not flavor.refines(d):
            raise PartitionError(f"part-size {d} is not refined by the {flavor.value} flavor",
                                 code="validation.partition.over_refined")
    return FinePartition.make(base, flavor, {d: pq for d, pq in split.items() if sum(pq) > 0})
