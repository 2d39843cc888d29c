#!/usr/bin/env python3
"""Count self-dual K-orbit closures for every real form up to a given rank.

Classical forms come from the partition criteria, exceptional ones from the
shipped tables. Prints one line per form: total nonzero K-orbits, self-dual
ones, and the multiset of their projective dimensions.
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter

from nilpotent_selfdual.forms import EXCEPTIONAL_PAIRS, RealFormId, classical_forms, format_form
from nilpotent_selfdual.selfdual import list_k_orbits, list_selfdual


def census_line(form: RealFormId) -> str:
    if form.label:
        sd = list_selfdual(form)
        total = "-"
    else:
        ks = list_k_orbits(form)
        sd = [k for k in ks if k.self_dual]
        total = str(len(ks))
    dims = Counter(k.projective_dim for k in sd)
    spread = " ".join(f"{d}^{m}" if m > 1 else str(d) for d, m in sorted(dims.items()))
    return f"{format_form(form):10} {total:>6} {len(sd):>5}  {spread}".rstrip()


def main(argv: list[str] | None = None) -> int:
    p = argparse.ArgumentParser(description="self-dual orbit census")
    p.add_argument("--max-n", type=int, default=6)
    p.add_argument("--no-exceptional", action="store_true")
    a = p.parse_args(argv)
    print(f"{'form':10} {'orbits':>6} {'sd':>5}  projective dims")
    for form in classical_forms(a.max_n):
        if not form.family.complex:
            print(census_line(form))
    if not a.no_exceptional:
        for label in EXCEPTIONAL_PAIRS:
            print(census_line(RealFormId.exceptional(label)))
    return 0


if __name__ == "__main__":
    sys.exit(main())
