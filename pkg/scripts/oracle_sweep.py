#!/usr/bin/env python3
"""Run the matrix oracle over a range of classical real forms and summarise per family.

    python scripts/oracle_sweep.py --max-n 7 --max-quaternionic-n 4
"""

from __future__ import annotations

import argparse
import json
import sys
from collections import defaultdict
from dataclasses import asdict, dataclass

from nilpotent_selfdual.forms import format_form
from nilpotent_selfdual.oracle import sweep


@dataclass(frozen=True)
class SweepConfig:
    max_n: int = 5
    max_quaternionic_n: int = 3
    json: bool = False


def parse_args(argv: list[str] | None = None) -> SweepConfig:
    p = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    p.add_argument("--max-n", type=int, default=SweepConfig.max_n)
    p.add_argument("--max-quaternionic-n", type=int, default=SweepConfig.max_quaternionic_n)
    p.add_argument("--json", action="store_true")
    a = p.parse_args(argv)
    return SweepConfig(a.max_n, a.max_quaternionic_n, a.json)


def main(argv: list[str] | None = None) -> int:
    cfg = parse_args(argv)
    rep = sweep(cfg.max_n, cfg.max_quaternionic_n)
    per_family: dict[str, list[int]] = defaultdict(lambda: [0, 0, 0])
    for c in rep.checks:
        row = per_family[c.form.family.value]
        row[0] += 1
        row[1] += c.ok
        row[2] += bool(c.compact_rule)
    if cfg.json:
        doc = {"config": asdict(cfg), "ok": rep.ok, "seconds": round(rep.seconds, 2),
               "families": {k: dict(zip(["labels", "ok", "compact"], v)) for k, v in sorted(per_family.items())},
               "failures": [c.to_json() for c in rep.failures]}
        print(json.dumps(doc, indent=2, sort_keys=True))
    else:
        print(f"{len(rep.checks)} labels over {len(rep.forms)} forms in {rep.seconds:.1f}s")
        print(f"{'family':10} {'labels':>6} {'ok':>6} {'compact':>7}")
        for fam, (n, ok, comp) in sorted(per_family.items()):
            print(f"{fam:10} {n:6} {ok:6} {comp:7}")
        for c in rep.failures:
            print(f"FAIL {format_form(c.form)} {c.label}: {'; '.join(c.problems)}")
    return 0 if rep.ok else 5


if __name__ == "__main__":
    sys.exit(main())
