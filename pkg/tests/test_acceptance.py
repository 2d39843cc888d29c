"""Acceptance criteria 1-9.

Each test records one PASS/FAIL line; ``conftest.py`` prints them in the
terminal summary, and ``python tests/test_acceptance.py`` prints them directly.
"""

import random
import sys
import time
from collections import Counter
from functools import lru_cache
from math import prod

from nilpotent_selfdual.classical_orbits import complex_parent, complexified_partition, enumerate_orbits, orbit_dimension
from nilpotent_selfdual.exceptional import all_rows, load_tables
from nilpotent_selfdual.forms import EXCEPTIONAL_PAIRS, Family, RealFormId, classical_forms, label_signature, normalize
from nilpotent_selfdual.oracle import bracket_ok, cayley, cayley_inverse, random_conjugate_triple, sweep
from nilpotent_selfdual.partitions import Flavor, enumerate_fine, enumerate_partitions, transpose
from nilpotent_selfdual.selfdual import is_compact, list_selfdual

R = RealFormId.of
RESULTS: dict[int, str] = {}


def record(n: int, ok: bool, text: str) -> None:
    RESULTS[n] = f"{'PASS' if ok else 'FAIL'} criterion {n}: {text}"
    print(RESULTS[n])
    assert ok, RESULTS[n]


def test_criterion_1_exceptional_row_identity():
    t0 = time.perf_counter()
    ds = load_tables()
    bad = [
        (r.realform.label, r.row_no) for r in all_rows(ds)
        if r.dim_k_orbit + r.levi.dimension() + r.radu_dim != EXCEPTIONAL_PAIRS[r.realform.label][0]
    ]
    spots = [(ds.rows["E6(6)"][0], 36), (ds.rows["E6(2)"][0], 38), (ds.rows["G2(2)"][0], 6)]
    spot_ok = all(r.dim_k_orbit + r.levi.dimension() + r.radu_dim == k for r, k in spots)
    spot_ok &= (ds.rows["E6(6)"][0].dim_k_orbit, ds.rows["E6(2)"][0].levi.dimension(), ds.rows["G2(2)"][0].dim_k_orbit) == (35, 16, 5)
    dt = time.perf_counter() - t0
    record(1, ds.total_rows == 149 and not bad and spot_ok and dt < 1,
           f"{ds.total_rows} rows, {len(bad)} identity failures, spot values ok={spot_ok}, {dt:.3f}s")


def test_criterion_2_selfdual_counts():
    want = {"E6(6)": 4, "E6(2)": 17, "E6(-26)": 2, "E6(-14)": 8, "E7(-5)": 17, "E7(7)": 27, "E7(-25)": 11,
            "E8(8)": 32, "E8(-24)": 16, "F4(4)": 10, "F4(-20)": 2, "G2(2)": 3}
    got = {k: len(list_selfdual(RealFormId.exceptional(k))) for k in want}
    diff = {k: (got[k], want[k]) for k in want if got[k] != want[k]}
    record(2, not diff, f"self-dual counts for 12 exceptional forms, mismatches {diff or 'none'}")


def test_criterion_3_signature_identity():
    bad = [k for k, (dk, dp, _) in EXCEPTIONAL_PAIRS.items() if dp - dk != label_signature(k)]
    record(3, not bad and len(EXCEPTIONAL_PAIRS) == 12, f"dim p - dim k = subscript for 12 forms, failures {bad or 'none'}")


@lru_cache(maxsize=None)
def _sweep():
    return sweep(max_n=5, max_quaternionic_n=3)


def test_criterion_4_oracle_dimension():
    rep = _sweep()
    bad = [c for c in rep.checks if c.formula_dim != c.oracle_dim or c.algebra_dim - c.oracle_dim < 0]
    record(4, not bad and len(rep.checks) > 0 and rep.seconds < 60,
           f"{len(rep.checks)} labels over {len(rep.forms)} forms, {len(bad)} dimension mismatches, {rep.seconds:.1f}s")


def test_criterion_5_oracle_compactness():
    rep = _sweep()
    real = [c for c in rep.checks if c.compact_oracle is not None]
    rule = {(str(c.form), c.label) for c in real if c.compact_rule}
    orc = {(str(c.form), c.label) for c in real if c.compact_oracle}
    other = [c for c in rep.checks if c.problems]
    record(5, rule == orc and not other and len(real) > 0,
           f"{len(real)} real-form labels, {len(rule)} compact by criteria, {len(orc)} by trace form, "
           f"{len(rule ^ orc)} disagreements, {len(other)} other oracle problems")


def _profile(form):
    form = normalize(form, strict=False)
    recs = enumerate_orbits(form, strict=False)
    compact = sum(is_compact(form, r.label.data) for r in recs)
    return len(recs), tuple(sorted(r.real_dim for r in recs)), compact


def test_criterion_6_isomorphisms():
    groups = [
        [R(Family.SO, 3, 3), R(Family.SL_R, 4)],
        [R(Family.SU, 1, 1), R(Family.SL_R, 2), R(Family.SO, 2, 1)],
        [R(Family.SO, 2, 3), R(Family.SP_R, 4)],
        [R(Family.SO, 1, 4), R(Family.SP_H, 1, 1)],
        [R(Family.SO, 1, 5), R(Family.SL_H, 2)],
        [R(Family.SO, 2, 4), R(Family.SU, 2, 2)],
    ]
    profiles = [[_profile(f) for f in g] for g in groups]
    agree = all(len(set(p)) == 1 for p in profiles)
    hand = profiles[0][0][0] == 6 and profiles[0][0][2] == 2 and profiles[1][0][:2] == (2, (2, 2))
    record(6, agree and hand, f"6 isomorphism groups agree={agree}; so(3,3): {profiles[0][0][0]} orbits, "
                              f"{profiles[0][0][2]} compact; su(1,1): dims {list(profiles[1][0][1])}")


def test_criterion_7_ks_parity():
    n_checked = 0
    bad = []
    for form in classical_forms(8):
        if form.family.complex:
            continue
        parent = complex_parent(form)
        for r in enumerate_orbits(form):
            n_checked += 1
            parent_dim = orbit_dimension(parent, complexified_partition(form, r.label.data))
            # 2 dim_C K.x = dim_C G.x = dim_R of the real orbit
            if r.real_dim % 2 or r.real_dim != parent_dim:
                bad.append((str(form), r.label))
    record(7, not bad and n_checked > 0,
           f"{n_checked} orbits (n <= 8): real dims even and equal to the complex parent orbit dim, "
           f"so half of each is dim_C K.x; {len(bad)} failures")


def test_criterion_8_cayley():
    rng = random.Random(20261016)
    bad = 0
    for _ in range(100):
        e, h, f = random_conjugate_triple(rng)
        e2, h2, f2 = cayley(e, h, f)
        if not bracket_ok(e2, h2, f2) or cayley_inverse(e2, h2, f2) != (e, h, f):
            bad += 1
    record(8, bad == 0, f"100 random conjugated triples, {bad} failures of bracket or round trip")


@lru_cache(maxsize=None)
def _brute(n: int, largest: int) -> int:
    if n == 0:
        return 1
    return sum(_brute(n - k, k) for k in range(1, min(n, largest) + 1))


def test_criterion_9_partitions():
    inv_bad = pn_bad = fine_bad = 0
    for n in range(1, 21):
        parts = enumerate_partitions(n, include_trivial=True)
        pn_bad += len(parts) != _brute(n, n)
        inv_bad += sum(transpose(transpose(m)) != m for m in parts)
        if n <= 12:
            fine_bad += sum(len(enumerate_fine(m, Flavor.FINE)) != prod(k + 1 for _, k in m.mult) for m in parts)
    record(9, not (inv_bad or pn_bad or fine_bad),
           f"n <= 20: {inv_bad} transpose failures, {pn_bad} p(n) mismatches; n <= 12: {fine_bad} fine-count mismatches")


def _main() -> int:
    failed = 0
    for name, fn in sorted((k, v) for k, v in globals().items() if k.startswith("test_criterion_")):
        try:
            fn()
        except AssertionError:
            failed += 1
    return 1 if failed else 0


if __name__ == "__main__":
    sys.exit(_main())
