"""Brute-force matrix oracle for the classical orbit data.

For a label we build an explicit sl2-triple ``(e, h, f)`` inside the form's
Lie algebra: the module is a sum of ``T_d (x) S_d`` with ``S_d`` the simple
d-dimensional sl2-module and the form assembled from invariant forms on the
pieces. Centralizers are then exact null-space solves, and compactness of the
reductive part of the centralizer is tested by definiteness of ``Re tr(XY)``.

Quaternionic spaces ``H^n`` are realised on ``C^{2n}`` with coordinates
ordered ``(e_1..e_n, je_1..je_n)``. A complex matrix is quaternionic exactly
when ``A M = M conj(A)`` with ``M = [[0, -I], [I, 0]]``, and a quaternionic
form is carried by its complex part, a sesquilinear form with Gram matrix
``G`` satisfying ``M^T G conj(M) = conj(G)``.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable, Sequence

from . import forms as F
from .classical_orbits import (
    LabelData,
    base_of,
    check_label,
    enumerate_labels,
    format_label,
    orbit_dimension,
)
from .errors import OracleMismatch, ValidationError
from .exact import (
    ExactMatrix,
    block_diag,
    bracket,
    hermitian_inertia,
    inverse,
    kron,
    place,
    rank,
    solve_subspace,
    symmetric_inertia,
)
from .forms import Family, RealFormId
from .partitions import FinePartition
from .selfdual import is_compact

KINDS = ("symmetric", "skew-symmetric", "hermitian", "skew-hermitian")
_ALLOWED = {
    "R": ("symmetric", "skew-symmetric"),
    "C": KINDS,
    "H": ("hermitian", "skew-hermitian"),
}


class FormAbsent(ValidationError):
    code = "validation.form_absent"


# standard sl2 modules ----------------------------------------------------------

@lru_cache(maxsize=None)
def sl2_module(d: int) -> tuple[ExactMatrix, ExactMatrix, ExactMatrix]:
    """``(e, h, f)`` on S_d with basis v_0..v_{d-1}: e v_k = v_{k-1}, h v_k = (d-1-2k) v_k."""
    if d < 1:
        raise ValueError("module dimension must be positive")
    e = {(k - 1, k): Fraction(1) for k in range(1, d)}
    f = {(k + 1, k): Fraction((k + 1) * (d - k - 1)) for k in range(d - 1)}
    h = {(k, k): Fraction(d - 1 - 2 * k) for k in range(d) if d - 1 - 2 * k}
    return ExactMatrix(d, d, e), ExactMatrix(d, d, h), ExactMatrix(d, d, f)


def quaternion_M(n: int) -> ExactMatrix:
    eye = ExactMatrix.identity(n)
    return place(2 * n, [(0, n, -eye), (n, 0, eye)])


def _double(r: ExactMatrix) -> ExactMatrix:
    return block_diag(r, r)


def _real_basis(n: int) -> list[ExactMatrix]:
    return [ExactMatrix.unit(n, n, i, j) for i in range(n) for j in range(n)]


def _complex_basis(n: int) -> list[ExactMatrix]:
    return [ExactMatrix.unit(n, n, i, j, im) for im in (False, True) for i in range(n) for j in range(n)]


def _quaternionic_basis(n: int) -> list[ExactMatrix]:
    """Real basis of the quaternionic matrices ``[[P, -conj Q], [Q, conj P]]`` on C^{2n}."""
    out = []
    for i in range(n):
        for j in range(n):
            for im in (False, True):
                s = Fraction(-1 if im else 1)
                one = Fraction(1)
                # P = E_ij or iE_ij
                re = {} if im else {(i, j): one, (n + i, n + j): one}
                imd = {(i, j): one, (n + i, n + j): s} if im else {}
                out.append(ExactMatrix(2 * n, 2 * n, re, imd))
                # Q = E_ij or iE_ij
                re = {} if im else {(n + i, j): one, (i, n + j): -one}
                imd = {(n + i, j): one, (i, n + j): one} if im else {}
                out.append(ExactMatrix(2 * n, 2 * n, re, imd))
    return out


def _gram_constraint(G: ExactMatrix, sesquilinear: bool) -> Callable[[ExactMatrix], ExactMatrix]:
    if sesquilinear:
        return lambda A: A.T @ G + G @ A.conj()
    return lambda A: A.T @ G + G @ A


def _kind_constraint(kind: str) -> Callable[[ExactMatrix], ExactMatrix]:
    return {
        "symmetric": lambda G: G.T - G,
        "skew-symmetric": lambda G: G.T + G,
        "hermitian": lambda G: G.T - G.conj(),
        "skew-hermitian": lambda G: G.T + G.conj(),
    }[kind]


def invariant_form_space(d: int, kind: str, domain: str = "R") -> list[ExactMatrix]:
    """All invariant forms of the given kind on S_d (over H: on S_d (x) H realised in C^{2d})."""
    if kind not in _ALLOWED.get(domain, ()):
        raise FormAbsent(f"no {kind} forms over {domain}")
    e, h, f = sl2_module(d)
    sesq = kind in ("hermitian", "skew-hermitian")
    if domain == "H":
        rep = [_double(x) for x in (e, h, f)]
        M = quaternion_M(d)
        basis = _complex_basis(2 * d)
        extra = [lambda G: M.T @ G @ M.conj() - G.conj()]
    else:
        rep = [e, h, f]
        # over C a bilinear solve with real data is the complexification of the real one
        basis = _complex_basis(d) if sesq else _real_basis(d)
        extra = []
    cons = [_kind_constraint(kind)] + extra
    # invariance: Phi(x.u, v) + Phi(u, x.v) = 0; the module matrices are real
    cons += [(lambda G, x=x: x.T @ G + G @ x) for x in rep]
    return solve_subspace(basis, cons)


def _positive_signature(G: ExactMatrix, kind: str) -> ExactMatrix:
    if kind == "symmetric":
        p, q, _ = symmetric_inertia(G.real_rows())
    elif kind == "hermitian":
        p, q, _ = hermitian_inertia(G)
    else:
        return G
    return -G if p < q else G


def form_exists(d: int, kind: str, domain: str) -> bool:
    """Existence grid of the fixed invariant forms on S_d.

    Over R and C this is exactly where nonzero invariant forms exist. Over H
    only Hermitian forms for odd d and skew-Hermitian forms for even d are
    fixed; the opposite parity does carry invariant forms (a real invariant
    form times a pure imaginary quaternion), a 3-dimensional family rather
    than a line, and those are not used.
    """
    odd = d % 2 == 1
    if domain == "R":
        return (kind == "symmetric") == odd and kind in _ALLOWED["R"]
    if domain == "C":
        if kind == "symmetric":
            return odd
        if kind == "skew-symmetric":
            return not odd
        return kind in KINDS
    if domain == "H":
        return (kind == "hermitian" and odd) or (kind == "skew-hermitian" and not odd)
    return False


@lru_cache(maxsize=None)
def invariant_form_on_Sd(d: int, kind: str, domain: str = "R") -> ExactMatrix:
    """Generator of the one-dimensional space of invariant forms of ``kind`` on S_d.

    Symmetric and Hermitian generators are signed so that ``p - q >= 0``.
    """
    if not form_exists(d, kind, domain):
        raise FormAbsent(f"no invariant {kind} form on S_{d} over {domain}")
    space = invariant_form_space(d, kind, domain)
    if not space:
        raise FormAbsent(f"no invariant {kind} form on S_{d} over {domain}")
    if len(space) != 1:
        raise OracleMismatch(f"invariant {kind} forms on S_{d} over {domain} form a {len(space)}-dimensional space")
    return _positive_signature(space[0], kind)


def _ipq(p: int, q: int) -> ExactMatrix:
    return ExactMatrix.diag([1] * p + [-1] * q)


def _alternating(r: int) -> ExactMatrix:
    """Standard alternating form on R^r (r even): ``[[0, I], [-I, 0]]``."""
    if r % 2:
        raise FormAbsent(f"no nondegenerate alternating form in odd dimension {r}")
    h = r // 2
    eye = ExactMatrix.identity(h)
    return place(r, [(0, h, eye), (h, 0, -eye)])


# models ------------------------------------------------------------------------

@dataclass(frozen=True)
class MatrixModel:
    """Explicit sl2-triple acting on the defining module of a classical form."""

    form: RealFormId
    data: LabelData
    domain: str
    rep_e: ExactMatrix
    rep_h: ExactMatrix
    rep_f: ExactMatrix
    gram: ExactMatrix | None
    form_kind: str
    quaternion_J: ExactMatrix | None
    sesquilinear: bool
    traceless: bool
    counts_complex: bool  # dims of complex families are complex dims of a real model

    @property
    def size(self) -> int:
        return self.rep_e.rows

    def rep(self, x: str) -> ExactMatrix:
        return {"e": self.rep_e, "h": self.rep_h, "f": self.rep_f}[x]


_KIND = {
    Family.SO: "symmetric", Family.SO_C: "symmetric",
    Family.SP_R: "skew-symmetric", Family.SP_C: "skew-symmetric",
    Family.SU: "hermitian", Family.SP_H: "hermitian", Family.USTAR_H: "skew-hermitian",
}


def _pq(data: LabelData, d: int, m: int) -> tuple[int, int]:
    if isinstance(data, FinePartition):
        for e, pq in data.split:
            if e == d:
                return pq
    return (m, 0)


def _theta_delta_real(fam: Family, data: LabelData, d: int, m: int) -> ExactMatrix:
    """Gram block on T_d (x) S_d for the real-matrix families."""
    p, q = _pq(data, d, m)
    odd = d % 2 == 1
    if fam in (Family.SO, Family.SO_C):
        if odd:
            return kron(_ipq(p, q), invariant_form_on_Sd(d, "symmetric"))
        return kron(_alternating(m), invariant_form_on_Sd(d, "skew-symmetric"))
    # SP_R, SP_C
    if odd:
        return kron(_alternating(m), invariant_form_on_Sd(d, "symmetric"))
    return kron(_ipq(p, q), invariant_form_on_Sd(d, "skew-symmetric"))


def _real_delta(d: int) -> ExactMatrix:
    return invariant_form_on_Sd(d, "symmetric" if d % 2 else "skew-symmetric")


def _quaternionic_theta(fam: Family, data: LabelData, d: int, m: int) -> tuple[ExactMatrix, ExactMatrix, ExactMatrix, ExactMatrix]:
    """Complex part of the form on T_d, split into the (e, je) blocks ``(EE, EJ, JE, JJ)``.

    ``I_{p,q}`` on H^r becomes ``diag(I_{p,q}, I_{p,q})``; ``j I_r`` becomes ``[[0, I], [-I, 0]]``.
    """
    p, q = _pq(data, d, m)
    signed = (fam is Family.SP_H) == (d % 2 == 1)
    z = ExactMatrix.zeros(m)
    if signed:
        i = _ipq(p, q)
        return i, z, z, i
    eye = ExactMatrix.identity(m)
    return z, eye, -eye, z


def build_model(data: LabelData, form: RealFormId) -> MatrixModel:
    """sl2-triple for the orbit labelled ``data`` inside the algebra of ``form``."""
    form = F.normalize(form, strict=False)
    check_label(form, data)
    fam = form.family
    base = base_of(data)
    blocks_e, blocks_h, blocks_f, grams = [], [], [], []
    for d, m in base.mult:
        e, h, f = sl2_module(d)
        eye = ExactMatrix.identity(m)
        blocks_e.append(kron(eye, e))
        blocks_h.append(kron(eye, h))
        blocks_f.append(kron(eye, f))
    R_e, R_h, R_f = block_diag(*blocks_e), block_diag(*blocks_h), block_diag(*blocks_f)
    domain = fam.division_algebra
    kind = _KIND.get(fam, "none")
    gram = None
    J = None
    if domain == "H":
        J = quaternion_M(base.n)
        R_e, R_h, R_f = _double(R_e), _double(R_h), _double(R_f)
        if fam is not Family.SL_H:
            parts: list[list[ExactMatrix]] = [[], [], [], []]
            for d, m in base.mult:
                delta = _real_delta(d)
                for slot, t in zip(parts, _quaternionic_theta(fam, data, d, m)):
                    slot.append(kron(t, delta))
            ee, ej, je, jj = (block_diag(*s) for s in parts)
            n = base.n
            gram = place(2 * n, [(0, 0, ee), (0, n, ej), (n, 0, je), (n, n, jj)])
    elif fam is Family.SU:
        gram = block_diag(*(kron(_ipq(*_pq(data, d, m)), invariant_form_on_Sd(d, "hermitian", "C"))
                            for d, m in base.mult))
    elif kind != "none":
        gram = block_diag(*(_theta_delta_real(fam, data, d, m) for d, m in base.mult))
    return MatrixModel(
        form=form, data=data, domain=domain, rep_e=R_e, rep_h=R_h, rep_f=R_f, gram=gram, form_kind=kind,
        quaternion_J=J, sesquilinear=kind in ("hermitian", "skew-hermitian"),
        traceless=fam in (Family.SL_R, Family.SL_H, Family.SL_C, Family.SU), counts_complex=fam.complex,
    )


def model_problems(model: MatrixModel) -> list[str]:
    """Structural checks: sl2 relations, form identities, algebra membership, signature."""
    e, h, f = model.rep_e, model.rep_h, model.rep_f
    probs = []
    if bracket(h, e) != e * 2 or bracket(h, f) != f * -2 or bracket(e, f) != h:
        probs.append("sl2 relations fail")
    G = model.gram
    if G is not None:
        ident = {"symmetric": G.T == G, "skew-symmetric": G.T == -G,
                 "hermitian": G.T == G.conj(), "skew-hermitian": G.T == -G.conj()}[model.form_kind]
        if not ident:
            probs.append(f"gram is not {model.form_kind}")
        if _is_singular(G):
            probs.append("gram is singular")
        gc = _gram_constraint(G, model.sesquilinear)
        if any(not gc(x).is_zero() for x in (e, h, f)):
            probs.append("triple does not preserve the form")
    if model.quaternion_J is not None:
        M = model.quaternion_J
        if any(x @ M != M @ x.conj() for x in (e, h, f)):
            probs.append("triple is not quaternionic")
        if G is not None and M.T @ G @ M.conj() != G.conj():
            probs.append("gram is not the complex part of a quaternionic form")
    sig = _signature_problem(model)
    if sig:
        probs.append(sig)
    return probs


def _is_singular(G: ExactMatrix) -> bool:
    """Complex rank test through the real embedding (columns ``g`` and ``i g``)."""
    n = G.rows
    emb = []
    for j in range(n):
        re_col = {i: v for (i, jj), v in G.re.items() if jj == j}
        im_col = {i: v for (i, jj), v in G.im.items() if jj == j}
        emb.append({**re_col, **{n + i: v for i, v in im_col.items()}})
        emb.append({**{i: -v for i, v in im_col.items()}, **{n + i: v for i, v in re_col.items()}})
    return rank(emb) < 2 * n


def _signature_problem(model: MatrixModel) -> str | None:
    G, form = model.gram, model.form
    if G is None:
        return None
    fam = form.family
    if fam is Family.SO:
        got = symmetric_inertia(G.real_rows())[:2]
        want = (form.p, form.q)
    elif fam is Family.SU:
        got = hermitian_inertia(G)[:2]
        want = (form.p, form.q)
    elif fam is Family.SP_H:
        got = hermitian_inertia(G)[:2]
        want = (2 * form.p, 2 * form.q)
    elif fam is Family.USTAR_H:
        got = hermitian_inertia(G.times_i())[:2]
        want = (form.n, form.n)
    else:
        return None
    return None if got == want else f"form has inertia {got}, expected {want}"


# centralizers --------------------------------------------------------------------

def _ambient_basis(model: MatrixModel) -> list[ExactMatrix]:
    n = model.size
    if model.domain == "H":
        return _quaternionic_basis(n // 2)
    if model.domain == "C" and not model.counts_complex:
        return _complex_basis(n)
    return _real_basis(n)


def _algebra_constraints(model: MatrixModel) -> list[Callable[[ExactMatrix], ExactMatrix]]:
    cons = []
    if model.gram is not None:
        cons.append(_gram_constraint(model.gram, model.sesquilinear))
    if model.traceless:
        def tr(A: ExactMatrix) -> ExactMatrix:
            re, im = A.trace()
            return ExactMatrix.from_rows([[(re, im)]])
        cons.append(tr)
    return cons


def algebra_basis(model: MatrixModel) -> list[ExactMatrix]:
    """Real basis of the form's Lie algebra in the model's coordinates."""
    return solve_subspace(_ambient_basis(model), _algebra_constraints(model))


def centralizer_basis(model: MatrixModel, centralize: Iterable[str], within: Sequence[ExactMatrix] | None = None) -> list[ExactMatrix]:
    basis = algebra_basis(model) if within is None else list(within)
    cons = [(lambda A, X=model.rep(x): A @ X - X @ A) for x in sorted(set(centralize))]
    return solve_subspace(basis, cons) if cons else basis


def centralizer_dim(model: MatrixModel, centralize: Iterable[str]) -> int:
    """Dimension (complex for complex families, else real) of the centralizer in the algebra."""
    return len(centralizer_basis(model, centralize))


def trace_form(basis: Sequence[ExactMatrix]) -> list[list[Fraction]]:
    return [[(X @ Y).trace()[0] for Y in basis] for X in basis]


def compact_oracle(model: MatrixModel) -> bool:
    """Is ``Re tr(X^2)`` negative definite on the centralizer of the whole triple?"""
    if model.counts_complex:
        raise ValidationError("compactness is defined for real forms only", code="validation.complex_form")
    zs = centralizer_basis(model, "ehf")
    pos, neg, zero = symmetric_inertia(trace_form(zs))
    return neg == len(zs)


# Cayley transforms ---------------------------------------------------------------

def bracket_ok(e: ExactMatrix, h: ExactMatrix, f: ExactMatrix) -> bool:
    return bracket(h, e) == e * 2 and bracket(h, f) == f * -2 and bracket(e, f) == h


def cayley(e: ExactMatrix, h: ExactMatrix, f: ExactMatrix) -> tuple[ExactMatrix, ExactMatrix, ExactMatrix]:
    """``e' = (e+f+ih)/2``, ``h' = i(e-f)``, ``f' = (e+f-ih)/2``.

    The variant with ``h' = e - f`` is not an sl2-triple (``ad(e - f)`` has
    eigenvalues 0 and +-2i), so the factor i sits on ``h`` and ``e - f``.
    """
    if not bracket_ok(e, h, f):
        raise ValidationError("input is not an sl2-triple", code="validation.bracket")
    half = Fraction(1, 2)
    ih = h.times_i()
    e2 = (e + f + ih) * half
    h2 = (e - f).times_i()
    f2 = (e + f - ih) * half
    return e2, h2, f2


def cayley_inverse(e2: ExactMatrix, h2: ExactMatrix, f2: ExactMatrix) -> tuple[ExactMatrix, ExactMatrix, ExactMatrix]:
    """``e = (e'+f'-ih')/2``, ``h = i(f'-e')``, ``f = (e'+f'+ih')/2``."""
    if not bracket_ok(e2, h2, f2):
        raise ValidationError("input is not an sl2-triple", code="validation.bracket")
    half = Fraction(1, 2)
    ih = h2.times_i()
    e = (e2 + f2 - ih) * half
    h = (f2 - e2).times_i()
    f = (e2 + f2 + ih) * half
    return e, h, f


def random_conjugate_triple(rng: random.Random, max_d: int = 5) -> tuple[ExactMatrix, ExactMatrix, ExactMatrix]:
    """The standard triple on S_d conjugated by a random invertible rational matrix."""
    d = rng.randint(2, max_d)
    while True:
        P = ExactMatrix.from_rows([[Fraction(rng.randint(-9, 9), rng.randint(1, 5)) for _ in range(d)] for _ in range(d)])
        try:
            Pi = inverse(P)
        except ValueError:
            continue
        return tuple(P @ x @ Pi for x in sl2_module(d))  # type: ignore[return-value]


# sweep ---------------------------------------------------------------------------

@dataclass
class LabelCheck:
    form: RealFormId
    label: str
    formula_dim: int
    oracle_dim: int
    algebra_dim: int
    compact_rule: bool | None = None
    compact_oracle: bool | None = None
    problems: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.problems

    def to_json(self) -> dict:
        return {
            "form": F.format_form(self.form), "label": self.label, "formula_dim": self.formula_dim,
            "oracle_dim": self.oracle_dim, "algebra_dim": self.algebra_dim,
            "compact_rule": self.compact_rule, "compact_oracle": self.compact_oracle,
            "ok": self.ok, "problems": self.problems,
        }


def check_label_with_oracle(form: RealFormId, data: LabelData) -> LabelCheck:
    """Compare formula dimension and compactness verdict against the matrix model."""
    model = build_model(data, form)
    form = model.form
    probs = model_problems(model)
    alg = algebra_basis(model)
    expected_alg = F.complex_dimension(form) if model.counts_complex else F.real_dimension(form)
    if len(alg) != expected_alg:
        probs.append(f"algebra has dimension {len(alg)}, expected {expected_alg}")
    ze = centralizer_basis(model, "e", alg)
    zs = centralizer_basis(model, "ehf", ze)
    ze0 = centralizer_basis(model, "h", ze)
    formula = orbit_dimension(form, data)
    oracle_dim = len(alg) - len(ze)
    if formula != oracle_dim:
        probs.append(f"formula gives {formula}, centralizer solve gives {oracle_dim}")
    if len(ze) < len(zs):
        probs.append("centralizer of the triple is larger than that of e")
    if len(ze0) != len(zs):
        probs.append(f"degree-0 part of z(e) has dimension {len(ze0)} but z(e,h,f) has {len(zs)}")
    check = LabelCheck(form, format_label(data), formula, oracle_dim, len(alg), problems=probs)
    if not model.counts_complex:
        pos, neg, zero = symmetric_inertia(trace_form(zs))
        check.compact_oracle = neg == len(zs)
        check.compact_rule = is_compact(form, data)
        if check.compact_oracle != check.compact_rule:
            probs.append(f"criterion says compact={check.compact_rule}, trace form says {check.compact_oracle}")
    return check


@dataclass
class SweepReport:
    checks: list[LabelCheck]
    forms: list[RealFormId]
    seconds: float

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[LabelCheck]:
        return [c for c in self.checks if not c.ok]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "forms": [F.format_form(f) for f in self.forms],
            "labels_checked": len(self.checks),
            "failures": [c.to_json() for c in self.failures],
            "checks": [c.to_json() for c in self.checks],
        }


def sweep_forms(max_n: int, max_quaternionic_n: int = 3, family: RealFormId | None = None) -> list[RealFormId]:
    if family is not None:
        return [F.normalize(family, strict=False)]
    return F.classical_forms(max_n, max_quaternionic_n, strict=False)


def sweep(max_n: int = 5, max_quaternionic_n: int = 3, family: RealFormId | None = None) -> SweepReport:
    """Oracle check of every label of every form in range (non-strict forms included)."""
    t0 = time.perf_counter()
    fs = sweep_forms(max_n, max_quaternionic_n, family)
    checks = []
    for form in fs:
        for data in enumerate_labels(form):
            checks.append(check_label_with_oracle(form, data))
    return SweepReport(checks, fs, time.perf_counter() - t0)
