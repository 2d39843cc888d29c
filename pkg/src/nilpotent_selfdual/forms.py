"""Real forms of the classical and exceptional simple Lie algebras.

Each classical form is the Lie algebra of a group preserving a form on a
vector space over R, C or H. ``n`` below is always the dimension over that
division algebra.
"""

from __future__ import annotations

import enum
import re
from dataclasses import dataclass

from .errors import FormError, UsageError


class Family(enum.Enum):
    SL_R = "SL_R"
    SL_H = "SL_H"
    SU = "SU"
    SO = "SO"
    SP_R = "SP_R"
    SP_H = "SP_H"
    USTAR_H = "USTAR_H"
    SL_C = "SL_C"
    SO_C = "SO_C"
    SP_C = "SP_C"
    EXCEPTIONAL = "Exceptional"

    @property
    def signed(self) -> bool:
        """Families parametrised by a signature ``(p, q)``."""
        return self in (Family.SU, Family.SO, Family.SP_H)

    @property
    def complex(self) -> bool:
        return self in (Family.SL_C, Family.SO_C, Family.SP_C)

    @property
    def division_algebra(self) -> str:
        if self in (Family.SL_H, Family.SP_H, Family.USTAR_H):
            return "H"
        if self in (Family.SU, Family.SL_C, Family.SO_C, Family.SP_C):
            return "C"
        return "R"


# dim k, dim p, type of k (Cartan decomposition g = k + p)
EXCEPTIONAL_PAIRS: dict[str, tuple[int, int, str]] = {
    "E6(6)": (36, 42, "C_4"),
    "E6(2)": (38, 40, "A_1+A_5"),
    "E6(-14)": (46, 32, "D_5+T_1"),
    "E6(-26)": (52, 26, "F_4"),
    "E7(7)": (63, 70, "A_7"),
    "E7(-5)": (69, 64, "A_1+D_6"),
    "E7(-25)": (79, 54, "E_6+T_1"),
    "E8(8)": (120, 128, "D_8"),
    "E8(-24)": (136, 112, "A_1+E_7"),
    "F4(4)": (24, 28, "A_1+C_3"),
    "F4(-20)": (36, 16, "B_4"),
    "G2(2)": (6, 8, "2A_1"),
}

EXCEPTIONAL_RANK = {"E6": 6, "E7": 7, "E8": 8, "F4": 4, "G2": 2}


@dataclass(frozen=True)
class RealFormId:
    """A real form. ``args`` is ``(p, q)`` for signed families, ``(n,)`` otherwise."""

    family: Family
    args: tuple[int, ...] = ()
    label: str | None = None

    @classmethod
    def of(cls, family: Family, *args: int) -> "RealFormId":
        return cls(family, tuple(args))

    @classmethod
    def exceptional(cls, label: str) -> "RealFormId":
        return cls(Family.EXCEPTIONAL, (), label)

    @property
    def n(self) -> int:
        if self.family is Family.EXCEPTIONAL:
            raise FormError("exceptional forms have no defining-module dimension")
        return sum(self.args)

    @property
    def p(self) -> int:
        return self.args[0]

    @property
    def q(self) -> int:
        if not self.family.signed:
            raise FormError(f"{self.family.value} has no signature")
        return self.args[1]

    def __str__(self) -> str:
        return format_form(self)


def _arity(family: Family) -> int:
    if family is Family.EXCEPTIONAL:
        return 0
    return 2 if family.signed else 1


def _check_shape(form: RealFormId) -> None:
    if len(form.args) != _arity(form.family):
        raise FormError(f"{form.family.value} takes {_arity(form.family)} integer parameter(s), got {form.args}")
    if any(not isinstance(a, int) or a < 0 for a in form.args):
        raise FormError(f"parameters must be non-negative integers, got {form.args}")


def low_rank(form: RealFormId) -> bool:
    """True for forms outside the standard non-redundant range.

    These are the small cases (``so`` on a space of dimension 2 or 4, ``u*`` of
    quaternionic dimension 1 or 2) which are either not simple or coincide with
    forms listed elsewhere. They are accepted only in non-strict mode.
    """
    f = form.family
    if f in (Family.SO, Family.SO_C):
        return form.n in (2, 4)
    if f is Family.USTAR_H:
        return form.n in (1, 2)
    return False


def validate(form: RealFormId, strict: bool = True) -> RealFormId:
    """Check the parameter constraints; returns the form unchanged."""
    _check_shape(form)
    f = form.family
    if f is Family.EXCEPTIONAL:
        if form.label not in EXCEPTIONAL_PAIRS:
            raise FormError(f"unknown exceptional real form {form.label!r}; known: {', '.join(EXCEPTIONAL_PAIRS)}",
                            code="validation.form.unknown_exceptional")
        return form
    n = form.n
    if f.signed and form.p < form.q:
        raise FormError(f"signature must be normalised so that p >= q, got ({form.p},{form.q})")
    if f in (Family.SL_R, Family.SL_C, Family.SU) and n < 2:
        raise FormError(f"{f.value} needs n >= 2, got n={n}")
    if f in (Family.SL_H, Family.SP_H) and n < 1:
        raise FormError(f"{f.value} needs n >= 1, got n={n}")
    if f in (Family.SP_R, Family.SP_C) and (n < 2 or n % 2):
        raise FormError(f"{f.value} needs an even n >= 2, got n={n}")
    if f in (Family.SO, Family.SO_C):
        if n < 2:
            raise FormError(f"{f.value} needs n >= 2, got n={n}")
        if strict and low_rank(form):
            raise FormError(f"{f.value} needs n = 3 or n >= 5 (n={n} is only accepted in non-strict mode)",
                            code="validation.form.low_rank")
    if f is Family.USTAR_H:
        if n < 1:
            raise FormError(f"USTAR_H needs n >= 1, got n={n}")
        if strict and low_rank(form):
            raise FormError(f"USTAR_H needs n >= 3 (n={n} is only accepted in non-strict mode)",
                            code="validation.form.low_rank")
    return form


def normalize(form: RealFormId, strict: bool = True) -> RealFormId:
    """Swap ``(p, q)`` into ``p >= q`` and validate."""
    _check_shape(form)
    if form.family.signed and form.p < form.q:
        form = RealFormId(form.family, (form.q, form.p), form.label)
    return validate(form, strict)


def complex_dimension(form: RealFormId) -> int:
    """Complex dimension of the complexified (or, for complex families, the) algebra."""
    _check_shape(form)
    f = form.family
    if f is Family.EXCEPTIONAL:
        if form.label not in EXCEPTIONAL_PAIRS:
            raise FormError(f"unknown exceptional real form {form.label!r}")
        k, p, _ = EXCEPTIONAL_PAIRS[form.label]
        return k + p
    n = form.n
    if f in (Family.SL_R, Family.SU, Family.SL_C):
        return n * n - 1
    if f is Family.SL_H:
        return 4 * n * n - 1
    if f in (Family.SO, Family.SO_C):
        return n * (n - 1) // 2
    if f in (Family.SP_R, Family.SP_C):
        return n * (n + 1) // 2
    if f is Family.SP_H:
        return n * (2 * n + 1)
    return n * (2 * n - 1)  # USTAR_H


def real_dimension(form: RealFormId) -> int:
    """Dimension over R; complex families count twice their complex dimension."""
    d = complex_dimension(form)
    return 2 * d if form.family.complex else d


@dataclass(frozen=True)
class SymmetricPairDims:
    """Complex dimensions of ``k`` and ``p``; ``signature_t`` is that of the Killing form on ``g_R``."""

    dim_k: int
    dim_p: int
    signature_t: int


def symmetric_pair_dims(form: RealFormId) -> SymmetricPairDims:
    if form.family is not Family.EXCEPTIONAL or form.label not in EXCEPTIONAL_PAIRS:
        raise FormError(f"{form} is not a tabulated exceptional real form")
    k, p, _ = EXCEPTIONAL_PAIRS[form.label]
    return SymmetricPairDims(k, p, p - k)


def label_signature(label: str) -> int:
    """The parenthesised number in an exceptional label, e.g. -26 for ``E6(-26)``."""
    return int(label[label.index("(") + 1 : -1])


# isomorphisms ----------------------------------------------------------------

_F = Family
_ISO_CLASSES: list[tuple[tuple[Family, tuple[int, ...]], ...]] = [
    ((_F.SO, (2, 0)), (_F.USTAR_H, (1,))),
    ((_F.SO_C, (3,)), (_F.SL_C, (2,)), (_F.SP_C, (2,)), (_F.SO, (3, 1))),
    ((_F.SO, (3, 0)), (_F.SU, (2, 0)), (_F.SP_H, (1, 0)), (_F.SL_H, (1,))),
    ((_F.SO, (2, 1)), (_F.SU, (1, 1)), (_F.SL_R, (2,)), (_F.SP_R, (2,))),
    ((_F.SO_C, (5,)), (_F.SP_C, (4,))),
    ((_F.SO, (5, 0)), (_F.SP_H, (2, 0))),
    ((_F.SO, (4, 1)), (_F.SP_H, (1, 1))),
    ((_F.SO, (3, 2)), (_F.SP_R, (4,))),
    ((_F.SO_C, (6,)), (_F.SL_C, (4,))),
    ((_F.SO, (6, 0)), (_F.SU, (4, 0))),
    ((_F.SO, (5, 1)), (_F.SL_H, (2,))),
    ((_F.SO, (4, 2)), (_F.SU, (2, 2))),
    ((_F.SO, (3, 3)), (_F.SL_R, (4,))),
    ((_F.USTAR_H, (3,)), (_F.SU, (3, 1))),
    ((_F.USTAR_H, (4,)), (_F.SO, (6, 2))),
]

# Small forms that split as a sum of two simple algebras.
NON_SIMPLE: dict[RealFormId, str] = {
    RealFormId(_F.SO_C, (4,)): "sl(2,C) + sl(2,C)",
    RealFormId(_F.SO, (4, 0)): "su(2) + su(2)",
    RealFormId(_F.SO, (2, 2)): "sl(2,R) + sl(2,R)",
    RealFormId(_F.USTAR_H, (2,)): "su(2) + sl(2,R)",
}


def iso_equivalents(form: RealFormId) -> list[RealFormId]:
    """The other members of the form's low-rank isomorphism class (empty if none).

    ``so(3,1)`` is grouped with the complex algebras of type A_1 by viewing them
    as real Lie algebras.
    """
    form = normalize(form, strict=False)
    key = (form.family, form.args)
    for cls in _ISO_CLASSES:
        if key in cls:
            return [RealFormId(f, a) for f, a in cls if (f, a) != key]
    return []


def iso_classes() -> list[list[RealFormId]]:
    return [[RealFormId(f, a) for f, a in cls] for cls in _ISO_CLASSES]


# text form -------------------------------------------------------------------

_PATTERNS: list[tuple[re.Pattern[str], Family, str]] = [
    (re.compile(r"sl\((\d+),r\)"), _F.SL_R, "n"),
    (re.compile(r"sl\((\d+),h\)"), _F.SL_H, "n"),
    (re.compile(r"sl\((\d+),c\)"), _F.SL_C, "n"),
    (re.compile(r"su\((\d+),(\d+)\)"), _F.SU, "pq"),
    (re.compile(r"su\((\d+)\)"), _F.SU, "p"),
    (re.compile(r"so\((\d+),c\)"), _F.SO_C, "n"),
    (re.compile(r"so\((\d+),(\d+)\)"), _F.SO, "pq"),
    (re.compile(r"so\((\d+)\)"), _F.SO, "p"),
    (re.compile(r"sp\((\d+),r\)"), _F.SP_R, "n"),
    (re.compile(r"sp\((\d+),c\)"), _F.SP_C, "n"),
    (re.compile(r"sp\((\d+),(\d+)\)"), _F.SP_H, "pq"),
    (re.compile(r"sp\((\d+)\)"), _F.SP_H, "p"),
    (re.compile(r"u\*\((\d+),h\)"), _F.USTAR_H, "n"),
]
_EXC = re.compile(r"(e[678]|f4|g2)\((-?\d+)\)")


def parse_form(text: str) -> RealFormId:
    """Parse strings such as ``so(3,2)``, ``sl(2,H)``, ``u*(3,H)`` or ``E6(-26)``.

    No normalisation or validation happens here.
    """
    s = re.sub(r"\s+", "", text).replace("−", "-").lower()
    for pat, fam, shape in _PATTERNS:
        mt = pat.fullmatch(s)
        if mt:
            vals = [int(g) for g in mt.groups()]
            if shape == "p":
                vals.append(0)
            return RealFormId(fam, tuple(vals))
    mt = _EXC.fullmatch(s)
    if mt:
        label = f"{mt.group(1).upper()}({int(mt.group(2))})"
        return RealFormId.exceptional(label)
    raise UsageError(f"unrecognised real form {text!r}", token=text, code="usage.form")


def format_form(form: RealFormId) -> str:
    f = form.family
    if f is Family.EXCEPTIONAL:
        return str(form.label)
    a = form.args
    return {
        _F.SL_R: lambda: f"sl({a[0]},R)",
        _F.SL_H: lambda: f"sl({a[0]},H)",
        _F.SL_C: lambda: f"sl({a[0]},C)",
        _F.SU: lambda: f"su({a[0]},{a[1]})",
        _F.SO: lambda: f"so({a[0]},{a[1]})",
        _F.SO_C: lambda: f"so({a[0]},C)",
        _F.SP_R: lambda: f"sp({a[0]},R)",
        _F.SP_C: lambda: f"sp({a[0]},C)",
        _F.SP_H: lambda: f"sp({a[0]},{a[1]})",
        _F.USTAR_H: lambda: f"u*({a[0]},H)",
    }[f]()


def classical_forms(max_n: int, max_quaternionic_n: int | None = None, strict: bool = True) -> list[RealFormId]:
    """Every valid classical form (real and complex) with ``n <= max_n``, ``p >= q``."""
    hmax = max_n if max_quaternionic_n is None else min(max_n, max_quaternionic_n)
    out: list[RealFormId] = []
    for n in range(1, max_n + 1):
        cands = [RealFormId(_F.SL_R, (n,)), RealFormId(_F.SL_C, (n,)), RealFormId(_F.SO_C, (n,)),
                 RealFormId(_F.SP_R, (n,)), RealFormId(_F.SP_C, (n,))]
        cands += [RealFormId(fam, (n - q, q)) for fam in (_F.SU, _F.SO) for q in range(0, n // 2 + 1)]
        if n <= hmax:
            cands += [RealFormId(_F.SL_H, (n,)), RealFormId(_F.USTAR_H, (n,))]
            cands += [RealFormId(_F.SP_H, (n - q, q)) for q in range(0, n // 2 + 1)]
        for c in cands:
            try:
                validate(c, strict)
            except FormError:
                continue
            out.append(c)
    order = [f for f in Family]
    out.sort(key=lambda f: (order.index(f.family), f.n, tuple(-a for a in f.args)))
    return out
