"""Command-line interface.

    nilpotent-selfdual enumerate --form "so(3,3)"
    nilpotent-selfdual classify --form "su(2,1)" --label "[3:(1,0)]"
    nilpotent-selfdual selfdual --form "G2(2)" --json
    nilpotent-selfdual exceptional --form "E7(7)" --affine
    nilpotent-selfdual dims --form "sp(4,R)" --label "[4:(1,0)]"
    nilpotent-selfdual join --dims 5,2,0
    nilpotent-selfdual verify --max-n 5
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Sequence

from . import __version__
from . import classical_orbits as co
from . import exceptional as ex
from . import forms as F
from . import oracle
from . import selfdual as sd
from .errors import NilpotentError, OracleMismatch, UsageError, ValidationError

SCHEMA_VERSION = "1"


@dataclass
class CommandResult:
    status: str
    payload: Any
    schema_version: str = SCHEMA_VERSION
    exit_code: int = 0
    table: list[str] = field(default_factory=list, repr=False)

    def to_json(self) -> dict:
        return {"status": self.status, "payload": self.payload, "schema_version": self.schema_version}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message, code="usage.arguments")

    def exit(self, status: int = 0, message: str | None = None) -> None:  # type: ignore[override]
        if status:
            raise UsageError(message or "bad arguments", code="usage.arguments")
        raise _EarlyExit(message or "")


class _EarlyExit(Exception):
    """Raised for --help; carries the text to print."""


def _parser() -> _Parser:
    common = _Parser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="machine-readable output")
    p = _Parser(prog="nilpotent-selfdual", description="Self-dual nilpotent orbit closures of symmetric spaces.",
                parents=[common])
    p.add_argument("--version", action="store_true", help="print the version and exit")
    sub = p.add_subparsers(dest="command", parser_class=_Parser)

    def add(name: str, help_: str) -> _Parser:
        return sub.add_parser(name, help=help_, parents=[common])

    s = add("enumerate", "list nilpotent orbits of a classical form")
    s.add_argument("--form", required=True)
    s.add_argument("--non-strict", action="store_true", help="accept low-rank forms such as so(2,2)")
    s = add("classify", "compactness and self-duality verdict for one orbit label")
    s.add_argument("--form", required=True)
    s.add_argument("--label", required=True)
    s.add_argument("--non-strict", action="store_true")
    s = add("selfdual", "list the self-dual K-orbits of a real form")
    s.add_argument("--form", required=True)
    s.add_argument("--non-strict", action="store_true")
    s = add("exceptional", "rows of an exceptional table")
    s.add_argument("--form", required=True)
    s.add_argument("--affine", action="store_true", help="only rows with trivial unipotent radical")
    s = add("dims", "dimension data for one orbit label")
    s.add_argument("--form", required=True)
    s.add_argument("--label", required=True)
    s.add_argument("--non-strict", action="store_true")
    s = add("join", "projective dimension of a join")
    s.add_argument("--dims", required=True, help="comma-separated projective dimensions")
    s = add("verify", "run the matrix oracle sweep")
    s.add_argument("--max-n", type=int, required=True)
    s.add_argument("--max-quaternionic-n", type=int, default=3)
    s.add_argument("--family", help="restrict to a single form")
    s.add_argument("--details", action="store_true", help="include every label check in the JSON payload")
    return p


def _form(text: str, strict: bool = True, classical: bool | None = None) -> F.RealFormId:
    form = F.normalize(F.parse_form(text), strict=strict)
    if classical is True and form.family is F.Family.EXCEPTIONAL:
        raise ValidationError(f"{text} is exceptional; use the `exceptional` or `selfdual` command",
                              code="validation.exceptional_form")
    return form


def _columns(rows: list[dict], keys: list[str]) -> list[str]:
    if not rows:
        return ["(no rows)"]

    def cell(v: Any) -> str:
        if v is None:
            return "-"
        if isinstance(v, bool):
            return "yes" if v else "no"
        if isinstance(v, list):
            return ",".join(str(x) for x in v)
        return str(v)

    grid = [keys] + [[cell(r.get(k)) for k in keys] for r in rows]
    widths = [max(len(g[i]) for g in grid) for i in range(len(keys))]
    return ["  ".join(c.ljust(w) for c, w in zip(line, widths)).rstrip() for line in grid]


def _pairs(d: dict) -> list[str]:
    w = max(len(k) for k in d)
    return [f"{k.ljust(w)}  {v}" for k, v in d.items()]


def _enumerate(a: argparse.Namespace) -> CommandResult:
    form = _form(a.form, not a.non_strict, classical=True)
    recs = [r.to_json() for r in co.enumerate_orbits(form, strict=not a.non_strict)]
    dim_key = "complex_dim" if form.family.complex else "real_dim"
    payload = {"form": F.format_form(form), "low_rank": F.low_rank(form), "count": len(recs), "records": recs}
    table = [f"{F.format_form(form)}: {len(recs)} nonzero nilpotent orbit(s)"]
    if F.low_rank(form):
        table[0] += " [low-rank form, outside the standard range]"
    table += _columns(recs, ["label", "component_index", "component_count", dim_key])
    return CommandResult("ok", payload, table=table)


def _classify(a: argparse.Namespace) -> CommandResult:
    form = _form(a.form, not a.non_strict, classical=True)
    if form.family.complex:
        raise ValidationError("compactness is defined for real forms only", code="validation.complex_form")
    data = co.parse_label(form, a.label)
    count = co.component_count(form, data)
    real_dim = co.orbit_dimension(form, data)
    compact = sd.is_compact(form, data)
    k = sd.ks_k_orbit(co.OrbitRecord(form, co.OrbitLabel(data, 1, count), real_dim=real_dim))
    payload = {
        "form": F.format_form(form),
        "label": co.format_label(data),
        "component_count": count,
        "real_dim": real_dim,
        "compact": compact,
        "minus1_distinguished": k.minus1_distinguished,
        "self_dual": k.self_dual,
        "complex_dim": k.complex_dim,
        "g_orbit_complex_dim": k.g_orbit_complex_dim,
        "projective_dim": k.projective_dim,
    }
    return CommandResult("ok", payload, table=_pairs(payload))


def _selfdual(a: argparse.Namespace) -> CommandResult:
    form = _form(a.form, not a.non_strict)
    recs = [r.to_json() for r in sd.list_selfdual(form, strict=not a.non_strict)]
    payload = {"form": F.format_form(form), "count": len(recs), "records": recs}
    table = [f"{F.format_form(form)}: {len(recs)} self-dual K-orbit closure(s)"]
    if form.family is F.Family.EXCEPTIONAL:
        keys = ["row_no", "dyn_k", "dyn_g", "complex_dim", "projective_dim", "intersection_count"]
    else:
        keys = ["label", "component_index", "component_count", "complex_dim", "projective_dim"]
    table += _columns(recs, keys)
    return CommandResult("ok", payload, table=table)


def _exceptional(a: argparse.Namespace) -> CommandResult:
    form = F.parse_form(a.form)
    if form.family is not F.Family.EXCEPTIONAL:
        raise ValidationError(f"{a.form} is classical; use `enumerate` or `selfdual`", code="validation.not_exceptional")
    form = F.normalize(form)
    rows = ex.affine_minus1_distinguished(form) if a.affine else ex.query(form)
    pair = F.symmetric_pair_dims(form)
    recs = [r.to_json() for r in rows]
    payload = {
        "form": form.label, "dim_k": pair.dim_k, "dim_p": pair.dim_p, "signature_t": pair.signature_t,
        "affine_only": a.affine, "count": len(recs), "rows": recs,
    }
    table = [f"{form.label}: dim k = {pair.dim_k}, dim p = {pair.dim_p}, {len(recs)} row(s)"]
    table += _columns(recs, ["row_no", "dyn_k", "dyn_g", "dim_k_orbit", "intersection_count", "levi", "radu_dim"])
    return CommandResult("ok", payload, table=table)


def _dims(a: argparse.Namespace) -> CommandResult:
    form = _form(a.form, not a.non_strict, classical=True)
    data = co.parse_label(form, a.label)
    base = co.base_of(data)
    payload: dict[str, Any] = {
        "form": F.format_form(form),
        "label": co.format_label(data),
        "partition": list(base.parts),
        "transpose": list(co.transpose(base).parts),
        "component_count": co.component_count(form, data),
        "algebra_real_dim": F.real_dimension(form),
    }
    dim = co.orbit_dimension(form, data)
    if form.family.complex:
        payload["complex_dim"] = dim
    else:
        payload["real_dim"] = dim
        payload["k_orbit_complex_dim"] = dim // 2
        parent = co.complex_parent(form)
        payload["complex_parent"] = F.format_form(parent)
        payload["complex_parent_orbit_dim"] = co.orbit_dimension(parent, co.complexified_partition(form, data))
    return CommandResult("ok", payload, table=_pairs(payload))


def _join(a: argparse.Namespace) -> CommandResult:
    try:
        dims = [int(x) for x in a.dims.split(",")]
    except ValueError:
        raise UsageError(f"--dims expects comma-separated integers, got {a.dims!r}", token=a.dims, code="usage.dims")
    pd = sd.join_projective_dim(dims)
    payload = {"dims": dims, "projective_dim": pd}
    return CommandResult("ok", payload, table=[str(pd)])


def _verify(a: argparse.Namespace) -> CommandResult:
    if a.max_n < 1:
        raise ValidationError("--max-n must be positive", code="validation.max_n")
    fam = F.parse_form(a.family) if a.family else None
    if fam is not None and fam.family is F.Family.EXCEPTIONAL:
        raise ValidationError("the oracle covers classical forms only", code="validation.exceptional_form")
    report = oracle.sweep(a.max_n, a.max_quaternionic_n, fam)
    payload = report.to_json()
    if not a.details:
        payload.pop("checks")
    table = [f"oracle sweep: {len(report.forms)} form(s), {len(report.checks)} label(s)"]
    for c in report.checks:
        mark = "ok  " if c.ok else "FAIL"
        table.append(f"{mark} {F.format_form(c.form):10} {c.label:28} dim {c.formula_dim}/{c.oracle_dim}"
                     + ("" if c.compact_rule is None else f" compact {c.compact_rule}/{c.compact_oracle}"))
        table += [f"     {p}" for p in c.problems]
    table.append("PASS" if report.ok else f"FAIL: {len(report.failures)} mismatch(es)")
    if not report.ok:
        exc = OracleMismatch(f"{len(report.failures)} label(s) disagree with the oracle")
        return CommandResult("error", {"code": exc.code, "message": str(exc), **payload},
                             exit_code=exc.exit_status, table=table)
    return CommandResult("ok", payload, table=table)


_COMMANDS = {
    "enumerate": _enumerate, "classify": _classify, "selfdual": _selfdual, "exceptional": _exceptional,
    "dims": _dims, "join": _join, "verify": _verify,
}


def _error(exc: NilpotentError) -> CommandResult:
    payload = {"code": exc.code, "message": str(exc)}
    token = getattr(exc, "token", None)
    if token is not None:
        payload["token"] = token
    return CommandResult("error", payload, exit_code=exc.exit_status, table=[f"error [{exc.code}]: {exc}"])


def run(argv: Sequence[str]) -> CommandResult:
    """Parse ``argv`` and dispatch; never raises for user errors."""
    try:
        args = _parser().parse_args(list(argv))
        if args.version:
            return CommandResult("ok", {"version": __version__}, table=[__version__])
        if not args.command:
            raise UsageError("a command is required: " + ", ".join(_COMMANDS), code="usage.arguments")
        result = _COMMANDS[args.command](args)
    except _EarlyExit as e:
        return CommandResult("ok", {"help": str(e)}, table=[str(e)] if str(e) else [])
    except NilpotentError as exc:
        result = _error(exc)
    return result


def wants_json(argv: Sequence[str]) -> bool:
    return "--json" in argv


def main(argv: Sequence[str] | None = None) -> int:
    argv = list(sys.argv[1:] if argv is None else argv)
    result = run(argv)
    if not result.table and result.status == "ok" and not wants_json(argv):
        return result.exit_code
    if wants_json(argv):
        print(json.dumps(result.to_json(), sort_keys=True, indent=2))
    else:
        stream = sys.stdout if result.status == "ok" else sys.stderr
        if result.status == "error" and result.table and result.table[-1].startswith("FAIL"):
            print("\n".join(result.table), file=sys.stdout)
        else:
            print("\n".join(result.table), file=stream)
    return result.exit_code


if __name__ == "__main__":
    raise SystemExit(main())
