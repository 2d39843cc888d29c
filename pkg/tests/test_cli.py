import json
import subprocess
import sys

import pytest

from nilpotent_selfdual import __version__
from nilpotent_selfdual.cli import main, run


def payload(*argv):
    r = run(list(argv))
    assert r.status == "ok", r.payload
    return r.payload


def test_selfdual_g22():
    p = payload("selfdual", "--form", "G2(2)", "--json")
    assert p["count"] == 3
    assert sorted(r["complex_dim"] for r in p["records"]) == [5, 5, 6]
    assert set(p["records"][0]) >= {"form", "row_no", "dyn_k", "dyn_g", "complex_dim", "projective_dim",
                                    "intersection_count", "self_dual", "minus1_distinguished"}


def test_classify_su21():
    p = payload("classify", "--form", "su(2,1)", "--label", "[3:(1,0)]")
    assert p["compact"] is True and p["self_dual"] is True and p["complex_dim"] == 3
    p = payload("classify", "--form", "so(3,3)", "--label", "[3:(1,1)]")
    assert p["compact"] is False and p["self_dual"] is False


def test_join():
    assert payload("join", "--dims", "0,0")["projective_dim"] == 1
    assert payload("join", "--dims", "5,2,0")["projective_dim"] == 9


def test_enumerate_shape():
    p = payload("enumerate", "--form", "so(3,3)")
    assert p["count"] == 6 and p["low_rank"] is False
    assert p["records"][0] == {
        "form": "so(3,3)", "label": "[5:(1,0),1:(0,1)]", "partition": [5, 1], "fine_split": [[5, 1, 0], [1, 0, 1]],
        "component_index": 1, "component_count": 1, "real_dim": 12,
    }
    p = payload("enumerate", "--form", "so(2,2)", "--non-strict")
    assert p["low_rank"] is True and p["count"] == 8


def test_exceptional_command():
    p = payload("exceptional", "--form", "E7(7)", "--affine")
    assert [r["row_no"] for r in p["rows"]] == [26, 27]
    p = payload("exceptional", "--form", "e6(6)")
    assert (p["dim_k"], p["dim_p"], p["signature_t"], p["count"]) == (36, 42, 6, 4)
    assert p["rows"][0]["levi"] == "0"


def test_dims_command():
    p = payload("dims", "--form", "so(3,3)", "--label", "[5:(1,0),1:(0,1)]")
    assert p["real_dim"] == 12 and p["k_orbit_complex_dim"] == 6
    assert p["complex_parent"] == "so(6,C)" and p["complex_parent_orbit_dim"] == 12
    p = payload("dims", "--form", "sl(3,C)", "--label", "[3]")
    assert p["complex_dim"] == 6 and "real_dim" not in p


def test_verify_command():
    p = payload("verify", "--max-n", "3", "--max-quaternionic-n", "2")
    assert p["ok"] and p["failures"] == [] and "checks" not in p
    p = payload("verify", "--max-n", "3", "--family", "su(2,1)", "--details")
    assert p["forms"] == ["su(2,1)"] and len(p["checks"]) == p["labels_checked"] == 3


@pytest.mark.parametrize(
    "argv,exit_code,code",
    [
        (["enumerate", "--form", "so(3,"], 2, "usage.form"),
        (["classify", "--form", "su(2,1)", "--label", "[3;1]"], 2, "usage.label"),
        (["join", "--dims", "a,b"], 2, "usage.dims"),
        (["bogus"], 2, "usage.arguments"),
        (["enumerate", "--form", "E6(6)"], 3, "validation.exceptional_form"),
        (["exceptional", "--form", "so(3,2)"], 3, "validation.not_exceptional"),
        (["exceptional", "--form", "E6(3)"], 3, "validation.form.unknown_exceptional"),
        (["enumerate", "--form", "so(2,2)"], 3, "validation.form.low_rank"),
        (["enumerate", "--form", "sp(3,R)"], 3, "validation.form"),
        (["classify", "--form", "su(2,1)", "--label", "[3:(0,1)]"], 3, "validation.label.signature"),
        (["classify", "--form", "su(2,1)", "--label", "[1:(2,1)]"], 3, "validation.label.trivial"),
        (["dims", "--form", "so(5,C)", "--label", "[4,1]"], 3, "validation.label.parity"),
        (["dims", "--form", "su(2,1)", "--label", "[2,1]"], 3, "validation.partition.unrefined"),
        (["dims", "--form", "sp(2,1)", "--label", "[2:(1,0),1:(1,0)]"], 3, "validation.partition.over_refined"),
        (["dims", "--form", "su(2,1)", "--label", "[2:(1,0),1:(0,1),1:(1,0)]"], 2, "usage.label"),
        (["classify", "--form", "sl(3,C)", "--label", "[3]"], 3, "validation.complex_form"),
        (["join", "--dims", "-1"], 3, "validation.negative_dim"),
        (["verify", "--max-n", "0"], 3, "validation.max_n"),
    ],
)
def test_error_paths(argv, exit_code, code):
    r = run(argv)
    assert r.status == "error"
    assert r.exit_code == exit_code
    assert r.payload["code"] == code
    assert r.payload["message"]


def test_usage_error_names_token():
    r = run(["enumerate", "--form", "so(3,"])
    assert r.payload["token"] == "so(3,"
    r = run(["classify", "--form", "su(2,1)", "--label", "[3;1]"])
    assert r.payload["token"] == "3;1"


def test_size_error_code():
    r = run(["dims", "--form", "su(2,1)", "--label", "[2:(1,0)]"])
    assert r.payload["code"] == "validation.label.size"


def test_json_output_is_deterministic(capsys):
    argv = ["selfdual", "--form", "su(3,2)", "--json"]
    assert main(argv) == 0
    first = capsys.readouterr().out
    assert main(argv) == 0
    assert capsys.readouterr().out == first
    doc = json.loads(first)
    assert doc["status"] == "ok" and doc["schema_version"] == "1"
    assert __version__ not in first


def test_table_output(capsys):
    assert main(["enumerate", "--form", "sl(3,R)"]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0].startswith("sl(3,R): 2")
    assert out[1].split() == ["label", "component_index", "component_count", "real_dim"]


def test_errors_go_to_stderr(capsys):
    assert main(["enumerate", "--form", "E6(6)"]) == 3
    cap = capsys.readouterr()
    assert cap.out == "" and "validation.exceptional_form" in cap.err


def test_version(capsys):
    assert main(["--version"]) == 0
    assert capsys.readouterr().out.strip() == __version__


def test_module_entry_point():
    out = subprocess.run([sys.executable, "-m", "nilpotent_selfdual", "join", "--dims", "0,0", "--json"],
                         capture_output=True, text=True, check=True).stdout
    assert json.loads(out)["payload"]["projective_dim"] == 1
