import json
import subprocess
import sys

import pytest

from degentri import shipped
from degentri.cli import main, run

KIND_OF = {n: json.loads(shipped.shipped_path(n).read_text())["kind"] for n in shipped.shipped_names()}
BAD = [n for n in KIND_OF if n.endswith("-bad")]
# the monbicat carriers are covered by the suite check
GOOD = [n for n in KIND_OF if n not in BAD and not n.startswith("monbicat-")]


def path(name):
    return str(shipped.shipped_path(name))


def cli(*args):
    return run([str(a) for a in args])


@pytest.mark.parametrize("name", GOOD)
def test_validate_good_files(name):
    code, text = cli("validate", KIND_OF[name], path(name))
    assert code == 0, text
    assert text.rstrip().splitlines()[-1].startswith("status: pass")


@pytest.mark.parametrize("name", BAD)
def test_validate_bad_files(name):
    code, text = cli("validate", KIND_OF[name], path(name))
    assert code == 1
    assert "FAIL" in text and "status: fail" in text


def test_monbicat_carrier_validates():
    code, _ = cli("validate", "monbicat", path("monbicat-sigma-end2"))
    assert code == 0


@pytest.mark.parametrize("args", [
    ("validate", "braided", "/nonexistent.json"),
    ("validate", "monoid", "BRAIDED"),
    ("validate", "nonsense", "MONOID"),
    ("frobnicate",),
    (),
    ("enumerate", "cmonoids", "--order", "x"),
    ("compose", "braided-functor", "DDF", "DDF"),
    ("check", "xi3", "--max-order", "9"),
])
def test_usage_and_input_errors_exit_2(args):
    subst = {"BRAIDED": path("braided-z"), "MONOID": path("monoid-z3"), "DDF": path("dd-functor-id-z3pointed")}
    code, text = cli(*[subst.get(a, a) for a in args])
    assert code == 2, text


def test_json_report_shape():
    code, text = cli("--report", "json", "validate", "monoid", path("monoid-z3"))
    assert code == 0
    doc = json.loads(text)
    assert {"command", "status", "checks"} <= set(doc) <= {"command", "status", "checks", "witness", "result", "error"}
    assert doc["status"] == "pass"
    assert doc["checks"] and all(set(c) == {"name", "ok", "detail"} and c["ok"] for c in doc["checks"])
    # the flag may also follow the verb
    late = json.loads(cli("validate", "monoid", path("monoid-z3"), "--report", "json")[1])
    assert late["checks"] == doc["checks"] and late["status"] == "pass"


def test_json_error_report():
    code, text = cli("--report", "json", "validate", "monoid", "/nonexistent.json")
    assert code == 2
    doc = json.loads(text)
    assert doc["status"] == "error" and doc["error"]


def test_runs_are_byte_identical():
    for args in (("check", "derivations", "--count", "30", "--seed", "4"), ("counterexample", "z2"),
                 ("braiding", path("dd-z3pointed")), ("--report", "json", "witness", "xi4", "--base", "z2")):
        assert cli(*args) == cli(*args)


def test_braiding_reports_asymmetry():
    code, text = cli("--report", "json", "braiding", path("dd-z3pointed"))
    assert code == 0
    res = json.loads(text)["result"]
    assert res["symmetric"] is False
    code, text = cli("--report", "json", "braiding", path("dd-z"))
    assert json.loads(text)["result"]["symmetric"] is True


def test_counterexample():
    code, text = cli("counterexample", "z2")
    assert code == 0
    assert "2 iconic 2-cells, 1 image" in text


@pytest.mark.parametrize("args", [
    ("roundtrip", "uf", "braided-z3pointed"), ("roundtrip", "fu", "dd-z3pointed"),
    ("roundtrip", "fu", "dd-functor-double-z3pointed"), ("restricted", "check", "dd-discz4"),
    ("compose", "braided-functor", "braided-functor-double-z3pointed", "braided-functor-double-z3pointed"),
    ("compose", "dd-functor", "dd-functor-double-z3pointed", "dd-functor-id-z3pointed"),
    ("compose", "mb", "mb-transformation-end2", "mb-transformation-end2"),
    ("compose", "mb-modification", "mb-modification-id-sigma-end2", "mb-modification-id-sigma-end2"),
    ("compose", "td3-functor", "td3-functor-id-z2-d1", "td3-functor-id-z2-d1"),
])
def test_file_verbs_pass(args):
    code, text = cli(*[path(a) if a in KIND_OF else a for a in args])
    assert code == 0, text


@pytest.mark.parametrize("claim", ["non-category", "non-bicategory", "xi4", "xi4-unfaithful", "non-associative"])
def test_witnesses_found(claim):
    code, text = cli("--report", "json", "witness", claim, "--base", "z2")
    assert code == 0, text
    assert json.loads(text)["witness"]["found"] is True


def test_enumerate_counts():
    for k, n in ((1, 1), (2, 2), (3, 5), (4, 19)):
        code, text = cli("--report", "json", "enumerate", "cmonoids", "--order", k)
        assert code == 0 and json.loads(text)["result"]["count"] == n


def test_checks_pass():
    assert cli("check", "xi3", "--max-order", "2")[0] == 0
    assert cli("check", "derivations", "--count", "40")[0] == 0
    assert cli("audit", "diagrams")[0] == 0


def test_main_routes_errors_to_stderr(capsys):
    assert main(["validate", "monoid", "/nonexistent.json"]) == 2
    cap = capsys.readouterr()
    assert cap.out == "" and cap.err
    assert main(["validate", "monoid", path("monoid-z2")]) == 0
    assert capsys.readouterr().out.startswith("command:")


def test_console_script():
    p = subprocess.run([sys.executable, "-m", "degentri.cli", "validate", "monoid", path("monoid-z4")],
                       capture_output=True, text=True)
    assert p.returncode == 0 and "status: pass" in p.stdout
