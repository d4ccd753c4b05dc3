import json
import subprocess
import sys

import pytest

from lorentz_invariants.catalog import angle_at, h_plus, theta_at
from lorentz_invariants.cli import (
    group_from_record,
    group_to_record,
    main,
    matrix_from_record,
    matrix_to_record,
    render,
    run,
    subspace_from_record,
)
from lorentz_invariants.polyring import algebras_equivalent

from conftest import REPO_DATA
from worked_example import REFERENCE_INVARIANTS, p4


def data(name):
    return str(REPO_DATA / name)


def write(tmp_path, name, record):
    path = tmp_path / name
    path.write_text(json.dumps(record) if not isinstance(record, str) else record)
    return str(path)


def test_invariants_of_worked_example():
    code, report = run(["invariants", "--group", data("example_2_2.group.json"), "--degree", "4"])
    assert code == 0 and report["status"] == "ok"
    gens = [p4(t) for t in report["result"]["generators"]]
    assert len(gens) == 3
    assert algebras_equivalent(gens, REFERENCE_INVARIANTS, 4)


def test_equivariants_of_worked_example():
    code, report = run(["equivariants", "--group", data("example_2_2.group.json")])
    assert code == 0
    assert len(report["result"]["module_generators"]) == 4


def test_check_metric():
    code, report = run(["check", "--matrix", data("J.matrix.json")])
    assert code == 0
    assert report["result"]["lorentz"] is True
    assert report["result"]["component"] == "LambdaT"


def test_fix_time_flip():
    code, report = run(["fix", "--group", data("lambdat_2d.group.json")])
    assert code == 0
    assert report["result"]["fix"] == {"ambient": 2, "basis": [["1", "0"]]}


def test_subspace_light_line_under_boost():
    code, report = run(
        ["subspace", "--subspace", data("light_line_2d.subspace.json"), "--group", data("htheta_2d.group.json")]
    )
    assert code == 0
    res = report["result"]
    assert res["type"] == "lightlike" and res["nondegenerate"] is False
    assert res["complement"] == {"ambient": 2, "basis": [["1", "-1"]]}


def test_subspace_symbolic_entries_warn(tmp_path):
    path = write(tmp_path, "w.json", {"ambient": 2, "basis": [["cosh(t)", "1"]]})
    code, report = run(["subspace", "--subspace", path])
    assert code == 0
    assert report["result"]["type"] is None and report["warnings"]
    code, report = run(["subspace", "--subspace", path, "--t", "2"])
    assert report["result"]["type"] == "spacelike"


def test_lines_and_planes():
    code, report = run(["lines", "--matrix", data("htheta.matrix.json"), "--t", "2"])
    assert code == 0 and report["result"]["complete"]
    assert sorted(i["types"][0] for i in report["result"]["items"]) == ["lightlike", "lightlike"]
    code, report = run(["planes", "--matrix", data("minus_lambdap_3d.matrix.json")])
    assert code == 0 and len(report["result"]["items"]) == 2


def test_catalog_commands():
    code, report = run(["catalog", "--kind", "conjugacy", "--u", "1/2", "--r", "2"])
    assert code == 0
    assert report["result"]["lorentz"] and all(c["conjugate"] for c in report["result"]["checks"])
    code, report = run(["catalog", "--kind", "Hplus", "--u", "2", "--u", "3", "--t", "2"])
    assert code == 0 and report["result"]["agrees"]
    assert report["result"]["fix"] == ["1", "-1/7", "-15/7"]


@pytest.mark.parametrize(
    "argv",
    [
        ["frobnicate"],
        ["invariants", "--degree", "0"],
        ["invariants", "--t", "abc"],
        ["check"],
        ["check", "--matrix", "/nonexistent.json"],
        ["catalog", "--kind", "Hplus", "--u", "2"],
    ],
)
def test_input_errors_exit_1(argv):
    with pytest.raises(SystemExit) as exc:
        code, _ = run(argv)
        raise SystemExit(code)
    assert exc.value.code == 1


def test_malformed_records_exit_1(tmp_path):
    assert run(["check", "--matrix", write(tmp_path, "a.json", "{not json")])[0] == 1
    assert run(["check", "--matrix", write(tmp_path, "b.json", {"rows": 1, "cols": 1, "entries": [["cosh("]]})])[0] == 1
    code, report = run(["check", "--matrix", write(tmp_path, "c.json", {"rows": 2, "cols": 2, "entries": [["1"]]})])
    assert code == 1 and "entries" in report["error"]


def test_precondition_exit_2():
    code, report = run(["invariants", "--group", data("bad_involution.group.json")])
    assert code == 2 and report["status"] == "precondition"


def test_undecided_exit_3(tmp_path):
    m = h_plus(angle_at(2), theta_at(5), angle_at(7))
    code, report = run(["lines", "--matrix", write(tmp_path, "m.json", matrix_to_record(m))])
    assert code == 3
    assert report["result"]["complete"] is False and report["warnings"]


def test_unverifiable_complement_exit_3(tmp_path):
    null_rot = {"rows": 3, "cols": 3, "entries": [["1", "1", "-1"], ["-1", "1/2", "1/2"], ["-1", "-1/2", "3/2"]]}
    group = {"dim": 3, "sigma_generators": [null_rot], "sigma_invariant_gens": [], "involutions": []}
    w = {"ambient": 3, "basis": [["0", "1", "1"]]}
    code, _ = run(["subspace", "--subspace", write(tmp_path, "w.json", w), "--group", write(tmp_path, "g.json", group)])
    assert code == 3


def test_reports_are_deterministic(capsys):
    outputs = []
    for _ in range(2):
        assert main(["invariants", "--group", data("example_2_2.group.json"), "--format", "structured"]) == 0
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[1]
    assert json.loads(outputs[0])["status"] == "ok"


def test_text_rendering():
    report = {"command": "fix", "status": "ok", "result": {"fix": {"ambient": 2, "basis": []}, "ok": True}, "warnings": ["w"]}
    text = render(report, "text")
    assert text.splitlines() == ["command: fix", "status: ok", "fix:", "  ambient: 2", "  basis: []", "ok: true", "warning: w"]


@pytest.mark.parametrize("name", ["example_2_2.group.json", "lambdat_2d.group.json", "htheta_2d.group.json"])
def test_group_round_trip(name):
    record = json.loads((REPO_DATA / name).read_text())
    spec, doubled = group_from_record(record)
    again = group_to_record(spec, doubled)
    spec2, doubled2 = group_from_record(again)
    assert spec2 == spec and doubled2 == doubled
    assert group_to_record(spec2, doubled2) == again


@pytest.mark.parametrize("name", ["J.matrix.json", "htheta.matrix.json", "minus_lambdap_3d.matrix.json"])
def test_matrix_round_trip(name):
    record = json.loads((REPO_DATA / name).read_text())
    m = matrix_from_record(record)
    assert matrix_to_record(m) == matrix_to_record(matrix_from_record(matrix_to_record(m)))
    assert matrix_from_record(matrix_to_record(m)) == m


@pytest.mark.parametrize("name", ["light_line_2d.subspace.json", "x_axis_2d.subspace.json"])
def test_subspace_round_trip(name):
    w = subspace_from_record(json.loads((REPO_DATA / name).read_text()))
    assert subspace_from_record(w.to_record()) == w


def test_console_entry_point():
    proc = subprocess.run(
        [sys.executable, "-m", "lorentz_invariants.cli", "check", "--matrix", data("J.matrix.json")],
        capture_output=True,
        text=True,
    )
    assert proc.returncode == 0
    assert "component: LambdaT" in proc.stdout
