import json
import os

import pytest

import gmicol

FIXTURES = os.environ.get(
    "GMICOL_FIXTURES",
    os.path.join(os.path.dirname(__file__), "..", "fixtures"),
)


def load(name):
    with open(os.path.join(FIXTURES, name + ".json")) as fh:
        return json.load(fh)


def test_solve_box():
    out = gmicol.solve(load("box"))
    assert out["exit_code"] == 0
    assert out["status"] == "optimal"
    assert out["value"] == "2"
    assert out["y"] == ["1", "1"]
    assert out["cut_iterations"] == 3


def test_solve_accepts_json_text():
    out = gmicol.solve(json.dumps(load("box")))
    assert out["value"] == "2"


def test_solve_infeasible_instance():
    out = gmicol.solve(load("forced_half"))
    assert out["exit_code"] == 2
    assert out["status"] == "infeasible"
    assert "value" not in out


def test_lp_relaxation():
    out = gmicol.lp(load("box"))
    assert out["status"] == "optimal"
    assert out["value"] == "3"
    assert out["y"] == ["3/2", "3/2"]


def test_oracle_matches_solver():
    inst = load("box")
    assert gmicol.oracle(inst)["value"] == gmicol.solve(inst)["value"]


def test_oracle_explicit_bounds():
    out = gmicol.oracle(load("box"), bounds=[[1, 1], [0, 0]])
    assert out["value"] == "1"
    assert out["witness"] == ["1", "0"]


def test_check_cross_validates():
    out = gmicol.check(load("box"))
    assert out["passed"] is True
    assert out["exit_code"] == 0
    names = {c["name"] for c in out["checks"]}
    assert "value_matches_reference" in names


def test_check_flags_corrupted_cuts():
    out = gmicol.check(load("box"), inject_bad_cut=True)
    assert out["passed"] is False
    assert out["exit_code"] == 1


def test_trace_stream_shape():
    events = gmicol.trace(load("box"))
    assert events[-1]["type"] == "report"
    assert events[-1]["status"] == "optimal"
    kinds = {e["type"] for e in events}
    assert kinds == {"pivot", "iteration", "report"}


def test_invalid_instance_raises():
    with pytest.raises(ValueError, match="integral"):
        gmicol.solve({"A": [[1, -1]], "b": ["1/2"], "c": [2, 0], "int_set": [1]})
    with pytest.raises(ValueError):
        gmicol.solve("not json")


def test_version_present():
    assert gmicol.__version__
