import io
import json
import subprocess
import sys

import numpy as np
import pytest

from hypercross.cli import parse_vector, run


def call(*argv, env_seed=None, monkeypatch=None):
    out, err = io.StringIO(), io.StringIO()
    code = run(list(argv), stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def test_dims_example():
    assert call("dims", "--max", "100") == (0, "1 3 7\n", "")


def test_cross_example():
    code, out, _ = call("cross", "-n", "3", "0,0,0", "1,2,3")
    assert code == 0 and out == "0,0,0\n"


def test_verify_eq15_example():
    code, out, _ = call("verify", "--suite", "eq15", "--samples", "1000", "--tol", "1e-10", "--seed", "42")
    assert code == 0
    assert out.splitlines()[-1] == "PASS 2/2 identities"


def test_verify_fails_with_impossible_tolerance():
    code, out, _ = call("verify", "--suite", "cross", "--samples", "50", "--tol", "1e-300")
    assert code == 1 and "FAIL" in out


def test_mul_quaternion():
    code, out, _ = call("mul", "-k", "2", "0,1,0,0", "0,0,1,0")
    assert (code, out) == (0, "0,0,0,1\n")


def test_negative_vectors_are_not_options():
    code, out, _ = call("cross", "-n", "3", "-1,0,0", "0,1,0")
    assert code == 0
    assert np.array_equal(parse_vector(out), [0, 0, -1])


def test_scientific_notation_and_precision():
    code, out, _ = call("inertia", "--precision", "3", "1e0,2.5e-1")
    assert code == 0 and out == "0.0625,-0.25\n-0.25,1\n"


def test_json_matrix():
    code, out, _ = call("crossmat", "-n", "3", "--json", "1,2,3")
    data = json.loads(out)
    assert data["command"] == "crossmat"
    assert data["result"] == [[0, 3, -2], [-3, 0, 1], [2, -1, 0]]


@pytest.mark.parametrize(
    "argv",
    [
        ["hurwitz", "-m", "8", "1,2,3,4,5,6,7,8"],
        ["transform", "--kind", "ks", "1,0,0,0"],
        ["transform", "--kind", "r16r9", ",".join(["1"] * 16)],
        ["rotate", "-n", "7", "--axis", "1,0,0,0,0,0,0", "--theta", "0.5", "0,1,0,0,0,0,0"],
        ["mul", "-k", "3", "1,0,0,0,0,0,0,0", "0,1,0,0,0,0,0,0"],
        ["table", "-k", "1"],
        ["table", "--cross", "7"],
        ["dims", "--max", "10"],
        ["bench", "--level", "2", "--iters", "10"],
        ["verify", "--suite", "sedenion"],
    ],
)
def test_every_command_emits_json(argv):
    code, out, _ = call(*argv, "--json")
    assert code == 0
    assert isinstance(json.loads(out), dict)
    assert out.count("\n") == 1


def test_transform_example():
    assert call("transform", "--kind", "ks", "1,0,0,0")[1] == "0,0,1\n"
    assert call("transform", "--kind", "lc", "1,1")[1] == "0,2\n"


def test_table_prints_convention():
    code, out, _ = call("table", "-k", "2")
    lines = out.splitlines()
    assert code == 0 and lines[0].startswith("#")
    assert lines[2].split() == ["+e1", "-e0", "+e3", "-e2"]
    _, out, _ = call("table", "--cross", "3")
    assert out.splitlines()[0] == "# cross(e_i, e_j) = V(e_j) e_i = e_i x e_j, n=3"


@pytest.mark.parametrize(
    "argv, fragment",
    [
        (["cross", "-n", "3", "1,x,3", "1,2,3"], "component 2"),
        (["cross", "-n", "3", "1,2", "1,2,3"], "3 components"),
        (["mul", "-k", "9", "1", "1"], "level"),
        (["rotate", "-n", "3", "--axis", "0,0,0", "--theta", "1", "1,0,0"], "nonzero"),
        (["dims", "--max", "0"], "--max"),
    ],
)
def test_usage_errors_exit_2(argv, fragment):
    code, out, err = call(*argv)
    assert code == 2 and out == ""
    assert fragment in err


def test_argparse_errors_exit_2(capsys):
    assert run(["cross", "-n", "5", "1", "2"]) == 2
    assert run(["nosuch"]) == 2


def test_seed_from_environment(monkeypatch):
    def residuals():
        data = json.loads(call("verify", "--suite", "cross", "--samples", "20", "--json")[1])
        return [r["max_residual"] for r in data["reports"]], data["seed"]

    monkeypatch.delenv("HYPERCROSS_SEED", raising=False)
    default = residuals()
    assert default[1] == 0
    monkeypatch.setenv("HYPERCROSS_SEED", "7")
    env = residuals()
    assert env[1] == 7 and env[0] != default[0]
    explicit = json.loads(call("verify", "--suite", "cross", "--samples", "20", "--json", "--seed", "7")[1])
    assert [r["max_residual"] for r in explicit["reports"]] == env[0]
    monkeypatch.setenv("HYPERCROSS_SEED", "oops")
    assert call("verify", "--suite", "eq15")[0] == 2


def test_suite_selection_does_not_shift_streams():
    alone = call("verify", "--suite", "eq15", "--samples", "50", "--seed", "3")[1].splitlines()[:-1]
    full = call("verify", "--samples", "50", "--seed", "3")[1].splitlines()
    assert all(line in full for line in alone)


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "hypercross", "dims", "--max", "8"], capture_output=True, text=True)
    assert proc.returncode == 0 and proc.stdout == "1 3 7\n"
