import json
import re
import subprocess
import sys

import pytest

from qhtoeplitz.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv, "--format", "json")
    return code, json.loads(out), err


RATIONAL = re.compile(r"^-?\d+/\d+$")


def _walk_numbers(obj):
    """Every exact ``{"re", "im"}`` pair in a report (display decimals skipped)."""
    if isinstance(obj, dict):
        if set(obj) >= {"re", "im"}:
            yield obj
        for k, v in obj.items():
            if k != "decimal":
                yield from _walk_numbers(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from _walk_numbers(v)


def _assert_envelope(doc, command):
    assert set(doc) == {"command", "grammar_version", "inputs", "result", "exact"}
    assert doc["command"] == command
    assert doc["grammar_version"] == "sg1"
    assert doc["exact"] is True
    for num in _walk_numbers(doc["result"]):
        assert RATIONAL.match(num["re"]) and RATIONAL.match(num["im"])
    assert not any(isinstance(x, float) for x in _flatten(doc))


def _flatten(obj):
    if isinstance(obj, dict):
        for v in obj.values():
            yield from _flatten(v)
    elif isinstance(obj, list):
        for v in obj:
            yield from _flatten(v)
    else:
        yield obj


@pytest.mark.parametrize(
    "f, g, want",
    [("z", "zb^2*z", "2*zb*z - 1"), ("z^3", "zb^3", "1 + 6*log"), ("0", "z", "0")],
)
def test_diamond(capsys, f, g, want):
    code, out, _ = run(capsys, "diamond", "-f", f, "-g", g)
    assert code == 0
    assert out.splitlines() == [want, "class: L1_disk"]


def test_diamond_json(capsys):
    code, doc, _ = run_json(capsys, "diamond", "-f", "z^2", "-g", "zb^3", "--decimal", "3")
    assert code == 0
    _assert_envelope(doc, "diamond")
    assert doc["result"]["diamond"]["text"] == "3*zb - 2*z^-1"
    assert doc["result"]["integrability_class"] == "L1_disk"
    assert doc["result"]["diamond"]["terms"][0]["coeff"]["decimal"]["re"] in ("3.000", "-2.000")


def test_parse_error_exit_code(capsys):
    code, out, err = run(capsys, "diamond", "-f", "z +", "-g", "z")
    assert code == 2 and out == ""
    payload = json.loads(err)
    assert payload["error"] == "ParseError" and payload["offset"] == 3


@pytest.mark.parametrize(
    "expr, rank",
    [
        ("T[z]*T[zb^2*z] - T[2*zb*z - 1]", 0),
        ("T[z^2]*T[zb^3] - T[3*zb - 2*z^-1]", 1),
        ("3*T[1]*T[1] - 4*T[z]*T[zb] + T[z^4]*T[zb^4]", 3),
    ],
)
def test_rank(capsys, expr, rank):
    code, doc, _ = run_json(capsys, "rank", expr)
    assert code == 0
    _assert_envelope(doc, "rank")
    assert doc["result"]["certificate"] == "yes"
    assert doc["result"]["rank"] == rank
    assert len(doc["result"]["image_basis"]) == rank


def test_rank_basis_is_constant_for_rank_one(capsys):
    _, doc, _ = run_json(capsys, "rank", "T[z^2]*T[zb^3] - T[3*zb - 2*z^-1]")
    assert list(doc["result"]["image_basis"][0]) == ["0"]


def test_rank_infinite(capsys):
    code, doc, _ = run_json(capsys, "rank", "T[z]*T[zb] - T[zb*z]")
    assert code == 3
    assert doc["result"]["rank"] == "infinite"
    assert doc["result"]["certificate"] == "no"


def test_classify_pair(capsys):
    code, doc, _ = run_json(capsys, "classify", "--pair", "2,2,3,-3")
    assert code == 0
    _assert_envelope(doc, "classify")
    assert doc["result"]["matched_condition"] == 1
    assert doc["result"]["H"]["text"] == "3*zb - 2*z^-1"


def test_classify_negative_pair(capsys):
    code, doc, _ = run_json(capsys, "classify", "--pair=-1,0,-1,0")
    assert code == 0
    assert doc["result"]["matched_condition"] == 1


def test_classify_polys(capsys):
    code, doc, _ = run_json(capsys, "classify", "--P", "7", "--Q", "z^5")
    assert code == 0 and doc["result"]["case"] == 1 and doc["result"]["exists_H"]


def test_classify_domain_error(capsys):
    code, _, err = run(capsys, "classify", "--pair=-2,0,1,0")
    assert code == 2 and json.loads(err)["error"] == "DomainError"
    code, _, err = run(capsys, "classify", "--P", "z^-1", "--Q", "z")
    assert code == 2


@pytest.mark.parametrize(
    "argv",
    [
        ["construct", "sd", "--d", "4"],
        ["construct", "dqz42", "--d", "4", "--alpha", "1", "--beta", "2", "--gamma", "3"],
        ["construct", "revised43", "--d", "4", "--beta", "2"],
        ["construct", "dqz42", "--d", "3", "--alpha", "1/2", "--beta=-3/4", "--gamma", "5"],
    ],
)
def test_construct(capsys, argv):
    code, doc, _ = run_json(capsys, *argv)
    assert code == 0
    _assert_envelope(doc, "construct")
    d = int(argv[3])
    assert doc["result"]["computed_rank"] == doc["result"]["predicted_rank"] == d - 1
    assert doc["result"]["match"] and doc["result"]["diagonal_conditions"]["ok"]


def test_construct_param_domain(capsys):
    code, _, err = run(capsys, "construct", "dqz42", "--d", "4", "--alpha", "1", "--beta", "0", "--gamma", "3")
    assert code == 2 and json.loads(err)["error"] == "ParamDomain"


@pytest.mark.parametrize(
    "P, Q, H, ok",
    [("z^2", "z^3", "3*zb - 2*z^-1", True), ("z", "z", "1 + 2*log", True), ("z", "z", "1", False)],
)
def test_verify_pde(capsys, P, Q, H, ok):
    code, doc, _ = run_json(capsys, "verify-pde", "--P", P, "--Q", Q, "--H", H)
    assert code == 0
    _assert_envelope(doc, "verify-pde")
    assert doc["result"]["ok"] is ok
    if not ok:
        assert doc["result"]["failures"][0]["equation"] == "d_dz"


def test_verify_pde_not_differentiable(capsys):
    code, _, err = run(capsys, "verify-pde", "--P", "z", "--Q", "z", "--H", "r^(1/2)")
    assert code == 5 and json.loads(err)["error"] == "NotDifferentiableClass"


def test_selftest(capsys):
    code, doc, _ = run_json(capsys, "selftest")
    assert code == 0
    assert doc["result"]["passed"]
    assert all(c["ok"] for c in doc["result"]["cases"])


def test_stdin_sentinel_and_module_entry():
    proc = subprocess.run(
        [sys.executable, "-m", "qhtoeplitz", "rank", "-"],
        input="T[zb^-1]*T[zb] - T[1]\n",
        capture_output=True,
        text=True,
        check=False,
    )
    assert proc.returncode == 0
    assert "rank: 1" in proc.stdout
