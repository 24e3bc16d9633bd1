import json
import math
from pathlib import Path

import jsonschema
import pytest

from splitoct import cli

SCHEMAS = Path(__file__).resolve().parent.parent / "schemas"


def load_schema(name):
    return json.loads((SCHEMAS / name).read_text())


def run(capsys, argv):
    code = cli.main(argv)
    out = capsys.readouterr()
    return code, out.out, out.err


def test_table_json_schema(capsys):
    code, out, _ = run(capsys, ["table"])
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, load_schema("table.schema.json"))
    entries = {(p["left"], p["right"]): p for p in payload["products"]}
    assert entries[("J1", "J2")]["result_unit"] == "j3"
    assert entries[("J1", "J2")]["sign"] == 1
    assert entries[("I", "I")] == {"left": "I", "right": "I",
                                   "result_unit": "1", "sign": 1}


def test_verify_clifford_case_count(capsys):
    code, out, _ = run(capsys, ["verify", "clifford"])
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, load_schema("report.schema.json"))
    assert payload["reports"][0]["cases"] == 64


def test_verify_unknown_suite(capsys):
    code, out, err = run(capsys, ["verify", "nosuchsuite"])
    assert code == 2
    assert "unknown suite" in err


@pytest.mark.parametrize("suite", ["moufang", "associators", "correspondence"])
def test_verify_suites_pass(capsys, suite):
    code, out, _ = run(capsys, ["verify", suite, "--samples", "50"])
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, load_schema("report.schema.json"))
    assert payload["passed"]


def test_verify_deterministic_bytes(capsys):
    _, out1, _ = run(capsys, ["verify", "correspondence", "--seed", "99",
                              "--samples", "20"])
    _, out2, _ = run(capsys, ["verify", "correspondence", "--seed", "99",
                              "--samples", "20"])
    assert out1 == out2


def test_rotate_compact_example(capsys):
    code, out, _ = run(capsys, ["rotate", "--plane", "4,5",
                                "--theta", str(math.pi / 2),
                                "--target", "vector",
                                "--components", "0,0,0,0,1,0,0,0"])
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, load_schema("rotate.schema.json"))
    want = [0, 0, 0, 0, 0, -1, 0, 0]
    assert all(abs(a - b) < 1e-12 for a, b in zip(payload["output"], want))
    assert abs(payload["invariant_before"] - (-1)) < 1e-12
    assert abs(payload["invariant_after"] - (-1)) < 1e-12


def test_rotate_boost_example(capsys):
    code, out, _ = run(capsys, ["rotate", "--plane", "0,4", "--theta", "1",
                                "--target", "vector",
                                "--components", "1,0,0,0,0,0,0,0"])
    assert code == 0
    payload = json.loads(out)
    assert abs(payload["output"][0] - math.cosh(1)) < 1e-12
    assert abs(payload["output"][4] - math.sinh(1)) < 1e-12
    assert not payload["compact"]


def test_rotate_theta_zero_echoes(capsys):
    comps = "1,2,3,4,5,6,7,8"
    code, out, _ = run(capsys, ["rotate", "--plane", "2,6", "--theta", "0",
                                "--target", "vector", "--components", comps])
    assert code == 0
    payload = json.loads(out)
    assert payload["output"] == payload["input"]


def test_rotate_usage_errors(capsys):
    code, _, _ = run(capsys, ["rotate", "--plane", "3,3", "--theta", "1",
                              "--target", "vector", "--components", "1,0,0,0,0,0,0,0"])
    assert code == 2
    code, _, _ = run(capsys, ["rotate", "--plane", "0,1", "--theta", "1",
                              "--target", "vector", "--components", "1,2"])
    assert code == 2


def test_trilinear_both_all_ones(capsys):
    ones = ",".join(["1"] * 8)
    code, out, _ = run(capsys, ["trilinear", "--phi", ones, "--x", ones,
                                "--psi", ones, "--mode", "exact"])
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, load_schema("trilinear.schema.json"))
    assert payload["matrix"] == payload["octonion_mapped"]
    assert payload["residual"] == 0


def test_trilinear_octonion_scalar(capsys):
    e0 = "1,0,0,0,0,0,0,0"
    code, out, _ = run(capsys, ["trilinear", "--phi", e0, "--x", e0, "--psi", e0,
                                "--representation", "octonion", "--mode", "exact"])
    assert code == 0
    assert json.loads(out)["octonion"] == -1


def test_trilinear_zero_phi(capsys):
    z = "0,0,0,0,0,0,0,0"
    e0 = "1,0,0,0,0,0,0,0"
    code, out, _ = run(capsys, ["trilinear", "--phi", z, "--x", e0, "--psi", e0,
                                "--representation", "matrix"])
    assert code == 0
    assert json.loads(out)["matrix"] == 0


def test_matrices_alpha_nonzero_counts(capsys):
    code, out, _ = run(capsys, ["matrices", "--which", "alpha"])
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, load_schema("matrices.schema.json"))
    assert len(payload) == 8
    for mu in range(8):
        mat = payload[f"alpha{mu}"]
        nonzero = sum(1 for row in mat for e in row
                      if e["re"] != "0" or e["im"] != "0")
        assert nonzero == 8


def test_matrices_b_real_signs(capsys):
    code, out, _ = run(capsys, ["matrices", "--which", "B"])
    assert code == 0
    payload = json.loads(out)
    for row in payload["B"]:
        for e in row:
            assert e["im"] == "0"
            assert e["re"] in ("-1", "0", "1")


def test_matrices_gamma_off_diagonal_blocks(capsys):
    code, out, _ = run(capsys, ["matrices", "--which", "gamma", "--index", "1"])
    assert code == 0
    mat = json.loads(out)["gamma1"]
    for r in range(8):
        for c in range(8):
            assert mat[r][c] == {"re": "0", "im": "0"}
            assert mat[r + 8][c + 8] == {"re": "0", "im": "0"}


def test_matrices_float_mode(capsys):
    code, out, _ = run(capsys, ["matrices", "--which", "B", "--mode", "float"])
    assert code == 0
    payload = json.loads(out)
    jsonschema.validate(payload, load_schema("matrices.schema.json"))
    assert isinstance(payload["B"][0][7]["re"], float)
