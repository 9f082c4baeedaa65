from __future__ import annotations

import json

import pytest

from skeinrt.cli import main
from skeinrt.data import IDEAL_RT_TEXT
from skeinrt.torus import TorusElement


def run(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_mul_text_and_json(capsys, tmp_path):
    code, out, _ = run(capsys, "mul", "(1,0)_T", "(0,1)_T")
    assert code == 0 and TorusElement.parse(out) == TorusElement.parse("t*(1,1)_T + t^-1*(1,-1)_T")
    a = tmp_path / "a.json"
    a.write_text(json.dumps(TorusElement.basis(1, 2).to_json()))
    code, out, _ = run(capsys, "mul", str(a), str(a), "--format", "json")
    prod = TorusElement.from_json(json.loads(out)["product"])
    assert prod == TorusElement.basis(2, 4) + TorusElement.identity(2)


def test_mul_identity(capsys):
    code, out, _ = run(capsys, "mul", "1", "t^2*(3,-1)_T")
    assert TorusElement.parse(out) == TorusElement.basis(3, -1, 2) * 0 + TorusElement.parse("t^2*(3,-1)_T")


def test_malformed_input_is_rejected(capsys, tmp_path):
    bad = tmp_path / "bad.json"
    bad.write_text("[{not json")
    code, _, err = run(capsys, "mul", str(bad), "(1,0)_T")
    assert code == 3 and "cannot read" in err
    code, _, err = run(capsys, "mul", '[{"p": 1}]', "(1,0)_T")
    assert code == 3


def test_act_examples(capsys):
    code, out, _ = run(capsys, "act", "--module", "solid-torus", "(1,0)_T", "S_1")
    assert code == 0 and out.strip() == "(1)*S_0 + (1)*S_2"
    code, out, _ = run(capsys, "act", "--theory", "kauffman", "--module", "solid-torus", "(0,1)_T", "S_0")
    assert out.strip() == "(-t^-2 - t^2)*S_0"
    code, out, _ = run(capsys, "act", "--module", "fig8", "--format", "json", "(0,2)_T", "1")
    assert json.loads(out)["result"] == [[0, "1", [[0, "-2"]]], [2, "1", [[0, "1"]]]]


def test_act_unknown_module(capsys):
    with pytest.raises(SystemExit) as exc:
        main(["act", "--module", "klein-bottle", "(1,0)_T", "1"])
    assert exc.value.code == 3


def test_verify_exit_codes(capsys):
    code, out, _ = run(capsys, "verify", "--scenario", "prop3", "--format", "json")
    assert code == 0 and json.loads(out)["status"] == "pass"
    code, out, _ = run(capsys, "verify", "--scenario", "torus-knot-parity")
    assert code == 2 and out.startswith("REPORT")
    code, out, _ = run(capsys, "verify", "--format", "json")
    lines = [json.loads(line) for line in out.splitlines()]
    assert code == 2 and len(lines) == 8
    assert {r["status"] for r in lines} == {"pass", "report"}


def test_recur(capsys):
    code, out, _ = run(capsys, "recur", "(1,0)_T")
    assert code == 0 and out.splitlines()[0] == "(1) y_{n+2} + (1) y_{n} = 0"
    code, out, _ = run(capsys, "recur", IDEAL_RT_TEXT, "--reference", "printed")
    assert code == 0 and "up to t^0 L^2 M^7" in out
    code, out, _ = run(capsys, "recur", IDEAL_RT_TEXT, "--reference", "printed-literal", "--format", "json")
    assert code == 1 and json.loads(out)["comparison"] == "different"


def test_recur_negative_support(capsys):
    code, out, _ = run(capsys, "recur", "(1,-2)_T + (0,1)_T", "--format", "json")
    payload = json.loads(out)
    assert code == 0 and payload["clearing"] == [1, 2]


def test_calibrate_and_golden(capsys):
    code, out, _ = run(capsys, "calibrate", "--format", "json")
    payload = json.loads(out)
    assert code == 0 and payload["unique"]
    assert payload["selected"]["weight_offset"] == 1
    code, out, _ = run(capsys, "golden")
    assert code == 0 and out.count("ok") == 6


def test_oracle_command(capsys, tmp_path):
    f = tmp_path / "fig8.json"
    f.write_text(json.dumps({"strands": 3, "word": [1, -2, 1, -2]}))
    code, out, _ = run(capsys, "oracle", str(f), "--invariant", "colored-jones", "--color", "2")
    assert code == 0 and out.strip() == "t^-28 - t^-20 + t^-4 + 1 + t^4 - t^20 + t^28"
    code, out, _ = run(capsys, "oracle", '{"crossings": [[1,5,2,4],[3,1,4,6],[5,3,6,2]]}', "--invariant", "kirby-melvin")
    assert code == 0
    code, _, err = run(capsys, "oracle", '{"strands": 2, "word": [1, 1, 1]}', "--invariant", "colored-jones")
    assert code == 3 and "writhe" in err
