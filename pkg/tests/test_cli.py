import argparse
import json
from fractions import Fraction

import pytest

from liealg import Weight, bracket_fault_enabled
from minrep_cli import build_parser, main, parse_weight, subcommand_names
from utils.minrep_config import reset_minrep_config


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def run_json(capsys, *argv):
    code, out, _ = run(capsys, *argv)
    return code, json.loads(out)


def test_subcommands_are_all_wired():
    parser = build_parser()
    action = next(a for a in parser._actions if isinstance(a, argparse._SubParsersAction))
    choices = action.choices
    assert sorted(choices) == sorted(subcommand_names())


def test_decompose_s2_json(capsys):
    code, data = run_json(capsys, "decompose-s2", "--n", "3")
    assert code == 0
    assert data["status"] == "pass"
    assert data["command"] == "decompose-s2"
    assert data["schema_version"] == "1.0"
    assert data["payload"]["dims"] == [27, 8, 1]


def test_text_output_ends_with_summary(capsys):
    code, out, _ = run(capsys, "--text", "decompose-s2", "--n", "2")
    assert code == 0
    assert out.rstrip().splitlines()[-1] == "SUMMARY: ✓ pass"


def test_output_from_environment(capsys, monkeypatch):
    monkeypatch.setenv("MINREP_OUTPUT", "text")
    reset_minrep_config()
    _, out, _ = run(capsys, "casimir", "--n", "2", "--a", "3")
    assert "SUMMARY:" in out


def test_reports_are_deterministic(capsys):
    _, first, _ = run(capsys, "classify", "su(2,2)", "--a", "0")
    _, second, _ = run(capsys, "classify", "su(2,2)", "--a", "0")
    assert first == second


def test_rationals_are_strings(capsys):
    code, data = run_json(capsys, "casimir", "--n", "3", "--a", "0")
    assert code == 0
    assert data["payload"]["expected"] == "-3/2"
    assert data["parameters"]["a"] == "0"


def test_negative_rational_in_equals_form(capsys):
    code, data = run_json(capsys, "casimir", "--n", "3", "--a=-7/3")
    assert code == 0
    assert data["parameters"]["a"] == "-7/3"


@pytest.mark.parametrize("argv", [
    [],
    ["nonsense"],
    ["casimir", "--n", "3", "--a", "x/y"],
    ["decompose-s2", "--n", "1"],
    ["decompose-s2", "--n", "99"],
    ["verify-all", "--max-n", "8"],
    ["sl3-kernel", "--a", "0", "--m-max", "5000"],
    ["table1", "su(1,1)", "--a", "0"],
    ["classify", "--a", "0"],
    ["classify", "so(3,1)"],
    ["ktypes", "sl(4,R)", "--count", "0"],
])
def test_usage_errors_exit_one(capsys, argv):
    code, _, err = run(capsys, *argv)
    assert code == 1
    assert err


def test_annihilator_n2_is_informational(capsys):
    code, data = run_json(capsys, "annihilator", "--n", "2", "--a", "0")
    assert code == 0
    assert data["status"] == "info"
    assert data["payload"]["all_weights"] is True


def test_annihilator_n3(capsys):
    code, data = run_json(capsys, "annihilator", "--n", "3", "--a", "0")
    assert code == 0
    assert data["status"] == "pass"
    assert all(w["annihilated"] for w in data["payload"]["weights"])


def test_gvm_check(capsys):
    code, data = run_json(capsys, "gvm-check", "--n", "3", "--a", "5/2")
    assert code == 0
    assert len(data["payload"]["checks"]) == 2


def test_gvm_check_wrong_weight_fails(capsys):
    code, data = run_json(capsys, "gvm-check", "--n", "3", "--a", "0",
                          "--parabolic", "q(1,n-1)", "--weight", "1,0,-1")
    assert code == 2
    assert data["status"] == "fail"
    assert "not a character" in data["payload"]["checks"][0]["reason"]


def test_classify_by_p_and_q(capsys):
    code, data = run_json(capsys, "classify", "--p", "2", "--q", "2", "--a", "0")
    assert code == 0
    assert data["payload"]["count"] == 2
    assert data["parameters"]["form"] == "su(2,2)"


def test_table1_nonreal(capsys):
    code, data = run_json(capsys, "table1", "sl(3,R)", "--nonreal")
    assert code == 0
    assert data["parameters"]["a"] is None
    assert data["payload"]["count"] == data["payload"]["expected"] == 2


def test_ktypes_genuine(capsys):
    code, data = run_json(capsys, "ktypes", "sl(3,R)", "--a=-4", "--count", "3")
    assert code == 0
    genuine = [c for c in data["payload"]["certificates"] if c["family"] == "Genuine"]
    assert genuine[0]["degrees"] == [9, 13, 17]


def test_sl3_kernel(capsys):
    code, data = run_json(capsys, "sl3-kernel", "--a", "0", "--m-max", "13")
    assert code == 0
    assert data["payload"]["m_values"] == [1, 5, 9, 13]


def test_sl3_kernel_empty_for_half_integer(capsys):
    code, data = run_json(capsys, "sl3-kernel", "--a", "1/2", "--m-max", "9")
    assert code == 0
    assert data["payload"]["empty"] is True


def test_lambda2a(capsys):
    code, data = run_json(capsys, "lambda2a", "--a", "1")
    assert code == 0
    assert data["payload"]["result"]["holds"] is True
    code, data = run_json(capsys, "lambda2a", "--a", "0", "--weight", "1,0,-1")
    assert code == 0
    assert data["payload"]["result"]["holds"] is False
    assert data["payload"]["result"]["coefficient_T12"] == "3/2"


def test_parse_weight():
    assert parse_weight("1/2,-1/2") == Weight.of(Fraction(1, 2), Fraction(-1, 2))


@pytest.mark.slow
def test_verify_all_passes(capsys):
    code, data = run_json(capsys, "verify-all", "--max-n", "3", "--threads", "2")
    assert code == 0
    assert data["payload"]["failed"] == []


@pytest.mark.slow
def test_verify_all_with_injected_fault(capsys):
    code, data = run_json(capsys, "verify-all", "--max-n", "3", "--inject-fault")
    assert code == 2
    assert 10 in data["payload"]["failed"]
    assert not bracket_fault_enabled()
