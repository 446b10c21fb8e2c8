import json

import pytest

import MinRep_Toolbox as toolbox


@pytest.mark.parametrize("name, command", [
    ("decompose_s2", "decompose-s2"),
    ("decompose-s2", "decompose-s2"),
    ("s2", "decompose-s2"),
    ("Verify", "verify-all"),
    ("kernel", "sl3-kernel"),
    ("lambda2a", "lambda2a"),
    ("tensor_square", None),
])
def test_resolve_tool(name, command):
    assert toolbox.resolve_tool(name) == command


def test_help(capsys):
    assert toolbox.main([]) == 0
    out = capsys.readouterr().out
    assert "Available tools:" in out
    assert "sl3_kernel" in out


def test_missing_or_unknown_tool(capsys):
    assert toolbox.main(["--tool"]) == 1
    assert toolbox.main(["--tool", "nope"]) == 1
    assert "Unknown tool" in capsys.readouterr().err


def test_tool_flag_routes_to_the_cli(capsys):
    assert toolbox.main(["--tool", "casimir", "--n", "2", "--a", "3"]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["command"] == "casimir"
    assert data["payload"]["expected"] == "4"


def test_global_flags_move_before_the_subcommand(capsys):
    assert toolbox.main(["s2", "--n", "2", "--text"]) == 0
    assert "SUMMARY:" in capsys.readouterr().out


def test_exit_code_is_passed_through(capsys):
    assert toolbox.main(["verify", "--max-n", "9"]) == 1
