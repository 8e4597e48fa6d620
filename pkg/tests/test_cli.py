"""CLI behavior: golden corpus, JSON schema discipline, error channels."""

import json
import pathlib
import subprocess
import sys

import pytest

from clubcomb import cli
from clubcomb.finord import FinFun, identity, parse_finfun
from cli_corpus import CASES

GOLDEN = pathlib.Path(__file__).parent / "golden"


def run_cli(argv):
    return subprocess.run(
        [sys.executable, "-m", "clubcomb"] + argv, capture_output=True
    )


@pytest.mark.parametrize("name,argv,expected_exit", CASES, ids=[c[0] for c in CASES])
def test_golden_corpus(name, argv, expected_exit):
    r = run_cli(argv)
    assert r.returncode == expected_exit
    assert r.stdout == (GOLDEN / f"{name}.out").read_bytes()


def test_corpus_is_deterministic_across_runs():
    for name, argv, _ in CASES:
        assert run_cli(argv).stdout == run_cli(argv).stdout, name


def test_in_process_main_matches_subprocess(capsys):
    for name, argv, expected_exit in CASES:
        assert cli.main(argv) == expected_exit, name
        out = capsys.readouterr().out.encode()
        assert out == (GOLDEN / f"{name}.out").read_bytes(), name


def test_error_messages_name_the_minimal_club():
    r = run_cli(["compile", "--club", "id", "x1,x2 |- x2 x1"])
    assert r.returncode == 2
    assert b"Bij" in r.stderr
    r = run_cli(["compile", "--club", "bij", "x1,x2 |- x1"])
    assert r.returncode == 2
    assert b"Minj" in r.stderr


def test_json_error_object_carries_minimal_club():
    r = run_cli(["compile", "--json", "--club", "id", "x1,x2 |- x2 x1"])
    assert r.returncode == 2
    obj = json.loads(r.stdout)
    assert obj["command"] == "compile"
    assert obj["minimal_club"] == "bij"
    assert "error" in obj


def test_json_keys_stay_within_schema():
    allowed = {
        "command", "input", "usage", "skeleton", "minimal_club", "club_used",
        "generators", "term", "verified", "steps", "error",
    }
    json_cases = [
        ["analyze", "--json", "x1,x2 |- x1 x2 x2"],
        ["compile", "--json", "x1,x2,x3 |- x3 x1 x1"],
        ["compile", "--json", "--no-verify", "x |- x"],
        ["compile", "--json", "--constants", "x |- a x"],
        ["eval", "--json", "K a b"],
        ["eval", "--json", "--fuel", "50", "W W W"],
        ["factor", "--json", "--club", "fun", "3->2:[2,1,1]"],
        ["diagram", "--json", "2->3:[3,1]"],
    ]
    for argv in json_cases:
        r = run_cli(argv)
        obj = json.loads(r.stdout)
        assert set(obj) <= allowed, argv
        assert obj["command"] == argv[0]
        assert obj["input"] == argv[-1]
        if "usage" in obj:
            assert set(obj["usage"]) == {"dom", "cod", "table"}
        for g in obj.get("generators", []):
            assert set(g) == {"kind", "n", "i"}
            assert g["kind"] in ("transposition", "degeneracy", "face")


def test_no_verify_omits_verification_fields():
    r = run_cli(["compile", "--json", "--no-verify", "x1,x2 |- x2 x1"])
    obj = json.loads(r.stdout)
    assert "verified" not in obj and "steps" not in obj
    assert obj["term"] == "I C (I B I)"


def test_undeclared_variable_is_a_usage_error():
    r = run_cli(["compile", "x |- y x"])
    assert r.returncode == 1
    assert b"undeclared" in r.stderr


def test_constants_mode_makes_the_same_input_compile():
    r = run_cli(["compile", "--constants", "x |- y x"])
    assert r.returncode == 0


def test_all_constants_input_is_arity_zero_usage_error():
    r = run_cli(["compile", "--constants", "|- k"])
    assert r.returncode == 1
    assert b"constants only" in r.stderr


def test_unknown_club_rejected_before_computation():
    r = run_cli(["compile", "--club", "ring", "x |- x"])
    assert r.returncode == 1
    r = run_cli(["factor", "--club", "Id", "1->1:[1]"])
    assert r.returncode == 1


def test_unknown_flag_rejected():
    r = run_cli(["analyze", "--verbose", "x |- x"])
    assert r.returncode == 1


def test_missing_command_rejected():
    assert run_cli([]).returncode == 1


def test_bad_fuel_rejected():
    r = run_cli(["eval", "--fuel", "0", "I I"])
    assert r.returncode == 1


def test_malformed_finfun_is_usage_error():
    r = run_cli(["factor", "3->2:[2,1,7]"])
    assert r.returncode == 1


def test_factor_defaults_to_minimal_club():
    r = run_cli(["factor", "2->2:[2,1]"])
    assert r.returncode == 0
    assert r.stdout == b"t(2,1)\n"
    r = run_cli(["factor", "3->3:[1,2,3]"])
    assert r.stdout == b"(identity)\n"


def test_eval_json_success():
    r = run_cli(["eval", "--json", "B a b c"])
    obj = json.loads(r.stdout)
    assert obj == {"command": "eval", "input": "B a b c", "term": "a (b c)", "steps": 1}


def test_diagram_identity_line():
    r = run_cli(["diagram", "1->1:[1]"])
    assert r.stdout == b"o---------o\n"


def test_render_diagram_shapes():
    art = cli.render_diagram(parse_finfun("3->2:[1,2,2]"))
    lines = art.split("\n")
    assert len(lines) == 5
    assert lines[0] == "o---------o"
    assert not any(line != line.rstrip() for line in lines)
    # identity of n yields n horizontal lines with blank rows between
    art = cli.render_diagram(identity(3))
    assert art.split("\n") == [
        "o---------o",
        "",
        "o---------o",
        "",
        "o---------o",
    ]


def test_render_diagram_empty_function():
    art = cli.render_diagram(FinFun(0, 2, ()))
    lines = art.split("\n")
    assert len(lines) == 3
    assert lines[0] == " " * 10 + "o"
    assert lines[1] == ""
    assert lines[2] == " " * 10 + "o"
