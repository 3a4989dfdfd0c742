"""
Tests for the command-line interface in main.py.
"""

import json

import pytest

import main
from src.config import reset_settings


@pytest.fixture(autouse=True)
def fresh_settings():
    reset_settings()
    yield
    reset_settings()


def run(capsys, *argv):
    code = main.main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_add_integers(capsys):
    code, out, _ = run(capsys, "add", "1", "1")
    assert code == 0
    assert out == "(. (. .))\n((. .) .)\n"


def test_add_json(capsys):
    code, out, _ = run(capsys, "add", "2", "1", "--json")
    data = json.loads(out)
    assert code == 0
    assert data["degree"] == 3 and len(data["trees"]) == 5


def test_left_and_right(capsys):
    _, out, _ = run(capsys, "left", "2", "1")
    assert out == "(. (. (. .)))\n(. ((. .) .))\n((. .) (. .))\n"
    _, out, _ = run(capsys, "right", "2", "1")
    assert out == "((. (. .)) .)\n(((. .) .) .)\n"


def test_mul_trees(capsys):
    code, out, _ = run(capsys, "mul", "((. .) .)", "(. (. .))")
    assert code == 0
    assert out == "((. (. .)) (. .))\n"


def test_enum(capsys):
    code, out, _ = run(capsys, "enum", "3")
    assert code == 0
    assert out.splitlines()[2] == "((. .) (. .))"
    assert len(out.splitlines()) == 5


def test_interval(capsys):
    _, out, _ = run(capsys, "interval", "((. .) .)", "(. (. .))")
    assert out == "(. (. .))\n((. .) .)\n"


def test_poset_formats(capsys):
    _, out, _ = run(capsys, "poset", "2")
    assert out == "((. .) .) -> (. (. .))\n"
    _, out, _ = run(capsys, "poset", "2", "--dot")
    assert out.startswith("digraph tamari_2 {\n")
    assert out.endswith("  n1 -> n0;\n}\n")
    _, out, _ = run(capsys, "poset", "4", "--json")
    assert len(json.loads(out)["edges"]) == 21


def test_coords(capsys):
    code, out, _ = run(capsys, "coords", "tamari", "2")
    assert code == 0
    assert out == "tree,c0,c1\n(. (. .)),1,1\n((. .) .),2,0\n"
    _, out, _ = run(capsys, "coords", "loday", "2", "--json")
    assert json.loads(out)["points"][0] == {"tree": "(. (. .))", "coords": [2, 1]}


def test_canopy_and_section(capsys):
    _, out, _ = run(capsys, "canopy", "(. ((. .) .))")
    assert out == "-+\n"
    _, out, _ = run(capsys, "section", "-+")
    assert out == "(. ((. .) .))\n"
    _, out, _ = run(capsys, "section", "+-")
    assert out == "((. .) (. .))\n"


def test_word(capsys):
    _, out, _ = run(capsys, "word", "((. .) (. .))")
    assert out == "(1 |> 1) <| 1\n"


def test_poly(capsys):
    _, out, _ = run(capsys, "poly", "2")
    assert out == "1*x^{(. (. .))} + 1*x^{((. .) .)}\n"
    _, out, _ = run(capsys, "poly", "1", "--json")
    assert json.loads(out) == {"terms": [{"tree": "(. .)", "coefficient": "1"}]}


def test_check_suite_passes(capsys):
    code, out, _ = run(capsys, "check", "theorem", "--max-degree", "5")
    assert code == 0
    assert "CHECK SUITE: theorem (max degree 5, seed 0)" in out
    assert out.endswith("Overall: PASS (4/4 checks)\n")


def test_check_output_is_deterministic(capsys):
    _, first, _ = run(capsys, "check", "trees", "--max-degree", "4")
    _, second, _ = run(capsys, "check", "trees", "--max-degree", "4")
    assert first == second


def test_check_saves_report(capsys, tmp_path):
    code, _, _ = run(capsys, "check", "trees", "--max-degree", "3", "--save", "--data-dir", str(tmp_path))
    assert code == 0
    saved = json.loads((tmp_path / "reports" / "check_trees.json").read_text(encoding="utf-8"))
    assert saved["passed"] is True


def test_parse_error_exit_code(capsys):
    code, out, err = run(capsys, "canopy", "(. .")
    assert code == 3
    assert out == ""
    assert err.startswith("error: ")
    assert "position 4" in err


def test_bad_canopy_exit_code(capsys):
    code, _, _ = run(capsys, "section", "+x")
    assert code == 3


def test_cap_exit_code(capsys):
    code, _, err = run(capsys, "enum", "9")
    assert code == 4
    assert "exceeds cap 7" in err
    code, _, _ = run(capsys, "--enum-cap", "3", "add", "2", "2")
    assert code == 0
    code, _, _ = run(capsys, "--enum-cap", "3", "enum", "4")
    assert code == 4


def test_degree_error_exit_code(capsys):
    code, _, _ = run(capsys, "interval", "(. .)", "((. .) .)")
    assert code == 5


def test_negative_cap_is_a_config_error(capsys):
    code, _, _ = run(capsys, "--hasse-cap", "-1", "poset", "2")
    assert code == 6


def test_no_command_prints_help(capsys):
    code, out, _ = run(capsys)
    assert code == 2
    assert "usage:" in out


def test_unknown_suite_is_a_usage_error(capsys):
    with pytest.raises(SystemExit) as excinfo:
        main.main(["check", "everything"])
    assert excinfo.value.code == 2


def test_section_respects_enum_cap(capsys):
    code, _, err = run(capsys, "section", "-" * 14)
    assert code == 4
    assert "exceeds cap 7" in err
    code, out, _ = run(capsys, "--enum-cap", "3", "section", "+-")
    assert code == 0 and out == "((. .) (. .))\n"


def test_check_degree_above_caps_is_refused(capsys):
    code, out, err = run(capsys, "check", "theorem", "--max-degree", "8")
    assert code == 4
    assert out == ""
    assert "exceeds cap 7" in err


def test_deeply_nested_tree(capsys):
    text = "(. " * 1200 + "." + ")" * 1200
    code, out, _ = run(capsys, "canopy", text)
    assert code == 0
    assert out == "-" * 1199 + "\n"


def test_non_ascii_digits_are_not_integers(capsys):
    code, out, err = run(capsys, "add", "²", "1")
    assert code == 3
    assert out == ""
    assert err.startswith("error: ")
