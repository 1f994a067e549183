"""Tests for the `fg` command line."""

import json

import pytest

from fg_workbench.cli import build_parser, main
from fg_workbench.const import EXIT_DOMAIN_ERROR, EXIT_OK, EXIT_SYNTAX_ERROR

TOWER = "config/towers/example-3-1.tower"


def run(capsys, *argv: str) -> tuple[int, str]:
    code = main(list(argv))
    return code, capsys.readouterr().out.strip()


def test_word_commands(capsys) -> None:
    assert run(capsys, "word", "reduce", "a b b^-1 a") == (EXIT_OK, "a^2")
    code, out = run(capsys, "word", "conjugate", "a b", "b a")
    assert code == EXIT_OK
    assert out.startswith("True")
    assert run(capsys, "word", "root", "a b a b") == (EXIT_OK, "(a b)^2")


def test_word_json(capsys) -> None:
    code, out = run(capsys, "--json", "word", "root", "a b a b")
    assert code == EXIT_OK
    assert json.loads(out) == {"root": "a b", "power": 2}
    code, out = run(capsys, "word", "commutes", "a", "b a b^-1", "--json")
    assert json.loads(out)["result"] is True


def test_subgroup_commands(capsys) -> None:
    code, out = run(capsys, "--json", "subgroup", "rank", "-g", "a^2", "-g", "b")
    assert (code, json.loads(out)) == (EXIT_OK, {"rank": 2})
    assert run(capsys, "subgroup", "member", "a^2 b a^-2", "-g", "a^2", "-g", "b") == (EXIT_OK, "True")
    assert run(capsys, "subgroup", "equal", "-g", "a b", "-g", "b a", "-o", "b a", "-o", "a b") == (
        EXIT_OK,
        "True",
    )
    code, _ = run(capsys, "subgroup", "equal", "-g", "a")
    assert code == EXIT_DOMAIN_ERROR


def test_primitive_and_free_factor(capsys) -> None:
    assert run(capsys, "primitive", "a b^2") == (EXIT_OK, "True")
    assert run(capsys, "primitive", "a^2 b^2") == (EXIT_OK, "False")
    assert run(capsys, "free-factor", "-g", "a", "-g", "b a b^-1") == (EXIT_OK, "False")
    code, out = run(capsys, "whitehead", "minimize", "a b^3")
    assert code == EXIT_OK
    assert out.startswith("minimal length 1")


def test_tower_commands(capsys) -> None:
    code, out = run(capsys, "tower", "validate", TOWER)
    assert code == EXIT_OK
    assert out.splitlines()[-1] == "ext: t u=x^2 b x^2"
    code, out = run(capsys, "tower", "wp", TOWER, "t x^2 b x^2 t^-1 x^-2 b^-1 x^-2")
    assert code == EXIT_OK
    assert out.endswith("(trivial)")
    code, out = run(capsys, "tower", "embed", TOWER, "--count", "2", "--g", "a")
    assert out.splitlines() == ["x1 -> t a t a t", "x2 -> t^2 a t^2 a t^2"]
    code, _ = run(capsys, "tower", "inject-test", TOWER, "--g", "a", "--trials", "30", "--max-len", "5")
    assert code == EXIT_OK


def test_tower_errors(capsys) -> None:
    code, _ = run(capsys, "tower", "validate", "config/towers/missing.tower")
    assert code == EXIT_DOMAIN_ERROR
    code, _ = run(capsys, "tower", "embed", TOWER)
    assert code == EXIT_DOMAIN_ERROR


def test_quad_commands(capsys) -> None:
    code, out = run(capsys, "quad", "classify", "?x^2 ?y^2 = a^2 b^2")
    assert code == EXIT_OK
    assert out.startswith("non-orientable")
    code, out = run(capsys, "quad", "abelian", "?x^8 ?y^2 ?z^-2 = e1^7 e2^2 e3^-2")
    assert code == EXIT_OK
    assert out.splitlines()[0] == "obstructed"
    assert run(capsys, "quad", "configs", "c1 ?v^-1 c2 ?v = 1") == (EXIT_OK, "p1|p1")
    assert run(capsys, "quad", "solve", "?x^2 = a", "--bound", "7")[0] == EXIT_DOMAIN_ERROR


def test_lemma_checks(capsys) -> None:
    assert run(capsys, "ls-check", "a b", "b a", "a b a b", "3", "3") == (
        EXIT_OK,
        "u = (a b)^1, v = (b a)^1",
    )
    assert run(capsys, "ls-check", "a b", "b a", "a b a", "3", "3") == (EXIT_OK, "premise-not-met")
    assert run(capsys, "ls-check", "a b", "b a", "a b", "3", "x")[0] == EXIT_SYNTAX_ERROR
    code, out = run(capsys, "ls-check", "--sweep", "--max-len", "2", "--max-power", "3")
    assert code == EXIT_OK
    assert out.endswith("0 counterexamples")
    code, out = run(capsys, "imposs-check", "a", "a^-1", "1")
    assert code == EXIT_OK
    assert "commutes with a conjugate" in out


def test_abelian_commands(capsys) -> None:
    assert run(capsys, "abelian", "equiv", "Z", "Z + Q") == (EXIT_OK, "True")
    assert run(capsys, "abelian", "alpha", "--n", "2", "--m", "1", "--p", "3") == (EXIT_OK, "2")
    assert run(capsys, "abelian", "sentence", "Z^2", "--p", "2") == (EXIT_OK, "False")
    assert run(capsys, "abelian", "fgsub", "-g", "1,0", "-g", "0,1/6") == (EXIT_OK, "2")
    assert run(capsys, "abelian", "fgsub", "-g", "1,z")[0] == EXIT_SYNTAX_ERROR
    assert run(capsys, "abelian", "alpha", "--p", "4")[0] == EXIT_DOMAIN_ERROR
    code, out = run(capsys, "abelian", "chain-demo", "--bound", "4")
    assert (code, out) == (EXIT_OK, "ranks [2, 2, 2, 2], ascending True")


def test_paper_commands(capsys) -> None:
    code, out = run(capsys, "paper", "list")
    assert code == EXIT_OK
    assert "szmielew: alpha, elementary-equivalence, small-dimension-sentence, chain" in out.splitlines()
    code, out = run(capsys, "paper", "verify", "szmielew", "--json", "--seed", "5")
    data = json.loads(out)
    assert (code, data["passed"], data["seed"]) == (EXIT_OK, True, 5)
    assert run(capsys, "paper", "verify", "forall-ap-obstruction", "--m", "1")[0] == EXIT_DOMAIN_ERROR
    assert run(capsys, "paper", "verify")[0] == EXIT_DOMAIN_ERROR


def test_grammar_error_exit_code(capsys) -> None:
    assert run(capsys, "word", "reduce", "a ^ ^")[0] == EXIT_SYNTAX_ERROR
    assert run(capsys, "primitive", "(a b")[0] == EXIT_SYNTAX_ERROR


def test_config_errors(capsys, tmp_path) -> None:
    path = tmp_path / "workbench.yaml"
    path.write_text("trials: 0\n")
    assert run(capsys, "--config", str(path), "paper", "list")[0] == EXIT_DOMAIN_ERROR
    assert run(capsys, "--config", str(tmp_path / "none.yaml"), "paper", "list")[0] == EXIT_DOMAIN_ERROR


def test_usage_errors() -> None:
    with pytest.raises(SystemExit):
        main([])
    with pytest.raises(SystemExit):
        main(["word", "shout", "a"])


GLOBAL_FLAGS = ["--json", "--seed", "9", "--trials", "40", "--alphabet", "b a", "--parallel", "-v"]


@pytest.mark.parametrize(
    "argv",
    [
        GLOBAL_FLAGS + ["word", "root", "a b a b"],
        ["word", "root", "a b a b"] + GLOBAL_FLAGS,
        ["--json", "--seed", "9", "word", "root", "--trials", "40", "--alphabet", "b a", "--parallel", "-v", "a b a b"],
    ],
)
def test_global_flags_in_any_position(argv) -> None:
    args = build_parser().parse_args(argv)
    assert (args.json, args.seed, args.trials, args.alphabet, args.parallel, args.verbose) == (
        True,
        9,
        40,
        "b a",
        True,
        True,
    )
    assert args.words == ["a b a b"]


def test_global_flag_defaults() -> None:
    args = build_parser().parse_args(["word", "reduce", "a"])
    assert (args.json, args.seed, args.trials, args.config, args.alphabet) == (False, None, None, None, None)


def test_config_before_subcommand_is_used(capsys, tmp_path) -> None:
    path = tmp_path / "workbench.yaml"
    path.write_text("seed: 0\n")
    code, out = run(capsys, "--config", str(path), "--json", "--seed", "4", "paper", "verify", "szmielew")
    assert code == EXIT_OK
    assert json.loads(out)["seed"] == 4
