"""Tests for quadratic equations, disc configurations and the combinatorial lemmas."""

import pytest

from fg_workbench.exceptions import EquationError, PreconditionError, ScopeError
from fg_workbench.parse_io import parse_equation, parse_word
from fg_workbench.quadratic import (
    abelian_obstruction,
    brute_solve,
    canonical_form,
    classify,
    enumerate_configs,
    euler_bound_holds,
    glue,
    imposs_check,
    imposs_sweep,
    ls_check,
    ls_sweep,
    n_bound,
)
from fg_workbench.words import Alphabet, substitute
from tests.cases import load_cases

F2 = Alphabet.of("a", "b")


def classify_test(casefile: str):
    def fn() -> None:
        for case in load_cases(casefile, "classify"):
            eq = classify(case["equation"])
            assert eq.genus == case["genus"], case
            assert eq.orientable == case["orientable"], case
            assert eq.m_coef == case["m_coef"], case
            assert eq.chi_bar == case["chi_bar"], case
            assert n_bound(eq) == case["n_bound"], case

    return fn


def classify_error_test(casefile: str):
    def fn() -> None:
        for case in load_cases(casefile, "classify_errors"):
            with pytest.raises(EquationError):
                classify(case["equation"])

    return fn


def brute_test(casefile: str):
    def fn() -> None:
        for case in load_cases(casefile, "brute_solve"):
            result = brute_solve(case["equation"], case["bound"])
            if case["solution"] is None:
                assert not result.found, case
                assert result.visited == case["visited"], case
            else:
                assert {k: str(w) for k, w in result.solution.items()} == case["solution"], case

    return fn


test_classify = classify_test("tests/quadratic.yaml")
test_classify_errors = classify_error_test("tests/quadratic.yaml")
test_brute_solve = brute_test("tests/quadratic.yaml")


def test_brute_solve_limits() -> None:
    with pytest.raises(ScopeError):
        brute_solve("?x^2 = a", 7)
    with pytest.raises(ScopeError):
        brute_solve("?x ?y ?z ?w = a", 1)
    with pytest.raises(ScopeError):
        brute_solve("?x a ?x^-1 = b", 2, search_budget=5)
    with pytest.raises(PreconditionError):
        brute_solve("?x^2 = 1", 2)


def test_glue_surfaces() -> None:
    (torus,) = glue([(1, 2, -1, -2)])
    assert (torus.chi, torus.orientable) == (0, True)
    (plane,) = glue([(1, 1)])
    assert (plane.chi, plane.orientable) == (1, False)
    (sphere,) = glue([(1,), (-1,)])
    assert (sphere.chi, sphere.orientable) == (2, True)


def test_canonical_form() -> None:
    assert canonical_form([(-1,), (1,)]) == ((1,), (1,))
    assert canonical_form([(1, 2), (-2,), (1,)]) == canonical_form([(2,), (1,), (2, 1)])


def test_two_coefficient_configurations() -> None:
    eq = classify("c1 ?v^-1 c2 ?v = 1")
    assert [str(c) for c in enumerate_configs(eq)] == ["p1|p1"]


def test_three_coefficient_configurations() -> None:
    eq = classify("c1 ?u^-1 c2 ?u ?v^-1 c3 ?v = 1")
    configs = enumerate_configs(eq)
    assert [str(c) for c in configs if c.variable_count == 2] == ["p1|p2|p1p2"]
    assert any(c.variable_count == 3 for c in configs)
    assert all(euler_bound_holds(c, eq) for c in configs)
    assert all(c.variable_count <= n_bound(eq) for c in configs)


def test_three_coefficient_families() -> None:
    configs = [str(c) for c in enumerate_configs(classify("c1 ?u^-1 c2 ?u ?v^-1 c3 ?v = 1"))]
    assert "p1|p2|p1p2" in configs
    assert "p1p2|p1p3|p2p3^-1" in configs


def test_configurations_need_genus_zero() -> None:
    with pytest.raises(ScopeError):
        enumerate_configs(classify("?x^2 c = 1"))


def test_abelian_obstruction() -> None:
    result = abelian_obstruction("?x^8 ?y^2 ?z^-2 = e1^7 e2^2 e3^-2")
    assert result.obstructed
    assert result.as_dict()["result"] == "obstructed"
    assert any("e1" in row for row in result.failing_rows)

    assert abelian_obstruction("?x^2 = a^2").witness == {"x": {"a": 1}}

    raw = parse_equation("?x ?y = a b")
    witness = abelian_obstruction(raw).witness
    for g in ("a", "b"):
        assert witness["x"][g] + witness["y"][g] == 1


def test_abelian_obstruction_fixed_coefficients() -> None:
    result = abelian_obstruction("?x^2 = a^2", Alphabet.of("a", "b"))
    assert not result.obstructed
    assert result.witness["x"]["b"] == 0


def test_ls_check() -> None:
    ab = parse_word("a b", F2)
    result = ls_check(ab, parse_word("b a", F2), parse_word("a b a b", F2), 3, 3)
    assert result.premise_met
    assert (str(result.a1), str(result.a2), result.k1, result.k2) == ("a b", "b a", 1, 1)

    inverse = ls_check(ab, parse_word("b^-1 a^-1", F2), parse_word("a b a b", F2), 3, -3)
    assert inverse.premise_met
    assert inverse.k2 == -1

    assert not ls_check(ab, parse_word("b a", F2), parse_word("a b a", F2), 3, 3).premise_met
    assert not ls_check(
        parse_word("a", F2), parse_word("b", F2), parse_word("a^2", F2), 4, 4
    ).premise_met
    with pytest.raises(PreconditionError):
        ls_check(parse_word("a b a^-1", F2), ab, ab, 2, 2)


def test_ls_sweep() -> None:
    report = ls_sweep(max_len=2, max_power=3)
    assert report.passed
    assert report.premise_met > 0
    assert report.as_dict()["passed"]


def test_imposs_check() -> None:
    a, b, one = parse_word("a", F2), parse_word("a^-1", F2), parse_word("1", F2)
    result = imposs_check(a, b, one, 9, 7)
    assert result.premise_met
    assert result.pair == ("a", "b")
    assert not imposs_check(parse_word("a b", F2), parse_word("b", F2), a, 9, 8).premise_met
    with pytest.raises(PreconditionError):
        imposs_check(a, b, one, 8, 7)
    with pytest.raises(PreconditionError):
        imposs_check(a, b, one, 9, 6)


def test_imposs_sweep() -> None:
    report = imposs_sweep(max_len=2)
    assert report.passed
    assert report.premise_met > 0


def test_solution_satisfies_equation() -> None:
    raw = parse_equation("?x^2 ?y^2 = a^2 b^2")
    result = brute_solve(raw, 4)
    assert result.found
    coef = raw.coefficient_alphabet
    images = [
        result.solution[g[1:]] if g.startswith("?") else parse_word(g, coef)
        for g in raw.alphabet.generators
    ]
    assert substitute(raw.word, images).is_identity


def test_ls_sweep_full_size() -> None:
    report = ls_sweep(max_len=4, max_power=4)
    assert report.passed
    assert report.premise_met > 0


AP_EQUATION = "?x^8 ?y^{m} ?z^-{m} = e1^7 e2^{q} e3^-{q}"


@pytest.mark.parametrize("m, q", [(2, 2), (2, 10), (10, 2)])
def test_ap_equation_is_obstructed(m, q) -> None:
    result = abelian_obstruction(AP_EQUATION.format(m=m, q=q))
    assert result.obstructed
    assert any("e1" in row for row in result.failing_rows)


@pytest.mark.parametrize("q", [2, 10])
def test_ap_equation_solvable_at_m1(q) -> None:
    result = abelian_obstruction(AP_EQUATION.format(m=1, q=q))
    assert not result.obstructed
    x, y, z = (result.witness[v] for v in ("x", "y", "z"))
    rhs = {"e1": 7, "e2": q, "e3": -q}
    for g, b in rhs.items():
        assert 8 * x[g] + y[g] - z[g] == b


def test_obstructed_equation_has_no_short_solution() -> None:
    result = brute_solve(AP_EQUATION.format(m=2, q=2), 4)
    assert not result.found
    assert result.visited > 0
