"""Tests for free reduction and the word toolkit."""

from hypothesis import given, settings, strategies as st
import pytest

from fg_workbench.exceptions import AlphabetError, UndefinedRootError
from fg_workbench.parse_io import parse_word
from fg_workbench.words import (
    Alphabet,
    commutator,
    commutes_with_conjugate,
    conjugate,
    count_reduced_words,
    cyclic_reduce,
    exponent_sum,
    generator,
    identity,
    invert,
    is_conjugate,
    is_cyclic_shift,
    is_power_of,
    is_proper_power,
    is_subword,
    power,
    reduce,
    reduced_words,
    root,
    substitute,
    words_up_to,
)
from tests.cases import load_cases
from tests.strategies import nontrivial_word, word_of_rank

F2 = Alphabet.of("a", "b")
F3 = Alphabet.of("a", "b", "c")


def _alphabet(case) -> Alphabet | None:
    return Alphabet.from_string(case["alphabet"]) if "alphabet" in case else None


def reduce_test(casefile: str):
    def fn() -> None:
        for case in load_cases(casefile, "reduce"):
            assert str(parse_word(case["text"], _alphabet(case))) == case["expected"], case

    return fn


def power_test(casefile: str):
    def fn() -> None:
        for case in load_cases(casefile, "power"):
            assert str(power(parse_word(case["text"]), case["k"])) == case["expected"], case

    return fn


def cyclic_test(casefile: str):
    def fn() -> None:
        for case in load_cases(casefile, "cyclic"):
            u = parse_word(case["text"], _alphabet(case))
            cw = cyclic_reduce(u)
            assert str(cw.core) == case["core"], case
            assert str(cw.conjugator) == case["conjugator"], case
            assert cw.conjugator * cw.core * ~cw.conjugator == u

    return fn


def root_test(casefile: str):
    def fn() -> None:
        for case in load_cases(casefile, "root"):
            r = root(parse_word(case["text"]))
            assert str(r.root) == case["root"], case
            assert r.power == case["power"], case

    return fn


def conjugate_test(casefile: str):
    def fn() -> None:
        for case in load_cases(casefile, "conjugate"):
            alphabet = _alphabet(case)
            u, v = parse_word(case["u"], alphabet), parse_word(case["v"], alphabet)
            found, g = is_conjugate(u, v)
            assert found == case["expected"], case
            if found:
                assert g * u * ~g == v

    return fn


def commutes_test(casefile: str):
    def fn() -> None:
        for case in load_cases(casefile, "commutes"):
            u = parse_word(case["u"], F2)
            v = parse_word(case["v"], F2)
            found, g = commutes_with_conjugate(u, v)
            assert found == case["expected"], case
            if found:
                w = g * v * ~g
                assert u * w == w * u

    return fn


def counts_test(casefile: str):
    def fn() -> None:
        for case in load_cases(casefile, "counts"):
            assert count_reduced_words(case["rank"], case["length"]) == case["expected"]
            alphabet = Alphabet(tuple(f"g{i}" for i in range(case["rank"])))
            assert sum(1 for _ in reduced_words(alphabet, case["length"])) == case["expected"]

    return fn


test_reduce = reduce_test("tests/words.yaml")
test_power = power_test("tests/words.yaml")
test_cyclic_reduce = cyclic_test("tests/words.yaml")
test_root = root_test("tests/words.yaml")
test_is_conjugate = conjugate_test("tests/words.yaml")
test_commutes_with_conjugate = commutes_test("tests/words.yaml")
test_count_reduced_words = counts_test("tests/words.yaml")


def test_str_collapses_runs() -> None:
    assert str(reduce(F2, [1, 1, -2, -2, -2])) == "a^2 b^-3"
    assert str(identity(F2)) == "1"


def test_reduce_accepts_pairs() -> None:
    assert reduce(F2, [("a", 1), (1, -1), ("b", 1)]) == reduce(F2, [1])
    with pytest.raises(AlphabetError):
        reduce(F2, [3])
    with pytest.raises(AlphabetError):
        reduce(F2, [("a", 2)])


def test_alphabet_errors() -> None:
    with pytest.raises(AlphabetError):
        Alphabet.of("a", "a")
    with pytest.raises(AlphabetError):
        parse_word("a c", F2)
    with pytest.raises(AlphabetError):
        generator(F2, "c") * generator(F3, "a")


def test_commutator_and_conjugate() -> None:
    a, b = generator(F2, "a"), generator(F2, "b")
    assert str(conjugate(a, b)) == "b^-1 a b"
    assert str(commutator(a, b)) == "a^-1 b^-1 a b"
    assert commutator(a, a).is_identity


def test_root_of_identity() -> None:
    with pytest.raises(UndefinedRootError):
        root(identity(F2))
    assert not is_proper_power(identity(F2))


def test_exponents_and_subwords() -> None:
    w = parse_word("a^3 b a^-1 b^2", F2)
    assert exponent_sum(w, "a") == 2
    assert exponent_sum(w, 1) == 3
    assert is_subword(parse_word("b a^-1", F2), w)
    assert not is_subword(parse_word("b a", F2), w)
    assert is_cyclic_shift(parse_word("b a b", F2), parse_word("a b^2", F2))


def test_is_power_of() -> None:
    r = parse_word("a b", F2)
    assert is_power_of(power(r, 3), r) == 3
    assert is_power_of(power(r, -2), r) == -2
    assert is_power_of(parse_word("a", F2), r) is None


def test_substitute() -> None:
    images = [parse_word("a b", F2), parse_word("b^-1", F2)]
    assert str(substitute(parse_word("a b a", F2), images)) == "a^2 b"
    assert substitute(parse_word("a b a^-1", F2), images) == parse_word("a b^-1 a^-1", F2)


def test_words_up_to_order() -> None:
    words = list(words_up_to(F2, 1))
    assert [str(w) for w in words] == ["1", "a", "a^-1", "b", "b^-1"]


@settings(deadline=None)
@given(word_of_rank(F3))
def test_reduce_is_idempotent(w) -> None:
    assert reduce(F3, w.letters) == w


@settings(deadline=None)
@given(word_of_rank(F3))
def test_inverse(w) -> None:
    assert (w * invert(w)).is_identity
    assert invert(invert(w)) == w


@settings(deadline=None)
@given(word_of_rank(F2))
def test_cyclic_decomposition(w) -> None:
    cw = cyclic_reduce(w)
    assert cw.conjugator * cw.core * ~cw.conjugator == w
    assert len(cw.core) <= len(w)


@settings(deadline=None)
@given(nontrivial_word(F2))
def test_root_power_recovers_word(w) -> None:
    r = root(w)
    assert power(r.root, r.power) == w
    assert not is_proper_power(r.root)


@settings(deadline=None)
@given(word_of_rank(F2), word_of_rank(F2, max_size=6))
def test_conjugates_are_detected(w, g) -> None:
    v = conjugate(w, g)
    found, witness = is_conjugate(w, v)
    assert found
    assert witness * w * ~witness == v


@settings(deadline=None)
@given(word_of_rank(F2, max_size=6), st.integers(-4, 4), st.integers(-4, 4))
def test_power_law(w, j, k) -> None:
    assert power(w, j) * power(w, k) == power(w, j + k)
