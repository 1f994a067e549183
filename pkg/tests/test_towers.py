"""Tests for centralizer towers and their normal forms."""

import random

from hypothesis import given, settings, strategies as st
import pytest

from fg_workbench import towers
from fg_workbench.exceptions import AlphabetError, PreconditionError, TowerError
from fg_workbench.parse_io import parse_tower, parse_tower_word, parse_word
from fg_workbench.towers import (
    abstract_alphabet,
    amalgam_images,
    build_primitive_tower,
    centralizer_tower,
    check_injective_sample,
    coset_representative,
    embed_free_product,
    letter,
    random_britton_reduced,
)
from fg_workbench.words import Alphabet, random_reduced_word
from tests.cases import load_cases

F2 = Alphabet.of("a", "b")


def _tower(path: str) -> towers.TowerSpec:
    with open(path) as f:
        return parse_tower(f.read())


L2 = _tower("config/towers/example-3-1.tower")
STRONG = _tower("config/towers/strong-ap.tower")


def normal_form_test(casefile: str):
    def fn() -> None:
        for case in load_cases(casefile, "normal_forms"):
            spec = _tower(case["tower"])
            w = parse_tower_word(case["word"], spec)
            assert str(w) == case["expected"], case
            assert w.stable_count == case["stable_count"], case

    return fn


def equality_test(casefile: str):
    def fn() -> None:
        for case in load_cases(casefile, "equalities"):
            spec = _tower(case["tower"])
            u, v = parse_tower_word(case["u"], spec), parse_tower_word(case["v"], spec)
            assert towers.equal(u, v) == case["equal"], case

    return fn


test_normal_forms = normal_form_test("tests/towers.yaml")
test_equalities = equality_test("tests/towers.yaml")


def test_stable_letter_centralizes_root() -> None:
    t = letter(L2, "t")
    u = parse_tower_word("x^2 b x^2", L2)
    assert towers.is_trivial(towers.commutator(t, u))
    assert not towers.is_trivial(towers.commutator(t, parse_tower_word("x", L2)))
    assert (t * u * ~t).word == u.word


def test_coset_representative() -> None:
    alphabet = Alphabet.of("a", "b", "x")
    r = parse_word("x^2 b x^2", alphabet)
    g = parse_word("a", alphabet) * r * r
    rep, k = coset_representative(g, r)
    assert str(rep) == "a"
    assert k == 2


def test_power_and_inverse() -> None:
    w = parse_tower_word("t a t^-1 x", L2)
    assert towers.is_trivial(towers.power(w, 3) * towers.power(w, -3))
    assert towers.equal(towers.power(w, 2), w * w)
    assert towers.is_trivial(w * towers.invert(w))


def test_validation() -> None:
    with pytest.raises(TowerError):
        centralizer_tower(["a", "b"], (), [("t", parse_word("a b", F2)), ("s", parse_word("b a", F2))])
    with pytest.raises(TowerError):
        centralizer_tower(["a", "b"], ["a"])
    spec = centralizer_tower(["a", "b"], ["x"], [("t", parse_word("x a", Alphabet.of("x", "a")))])
    assert spec.alphabet.generators == ("a", "b", "x", "t")
    assert str(spec.root_of("t")) == "x a"


def test_different_towers_do_not_mix() -> None:
    with pytest.raises(TowerError):
        letter(L2, "a") * letter(STRONG, "b")


def test_amalgam_images() -> None:
    images = amalgam_images(L2, "t", ["a", "b", "x"])
    assert str(images["a"]) == "t^-1 a t"
    # the root is fixed by conjugation
    r = towers.substitute(images, parse_word("x^2 b x^2", Alphabet.of("a", "b", "x")))
    assert towers.equal(r, parse_tower_word("x^2 b x^2", L2))


def test_substitute_needs_every_image() -> None:
    images = {"a": letter(L2, "a")}
    with pytest.raises(AlphabetError):
        towers.substitute(images, parse_word("a b", F2))


def test_embed_free_product() -> None:
    images = embed_free_product(L2, 2, parse_word("a", F2))
    assert [str(w) for w in images] == ["t a t a t", "t^2 a t^2 a t^2"]
    report = check_injective_sample(images, trials=60, max_len=6, seed=3)
    assert report.passed
    assert report.sampled == 60
    assert report.as_dict()["passed"]


def test_embed_free_product_rejects() -> None:
    alphabet = Alphabet.of("b", "x")
    with pytest.raises(TowerError):
        embed_free_product(L2, 2, parse_word("x^2 b x^2", alphabet))
    with pytest.raises(PreconditionError):
        embed_free_product(L2, 2, parse_word("a t", Alphabet.of("a", "t")))
    with pytest.raises(PreconditionError):
        embed_free_product(L2, 0, parse_word("a", F2))
    with pytest.raises(PreconditionError):
        embed_free_product(L2, 1, parse_word("a", F2), stable="s")


def test_injectivity_failure_is_reported() -> None:
    a = letter(L2, "a")
    report = check_injective_sample([a, a], words=[parse_word("x1 x2^-1", abstract_alphabet(2))])
    assert not report.passed
    assert report.failures == ["x1 x2^-1"]


def test_build_primitive_tower() -> None:
    spec = build_primitive_tower(F2, [parse_word("a", F2), parse_word("a b", F2)])
    assert [e.stable for e in spec.extensions] == ["t1", "t2"]
    t1, t2 = letter(spec, "t1"), letter(spec, "t2")
    assert towers.is_trivial(towers.commutator(t1, parse_tower_word("a", spec)))
    assert towers.is_trivial(towers.commutator(t2, parse_tower_word("a b", spec)))
    assert not towers.is_trivial(towers.commutator(t1, t2))
    with pytest.raises(TowerError):
        build_primitive_tower(F2, [parse_word("a^2", F2)])
    with pytest.raises(TowerError):
        build_primitive_tower(F2, [parse_word("a", F2), parse_word("b a b^-1", F2)])


@settings(deadline=None, max_examples=40)
@given(st.integers(0, 10**6), st.integers(1, 4))
def test_britton_reduced_words_are_nontrivial(seed, syllables) -> None:
    rng = random.Random(seed)
    for spec in (L2, STRONG):
        w = random_britton_reduced(spec, rng, syllables)
        assert not towers.is_trivial(w)
        assert w.stable_count == syllables


@settings(deadline=None, max_examples=40)
@given(st.integers(0, 10**6))
def test_normal_form_is_canonical(seed) -> None:
    rng = random.Random(seed)
    u = random_britton_reduced(STRONG, rng, 2)
    v = random_britton_reduced(STRONG, rng, 1)
    r1 = parse_tower_word("x^2 b x^2", STRONG)
    # u v equals u r1 r1^-1 v however the product is bracketed
    left = (u * r1) * (towers.invert(r1) * v)
    right = u * (r1 * towers.invert(r1)) * v
    assert left.word == right.word == (u * v).word


def _relator_instance(spec: towers.TowerSpec, rng: random.Random) -> towers.TowerWord:
    ext = rng.choice(spec.extensions)
    t = letter(spec, ext.stable) ** rng.choice((1, -1))
    u = towers.tower_word(spec, spec.root_of(ext.stable)) ** rng.choice((-2, -1, 1, 2))
    g = random_britton_reduced(spec, rng, rng.randint(0, 2))
    return towers.conjugate(towers.commutator(t, u), g)


@pytest.mark.parametrize("spec", [L2, STRONG], ids=["example-3-1", "strong-ap"])
def test_seeded_word_problem_suite(spec) -> None:
    rng = random.Random(31)
    free = Alphabet(spec.free_letters)
    for _ in range(1000):
        assert towers.is_trivial(_relator_instance(spec, rng))
    for _ in range(1000):
        w = random_britton_reduced(spec, rng, rng.randint(0, 4))
        assert towers.is_trivial(w * towers.invert(w)), w
    for _ in range(1000):
        syllables = rng.randint(1, 4)
        w = random_britton_reduced(spec, rng, syllables)
        assert not towers.is_trivial(w), w
        assert w.stable_count == syllables
    for _ in range(1000):
        base = random_reduced_word(free, rng.randint(1, 8), rng)
        assert not towers.is_trivial(towers.tower_word(spec, base)), base


def test_embedding_sample_full_size() -> None:
    images = embed_free_product(L2, 2, parse_word("a", F2))
    report = check_injective_sample(images, trials=500, max_len=8, seed=17)
    assert report.sampled == 500
    assert report.failures == []
