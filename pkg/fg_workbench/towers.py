"""
Iterated centralizer extensions of a free group.

Every centralizer word is free of stable letters and the roots of different
steps are pairwise non-conjugate, so each step t_i simply commutes with the
cyclic group <r_i> and the whole tower is a multiple HNN extension of the
free group on the base and free-product letters.  Words are kept in the
normal form

    g_0 t_1^e_1 g_1 ... t_k^e_k g_k

with no pinch t^-e g t^e (g in <r>) and every g_j before a stable letter the
shortlex-least element of its coset g_j <r>.  Two words are equal in the
group iff their normal forms coincide.
"""

from collections.abc import Iterable, Mapping, Sequence
from dataclasses import dataclass, field
from functools import cached_property
import logging
import random
from typing import Any, Optional, Union

from .const import DEFAULT_MAX_LEN, DEFAULT_SEED, DEFAULT_TRIALS
from .exceptions import AlphabetError, PreconditionError, TowerError
from .words import (
    Alphabet,
    Word,
    cyclic_reduce,
    identity,
    invert as invert_word,
    is_conjugate,
    is_power_of,
    multiply as multiply_word,
    power as power_word,
    random_reduced_word,
    reduce,
    root,
    shortlex_key,
)

_LOGGER = logging.getLogger(__name__)


@dataclass(frozen=True)
class FreeProduct:
    letters: tuple[str, ...]


@dataclass(frozen=True)
class CentralizerExt:
    stable: str
    u: Word


Step = Union[FreeProduct, CentralizerExt]


@dataclass(frozen=True)
class TowerSpec:
    base: Alphabet
    steps: tuple[Step, ...] = ()

    @cached_property
    def alphabet(self) -> Alphabet:
        names = list(self.base.generators)
        for step in self.steps:
            if isinstance(step, FreeProduct):
                names.extend(step.letters)
            else:
                names.append(step.stable)
        try:
            return Alphabet(tuple(names))
        except AlphabetError as e:
            raise TowerError(f"name clash: {e}") from None

    @cached_property
    def free_letters(self) -> tuple[str, ...]:
        out = list(self.base.generators)
        for step in self.steps:
            if isinstance(step, FreeProduct):
                out.extend(step.letters)
        return tuple(out)

    @property
    def extensions(self) -> tuple[CentralizerExt, ...]:
        return tuple(s for s in self.steps if isinstance(s, CentralizerExt))

    @cached_property
    def roots(self) -> dict[int, Word]:
        """Root of each centralizer word, keyed by the stable letter's code."""
        return {self.alphabet.code(ext.stable): root(ext.u).root for ext in self.extensions}

    def root_of(self, stable: str) -> Word:
        return self.roots[self.alphabet.code(stable)]

    def is_stable(self, code: int) -> bool:
        return abs(code) in self.roots

    def as_dict(self) -> dict[str, Any]:
        steps: list[dict[str, Any]] = []
        for step in self.steps:
            if isinstance(step, FreeProduct):
                steps.append({"free": list(step.letters)})
            else:
                steps.append({"ext": step.stable, "u": str(step.u)})
        return dict(base=list(self.base.generators), steps=steps)


def _rebase(u: Word, alphabet: Alphabet) -> Word:
    if u.alphabet == alphabet:
        return u
    return reduce(alphabet, ((u.alphabet.name(c), 1 if c > 0 else -1) for c in u.letters))


def validate(spec: TowerSpec) -> TowerSpec:
    """Check the tower invariants; centralizer words are moved onto the
    tower's full alphabet."""
    full = spec.alphabet
    stable_names = {s.stable for s in spec.extensions}
    available = set(spec.base.generators)
    steps: list[Step] = []
    for step in spec.steps:
        if isinstance(step, FreeProduct):
            available.update(step.letters)
            steps.append(step)
            continue
        for c in step.u.letters:
            name = step.u.alphabet.name(c)
            if name in stable_names:
                raise TowerError(
                    f"stable letter {name} inside centralizer word of {step.stable}"
                )
            if name not in available:
                raise TowerError(
                    f"centralizer word of {step.stable} uses {name}, "
                    "which is not an earlier free letter"
                )
        u = _rebase(step.u, full)
        if u.is_identity:
            raise TowerError(f"centralizer word of {step.stable} is trivial")
        steps.append(CentralizerExt(step.stable, u))

    checked = TowerSpec(spec.base, tuple(steps))
    exts = checked.extensions
    for i, first in enumerate(exts):
        for second in exts[i + 1 :]:
            r1, r2 = checked.root_of(first.stable), checked.root_of(second.stable)
            if is_conjugate(r1, r2).conjugate or is_conjugate(r1, invert_word(r2)).conjugate:
                raise TowerError(
                    f"roots of {first.stable} and {second.stable} are conjugate ({r1} ~ {r2})"
                )
    _LOGGER.debug(
        f"validated tower over [{checked.base}] with {len(steps)} steps, "
        f"roots {[str(r) for r in checked.roots.values()]}"
    )
    return checked


def centralizer_tower(
    base: Sequence[str],
    free: Sequence[str] = (),
    extensions: Sequence[tuple[str, Word]] = (),
) -> TowerSpec:
    """base, then one free-product step (if any), then centralizer steps."""
    steps: list[Step] = []
    if free:
        steps.append(FreeProduct(tuple(free)))
    steps.extend(CentralizerExt(t, u) for t, u in extensions)
    return validate(TowerSpec(Alphabet(tuple(base)), tuple(steps)))


@dataclass(frozen=True)
class TowerWord:
    """An element of the tower, stored in normal form."""

    spec: TowerSpec = field(repr=False)
    word: Word

    @property
    def is_identity(self) -> bool:
        return self.word.is_identity

    @property
    def stable_count(self) -> int:
        return sum(1 for c in self.word.letters if self.spec.is_stable(c))

    def __mul__(self, other: "TowerWord") -> "TowerWord":
        return multiply(self, other)

    def __invert__(self) -> "TowerWord":
        return invert(self)

    def __pow__(self, k: int) -> "TowerWord":
        return power(self, k)

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return str(self.word)

    def as_dict(self) -> dict[str, Any]:
        return dict(word=str(self.word), trivial=self.is_identity)


def coset_representative(g: Word, r: Word) -> tuple[Word, int]:
    """Return (rep, k) with g = rep r^k and rep shortlex-least in g<r>."""
    cw = cyclic_reduce(r)
    bound = (2 * len(g) + 2 * len(cw.conjugator)) // len(cw.core) + 1
    best_key, best, best_k = None, g, 0
    for j in range(-bound, bound + 1):
        cand = multiply_word(g, power_word(r, j))
        key = shortlex_key(cand)
        if best_key is None or key < best_key:
            best_key, best, best_k = key, cand, -j
    return best, best_k


def _normal_form(spec: TowerSpec, codes: Iterable[int]) -> Word:
    alphabet = spec.alphabet
    stables: list[int] = []
    segments: list[Word] = [identity(alphabet)]
    pinches = 0
    for c in codes:
        if not spec.is_stable(c):
            segments[-1] = multiply_word(segments[-1], Word(alphabet, (c,)))
            continue
        r = spec.roots[abs(c)]
        cur = segments[-1]
        if stables and stables[-1] == -c and is_power_of(cur, r) is not None:
            # t^-e r^k t^e = r^k
            stables.pop()
            segments.pop()
            segments[-1] = multiply_word(segments[-1], cur)
            pinches += 1
            continue
        rep, k = coset_representative(cur, r)
        segments[-1] = rep
        stables.append(c)
        segments.append(power_word(r, k))

    out: list[int] = list(segments[0].letters)
    for s, seg in zip(stables, segments[1:]):
        out.append(s)
        out.extend(seg.letters)
    if pinches:
        _LOGGER.debug(f"removed {pinches} pinches, {len(stables)} stable letters remain")
    return Word(alphabet, tuple(out))


def tower_word(spec: TowerSpec, word: Union[Word, Iterable[Any]]) -> TowerWord:
    """Normal form of a word (or raw letters) over the tower's alphabet."""
    if isinstance(word, Word):
        if word.alphabet != spec.alphabet:
            word = _rebase(word, spec.alphabet)
        codes: Iterable[int] = word.letters
    else:
        codes = reduce(spec.alphabet, word).letters
    return TowerWord(spec, _normal_form(spec, codes))


def letter(spec: TowerSpec, name: str) -> TowerWord:
    return TowerWord(spec, Word(spec.alphabet, (spec.alphabet.code(name),)))


def reduce_tower(w: TowerWord) -> TowerWord:
    return TowerWord(w.spec, _normal_form(w.spec, w.word.letters))


def is_trivial(w: TowerWord) -> bool:
    return reduce_tower(w).is_identity


def _same_tower(u: TowerWord, v: TowerWord) -> None:
    if u.spec != v.spec:
        raise TowerError("tower words from different towers")


def multiply(u: TowerWord, v: TowerWord) -> TowerWord:
    _same_tower(u, v)
    return TowerWord(u.spec, _normal_form(u.spec, u.word.letters + v.word.letters))


def invert(u: TowerWord) -> TowerWord:
    return TowerWord(u.spec, _normal_form(u.spec, invert_word(u.word).letters))


def power(u: TowerWord, k: int) -> TowerWord:
    if k < 0:
        u, k = invert(u), -k
    out = TowerWord(u.spec, identity(u.spec.alphabet))
    for _ in range(k):
        out = multiply(out, u)
    return out


def conjugate(u: TowerWord, g: TowerWord) -> TowerWord:
    """u^g = g^-1 u g"""
    return multiply(multiply(invert(g), u), g)


def commutator(u: TowerWord, v: TowerWord) -> TowerWord:
    return multiply(multiply(invert(u), invert(v)), multiply(u, v))


def equal(u: TowerWord, v: TowerWord) -> bool:
    _same_tower(u, v)
    return reduce_tower(u).word == reduce_tower(v).word


def substitute(images: Union[Sequence[TowerWord], Mapping[str, TowerWord]], abstract: Word) -> TowerWord:
    """Image of an abstract word under generator -> tower word."""
    if isinstance(images, Mapping):
        try:
            ordered = [images[g] for g in abstract.alphabet.generators]
        except KeyError as e:
            raise AlphabetError(f"no image for generator {e.args[0]}") from None
    else:
        ordered = list(images)
    if len(ordered) != abstract.alphabet.rank:
        raise AlphabetError(f"need {abstract.alphabet.rank} images, got {len(ordered)}")
    if not ordered:
        raise AlphabetError("no images given")
    spec = ordered[0].spec
    inverses = [invert(img) for img in ordered]
    codes: list[int] = []
    for c in abstract.letters:
        img = ordered[c - 1] if c > 0 else inverses[-c - 1]
        codes.extend(img.word.letters)
    return TowerWord(spec, _normal_form(spec, codes))


def amalgam_images(spec: TowerSpec, stable: str, names: Sequence[str]) -> dict[str, TowerWord]:
    """x -> x^t = t^-1 x t for each named free letter."""
    t = letter(spec, stable)
    return {name: conjugate(letter(spec, name), t) for name in names}


def _find_extension(spec: TowerSpec, stable: Optional[str]) -> CentralizerExt:
    exts = spec.extensions
    if not exts:
        raise PreconditionError("tower has no centralizer step")
    if stable is None:
        return exts[-1]
    for ext in exts:
        if ext.stable == stable:
            return ext
    raise PreconditionError(f"no centralizer step with stable letter {stable}")


def embed_free_product(
    spec: TowerSpec, count: int, g: Word, stable: Optional[str] = None
) -> list[TowerWord]:
    """Images t^i g t^i g t^i (i = 1..count) of a free basis x_1..x_count."""
    ext = _find_extension(spec, stable)
    g = _rebase(g, spec.alphabet)
    if any(spec.is_stable(c) for c in g.letters):
        raise PreconditionError(f"{g} must be a word in the free letters")
    if is_power_of(g, spec.root_of(ext.stable)) is not None:
        raise TowerError(f"{g} lies in the centralizer <{spec.root_of(ext.stable)}>")
    if count < 1:
        raise PreconditionError("count must be positive")
    t = letter(spec, ext.stable)
    gw = tower_word(spec, g)
    out = []
    for i in range(1, count + 1):
        ti = power(t, i)
        out.append(ti * gw * ti * gw * ti)
    return out


@dataclass
class InjectivityReport:
    trials: int
    max_len: int
    seed: int
    sampled: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict[str, Any]:
        return dict(
            trials=self.trials,
            max_len=self.max_len,
            seed=self.seed,
            sampled=self.sampled,
            failures=list(self.failures),
            passed=self.passed,
        )


def abstract_alphabet(count: int, prefix: str = "x") -> Alphabet:
    return Alphabet(tuple(f"{prefix}{i}" for i in range(1, count + 1)))


def check_injective_sample(
    images: Sequence[TowerWord],
    trials: int = DEFAULT_TRIALS,
    max_len: int = DEFAULT_MAX_LEN,
    seed: int = DEFAULT_SEED,
    words: Optional[Iterable[Word]] = None,
) -> InjectivityReport:
    """Sample nontrivial abstract words and check their images stay nontrivial.

    Given explicit words, those are checked instead of random ones; trivial
    ones are skipped.
    """
    if not images:
        raise PreconditionError("no images to test")
    alphabet = abstract_alphabet(len(images))
    report = InjectivityReport(trials, max_len, seed)
    if words is None:
        rng = random.Random(seed)
        words = (
            random_reduced_word(alphabet, rng.randint(1, max_len), rng) for _ in range(trials)
        )
    for w in words:
        if w.is_identity:
            continue
        if w.alphabet != alphabet:
            w = _rebase(w, alphabet)
        report.sampled += 1
        if is_trivial(substitute(images, w)):
            report.failures.append(str(w))
    if report.failures:
        _LOGGER.warning(f"injectivity sampling found {len(report.failures)} trivial images")
    else:
        _LOGGER.info(f"injectivity sampling: {report.sampled} words, no collisions (seed {seed})")
    return report


def build_primitive_tower(
    base: Alphabet, c: Sequence[Word], stable_names: Optional[Sequence[str]] = None
) -> TowerSpec:
    """Extend the centralizers of distinct primitive elements c_1..c_n of F(base)."""
    from .whitehead import is_primitive

    words = [_rebase(w, base) for w in c]
    for w in words:
        if w.is_identity or not is_primitive(w):
            raise TowerError(f"{w} is not primitive in F({base})")
    for i, first in enumerate(words):
        for second in words[i + 1 :]:
            if is_conjugate(first, second).conjugate or is_conjugate(first, invert_word(second)).conjugate:
                raise TowerError(f"{first} and {second} are conjugate")
    if stable_names is None:
        stable_names = []
        k = 1
        while len(stable_names) < len(words):
            name = f"t{k}"
            if name not in base:
                stable_names.append(name)
            k += 1
    if len(stable_names) != len(words):
        raise PreconditionError("one stable letter name per primitive element")
    return centralizer_tower(base.generators, (), list(zip(stable_names, words)))


def random_britton_reduced(
    spec: TowerSpec, rng: random.Random, syllables: int, segment_len: int = 3
) -> TowerWord:
    """A random word with `syllables` stable letters and no pinch."""
    if not spec.extensions:
        raise PreconditionError("tower has no centralizer step")
    free = Alphabet(spec.free_letters)
    stable_codes = [spec.alphabet.code(e.stable) for e in spec.extensions]
    codes: list[int] = list(_rebase(random_reduced_word(free, rng.randint(0, segment_len), rng), spec.alphabet).letters)
    prev: Optional[int] = None
    for _ in range(syllables):
        s = rng.choice(stable_codes) * rng.choice((1, -1))
        seg = identity(spec.alphabet)
        if prev is not None:
            r = spec.roots[abs(s)]
            while prev == -s and is_power_of(seg, r) is not None:
                seg = _rebase(random_reduced_word(free, rng.randint(1, segment_len), rng), spec.alphabet)
            if prev != -s:
                seg = _rebase(random_reduced_word(free, rng.randint(0, segment_len), rng), spec.alphabet)
            codes.extend(seg.letters)
        codes.append(s)
        prev = s
    tail = random_reduced_word(free, rng.randint(0, segment_len), rng)
    codes.extend(_rebase(tail, spec.alphabet).letters)
    return tower_word(spec, reduce(spec.alphabet, codes))
