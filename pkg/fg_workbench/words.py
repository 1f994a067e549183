"""
Freely reduced words over a finite, ordered alphabet.

Letters are stored as signed integer codes: the i-th generator of the
alphabet is ``i + 1`` and its inverse is ``-(i + 1)``.  The alphabet order
extends to letters as ``a < a^-1 < b < b^-1 < ...``; every canonical choice
in the package (cyclic cores, shortlex order, enumeration order) uses it.
"""

from collections.abc import Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property
import logging
from math import gcd
import random
from typing import NamedTuple, Optional, Union

from .exceptions import AlphabetError, UndefinedRootError

_LOGGER = logging.getLogger(__name__)

RawLetter = Union[int, tuple[Union[str, int], int]]


@dataclass(frozen=True)
class Alphabet:
    """An ordered list of distinct, nonempty generator names."""

    generators: tuple[str, ...]

    def __post_init__(self) -> None:
        gens = tuple(self.generators)
        object.__setattr__(self, "generators", gens)
        for g in gens:
            if not isinstance(g, str) or not g:
                raise AlphabetError(f"invalid generator name {g!r}")
        if len(set(gens)) != len(gens):
            dupes = sorted({g for g in gens if gens.count(g) > 1})
            raise AlphabetError(f"duplicate generator names: {', '.join(dupes)}")

    @classmethod
    def of(cls, *names: str) -> "Alphabet":
        return cls(tuple(names))

    @classmethod
    def from_string(cls, text: str) -> "Alphabet":
        """'a b x' or 'a,b,x'"""
        return cls(tuple(text.replace(",", " ").split()))

    @cached_property
    def _positions(self) -> dict[str, int]:
        return {g: i for i, g in enumerate(self.generators)}

    @property
    def rank(self) -> int:
        return len(self.generators)

    def __contains__(self, name: object) -> bool:
        return name in self._positions

    def __len__(self) -> int:
        return len(self.generators)

    def __iter__(self) -> Iterator[str]:
        return iter(self.generators)

    def index(self, name: str) -> int:
        try:
            return self._positions[name]
        except KeyError:
            raise AlphabetError(
                f"unknown generator '{name}' (alphabet: {' '.join(self.generators)})"
            ) from None

    def code(self, name: str, sign: int = 1) -> int:
        return (self.index(name) + 1) * (1 if sign > 0 else -1)

    def name(self, code: int) -> str:
        return self.generators[abs(code) - 1]

    def letters(self) -> tuple[int, ...]:
        """All signed letters in alphabet order."""
        return tuple(c for i in range(1, self.rank + 1) for c in (i, -i))

    def extend(self, names: Iterable[str]) -> "Alphabet":
        return Alphabet(self.generators + tuple(names))

    def __str__(self) -> str:
        return " ".join(self.generators)


def letter_key(code: int) -> int:
    return 2 * (abs(code) - 1) + (0 if code > 0 else 1)


def _free_reduce(codes: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for c in codes:
        if stack and stack[-1] == -c:
            stack.pop()
        else:
            stack.append(c)
    return tuple(stack)


@dataclass(frozen=True)
class Word:
    """A freely reduced word.  Build through reduce() unless already reduced."""

    alphabet: Alphabet
    letters: tuple[int, ...] = ()

    def __len__(self) -> int:
        return len(self.letters)

    @property
    def is_identity(self) -> bool:
        return not self.letters

    def pairs(self) -> tuple[tuple[int, int], ...]:
        """The letters as (generator index, sign) pairs."""
        return tuple((abs(c) - 1, 1 if c > 0 else -1) for c in self.letters)

    def __mul__(self, other: "Word") -> "Word":
        return multiply(self, other)

    def __invert__(self) -> "Word":
        return invert(self)

    def __pow__(self, k: int) -> "Word":
        return power(self, k)

    def __str__(self) -> str:
        if not self.letters:
            return "1"
        terms = []
        run_code, run = self.letters[0], 0
        for c in self.letters + (0,):
            if c == run_code:
                run += 1
                continue
            name = self.alphabet.name(run_code)
            exp = run if run_code > 0 else -run
            terms.append(name if exp == 1 else f"{name}^{exp}")
            run_code, run = c, 1
        return " ".join(terms)


@dataclass(frozen=True)
class CyclicWord:
    """conjugator * core * conjugator^-1 is the originating word."""

    core: Word
    conjugator: Word


class Root(NamedTuple):
    root: Word
    power: int


class Conjugacy(NamedTuple):
    conjugate: bool
    witness: Optional[Word]


def _to_code(alphabet: Alphabet, raw: RawLetter) -> int:
    if isinstance(raw, int):
        if raw == 0 or abs(raw) > alphabet.rank:
            raise AlphabetError(f"letter code {raw} outside alphabet of rank {alphabet.rank}")
        return raw
    gen, sign = raw
    if sign not in (1, -1):
        raise AlphabetError(f"letter sign must be +1 or -1, got {sign}")
    if isinstance(gen, str):
        return alphabet.code(gen, sign)
    if not 0 <= gen < alphabet.rank:
        raise AlphabetError(f"generator index {gen} outside alphabet of rank {alphabet.rank}")
    return (gen + 1) * sign


def reduce(alphabet: Alphabet, raw: Iterable[RawLetter]) -> Word:
    """Freely reduce a sequence of signed letters."""
    return Word(alphabet, _free_reduce(_to_code(alphabet, r) for r in raw))


def identity(alphabet: Alphabet) -> Word:
    return Word(alphabet, ())


def generator(alphabet: Alphabet, name: str) -> Word:
    return Word(alphabet, (alphabet.code(name),))


def _same_alphabet(u: Word, v: Word) -> None:
    if u.alphabet != v.alphabet:
        raise AlphabetError(f"alphabet mismatch: [{u.alphabet}] vs [{v.alphabet}]")


def multiply(u: Word, v: Word) -> Word:
    _same_alphabet(u, v)
    a, b = u.letters, v.letters
    k = 0
    while k < min(len(a), len(b)) and a[len(a) - 1 - k] == -b[k]:
        k += 1
    return Word(u.alphabet, a[: len(a) - k] + b[k:])


def invert(u: Word) -> Word:
    return Word(u.alphabet, tuple(-c for c in reversed(u.letters)))


def power(u: Word, k: int) -> Word:
    if k < 0:
        u, k = invert(u), -k
    if k == 0 or u.is_identity:
        return identity(u.alphabet)
    cw = cyclic_reduce(u)
    # the core is cyclically reduced, so its powers need no reduction
    return multiply(
        multiply(cw.conjugator, Word(u.alphabet, cw.core.letters * k)),
        invert(cw.conjugator),
    )


def conjugate(u: Word, g: Word) -> Word:
    """u^g = g^-1 u g"""
    return multiply(multiply(invert(g), u), g)


def commutator(u: Word, v: Word) -> Word:
    """[u, v] = u^-1 v^-1 u v"""
    return multiply(multiply(invert(u), invert(v)), multiply(u, v))


def is_cyclically_reduced(u: Word) -> bool:
    return len(u.letters) < 2 or u.letters[0] != -u.letters[-1]


def _least_rotation(codes: Sequence[int]) -> int:
    keys = [letter_key(c) for c in codes]
    return min(range(len(keys)), key=lambda s: keys[s:] + keys[:s]) if keys else 0


def cyclic_reduce(u: Word) -> CyclicWord:
    """Split u as conjugator * core * conjugator^-1.

    The core is the lexicographically least cyclic shift of the cyclically
    reduced part, so two words are conjugate iff their cores are equal.
    """
    codes = u.letters
    n = len(codes)
    i = 0
    while i < n - 1 - i and codes[i] == -codes[n - 1 - i]:
        i += 1
    outer, inner = codes[:i], codes[i : n - i]
    s = _least_rotation(inner)
    core = Word(u.alphabet, inner[s:] + inner[:s])
    conjugator = Word(u.alphabet, _free_reduce(outer + inner[:s]))
    return CyclicWord(core, conjugator)


def cyclic_length(u: Word) -> int:
    codes = u.letters
    n = len(codes)
    i = 0
    while i < n - 1 - i and codes[i] == -codes[n - 1 - i]:
        i += 1
    return n - 2 * i


def exponent_sum(u: Word, g: Union[str, int]) -> int:
    idx = u.alphabet.index(g) if isinstance(g, str) else g
    if not 0 <= idx < u.alphabet.rank:
        raise AlphabetError(f"generator index {g} outside alphabet")
    return sum(1 if c > 0 else -1 for c in u.letters if abs(c) == idx + 1)


def exponent_vector(u: Word) -> tuple[int, ...]:
    vec = [0] * u.alphabet.rank
    for c in u.letters:
        vec[abs(c) - 1] += 1 if c > 0 else -1
    return tuple(vec)


def abelian_gcd(u: Word) -> int:
    g = 0
    for e in exponent_vector(u):
        g = gcd(g, e)
    return g


def root(u: Word) -> Root:
    """Maximal root: u = r^k with k maximal and r not a proper power."""
    if u.is_identity:
        raise UndefinedRootError("the identity has no root")
    cw = cyclic_reduce(u)
    core = cw.core.letters
    n = len(core)
    for d in range(1, n + 1):
        if n % d == 0 and core == core[:d] * (n // d):
            r = Word(u.alphabet, core[:d])
            r = multiply(multiply(cw.conjugator, r), invert(cw.conjugator))
            return Root(r, n // d)
    raise AssertionError("unreachable: every word is its own first power")


def is_proper_power(u: Word) -> bool:
    return not u.is_identity and root(u).power > 1


def is_power_of(u: Word, r: Word) -> Optional[int]:
    """Return k with u = r^k, or None.  r must not be a proper power."""
    if u.is_identity:
        return 0
    ru = root(u)
    if ru.root == r:
        return ru.power
    if ru.root == invert(r):
        return -ru.power
    return None


def is_conjugate(u: Word, v: Word) -> Conjugacy:
    """Return (True, g) with g u g^-1 = v when u and v are conjugate."""
    _same_alphabet(u, v)
    cu, cv = cyclic_reduce(u), cyclic_reduce(v)
    if cu.core != cv.core:
        return Conjugacy(False, None)
    return Conjugacy(True, multiply(cv.conjugator, invert(cu.conjugator)))


def commutes_with_conjugate(u: Word, v: Word) -> Conjugacy:
    """Return (True, g) when u commutes with g v g^-1.

    Commuting with a conjugate of v is the same as commuting with a conjugate
    of v^-1, so both orientations of the roots are tried.
    """
    _same_alphabet(u, v)
    if u.is_identity or v.is_identity:
        return Conjugacy(True, identity(u.alphabet))
    ru, rv = root(u).root, root(v).root
    for target in (rv, invert(rv)):
        found, g = is_conjugate(ru, target)
        if found:
            # g ru g^-1 = target, so u commutes with g^-1 v g
            return Conjugacy(True, invert(g))
    return Conjugacy(False, None)


def is_subword(w: Union[Word, Sequence[int]], u: Union[Word, Sequence[int]]) -> bool:
    """Does w occur as a contiguous block of u?"""
    needle = tuple(w.letters if isinstance(w, Word) else w)
    hay = tuple(u.letters if isinstance(u, Word) else u)
    n = len(needle)
    return any(hay[i : i + n] == needle for i in range(len(hay) - n + 1))


def cyclic_shifts(u: Word) -> list[Word]:
    c = u.letters
    return [Word(u.alphabet, c[i:] + c[:i]) for i in range(max(len(c), 1))]


def is_cyclic_shift(u: Word, v: Word) -> bool:
    return len(u) == len(v) and (u.is_identity or is_subword(v, u.letters * 2))


def shortlex_key(u: Word) -> tuple[int, tuple[int, ...]]:
    return len(u), tuple(letter_key(c) for c in u.letters)


def reduced_words(alphabet: Alphabet, length: int) -> Iterator[Word]:
    """All reduced words of the given length, in lexicographic order."""
    letters = alphabet.letters()

    def extend(prefix: tuple[int, ...]) -> Iterator[Word]:
        if len(prefix) == length:
            yield Word(alphabet, prefix)
            return
        for c in letters:
            if prefix and c == -prefix[-1]:
                continue
            yield from extend(prefix + (c,))

    yield from extend(())


def words_up_to(alphabet: Alphabet, max_len: int) -> Iterator[Word]:
    """All reduced words of length <= max_len in shortlex order."""
    for n in range(max_len + 1):
        yield from reduced_words(alphabet, n)


def count_reduced_words(rank: int, length: int) -> int:
    if length == 0:
        return 1
    return 2 * rank * (2 * rank - 1) ** (length - 1)


def random_reduced_word(alphabet: Alphabet, length: int, rng: random.Random) -> Word:
    letters = alphabet.letters()
    codes: list[int] = []
    while len(codes) < length:
        c = rng.choice(letters)
        if codes and c == -codes[-1]:
            continue
        codes.append(c)
    return Word(alphabet, tuple(codes))


def substitute(word: Word, images: Sequence[Word]) -> Word:
    """Image of word under the homomorphism sending generator i to images[i]."""
    if len(images) != word.alphabet.rank:
        raise AlphabetError(
            f"need {word.alphabet.rank} images, got {len(images)}"
        )
    target = images[0].alphabet if images else word.alphabet
    codes: list[int] = []
    for c in word.letters:
        img = images[abs(c) - 1]
        codes.extend(img.letters if c > 0 else invert(img).letters)
    return Word(target, _free_reduce(codes))
