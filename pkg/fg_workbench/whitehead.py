"""
Whitehead automorphisms, length minimization, primitivity and free factors.

A type II (multiplier) move is given by a letter A and one action per other
generator x:

    fix      x -> x
    right    x -> x A
    left     x -> A^-1 x
    conj     x -> A^-1 x A

Its inverse is the move with multiplier A^-1 and the same actions.
"""

from collections import deque
from collections.abc import Callable, Iterable, Iterator, Sequence
from dataclasses import dataclass
from functools import cached_property, lru_cache
import itertools
import logging
import random
from typing import Any, Generic, NamedTuple, Optional, TypeVar

from .const import (
    DEFAULT_DECISION_PLATEAU_LIMIT,
    DEFAULT_PLATEAU_LIMIT,
    MAX_FREE_FACTOR_RANK,
)
from .exceptions import AlphabetError, PreconditionError, ScopeError
from .stallings import SubgroupGraph, basis, build, core_size
from .words import Alphabet, Word, abelian_gcd, cyclic_reduce, reduce, substitute

_LOGGER = logging.getLogger(__name__)

KIND_PERMUTATION = "permutation-inversion"
KIND_MULTIPLIER = "multiplier"

ACTION_FIX = "fix"
ACTION_RIGHT = "right"
ACTION_LEFT = "left"
ACTION_CONJ = "conj"
ACTIONS = (ACTION_FIX, ACTION_RIGHT, ACTION_LEFT, ACTION_CONJ)


@dataclass(frozen=True)
class WhiteheadMove:
    alphabet: Alphabet
    kind: str
    # permutation-inversion: signed image code of each generator
    permutation: tuple[int, ...] = ()
    # multiplier: signed letter code and one action per generator
    multiplier: int = 0
    actions: tuple[str, ...] = ()

    def __post_init__(self) -> None:
        n = self.alphabet.rank
        if self.kind == KIND_PERMUTATION:
            if sorted(abs(c) for c in self.permutation) != list(range(1, n + 1)):
                raise AlphabetError(f"not a signed permutation of {n} letters: {self.permutation}")
        elif self.kind == KIND_MULTIPLIER:
            if not 0 < abs(self.multiplier) <= n or len(self.actions) != n:
                raise AlphabetError("multiplier move needs a letter and one action per generator")
            if self.actions[abs(self.multiplier) - 1] != ACTION_FIX:
                raise AlphabetError("the multiplier's own generator must be fixed")
            if any(a not in ACTIONS for a in self.actions):
                raise AlphabetError(f"unknown action in {self.actions}")
        else:
            raise AlphabetError(f"unknown move kind '{self.kind}'")

    @cached_property
    def images(self) -> tuple[Word, ...]:
        n = self.alphabet.rank
        if self.kind == KIND_PERMUTATION:
            return tuple(Word(self.alphabet, (c,)) for c in self.permutation)
        a = self.multiplier
        out = []
        for i in range(n):
            x = i + 1
            raw = {
                ACTION_FIX: (x,),
                ACTION_RIGHT: (x, a),
                ACTION_LEFT: (-a, x),
                ACTION_CONJ: (-a, x, a),
            }[self.actions[i]]
            out.append(reduce(self.alphabet, raw))
        return tuple(out)

    def __str__(self) -> str:
        name = self.alphabet.name
        if self.kind == KIND_PERMUTATION:
            parts = [f"{name(i + 1)}->{Word(self.alphabet, (c,))}" for i, c in enumerate(self.permutation)]
            return "perm(" + ", ".join(parts) + ")"
        mult = Word(self.alphabet, (self.multiplier,))
        parts = [
            f"{name(i + 1)}->{img}"
            for i, img in enumerate(self.images)
            if self.actions[i] != ACTION_FIX
        ]
        return f"mult[{mult}](" + ", ".join(parts) + ")"

    def as_dict(self) -> dict[str, Any]:
        return dict(
            kind=self.kind,
            images={self.alphabet.name(i + 1): str(img) for i, img in enumerate(self.images)},
        )


class MinimizeResult(NamedTuple):
    min_length: int
    moves: list[WhiteheadMove]
    word: Word

    def as_dict(self) -> dict[str, Any]:
        return dict(
            min_length=self.min_length,
            word=str(self.word),
            moves=[str(m) for m in self.moves],
        )


class SubgroupMinimizeResult(NamedTuple):
    min_size: int
    moves: list[WhiteheadMove]
    graph: SubgroupGraph


def apply(move: WhiteheadMove, w: Word) -> Word:
    if w.alphabet != move.alphabet:
        raise AlphabetError(f"word {w} is not over [{move.alphabet}]")
    return substitute(w, move.images)


def apply_sequence(moves: Iterable[WhiteheadMove], w: Word) -> Word:
    for m in moves:
        w = apply(m, w)
    return w


def inverse(move: WhiteheadMove) -> WhiteheadMove:
    if move.kind == KIND_MULTIPLIER:
        return WhiteheadMove(
            move.alphabet, KIND_MULTIPLIER, multiplier=-move.multiplier, actions=move.actions
        )
    inv = [0] * move.alphabet.rank
    for i, c in enumerate(move.permutation):
        inv[abs(c) - 1] = (i + 1) * (1 if c > 0 else -1)
    return WhiteheadMove(move.alphabet, KIND_PERMUTATION, permutation=tuple(inv))


@lru_cache(maxsize=32)
def _permutation_moves(alphabet: Alphabet) -> tuple[WhiteheadMove, ...]:
    n = alphabet.rank
    out = []
    for perm in itertools.permutations(range(1, n + 1)):
        for signs in itertools.product((1, -1), repeat=n):
            images = tuple(p * s for p, s in zip(perm, signs))
            if images == tuple(range(1, n + 1)):
                continue
            out.append(WhiteheadMove(alphabet, KIND_PERMUTATION, permutation=images))
    return tuple(out)


@lru_cache(maxsize=32)
def _multiplier_moves(alphabet: Alphabet) -> tuple[WhiteheadMove, ...]:
    n = alphabet.rank
    out = []
    for a in alphabet.letters():
        fixed = abs(a) - 1
        for acts in itertools.product(ACTIONS, repeat=n - 1):
            if all(x == ACTION_FIX for x in acts):
                continue
            actions = acts[:fixed] + (ACTION_FIX,) + acts[fixed:]
            out.append(WhiteheadMove(alphabet, KIND_MULTIPLIER, multiplier=a, actions=actions))
    return tuple(out)


def moves(alphabet: Alphabet, kind: Optional[str] = None) -> Iterator[WhiteheadMove]:
    """All non-identity Whitehead moves in the fixed enumeration order."""
    if kind in (None, KIND_PERMUTATION):
        yield from _permutation_moves(alphabet)
    if kind in (None, KIND_MULTIPLIER):
        yield from _multiplier_moves(alphabet)


def random_automorphism(alphabet: Alphabet, rng: random.Random, length: int) -> list[WhiteheadMove]:
    pool = _permutation_moves(alphabet) + _multiplier_moves(alphabet)
    return [rng.choice(pool) for _ in range(length)]


S = TypeVar("S")


class _Orbit(Generic[S]):
    """Length descent plus bounded plateau search over one kind of state."""

    def __init__(
        self,
        alphabet: Alphabet,
        size: Callable[[S], int],
        step: Callable[[WhiteheadMove, S], S],
        lower_bound: int,
        plateau_limit: int,
    ) -> None:
        self.moves = _multiplier_moves(alphabet)
        self.size = size
        self.step = step
        self.lower_bound = lower_bound
        self.plateau_limit = plateau_limit

    def minimize(self, start: S) -> tuple[S, list[WhiteheadMove]]:
        path: list[WhiteheadMove] = []
        cur, cur_size = start, self.size(start)
        while cur_size > self.lower_bound:
            found = self._reduce(cur, cur_size)
            if found is None:
                found = self._plateau(cur, cur_size)
            if found is None:
                break
            cur, steps = found
            path.extend(steps)
            _LOGGER.debug(f"whitehead descent {cur_size} -> {self.size(cur)}")
            cur_size = self.size(cur)
        return cur, path

    def _reduce(self, cur: S, cur_size: int) -> Optional[tuple[S, list[WhiteheadMove]]]:
        for m in self.moves:
            nxt = self.step(m, cur)
            if self.size(nxt) < cur_size:
                return nxt, [m]
        return None

    def _plateau(self, start: S, target: int) -> Optional[tuple[S, list[WhiteheadMove]]]:
        if self.plateau_limit <= 0:
            return None
        parent: dict[S, Optional[tuple[S, WhiteheadMove]]] = {start: None}
        queue = deque([start])

        def path_to(s: S) -> list[WhiteheadMove]:
            out = []
            while (link := parent[s]) is not None:
                s, m = link
                out.append(m)
            return out[::-1]

        while queue:
            s = queue.popleft()
            for m in self.moves:
                nxt = self.step(m, s)
                k = self.size(nxt)
                if k < target:
                    return nxt, path_to(s) + [m]
                if k == target and nxt not in parent:
                    if len(parent) >= self.plateau_limit:
                        _LOGGER.warning(
                            f"plateau search stopped at {self.plateau_limit} states (size {target})"
                        )
                        return None
                    parent[nxt] = (s, m)
                    queue.append(nxt)
        return None


def minimize(w: Word, plateau_limit: int = DEFAULT_PLATEAU_LIMIT) -> MinimizeResult:
    """Minimal cyclic length in the automorphic orbit of w."""
    if w.is_identity:
        raise PreconditionError("cannot minimize the identity")
    orbit: _Orbit[Word] = _Orbit(
        w.alphabet,
        size=len,
        step=lambda m, s: cyclic_reduce(apply(m, s)).core,
        lower_bound=1,
        plateau_limit=plateau_limit,
    )
    final, path = orbit.minimize(cyclic_reduce(w).core)
    return MinimizeResult(len(final), path, final)


def is_primitive(w: Word, plateau_limit: int = DEFAULT_DECISION_PLATEAU_LIMIT) -> bool:
    if w.is_identity:
        raise PreconditionError("the identity is not a primitive candidate")
    if abelian_gcd(w) != 1:
        return False
    return minimize(w, plateau_limit).min_length == 1


def _image_graph(move: WhiteheadMove, g: SubgroupGraph) -> SubgroupGraph:
    return build([apply(move, b) for b in basis(g)], g.alphabet)


def minimize_subgroup(
    h: SubgroupGraph, plateau_limit: int = DEFAULT_PLATEAU_LIMIT
) -> SubgroupMinimizeResult:
    """Minimal unbased core size in the automorphic orbit of h."""
    if h.is_trivial:
        raise PreconditionError("cannot minimize the trivial subgroup")
    orbit: _Orbit[SubgroupGraph] = _Orbit(
        h.alphabet,
        size=core_size,
        step=_image_graph,
        lower_bound=h.rank,
        plateau_limit=plateau_limit,
    )
    final, path = orbit.minimize(h)
    return SubgroupMinimizeResult(core_size(final), path, final)


def is_free_factor(h: SubgroupGraph, plateau_limit: int = DEFAULT_DECISION_PLATEAU_LIMIT) -> bool:
    """A core of rank k with k edges is a rose of k distinct letters."""
    if h.alphabet.rank > MAX_FREE_FACTOR_RANK:
        raise ScopeError(
            f"free-factor search supports rank <= {MAX_FREE_FACTOR_RANK}, got {h.alphabet.rank}"
        )
    result = minimize_subgroup(h, plateau_limit)
    _LOGGER.debug(f"free-factor check: rank {h.rank}, minimal core size {result.min_size}")
    return result.min_size == h.rank


def is_free_factor_of(generators: Sequence[Word], plateau_limit: int = DEFAULT_DECISION_PLATEAU_LIMIT) -> bool:
    return is_free_factor(build(generators), plateau_limit)
