"""Folded Stallings graphs of finitely generated subgroups of a free group."""

from collections import deque
from collections.abc import Sequence
from dataclasses import dataclass
from functools import cached_property
import logging
from typing import Any, Optional

from .exceptions import AlphabetError
from .words import Alphabet, Word, conjugate as conjugate_word, letter_key, reduce

_LOGGER = logging.getLogger(__name__)

Edge = tuple[int, int, int]
"""(source, positive letter code, target)"""


@dataclass(frozen=True)
class SubgroupGraph:
    """A folded core graph with basepoint 0.

    Vertices are numbered breadth-first from the basepoint, following the
    alphabet's letter order, so two graphs describe the same subgroup iff
    they are equal as values.
    """

    alphabet: Alphabet
    vertex_count: int
    edges: tuple[Edge, ...]

    @cached_property
    def adjacency(self) -> tuple[dict[int, int], ...]:
        adj: list[dict[int, int]] = [{} for _ in range(self.vertex_count)]
        for src, code, dst in self.edges:
            adj[src][code] = dst
            adj[dst][-code] = src
        return tuple(adj)

    @property
    def rank(self) -> int:
        return len(self.edges) - self.vertex_count + 1

    @property
    def is_trivial(self) -> bool:
        return not self.edges

    def as_dict(self) -> dict[str, Any]:
        return dict(
            alphabet=list(self.alphabet.generators),
            rank=self.rank,
            vertices=self.vertex_count,
            edges=[[s, self.alphabet.name(c), d] for s, c, d in self.edges],
            basis=[str(w) for w in basis(self)],
        )


class _Folder:
    """Union-find over vertices with one neighbour per signed letter."""

    def __init__(self) -> None:
        self.parent: list[int] = []
        self.adj: list[dict[int, int]] = []
        self.folds = 0

    def add_vertex(self) -> int:
        self.parent.append(len(self.parent))
        self.adj.append({})
        return len(self.parent) - 1

    def find(self, v: int) -> int:
        root = v
        while self.parent[root] != root:
            root = self.parent[root]
        while self.parent[v] != root:
            self.parent[v], v = root, self.parent[v]
        return root

    def add_edge(self, src: int, code: int, dst: int) -> None:
        pending = [(src, code, dst)]
        while pending:
            v, c, w = pending.pop()
            v, w = self.find(v), self.find(w)
            forward = self.adj[v].get(c)
            if forward is not None and self.find(forward) != w:
                self._merge(self.find(forward), w, pending)
                continue
            backward = self.adj[w].get(-c)
            if backward is not None and self.find(backward) != v:
                self._merge(self.find(backward), v, pending)
                continue
            self.adj[v][c] = w
            self.adj[w][-c] = v

    def _merge(self, x: int, y: int, pending: list[Edge]) -> None:
        # the smaller index survives, so vertex 0 stays the basepoint
        if x > y:
            x, y = y, x
        self.folds += 1
        self.parent[y] = x
        moved, self.adj[y] = self.adj[y], {}
        for c, z in moved.items():
            pending.append((x, c, z))

    def edges(self) -> set[Edge]:
        out = set()
        for v in range(len(self.parent)):
            if self.find(v) != v:
                continue
            for c, w in self.adj[v].items():
                w = self.find(w)
                out.add((v, c, w) if c > 0 else (w, -c, v))
        return out


def _prune(edges: set[Edge], keep: Optional[int]) -> set[Edge]:
    """Repeatedly drop degree-one vertices other than keep."""
    edges = set(edges)
    while True:
        degree: dict[int, int] = {}
        for s, _, d in edges:
            degree[s] = degree.get(s, 0) + 1
            degree[d] = degree.get(d, 0) + 1
        leaves = {v for v, k in degree.items() if k == 1 and v != keep}
        if not leaves:
            return edges
        edges = {e for e in edges if e[0] not in leaves and e[2] not in leaves}


def _relabel(edges: set[Edge], start: int) -> tuple[int, tuple[Edge, ...]]:
    adj: dict[int, list[tuple[int, int]]] = {}
    for s, c, d in edges:
        adj.setdefault(s, []).append((c, d))
        adj.setdefault(d, []).append((-c, s))
    order = {start: 0}
    queue = deque([start])
    while queue:
        v = queue.popleft()
        for c, w in sorted(adj.get(v, []), key=lambda cw: letter_key(cw[0])):
            if w not in order:
                order[w] = len(order)
                queue.append(w)
    relabeled = tuple(sorted((order[s], c, order[d]) for s, c, d in edges))
    return len(order), relabeled


def build(generators: Sequence[Word], alphabet: Optional[Alphabet] = None) -> SubgroupGraph:
    """Fold the wedge of generator loops and cut it down to its core."""
    if alphabet is None:
        if not generators:
            raise AlphabetError("an alphabet is needed for an empty generating set")
        alphabet = generators[0].alphabet
    for w in generators:
        if w.alphabet != alphabet:
            raise AlphabetError(f"generator {w} is not over [{alphabet}]")

    folder = _Folder()
    base = folder.add_vertex()
    for w in generators:
        if w.is_identity:
            continue
        prev = base
        for i, c in enumerate(w.letters):
            nxt = base if i == len(w.letters) - 1 else folder.add_vertex()
            folder.add_edge(prev, c, nxt)
            prev = nxt
    edges = _prune(folder.edges(), keep=folder.find(base))
    count, canon = _relabel(edges, folder.find(base))
    _LOGGER.debug(f"folded {len(generators)} generators with {folder.folds} folds into {count} vertices")
    return SubgroupGraph(alphabet, count, canon)


def trace(g: SubgroupGraph, w: Word) -> Optional[int]:
    """End vertex of the path spelling w from the basepoint, if it exists."""
    v = 0
    adj = g.adjacency
    for c in w.letters:
        nxt = adj[v].get(c)
        if nxt is None:
            return None
        v = nxt
    return v


def member(g: SubgroupGraph, w: Word) -> bool:
    if w.alphabet != g.alphabet:
        raise AlphabetError(f"word {w} is not over [{g.alphabet}]")
    return trace(g, w) == 0


def _tree_paths(g: SubgroupGraph) -> tuple[list[tuple[int, ...]], set[tuple[int, int]]]:
    paths: list[Optional[tuple[int, ...]]] = [None] * g.vertex_count
    paths[0] = ()
    tree: set[tuple[int, int]] = set()
    queue = deque([0])
    adj = g.adjacency
    while queue:
        v = queue.popleft()
        for c in sorted(adj[v], key=letter_key):
            w = adj[v][c]
            if paths[w] is None:
                paths[w] = paths[v] + (c,)
                tree.add((v, c))
                tree.add((w, -c))
                queue.append(w)
    return paths, tree  # type: ignore[return-value]


def basis(g: SubgroupGraph) -> list[Word]:
    """Free basis read off the edges outside a breadth-first spanning tree."""
    paths, tree = _tree_paths(g)
    out = []
    for s, c, d in g.edges:
        if (s, c) in tree:
            continue
        raw = paths[s] + (c,) + tuple(-x for x in reversed(paths[d]))
        out.append(reduce(g.alphabet, raw))
    return out


def rank(g: SubgroupGraph) -> int:
    return g.rank


def equal(g1: SubgroupGraph, g2: SubgroupGraph) -> bool:
    if g1.alphabet != g2.alphabet:
        raise AlphabetError(f"alphabet mismatch: [{g1.alphabet}] vs [{g2.alphabet}]")
    return g1 == g2


def conjugate(g: SubgroupGraph, w: Word) -> SubgroupGraph:
    """Graph of w^-1 H w."""
    return build([conjugate_word(b, w) for b in basis(g)], g.alphabet)


def _unbased_core(g: SubgroupGraph) -> set[Edge]:
    return _prune(set(g.edges), keep=None)


def core_size(g: SubgroupGraph) -> int:
    """Edge count once the hair at the basepoint is removed."""
    return len(_unbased_core(g))


def _unbased_form(g: SubgroupGraph) -> tuple[Edge, ...]:
    edges = _unbased_core(g)
    vertices = {s for s, _, _ in edges} | {d for _, _, d in edges}
    if not vertices:
        return ()
    return min(_relabel(edges, v)[1] for v in vertices)


def are_conjugate(g1: SubgroupGraph, g2: SubgroupGraph) -> bool:
    if g1.alphabet != g2.alphabet:
        raise AlphabetError(f"alphabet mismatch: [{g1.alphabet}] vs [{g2.alphabet}]")
    return _unbased_form(g1) == _unbased_form(g2)
