"""
Quadratic equations over free groups.

Standard forms (every variable occurs exactly twice)::

    [x_1,y_1] ... [x_g,y_g] z_1^-1 C_1 z_1 ... z_{m-1}^-1 C_{m-1} z_{m-1} C = 1
    x_1^2 ... x_g^2         z_1^-1 C_1 z_1 ... z_{m-1}^-1 C_{m-1} z_{m-1} C = 1

with [x, y] = x^-1 y^-1 x y.  The first is orientable (also when g = 0), the
second non-orientable.  Besides recognition this module holds the disc
configuration enumeration used to bound solutions, the abelianized
obstruction, a bounded brute-force solver and the two word-combinatorics
checkers the obstruction proofs lean on.
"""

from collections.abc import Iterator, Sequence
from dataclasses import dataclass, field
import itertools
import logging
from math import gcd
from typing import Any, Optional, Union

from sympy import ZZ
from sympy.polys.matrices import DomainMatrix
from sympy.polys.matrices.normalforms import smith_normal_decomp

from .const import (
    DEFAULT_SEARCH_BUDGET,
    IMPOSS_JS,
    IMPOSS_MIN_M,
    MAX_BRUTE_ALPHABET,
    MAX_BRUTE_BOUND,
    MAX_BRUTE_VARIABLES,
    MAX_CONFIG_COEFFICIENTS,
)
from .exceptions import EquationError, LemmaViolation, PreconditionError, ScopeError
from .parse_io import RawEquation, parse_equation
from .words import (
    Alphabet,
    Word,
    commutes_with_conjugate,
    exponent_sum,
    invert,
    is_cyclic_shift,
    is_cyclically_reduced,
    is_subword,
    multiply,
    power,
    reduced_words,
    root,
    substitute,
    words_up_to,
)

_LOGGER = logging.getLogger(__name__)

EquationInput = Union[str, RawEquation]


def _raw(eq: EquationInput) -> RawEquation:
    return parse_equation(eq) if isinstance(eq, str) else eq


# ---------------------------------------------------------------------------
# standard form


@dataclass(frozen=True)
class QuadraticEquation:
    raw: RawEquation
    genus: int
    orientable: bool
    coefficients: tuple[Word, ...]
    """C_1 .. C_{m-1}, C over the coefficient alphabet"""
    genus_variables: tuple[str, ...] = ()
    conjugators: tuple[str, ...] = ()

    @property
    def variables(self) -> tuple[str, ...]:
        return self.raw.variables

    @property
    def m_coef(self) -> int:
        return len(self.coefficients)

    @property
    def chi_bar(self) -> int:
        return 2 - 2 * self.genus if self.orientable else 2 - self.genus

    def as_dict(self) -> dict[str, Any]:
        return dict(
            equation=str(self.raw),
            variables=list(self.variables),
            genus=self.genus,
            orientable=self.orientable,
            m_coef=self.m_coef,
            chi_bar=self.chi_bar,
            n_bound=n_bound(self),
            coefficients=[str(c) for c in self.coefficients],
        )


def _coefficient(raw: RawEquation, codes: Sequence[int]) -> Word:
    coef = raw.coefficient_alphabet
    out = Word(coef, tuple(coef.code(raw.alphabet.name(c), 1 if c > 0 else -1) for c in codes))
    if not is_cyclically_reduced(out):
        raise EquationError(f"coefficient {out} is not cyclically reduced")
    return out


def _parse_standard(raw: RawEquation, codes: tuple[int, ...]) -> Optional[QuadraticEquation]:
    is_var = raw.is_variable
    n = len(codes)
    i = 0
    genus_vars: list[str] = []
    kinds: set[bool] = set()
    name = raw.alphabet.name

    # genus blocks
    while i < n and is_var(codes[i]):
        if i + 1 < n and codes[i + 1] == codes[i]:
            kinds.add(False)
            genus_vars.append(name(codes[i]))
            i += 2
            continue
        if (
            i + 3 < n
            and is_var(codes[i + 1])
            and abs(codes[i]) != abs(codes[i + 1])
            and codes[i + 2] == -codes[i]
            and codes[i + 3] == -codes[i + 1]
        ):
            kinds.add(True)
            genus_vars.extend((name(codes[i]), name(codes[i + 1])))
            i += 4
            continue
        break
    if len(kinds) > 1:
        return None

    # conjugated coefficients z^-1 C_j z
    coefficients: list[Word] = []
    conjugators: list[str] = []
    while i < n and is_var(codes[i]):
        z = codes[i]
        k = i + 1
        while k < n and not is_var(codes[k]):
            k += 1
        if k == i + 1 or k >= n or codes[k] != -z:
            return None
        coefficients.append(_coefficient(raw, codes[i + 1 : k]))
        conjugators.append(name(z))
        i = k + 1

    # final coefficient
    if i >= n or any(is_var(c) for c in codes[i:]):
        return None
    coefficients.append(_coefficient(raw, codes[i:]))

    orientable = not kinds or True in kinds
    genus = len(genus_vars) // 2 if orientable else len(genus_vars)
    return QuadraticEquation(
        raw, genus, orientable, tuple(coefficients), tuple(genus_vars), tuple(conjugators)
    )


def classify(eq: EquationInput) -> QuadraticEquation:
    """Recognize a quadratic equation in standard form (up to cyclic rotation)."""
    raw = _raw(eq)
    codes = raw.word.letters
    for v in raw.variables:
        count = sum(1 for c in codes if raw.is_variable(c) and raw.alphabet.name(c) == f"?{v}")
        if count != 2:
            raise EquationError(f"variable ?{v} occurs {count} times, not twice")
    if not any(not raw.is_variable(c) for c in codes):
        raise EquationError("the equation has no (nontrivial) coefficient")
    for s in range(len(codes)):
        rotated = codes[s:] + codes[:s]
        if raw.is_variable(rotated[-1]):
            continue
        found = _parse_standard(raw, rotated)
        if found is not None:
            _LOGGER.debug(f"classified '{raw}' with rotation {s}")
            return found
    raise EquationError(f"'{raw}' is not in standard form")


def n_bound(eq: QuadraticEquation) -> int:
    if (eq.genus == 0 and eq.m_coef == 2) or (
        not eq.orientable and eq.genus == 1 and eq.m_coef == 1
    ):
        return 1
    return 3 * (eq.m_coef - eq.chi_bar)


# ---------------------------------------------------------------------------
# disc configurations


@dataclass(frozen=True)
class Surface:
    discs: tuple[int, ...]
    chi: int
    orientable: bool


@dataclass(frozen=True)
class DiscConfiguration:
    """Boundary labels of the discs; letter k > 0 is p_k, -k its inverse."""

    discs: tuple[tuple[int, ...], ...]
    surfaces: tuple[Surface, ...] = field(default=(), compare=False)

    @property
    def variable_count(self) -> int:
        return max((abs(c) for d in self.discs for c in d), default=0)

    @property
    def euler_sum(self) -> int:
        """sum chi(Sigma_i) - 2l"""
        return sum(s.chi for s in self.surfaces) - 2 * (len(self.surfaces) - 1)

    def __str__(self) -> str:
        def letter(c: int) -> str:
            return f"p{abs(c)}" if c > 0 else f"p{abs(c)}^-1"

        return "|".join("".join(letter(c) for c in d) for d in self.discs)

    def as_dict(self) -> dict[str, Any]:
        return dict(
            labels=str(self),
            variables=self.variable_count,
            surfaces=[
                dict(discs=[d + 1 for d in s.discs], chi=s.chi, orientable=s.orientable)
                for s in self.surfaces
            ],
            euler_sum=self.euler_sum,
        )


class _UnionFind:
    def __init__(self) -> None:
        self.parent: dict[Any, Any] = {}

    def find(self, x: Any) -> Any:
        self.parent.setdefault(x, x)
        while self.parent[x] != x:
            self.parent[x] = self.parent[self.parent[x]]
            x = self.parent[x]
        return x

    def union(self, x: Any, y: Any) -> None:
        self.parent[self.find(x)] = self.find(y)


def _occurrences(discs: Sequence[Sequence[int]]) -> dict[int, list[tuple[int, int, int]]]:
    """variable -> [(disc, position, sign), ...]"""
    occ: dict[int, list[tuple[int, int, int]]] = {}
    for d, disc in enumerate(discs):
        for k, c in enumerate(disc):
            occ.setdefault(abs(c), []).append((d, k, 1 if c > 0 else -1))
    return occ


def glue(discs: Sequence[Sequence[int]]) -> tuple[Surface, ...]:
    """Glue discs along equally labeled edges, respecting edge direction."""
    occ = _occurrences(discs)
    components = _UnionFind()
    corners = _UnionFind()
    for d in range(len(discs)):
        components.find(d)
    for places in occ.values():
        (d1, k1, s1), (d2, k2, s2) = places
        components.union(d1, d2)

        def ends(d: int, k: int, s: int) -> tuple[tuple[int, int], tuple[int, int]]:
            n = len(discs[d])
            a, b = (d, k), (d, (k + 1) % n)
            return (a, b) if s > 0 else (b, a)

        tail1, head1 = ends(d1, k1, s1)
        tail2, head2 = ends(d2, k2, s2)
        corners.union(tail1, tail2)
        corners.union(head1, head2)

    groups: dict[int, list[int]] = {}
    for d in range(len(discs)):
        groups.setdefault(components.find(d), []).append(d)

    surfaces = []
    for members in sorted(groups.values()):
        member_set = set(members)
        faces = len(members)
        edges = sum(1 for places in occ.values() if places[0][0] in member_set)
        vertices = len({corners.find((d, k)) for d in members for k in range(len(discs[d]))})
        surfaces.append(
            Surface(tuple(members), vertices - edges + faces, _orientable(discs, occ, member_set))
        )
    return tuple(surfaces)


def _orientable(discs: Sequence[Sequence[int]], occ: dict, members: set[int]) -> bool:
    # flip[d] in {1, -1}; every label must be read once each way
    flip: dict[int, int] = {}
    for start in sorted(members):
        if start in flip:
            continue
        flip[start] = 1
        stack = [start]
        while stack:
            d = stack.pop()
            for places in occ.values():
                for (da, _, sa), (db, _, sb) in (places, places[::-1]):
                    if da != d:
                        continue
                    want = -flip[d] * sa * sb
                    if db in flip:
                        if flip[db] != want:
                            return False
                    else:
                        flip[db] = want
                        stack.append(db)
    return True


def euler_bound_holds(config: DiscConfiguration, eq: QuadraticEquation) -> bool:
    total = config.euler_sum
    if eq.orientable:
        return all(s.orientable for s in config.surfaces) and total >= eq.chi_bar
    if any(not s.orientable for s in config.surfaces):
        return total >= eq.chi_bar
    return total >= eq.chi_bar + 2


def _normalize(discs: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Rename variables by first appearance, first occurrence positive."""
    rename: dict[int, int] = {}
    out = []
    for disc in discs:
        row = []
        for c in disc:
            v = abs(c)
            if v not in rename:
                rename[v] = (len(rename) + 1) * (1 if c > 0 else -1)
            r = rename[v]
            row.append(r if c > 0 else -r)
        out.append(tuple(row))
    return tuple(out)


def _dihedral(disc: tuple[int, ...]) -> list[tuple[int, ...]]:
    n = len(disc)
    rev = tuple(-c for c in reversed(disc))
    return [d[i:] + d[:i] for d in (disc, rev) for i in range(n)]


def _key(discs: tuple[tuple[int, ...], ...]) -> tuple:
    return (
        tuple(len(d) for d in discs),
        tuple(tuple(2 * abs(c) + (c < 0) for c in d) for d in discs),
    )


def canonical_form(discs: Sequence[Sequence[int]]) -> tuple[tuple[int, ...], ...]:
    """Least labeling under disc order, rotation, reflection and renaming."""
    best = None
    for perm in itertools.permutations(discs):
        for variant in itertools.product(*(_dihedral(tuple(d)) for d in perm)):
            cand = _normalize(variant)
            if best is None or _key(cand) < _key(best):
                best = cand
    return best if best is not None else ()


def _has_cancellation(disc: Sequence[int]) -> bool:
    n = len(disc)
    return n > 1 and any(disc[k] == -disc[(k + 1) % n] for k in range(n))


def _compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Nondecreasing compositions of total into positive parts."""

    def rec(remaining: int, k: int, low: int) -> Iterator[tuple[int, ...]]:
        if k == 1:
            if remaining >= low:
                yield (remaining,)
            return
        for first in range(low, remaining // k + 1):
            for rest in rec(remaining - first, k - 1, first):
                yield (first,) + rest

    yield from rec(total, parts, 1)


def _labelings(n: int) -> Iterator[tuple[int, ...]]:
    """Sequences of length 2n using p_1..p_n twice each, introduced in order,
    first occurrence positive."""

    def rec(seq: tuple[int, ...], counts: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        if len(seq) == 2 * n:
            yield seq
            return
        introduced = sum(1 for c in counts if c)
        for v in range(1, introduced + 1):
            if counts[v - 1] == 1:
                bumped = counts[: v - 1] + (2,) + counts[v:]
                yield from rec(seq + (v,), bumped)
                yield from rec(seq + (-v,), bumped)
        if introduced < n:
            v = introduced + 1
            yield from rec(seq + (v,), counts[: v - 1] + (1,) + counts[v:])

    yield from rec((), (0,) * n)


def enumerate_configs(eq: QuadraticEquation) -> list[DiscConfiguration]:
    """Disc configurations of a genus-0 equation, one per canonical form.

    Every labeling whose glued surfaces pass the Euler characteristic bound is
    kept, so the list is a superset of the configurations a minimal solution
    can realise. At three coefficients the p1|p2|p1p2 and p1p2|p1p3|p2p3^-1
    families are both present.
    """
    if eq.genus != 0 or eq.m_coef > MAX_CONFIG_COEFFICIENTS:
        raise ScopeError(
            f"disc enumeration supports genus 0 and at most {MAX_CONFIG_COEFFICIENTS} coefficients"
        )
    m = eq.m_coef
    bound = n_bound(eq)
    found: dict[tuple, DiscConfiguration] = {}
    candidates = 0
    for n in range(1, bound + 1):
        if 2 * n < m:
            continue
        for sizes in _compositions(2 * n, m):
            for seq in _labelings(n):
                candidates += 1
                discs, pos = [], 0
                for size in sizes:
                    discs.append(seq[pos : pos + size])
                    pos += size
                if any(_has_cancellation(d) for d in discs):
                    continue
                config = DiscConfiguration(tuple(discs), glue(discs))
                if not euler_bound_holds(config, eq):
                    continue
                canon = canonical_form(discs)
                if canon not in found:
                    found[canon] = DiscConfiguration(canon, glue(canon))
    _LOGGER.debug(f"enumerated {candidates} labelings, {len(found)} configurations survive")
    return sorted(found.values(), key=lambda c: (c.variable_count, _key(c.discs)))


# ---------------------------------------------------------------------------
# abelianization


@dataclass(frozen=True)
class AbelianResult:
    obstructed: bool
    witness: Optional[dict[str, dict[str, int]]] = None
    failing_rows: tuple[str, ...] = ()

    def as_dict(self) -> dict[str, Any]:
        if self.obstructed:
            return dict(result="obstructed", rows=list(self.failing_rows))
        return dict(result="solvable-abelianized", witness=self.witness)


def _row_text(coeffs: Sequence[int], names: Sequence[str], gen: str, rhs: int) -> str:
    terms = [f"{c}*{v}_{gen}" for c, v in zip(coeffs, names) if c]
    return f"{' + '.join(terms) or '0'} = {rhs}"


def abelian_obstruction(eq: EquationInput, coefficients: Optional[Alphabet] = None) -> AbelianResult:
    """Solve the abelianized system over the integers via Smith normal form.

    Unknowns are the exponent vectors of the variables' images; there is one
    row per coefficient generator.
    """
    raw = parse_equation(eq, coefficients) if isinstance(eq, str) else eq
    variables = [f"?{v}" for v in raw.variables]
    gens = list(raw.coefficient_alphabet.generators)
    var_sums = [exponent_sum(raw.word, v) for v in variables]
    rhs = [-exponent_sum(raw.word, g) for g in gens]

    failing = tuple(
        _row_text(var_sums, raw.variables, g, b)
        for g, b in zip(gens, rhs)
        if (b % gcd(*var_sums) if any(var_sums) else b) != 0
    )

    rows, cols = len(gens), len(variables) * len(gens)
    if cols == 0 or rows == 0:
        if failing:
            return AbelianResult(True, failing_rows=failing)
        return AbelianResult(False, {v: {} for v in raw.variables})

    # column i * rows + j is the exponent of generator j in variable i
    matrix = [[0] * cols for _ in range(rows)]
    for j in range(rows):
        for i, s in enumerate(var_sums):
            matrix[j][i * rows + j] = s
    a = DomainMatrix.from_list(matrix, ZZ)
    smf, s, t = smith_normal_decomp(a)
    d = smf.to_list()
    sb = [sum(int(x) * y for x, y in zip(row, rhs)) for row in s.to_list()]

    z = [0] * cols
    for i in range(rows):
        di = int(d[i][i]) if i < cols else 0
        if di == 0:
            if sb[i] != 0:
                return AbelianResult(True, failing_rows=failing or ("inconsistent system",))
        elif sb[i] % di != 0:
            return AbelianResult(True, failing_rows=failing or ("inconsistent system",))
        else:
            z[i] = sb[i] // di
    y = [sum(int(x) * zk for x, zk in zip(row, z)) for row in t.to_list()]
    witness = {
        v: {g: y[i * rows + j] for j, g in enumerate(gens)} for i, v in enumerate(raw.variables)
    }
    _LOGGER.debug(f"abelianized system of '{raw}' solvable, witness {witness}")
    return AbelianResult(False, witness)


# ---------------------------------------------------------------------------
# brute force


@dataclass(frozen=True)
class SolveResult:
    solution: Optional[dict[str, Word]]
    bound: int
    visited: int

    @property
    def found(self) -> bool:
        return self.solution is not None

    def as_dict(self) -> dict[str, Any]:
        if self.solution is None:
            return dict(result="none-within-bound", bound=self.bound, visited=self.visited)
        return dict(
            result="solution",
            solution={k: str(w) for k, w in self.solution.items()},
            visited=self.visited,
        )


def _tuples(alphabet: Alphabet, slots: int, total: int) -> Iterator[tuple[Word, ...]]:
    """Tuples of reduced words with exactly the given total length, ordered
    by their shortlex keys component by component."""
    if slots == 0:
        if total == 0:
            yield ()
        return
    if slots == 1:
        yield from ((w,) for w in reduced_words(alphabet, total))
        return
    for length in range(total + 1):
        for w in reduced_words(alphabet, length):
            for rest in _tuples(alphabet, slots - 1, total - length):
                yield (w,) + rest


def brute_solve(
    eq: EquationInput,
    bound: int,
    coefficients: Optional[Alphabet] = None,
    search_budget: int = DEFAULT_SEARCH_BUDGET,
) -> SolveResult:
    """First solution by (total length, shortlex tuple), or exhaustion."""
    raw = parse_equation(eq, coefficients) if isinstance(eq, str) else eq
    coef = raw.coefficient_alphabet
    k = len(raw.variables)
    if k > MAX_BRUTE_VARIABLES or bound > MAX_BRUTE_BOUND or coef.rank > MAX_BRUTE_ALPHABET:
        raise ScopeError(
            f"brute force supports <= {MAX_BRUTE_VARIABLES} variables, bound <= "
            f"{MAX_BRUTE_BOUND} and <= {MAX_BRUTE_ALPHABET} coefficient letters"
        )
    if coef.rank == 0:
        raise PreconditionError("equation has no coefficient letters")

    fixed = {g: Word(coef, (coef.code(g),)) for g in coef.generators}
    slots = [raw.alphabet.index(f"?{v}") for v in raw.variables]
    visited = 0
    for total in range(bound + 1):
        for values in _tuples(coef, k, total):
            visited += 1
            if visited > search_budget:
                raise ScopeError(f"search budget of {search_budget} candidates exceeded")
            images = [fixed.get(g) for g in raw.alphabet.generators]
            for slot, value in zip(slots, values):
                images[slot] = value
            if substitute(raw.word, images).is_identity:  # type: ignore[arg-type]
                solution = dict(zip(raw.variables, values))
                _LOGGER.debug(f"solution of '{raw}' after {visited} candidates")
                return SolveResult(solution, bound, visited)
    return SolveResult(None, bound, visited)


# ---------------------------------------------------------------------------
# periodicity


@dataclass(frozen=True)
class LSResult:
    premise_met: bool
    a1: Optional[Word] = None
    a2: Optional[Word] = None
    k1: int = 0
    k2: int = 0

    def as_dict(self) -> dict[str, Any]:
        if not self.premise_met:
            return dict(result="premise-not-met")
        return dict(result="conclusion", a1=str(self.a1), a2=str(self.a2), k1=self.k1, k2=self.k2)


def ls_check(u: Word, v: Word, w: Word, n1: int, n2: int) -> LSResult:
    """If w sits in u^n1 and v^n2 with |w| >= |u| + |v|, u and v are powers
    of cyclic shifts of one word (up to inversion)."""
    for x in (u, v):
        if x.is_identity or not is_cyclically_reduced(x):
            raise PreconditionError(f"{x} must be nontrivial and cyclically reduced")
    if len(w) < len(u) + len(v):
        return LSResult(False)
    if not (is_subword(w, power(u, n1)) and is_subword(w, power(v, n2))):
        return LSResult(False)

    a1, k1 = root(u)
    a2, k2 = root(v)
    if not is_cyclic_shift(a1, a2):
        a2, k2 = invert(a2), -k2
    if not is_cyclic_shift(a1, a2) or power(a1, k1) != u or power(a2, k2) != v:
        raise LemmaViolation(f"periodicity fails for u={u}, v={v}, w={w}")
    return LSResult(True, a1, a2, k1, k2)


@dataclass
class SweepReport:
    checked: int = 0
    premise_met: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures

    def as_dict(self) -> dict[str, Any]:
        return dict(
            checked=self.checked,
            premise_met=self.premise_met,
            failures=list(self.failures),
            passed=self.passed,
        )


def _cyclically_reduced_words(alphabet: Alphabet, max_len: int) -> list[Word]:
    return [w for w in words_up_to(alphabet, max_len) if not w.is_identity and is_cyclically_reduced(w)]


def _subwords(codes: tuple[int, ...], min_len: int) -> set[tuple[int, ...]]:
    n = len(codes)
    return {codes[i:j] for i in range(n) for j in range(i + min_len, n + 1)}


def ls_sweep(max_len: int = 4, max_power: int = 4, alphabet: Optional[Alphabet] = None) -> SweepReport:
    """Exhaustive periodicity check over all short cyclically reduced pairs."""
    alphabet = alphabet or Alphabet.of("a", "b")
    words = _cyclically_reduced_words(alphabet, max_len)
    report = SweepReport()
    for u in words:
        for v in words:
            min_len = len(u) + len(v)
            for n1, n2 in itertools.product((max_power, -max_power), repeat=2):
                common = _subwords(power(u, n1).letters, min_len) & _subwords(
                    power(v, n2).letters, min_len
                )
                for codes in sorted(common):
                    report.checked += 1
                    try:
                        if ls_check(u, v, Word(alphabet, codes), n1, n2).premise_met:
                            report.premise_met += 1
                    except LemmaViolation as e:
                        report.failures.append(str(e))
    _LOGGER.info(f"periodicity sweep: {report.checked} triples, {len(report.failures)} failures")
    return report


# ---------------------------------------------------------------------------
# collapse lemma


@dataclass(frozen=True)
class ImpossResult:
    premise_met: bool
    pair: Optional[tuple[str, str]] = None
    witness: Optional[Word] = None

    def as_dict(self) -> dict[str, Any]:
        if not self.premise_met:
            return dict(result="premise-not-met")
        return dict(
            result="commutation-witness",
            pair=list(self.pair or ()),
            conjugator=str(self.witness),
        )


_PAIRS = (("a", "b"), ("a", "c"), ("b", "a"), ("b", "c"), ("c", "a"), ("c", "b"))


def _collapsed_length(a: Word, b: Word, c: Word, m: int, j: int) -> int:
    return len(multiply(multiply(power(a, m), power(b, m)), power(c, j)))


def imposs_check(a: Word, b: Word, c: Word, m: int, j: int) -> ImpossResult:
    """If |a^m b^m c^j| < |a|, one of a, b, c commutes with a conjugate of
    another (or of its inverse)."""
    if not is_cyclically_reduced(a):
        raise PreconditionError(f"{a} must be cyclically reduced")
    if m < IMPOSS_MIN_M or j not in IMPOSS_JS:
        raise PreconditionError(f"need m >= {IMPOSS_MIN_M} and j in {IMPOSS_JS}")
    if _collapsed_length(a, b, c, m, j) >= len(a):
        return ImpossResult(False)
    named = {"a": a, "b": b, "c": c}
    for x, y in _PAIRS:
        ok, g = commutes_with_conjugate(named[x], named[y])
        if ok:
            return ImpossResult(True, (x, y), g)
    raise LemmaViolation(f"no commutation witness for a={a}, b={b}, c={c}, m={m}, j={j}")


def imposs_sweep(
    max_len: int = 3,
    m: int = IMPOSS_MIN_M,
    js: Sequence[int] = IMPOSS_JS,
    alphabet: Optional[Alphabet] = None,
) -> SweepReport:
    alphabet = alphabet or Alphabet.of("a", "b")
    all_words = list(words_up_to(alphabet, max_len))
    report = SweepReport()
    for a in _cyclically_reduced_words(alphabet, max_len):
        for b in all_words:
            for c in all_words:
                for j in js:
                    report.checked += 1
                    try:
                        if imposs_check(a, b, c, m, j).premise_met:
                            report.premise_met += 1
                    except LemmaViolation as e:
                        report.failures.append(str(e))
    _LOGGER.info(
        f"collapse sweep: {report.checked} triples, {report.premise_met} collapses, "
        f"{len(report.failures)} failures"
    )
    return report
