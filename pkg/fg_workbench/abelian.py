"""Szmielew invariants of the torsion-free abelian groups Z^n + Q^m."""

from collections.abc import Sequence
from dataclasses import dataclass, field
import itertools
import logging
from math import factorial
from typing import Any, Optional, Union

from sympy import Matrix, Rational, isprime, primerange

from .exceptions import PreconditionError

_LOGGER = logging.getLogger(__name__)

Scalar = Union[int, Rational, str]


@dataclass(frozen=True)
class TFAbelianGroup:
    z_rank: int
    q_rank: int = 0

    def __post_init__(self) -> None:
        if self.z_rank < 0 or self.q_rank < 0:
            raise PreconditionError(f"ranks must be non-negative, got ({self.z_rank}, {self.q_rank})")

    def __str__(self) -> str:
        parts = []
        if self.z_rank:
            parts.append("Z" if self.z_rank == 1 else f"Z^{self.z_rank}")
        if self.q_rank:
            parts.append("Q" if self.q_rank == 1 else f"Q^{self.q_rank}")
        return " + ".join(parts) if parts else "0"

    def as_dict(self) -> dict[str, Any]:
        return dict(z_rank=self.z_rank, q_rank=self.q_rank)

    def in_p_multiple(self, vector: Sequence[Scalar], p: int) -> bool:
        """Is the element (z_1..z_n, q_1..q_m) in pA?  Divisible coordinates
        never obstruct."""
        if len(vector) != self.z_rank + self.q_rank:
            raise PreconditionError(f"element of {self} needs {self.z_rank + self.q_rank} coordinates")
        return all(Rational(z) % p == 0 for z in vector[: self.z_rank])


def direct_sum(a: TFAbelianGroup, b: TFAbelianGroup) -> TFAbelianGroup:
    return TFAbelianGroup(a.z_rank + b.z_rank, a.q_rank + b.q_rank)


def _check_prime(p: int) -> None:
    if not isprime(p):
        raise PreconditionError(f"{p} is not prime")


def alpha_p(a: TFAbelianGroup, p: int) -> int:
    """dim(A/pA) over F_p; the divisible part contributes nothing."""
    _check_prime(p)
    return a.z_rank


@dataclass(frozen=True)
class SzmielewCharacteristic:
    """The sequence (alpha_2, alpha_3, alpha_5, ...), constant here."""

    value: int

    def alpha(self, p: int) -> int:
        _check_prime(p)
        return self.value

    def as_dict(self) -> dict[str, Any]:
        alpha: dict[str, Any] = {str(p): self.value for p in primerange(2, 7)}
        alpha["..."] = f"{self.value} for all p"
        return dict(alpha=alpha)


def szmielew(a: TFAbelianGroup) -> SzmielewCharacteristic:
    return SzmielewCharacteristic(a.z_rank)


def elem_equiv(a: TFAbelianGroup, b: TFAbelianGroup) -> bool:
    return szmielew(a) == szmielew(b)


@dataclass(frozen=True)
class SmallDimSentence:
    """forall x1 x2 OR_{(m1,m2) in S} exists y (m1 x1 + m2 x2 = p y)"""

    p: int
    tuples: tuple[tuple[int, int], ...]

    def __str__(self) -> str:
        disjuncts = " | ".join(f"Ey ({m1}x1 + {m2}x2 = {self.p}y)" for m1, m2 in self.tuples)
        return f"Ax1 Ax2 ({disjuncts})"

    def as_dict(self) -> dict[str, Any]:
        return dict(p=self.p, tuples=[list(t) for t in self.tuples], sentence=str(self))


def small_dim_sentence(p: int) -> SmallDimSentence:
    _check_prime(p)
    tuples = tuple(t for t in itertools.product(range(p), repeat=2) if t != (0, 0))
    return SmallDimSentence(p, tuples)


def small_dim_counterexample(a: TFAbelianGroup, p: int) -> Optional[tuple[tuple[int, ...], tuple[int, ...]]]:
    """A pair x1, x2 for which no disjunct of the sentence holds."""
    sentence = small_dim_sentence(p)
    if a.z_rank < 2:
        return None
    size = a.z_rank + a.q_rank
    x1 = tuple(1 if i == 0 else 0 for i in range(size))
    x2 = tuple(1 if i == 1 else 0 for i in range(size))
    for m1, m2 in sentence.tuples:
        if a.in_p_multiple([m1 * u + m2 * v for u, v in zip(x1, x2)], p):
            return None
    return x1, x2


def small_dim_sentence_holds(a: TFAbelianGroup, p: int) -> bool:
    return small_dim_counterexample(a, p) is None


def _vectors(gens: Sequence[Sequence[Scalar]]) -> list[list[Rational]]:
    return [[Rational(x) for x in g] for g in gens]


def fg_subgroup_rank(gens: Sequence[Sequence[Scalar]]) -> int:
    """Rank of the subgroup of Z + Q generated by (integer, rational) pairs."""
    vectors = [v for v in _vectors(gens) if any(v)]
    if not vectors:
        return 0
    for v in vectors:
        if len(v) != 2 or not v[0].is_integer:
            raise PreconditionError(f"{tuple(v)} is not an element of Z + Q")
    return Matrix(vectors).rank()


def lattice_contains(basis: Sequence[Sequence[Scalar]], v: Sequence[Scalar]) -> bool:
    """Is v an integer combination of the linearly independent basis?"""
    m = Matrix(_vectors(basis)).T
    target = Matrix([Rational(x) for x in v])
    try:
        solution, params = m.gauss_jordan_solve(target)
    except ValueError:
        return False
    if params.shape[0]:
        raise PreconditionError("basis vectors are not independent")
    return all(c.is_integer for c in solution)


@dataclass
class ChainReport:
    bound: int
    base_rank: int
    ranks: list[int] = field(default_factory=list)
    generators: list[list[tuple[str, str]]] = field(default_factory=list)
    ascending: list[bool] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r == 2 for r in self.ranks) and all(self.ascending)

    def as_dict(self) -> dict[str, Any]:
        return dict(
            bound=self.bound,
            h0_rank=self.base_rank,
            ranks=list(self.ranks),
            generators=[[list(g) for g in gens] for gens in self.generators],
            ascending=list(self.ascending),
            passed=self.passed,
        )


def chain_step(k: int) -> list[tuple[int, Rational]]:
    if k == 0:
        return [(1, Rational(0))]
    return [(1, Rational(0)), (0, Rational(1, factorial(k)))]


def chain_demo(bound: int) -> ChainReport:
    """H_k = <(1,0), (0,1/k!)> exhausts Z + Q and is free of rank 2 for k >= 1."""
    if bound < 2:
        raise PreconditionError("the chain needs a bound of at least 2")
    report = ChainReport(bound, fg_subgroup_rank(chain_step(0)))
    for k in range(1, bound + 1):
        gens = chain_step(k)
        report.ranks.append(fg_subgroup_rank(gens))
        report.generators.append([(str(z), str(q)) for z, q in gens])
        if k < bound:
            upper = chain_step(k + 1)
            report.ascending.append(all(lattice_contains(upper, g) for g in gens))
    _LOGGER.info(f"chain of {bound} subgroups of Z + Q: ranks {report.ranks}")
    return report
