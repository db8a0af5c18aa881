"""
Models for formal connected sums of torus knots and reverses of their mirrors.
"""

from collections import Counter
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Iterator, List, Tuple

POSITIVE = 1
NEGATIVE = -1


class InvalidTorusKnotError(ValueError):
    """Raised for (p, q) pairs that do not describe a torus knot."""


@dataclass(frozen=True, order=True)
class TorusKnotFactor:
    """
    One signed summand +T(p,q) or -T(p,q) in canonical form.

    A sign of -1 denotes the reverse of the mirror. The constructor swaps
    p and q so that p < q.

    Attributes:
        p: Smaller torus parameter, at least 2.
        q: Larger torus parameter.
        sign: +1 or -1.
    """

    p: int
    q: int
    sign: int = POSITIVE

    def __post_init__(self) -> None:
        p, q = self.p, self.q
        if p <= 0 or q <= 0:
            raise InvalidTorusKnotError(f"T({p},{q}): parameters must be positive")
        if gcd(p, q) != 1:
            raise InvalidTorusKnotError(
                f"T({p},{q}): gcd(p,q) = {gcd(p, q)}, which is a torus link, not a knot"
            )
        if self.sign not in (POSITIVE, NEGATIVE):
            raise ValueError(f"Sign must be +1 or -1, got {self.sign}")
        if p > q:
            p, q = q, p
            object.__setattr__(self, "p", p)
            object.__setattr__(self, "q", q)
        if p == 1:
            raise InvalidTorusKnotError(f"T({self.p},{self.q}) is the unknot")

    @property
    def is_positive(self) -> bool:
        return self.sign == POSITIVE

    @property
    def is_two_strand(self) -> bool:
        return self.p == 2

    @property
    def key(self) -> Tuple[int, int]:
        return (self.p, self.q)

    def mirror(self) -> "TorusKnotFactor":
        return TorusKnotFactor(self.p, self.q, -self.sign)

    def __str__(self) -> str:
        prefix = "" if self.is_positive else "-"
        return f"{prefix}T({self.p},{self.q})"


def torus_factor(p: int, q: int, sign: int = POSITIVE) -> List[TorusKnotFactor]:
    """
    Build the factor list for ±T(p,q), empty when T(p,q) is the unknot.

    Raises:
        InvalidTorusKnotError: If p or q is not positive or gcd(p,q) != 1.
    """
    if p > 0 and q > 0 and min(p, q) == 1:
        return []
    return [TorusKnotFactor(p, q, sign)]


@dataclass(frozen=True)
class KnotSum:
    """
    A reduced connected sum of signed torus knots.

    Factors are kept sorted by (p, q, sign), with multiplicity given by
    repetition. Any +T(p,q) and -T(p,q) pair cancels on construction, so
    equal sums always have identical factor tuples. The empty sum is the
    unknot.

    Attributes:
        factors: Sorted tuple of TorusKnotFactor.
    """

    factors: Tuple[TorusKnotFactor, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "factors", _reduce(self.factors))

    @classmethod
    def _from_reduced(cls, factors: Tuple[TorusKnotFactor, ...]) -> "KnotSum":
        # factors must already be sorted and free of opposite pairs
        k = cls.__new__(cls)
        object.__setattr__(k, "factors", factors)
        return k

    @classmethod
    def of(cls, *factors: TorusKnotFactor) -> "KnotSum":
        return cls(tuple(factors))

    @classmethod
    def from_terms(cls, terms: Iterable[Tuple[int, int, int]]) -> "KnotSum":
        """
        Build a sum from (p, q, sign) triples, dropping unknotted T(1,n) terms.

        Args:
            terms: Iterable of (p, q, sign).

        Returns:
            The normalized, reduced KnotSum.
        """
        factors: List[TorusKnotFactor] = []
        for p, q, sign in terms:
            factors.extend(torus_factor(p, q, sign))
        return cls(tuple(factors))

    def __iter__(self) -> Iterator[TorusKnotFactor]:
        return iter(self.factors)

    def __len__(self) -> int:
        return len(self.factors)

    def is_empty(self) -> bool:
        return not self.factors

    def is_two_strand(self) -> bool:
        return all(f.is_two_strand for f in self.factors)

    @property
    def positives(self) -> Tuple[TorusKnotFactor, ...]:
        return tuple(f for f in self.factors if f.is_positive)

    @property
    def negatives(self) -> Tuple[TorusKnotFactor, ...]:
        return tuple(f for f in self.factors if not f.is_positive)

    def count(self, factor: TorusKnotFactor) -> int:
        return self.factors.count(factor)

    def __str__(self) -> str:
        return format_sum(self)


@dataclass(frozen=True)
class Split:
    """
    Partition of a sum into K+, K- (p >= 3) and K2- (p = 2).

    Attributes:
        k_plus: All positive factors.
        k_minus_other: Negative factors with p >= 3.
        k_minus_two: Negative two-strand factors.
    """

    k_plus: KnotSum
    k_minus_other: KnotSum
    k_minus_two: KnotSum

    def reunite(self) -> KnotSum:
        return connected_sum(connected_sum(self.k_plus, self.k_minus_other), self.k_minus_two)


def _reduce(factors: Iterable[TorusKnotFactor]) -> Tuple[TorusKnotFactor, ...]:
    counts = Counter((f.p, f.q, f.sign) for f in factors)
    reduced: List[TorusKnotFactor] = []
    for (p, q) in sorted({(p, q) for p, q, _ in counts}):
        net = counts[(p, q, POSITIVE)] - counts[(p, q, NEGATIVE)]
        sign = POSITIVE if net > 0 else NEGATIVE
        reduced.extend(TorusKnotFactor(p, q, sign) for _ in range(abs(net)))
    reduced.sort()
    return tuple(reduced)


def format_sum(k: KnotSum) -> str:
    """Canonical text of a sum, e.g. ``T(2,3) # -T(2,5)``; the empty sum is ``U``."""
    if k.is_empty():
        return "U"
    return " # ".join(str(f) for f in k.factors)


def mirror(k: KnotSum) -> KnotSum:
    """Flip the sign of every factor."""
    return KnotSum(tuple(f.mirror() for f in k.factors))


def connected_sum(a: KnotSum, b: KnotSum) -> KnotSum:
    """Multiset union of two sums, cancelling +T(p,q) / -T(p,q) pairs."""
    return KnotSum(a.factors + b.factors)


def split(k: KnotSum) -> Split:
    """Partition k by sign and by whether p = 2."""
    negatives = k.negatives
    return Split(
        k_plus=KnotSum._from_reduced(k.positives),
        k_minus_other=KnotSum._from_reduced(tuple(f for f in negatives if not f.is_two_strand)),
        k_minus_two=KnotSum._from_reduced(tuple(f for f in negatives if f.is_two_strand)),
    )
