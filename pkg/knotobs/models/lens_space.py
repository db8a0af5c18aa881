"""
Lens space models for double branched covers of two-strand sums.
"""

from dataclasses import dataclass, field
from math import gcd, prod
from typing import Iterator, Tuple


@dataclass(frozen=True, order=True)
class LensSpace:
    """
    The lens space L(p,q).

    Attributes:
        p: Order of H_1, at least 2.
        q: Twist parameter with 1 <= q < p and gcd(p,q) = 1.
    """

    p: int
    q: int

    def __post_init__(self) -> None:
        if self.p < 2:
            raise ValueError(f"L({self.p},{self.q}): p must be at least 2")
        if not 1 <= self.q < self.p:
            raise ValueError(f"L({self.p},{self.q}): q must satisfy 1 <= q < p")
        if gcd(self.p, self.q) != 1:
            raise ValueError(f"L({self.p},{self.q}): gcd(p,q) must be 1")

    @property
    def h1_order(self) -> int:
        return self.p

    def partner(self) -> "LensSpace":
        """L(p, p-q)."""
        return LensSpace(self.p, self.p - self.q)

    def __str__(self) -> str:
        return f"L({self.p},{self.q})"


@dataclass(frozen=True)
class LensSpaceSum:
    """
    A connected sum of lens spaces; the empty sum is the 3-sphere.

    Attributes:
        summands: Sorted tuple of LensSpace.
    """

    summands: Tuple[LensSpace, ...] = field(default=())

    def __post_init__(self) -> None:
        object.__setattr__(self, "summands", tuple(sorted(self.summands)))

    def __iter__(self) -> Iterator[LensSpace]:
        return iter(self.summands)

    def __len__(self) -> int:
        return len(self.summands)

    def is_empty(self) -> bool:
        return not self.summands

    @property
    def h1_order(self) -> int:
        return prod(s.p for s in self.summands)

    def __str__(self) -> str:
        if self.is_empty():
            return "S^3"
        return " # ".join(str(s) for s in self.summands)
