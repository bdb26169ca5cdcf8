from __future__ import annotations

from dataclasses import dataclass
from functools import total_ordering
from typing import Iterable, Mapping


@total_ordering
@dataclass(frozen=True)
class Monomial:
    """A monomial in the edge variables, stored sparsely.

    ``items`` holds ``(edge index, exponent)`` pairs sorted by index with
    positive exponents only. Ordering is graded lexicographic with
    ``x_1 > x_2 > ...``.
    """

    items: tuple[tuple[int, int], ...] = ()

    def __post_init__(self) -> None:
        prev = 0
        for i, e in self.items:
            if i <= prev or e <= 0:
                raise ValueError(f"malformed monomial items {self.items}")
            prev = i

    @classmethod
    def from_exponents(cls, exps: Mapping[int, int]) -> "Monomial":
        return cls(tuple(sorted((i, e) for i, e in exps.items() if e)))

    @classmethod
    def from_indices(cls, indices: Iterable[int]) -> "Monomial":
        """Product of the variables listed, with repetition."""
        counts: dict[int, int] = {}
        for i in indices:
            counts[i] = counts.get(i, 0) + 1
        return cls.from_exponents(counts)

    @classmethod
    def from_dense(cls, exps: Iterable[int]) -> "Monomial":
        """From an exponent vector whose entry 0 is ``x_1``."""
        return cls(tuple((i, e) for i, e in enumerate(exps, start=1) if e))

    @property
    def exponents(self) -> dict[int, int]:
        return dict(self.items)

    @property
    def degree(self) -> int:
        return sum(e for _, e in self.items)

    @property
    def support(self) -> frozenset[int]:
        return frozenset(i for i, _ in self.items)

    def indices(self) -> tuple[int, ...]:
        """Variables with repetition, ascending."""
        return tuple(i for i, e in self.items for _ in range(e))

    def dense(self, n: int) -> tuple[int, ...]:
        out = [0] * n
        for i, e in self.items:
            out[i - 1] = e
        return tuple(out)

    def divides(self, other: "Monomial") -> bool:
        theirs = other.exponents
        return all(theirs.get(i, 0) >= e for i, e in self.items)

    def coprime(self, other: "Monomial") -> bool:
        return not (self.support & other.support)

    def __mul__(self, other: "Monomial") -> "Monomial":
        exps = self.exponents
        for i, e in other.items:
            exps[i] = exps.get(i, 0) + e
        return Monomial.from_exponents(exps)

    def __truediv__(self, other: "Monomial") -> "Monomial":
        exps = self.exponents
        for i, e in other.items:
            left = exps.get(i, 0) - e
            if left < 0:
                raise ValueError(f"{other} does not divide {self}")
            exps[i] = left
        return Monomial.from_exponents(exps)

    def _key(self) -> tuple:
        # equal degree: more weight on smaller indices means larger
        return (self.degree, tuple(-i for i in self.indices()))

    def __lt__(self, other: "Monomial") -> bool:
        return self._key() < other._key()

    def __str__(self) -> str:
        if not self.items:
            return "1"
        return "*".join(f"x{i}" if e == 1 else f"x{i}^{e}" for i, e in self.items)
