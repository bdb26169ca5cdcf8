"""Closed-form Hilbert-Samuel multiplicity for good bipartite graphs.

``S_k`` is an alternating sum of shifted binomials ``C(k - 2r + n - 1, n - 1)``.
Expanding each through unsigned Stirling numbers and reading off the
coefficient of ``k^(m-2)`` gives the multiplicity after scaling by
``(m-2)!``. That coefficient is only the leading one when the Hilbert
polynomial really has degree ``m - 2``, i.e. when ``p = n_edges - m + 1``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from math import factorial

from .counting import binomial, stirling_first_unsigned
from .errors import DimensionMismatch, NonIntegerResult


def _check_dimensions(n_edges: int, m: int, p: int) -> None:
    if m < 2:
        raise ValueError(f"need at least two vertices, got m={m}")
    if n_edges < m - 1:
        raise ValueError(f"a connected graph on {m} vertices has at least {m - 1} edges")
    if p != n_edges - m + 1:
        raise DimensionMismatch(
            f"p={p} but n_edges - m + 1 = {n_edges - m + 1}; the standard-monomial count "
            f"has degree {n_edges - p - 1} in k, not m - 2 = {m - 2}"
        )


def inner_sum(n_edges: int, m: int, r: int) -> int:
    """Coefficient of ``k^(m-2)`` in ``(n_edges-1)! * C(k - 2r + n_edges - 1, n_edges - 1)``."""
    total = 0
    for i in range(n_edges - m + 2):
        power = 1 if i == 0 else (2 * r) ** i
        total += ((-1) ** i * stirling_first_unsigned(n_edges, m + i - 1)
                  * binomial(m + i - 2, i) * power)
    return total


def formula_terms(n_edges: int, m: int, p: int) -> list[tuple[int, int, int]]:
    """Per-``r`` rows ``(r, signed C(p, r), inner sum)`` of the double sum."""
    _check_dimensions(n_edges, m, p)
    return [(r, (-1) ** r * binomial(p, r), inner_sum(n_edges, m, r)) for r in range(p + 1)]


def coefficient_of_leading_term(n_edges: int, m: int, p: int) -> Fraction:
    total = sum(sign * inner for _, sign, inner in formula_terms(n_edges, m, p))
    return Fraction(total, factorial(n_edges - 1))


def multiplicity_formula(n_edges: int, m: int, p: int) -> int:
    e = factorial(m - 2) * coefficient_of_leading_term(n_edges, m, p)
    if e.denominator != 1:
        raise NonIntegerResult(f"multiplicity evaluated to non-integer {e}")
    if e < 1:
        raise NonIntegerResult(f"multiplicity evaluated to {e}, expected a positive integer")
    return int(e)


def ladder_multiplicity(n: int) -> int:
    if n < 1:
        raise ValueError("ladder size must be positive")
    return 2 ** n


def krull_dimension(m: int) -> int:
    if m < 2:
        raise ValueError("need at least two vertices")
    return m - 1


@dataclass
class MultiplicityReport:
    e: int
    m: int
    n_edges: int
    p: int
    method: str = "formula"
    cross_checks: dict[str, int] = field(default_factory=dict)
    extra: dict = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.e < 1:
            raise ValueError("multiplicity must be positive")
        _check_dimensions(self.n_edges, self.m, self.p)

    @property
    def dimension(self) -> int:
        return krull_dimension(self.m)

    @property
    def degree_of_hilbert_polynomial(self) -> int:
        return self.m - 2

    def to_dict(self) -> dict:
        out: dict = {
            "e": str(self.e),
            "m": self.m,
            "edges": self.n_edges,
            "p": self.p,
            "dimension": self.dimension,
            "method": self.method,
        }
        if self.cross_checks:
            out["cross_checks"] = {k: str(v) for k, v in self.cross_checks.items()}
        out["degree_of_hilbert_polynomial"] = self.degree_of_hilbert_polynomial
        out.update(self.extra)
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"
