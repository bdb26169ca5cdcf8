"""Exact monomial counts, unsigned Stirling numbers and rising factorials.

All counts assume the special monomials are pairwise coprime; with that,
the monomials divisible by a set of ``l`` of them are exactly the
products of those ``l`` with an arbitrary monomial of degree ``k - 2l``.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache


def binomial(n: int, k: int) -> int:
    """``C(n, k)`` by the multiplicative formula with exact running division."""
    if k < 0 or n < 0 or k > n:
        return 0
    k = min(k, n - k)
    out = 1
    for i in range(1, k + 1):
        out = out * (n - k + i) // i
    return out


def count_all_monomials(n_edges: int, k: int) -> int:
    """Number of degree-``k`` monomials in ``n_edges`` variables (0 if ``k < 0``)."""
    if n_edges < 1:
        raise ValueError("need at least one variable")
    if k < 0:
        return 0
    return binomial(n_edges + k - 1, n_edges - 1)


def count_nonstandard(n_edges: int, p: int, k: int) -> int:
    return sum((-1) ** (r - 1) * binomial(p, r) * count_all_monomials(n_edges, k - 2 * r)
               for r in range(1, p + 1))


def count_standard(n_edges: int, p: int, k: int) -> int:
    return sum((-1) ** r * binomial(p, r) * count_all_monomials(n_edges, k - 2 * r)
               for r in range(0, p + 1))


@lru_cache(maxsize=None)
def _stirling_row(a: int) -> tuple[int, ...]:
    if a == 0:
        return (1,)
    prev = _stirling_row(a - 1)
    # [a, l] = [a-1, l-1] + (a-1) [a-1, l]
    return tuple((prev[l - 1] if l >= 1 else 0) + (a - 1) * (prev[l] if l < a else 0)
                 for l in range(a + 1))


def stirling_first_unsigned(a: int, l: int) -> int:
    """Unsigned Stirling number of the first kind; 0 outside ``0 <= l <= a``."""
    if a < 0 or l < 0 or l > a:
        return 0
    for j in range(a):  # fill the cache bottom-up, keeping recursion shallow
        _stirling_row(j)
    return _stirling_row(a)[l]


def rising_factorial_eval(x: int, a: int) -> int:
    if a < 0:
        raise ValueError("rising factorial needs a >= 0")
    out = 1
    for j in range(a):
        out *= x + j
    return out


def hilbert_series_truncated(n_edges: int, p: int, degree: int) -> list[int]:
    """Coefficients of ``(1 - t^2)^p / (1 - t)^n_edges`` up to ``t^degree``.

    Built from series operations alone (no binomial coefficients): start
    from ``(1 - t^2)^p`` and divide by ``1 - t`` once per variable, which
    is a running prefix sum.
    """
    if degree < 0:
        raise ValueError("degree must be non-negative")
    if p < 0 or 2 * p > n_edges:
        raise ValueError(f"need 0 <= p <= n_edges/2, got p={p}, n_edges={n_edges}")
    coeffs = [1] + [0] * degree
    for _ in range(p):
        coeffs = [c - (coeffs[i - 2] if i >= 2 else 0) for i, c in enumerate(coeffs)]
    for _ in range(n_edges):
        total = 0
        for i, c in enumerate(coeffs):
            total += c
            coeffs[i] = total
    return coeffs


@dataclass(frozen=True)
class CountReport:
    k: int
    M: int
    NS: int
    S: int
    n_edges: int
    p: int

    def __post_init__(self) -> None:
        if self.M != self.NS + self.S or min(self.M, self.NS, self.S) < 0:
            raise ValueError(f"inconsistent counts at k={self.k}: {self.M} != {self.NS} + {self.S}")

    def to_dict(self) -> dict:
        return {"k": self.k, "M": str(self.M), "NS": str(self.NS), "S": str(self.S)}

    def to_json(self) -> str:
        return json.dumps(self.to_dict())


def count_report(n_edges: int, p: int, k: int) -> CountReport:
    return CountReport(k, count_all_monomials(n_edges, k), count_nonstandard(n_edges, p, k),
                       count_standard(n_edges, p, k), n_edges, p)
