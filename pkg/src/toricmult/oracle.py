"""Brute-force checks of everything the counting formulas claim.

Nothing here uses binomial coefficients, Stirling numbers, or the
inclusion-exclusion sums: standard monomials are generated one by one,
rewriting is done step by step, and the multiplicity is read off by
forward differences.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import floor
from typing import Iterator, Mapping, Sequence

from .choice import SpecialChoice
from .errors import EnumerationTooLarge, NotStabilized, StepBudgetExceeded
from .monomial import Monomial

DEFAULT_ENUMERATION_CAP = 50_000_000
DEFAULT_SEED = 0xC0FFEE


def _monomial_count_upper_bound(n: int, k: int) -> int:
    # C(n + k - 1, k) by running product; avoids importing the counting module
    out = 1
    for i in range(1, k + 1):
        out = out * (n - 1 + i) // i
    return out


def iter_standard_monomials(z: Sequence[Monomial], n_edges: int, k: int) -> Iterator[tuple[int, ...]]:
    """Dense exponent vectors of degree ``k`` divisible by no ``z``, in graded-lex order.

    Variables are assigned from ``x_1`` down to ``x_n`` with exponents
    descending, and a branch is cut as soon as an assigned prefix already
    contains some ``z``.
    """
    # for each variable, the z whose last variable it is
    closing: list[list[Monomial]] = [[] for _ in range(n_edges + 1)]
    for mono in z:
        closing[max(mono.support)].append(mono)
    exps = [0] * n_edges

    def divisible(var: int) -> bool:
        return any(all(exps[i - 1] >= e for i, e in mono.items) for mono in closing[var])

    def rec(var: int, remaining: int) -> Iterator[tuple[int, ...]]:
        if var == n_edges:
            exps[var - 1] = remaining
            if not divisible(var):
                yield tuple(exps)
            exps[var - 1] = 0
            return
        for e in range(remaining, -1, -1):
            exps[var - 1] = e
            if e and divisible(var):
                continue
            yield from rec(var + 1, remaining - e)
        exps[var - 1] = 0

    if k < 0:
        return
    yield from rec(1, k)


def enumerate_standard_monomials(choice: SpecialChoice | Sequence[Monomial], n_edges: int, k: int,
                                 listing: bool = False,
                                 cap: int = DEFAULT_ENUMERATION_CAP) -> int | tuple[int, list[Monomial]]:
    """Count (and optionally list) the standard monomials of degree ``k``."""
    z = choice.z if isinstance(choice, SpecialChoice) else tuple(choice)
    if k < 0:
        return (0, []) if listing else 0
    bound = _monomial_count_upper_bound(n_edges, k)
    if bound > cap:
        raise EnumerationTooLarge(f"{bound} monomials of degree {k} exceeds the cap of {cap}")
    if listing:
        found = [Monomial.from_dense(v) for v in iter_standard_monomials(z, n_edges, k)]
        return len(found), found
    return sum(1 for _ in iter_standard_monomials(z, n_edges, k))


@dataclass(frozen=True)
class RewriteSystem:
    """Rules ``z_i -> w_i`` with a weight vector every rule strictly decreases."""

    rules: tuple[tuple[Monomial, Monomial], ...]
    weight: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if any(w <= 0 for w in self.weight):
            raise ValueError("weights must be positive")
        for z, w in self.rules:
            if self.weigh(z) <= self.weigh(w):
                raise ValueError(f"rule {z} -> {w} does not decrease the weight")

    @classmethod
    def from_choice(cls, choice: SpecialChoice) -> "RewriteSystem":
        if choice.certificate is None:
            raise ValueError("choice carries no termination certificate")
        return cls(tuple(zip(choice.z, choice.w)), tuple(choice.certificate))

    @property
    def n_edges(self) -> int:
        return len(self.weight)

    @property
    def is_coprime(self) -> bool:
        zs = [z for z, _ in self.rules]
        return all(a.coprime(b) for i, a in enumerate(zs) for b in zs[i + 1:])

    def weigh(self, mono: Monomial) -> Fraction:
        return sum((self.weight[i - 1] * e for i, e in mono.items), Fraction(0))

    def step_budget(self, mono: Monomial) -> int:
        """Upper bound on rewrite steps from ``mono``.

        Each step lowers the weight by at least the smallest rule drop and
        the weight never goes below zero.
        """
        if not self.rules:
            return 0
        drop = min(self.weigh(z) - self.weigh(w) for z, w in self.rules)
        return floor(self.weigh(mono) / drop)

    def applicable(self, mono: Monomial) -> list[int]:
        return [i for i, (z, _) in enumerate(self.rules) if z.divides(mono)]


def normal_form(mono: Monomial, rs: RewriteSystem, order: str = "lowest",
                rng: random.Random | None = None) -> tuple[Monomial, int]:
    """Rewrite until no rule applies; returns ``(normal form, steps)``.

    ``order`` picks among applicable rules: ``"lowest"`` (the default
    strategy), ``"highest"``, or ``"random"`` using ``rng``.
    """
    budget = rs.step_budget(mono)
    steps = 0
    current = mono
    while True:
        hits = rs.applicable(current)
        if not hits:
            return current, steps
        if steps >= budget:
            raise StepBudgetExceeded(f"rewriting {mono} did not stop within {budget} steps")
        if order == "lowest":
            i = hits[0]
        elif order == "highest":
            i = hits[-1]
        elif order == "random":
            i = (rng or random).choice(hits)
        else:
            raise ValueError(f"unknown rewrite order {order!r}")
        z, w = rs.rules[i]
        current = (current / z) * w
        steps += 1


@dataclass(frozen=True)
class ConfluenceResult:
    passed: bool
    trials: int
    counterexample: tuple[Monomial, Monomial, Monomial] | None = None


def random_monomial(rs: RewriteSystem, degree: int, rng: random.Random) -> Monomial:
    """A degree-``degree`` monomial, biased toward products of several ``z``."""
    idx: list[int] = []
    if rs.rules and rng.random() < 0.5:
        while len(idx) + 2 <= degree and rng.random() < 0.8:
            idx.extend(rng.choice(rs.rules)[0].indices())
    while len(idx) < degree:
        idx.append(rng.randint(1, rs.n_edges))
    return Monomial.from_indices(idx)


def confluence_probe(rs: RewriteSystem, degree: int, trials: int = 200,
                     seed: int = DEFAULT_SEED, orders_per_trial: int = 4) -> ConfluenceResult:
    """Rewrite random monomials under several rule orders and compare results."""
    rng = random.Random(seed)
    for _ in range(trials):
        mono = random_monomial(rs, degree, rng)
        ref, _ = normal_form(mono, rs, "lowest")
        others = [normal_form(mono, rs, "highest")[0]]
        others += [normal_form(mono, rs, "random", rng)[0] for _ in range(orders_per_trial)]
        for nf in others:
            if nf != ref:
                return ConfluenceResult(False, trials, (mono, ref, nf))
    return ConfluenceResult(True, trials)


def normal_form_images(rs: RewriteSystem, degree: int, cap: int = DEFAULT_ENUMERATION_CAP) -> set[Monomial]:
    """Normal forms of every degree-``degree`` monomial."""
    bound = _monomial_count_upper_bound(rs.n_edges, degree)
    if bound > cap:
        raise EnumerationTooLarge(f"{bound} monomials of degree {degree} exceeds the cap of {cap}")
    return {normal_form(Monomial.from_dense(v), rs)[0]
            for v in iter_standard_monomials((), rs.n_edges, degree)}


def forward_differences(values: Sequence[int], order: int) -> list[int]:
    out = list(values)
    for _ in range(order):
        out = [b - a for a, b in zip(out, out[1:])]
    return out


def multiplicity_by_finite_difference(counts: Mapping[int, int], m: int,
                                      p: int | None = None, min_constant: int = 2) -> int:
    """The constant ``(m-2)``-th forward difference of ``S_k``.

    ``counts`` must cover consecutive degrees. With ``p`` given, the window
    has to start at ``k >= p + 2``, past where ``S_k`` can still differ from
    its polynomial. At least ``min_constant`` differences must agree.
    """
    if not counts:
        raise NotStabilized("no counts supplied")
    ks = sorted(counts)
    if ks != list(range(ks[0], ks[0] + len(ks))):
        raise ValueError("counts must cover consecutive degrees")
    if p is not None and ks[0] < p + 2:
        raise NotStabilized(f"window starts at k={ks[0]}, needs k >= p + 2 = {p + 2}")
    order = m - 2
    diffs = forward_differences([counts[k] for k in ks], order)
    if len(diffs) < min_constant:
        raise NotStabilized(
            f"{len(ks)} values give {len(diffs)} differences of order {order}; need {min_constant}"
        )
    if len(set(diffs)) != 1:
        raise NotStabilized(f"order-{order} differences are not constant: {diffs}")
    return diffs[0]
