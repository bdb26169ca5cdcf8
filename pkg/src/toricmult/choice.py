"""Quadratic cycle binomials and the choice of special monomials.

For each 4-cycle one diagonal becomes the special (non-standard) monomial
``z`` and the other the standard side ``w``. A choice is accepted when the
``z`` are pairwise coprime and a positive weight vector makes every
rewrite ``z -> w`` strictly lighter. Such weights rule out any multiset of
relations with equal ``z`` and ``w`` products.
"""

from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations, combinations_with_replacement
from typing import Iterator, Sequence

from . import lp, twosat
from .errors import NoCoprimeChoice, NotGood, ToricMultError
from .graph import BipartiteGraph, FourCycle
from .monomial import Monomial

DEFAULT_P_CAP = 30
DEFAULT_ASSIGNMENT_CAP = 1024
DEFAULT_T_MAX = 4


@dataclass(frozen=True)
class CycleBinomial:
    cycle: FourCycle
    candidate_a: Monomial
    candidate_b: Monomial

    def pick(self, bit: int) -> tuple[Monomial, Monomial]:
        """``(z, w)`` for an orientation bit; bit 0 makes ``candidate_a`` special."""
        if bit:
            return self.candidate_b, self.candidate_a
        return self.candidate_a, self.candidate_b


@dataclass(frozen=True)
class SpecialChoice:
    orientations: tuple[int, ...]
    z: tuple[Monomial, ...]
    w: tuple[Monomial, ...]
    n_edges: int
    certificate: tuple[Fraction, ...] | None = None

    @property
    def p(self) -> int:
        return len(self.z)

    def to_dict(self) -> dict:
        out: dict = {
            "orientations": list(self.orientations),
            "z": [list(m.indices()) for m in self.z],
            "w": [list(m.indices()) for m in self.w],
            "certificate": None,
        }
        if self.certificate is not None:
            out["certificate"] = {
                "num": [c.numerator for c in self.certificate],
                "den": [c.denominator for c in self.certificate],
            }
        return out

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


def binomials_from_cycles(g: BipartiteGraph, cycles: Sequence[FourCycle]) -> list[CycleBinomial]:
    out = []
    for c in cycles:
        if max(c.edge_indices) > g.n_edges:
            raise ValueError(f"cycle {c.edge_indices} refers to edges beyond {g.n_edges}")
        out.append(CycleBinomial(c, Monomial.from_indices(c.diag_a),
                                 Monomial.from_indices(c.diag_b)))
    return out


def coprime_clauses(binomials: Sequence[CycleBinomial]) -> list[tuple[int, int]]:
    """2-SAT clauses forbidding every pair of picks whose ``z`` share a variable.

    Variable ``i`` true means cycle ``i`` has orientation bit 1.
    """
    clauses = []
    for i, j in combinations(range(len(binomials)), 2):
        for bi in (0, 1):
            zi = binomials[i].pick(bi)[0]
            for bj in (0, 1):
                zj = binomials[j].pick(bj)[0]
                if not zi.coprime(zj):
                    clauses.append((twosat.lit(i, not bi), twosat.lit(j, not bj)))
    return clauses


def solve_coprime_choice(binomials: Sequence[CycleBinomial], p_cap: int = DEFAULT_P_CAP,
                         limit: int = DEFAULT_ASSIGNMENT_CAP) -> Iterator[tuple[int, ...]]:
    """Orientation bit vectors with pairwise coprime ``z``, in lexicographic order.

    Raises :class:`NoCoprimeChoice` before yielding anything if none exist.
    """
    p = len(binomials)
    if p > p_cap:
        raise ToricMultError(f"{p} cycles exceeds the cap of {p_cap}")
    clauses = coprime_clauses(binomials)
    if twosat.solve(p, clauses) is None:
        raise NoCoprimeChoice(f"no orientation of the {p} cycles has pairwise coprime z")
    return (tuple(int(b) for b in sol) for sol in twosat.iter_solutions(p, clauses, limit))


def orient(binomials: Sequence[CycleBinomial], bits: Sequence[int],
            n_edges: int) -> SpecialChoice:
    pairs = [b.pick(bit) for b, bit in zip(binomials, bits)]
    return SpecialChoice(tuple(bits), tuple(z for z, _ in pairs),
                         tuple(w for _, w in pairs), n_edges)


def certificate_constraints(choice: SpecialChoice) -> tuple[list[list[int]], list[int]]:
    """Rows ``exp(z_i) - exp(w_i)`` with right-hand side 1."""
    rows = []
    for z, w in zip(choice.z, choice.w):
        row = [0] * choice.n_edges
        for i, e in z.items:
            row[i - 1] += e
        for i, e in w.items:
            row[i - 1] -= e
        rows.append(row)
    return rows, [1] * len(rows)


def check_certificate(choice: SpecialChoice, weights: Sequence[Fraction]) -> bool:
    rows, rhs = certificate_constraints(choice)
    return len(weights) == choice.n_edges and lp.satisfies(rows, rhs, [1] * choice.n_edges, weights)


def termination_certificate(choice: SpecialChoice) -> tuple[Fraction, ...] | None:
    """Weights ``>= 1`` under which every ``z_i`` outweighs ``w_i`` by at least 1.

    The weight-2-on-special-edges vector is tried first since it settles
    the common case with small integers; otherwise an exact simplex solve
    decides feasibility.
    """
    n = choice.n_edges
    special = set().union(*(z.support for z in choice.z)) if choice.z else set()
    simple = tuple(Fraction(2 if j in special else 1) for j in range(1, n + 1))
    if check_certificate(choice, simple):
        return simple
    rows, rhs = certificate_constraints(choice)
    point = lp.find_feasible_point(rows, rhs, [1] * n)
    if point is None:
        return None
    assert lp.satisfies(rows, rhs, [1] * n, point)
    return tuple(point)


def bounded_product_check(choice: SpecialChoice, t_max: int = DEFAULT_T_MAX) -> tuple[int, ...] | None:
    """First multiset of relations (1-based, size <= ``t_max``) with equal products.

    Multisets are tried by size, then lexicographically. None means clean.
    """
    if t_max < 1:
        raise ValueError("t_max must be at least 1")
    diffs = []
    for z, w in zip(choice.z, choice.w):
        d = Counter(z.exponents)
        d.subtract(w.exponents)
        diffs.append(d)
    for t in range(1, t_max + 1):
        for multiset in combinations_with_replacement(range(choice.p), t):
            total: Counter = Counter()
            for i in multiset:
                total.update(diffs[i])
            if not any(total.values()):
                return tuple(i + 1 for i in multiset)
    return None


def select_special_monomials(g: BipartiteGraph, cycles: Sequence[FourCycle],
                             p_cap: int = DEFAULT_P_CAP,
                             assignment_cap: int = DEFAULT_ASSIGNMENT_CAP,
                             t_max: int = DEFAULT_T_MAX) -> SpecialChoice:
    """First coprime orientation (lexicographic) that admits a certificate."""
    binomials = binomials_from_cycles(g, cycles)
    try:
        assignments = solve_coprime_choice(binomials, p_cap, assignment_cap + 1)
    except NoCoprimeChoice as exc:
        raise NotGood("no-coprime-choice", "not-good") from exc

    tried = []
    exhausted = True
    for count, bits in enumerate(assignments):
        if count == assignment_cap:
            exhausted = False
            break
        candidate = orient(binomials, bits, g.n_edges)
        cert = termination_certificate(candidate)
        if cert is not None:
            return SpecialChoice(candidate.orientations, candidate.z, candidate.w,
                                 candidate.n_edges, cert)
        tried.append((bits, bounded_product_check(candidate, t_max)))

    all_violated = all(v is not None for _, v in tried)
    status = "not-good" if exhausted and all_violated else "unknown"
    details = [{"orientations": list(bits),
                "violation": list(v) if v is not None else None}
               for bits, v in tried]
    raise NotGood("certificate-not-found", status, details, exhausted)
