"""End-to-end runs: graph -> cycles -> special monomials -> multiplicity."""

from __future__ import annotations

from dataclasses import dataclass, field

from . import choice as choice_mod
from .choice import SpecialChoice, select_special_monomials
from .counting import count_standard, hilbert_series_truncated
from .errors import EnumerationTooLarge, NotQuadratic
from .graph import (
    DEFAULT_EDGE_CAP,
    BipartiteGraph,
    FourCycle,
    check_quadratic_generation,
    enumerate_four_cycles,
)
from .multiplicity import MultiplicityReport, formula_terms, multiplicity_formula
from .oracle import (
    DEFAULT_ENUMERATION_CAP,
    DEFAULT_SEED,
    RewriteSystem,
    confluence_probe,
    enumerate_standard_monomials,
    multiplicity_by_finite_difference,
)


@dataclass(frozen=True)
class Caps:
    edge_cap: int = DEFAULT_EDGE_CAP
    p_cap: int = choice_mod.DEFAULT_P_CAP
    assignment_cap: int = choice_mod.DEFAULT_ASSIGNMENT_CAP
    t_max: int = choice_mod.DEFAULT_T_MAX
    enumeration_cap: int = DEFAULT_ENUMERATION_CAP

    def __post_init__(self) -> None:
        for name, value in vars(self).items():
            if not isinstance(value, int) or value < 1:
                raise ValueError(f"cap '{name}' must be a positive integer, got {value!r}")


@dataclass
class Analysis:
    graph: BipartiteGraph
    cycles: list[FourCycle]
    choice: SpecialChoice
    caps: Caps = field(default_factory=Caps)

    @property
    def p(self) -> int:
        return len(self.cycles)


def analyse(g: BipartiteGraph, caps: Caps = Caps()) -> Analysis:
    """Run the quadratic-generation gate and pick certified special monomials."""
    check = check_quadratic_generation(g, caps.edge_cap)
    if not check.passed:
        raise NotQuadratic(check.witness)
    cycles = enumerate_four_cycles(g)
    chosen = select_special_monomials(g, cycles, caps.p_cap, caps.assignment_cap, caps.t_max)
    return Analysis(g, cycles, chosen, caps)


def finite_difference_window(n_edges: int, m: int, p: int) -> dict[int, int]:
    """``S_k`` on ``k = p+2 .. p+2+(m-2)+2`` from the series expansion."""
    k0 = p + 2
    k1 = k0 + (m - 2) + 2
    coeffs = hilbert_series_truncated(n_edges, p, k1)
    return {k: coeffs[k] for k in range(k0, k1 + 1)}


def verification_rows(a: Analysis, kmax: int) -> list[dict]:
    rows = []
    n = a.graph.n_edges
    for k in range(0, kmax + 1):
        formula = count_standard(n, a.p, k)
        try:
            counted = enumerate_standard_monomials(a.choice, n, k,
                                                   cap=a.caps.enumeration_cap)
        except EnumerationTooLarge:
            rows.append({"k": k, "formula": str(formula), "enumerated": None,
                         "match": None, "skipped": True})
            continue
        rows.append({"k": k, "formula": str(formula), "enumerated": str(counted),
                     "match": formula == counted})
    return rows


def multiplicity_report(a: Analysis, verify: bool = False, kmax: int = 10,
                        seed: int = DEFAULT_SEED, probe_degree: int = 6,
                        probe_trials: int = 200) -> MultiplicityReport:
    g = a.graph
    e = multiplicity_formula(g.n_edges, g.m, a.p)
    report = MultiplicityReport(e, g.m, g.n_edges, a.p, "formula")
    if verify:
        window = finite_difference_window(g.n_edges, g.m, a.p)
        report.cross_checks["finite_difference"] = multiplicity_by_finite_difference(window, g.m, a.p)
        report.cross_checks["two_to_p"] = 2 ** a.p
        rows = verification_rows(a, kmax)
        probe = confluence_probe(RewriteSystem.from_choice(a.choice), probe_degree,
                                 probe_trials, seed)
        report.extra["verification"] = {
            "rows": rows,
            "confluence": {"passed": probe.passed, "trials": probe.trials,
                           "degree": probe_degree, "seed": seed},
        }
    report.extra = {"graph": g.name, "choice": a.choice.to_dict(), **report.extra}
    return report


def explain_terms(a: Analysis) -> list[tuple[int, int, int]]:
    return formula_terms(a.graph.n_edges, a.graph.m, a.p)
