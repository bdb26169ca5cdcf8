"""Hilbert-Samuel multiplicity of toric rings of good bipartite graphs.

The closed-form route counts standard monomials by inclusion-exclusion and
extracts the leading coefficient through Stirling numbers; the oracle route
recomputes every quantity by enumeration, rewriting and finite differences.
"""

from .choice import (
    SpecialChoice,
    binomials_from_cycles,
    bounded_product_check,
    select_special_monomials,
    solve_coprime_choice,
    termination_certificate,
)
from .counting import (
    count_all_monomials,
    count_nonstandard,
    count_standard,
    hilbert_series_truncated,
    rising_factorial_eval,
    stirling_first_unsigned,
)
from .graph import (
    BipartiteGraph,
    FourCycle,
    check_quadratic_generation,
    cyclomatic_number,
    enumerate_four_cycles,
    generate_ladder,
    load_graph,
    validate_graph,
)
from .monomial import Monomial
from .multiplicity import (
    coefficient_of_leading_term,
    krull_dimension,
    ladder_multiplicity,
    multiplicity_formula,
)
from .oracle import (
    RewriteSystem,
    confluence_probe,
    enumerate_standard_monomials,
    multiplicity_by_finite_difference,
    normal_form,
)
from .pipeline import Caps, analyse, multiplicity_report

__version__ = "0.1.0"

__all__ = [
    "BipartiteGraph",
    "Caps",
    "FourCycle",
    "Monomial",
    "RewriteSystem",
    "SpecialChoice",
    "analyse",
    "binomials_from_cycles",
    "bounded_product_check",
    "check_quadratic_generation",
    "coefficient_of_leading_term",
    "confluence_probe",
    "count_all_monomials",
    "count_nonstandard",
    "count_standard",
    "cyclomatic_number",
    "enumerate_four_cycles",
    "enumerate_standard_monomials",
    "generate_ladder",
    "hilbert_series_truncated",
    "krull_dimension",
    "ladder_multiplicity",
    "load_graph",
    "multiplicity_by_finite_difference",
    "multiplicity_formula",
    "multiplicity_report",
    "normal_form",
    "rising_factorial_eval",
    "select_special_monomials",
    "solve_coprime_choice",
    "stirling_first_unsigned",
    "termination_certificate",
    "validate_graph",
]
