from __future__ import annotations

import json
from fractions import Fraction
from math import factorial

import pytest

from corpus import good_corpus, k_mn, path_tree, star_tree
from toricmult.counting import count_standard
from toricmult.errors import DimensionMismatch
from toricmult.graph import enumerate_four_cycles, generate_ladder
from toricmult.multiplicity import (
    MultiplicityReport,
    coefficient_of_leading_term,
    formula_terms,
    inner_sum,
    krull_dimension,
    ladder_multiplicity,
    multiplicity_formula,
)
from toricmult.oracle import multiplicity_by_finite_difference


def leading_coefficient_by_fit(n, p, m):
    """Leading coefficient of S_k from exact Lagrange-free differencing of large-k values."""
    d = m - 2
    values = [count_standard(n, p, k) for k in range(p + 2, p + 3 + d)]
    for _ in range(d):
        values = [b - a for a, b in zip(values, values[1:])]
    return Fraction(values[0], factorial(d))


def test_square_hand_evaluation():
    assert inner_sum(4, 4, 0) == 6
    assert inner_sum(4, 4, 1) == 0
    assert [t for t in formula_terms(4, 4, 1)] == [(0, 1, 6), (1, -1, 0)]
    assert multiplicity_formula(4, 4, 1) == 2


def test_ladder2_value():
    assert multiplicity_formula(7, 6, 2) == 4


@pytest.mark.parametrize("m", range(2, 12))
def test_tree_case(m):
    assert multiplicity_formula(m - 1, m, 0) == 1
    assert coefficient_of_leading_term(m - 1, m, 0) == Fraction(1, factorial(m - 2))


@pytest.mark.parametrize("n, m, p, expected", [
    (4, 4, 1, Fraction(1)),
    (7, 6, 2, Fraction(1, 6)),
])
def test_leading_coefficient_examples(n, m, p, expected):
    assert coefficient_of_leading_term(n, m, p) == expected
    assert leading_coefficient_by_fit(n, p, m) == expected


def test_square_counts_are_squares():
    assert [count_standard(4, 1, k) for k in range(1, 5)] == [4, 9, 16, 25]


@pytest.mark.parametrize("n", range(1, 13))
def test_ladder_closed_form(n):
    assert multiplicity_formula(3 * n + 1, 2 * n + 2, n) == ladder_multiplicity(n) == 2 ** n


@pytest.mark.parametrize("n, expected", [(1, 2), (3, 8), (10, 1024)])
def test_ladder_multiplicity_examples(n, expected):
    assert ladder_multiplicity(n) == expected


@pytest.mark.parametrize("m, expected", [(4, 3), (6, 5), (2, 1)])
def test_krull_dimension(m, expected):
    assert krull_dimension(m) == expected


@pytest.mark.parametrize("g", good_corpus(), ids=lambda g: g.name)
def test_formula_equals_two_to_p_and_finite_difference(g):
    p = len(enumerate_four_cycles(g))
    e = multiplicity_formula(g.n_edges, g.m, p)
    assert e == 2 ** p
    window = {k: count_standard(g.n_edges, p, k) for k in range(p + 2, p + 2 + (g.m - 2) + 3)}
    assert multiplicity_by_finite_difference(window, g.m, p) == e


@pytest.mark.parametrize("n, m, p", [(6, 5, 3), (9, 6, 9), (7, 6, 1)])
def test_dimension_gate(n, m, p):
    with pytest.raises(DimensionMismatch):
        multiplicity_formula(n, m, p)


def test_k23_dimension_mismatch():
    g = k_mn(2, 3)
    p = len(enumerate_four_cycles(g))
    with pytest.raises(DimensionMismatch):
        multiplicity_formula(g.n_edges, g.m, p)


def test_formula_with_pure_integers_for_wide_range():
    # random-ish parameter sweep: p cycles glued onto a tree keep the gate satisfied
    for m in range(3, 14):
        for p in range(0, 6):
            n = m - 1 + p
            if 2 * p > n:
                continue
            assert multiplicity_formula(n, m, p) == 2 ** p
            assert coefficient_of_leading_term(n, m, p) == leading_coefficient_by_fit(n, p, m)


def test_report_json_shape():
    report = MultiplicityReport(8, 8, 10, 3, cross_checks={"finite_difference": 8, "two_to_p": 8})
    data = json.loads(report.to_json())
    assert list(data)[:7] == ["e", "m", "edges", "p", "dimension", "method", "cross_checks"]
    assert data["e"] == "8" and data["dimension"] == 7
    assert data["cross_checks"] == {"finite_difference": "8", "two_to_p": "8"}
    assert data["degree_of_hilbert_polynomial"] == 6


def test_report_rejects_dimension_mismatch():
    with pytest.raises(DimensionMismatch):
        MultiplicityReport(2, 5, 6, 3)


@pytest.mark.parametrize("g", [path_tree(3), star_tree(5)])
def test_trees_p_zero(g):
    assert enumerate_four_cycles(g) == []
    assert multiplicity_formula(g.n_edges, g.m, 0) == 1
