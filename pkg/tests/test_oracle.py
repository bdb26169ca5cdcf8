from __future__ import annotations

import random
from fractions import Fraction

import pytest

from corpus import good_corpus, small_good_corpus, toric_image_count
from toricmult.choice import select_special_monomials
from toricmult.counting import count_all_monomials, count_standard
from toricmult.errors import EnumerationTooLarge, NotStabilized, StepBudgetExceeded
from toricmult.graph import enumerate_four_cycles, generate_ladder
from toricmult.monomial import Monomial
from toricmult.oracle import (
    RewriteSystem,
    confluence_probe,
    enumerate_standard_monomials,
    forward_differences,
    iter_standard_monomials,
    multiplicity_by_finite_difference,
    normal_form,
    normal_form_images,
)


def chosen(g):
    return select_special_monomials(g, enumerate_four_cycles(g))


def mono(*idx):
    return Monomial.from_indices(idx)


# -- enumeration --------------------------------------------------------------

@pytest.mark.parametrize("n, k, expected", [(1, 2, 9), (2, 2, 26)])
def test_enumerate_ladder_examples(n, k, expected):
    g = generate_ladder(n)
    assert enumerate_standard_monomials(chosen(g), g.n_edges, k) == expected


@pytest.mark.parametrize("g", good_corpus(), ids=lambda g: g.name)
def test_degree_zero_is_one(g):
    assert enumerate_standard_monomials(chosen(g), g.n_edges, 0) == 1


def test_enumeration_listing_is_graded_lex_and_standard():
    g = generate_ladder(2)
    ch = chosen(g)
    count, found = enumerate_standard_monomials(ch, g.n_edges, 3, listing=True)
    assert count == len(found) == count_standard(g.n_edges, 2, 3)
    assert found == sorted(found, reverse=True)
    assert len(set(found)) == count
    assert not any(z.divides(m) for m in found for z in ch.z)


def test_enumeration_without_z_counts_everything():
    for n in range(1, 6):
        for k in range(0, 6):
            assert sum(1 for _ in iter_standard_monomials((), n, k)) == count_all_monomials(n, k)


def test_enumeration_cap():
    g = generate_ladder(4)
    with pytest.raises(EnumerationTooLarge):
        enumerate_standard_monomials(chosen(g), g.n_edges, 10, cap=1000)


@pytest.mark.parametrize("g", small_good_corpus(), ids=lambda g: g.name)
def test_standard_count_is_toric_hilbert_function(g):
    # dimension of the degree-k part of K[G] from distinct vertex images
    ch = chosen(g)
    for k in range(0, 6):
        assert toric_image_count(g, k) == enumerate_standard_monomials(ch, g.n_edges, k)


def test_k23_counts_diverge_from_toric_ring():
    from corpus import k_mn
    g = k_mn(2, 3)
    assert [toric_image_count(g, k) for k in range(4)] == [1, 6, 18, 40]
    assert count_standard(6, 3, 3) == 38


# -- rewriting ----------------------------------------------------------------

def square_system():
    # L1 edges: rails 1, 2; rungs 3, 4; cycle (1, 3, 2, 4)
    return RewriteSystem(((mono(2, 4), mono(1, 3)),), (Fraction(1), Fraction(2), Fraction(1), Fraction(2)))


def test_normal_form_single_step():
    rs = square_system()
    assert normal_form(mono(2, 4), rs) == (mono(1, 3), 1)
    assert normal_form(mono(2, 2, 4), rs) == (mono(1, 2, 3), 1)
    assert normal_form(mono(1, 1, 3), rs) == (mono(1, 1, 3), 0)


def test_normal_form_chain():
    rs = square_system()
    nf, steps = normal_form(mono(2, 2, 4, 4), rs)
    assert nf == mono(1, 1, 3, 3) and steps == 2


@pytest.mark.parametrize("g", good_corpus(), ids=lambda g: g.name)
def test_normal_forms_standard_and_degree_preserving(g):
    rs = RewriteSystem.from_choice(chosen(g))
    rng = random.Random(7)
    for _ in range(100):
        m = Monomial.from_indices(rng.randint(1, g.n_edges) for _ in range(rng.randint(0, 8)))
        nf, steps = normal_form(m, rs)
        assert nf.degree == m.degree
        assert not rs.applicable(nf)
        assert steps <= rs.weigh(m)


def test_rewrite_system_rejects_non_decreasing_rule():
    with pytest.raises(ValueError):
        RewriteSystem(((mono(1, 2), mono(3, 4)), (mono(3, 4), mono(1, 2))),
                      (Fraction(1), Fraction(1), Fraction(1), Fraction(1)))


def test_step_budget_exceeded_is_reported():
    rs = square_system()
    object.__setattr__(rs, "rules", ((mono(2, 4), mono(1, 3)), (mono(1, 3), mono(2, 4))))
    with pytest.raises(StepBudgetExceeded):
        normal_form(mono(2, 4), rs)


def test_confluence_on_ladder2():
    rs = RewriteSystem.from_choice(chosen(generate_ladder(2)))
    result = confluence_probe(rs, 6, 200)
    assert result.passed and result.trials == 200


def test_confluence_single_rule():
    assert confluence_probe(square_system(), 9, 50).passed


def test_non_coprime_rules_can_diverge():
    # z1 = x1 x2 and z2 = x2 x5 share x2: x1 x2 x5 has two distinct normal forms
    rs = RewriteSystem(((mono(1, 2), mono(3, 4)), (mono(2, 5), mono(6, 7))),
                       tuple(Fraction(v) for v in (3, 3, 1, 1, 3, 1, 1)))
    assert not rs.is_coprime
    lowest, _ = normal_form(mono(1, 2, 5), rs, "lowest")
    highest, _ = normal_form(mono(1, 2, 5), rs, "highest")
    assert lowest == mono(3, 4, 5) and highest == mono(1, 6, 7)
    result = confluence_probe(rs, 3, 200)
    assert not result.passed
    m, a, b = result.counterexample
    assert a != b and a.degree == b.degree == m.degree


@pytest.mark.parametrize("g", small_good_corpus(), ids=lambda g: g.name)
def test_distinct_normal_forms_count_standard(g):
    ch = chosen(g)
    rs = RewriteSystem.from_choice(ch)
    for k in range(0, 7):
        images = normal_form_images(rs, k)
        assert len(images) == count_standard(g.n_edges, ch.p, k)


# -- finite differences ---------------------------------------------------------

def test_forward_differences():
    assert forward_differences([4, 9, 16, 25], 2) == [2, 2]


def test_square_table():
    assert multiplicity_by_finite_difference({1: 4, 2: 9, 3: 16, 4: 25}, 4) == 2


def test_tree_window():
    m = 6
    counts = {k: count_all_monomials(m - 1, k) for k in range(2, 2 + m + 1)}
    assert multiplicity_by_finite_difference(counts, m, 0) == 1


def test_ladder2_window():
    counts = {k: count_standard(7, 2, k) for k in range(4, 10)}
    assert multiplicity_by_finite_difference(counts, 6, 2) == 4


def test_not_stabilized():
    with pytest.raises(NotStabilized):
        multiplicity_by_finite_difference({0: 1, 1: 2, 2: 4, 3: 8, 4: 16}, 3)
    with pytest.raises(NotStabilized):
        multiplicity_by_finite_difference({1: 4, 2: 9, 3: 16}, 4)
    with pytest.raises(NotStabilized):
        multiplicity_by_finite_difference({k: count_standard(7, 2, k) for k in range(4, 10)}, 6, 2,
                                          min_constant=3)
    with pytest.raises(NotStabilized):
        multiplicity_by_finite_difference({2: 9, 3: 16, 4: 25, 5: 36, 6: 49}, 4, p=1)


def test_finite_difference_from_enumeration():
    g = generate_ladder(2)
    ch = chosen(g)
    counts = {k: enumerate_standard_monomials(ch, g.n_edges, k) for k in range(4, 10)}
    assert multiplicity_by_finite_difference(counts, g.m, ch.p) == 4
