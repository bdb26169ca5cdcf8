from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from toricmult.lp import find_feasible_point, satisfies


def fourier_motzkin_feasible(a, b, lower):
    """Feasibility of a @ x >= b, x >= lower by eliminating variables one at a time."""
    n = len(lower)
    rows = [([Fraction(v) for v in row], Fraction(rhs)) for row, rhs in zip(a, b)]
    for j in range(n):
        unit = [Fraction(int(i == j)) for i in range(n)]
        rows.append((unit, Fraction(lower[j])))
    for j in range(n):
        pos = [(r, c) for r, c in rows if r[j] > 0]
        neg = [(r, c) for r, c in rows if r[j] < 0]
        rows = [(r, c) for r, c in rows if r[j] == 0]
        for rp, cp in pos:
            for rn, cn in neg:
                fp, fn = -rn[j], rp[j]
                rows.append(([fp * x + fn * y for x, y in zip(rp, rn)], fp * cp + fn * cn))
    return all(c <= 0 for _, c in rows)


def test_simple_feasible():
    x = find_feasible_point([[1, 1, -1, -1]], [1], [1, 1, 1, 1])
    assert x is not None and satisfies([[1, 1, -1, -1]], [1], [1, 1, 1, 1], x)


def test_cyclic_infeasible():
    # three rules whose z and w multisets coincide: rows sum to zero
    a = [[1, 1, -1, -1, 0, 0], [0, 0, 1, 1, -1, -1], [-1, -1, 0, 0, 1, 1]]
    assert all(a[0][j] + a[1][j] + a[2][j] == 0 for j in range(6))
    assert find_feasible_point(a, [1, 1, 1], [1] * 6) is None
    assert not fourier_motzkin_feasible(a, [1, 1, 1], [1] * 6)


def test_empty_system_returns_lower_bounds():
    assert find_feasible_point([], [], [1, 2]) == [1, 2]


def test_shape_check():
    with pytest.raises(ValueError):
        find_feasible_point([[1, 2]], [1], [1, 1, 1])


systems = st.integers(1, 4).flatmap(lambda n: st.tuples(
    st.lists(st.lists(st.integers(-2, 2), min_size=n, max_size=n), min_size=1, max_size=5),
    st.just(n),
)).flatmap(lambda t: st.tuples(
    st.just(t[0]),
    st.lists(st.integers(-3, 3), min_size=len(t[0]), max_size=len(t[0])),
    st.lists(st.integers(0, 2), min_size=t[1], max_size=t[1]),
))


@settings(max_examples=300, deadline=None)
@given(systems)
def test_simplex_agrees_with_fourier_motzkin(system):
    a, b, lower = system
    x = find_feasible_point(a, b, lower)
    assert (x is not None) == fourier_motzkin_feasible(a, b, lower)
    if x is not None:
        assert satisfies(a, b, lower, x)
