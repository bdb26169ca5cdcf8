"""2-SAT via strongly connected components of the implication graph.

Variables are ``0..n-1``. Literal ``2*v`` means ``v`` is true, ``2*v+1``
means it is false; a clause is a pair of literals.
"""

from __future__ import annotations

from typing import Iterator, Sequence


def lit(var: int, value: bool) -> int:
    return 2 * var if value else 2 * var + 1


def neg(literal: int) -> int:
    return literal ^ 1


def strongly_connected_components(adj: Sequence[Sequence[int]]) -> list[int]:
    """Tarjan's algorithm, iterative. Returns a component id per node.

    Components are numbered in reverse topological order: an edge between
    two different components goes from the higher id to the lower.
    """
    n = len(adj)
    index = [-1] * n
    low = [0] * n
    comp = [-1] * n
    on_stack = [False] * n
    stack: list[int] = []
    counter = 0
    ncomp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack[root] = True
        while work:
            v, i = work[-1]
            if i < len(adj[v]):
                work[-1] = (v, i + 1)
                u = adj[v][i]
                if index[u] == -1:
                    index[u] = low[u] = counter
                    counter += 1
                    stack.append(u)
                    on_stack[u] = True
                    work.append((u, 0))
                elif on_stack[u]:
                    low[v] = min(low[v], index[u])
                continue
            work.pop()
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
            if low[v] == index[v]:
                while True:
                    u = stack.pop()
                    on_stack[u] = False
                    comp[u] = ncomp
                    if u == v:
                        break
                ncomp += 1
    return comp


def solve(n_vars: int, clauses: Sequence[tuple[int, int]]) -> list[bool] | None:
    """One satisfying assignment, or None if the formula is unsatisfiable."""
    adj: list[list[int]] = [[] for _ in range(2 * n_vars)]
    for a, b in clauses:
        adj[neg(a)].append(b)
        adj[neg(b)].append(a)
    comp = strongly_connected_components(adj)
    out = []
    for v in range(n_vars):
        t, f = comp[lit(v, True)], comp[lit(v, False)]
        if t == f:
            return None
        # Tarjan ids are reverse topological: the later literal in topo order wins
        out.append(t < f)
    return out


def iter_solutions(n_vars: int, clauses: Sequence[tuple[int, int]],
                   limit: int | None = None) -> Iterator[list[bool]]:
    """All satisfying assignments in lexicographic order (False before True).

    Each variable is fixed in turn and the branch is kept only if the
    formula with the fixed prefix is still satisfiable, so no dead branch
    is ever explored.
    """
    base = list(clauses)
    if solve(n_vars, base) is None:
        return
    count = 0
    # depth-first with an explicit stack of pending branches
    stack: list[list[bool]] = [[]]
    while stack:
        prefix = stack.pop()
        if len(prefix) == n_vars:
            yield prefix
            count += 1
            if limit is not None and count >= limit:
                return
            continue
        for value in (True, False):
            trial = prefix + [value]
            units = [(lit(i, b), lit(i, b)) for i, b in enumerate(trial)]
            if solve(n_vars, base + units) is not None:
                stack.append(trial)
