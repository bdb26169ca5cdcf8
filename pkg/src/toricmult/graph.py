"""Bipartite input graphs, their 4-cycles, and the quadratic-generation gate.

Edges are numbered from 1 in file order; edge ``i`` is the polynomial
variable ``x_i`` everywhere else in the package.
"""

from __future__ import annotations

import json
from collections import deque
from dataclasses import dataclass
from itertools import combinations
from pathlib import Path
from typing import Any, Iterable

from .errors import (
    Disconnected,
    DuplicateEdge,
    DuplicateVertex,
    EmptyGraph,
    GraphFormatError,
    GraphTooLarge,
    NotBipartite,
    UnknownVertex,
)

DEFAULT_EDGE_CAP = 64


@dataclass(frozen=True)
class BipartiteGraph:
    left: tuple[str, ...]
    right: tuple[str, ...]
    edges: tuple[tuple[str, str], ...]
    name: str | None = None

    @property
    def m(self) -> int:
        """Number of vertices."""
        return len(self.left) + len(self.right)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    @property
    def vertices(self) -> tuple[str, ...]:
        return self.left + self.right

    def edge_index(self) -> dict[frozenset[str], int]:
        """Map each unordered endpoint pair to its 1-based edge index."""
        return {frozenset(e): i for i, e in enumerate(self.edges, start=1)}

    def adjacency(self) -> list[set[int]]:
        """Adjacency sets over vertex positions (left first, then right)."""
        pos = {v: i for i, v in enumerate(self.vertices)}
        adj: list[set[int]] = [set() for _ in range(self.m)]
        for a, b in self.edges:
            adj[pos[a]].add(pos[b])
            adj[pos[b]].add(pos[a])
        return adj

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "left": list(self.left),
            "right": list(self.right),
            "edges": [list(e) for e in self.edges],
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"


@dataclass(frozen=True)
class FourCycle:
    """A 4-cycle as four edge indices in traversal order.

    Canonical form: the first index is the smallest, and the second is
    smaller than the fourth. ``diag_a`` (first and third edges) therefore
    always holds the smallest edge index.
    """

    edge_indices: tuple[int, int, int, int]

    @property
    def diag_a(self) -> tuple[int, int]:
        i1, _, i3, _ = self.edge_indices
        return (min(i1, i3), max(i1, i3))

    @property
    def diag_b(self) -> tuple[int, int]:
        _, i2, _, i4 = self.edge_indices
        return (min(i2, i4), max(i2, i4))

    @staticmethod
    def canonical(indices: Iterable[int]) -> "FourCycle":
        seq = list(indices)
        if len(seq) != 4 or len(set(seq)) != 4:
            raise ValueError(f"a 4-cycle needs four distinct edges, got {seq}")
        k = seq.index(min(seq))
        seq = seq[k:] + seq[:k]
        if seq[1] > seq[3]:
            seq = [seq[0], seq[3], seq[2], seq[1]]
        return FourCycle(tuple(seq))  # type: ignore[arg-type]


def _as_label(value: Any, where: str) -> str:
    if not isinstance(value, str):
        raise GraphFormatError(f"{where}: vertex label must be a string, got {value!r}")
    return value


def validate_graph(raw: Any) -> BipartiteGraph:
    """Check a decoded graph description and build a :class:`BipartiteGraph`.

    Edges may list their endpoints in either order; they are stored as
    ``(left, right)``.
    """
    if not isinstance(raw, dict):
        raise GraphFormatError("graph description must be a JSON object")
    for key in ("left", "right", "edges"):
        if key not in raw:
            raise GraphFormatError(f"missing field '{key}'")
        if not isinstance(raw[key], list):
            raise GraphFormatError(f"field '{key}' must be a list")
    name = raw.get("name")
    if name is not None and not isinstance(name, str):
        raise GraphFormatError("field 'name' must be a string or null")

    left = [_as_label(v, f"left[{i}]") for i, v in enumerate(raw["left"])]
    right = [_as_label(v, f"right[{i}]") for i, v in enumerate(raw["right"])]
    seen: set[str] = set()
    for side, labels in (("left", left), ("right", right)):
        for v in labels:
            if v in seen:
                raise DuplicateVertex(f"vertex '{v}' listed twice (second time in '{side}')")
            seen.add(v)

    left_set, right_set = set(left), set(right)
    edges: list[tuple[str, str]] = []
    keys: set[frozenset[str]] = set()
    for i, item in enumerate(raw["edges"], start=1):
        if not isinstance(item, list) or len(item) != 2:
            raise GraphFormatError(f"edges[{i - 1}] must be a pair of labels")
        a = _as_label(item[0], f"edges[{i - 1}][0]")
        b = _as_label(item[1], f"edges[{i - 1}][1]")
        for v in (a, b):
            if v not in seen:
                raise UnknownVertex(f"edge {i} ({a}, {b}) uses undeclared vertex '{v}'")
        if a in left_set and b in right_set:
            edge = (a, b)
        elif a in right_set and b in left_set:
            edge = (b, a)
        else:
            side = "left" if a in left_set else "right"
            raise NotBipartite(f"edge {i} ({a}, {b}) joins two vertices of the {side} side")
        key = frozenset(edge)
        if key in keys:
            raise DuplicateEdge(f"edge {i} ({a}, {b}) repeats an earlier edge")
        keys.add(key)
        edges.append(edge)

    if not edges or not seen:
        raise EmptyGraph("graph has no edges")

    g = BipartiteGraph(tuple(left), tuple(right), tuple(edges), name)
    _check_connected(g)
    return g


def _check_connected(g: BipartiteGraph) -> None:
    adj = g.adjacency()
    seen = {0}
    queue = deque([0])
    while queue:
        v = queue.popleft()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                queue.append(u)
    if len(seen) != g.m:
        missing = next(i for i in range(g.m) if i not in seen)
        raise Disconnected(
            f"vertex '{g.vertices[missing]}' is not reachable from '{g.vertices[0]}'"
        )


def load_graph(path: str | Path) -> BipartiteGraph:
    """Read and validate a graph file.

    Raises :class:`GraphFormatError` for malformed JSON, naming the byte offset.
    """
    data = Path(path).read_bytes()
    try:
        text = data.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise GraphFormatError(f"invalid UTF-8 at byte offset {exc.start}") from exc
    try:
        raw = json.loads(text)
    except json.JSONDecodeError as exc:
        offset = len(text[: exc.pos].encode("utf-8"))
        raise GraphFormatError(f"invalid JSON at byte offset {offset}: {exc.msg}") from exc
    return validate_graph(raw)


def enumerate_four_cycles(g: BipartiteGraph) -> list[FourCycle]:
    """All 4-cycles of ``g`` in canonical form, sorted.

    Every 4-cycle of a bipartite graph has exactly two left vertices, so
    walking over left pairs and their common neighbours finds each once.
    """
    index = g.edge_index()
    nbrs: dict[str, set[str]] = {v: set() for v in g.left}
    for a, b in g.edges:
        nbrs[a].add(b)
    rpos = {v: i for i, v in enumerate(g.right)}
    cycles = []
    for a, b in combinations(g.left, 2):
        common = sorted(nbrs[a] & nbrs[b], key=rpos.__getitem__)
        for x, y in combinations(common, 2):
            ring = (
                index[frozenset((a, x))],
                index[frozenset((b, x))],
                index[frozenset((b, y))],
                index[frozenset((a, y))],
            )
            cycles.append(FourCycle.canonical(ring))
    cycles.sort(key=lambda c: c.edge_indices)
    return cycles


def find_chordless_cycle(g: BipartiteGraph, min_length: int = 6,
                         edge_cap: int = DEFAULT_EDGE_CAP) -> list[str] | None:
    """Return the vertices of some induced cycle of length >= ``min_length``.

    Exhaustive DFS over induced paths whose vertices all exceed the start
    vertex. Exponential in the worst case, hence the edge cap.
    """
    if g.n_edges > edge_cap:
        raise GraphTooLarge(f"{g.n_edges} edges exceeds the enumeration cap of {edge_cap}")
    adj = g.adjacency()

    def extend(path: list[int], on_path: set[int]) -> list[int] | None:
        s, last = path[0], path[-1]
        for v in sorted(adj[last]):
            if v <= s or v in on_path:
                continue
            # v may touch only the last vertex of the path, and s when it closes the cycle
            if any(u in adj[v] for u in path[1:-1]):
                continue
            if len(path) > 1 and s in adj[v]:
                if len(path) + 1 >= min_length:
                    return path + [v]
                continue
            on_path.add(v)
            path.append(v)
            found = extend(path, on_path)
            path.pop()
            on_path.discard(v)
            if found:
                return found
        return None

    for s in range(g.m):
        found = extend([s], {s})
        if found:
            return [g.vertices[i] for i in found]
    return None


@dataclass(frozen=True)
class QuadraticCheck:
    passed: bool
    witness: tuple[str, ...] = ()


def check_quadratic_generation(g: BipartiteGraph,
                               edge_cap: int = DEFAULT_EDGE_CAP) -> QuadraticCheck:
    """Decide whether the toric ideal of ``g`` is generated by quadrics.

    For bipartite graphs this holds exactly when no induced cycle has
    length 6 or more; any chord of an even cycle splits it into two
    shorter even cycles, and there are no odd cycles to worry about.
    """
    witness = find_chordless_cycle(g, 6, edge_cap)
    if witness is None:
        return QuadraticCheck(True)
    return QuadraticCheck(False, tuple(witness))


def cyclomatic_number(g: BipartiteGraph) -> int:
    return g.n_edges - g.m + 1


def generate_ladder(n: int, name: str | None = None) -> BipartiteGraph:
    """The ladder with ``n`` squares: ``2n+2`` vertices and ``3n+1`` edges.

    Edge order is u-rails, v-rails, then rungs, so the rails of square ``i``
    form the diagonal holding its smallest edge index.
    """
    if not isinstance(n, int) or n < 1:
        raise ValueError(f"ladder size must be a positive integer, got {n!r}")
    us = [f"u{i}" for i in range(1, n + 2)]
    vs = [f"v{i}" for i in range(1, n + 2)]
    pairs = [(us[i], us[i + 1]) for i in range(n)]
    pairs += [(vs[i], vs[i + 1]) for i in range(n)]
    pairs += list(zip(us, vs))

    # 2-colouring by BFS from u1
    nbrs: dict[str, list[str]] = {v: [] for v in us + vs}
    for a, b in pairs:
        nbrs[a].append(b)
        nbrs[b].append(a)
    colour = {us[0]: 0}
    queue = deque([us[0]])
    while queue:
        v = queue.popleft()
        for u in nbrs[v]:
            if u not in colour:
                colour[u] = 1 - colour[v]
                queue.append(u)
    left = [v for v in us + vs if colour[v] == 0]
    right = [v for v in us + vs if colour[v] == 1]
    edges = [[a, b] if colour[a] == 0 else [b, a] for a, b in pairs]
    raw = {"name": name or f"ladder{n}", "left": left, "right": right, "edges": edges}
    return validate_graph(raw)
