"""Simple graphs, orientations, skew-adjacency matrices and switching.

A connected graph G has an orientation whose skew spectrum is i * Sp(G)
exactly when G is bipartite; the canonical (part I -> part J) orientation is
one, and the others are precisely its switching class. Switching by W is
conjugation of the skew-adjacency matrix by the +/-1 indicator diagonal of W,
so switching equivalence reduces to the diagonal similarity test.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable

from rotsign.errors import BaseMismatch, ParseError, ReducibleError
from rotsign.matrix_core import IntMatrix, NonnegMatrix, SignDiagonal, Signing
from rotsign.signing import decide_diag_similar


@dataclass(frozen=True)
class Graph:
    n: int
    edges: frozenset[tuple[int, int]]

    def __post_init__(self):
        norm = set()
        for i, j in self.edges:
            i, j = int(i), int(j)
            if i == j:
                raise ValueError(f"loop at vertex {i}")
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"edge {(i, j)} out of range")
            norm.add((min(i, j), max(i, j)))
        object.__setattr__(self, "edges", frozenset(norm))

    def neighbours(self) -> list[list[int]]:
        nb = [[] for _ in range(self.n)]
        for i, j in sorted(self.edges):
            nb[i].append(j)
            nb[j].append(i)
        return nb

    def components(self) -> list[list[int]]:
        nb = self.neighbours()
        seen = [False] * self.n
        comps = []
        for s in range(self.n):
            if seen[s]:
                continue
            seen[s] = True
            comp, stack = [], [s]
            while stack:
                u = stack.pop()
                comp.append(u)
                for v in nb[u]:
                    if not seen[v]:
                        seen[v] = True
                        stack.append(v)
            comps.append(sorted(comp))
        return comps

    def is_connected(self) -> bool:
        return len(self.components()) <= 1


@dataclass(frozen=True)
class Orientation:
    graph: Graph
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self):
        arcs = frozenset((int(i), int(j)) for i, j in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        undirected = {(min(i, j), max(i, j)) for i, j in arcs}
        if len(undirected) != len(arcs) or undirected != set(self.graph.edges):
            raise ValueError("an orientation must direct every edge exactly once")

    def direction(self, i: int, j: int) -> tuple[int, int]:
        return (i, j) if (i, j) in self.arcs else (j, i)


@dataclass(frozen=True)
class Bipartition:
    I: frozenset[int]
    J: frozenset[int]


def _require_connected(g: Graph) -> None:
    comps = g.components()
    if len(comps) > 1:
        raise ReducibleError(f"graph is disconnected; components: {comps}", components=comps)


def adjacency(g: Graph) -> NonnegMatrix:
    rows = [[0] * g.n for _ in range(g.n)]
    for i, j in g.edges:
        rows[i][j] = rows[j][i] = 1
    return NonnegMatrix(rows)


def skew_adjacency(o: Orientation) -> IntMatrix:
    n = o.graph.n
    rows = [[0] * n for _ in range(n)]
    for i, j in o.arcs:
        rows[i][j] = 1
        rows[j][i] = -1
    return tuple(map(tuple, rows))


def skew_signing(o: Orientation) -> Signing:
    return Signing.from_matrix(adjacency(o.graph), skew_adjacency(o))


def bipartition_of(g: Graph) -> Bipartition | None:
    """BFS 2-colouring from vertex 0 (which goes to I); None on an odd cycle."""
    _require_connected(g)
    nb = g.neighbours()
    colour = [-1] * g.n
    colour[0] = 0
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v in nb[u]:
            if colour[v] < 0:
                colour[v] = 1 - colour[u]
                queue.append(v)
            elif colour[v] == colour[u]:
                return None
    return Bipartition(
        frozenset(v for v in range(g.n) if colour[v] == 0),
        frozenset(v for v in range(g.n) if colour[v] == 1),
    )


def canonical_orientation(g: Graph, bp: Bipartition) -> Orientation:
    if bp.I & bp.J or (bp.I | bp.J) != set(range(g.n)):
        raise ValueError("bipartition must split the vertex set")
    arcs = set()
    for i, j in g.edges:
        if i in bp.I and j in bp.J:
            arcs.add((i, j))
        elif j in bp.I and i in bp.J:
            arcs.add((j, i))
        else:
            raise ValueError(f"edge {(i, j)} lies inside one part")
    return Orientation(g, frozenset(arcs))


def switch(o: Orientation, w: Iterable[int]) -> Orientation:
    w = set(w)
    return Orientation(
        o.graph,
        frozenset((j, i) if (i in w) != (j in w) else (i, j) for i, j in o.arcs),
    )


def switching_equivalent(o1: Orientation, o2: Orientation) -> frozenset[int] | None:
    """W (never containing vertex 0) with switch(o1, W) == o2, or None."""
    if o1.graph != o2.graph:
        raise BaseMismatch("orientations of different graphs")
    _require_connected(o1.graph)
    delta = decide_diag_similar(skew_signing(o1), skew_signing(o2))
    return None if delta is None else delta.negative_set()


def switching_diagonal(w: Iterable[int], n: int) -> SignDiagonal:
    return SignDiagonal.from_set(n, w)


def has_i_spectrum_orientation(g: Graph) -> Orientation | None:
    bp = bipartition_of(g)
    return None if bp is None else canonical_orientation(g, bp)


# --- text format: "n m" then m lines "i j" ---------------------------------


def _parse_pairs(text: str) -> tuple[int, list[tuple[int, int]]]:
    lines = [ln.split() for ln in text.strip().splitlines() if ln.strip()]
    if not lines or len(lines[0]) != 2:
        raise ParseError("first line must be 'n m'")
    try:
        n, m = int(lines[0][0]), int(lines[0][1])
        pairs = [(int(a), int(b)) for a, b in (ln for ln in lines[1:])]
    except ValueError as exc:
        raise ParseError(f"bad edge line: {exc}") from exc
    if len(pairs) != m:
        raise ParseError(f"expected {m} edge lines, found {len(pairs)}")
    if any(not (0 <= x < n) for pr in pairs for x in pr):
        raise ParseError("vertex index out of range")
    return n, pairs


def parse_graph(text: str) -> Graph:
    n, pairs = _parse_pairs(text)
    if any(i >= j for i, j in pairs):
        raise ParseError("graph edges must be written 'i j' with i < j")
    if len(set(pairs)) != len(pairs):
        raise ParseError("repeated edge")
    return Graph(n, frozenset(pairs))


def parse_orientation(text: str) -> Orientation:
    n, pairs = _parse_pairs(text)
    try:
        return Orientation(Graph(n, frozenset(pairs)), frozenset(pairs))
    except ValueError as exc:
        raise ParseError(str(exc)) from exc


def format_graph(g: Graph) -> str:
    edges = sorted(g.edges)
    return "\n".join([f"{g.n} {len(edges)}"] + [f"{i} {j}" for i, j in edges]) + "\n"


def format_orientation(o: Orientation) -> str:
    arcs = sorted(o.arcs, key=lambda a: (min(a), max(a)))
    return "\n".join([f"{o.graph.n} {len(arcs)}"] + [f"{i} {j}" for i, j in arcs]) + "\n"
