"""Support digraph of a matrix: strong connectivity, period and cyclic classes."""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from functools import cached_property
from math import gcd

from rotsign.errors import NoClosedPath, ReducibleError
from rotsign.matrix_core import NonnegMatrix, Permutation, as_rows, conjugate_perm


@dataclass(frozen=True)
class Digraph:
    n: int
    arcs: frozenset[tuple[int, int]]

    def __post_init__(self):
        arcs = frozenset((int(i), int(j)) for i, j in self.arcs)
        object.__setattr__(self, "arcs", arcs)
        for i, j in arcs:
            if not (0 <= i < self.n and 0 <= j < self.n):
                raise ValueError(f"arc {(i, j)} out of range for {self.n} vertices")

    @cached_property
    def succ(self) -> tuple[tuple[int, ...], ...]:
        out = [[] for _ in range(self.n)]
        for i, j in sorted(self.arcs):
            out[i].append(j)
        return tuple(map(tuple, out))

    @cached_property
    def pred(self) -> tuple[tuple[int, ...], ...]:
        inc = [[] for _ in range(self.n)]
        for i, j in sorted(self.arcs):
            inc[j].append(i)
        return tuple(map(tuple, inc))


@dataclass(frozen=True)
class CyclicStructure:
    """Period, vertex classes V_0..V_{p-1}, and the permutation to p-cyclic form.

    ``perm`` lists V_0 first, then V_1, ..., each class in ascending order;
    ``block_sizes[t] == len(classes[t])``.
    """

    p: int
    classes: tuple[tuple[int, ...], ...]
    perm: Permutation

    @property
    def block_sizes(self) -> tuple[int, ...]:
        return tuple(len(c) for c in self.classes)

    def class_of(self) -> dict[int, int]:
        return {v: t for t, cls in enumerate(self.classes) for v in cls}


def digraph_of(a) -> Digraph:
    rows = as_rows(a)
    return Digraph(len(rows), frozenset((i, j) for i, r in enumerate(rows) for j, x in enumerate(r) if x))


def _reach(start: int, adj) -> list[bool]:
    seen = [False] * len(adj)
    seen[start] = True
    stack = [start]
    while stack:
        u = stack.pop()
        for v in adj[u]:
            if not seen[v]:
                seen[v] = True
                stack.append(v)
    return seen


def is_strongly_connected(d: Digraph) -> bool:
    # a single vertex is strongly connected with or without a loop
    if d.n <= 1:
        return True
    return all(_reach(0, d.succ)) and all(_reach(0, d.pred))


def strongly_connected_components(d: Digraph) -> list[list[int]]:
    """Tarjan's algorithm, iterative. Components come out in reverse topological order."""
    index = {}
    low = {}
    on_stack = set()
    stack = []
    comps = []
    counter = 0
    for root in range(d.n):
        if root in index:
            continue
        work = [(root, iter(d.succ[root]))]
        index[root] = low[root] = counter
        counter += 1
        stack.append(root)
        on_stack.add(root)
        while work:
            v, it = work[-1]
            advanced = False
            for w in it:
                if w not in index:
                    index[w] = low[w] = counter
                    counter += 1
                    stack.append(w)
                    on_stack.add(w)
                    work.append((w, iter(d.succ[w])))
                    advanced = True
                    break
                if w in on_stack:
                    low[v] = min(low[v], index[w])
            if advanced:
                continue
            work.pop()
            if work:
                u = work[-1][0]
                low[u] = min(low[u], low[v])
            if low[v] == index[v]:
                comp = []
                while True:
                    w = stack.pop()
                    on_stack.discard(w)
                    comp.append(w)
                    if w == v:
                        break
                comps.append(sorted(comp))
    return comps


def _require_strong(d: Digraph) -> None:
    if not is_strongly_connected(d):
        comps = strongly_connected_components(d)
        raise ReducibleError(
            f"not strongly connected; strongly connected components: {comps}", components=comps
        )


def bfs_levels(d: Digraph, source: int = 0) -> list[int]:
    level = [-1] * d.n
    level[source] = 0
    queue = deque([source])
    while queue:
        u = queue.popleft()
        for v in d.succ[u]:
            if level[v] < 0:
                level[v] = level[u] + 1
                queue.append(v)
    return level


def _level_gcd(d: Digraph, level: list[int]) -> int:
    g = 0
    for u, v in d.arcs:
        g = gcd(g, level[u] + 1 - level[v])
    return g


def period(d: Digraph) -> int:
    """gcd of closed-path lengths, from BFS levels: gcd over arcs (u, v) of l(u) + 1 - l(v)."""
    _require_strong(d)
    g = _level_gcd(d, bfs_levels(d))
    if g == 0:
        raise NoClosedPath("digraph has no closed path; period is undefined")
    return g


def cyclic_structure(a: NonnegMatrix) -> CyclicStructure:
    d = digraph_of(a)
    _require_strong(d)
    level = bfs_levels(d)
    p = _level_gcd(d, level)
    if p == 0:
        raise NoClosedPath("digraph has no closed path; period is undefined")
    classes = tuple(tuple(v for v in range(d.n) if level[v] % p == t) for t in range(p))
    for u, v in d.arcs:
        if (level[u] + 1 - level[v]) % p:
            raise AssertionError(f"arc {(u, v)} breaks the cyclic class order")
    order = [v for cls in classes for v in cls]
    return CyclicStructure(p=p, classes=classes, perm=Permutation.from_order(order))


def is_p_cyclic(m, block_sizes) -> bool:
    """True iff ``m`` has nonzero entries only in blocks (t, t+1 mod p)."""
    rows = as_rows(m)
    p = len(block_sizes)
    owner = [t for t, r in enumerate(block_sizes) for _ in range(r)]
    return all(
        x == 0 or owner[j] == (owner[i] + 1) % p
        for i, r in enumerate(rows)
        for j, x in enumerate(r)
    )


def cyclic_form(a: NonnegMatrix, cs: CyclicStructure | None = None):
    """``P A P^T`` for the permutation of ``cyclic_structure``."""
    cs = cs or cyclic_structure(a)
    return conjugate_perm(a, cs.perm)
