"""Brute-force machinery for checking the fast paths at desk scale.

Signings are filtered on exact characteristic polynomials (never by diagonal
similarity), cycle gcds come from enumerating simple cycles, and switching
classes from trying every vertex subset.
"""

from __future__ import annotations

import itertools
import random
from functools import lru_cache
from math import gcd
from typing import Callable, Iterator

import numpy as np

from rotsign.digraph import Digraph, period
from rotsign.errors import CapExceeded, NoClosedPath
from rotsign.matrix_core import NonnegMatrix, Permutation, Signing, conjugate_perm
from rotsign.orientations import Graph, Orientation, switch
from rotsign.spectrum import CharPoly, RotationFactor, char_poly, char_poly_batch, rotation_mask

DEFAULT_SUPPORT_CAP = 16
DEFAULT_CYCLE_CAP = 8


def _sign_table(m: int) -> np.ndarray:
    """All 2^m sign vectors, lexicographic with +1 before -1."""
    codes = np.arange(2**m, dtype=np.int64)[:, None]
    bits = (codes >> np.arange(m - 1, -1, -1, dtype=np.int64)) & 1
    return 1 - 2 * bits


def all_signings(a: NonnegMatrix, *, cap: int = DEFAULT_SUPPORT_CAP) -> Iterator[Signing]:
    m = len(a.support)
    if m > cap:
        raise CapExceeded(f"support size {m} exceeds cap {cap}")
    for signs in itertools.product((1, -1), repeat=m):
        yield Signing(a, signs)


@lru_cache(maxsize=4)
def _signed_charpolys(a: NonnegMatrix) -> tuple[np.ndarray, np.ndarray]:
    m = len(a.support)
    table = _sign_table(m)
    n = a.n
    mats = np.zeros((len(table), n, n), dtype=np.int64)
    if m:
        rows, cols = zip(*a.support)
        vals = np.array([a.rows[i][j] for i, j in a.support], dtype=np.int64)
        mats[:, list(rows), list(cols)] = table * vals
    return table, char_poly_batch(mats)


@lru_cache(maxsize=4)
def _base_poly(a: NonnegMatrix) -> CharPoly:
    return char_poly(a)


def signings_rotated_by(
    a: NonnegMatrix,
    alpha: RotationFactor,
    *,
    cap: int = DEFAULT_SUPPORT_CAP,
    check: Callable[[CharPoly, CharPoly, RotationFactor], bool] | None = None,
) -> frozenset[Signing]:
    """Every signing B of ``a`` with sp(B) = alpha sp(a), by exhaustive search.

    ``check`` replaces the vectorised coefficient test with a per-signing
    predicate of the same shape as ``rotation_check``.
    """
    m = len(a.support)
    if m > cap:
        raise CapExceeded(f"support size {m} exceeds cap {cap}")
    table, polys = _signed_charpolys(a)
    pa = _base_poly(a)
    if check is None:
        mask = rotation_mask(pa, polys, alpha)
    else:
        mask = np.array([check(pa, CharPoly(tuple(int(c) for c in row)), alpha) for row in polys], dtype=bool)
    return frozenset(Signing(a, tuple(int(s) for s in row)) for row in table[mask])


def brute_force_M(a: NonnegMatrix, k: int, *, cap: int = DEFAULT_SUPPORT_CAP, check=None) -> frozenset[Signing]:
    p = period(Digraph(a.n, frozenset(a.support)))
    return signings_rotated_by(a, RotationFactor(k, p), cap=cap, check=check)


def all_simple_cycles_gcd(d: Digraph, *, cap: int = DEFAULT_CYCLE_CAP) -> int:
    """gcd of the lengths of all simple directed cycles (loops count as length 1)."""
    if d.n > cap:
        raise CapExceeded(f"{d.n} vertices exceeds cycle-enumeration cap {cap}")
    succ = d.succ
    g = 0
    for i, j in d.arcs:
        if i == j:
            return 1
    # cycles whose smallest vertex is s, walking only through larger vertices
    for s in range(d.n):
        stack = [(s, iter(succ[s]))]
        on_path = {s}
        while stack:
            v, it = stack[-1]
            for w in it:
                if w == s:
                    g = gcd(g, len(stack))
                    if g == 1:
                        return 1
                elif w > s and w not in on_path:
                    on_path.add(w)
                    stack.append((w, iter(succ[w])))
                    break
            else:
                stack.pop()
                on_path.discard(v)
    if g == 0:
        raise NoClosedPath("digraph has no cycle")
    return g


def random_irreducible(n: int, p: int, seed: int, *, max_entry: int = 3) -> NonnegMatrix:
    """Irreducible nonnegative matrix of order n and period exactly p, reproducible from ``seed``."""
    if not 1 <= p <= n:
        raise ValueError(f"need 1 <= p <= n, got n={n}, p={p}")
    rng = random.Random(seed)
    # split 0..n-1 into p nonempty consecutive classes
    cuts = sorted(rng.sample(range(1, n), p - 1))
    bounds = [0, *cuts, n]
    classes = [list(range(bounds[t], bounds[t + 1])) for t in range(p)]
    width = max(len(c) for c in classes)
    # closed walk through every vertex, moving class t -> t+1 at each step
    walk = [classes[s % p][(s // p) % len(classes[s % p])] for s in range(width * p)]
    skeleton = {(walk[s], walk[(s + 1) % len(walk)]) for s in range(len(walk))}
    allowed = [(u, v) for t in range(p) for u in classes[t] for v in classes[(t + 1) % p]]
    density = rng.uniform(0.1, 0.6)
    for _ in range(50):
        arcs = skeleton | {e for e in allowed if rng.random() < density}
        if period(Digraph(n, frozenset(arcs))) == p:
            break
    else:
        # a short p-cycle pins the period to p
        arcs = arcs | {(walk[p - 1], walk[0])}
    rows = [[0] * n for _ in range(n)]
    for u, v in arcs:
        rows[u][v] = rng.randint(1, max_entry)
    shuffle = list(range(n))
    rng.shuffle(shuffle)
    a = NonnegMatrix(conjugate_perm(rows, Permutation(tuple(shuffle))))
    assert period(Digraph(n, frozenset(a.support))) == p
    return a


def random_signing(a: NonnegMatrix, rng: random.Random) -> Signing:
    return Signing(a, tuple(rng.choice((1, -1)) for _ in a.support))


# --- exhaustive families ---------------------------------------------------


def _strongly_connected_bits(n: int, out_bits: list[int]) -> bool:
    full = (1 << n) - 1
    for adj in (out_bits, [sum(1 << i for i in range(n) if out_bits[i] >> j & 1) for j in range(n)]):
        seen = frontier = 1
        while frontier:
            nxt = 0
            for v in range(n):
                if frontier >> v & 1:
                    nxt |= adj[v]
            frontier = nxt & ~seen
            seen |= nxt
        if seen != full:
            return False
    return True


def strongly_connected_digraphs(n: int, *, loops: bool = True) -> Iterator[Digraph]:
    """Every strongly connected digraph on vertices 0..n-1."""
    slots = [(i, j) for i in range(n) for j in range(n) if loops or i != j]
    for code in range(2 ** len(slots)):
        out = [0] * n
        arcs = []
        for b, (i, j) in enumerate(slots):
            if code >> b & 1:
                out[i] |= 1 << j
                arcs.append((i, j))
        if _strongly_connected_bits(n, out):
            yield Digraph(n, frozenset(arcs))


def irreducible_01_matrices(n: int) -> Iterator[NonnegMatrix]:
    for d in strongly_connected_digraphs(n):
        rows = [[0] * n for _ in range(n)]
        for i, j in d.arcs:
            rows[i][j] = 1
        yield NonnegMatrix(rows)


def connected_graphs(n: int) -> Iterator[Graph]:
    pairs = list(itertools.combinations(range(n), 2))
    for code in range(2 ** len(pairs)):
        g = Graph(n, frozenset(pr for b, pr in enumerate(pairs) if code >> b & 1))
        if g.is_connected():
            yield g


def all_orientations(g: Graph) -> Iterator[Orientation]:
    edges = sorted(g.edges)
    for flips in itertools.product((False, True), repeat=len(edges)):
        yield Orientation(g, frozenset((j, i) if f else (i, j) for (i, j), f in zip(edges, flips)))


def switching_class(o: Orientation) -> frozenset[Orientation]:
    n = o.graph.n
    return frozenset(
        switch(o, [v for v in range(n) if code >> v & 1]) for code in range(2**n)
    )


def exhaustive_switching(o1: Orientation, o2: Orientation) -> frozenset[int] | None:
    """Smallest-code W (never containing vertex 0) with switch(o1, W) == o2."""
    n = o1.graph.n
    for code in range(0, 2**n, 2):
        w = frozenset(v for v in range(n) if code >> v & 1)
        if switch(o1, w) == o2:
            return w
    return None


def coefficient_vanishing(pa: CharPoly, p: int) -> bool:
    """c_j == 0 for every j not divisible by p."""
    return all(c == 0 for j, c in enumerate(pa.coeffs) if j % p)
