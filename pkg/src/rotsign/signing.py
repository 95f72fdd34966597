"""Signings B of an irreducible A with sp(B) = exp(i*pi*k/p) sp(A).

For irreducible A with period p such signings exist exactly for
k = 0..2p-1. For even k they are the +/-1 diagonal conjugates of A itself;
for odd k, the conjugates of one fixed witness built from the p-cyclic form
of A by negating its corner block. Membership is therefore decided by a
+/-1 diagonal similarity test, without touching eigenvalues.
"""

from __future__ import annotations

import itertools
from collections import deque
from dataclasses import dataclass, field
from typing import Iterator

from rotsign.digraph import (
    CyclicStructure,
    cyclic_structure,
    digraph_of,
    is_strongly_connected,
    period,
    strongly_connected_components,
)
from rotsign.errors import BaseMismatch, CapExceeded, NoClosedPath, ReducibleError
from rotsign.matrix_core import (
    NonnegMatrix,
    SignDiagonal,
    Signing,
    conjugate_diag_signing,
    conjugate_perm,
)
from rotsign.spectrum import RotationFactor, char_poly, rotation_check

DEFAULT_ENUM_CAP = 20


@dataclass(frozen=True)
class AnalysisReport:
    irreducible: bool
    p: int | None
    admissible_ks: tuple[int, ...] = ()
    cyclic: CyclicStructure | None = None
    components: tuple[tuple[int, ...], ...] = ()

    @property
    def alphas(self) -> list[RotationFactor]:
        return [RotationFactor(k, self.p) for k in self.admissible_ks]

    @property
    def groups(self) -> tuple[tuple[int, ...], tuple[int, ...]]:
        """Even ks all give M(1, A); odd ks all give M(exp(i*pi/p), A)."""
        ks = self.admissible_ks
        return tuple(k for k in ks if k % 2 == 0), tuple(k for k in ks if k % 2 == 1)


@dataclass(frozen=True)
class Membership:
    member: bool
    witness: SignDiagonal | None = field(default=None)

    def __bool__(self) -> bool:
        return self.member


def _require_irreducible(a: NonnegMatrix) -> None:
    d = digraph_of(a)
    if not is_strongly_connected(d):
        comps = strongly_connected_components(d)
        raise ReducibleError(f"matrix is reducible; strongly connected components: {comps}", components=comps)


def analyze(a: NonnegMatrix) -> AnalysisReport:
    d = digraph_of(a)
    if not is_strongly_connected(d):
        comps = strongly_connected_components(d)
        return AnalysisReport(False, None, components=tuple(map(tuple, comps)))
    try:
        cs = cyclic_structure(a)
    except NoClosedPath:
        return AnalysisReport(True, None)
    return AnalysisReport(
        True,
        cs.p,
        admissible_ks=tuple(range(2 * cs.p)),
        cyclic=cs if cs.p > 1 else None,
    )


def admissible_alphas(a: NonnegMatrix) -> list[RotationFactor]:
    _require_irreducible(a)
    p = period(digraph_of(a))
    return [RotationFactor(k, p) for k in range(2 * p)]


def _check_k(a: NonnegMatrix, k: int) -> int:
    _require_irreducible(a)
    p = period(digraph_of(a))
    if not 0 <= k <= 2 * p - 1:
        raise ValueError(f"k = {k} out of range 0..{2 * p - 1} for period {p}")
    return p


def construct_witness(a: NonnegMatrix, k: int, *, verify: bool = True) -> Signing:
    """A signing B of ``a`` with sp(B) = exp(i*pi*k/p) sp(a)."""
    p = _check_k(a, k)
    if k % 2 == 0:
        result = Signing.positive(a)
    elif p == 1:
        result = Signing.negative(a)
    else:
        cs = cyclic_structure(a)
        cyc = [list(r) for r in conjugate_perm(a, cs.perm)]
        n = a.n
        first = cs.block_sizes[0]
        last_start = n - cs.block_sizes[-1]
        # corner block: rows of V_{p-1}, columns of V_0
        for i in range(last_start, n):
            for j in range(first):
                cyc[i][j] = -cyc[i][j]
        back = conjugate_perm(cyc, cs.perm.inverse())
        result = Signing.from_matrix(a, back)
    if verify:
        ok = rotation_check(char_poly(a), char_poly(result.matrix), RotationFactor(k, p))
        assert ok, f"witness for k={k} failed the rotation check"
    return result


def decide_diag_similar(b: Signing, b2: Signing) -> SignDiagonal | None:
    """D with D B D = B2 (normalised to d_0 = +1), or None."""
    if b.base != b2.base:
        raise BaseMismatch("signings have different bases")
    a = b.base
    _require_irreducible(a)
    n = a.n
    # each support position (i, j) forces d_i * d_j = b2_ij / b_ij
    ratio = [s * t for s, t in zip(b.signs, b2.signs)]
    nbrs = [[] for _ in range(n)]
    for (i, j), r in zip(a.support, ratio):
        if i != j:
            nbrs[i].append((j, r))
            nbrs[j].append((i, r))
    delta = [0] * n
    delta[0] = 1
    queue = deque([0])
    while queue:
        u = queue.popleft()
        for v, r in nbrs[u]:
            if delta[v] == 0:
                delta[v] = delta[u] * r
                queue.append(v)
    if 0 in delta:
        raise ReducibleError("support graph is not connected")
    for (i, j), r in zip(a.support, ratio):
        if delta[i] * delta[j] != r:
            return None
    return SignDiagonal(tuple(delta))


def membership(b: Signing, k: int) -> Membership:
    """Is ``b`` in M(exp(i*pi*k/p), A)? Decided by diagonal similarity."""
    a = b.base
    _check_k(a, k)
    # B_0 pinned to the canonical witness for k = 0 (A itself) or k = 1
    reference = construct_witness(a, k % 2, verify=False)
    delta = decide_diag_similar(b, reference)
    return Membership(delta is not None, delta)


def enumerate_class(b0: Signing, *, cap: int = DEFAULT_ENUM_CAP) -> Iterator[Signing]:
    """All distinct D B0 D over +/-1 diagonals D with d_0 = +1."""
    n = b0.n
    if n > cap:
        raise CapExceeded(f"order {n} exceeds enumeration cap {cap}")
    _require_irreducible(b0.base)
    seen = set()
    for tail in itertools.product((1, -1), repeat=n - 1):
        s = conjugate_diag_signing(b0, SignDiagonal((1,) + tail))
        if s not in seen:
            seen.add(s)
            yield s
