import random
from math import gcd

import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import irreducible
from rotsign.digraph import Digraph, digraph_of, is_strongly_connected, period
from rotsign.errors import CapExceeded, NoClosedPath
from rotsign.matrix_core import NonnegMatrix, Signing
from rotsign.oracle import (
    all_signings,
    all_simple_cycles_gcd,
    brute_force_M,
    connected_graphs,
    irreducible_01_matrices,
    random_irreducible,
    signings_rotated_by,
    strongly_connected_digraphs,
)
from rotsign.signing import decide_diag_similar
from rotsign.spectrum import RotationFactor

C4_DIRECTED = NonnegMatrix([[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 0, 0, 0]])
TWO = NonnegMatrix([[0, 1], [1, 0]])


def test_all_signings_counts():
    assert len(list(all_signings(NonnegMatrix([[0]])))) == 1
    assert len(list(all_signings(TWO))) == 4
    sigs = list(all_signings(C4_DIRECTED))
    assert len(sigs) == 16 and len(set(sigs)) == 16
    assert sigs[0] == Signing.positive(C4_DIRECTED)


def test_c4_has_eight_i_rotating_signings():
    rotating = signings_rotated_by(C4_DIRECTED, RotationFactor(1, 2))
    assert len(rotating) == 8 == 2 ** (4 - 1)
    assert rotating == brute_force_M(C4_DIRECTED, 2)


def test_brute_force_two_cycle():
    assert {s.matrix for s in brute_force_M(TWO, 1)} == {((0, 1), (-1, 0)), ((0, -1), (1, 0))}
    assert {s.matrix for s in brute_force_M(TWO, 0)} == {((0, 1), (1, 0)), ((0, -1), (-1, 0))}


def test_brute_force_with_loop_is_class_of_minus_a():
    a = NonnegMatrix([[1, 1], [1, 0]])
    found = brute_force_M(a, 1)
    neg = Signing.negative(a)
    assert neg in found
    assert all(decide_diag_similar(neg, b) is not None for b in found)
    assert len(found) == 2


def test_support_cap():
    with pytest.raises(CapExceeded):
        list(all_signings(TWO, cap=1))
    with pytest.raises(CapExceeded):
        brute_force_M(TWO, 0, cap=1)


def test_check_hook_is_used():
    assert brute_force_M(TWO, 0, check=lambda pa, pb, alpha: False) == frozenset()
    assert len(brute_force_M(TWO, 0, check=lambda pa, pb, alpha: True)) == 4


def test_cycle_gcd_examples():
    assert all_simple_cycles_gcd(Digraph(2, {(0, 1), (1, 0)})) == 2
    figure_eight = Digraph(4, {(0, 1), (1, 0), (0, 2), (2, 3), (3, 0)})
    assert all_simple_cycles_gcd(figure_eight) == 1
    with pytest.raises(NoClosedPath):
        all_simple_cycles_gcd(Digraph(2, {(0, 1)}))
    with pytest.raises(CapExceeded):
        all_simple_cycles_gcd(Digraph(9, {(i, (i + 1) % 9) for i in range(9)}))


@pytest.mark.parametrize("seed", range(30))
def test_cycle_gcd_matches_networkx_and_period(seed):
    rng = random.Random(seed)
    while True:
        arcs = {(i, j) for i in range(6) for j in range(6) if i != j and rng.random() < 0.3}
        d = Digraph(6, arcs)
        if is_strongly_connected(d):
            break
    g = nx.DiGraph(list(arcs))
    lengths = [len(c) for c in nx.simple_cycles(g)]
    assert all_simple_cycles_gcd(d) == gcd(*lengths) == period(d)


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_cycle_gcd_equals_period_exhaustive(n):
    for d in strongly_connected_digraphs(n):
        if d.arcs:
            assert all_simple_cycles_gcd(d) == period(d)


def test_random_irreducible_examples():
    a = random_irreducible(3, 3, 9)
    assert len(a.support) == 3
    assert all(sum(1 for x in r if x) == 1 for r in a.rows)
    one = random_irreducible(1, 1, 4)
    assert one.n == 1 and one.rows[0][0] >= 1
    assert period(digraph_of(random_irreducible(6, 2, 42))) == 2
    assert random_irreducible(6, 2, 42) == random_irreducible(6, 2, 42)
    with pytest.raises(ValueError):
        random_irreducible(2, 3, 0)


@settings(deadline=None)
@given(st.integers(1, 10), st.data())
def test_random_irreducible_has_requested_period(n, data):
    p = data.draw(st.integers(1, n))
    seed = data.draw(st.integers(0, 10**9))
    e = data.draw(st.integers(1, 5))
    a = random_irreducible(n, p, seed, max_entry=e)
    assert period(digraph_of(a)) == p
    assert max(max(r) for r in a.rows) <= e


@settings(deadline=None, max_examples=40)
@given(irreducible(max_n=4))
def test_brute_force_class_sizes(a):
    if len(a.support) > 16:
        return
    p = period(digraph_of(a))
    for k in range(2 * p):
        assert len(brute_force_M(a, k)) in (0, 2 ** (a.n - 1))


def test_family_counts():
    # labelled strongly connected digraphs with loops allowed: 2^n times the loopless count (1, 1, 18, 1606)
    assert [sum(1 for _ in irreducible_01_matrices(n)) for n in (1, 2, 3)] == [2, 4, 144]
    assert sum(1 for _ in strongly_connected_digraphs(3, loops=False)) == 18
    # labelled connected graphs: 1, 1, 4, 38, 728
    assert [sum(1 for _ in connected_graphs(n)) for n in (1, 2, 3, 4, 5)] == [1, 1, 4, 38, 728]
