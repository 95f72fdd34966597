import sys
from pathlib import Path

import hypothesis.strategies as st
import pytest

sys.path.insert(0, str(Path(__file__).parent))

from rotsign.matrix_core import NonnegMatrix
from rotsign.oracle import random_irreducible


@st.composite
def irreducible(draw, max_n=5, max_entry=2):
    n = draw(st.integers(1, max_n))
    p = draw(st.integers(1, n))
    seed = draw(st.integers(0, 2**32 - 1))
    return random_irreducible(n, p, seed, max_entry=max_entry)


@st.composite
def int_matrices(draw, min_n=1, max_n=4, lo=-3, hi=3):
    n = draw(st.integers(min_n, max_n))
    return tuple(
        tuple(draw(st.integers(lo, hi)) for _ in range(n)) for _ in range(n)
    )


@pytest.fixture
def two_cycle():
    return NonnegMatrix([[0, 1], [1, 0]])


@pytest.fixture
def three_cycle():
    return NonnegMatrix([[0, 1, 0], [0, 0, 1], [1, 0, 0]])
