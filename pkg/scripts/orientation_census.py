"""Census of orientations whose skew spectrum is i times the adjacency spectrum.

For every connected graph of each order, count the orientations passing the
exact coefficient test and compare with the switching class of the canonical
orientation (which has 2^(n-1) members for a connected bipartite graph).

    python3 scripts/orientation_census.py --n-max 5
"""

from __future__ import annotations

import argparse
from dataclasses import dataclass

from rotsign.oracle import all_orientations, connected_graphs, switching_class
from rotsign.orientations import adjacency, bipartition_of, canonical_orientation, skew_adjacency
from rotsign.spectrum import RotationFactor, char_poly, rotation_check

I_ROT = RotationFactor(1, 2)


@dataclass
class Config:
    n_max: int = 5


@dataclass
class OrderStats:
    n: int
    graphs: int = 0
    bipartite: int = 0
    orientations: int = 0
    rotating: int = 0
    mismatches: int = 0


def census(n: int) -> OrderStats:
    st = OrderStats(n)
    for g in connected_graphs(n):
        st.graphs += 1
        pa = char_poly(adjacency(g))
        rotating = set()
        for o in all_orientations(g):
            st.orientations += 1
            if rotation_check(pa, char_poly(skew_adjacency(o)), I_ROT):
                rotating.add(o)
        st.rotating += len(rotating)
        bp = bipartition_of(g)
        if bp is None:
            st.mismatches += bool(rotating)
            continue
        st.bipartite += 1
        expected = switching_class(canonical_orientation(g, bp))
        st.mismatches += rotating != expected or len(expected) != 2 ** (n - 1)
    return st


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=Config.n_max)
    cfg = Config(ap.parse_args().n_max)
    print(f"{'n':>2} {'graphs':>7} {'bipartite':>9} {'orientations':>12} {'i-rotating':>10} {'mismatches':>10}")
    bad = 0
    for n in range(1, cfg.n_max + 1):
        st = census(n)
        bad += st.mismatches
        print(f"{st.n:>2} {st.graphs:>7} {st.bipartite:>9} {st.orientations:>12} {st.rotating:>10} {st.mismatches:>10}")
    return 1 if bad else 0


if __name__ == "__main__":
    raise SystemExit(main())
