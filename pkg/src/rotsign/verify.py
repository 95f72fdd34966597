"""Oracle suite behind ``rotsign verify``: fast paths against brute force."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from typing import Callable, Iterable

from rotsign import oracle
from rotsign.digraph import Digraph, period
from rotsign.errors import CapExceeded
from rotsign.matrix_core import NonnegMatrix, format_matrix
from rotsign.signing import construct_witness, enumerate_class, membership
from rotsign.spectrum import RotationFactor, char_poly, rotation_check


@dataclass
class PropertyResult:
    name: str
    cases: int = 0
    skipped: int = 0
    counterexample: str | None = None

    @property
    def passed(self) -> bool:
        return self.counterexample is None

    def fail(self, msg: str) -> None:
        if self.counterexample is None:
            self.counterexample = msg


@dataclass
class VerifyReport:
    matrices: int
    results: list[PropertyResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    def to_dict(self) -> dict:
        return {
            "matrices": self.matrices,
            "passed": self.passed,
            "properties": [
                {"name": r.name, "passed": r.passed, "cases": r.cases, "skipped": r.skipped,
                 "counterexample": r.counterexample}
                for r in self.results
            ],
        }


def random_family(n: int, trials: int, seed: int, *, max_entry: int = 2) -> list[NonnegMatrix]:
    rng = random.Random(seed)
    family = []
    for _ in range(trials):
        size = rng.randint(1, n)
        p = rng.randint(1, size)
        family.append(oracle.random_irreducible(size, p, rng.randrange(2**32), max_entry=max_entry))
    return family


def exhaustive_family(n: int) -> list[NonnegMatrix]:
    """Every irreducible 0/1 matrix of order n that has a closed path."""
    return [a for a in oracle.irreducible_01_matrices(n) if a.support]


def _show(a: NonnegMatrix, **extra) -> str:
    tail = ", ".join(f"{k}={v}" for k, v in extra.items())
    return f"A=\n{format_matrix(a)}{tail}"


def run_verification(
    family: Iterable[NonnegMatrix],
    *,
    support_cap: int = oracle.DEFAULT_SUPPORT_CAP,
    enum_cap: int = 20,
    check: Callable = rotation_check,
) -> VerifyReport:
    """``check`` is the rotation test the oracle filters with; tests swap in mutants."""
    theorem = PropertyResult("theorem: brute-force M(alpha,A) == diagonal class of witness")
    member = PropertyResult("witness is a member for every k")
    spectra = PropertyResult("witness passes the exact rotation check")
    periods = PropertyResult("BFS period == gcd of simple cycle lengths")
    count = 0
    for a in family:
        count += 1
        d = Digraph(a.n, frozenset(a.support))
        p = period(d)
        periods.cases += 1
        if a.n <= oracle.DEFAULT_CYCLE_CAP:
            cyc = oracle.all_simple_cycles_gcd(d)
            if cyc != p:
                periods.fail(_show(a, period=p, cycle_gcd=cyc))
        else:
            periods.skipped += 1
        pa = char_poly(a)
        classes = {}
        for k in range(2 * p):
            w = construct_witness(a, k, verify=False)
            spectra.cases += 1
            if not rotation_check(pa, char_poly(w.matrix), RotationFactor(k, p)):
                spectra.fail(_show(a, k=k, witness=w.matrix))
            member.cases += 1
            if not membership(w, k):
                member.fail(_show(a, k=k))
            try:
                brute = oracle.brute_force_M(a, k, cap=support_cap, check=check)
            except CapExceeded:
                theorem.skipped += 1
                continue
            if k % 2 not in classes:
                classes[k % 2] = frozenset(enumerate_class(w, cap=enum_cap))
            theorem.cases += 1
            if brute != classes[k % 2]:
                theorem.fail(_show(a, k=k, brute_force=len(brute), diagonal_class=len(classes[k % 2])))
    return VerifyReport(count, [theorem, member, spectra, periods])
