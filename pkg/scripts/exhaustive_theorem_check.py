"""Brute force against the diagonal-similarity class, order by order.

For each n, every irreducible 0/1 matrix with a closed path goes through the
oracle suite (brute-force M(alpha, A) vs the class of the witness, witness
membership, exact witness spectra, BFS period vs cycle gcd).

    python3 scripts/exhaustive_theorem_check.py --n-max 4 --out results.json
"""

from __future__ import annotations

import argparse
import json
import time
from dataclasses import asdict, dataclass

from rotsign.oracle import DEFAULT_SUPPORT_CAP
from rotsign.signing import DEFAULT_ENUM_CAP
from rotsign.verify import exhaustive_family, run_verification


@dataclass
class Config:
    n_max: int = 4
    support_cap: int = DEFAULT_SUPPORT_CAP
    enum_cap: int = DEFAULT_ENUM_CAP
    out: str | None = None


def run(cfg: Config) -> dict:
    rows = []
    for n in range(1, cfg.n_max + 1):
        start = time.perf_counter()
        report = run_verification(exhaustive_family(n), support_cap=cfg.support_cap, enum_cap=cfg.enum_cap)
        secs = time.perf_counter() - start
        print(f"n={n}: {report.matrices} matrices, {secs:.1f}s")
        for r in report.results:
            extra = f", {r.skipped} skipped" if r.skipped else ""
            print(f"  {'PASS' if r.passed else 'FAIL'} {r.name} ({r.cases} cases{extra})")
            if not r.passed:
                print(f"  counterexample: {r.counterexample}")
        rows.append({"n": n, "seconds": round(secs, 2), **report.to_dict()})
    return {"config": asdict(cfg), "orders": rows, "passed": all(r["passed"] for r in rows)}


def main() -> int:
    ap = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    ap.add_argument("--n-max", type=int, default=Config.n_max)
    ap.add_argument("--support-cap", type=int, default=Config.support_cap)
    ap.add_argument("--enum-cap", type=int, default=Config.enum_cap)
    ap.add_argument("--out", default=None, help="write the results as JSON here")
    args = ap.parse_args()
    cfg = Config(args.n_max, args.support_cap, args.enum_cap, args.out)
    result = run(cfg)
    if cfg.out:
        with open(cfg.out, "w") as fh:
            json.dump(result, fh, indent=2)
    return 0 if result["passed"] else 1


if __name__ == "__main__":
    raise SystemExit(main())
