"""Command-line front end.

Exit codes: 0 success / true, 1 false, 2 parse error, 3 reducible input,
4 base mismatch, 5 cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from rotsign import oracle
from rotsign.errors import BaseMismatch, ParseError, RotsignError
from rotsign.matrix_core import (
    NonnegMatrix,
    Signing,
    absolute,
    default_max_n,
    format_matrix,
    parse_matrix,
    parse_nonneg,
)
from rotsign.orientations import (
    bipartition_of,
    canonical_orientation,
    format_orientation,
    parse_graph,
    parse_orientation,
    switch,
    switching_equivalent,
)
from rotsign.signing import DEFAULT_ENUM_CAP, analyze, construct_witness, decide_diag_similar, membership
from rotsign.spectrum import RotationFactor
from rotsign.verify import exhaustive_family, random_family, run_verification


def _read(path: str) -> str:
    try:
        return Path(path).read_text()
    except OSError as exc:
        raise ParseError(f"cannot read {path}: {exc}") from exc


def _fmt_set(xs) -> str:
    return "{" + ",".join(str(x) for x in sorted(xs)) + "}"


def _emit(args, payload: dict, text: str) -> None:
    print(json.dumps(payload) if args.json else text.rstrip("\n"))


def cmd_analyze(args) -> int:
    a = parse_nonneg(_read(args.matrix), max_n=args.max_n)
    rep = analyze(a)
    if not rep.irreducible:
        comps = [list(c) for c in rep.components]
        _emit(args, {"irreducible": False, "components": comps},
              f"reducible; strongly connected components: {comps}")
        return 3
    if rep.p is None:
        _emit(args, {"irreducible": True, "p": None},
              "irreducible, period undefined (no closed path)")
        return 3
    even, odd = rep.groups
    classes = rep.cyclic.classes if rep.cyclic else (tuple(range(a.n)),)
    payload = {
        "irreducible": True,
        "p": rep.p,
        "ks": list(rep.admissible_ks),
        "alphas": [str(x) for x in rep.alphas],
        "classes": [list(c) for c in classes],
        "block_sizes": [len(c) for c in classes],
        "groups": {"M(1,A)": list(even), f"M(e^(i*pi/{rep.p}),A)": list(odd)},
    }
    lines = [f"irreducible, p={rep.p}, ks={_fmt_set(rep.admissible_ks)}"]
    if rep.p == 1:
        lines.append("alpha in {1,-1}")
    lines.append("classes: " + " ".join(f"V{t}={_fmt_set(c)}" for t, c in enumerate(classes)))
    lines.append(f"block sizes: {tuple(len(c) for c in classes)}")
    lines.append("alphas: " + " ".join(payload["alphas"]))
    lines.append(f"groups: M(1,A) <- k in {_fmt_set(even)}; M(e^(i*pi/{rep.p}),A) <- k in {_fmt_set(odd)}")
    _emit(args, payload, "\n".join(lines))
    return 0


def cmd_construct(args) -> int:
    a = parse_nonneg(_read(args.matrix), max_n=args.max_n)
    b = construct_witness(a, args.k)
    if args.json:
        print(format_matrix(b.matrix, as_json=True))
    else:
        sys.stdout.write(format_matrix(b.matrix))
    return 0


def _signing_of(base: NonnegMatrix, path: str, max_n: int | None) -> Signing:
    return Signing.from_matrix(base, parse_matrix(_read(path), max_n=max_n, signed=True))


def _delta_text(delta) -> str:
    return " ".join(str(d) for d in delta.diag)


def cmd_check(args) -> int:
    a = parse_nonneg(_read(args.matrix), max_n=args.max_n)
    b = _signing_of(a, args.signed, args.max_n)
    res = membership(b, args.k)
    p = len(analyze(a).admissible_ks) // 2
    alpha = str(RotationFactor(args.k, p)) if 0 <= args.k < 2 * p else None
    payload = {"member": res.member, "alpha": alpha,
               "delta": list(res.witness.diag) if res.witness else None}
    text = f"member of M({alpha},A): yes\ndelta: {_delta_text(res.witness)}" if res.member \
        else f"member of M({alpha},A): no"
    _emit(args, payload, text)
    return 0 if res.member else 1


def cmd_similar(args) -> int:
    rows1 = parse_matrix(_read(args.first), max_n=args.max_n, signed=True)
    base = NonnegMatrix(absolute(rows1))
    b1 = Signing.from_matrix(base, rows1)
    b2 = _signing_of(base, args.second, args.max_n)
    delta = decide_diag_similar(b1, b2)
    payload = {"similar": delta is not None, "delta": list(delta.diag) if delta else None}
    _emit(args, payload, f"similar: yes\ndelta: {_delta_text(delta)}" if delta else "similar: no")
    return 0 if delta else 1


def cmd_orient(args) -> int:
    if args.action in ("bipartite", "canonical"):
        g = parse_graph(_read(args.files[0]))
        bp = bipartition_of(g)
        if bp is None:
            _emit(args, {"bipartite": False}, "not bipartite (odd cycle)")
            return 1
        if args.action == "bipartite":
            _emit(args, {"bipartite": True, "I": sorted(bp.I), "J": sorted(bp.J)},
                  f"I={_fmt_set(bp.I)} J={_fmt_set(bp.J)}")
        else:
            o = canonical_orientation(g, bp)
            _emit(args, {"arcs": sorted(o.arcs)}, format_orientation(o))
        return 0
    if args.action == "switch":
        o = parse_orientation(_read(args.files[0]))
        w = [int(x) for x in args.set.split(",") if x.strip()] if args.set else []
        if any(not 0 <= v < o.graph.n for v in w):
            raise ParseError(f"vertex set {w} out of range")
        s = switch(o, w)
        _emit(args, {"arcs": sorted(s.arcs)}, format_orientation(s))
        return 0
    o1 = parse_orientation(_read(args.files[0]))
    o2 = parse_orientation(_read(args.files[1]))
    if o1.graph != o2.graph:
        raise BaseMismatch("orientations are of different graphs")
    w = switching_equivalent(o1, o2)
    _emit(args, {"equivalent": w is not None, "W": sorted(w) if w is not None else None},
          f"switching-equivalent: yes\nW={_fmt_set(w)}" if w is not None else "switching-equivalent: no")
    return 0 if w is not None else 1


def cmd_verify(args) -> int:
    if args.exhaustive:
        family = exhaustive_family(args.n)
    else:
        family = random_family(args.n, args.trials, args.seed)
    report = run_verification(family, support_cap=args.support_cap, enum_cap=args.enum_cap)
    if args.json:
        print(json.dumps(report.to_dict()))
    else:
        print(f"{report.matrices} matrices")
        for r in report.results:
            extra = f", {r.skipped} skipped" if r.skipped else ""
            print(f"{'PASS' if r.passed else 'FAIL'} {r.name} ({r.cases} cases{extra})")
            if not r.passed:
                print(f"  counterexample: {r.counterexample}")
    return 0 if report.passed else 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="rotsign", description=__doc__.splitlines()[0])
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", help="machine-readable output")
    common.add_argument("--max-n", type=int, default=None,
                        help=f"matrix size cap (default {default_max_n()}, env ROTSIGN_MAX_N)")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="period, cyclic classes, admissible k")
    p.add_argument("matrix")
    p.set_defaults(func=cmd_analyze)

    p = sub.add_parser("construct", parents=[common], help="witness signing for a given k")
    p.add_argument("matrix")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("check", parents=[common], help="is B in M(e^(i*pi*k/p), A)?")
    p.add_argument("matrix")
    p.add_argument("signed")
    p.add_argument("--k", type=int, required=True)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("similar", parents=[common], help="+/-1 diagonal similarity of two signed matrices")
    p.add_argument("first")
    p.add_argument("second")
    p.set_defaults(func=cmd_similar)

    p = sub.add_parser("orient", parents=[common], help="orientations of simple graphs")
    p.add_argument("action", choices=["bipartite", "canonical", "switch", "equivalent"])
    p.add_argument("files", nargs="+")
    p.add_argument("--set", default="", help="comma-separated vertex set W for 'switch'")
    p.set_defaults(func=cmd_orient)

    p = sub.add_parser("verify", parents=[common], help="run the brute-force oracle suite")
    p.add_argument("--n", type=int, default=3)
    p.add_argument("--trials", type=int, default=20)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive", action="store_true", help="all irreducible 0/1 matrices of order n")
    p.add_argument("--support-cap", type=int, default=oracle.DEFAULT_SUPPORT_CAP)
    p.add_argument("--enum-cap", type=int, default=DEFAULT_ENUM_CAP)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.command == "orient":
        need = 2 if args.action == "equivalent" else 1
        if len(args.files) != need:
            parser.error(f"orient {args.action} takes {need} file(s)")
    try:
        return args.func(args)
    except RotsignError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.exit_code
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
