"""Command line interface: every verification as a subcommand.

Exit codes: 0 when the report status is pass (or partial), 1 when any row
fails, 2 for usage errors, 3 for internal consistency failures.  Reports
go to stdout as JSON (default) or CSV; byte-identical output for identical
inputs and seed, except for the elapsed_seconds field.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from collections import Counter

from . import constructions, engine, landau, lie_bounds, symmetric, torus_search
from .errors import ConsistencyError
from .report import Report, timer

VERSION = "0.1.0"


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ppchars",
        description="Exact verification of p'-degree character counts",
    )
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("json", "csv"), default="json")
    common.add_argument("--seed", type=int, default=0,
                        help="PRNG seed for the degree engine")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_parser(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p = add_parser("partitions", help="pi(n) and split counts k(m, s)")
    p.add_argument("--pi", type=int, metavar="N")
    p.add_argument("--k", type=int, nargs=2, metavar=("M", "S"))

    p = add_parser("verify-symmetric",
                       help="digit-product formula vs hook-length oracle")
    p.add_argument("--max-n", type=int, default=25)
    p.add_argument("--primes", type=str, default=None,
                   help="comma separated primes, default all p <= n")

    p = add_parser("degrees", help="irreducible degrees of a small group")
    p.add_argument("--group", required=True,
                   help="builtin (C12, D10, S5, A6, F17_4) or JSON file")
    p.add_argument("--p", type=int, default=None)

    p = add_parser("frobenius", help="the extremal group C_p x| C_m")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--m", type=int, default=None,
                   help="complement order, default sqrt(p-1)")

    p = add_parser("solvable", help="the solvable witness V x| A")
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--r", type=str, default="auto",
                   help="construction prime, or 'auto' for the smallest")
    p.add_argument("--cross-check", action="store_true",
                   help="also run the degree engine on V x| A")

    p = add_parser("landau", help="primes p with p - 1 a perfect square")
    p.add_argument("--limit", type=int, required=True)

    p = add_parser("bounds", help="inequality tables and grid checks")
    mode = p.add_mutually_exclusive_group(required=True)
    mode.add_argument("--table1", action="store_true")
    mode.add_argument("--table2", action="store_true")
    mode.add_argument("--defining", action="store_true")
    mode.add_argument("--classical", action="store_true")
    mode.add_argument("--e8-d1", action="store_true")
    p.add_argument("--family", choices=lie_bounds.FAMILIES)
    p.add_argument("--qmax", type=int, default=None)
    p.add_argument("--rank-max", type=int, default=lie_bounds.DEFAULT_RANK_MAX)
    p.add_argument("--fmax", type=int, default=lie_bounds.DEFAULT_F_MAX)
    p.add_argument("--failures-only", action="store_true",
                   help="emit only failing rows")

    p = add_parser("torus-search",
                       help="self-centralizing torus classification sweep")
    p.add_argument("--qmax", type=int, default=256)
    p.add_argument("--nmax", type=int, default=12)
    p.add_argument("--reconcile", action="store_true",
                   help="compare the hit set with the classification lists")

    p = add_parser("verify-all", help="aggregate verification suite")
    profile = p.add_mutually_exclusive_group()
    profile.add_argument("--quick", action="store_true")
    profile.add_argument("--full", action="store_true")

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        report = _dispatch(args)
    except ConsistencyError as exc:
        print(f"internal consistency failure: {exc}", file=sys.stderr)
        return 3
    except (ValueError, RuntimeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    report.seed = args.seed
    report.version = VERSION
    if getattr(args, "failures_only", False):
        report.rows = [r for r in report.rows if r.get("ok") is False]
    print(report.to_json() if args.format == "json" else report.to_csv())
    return 0 if report.status in ("pass", "partial") else 1


def _dispatch(args) -> Report:
    handler = {
        "partitions": _cmd_partitions,
        "verify-symmetric": _cmd_verify_symmetric,
        "degrees": _cmd_degrees,
        "frobenius": _cmd_frobenius,
        "solvable": _cmd_solvable,
        "landau": _cmd_landau,
        "bounds": _cmd_bounds,
        "torus-search": _cmd_torus,
        "verify-all": _cmd_verify_all,
    }[args.command]
    return handler(args)


def _cmd_partitions(args) -> Report:
    from . import partitions

    rows = []
    with timer() as t:
        if args.pi is not None:
            rows.append({"n": args.pi, "pi": partitions.partition_count(args.pi)})
        if args.k is not None:
            m, s = args.k
            rows.append({"m": m, "s": s, "k": partitions.split_count(m, s)})
        if not rows:
            raise ValueError("need --pi N or --k M S")
    return Report("partitions", {"pi": args.pi, "k": args.k}, rows,
                  elapsed_seconds=t.elapsed)


def _cmd_verify_symmetric(args) -> Report:
    primes = None
    if args.primes:
        primes = [int(x) for x in args.primes.split(",")]
    return symmetric.verify_symmetric_bounds(args.max_n, primes)


def _group_from_descriptor(descriptor: str) -> engine.FiniteGroup:
    kind = descriptor[:1].upper()
    if kind in "CDSA" and descriptor[1:].isdigit():
        n = int(descriptor[1:])
        return {
            "C": engine.cyclic_group,
            "D": engine.dihedral_group,
            "S": engine.symmetric_group,
            "A": engine.alternating_group,
        }[kind](n)
    if kind == "F" and "_" in descriptor:
        p_str, m_str = descriptor[1:].split("_", 1)
        group, _ = constructions.build_frobenius(int(p_str), int(m_str))
        return group
    with open(descriptor, encoding="utf-8") as fh:
        data = json.load(fh)
    if "permutations" in data:
        return engine.group_from_permutations(data["permutations"])
    if "mult" in data:
        return engine.group_from_table(data["mult"])
    raise ValueError("group file needs a 'permutations' or 'mult' key")


def _cmd_degrees(args) -> Report:
    with timer() as t:
        group = _group_from_descriptor(args.group)
        degrees = engine.irreducible_degrees(group, seed=args.seed)
        classes = engine.conjugacy_classes(group)
        row = {
            "group": args.group,
            "order": group.order,
            "classes": len(classes.reps),
            "degrees": list(degrees.degrees),
            "linear": degrees.linear_count(),
            "sum_of_squares": degrees.sum_of_squares(),
            "ok": True,
        }
        if args.p is not None:
            row["p"] = args.p
            row["pprime_count"] = degrees.pprime_count(args.p)
    return Report("degrees", {"group": args.group, "p": args.p}, [row],
                  elapsed_seconds=t.elapsed)


def _cmd_frobenius(args) -> Report:
    with timer() as t:
        p = args.p
        m = args.m if args.m is not None else math.isqrt(p - 1)
        group, params = constructions.build_frobenius(p, m)
        closed = constructions.frobenius_degree_multiset(params)
        engine_degrees = engine.irreducible_degrees(group, seed=args.seed)
        ok = closed.degrees == engine_degrees.degrees
        row = {
            "p": p,
            "m": m,
            "order": group.order,
            "classes": len(engine.conjugacy_classes(group).reps),
            "degrees": list(closed.degrees),
            "pprime_count": closed.pprime_count(p),
            "engine_agrees": ok,
            "ok": ok,
        }
    return Report("frobenius", {"p": p, "m": m}, [row], elapsed_seconds=t.elapsed)


def _cmd_solvable(args) -> Report:
    with timer() as t:
        p = args.p
        r = (constructions.find_construction_prime(p)
             if args.r == "auto" else int(args.r))
        built = constructions.build_gamma_l(p, r)
        clifford = constructions.clifford_pprime_count(
            built.action, p, engine_seed=args.seed
        )
        m = built.m
        expected = 2 * m
        row = {
            "p": p,
            "r": r,
            "m": m,
            "order": (r**m) * p * m,
            "degrees": dict(Counter(clifford.degrees.degrees)),
            "pprime_count": clifford.pprime_count,
            "expected": expected,
            "sum_of_squares": clifford.degrees.sum_of_squares(),
            "invariants_verified": True,
            "ok": clifford.pprime_count == expected,
        }
        rows = [row]
        if args.cross_check:
            check = constructions.engine_cross_check(built, p, seed=args.seed)
            rows += check.rows
    return Report("solvable", {"p": p, "r": r, "cross_check": args.cross_check},
                  rows, elapsed_seconds=t.elapsed)


def _cmd_landau(args) -> Report:
    with timer() as t:
        rows = [
            {"p": lp.p, "m": lp.m, "degenerate": lp.degenerate}
            for lp in landau.landau_primes(args.limit)
        ]
    return Report("landau", {"limit": args.limit}, rows,
                  counters={"count": len(rows)}, elapsed_seconds=t.elapsed)


def _cmd_bounds(args) -> Report:
    if args.table1:
        return lie_bounds.table1_report()
    if args.table2:
        return lie_bounds.verify_table2()
    if args.defining:
        return lie_bounds.defining_char_check()
    if args.classical:
        if not args.family:
            raise ValueError("--classical needs --family")
        return lie_bounds.classical_inequality_check(
            args.family,
            q_max=args.qmax or lie_bounds.DEFAULT_Q_MAX,
            rank_max=args.rank_max,
            f_max=args.fmax,
        )
    return lie_bounds.e8_d1_check(q_max=args.qmax or 4096)


def _cmd_torus(args) -> Report:
    if args.reconcile:
        return torus_search.reconcile_with_theorem(args.qmax, args.nmax)
    return torus_search.search_report(args.qmax, args.nmax)


def _cmd_verify_all(args) -> Report:
    full = args.full
    rows = []
    with timer() as t:
        def record(name, report):
            rows.append(
                {
                    "check": name,
                    "status": report.status,
                    "rows": len(report.rows),
                    "failures": len(report.failures),
                    "ok": report.status != "fail",
                }
            )

        record("verify-symmetric",
               symmetric.verify_symmetric_bounds(25 if full else 15))
        fro_primes = (5, 17, 37, 101, 197, 257) if full else (5, 17)
        for p in fro_primes:
            m = math.isqrt(p - 1)
            group, params = constructions.build_frobenius(p, m)
            closed = constructions.frobenius_degree_multiset(params)
            ok = closed.pprime_count(p) == 2 * m
            if group.order <= 5000 and (not full or p in (5, 17, 37, 257)):
                ok = ok and (engine.irreducible_degrees(group, seed=args.seed).degrees
                             == closed.degrees)
            rows.append({"check": f"frobenius p={p}", "status": "pass" if ok else "fail",
                         "rows": 1, "failures": 0 if ok else 1, "ok": ok})
        built = constructions.build_gamma_l(5, 19)
        clifford = constructions.clifford_pprime_count(built.action, 5,
                                                       engine_seed=args.seed)
        ok = clifford.pprime_count == 4
        if full:
            check = constructions.engine_cross_check(built, 5, seed=args.seed)
            ok = ok and check.status == "pass"
        rows.append({"check": "solvable p=5", "status": "pass" if ok else "fail",
                     "rows": 1, "failures": 0 if ok else 1, "ok": ok})
        record("table2", lie_bounds.verify_table2())
        if full:
            record("table1", lie_bounds.table1_report())
            record("defining", lie_bounds.defining_char_check())
            for family in lie_bounds.FAMILIES:
                record(f"classical {family}",
                       lie_bounds.classical_inequality_check(family))
            record("e8-d1", lie_bounds.e8_d1_check())
            record("torus-reconcile", torus_search.reconcile_with_theorem())
            record("alternating", torus_search.alternating_check())
        else:
            record("torus-search", torus_search.search_report(64, 12))
    return Report("verify-all", {"profile": "full" if full else "quick"},
                  rows, elapsed_seconds=t.elapsed)


if __name__ == "__main__":
    sys.exit(main())
