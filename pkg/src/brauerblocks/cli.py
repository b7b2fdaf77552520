"""Command line entry point: ``brauerblocks <command> ...``.

Exit codes: 0 success, 2 bad arguments or violated preconditions, 3 a
mathematical check failed (the counterexample is printed).
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import time
from math import factorial
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterable

from . import __version__
from .blocks import (StarContext, brauer_blocks, brute_force_orbit, orbit_invariant,
                     symplectic_blocks)
from .brauer import all_diagrams, compose, dimension, generators, identity_diagram
from .cells import (build_cell, filtration_dimension_law, half_diagram_count, relation_words)
from .characters import (closed_form_coefficient, mass, multiply_by_E, psi,
                         tensor_power_decomposition, weyl_dimension)
from .jantzen import (HypothesisError, check_generic_hypotheses, check_generic_structure,
                      check_vanishing_lemmas, jsf_full, jsf_generic)
from .linalg import rank
from .oracle import compare_with_criterion
from .partitions import (double_factorial, enumerate_labels, format_partition,
                         matrix_block_counts, parse_partition, partitions_of, specht_dimension)
from .symmetric import permutation_rep, sign_twist, specht_rep

THREADS_ENV = "BRAUERBLOCKS_THREADS"
EXIT_OK, EXIT_USAGE, EXIT_FAILED = 0, 2, 3

JANTZEN_SWEEP = [(23, 2, 2, 4), (29, 2, -2, 3), (31, 1, 3, 5), (37, 2, 0, 5),
                 (41, 1, 1, 5), (41, 1, -1, 5), (23, 3, 1, 4)]


class CheckFailed(Exception):
    pass


def parallel_map(fn: Callable, items: Iterable, threads: int) -> list:
    """Order-preserving map; uses worker processes when threads > 1."""
    items = list(items)
    if threads <= 1 or len(items) <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def emit(obj, fmt: str, rows: list[list] | None = None, header: list[str] | None = None) -> None:
    if fmt == "tsv" and rows is not None:
        if header:
            print("\t".join(header))
        for row in rows:
            print("\t".join(str(x) for x in row))
    else:
        print(json.dumps(obj, sort_keys=True, indent=2))


# --- commands ---------------------------------------------------------------


def cmd_blocks(args) -> int:
    if args.r < 0:
        raise ValueError("--r must be nonnegative")
    bp = (brauer_blocks if args.side == "brauer" else symplectic_blocks)(args.r, args.delta)
    rows = [[format_partition(c.minimal), " ".join(format_partition(m) for m in c.members)]
            for c in bp.classes]
    emit(bp.to_json(), args.format, rows, ["minimal", "members"])
    return EXIT_OK


def cmd_jsf(args) -> int:
    lam = parse_partition(args.lam)
    out = {"lambda": list(lam)}
    if args.generic or args.compare:
        if None in (args.r, args.u, args.delta):
            raise ValueError("--generic/--compare need --r, --u and --delta")
        setting = check_generic_hypotheses(lam, args.r, args.p, args.u, args.delta)
        if args.m is not None and args.m != setting.m:
            raise ValueError(f"--m {args.m} disagrees with n/2 = (up - delta)/2 = {setting.m}")
        generic = jsf_generic(lam, args.r, args.p, args.u, args.delta)
        out.update(mode="generic", terms=generic.to_json(), n=setting.n)
        if args.compare:
            full = jsf_full(lam, setting.m, args.p)
            out.update(mode="compare", full_terms=full.to_json(), agreement=full.terms == generic.terms)
    else:
        if args.m is None:
            raise ValueError("--m is required without --generic")
        full = jsf_full(lam, args.m, args.p)
        out.update(mode="full", terms=full.to_json())
    rows = [[format_partition(tuple(t["mu"])), t["coeff"]] for t in out["terms"]]
    emit(out, args.format, rows, ["mu", "coeff"])
    if args.compare and not out["agreement"]:
        return EXIT_FAILED
    return EXIT_OK


def cmd_tensor(args) -> int:
    chi = tensor_power_decomposition(args.r, args.m)
    rows = []
    for lam, c in chi.items():
        rows.append([format_partition(lam), c, closed_form_coefficient(lam, args.r), weyl_dimension(lam, args.m)])
    total, expected = mass(chi), (2 * args.m) ** args.r
    obj = {"m": args.m, "r": args.r, "mass": total, "expected_mass": expected,
           "rows": [{"lambda": list(lam), "a": c, "closed_form": cf, "weyl_dimension": wd}
                    for (lam, c), (_, _, cf, wd) in zip(chi.items(), rows)]}
    if args.format == "tsv":
        emit(obj, "tsv", rows + [["total", total, expected, ""]],
             ["lambda", "a_r", "closed_form", "weyl_dimension"])
    else:
        emit(obj, "json")
    ok = total == expected and all(row[1] == row[2] for row in rows)
    return EXIT_OK if ok else EXIT_FAILED


def cmd_dims(args) -> int:
    if not 0 <= args.r <= args.r_max:
        raise ValueError(f"--r must lie in 0..{args.r_max}")
    rows = []
    for lam in enumerate_labels(args.r):
        t = sum(lam)
        s = (args.r - t) // 2
        cell = build_cell(lam, args.r, args.delta)
        rows.append([format_partition(lam), t, s, half_diagram_count(args.r, s), specht_dimension(lam),
                     cell.dim, rank(cell.gram)])
    header = ["lambda", "t", "s", "rank_Z_s", "dim_S", "dim_cell", "gram_rank"]
    obj = {"r": args.r, "delta": args.delta, "diagrams": len(all_diagrams(args.r)),
           "cells": [dict(zip(header, row)) for row in rows]}
    if args.format == "tsv":
        print(f"# diagrams\t{obj['diagrams']}")
    emit(obj, args.format, rows, header)
    return EXIT_OK


def cmd_oracle(args) -> int:
    if not 0 <= args.r <= min(args.r_max, 6):
        raise ValueError(f"--r must lie in 0..{min(args.r_max, 6)} for the oracle")
    ok, ob, _ = compare_with_criterion(args.r, args.delta)
    obj = ob.to_json()
    obj["agrees_with_criterion"] = ok
    rows = [[" ".join(format_partition(x) for x in c)] for c in ob.classes]
    emit(obj, args.format, rows, ["members"])
    return EXIT_OK if ok else EXIT_FAILED


# --- verification suites ----------------------------------------------------


def _check(cond: bool, message: str) -> None:
    if not cond:
        raise CheckFailed(message)


def suite_algebra(r_max: int, threads: int) -> list[str]:
    out = []
    for r in range(min(r_max, 7) + 1):
        n = len(all_diagrams(r))
        _check(n == double_factorial(2 * r - 1) == dimension(r), f"dim B_{r} = {n}")
        _check(n == sum(N * N * factorial(t) for N, t in matrix_block_counts(r)), f"block count r={r}")
    out.append(f"dimension identities r<={min(r_max, 7)}")
    for r in range(2, min(r_max, 5) + 1):
        g = generators(r)
        for lhs, rhs, k in relation_words(r):
            a, b = _word(r, g, lhs), _word(r, g, rhs)
            _check(a[0] == b[0] and a[1] == b[1] + k, f"relation {lhs} = {rhs} at r={r}")
    out.append("generator relations")
    for r in range(min(r_max, 6) + 1):
        for lam in enumerate_labels(r):
            cell = build_cell(lam, r, 0)
            s = (r - sum(lam)) // 2
            _check(cell.dim == half_diagram_count(r, s) * specht_dimension(lam), f"dim cell {lam} r={r}")
    out.append(f"cell dimensions r<={min(r_max, 6)}")
    for r in range(min(r_max, 6) + 1):
        for rep in filtration_reps(r):
            lhs, rhs, eq = filtration_dimension_law(rep, r)
            _check(eq, f"filtration law {rep.label} r={r}: {lhs} != {rhs}")
    out.append("filtration law t<=4")
    return out


def _word(r, g, word):
    d, loops = identity_diagram(r), 0
    for name in word:
        d, c = compose(d, g[name])
        loops += c
    return d, loops


def filtration_reps(r: int) -> list:
    reps = []
    for t in range(r % 2, min(r, 4) + 1, 2):
        for lam in partitions_of(t):
            for base in (specht_rep(lam), permutation_rep(lam)):
                reps += [base, sign_twist(base)]
    return reps


def suite_characters(r_max: int, threads: int) -> list[str]:
    for r in range(min(r_max, 6) + 1):
        m = r + 1
        chi = tensor_power_decomposition(r, m)
        for t in range(r % 2, r + 1, 2):
            for lam in partitions_of(t):
                _check(chi.coefficient(lam) == closed_form_coefficient(lam, r), f"a_{r}{lam}")
        _check(len(chi.terms) == len(enumerate_labels(r)), f"support of chi^{r}")
        _check(mass(chi) == (2 * m) ** r, f"mass r={r}")
    for m in range(2, 8):
        for r in range(1, m):
            _check(multiply_by_E(psi(r, m)) == psi(r + 1, m) + psi(r - 1, m).scale(r), f"psi r={r} m={m}")
    return [f"tensor power law r<={min(r_max, 6)}", "psi recursion m<=7"]


def _jantzen_case(case):
    p, u, delta, r = case
    bad = []
    for lam in enumerate_labels(r):
        try:
            generic = jsf_generic(lam, r, p, u, delta)
        except HypothesisError:
            continue
        full = jsf_full(lam, (u * p - delta) // 2, p)
        if full.terms != generic.terms:
            bad.append(f"{case} {lam}: full {full.terms} != generic {generic.terms}")
        bad += check_vanishing_lemmas(lam, r, p, u, delta, full).failures
        bad += check_generic_structure(lam, r, p, u, delta, generic).failures
    return bad


def suite_jantzen(r_max: int, threads: int) -> list[str]:
    cases = [(p, u, d, r) for p, u, d, rr in JANTZEN_SWEEP for r in range(min(rr, r_max) + 1)]
    for bad in parallel_map(_jantzen_case, cases, threads):
        _check(not bad, "; ".join(bad[:3]))
    return [f"jantzen agreement and lemmas over {len(cases)} (p,u,delta,r) cases"]


def suite_blocks(r_max: int, threads: int) -> list[str]:
    for r in range(min(r_max, 7) + 1):
        for delta in range(-8, 9):
            brauer_blocks(r, delta)
            symplectic_blocks(r, delta)
    for r in range(min(r_max, 5) + 1):
        for delta in range(-6, 7):
            ctx = StarContext(r, delta)
            labels = enumerate_labels(r)
            orbits = {lam: brute_force_orbit(lam, ctx) for lam in labels}
            for a in labels:
                for b in labels:
                    brute = ctx.shifted(b) in orbits[a]
                    _check(brute == (orbit_invariant(a, ctx) == orbit_invariant(b, ctx)),
                           f"invariant vs brute force r={r} delta={delta} {a} {b}")
    return [f"unique minimal elements r<={min(r_max, 7)}, delta in -8..8",
            f"invariant soundness r<={min(r_max, 5)}, delta in -6..6"]


def _oracle_case(case):
    r, delta = case
    ok, ob, bb = compare_with_criterion(r, delta)
    return ok, f"r={r} delta={delta}: oracle {ob.classes} vs criterion {[c.members for c in bb.classes]}"


def suite_oracle(r_max: int, threads: int) -> list[str]:
    cases = [(r, d) for r in range(min(r_max, 5) + 1) for d in range(-6, 7)]
    for ok, detail in parallel_map(_oracle_case, cases, threads):
        _check(ok, detail)
    return [f"oracle blocks = criterion blocks for r<={min(r_max, 5)}, delta in -6..6 ({len(cases)} cases)"]


SUITES = {"algebra": suite_algebra, "characters": suite_characters, "jantzen": suite_jantzen,
          "blocks": suite_blocks, "oracle": suite_oracle}


def cmd_verify(args) -> int:
    names = list(SUITES) if args.suite == "all" else [args.suite]
    start = time.monotonic()
    for name in names:
        t0 = time.monotonic()
        try:
            lines = SUITES[name](args.r_max, args.threads)
        except CheckFailed as exc:
            print(f"FAIL {name}: {exc}")
            return EXIT_FAILED
        for line in lines:
            print(f"PASS {name}: {line}")
        print(f"# {name} finished in {time.monotonic() - t0:.1f}s", file=sys.stderr)
        if time.monotonic() - start > args.budget_seconds:
            print(f"FAIL budget: {time.monotonic() - start:.0f}s exceeds {args.budget_seconds}s")
            return EXIT_FAILED
    return EXIT_OK


# --- argument parsing ---------------------------------------------------------


def default_threads() -> int:
    raw = os.environ.get(THREADS_ENV, "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="brauerblocks", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=["json", "tsv"], default="json")
    common.add_argument("--threads", type=int, default=default_threads(),
                        help=f"worker processes (default from ${THREADS_ENV}, else 1)")
    common.add_argument("--r-max", type=int, default=7, help="size bound for r")
    common.add_argument("--budget-seconds", type=float, default=600.0)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("blocks", parents=[common], help="block classification by the star action")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.add_argument("--side", choices=["brauer", "symplectic"], default="brauer")
    p.set_defaults(func=cmd_blocks)

    p = sub.add_parser("jsf", parents=[common], help="Jantzen sum formula")
    p.add_argument("--m", type=int)
    p.add_argument("--p", type=int, required=True)
    p.add_argument("--lambda", dest="lam", required=True, help="partition, e.g. 2,2 or () for empty")
    p.add_argument("--generic", action="store_true")
    p.add_argument("--compare", action="store_true")
    p.add_argument("--r", type=int)
    p.add_argument("--u", type=int)
    p.add_argument("--delta", type=int)
    p.set_defaults(func=cmd_jsf)

    p = sub.add_parser("tensor", parents=[common], help="decomposition of the r-th tensor power of E")
    p.add_argument("--m", type=int, required=True)
    p.add_argument("--r", type=int, required=True)
    p.set_defaults(func=cmd_tensor)

    p = sub.add_parser("dims", parents=[common], help="cell module dimensions and Gram ranks")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--delta", type=int, default=0)
    p.set_defaults(func=cmd_dims)

    p = sub.add_parser("oracle-blocks", parents=[common], help="blocks from brute-force decomposition numbers")
    p.add_argument("--r", type=int, required=True)
    p.add_argument("--delta", type=int, required=True)
    p.set_defaults(func=cmd_oracle)

    p = sub.add_parser("verify", parents=[common], help="run property suites")
    p.add_argument("--suite", choices=list(SUITES) + ["all"], default="all")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if args.threads < 1:
        parser.error("--threads must be >= 1")
    try:
        return args.func(args)
    except (ValueError, HypothesisError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except AssertionError as exc:
        print(f"check failed: {exc}", file=sys.stderr)
        return EXIT_FAILED


if __name__ == "__main__":
    sys.exit(main())
