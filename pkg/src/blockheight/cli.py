"""Command-line interface.

Query subcommands (``chartab``, ``blocks``, ``mh``, ``concealed``,
``exceptional``, ``hooks``) operate on a single group read from a
``.pgrp``/``.mgrp`` file or on a pair of integers.  The ``verify``
subcommands run the catalog-wide theorem sweep and the lemma suites.

Exit codes: 0 all checks pass, 1 a verification failed (the offending
instance is printed), 2 input or usage error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path
from typing import Optional

from .blocks import block_distribution
from .catalog import parse_mat_group, parse_perm_group
from .chartab import character_table
from .combinat import hook_degree, hook_partition, is_p_concealed
from .matgroup import MatGroup
from .numtheory import is_prime, valuation
from .permgroup import BoundExceeded, PermGroup
from .verify import (
    DEFAULT_MAX_ORDER,
    LARGE_MAX_ORDER,
    SUITES,
    check_theorem_A,
    run_em_sweep,
    run_lemma_suites,
    write_reports,
)

PERM_SPACE_CAP = 100_000  # largest p^dim a .mgrp file may act on here


class UsageError(Exception):
    """Bad input: wrong file format, invalid parameters, out-of-scope size."""


# ---------------------------------------------------------------------------
# input loading


def _load_group(path_str: str) -> PermGroup | MatGroup:
    path = Path(path_str)
    try:
        text = path.read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror or exc}") from exc
    try:
        if path.suffix == ".pgrp":
            return parse_perm_group(text, name=path.stem)
        if path.suffix == ".mgrp":
            return parse_mat_group(text, name=path.stem)
    except ValueError as exc:
        raise UsageError(f"{path}: {exc}") from exc
    raise UsageError(f"{path}: expected a .pgrp or .mgrp file")


def _as_perm_group(G: PermGroup | MatGroup) -> PermGroup:
    if isinstance(G, PermGroup):
        return G
    space = G.prime**G.dim
    if space > PERM_SPACE_CAP:
        raise UsageError(
            f"matrix group acts on {space} vectors, beyond the cap "
            f"{PERM_SPACE_CAP}; supply a permutation representation instead"
        )
    return G.as_perm_group(bound=space)


def _load_perm(path_str: str) -> PermGroup:
    return _as_perm_group(_load_group(path_str))


def _checked_prime(p: int) -> int:
    if not is_prime(p):
        raise UsageError(f"{p} is not prime")
    return p


def _fmt_inf(value: Optional[int]) -> str:
    return "infinity" if value is None else str(value)


# ---------------------------------------------------------------------------
# query subcommands


def cmd_chartab(args: argparse.Namespace) -> int:
    G = _load_perm(args.file)
    table = character_table(G)
    if args.json:
        print(json.dumps(table.to_json_dict(), indent=2))
    else:
        name = G.name or "G"
        print(f"{name}: order {G.order()}, {table.n_classes} classes, "
              f"exponent {table.exponent}")
        print(table.pretty())
    return 0


def cmd_blocks(args: argparse.Namespace) -> int:
    p = _checked_prime(args.p)
    G = _load_perm(args.file)
    table = character_table(G)
    dist = block_distribution(table, p)
    name = G.name or "G"
    print(f"{name}: order {G.order()}, p = {p}, |G|_p = p^{dist.a}, "
          f"{dist.n_blocks} block(s)")
    for i, rows in enumerate(dist.blocks):
        tag = " (principal)" if i == 0 else ""
        degs = ", ".join(str(table.degrees[r]) for r in rows)
        hts = ", ".join(str(h) for h in dist.heights[i])
        print(f"  block {i}{tag}: defect {dist.defects[i]}, "
              f"degrees [{degs}], heights [{hts}], "
              f"mh = {_fmt_inf(dist.min_positive_height(i))}")
    return 0


def cmd_mh(args: argparse.Namespace) -> int:
    p = _checked_prime(args.p)
    G = _load_perm(args.file)
    if G.order() % p:
        raise UsageError(f"{p} does not divide the group order {G.order()}")
    report = check_theorem_A(G, p, name=G.name or "G")
    print(f"{report.group}: order {report.order}, p = {p}, "
          f"|P| = {report.sylow_order}, cd(P) = {report.cd_P}")
    hyp = "holds" if report.hypothesis_holds else "fails"
    print(f"  hypothesis cd(P) = {{1, p^a}}: {hyp}"
          + (f" (a = {report.a})" if report.hypothesis_holds else ""))
    print(f"  mh(B0(G)) = {_fmt_inf(report.mh_B0)}")
    print(f"  mh(P)     = {_fmt_inf(report.mh_P)}")
    if report.hypothesis_holds:
        print(f"  witness degree: {report.witness_degree}")
        verdict = "pass" if report.theorem_holds else "FAIL"
        print(f"  mh(B0(G)) <= mh(P): {verdict}")
    if not report.theorem_holds:
        print(f"FAIL: {report.group} p={p}")
        return 1
    return 0


def cmd_concealed(args: argparse.Namespace) -> int:
    p = _checked_prime(args.p)
    G = _load_perm(args.file)
    try:
        flag, certificate = is_p_concealed(G, p)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    print(f"p-concealed: {'yes' if flag else 'no'}")
    if flag:
        summary = ", ".join(str(tuple(s)) for s in certificate)
        print(f"  partition-orbit summary: {summary}")
    elif isinstance(certificate, str):
        print(f"  reason: {certificate}")
    else:
        print(f"  intersecting subset: {tuple(sorted(certificate))}")
    return 0


def cmd_exceptional(args: argparse.Namespace) -> int:
    M = _load_group(args.file)
    if not isinstance(M, MatGroup):
        raise UsageError(f"{args.file}: expected a .mgrp matrix-group file")
    space = M.prime**M.dim
    if space > PERM_SPACE_CAP:
        raise UsageError(
            f"vector space has {space} points, beyond the cap {PERM_SPACE_CAP}"
        )
    bound = max(space, 729)
    orbits = M.vector_orbits(bound)
    name = M.name or "M"
    print(f"{name}: order {M.order()}, dim {M.dim} over F_{M.prime}")
    print(f"  orbit sizes on V: {list(orbits.sizes)}")
    print(f"  irreducible: {'yes' if M.is_irreducible(bound) else 'no'}")
    flag, certificate = M.is_p_exceptional(bound)
    print(f"  p-exceptional (p = {M.prime}): {'yes' if flag else 'no'}")
    if not flag:
        if isinstance(certificate, str):
            print(f"  reason: {certificate}")
        else:
            print(f"  orbit of {tuple(certificate)} has size divisible by "
                  f"{M.prime}")
    return 0


def cmd_hooks(args: argparse.Namespace) -> int:
    p = _checked_prime(args.p)
    try:
        la = hook_partition(args.n, p)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    degree = hook_degree(la)
    print(f"lambda = {la}")
    print(f"degree = {degree}")
    print(f"{p}-part = {p ** valuation(degree, p)}")
    return 0


# ---------------------------------------------------------------------------
# verify subcommands


def _env_int(name: str) -> Optional[int]:
    raw = os.environ.get(name)
    if raw is None or raw == "":
        return None
    try:
        return int(raw)
    except ValueError as exc:
        raise UsageError(f"environment variable {name}={raw!r} is not an "
                         "integer") from exc


def cmd_verify_em(args: argparse.Namespace) -> int:
    prime = None
    if args.p is not None:
        prime = _checked_prime(args.p)
    max_order = args.max_order
    if max_order is None:
        max_order = _env_int("EM_MAX_ORDER")
    if max_order is None:
        max_order = LARGE_MAX_ORDER if args.large else DEFAULT_MAX_ORDER
    jobs = args.jobs
    if jobs is None:
        jobs = _env_int("EM_JOBS")
    if jobs is None:
        jobs = 1
    if jobs < 1:
        raise UsageError(f"--jobs must be >= 1, got {jobs}")

    catalog = args.catalog
    if catalog != "builtin" and not Path(catalog).is_dir():
        raise UsageError(f"catalog {catalog!r} is neither 'builtin' nor a "
                         "directory")
    try:
        reports = run_em_sweep(
            catalog=catalog, prime=prime, max_order=max_order, jobs=jobs
        )
    except ValueError as exc:
        raise UsageError(str(exc)) from exc

    for r in reports:
        line = (f"{r.group:14s} |G|={r.order:<6d} p={r.p:<2d} "
                f"hyp={'yes' if r.hypothesis_holds else 'no ':3s}")
        if r.hypothesis_holds:
            line += (f" a={r.a} mh_B0={_fmt_inf(r.mh_B0)} "
                     f"mh_P={_fmt_inf(r.mh_P)} witness={r.witness_degree}")
        line += f" theorem={'pass' if r.theorem_holds else 'FAIL'}"
        print(line)

    hyp = [r for r in reports if r.hypothesis_holds]
    bad = [r for r in reports if not r.theorem_holds]
    print(f"{len(reports)} (G, p) pairs, {len(hyp)} hypothesis instances, "
          f"{len(reports) - len(bad)} pass")

    if args.out:
        paths = write_reports(
            reports, args.out, catalog=catalog, prime=prime,
            max_order=max_order, timings=args.timings,
        )
        print("wrote " + ", ".join(paths))

    if bad:
        for r in bad:
            print(f"FAIL: {r.group} p={r.p}")
        return 1
    if not reports:
        print("FAIL: sweep produced no reports")
        return 1
    return 0


def cmd_verify_lemmas(args: argparse.Namespace) -> int:
    try:
        results = run_lemma_suites(names=(args.suite,), large=args.large)
    except ValueError as exc:
        raise UsageError(str(exc)) from exc
    failed = False
    for res in results:
        status = "pass" if res.passed else "FAIL"
        print(f"{res.name:26s} {status}  ({res.checks} checks)")
        for note in res.notes:
            print(f"    {note}")
        for failure in res.failures:
            print(f"    FAIL: {failure}")
        failed = failed or not res.passed
    return 1 if failed else 0


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="blockheight",
        description="Exact character-table, block, and height computations "
        "with a catalog-wide verification harness.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_chartab = sub.add_parser("chartab", help="print a character table")
    p_chartab.add_argument("file", help="group file (.pgrp or .mgrp)")
    p_chartab.add_argument("--json", action="store_true",
                           help="emit JSON instead of the ASCII table")
    p_chartab.set_defaults(func=cmd_chartab)

    p_blocks = sub.add_parser("blocks", help="print the p-block distribution")
    p_blocks.add_argument("file", help="group file (.pgrp or .mgrp)")
    p_blocks.add_argument("-p", type=int, required=True, help="prime")
    p_blocks.set_defaults(func=cmd_blocks)

    p_mh = sub.add_parser(
        "mh", help="compare mh(B0(G)) against mh(P) for one group"
    )
    p_mh.add_argument("file", help="group file (.pgrp or .mgrp)")
    p_mh.add_argument("-p", type=int, required=True, help="prime")
    p_mh.set_defaults(func=cmd_mh)

    p_conc = sub.add_parser(
        "concealed", help="test a permutation group for p-concealment"
    )
    p_conc.add_argument("file", help="group file (.pgrp or .mgrp)")
    p_conc.add_argument("-p", type=int, required=True, help="prime")
    p_conc.set_defaults(func=cmd_concealed)

    p_exc = sub.add_parser(
        "exceptional", help="vector orbits and p-exceptionality of a "
        "matrix group"
    )
    p_exc.add_argument("file", help="matrix-group file (.mgrp)")
    p_exc.set_defaults(func=cmd_exceptional)

    p_hooks = sub.add_parser(
        "hooks", help="hook partition of n with degree of p-part exactly p"
    )
    p_hooks.add_argument("n", type=int)
    p_hooks.add_argument("p", type=int)
    p_hooks.set_defaults(func=cmd_hooks)

    p_verify = sub.add_parser("verify", help="run the verification harness")
    vsub = p_verify.add_subparsers(dest="verify_command", required=True)

    p_em = vsub.add_parser(
        "em", help="catalog-wide minimal-height inequality sweep"
    )
    p_em.add_argument("--catalog", default="builtin",
                      help="'builtin' or a directory of group files")
    prime_group = p_em.add_mutually_exclusive_group()
    prime_group.add_argument("-p", type=int, default=None,
                             help="restrict to one prime")
    prime_group.add_argument("--all-primes", action="store_true",
                             help="every prime dividing each order (default)")
    p_em.add_argument("--max-order", type=int, default=None,
                      help=f"order cap (default {DEFAULT_MAX_ORDER}, "
                      f"or EM_MAX_ORDER)")
    p_em.add_argument("--jobs", type=int, default=None,
                      help="worker processes (default 1, or EM_JOBS)")
    p_em.add_argument("--out", default=None,
                      help="write JSON here plus CSV and PNG alongside")
    p_em.add_argument("--large", action="store_true",
                      help=f"lift the default order cap to {LARGE_MAX_ORDER}")
    p_em.add_argument("--timings", action="store_true",
                      help="include per-report elapsed_ms in the output files")
    p_em.set_defaults(func=cmd_verify_em)

    p_lem = vsub.add_parser("lemmas", help="run the lemma suites")
    p_lem.add_argument("--suite", default="all",
                       choices=("all",) + tuple(SUITES),
                       help="one suite name, or 'all'")
    p_lem.add_argument("--large", action="store_true",
                       help="include the large matrix-group fixture with a "
                       "full order recomputation")
    p_lem.set_defaults(func=cmd_verify_lemmas)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BoundExceeded as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except KeyboardInterrupt:
        return 130


if __name__ == "__main__":
    sys.exit(main())
