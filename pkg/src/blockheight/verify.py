"""Theorem-level verification: the main-inequality sweep and lemma suites.

The sweep walks catalog pairs (G, p), decides the two-degree Sylow
hypothesis cd(P) = {1, p^a}, finds a principal-block witness chi with
1 <= v_p(chi(1)) <= a, and compares mh(B_0(G)) against mh(P).  The lemma
suites re-check, at desk scale, the finitely testable statements feeding
that inequality: TI Sylow generation, extension of invariant linear
characters, the solvable principal block, concealed/exceptional orbit
data, block covering, the constrained single-block criterion, regular
orbits on ordered set partitions, and hook-length degree facts.

Reports serialize to versioned JSON with a CSV flattening and a PNG
chart alongside.  Serial and parallel sweeps emit identical reports.
"""

from __future__ import annotations

import csv
import io
import json
import multiprocessing
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Optional, Sequence

from .permgroup import PermGroup, parse_cycles, pconj, pinv, pmul
from .numtheory import factorize, valuation
from .chartab import CharacterTable, character_table
from .blocks import (
    block_distribution,
    covering_relation,
    is_p_constrained_single_block,
    mh_of_p_group,
)
from .combinat import (
    hook_degree,
    hook_partition,
    induced_concealed_check,
    is_p_concealed,
    is_primitive,
    maximal_block_system,
    p_concealed_by_counting,
    regular_orbit_on_partitions,
    syt_count,
)
from .matgroup import MatGroup
from .catalog import (
    CatalogEntry,
    agammal1,
    agl,
    alt,
    catalog_from_directory,
    cyclic,
    default_catalog,
    dihedral,
    direct_product,
    frobenius_affine,
    gl_mat,
    load_fixture,
    psl2_proj,
    quaternion,
    sl2_proj,
    sym,
    wreath,
)

DEFAULT_MAX_ORDER = 10_000
LARGE_MAX_ORDER = 50_400
SCHEMA_VERSION = 1


# ---------------------------------------------------------------------------
# the main-inequality report


@dataclass
class EmReport:
    """Verification record for one (G, p) pair.

    mh values use None for infinity (no positive height / abelian Sylow
    subgroup).  witness_degree is the smallest principal-block degree with
    1 <= v_p(degree) <= a, recorded only when the hypothesis holds.
    """

    group: str
    order: int
    p: int
    sylow_order: int
    cd_P: tuple[int, ...]
    hypothesis_holds: bool
    a: Optional[int]
    mh_B0: Optional[int]
    mh_P: Optional[int]
    witness_degree: Optional[int]
    theorem_holds: bool
    em_equality_observed: bool
    solvable: bool
    b0_equals_quotient_irr: bool
    bhz_holds: Optional[bool]
    elapsed_ms: int

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "group": self.group,
            "order": self.order,
            "p": self.p,
            "sylow_order": self.sylow_order,
            "cd_P": list(self.cd_P),
            "hypothesis_holds": self.hypothesis_holds,
            "a": self.a,
            "mh_B0": self.mh_B0,
            "mh_P": self.mh_P,
            "witness_degree": self.witness_degree,
            "theorem_holds": self.theorem_holds,
            "em_equality_observed": self.em_equality_observed,
            "solvable": self.solvable,
            "b0_equals_quotient_irr": self.b0_equals_quotient_irr,
            "bhz_holds": self.bhz_holds,
        }
        if timings:
            out["elapsed_ms"] = self.elapsed_ms
        return out


def _le_inf(x: Optional[int], y: Optional[int]) -> bool:
    """x <= y with None acting as infinity."""
    if y is None:
        return True
    return x is not None and x <= y


def check_hypothesis(
    G: PermGroup, p: int, sylow_table: Optional[CharacterTable] = None
) -> tuple[bool, Optional[int]]:
    """Whether a Sylow p-subgroup of G has character degrees {1, p^a}.

    Returns (True, a) with a >= 1, or (False, None) when the Sylow
    subgroup is abelian or has three or more degrees.
    """
    if sylow_table is None:
        sylow_table = character_table(G.sylow(p))
    cds = sylow_table.char_degrees()
    if len(cds) != 2 or cds[0] != 1:
        return False, None
    a = valuation(cds[1], p)
    assert p**a == cds[1], "p-group character degree is not a p-power"
    return True, a


def check_theorem_A(
    G: PermGroup,
    p: int,
    name: str = "",
    table: Optional[CharacterTable] = None,
    sylow_table: Optional[CharacterTable] = None,
) -> EmReport:
    """Full report for one (G, p): hypothesis, witness, and mh comparison."""
    start = time.perf_counter()
    P = G.sylow(p)
    if sylow_table is None:
        sylow_table = character_table(P)
    hypothesis, a = check_hypothesis(G, p, sylow_table=sylow_table)
    if table is None:
        table = character_table(G)
    dist = block_distribution(table, p)
    mh_b0 = dist.min_positive_height(0)
    mh_p = mh_of_p_group(sylow_table, p)

    witness = None
    if hypothesis:
        degrees = [
            table.degrees[r]
            for r in dist.principal_rows()
            if 1 <= valuation(table.degrees[r], p) <= a
        ]
        witness = min(degrees) if degrees else None
    theorem = (not hypothesis) or (witness is not None and _le_inf(mh_b0, mh_p))

    opp = G.p_prime_core(p)
    quotient_rows = set(table.characters_with_kernel_containing(opp))
    b0_rows = set(dist.principal_rows())
    bhz = (dist.max_height(0) == 0) if P.is_abelian() else None
    elapsed = int(round((time.perf_counter() - start) * 1000))
    return EmReport(
        group=name or G.name or f"G{G.order()}",
        order=G.order(),
        p=p,
        sylow_order=P.order(),
        cd_P=sylow_table.char_degrees(),
        hypothesis_holds=hypothesis,
        a=a,
        mh_B0=mh_b0,
        mh_P=mh_p,
        witness_degree=witness,
        theorem_holds=theorem,
        em_equality_observed=mh_b0 == mh_p,
        solvable=G.is_solvable(),
        b0_equals_quotient_irr=b0_rows == quotient_rows,
        bhz_holds=bhz,
        elapsed_ms=elapsed,
    )


# ---------------------------------------------------------------------------
# the catalog sweep


def _resolve_catalog(spec: str) -> tuple[CatalogEntry, ...]:
    if spec == "builtin":
        return default_catalog()
    return catalog_from_directory(spec)


def _sweep_entries(spec: str, max_order: int) -> list[CatalogEntry]:
    entries = [
        e
        for e in _resolve_catalog(spec)
        if e.expected_order is not None and e.expected_order <= max_order
    ]
    entries.sort(key=lambda e: (e.expected_order, e.name))
    return entries


def _as_perm(G) -> PermGroup:
    return G.as_perm_group() if isinstance(G, MatGroup) else G


def _em_worker(task: tuple[str, str, Optional[int], int]) -> list[EmReport]:
    """Reports for every requested prime of one catalog entry."""
    spec, entry_name, prime, table_bound = task
    entry = next(e for e in _resolve_catalog(spec) if e.name == entry_name)
    G = _as_perm(entry.build())
    order = G.order()
    primes = sorted(factorize(order))
    if prime is not None:
        primes = [p for p in primes if p == prime]
    if not primes:
        return []
    table = character_table(G, max_order=table_bound)
    return [
        check_theorem_A(G, p, name=entry.name, table=table) for p in primes
    ]


def run_em_sweep(
    catalog: str = "builtin",
    prime: Optional[int] = None,
    max_order: int = DEFAULT_MAX_ORDER,
    jobs: int = 1,
) -> list[EmReport]:
    """Theorem reports for all catalog pairs (G, p) with |G| <= max_order.

    With jobs > 1 the per-group tasks run in a worker pool; the collected
    report list is identical to a serial run (single ordered sink).
    """
    entries = _sweep_entries(catalog, max_order)
    table_bound = max(max_order, 20_000)
    tasks = [(catalog, e.name, prime, table_bound) for e in entries]
    if jobs > 1:
        with multiprocessing.get_context("fork").Pool(jobs) as pool:
            chunks = pool.map(_em_worker, tasks)
    else:
        chunks = [_em_worker(t) for t in tasks]
    reports = [r for chunk in chunks for r in chunk]
    reports.sort(key=lambda r: (r.order, r.group, r.p))
    return reports


# ---------------------------------------------------------------------------
# report serialization


def reports_to_json(
    reports: Sequence[EmReport],
    catalog: str = "builtin",
    prime: Optional[int] = None,
    max_order: int = DEFAULT_MAX_ORDER,
    timings: bool = False,
) -> str:
    hyp = [r for r in reports if r.hypothesis_holds]
    doc = {
        "schema_version": SCHEMA_VERSION,
        "catalog": catalog,
        "prime": prime if prime is not None else "all",
        "max_order": max_order,
        "n_reports": len(reports),
        "n_hypothesis_instances": len(hyp),
        "all_theorem_hold": all(r.theorem_holds for r in reports),
        "reports": [r.to_dict(timings=timings) for r in reports],
    }
    return json.dumps(doc, indent=2) + "\n"


CSV_COLUMNS = (
    "group",
    "order",
    "p",
    "sylow_order",
    "cd_P",
    "hypothesis_holds",
    "a",
    "mh_B0",
    "mh_P",
    "witness_degree",
    "theorem_holds",
    "em_equality_observed",
    "solvable",
    "b0_equals_quotient_irr",
    "bhz_holds",
)


def _csv_cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (tuple, list)):
        return " ".join(str(v) for v in value)
    return str(value)


def reports_to_csv(reports: Sequence[EmReport], timings: bool = False) -> str:
    columns = CSV_COLUMNS + (("elapsed_ms",) if timings else ())
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(columns)
    for r in reports:
        d = r.to_dict(timings=True)
        writer.writerow([_csv_cell(d[c]) for c in columns])
    return buf.getvalue()


def render_figure(reports: Sequence[EmReport], path: str) -> None:
    """PNG chart: mh comparison for hypothesis instances plus per-prime
    instance counts."""
    import matplotlib

    matplotlib.use("Agg")
    import matplotlib.pyplot as plt

    hyp = [r for r in reports if r.hypothesis_holds]
    pairs: dict[tuple[int, int], int] = {}
    for r in hyp:
        pairs[(r.mh_P, r.mh_B0)] = pairs.get((r.mh_P, r.mh_B0), 0) + 1

    fig, (ax1, ax2) = plt.subplots(1, 2, figsize=(10, 4.2))
    if pairs:
        xs, ys, counts = zip(*((x, y, c) for (x, y), c in sorted(pairs.items())))
        top = max(max(xs), max(ys)) + 1
        ax1.plot([0, top], [0, top], "--", color="gray", linewidth=1)
        ax1.scatter(xs, ys, s=[80 * c for c in counts], alpha=0.6)
        for x, y, c in zip(xs, ys, counts):
            ax1.annotate(str(c), (x, y), ha="center", va="center", fontsize=8)
        ax1.set_xlim(0, top)
        ax1.set_ylim(0, top)
    ax1.set_xlabel("mh(P)")
    ax1.set_ylabel("mh(B0(G))")
    ax1.set_title("minimal positive heights (hypothesis instances)")

    by_p: dict[int, list[int]] = {}
    for r in reports:
        counts = by_p.setdefault(r.p, [0, 0])
        counts[0] += 1
        counts[1] += int(r.hypothesis_holds)
    ps = sorted(by_p)
    ax2.bar(range(len(ps)), [by_p[p][0] for p in ps], width=0.6, label="pairs")
    ax2.bar(
        range(len(ps)), [by_p[p][1] for p in ps], width=0.6, label="hypothesis"
    )
    ax2.set_xticks(range(len(ps)), [str(p) for p in ps])
    ax2.set_xlabel("p")
    ax2.set_ylabel("(G, p) pairs")
    ax2.set_title("sweep coverage by prime")
    ax2.legend()
    fig.tight_layout()
    fig.savefig(path, dpi=150)
    plt.close(fig)


def write_reports(
    reports: Sequence[EmReport],
    out_path: str,
    catalog: str = "builtin",
    prime: Optional[int] = None,
    max_order: int = DEFAULT_MAX_ORDER,
    timings: bool = False,
) -> tuple[str, str, str]:
    """Write JSON to out_path and a CSV + PNG chart alongside it."""
    base = out_path[:-5] if out_path.endswith(".json") else out_path
    json_path = base + ".json"
    csv_path = base + ".csv"
    png_path = base + ".png"
    with open(json_path, "w") as fh:
        fh.write(
            reports_to_json(
                reports,
                catalog=catalog,
                prime=prime,
                max_order=max_order,
                timings=timings,
            )
        )
    with open(csv_path, "w") as fh:
        fh.write(reports_to_csv(reports, timings=timings))
    render_figure(reports, png_path)
    return json_path, csv_path, png_path


# ---------------------------------------------------------------------------
# lemma suites


@dataclass
class SuiteResult:
    """Outcome of one lemma suite: a pass flag with check counts and the
    labels of any failing instances."""

    name: str
    passed: bool
    checks: int
    failures: tuple[str, ...]
    notes: tuple[str, ...] = ()


class _Suite:
    """Collects check outcomes; failures are findings, not exceptions."""

    def __init__(self, name: str):
        self.name = name
        self.checks = 0
        self.failures: list[str] = []
        self.notes: list[str] = []

    def check(self, condition: bool, label: str) -> bool:
        self.checks += 1
        if not condition:
            self.failures.append(label)
        return condition

    def note(self, text: str) -> None:
        self.notes.append(text)

    def result(self) -> SuiteResult:
        return SuiteResult(
            self.name,
            not self.failures,
            self.checks,
            tuple(self.failures),
            tuple(self.notes),
        )


_TABLE_CACHE: dict[tuple, CharacterTable] = {}


def _table(G: PermGroup, max_order: int = 20_000) -> CharacterTable:
    key = (G.degree, G.generators)
    if key not in _TABLE_CACHE:
        _TABLE_CACHE[key] = character_table(G, max_order=max_order)
    return _TABLE_CACHE[key]


def _closure(elems: Iterable[tuple], ident: tuple) -> frozenset:
    """Subgroup generated by elems, as a frozenset of permutations."""
    out = {ident} | set(elems)
    frontier = list(out)
    while frontier:
        x = frontier.pop()
        for y in list(out):
            for z in (pmul(x, y), pmul(y, x)):
                if z not in out:
                    out.add(z)
                    frontier.append(z)
    return frozenset(out)


def _all_subgroups(P: PermGroup) -> list[frozenset]:
    """Every subgroup of the small group P, as element sets."""
    elems = P.elements()
    found = {frozenset([P.ident])}
    frontier = [frozenset([P.ident])]
    while frontier:
        S = frontier.pop()
        for g in elems:
            if g in S:
                continue
            T = _closure(S | {g}, P.ident)
            if T not in found:
                found.add(T)
                frontier.append(T)
    return sorted(found, key=lambda S: (len(S), sorted(S)))


def _is_abelian_set(S: frozenset) -> bool:
    elems = list(S)
    return all(
        pmul(x, y) == pmul(y, x) for i, x in enumerate(elems) for y in elems[i:]
    )


def _orbit_sizes_under(points: Sequence[int], elems: Sequence[tuple]) -> list[int]:
    """Orbit sizes of an element set acting on the given points."""
    seen = set()
    sizes = []
    for start in points:
        if start in seen:
            continue
        orbit = {start}
        queue = [start]
        for x in queue:
            for g in elems:
                y = g[x]
                if y not in orbit:
                    orbit.add(y)
                    queue.append(y)
        seen |= orbit
        sizes.append(len(orbit))
    return sizes


# -- TI Sylow generation ----------------------------------------------------


def _suite_ti_sylow(large: bool) -> SuiteResult:
    """Defining-prime Sylow subgroups of (P)SL2(q): trivial pairwise
    intersections, and R together with any element outside its normalizer
    generates the whole group."""
    suite = _Suite("ti-sylow")
    cases = [(psl2_proj(q), q) for q in (4, 5, 7, 8, 9, 11, 13)]
    cases += [(sl2_proj(q), q) for q in (4, 5, 7, 8, 9)]
    for S, q in cases:
        p = min(factorize(q))
        label = f"{S.name} p={p}"
        order = S.order()
        R = S.sylow(p)
        N = S.normalizer(R)

        sylows = {frozenset(R.elements())}
        frontier = [frozenset(R.elements())]
        while frontier:
            Q = frontier.pop()
            for g in S.generators:
                img = frozenset(pconj(x, g) for x in Q)
                if img not in sylows:
                    sylows.add(img)
                    frontier.append(img)
        suite.check(
            len(sylows) == order // N.order(),
            f"{label}: Sylow count != |S : N_S(R)|",
        )
        sylow_list = sorted(sylows, key=sorted)
        trivial = all(
            len(A & B) == 1
            for i, A in enumerate(sylow_list)
            for B in sylow_list[i + 1 :]
        )
        suite.check(trivial, f"{label}: Sylow subgroups are not TI")

        bad = 0
        for g in S.elements():
            if N.contains(g):
                continue
            H = S.subgroup(R.generators + (g,))
            suite.checks += 1
            if H.order() != order:
                bad += 1
                if bad <= 3:
                    suite.failures.append(f"{label}: <R, g> proper for g={g}")
        suite.note(f"{label}: {len(sylows)} Sylow subgroups, "
                   f"{order - N.order()} generation checks")
    return suite.result()


# -- extension of invariant linear characters -------------------------------


def _split_product_factor(G: PermGroup, lo: int, hi: int) -> tuple[list, list]:
    """Split generators of a disjoint-support product by the point range
    [lo, hi) they move."""
    inside, outside = [], []
    for g in G.generators:
        moved = [i for i in range(G.degree) if g[i] != i]
        if all(lo <= i < hi for i in moved):
            inside.append(g)
        else:
            outside.append(g)
    return inside, outside


def _linear_extension_instances() -> list[tuple[str, PermGroup, PermGroup, PermGroup, bool]]:
    """(label, G, N, H, expect_nontrivial_invariant) with G = HN, N normal,
    H a complement."""
    out = []

    v4_gens = [parse_cycles("(1,2)(3,4)", 4), parse_cycles("(1,3)(2,4)", 4)]
    G = sym(4)
    out.append(
        ("S4 = S3.V4", G, G.subgroup(v4_gens, name="V4"),
         G.point_stabilizer(3), False)
    )

    A = alt(4)
    out.append(
        ("A4 = C3.V4", A, A.subgroup(v4_gens, name="V4"),
         A.subgroup([parse_cycles("(1,2,3)", 4)], name="C3"), False)
    )

    G = direct_product(cyclic(4), cyclic(3))
    n_gens, h_gens = _split_product_factor(G, 4, 7)
    out.append(
        ("C4 x C3", G, G.subgroup(n_gens, name="C3"),
         G.subgroup(h_gens, name="C4"), True)
    )

    G = dihedral(10)
    out.append(
        ("D10 = C2.C5", G, G.subgroup([G.generators[0]], name="C5"),
         G.subgroup([G.generators[1]], name="C2"), False)
    )

    G = frobenius_affine(5, 4)
    out.append(
        ("F20 = C4.C5", G, G.subgroup([G.generators[0]], name="C5"),
         G.subgroup([G.generators[1]], name="C4"), False)
    )

    G = wreath(sym(3), cyclic(2))
    base, top = [], []
    for g in G.generators:
        if all(g[i] // 3 == i // 3 for i in range(6)):
            base.append(g)
        else:
            top.append(g)
    out.append(
        ("S3wrC2 = C2.(S3xS3)", G, G.subgroup(base, name="S3xS3"),
         G.subgroup(top, name="C2"), True)
    )

    G = direct_product(quaternion(8), cyclic(3))
    n_gens, h_gens = _split_product_factor(G, 9, 12)
    out.append(
        ("Q8 x C3", G, G.subgroup(n_gens, name="C3"),
         G.subgroup(h_gens, name="Q8"), True)
    )
    return out


def _suite_linear_extension(large: bool) -> SuiteResult:
    """G = HN with H a complement to the normal subgroup N: every
    G-invariant linear character of N extends to G via hn -> lambda(n)."""
    suite = _Suite("linear-extension")
    for label, G, N, H, expect_nontrivial in _linear_extension_instances():
        suite.check(N.is_normal_in(G), f"{label}: N not normal")
        n_elems = N.elements()
        h_elems = set(H.elements())
        suite.check(
            len(h_elems & set(n_elems)) == 1, f"{label}: H meets N beyond 1"
        )
        suite.check(
            H.order() * N.order() == G.order(), f"{label}: |H||N| != |G|"
        )
        table_N = _table(N)
        classes_N = table_N.classes

        # N-part of every group element under the unique factorization hn
        n_part: dict[tuple, tuple] = {}
        for x in G.elements():
            for n in n_elems:
                if pmul(x, pinv(n)) in h_elems:
                    n_part[x] = n
                    break
            else:
                suite.failures.append(f"{label}: element outside HN")
                break
        if len(n_part) != G.order():
            continue

        invariant_rows = []
        for r in range(table_N.n_classes):
            if table_N.degrees[r] != 1:
                continue
            values = {n: table_N.value(r, classes_N.index_of(n)) for n in n_elems}
            if all(
                values[pconj(n, g)] == values[n]
                for g in G.generators
                for n in n_elems
            ):
                invariant_rows.append((r, values))

        suite.check(bool(invariant_rows), f"{label}: no invariant linear character")
        if expect_nontrivial:
            suite.check(
                any(r != 0 for r, _ in invariant_rows),
                f"{label}: expected a nontrivial invariant character",
            )
        for r, values in invariant_rows:
            ext = {x: values[n_part[x]] for x in n_part}
            hom = all(
                ext[pmul(x, y)] == ext[x] * ext[y]
                for x in n_part
                for y in n_part
            )
            suite.check(hom, f"{label}: extension of row {r} is not a homomorphism")
            suite.check(
                all(ext[n] == values[n] for n in n_elems),
                f"{label}: extension does not restrict to row {r}",
            )
        suite.note(f"{label}: {len(invariant_rows)} invariant linear character(s)")
    return suite.result()


# -- solvable principal block -----------------------------------------------


def _suite_solvable_principal(large: bool) -> SuiteResult:
    """Solvable hypothesis pairs: the principal block equals the character
    set of G/O_{p'}(G) and contains a witness of degree divisible by p with
    p-part at most p^a."""
    suite = _Suite("solvable-principal")
    instances = 0
    for entry in _sweep_entries("builtin", 2000):
        G = _as_perm(entry.build())
        if not G.is_solvable():
            continue
        order = G.order()
        for p in sorted(factorize(order)):
            sylow_table = _table(G.sylow(p))
            hypothesis, a = check_hypothesis(G, p, sylow_table=sylow_table)
            if not hypothesis:
                continue
            instances += 1
            label = f"{entry.name} p={p}"
            table = _table(G)
            dist = block_distribution(table, p)
            quotient = set(
                table.characters_with_kernel_containing(G.p_prime_core(p))
            )
            b0 = set(dist.principal_rows())
            suite.check(b0 == quotient, f"{label}: B0 != Irr(G/O_p'(G))")
            witnesses = [
                r for r in b0 if 1 <= valuation(table.degrees[r], p) <= a
            ]
            suite.check(bool(witnesses), f"{label}: no witness in B0")
            suite.check(
                all(r in quotient for r in witnesses),
                f"{label}: witness outside Irr(G/O_p'(G))",
            )
    suite.note(f"{instances} solvable hypothesis instances")
    return suite.result()


# -- concealed orbits and small-degree witnesses ----------------------------


def _suite_concealed_degree(large: bool) -> SuiteResult:
    """Power-set orbit data for the fixture subgroups of Sym(5)/Sym(8),
    with the promised character of p-part exactly p where applicable."""
    suite = _Suite("concealed-degree")
    cases = [
        ("D10 < S5", dihedral(10), 2, True, True),
        ("AGL3(2) < S8", agl(3, 2), 3, True, True),
        ("AGammaL1(8) < S8", agammal1(8), 3, True, True),
        ("A5 < S5", alt(5), 3, True, True),
        ("S5 natural", sym(5), 3, True, True),
        ("A8 < S8", alt(8), 3, True, False),
        ("S8 natural", sym(8), 3, True, False),
        ("S5 natural", sym(5), 2, False, False),
    ]
    for label, H, p, expect, want_witness in cases:
        concealed, certificate = is_p_concealed(H, p)
        suite.check(
            concealed == expect,
            f"{label} p={p}: is_p_concealed = {concealed}, expected {expect}",
        )
        if H.order() <= 2000:
            suite.check(
                p_concealed_by_counting(H, p) == expect,
                f"{label} p={p}: counting oracle disagrees",
            )
        if label.startswith("D10") and expect:
            suite.check(
                certificate == ((1, 2), (5, 6)),
                f"{label}: orbit-size summary {certificate}",
            )
        if want_witness:
            table = _table(H)
            suite.check(
                any(valuation(d, p) == 1 for d in table.degrees),
                f"{label} p={p}: no character of p-part exactly p",
            )
    suite.note(f"{len(cases)} fixture cases")
    return suite.result()


# -- block covering ---------------------------------------------------------


def _suite_block_covering(large: bool, max_order: int = 200) -> SuiteResult:
    """For N normal in G with C_G(Q) <= N for Q a Sylow p-subgroup of N:
    the principal block is the unique block covering B_0(N), and Irr(G/N)
    sits inside it."""
    suite = _Suite("block-covering")
    instances = 0
    for entry in _sweep_entries("builtin", max_order):
        G = _as_perm(entry.build())
        order = G.order()
        normals = [
            N for N in G.normal_subgroups() if 1 < N.order() < order
        ]
        for p in sorted(factorize(order)):
            for N in normals:
                if N.order() % p:
                    continue
                Q = N.sylow(p)
                if not G.centralizer_of_subgroup(Q).is_subgroup_of(N):
                    continue
                instances += 1
                label = f"{entry.name} p={p} |N|={N.order()}"
                table_G = _table(G)
                table_N = _table(N)
                relation = covering_relation(table_G, table_N, p)
                covering_b0 = {i for (i, j) in relation if j == 0}
                suite.check(
                    covering_b0 == {0},
                    f"{label}: blocks covering B0(N) are {sorted(covering_b0)}",
                )
                dist_G = block_distribution(table_G, p)
                quotient_rows = set(table_G.characters_with_kernel_containing(N))
                suite.check(
                    quotient_rows <= set(dist_G.principal_rows()),
                    f"{label}: Irr(G/N) escapes the principal block",
                )
    suite.note(f"{instances} hypothesis instances with |G| <= {max_order}")
    return suite.result()


# -- p-constrained single block ---------------------------------------------


def _suite_constrained_single_block(large: bool) -> SuiteResult:
    """O_{p'}(G) = 1 and C_G(O_p(G)) <= O_p(G) forces a single p-block."""
    suite = _Suite("constrained-single-block")
    instances = 0
    for entry in _sweep_entries("builtin", 2000):
        G = _as_perm(entry.build())
        for p in sorted(factorize(G.order())):
            hypothesis, conclusion = is_p_constrained_single_block(G, p)
            if hypothesis:
                instances += 1
                suite.check(
                    conclusion is True,
                    f"{entry.name} p={p}: p-constrained with several blocks",
                )
    suite.note(f"{instances} p-constrained instances")
    return suite.result()


# -- regular orbits on ordered set partitions --------------------------------


def _conjugacy_canonical(sub: frozenset, ambient_elems) -> tuple:
    return min(
        tuple(sorted(pconj(x, g) for x in sub)) for g in ambient_elems
    )


def _suite_regular_partition_orbits(large: bool) -> SuiteResult:
    """Every p-subgroup of Sym(n), n <= 6: a regular orbit on the power
    set for odd p, on ordered 3-part partitions for p = 2; the dihedral
    group on 4 points shows the power-set claim fails at p = 2."""
    suite = _Suite("regular-partition-orbits")
    classes_checked = 0
    for n in range(2, 7):
        Sn = sym(n)
        ambient = Sn.elements()
        for p in (2, 3, 5):
            if p > n:
                continue
            P = Sn.sylow(p)
            if P.order() == 1:
                continue
            seen: set[tuple] = set()
            for sub in _all_subgroups(P):
                if len(sub) == 1:
                    continue
                canon = _conjugacy_canonical(sub, ambient)
                if canon in seen:
                    continue
                seen.add(canon)
                classes_checked += 1
                gens = [g for g in sub if g != Sn.ident]
                Q = PermGroup(n, gens, name=f"{p}-sub(S{n})")
                # Reading "3-part" as either 3 or 4 parts (3 separating
                # cuts): run both for 2-groups and report each.
                ks = (2,) if p % 2 else (3, 4)
                for k in ks:
                    found = regular_orbit_on_partitions(Q, k)
                    suite.check(
                        found is not None,
                        f"S{n} p={p} subgroup of order {len(sub)}: "
                        f"no regular orbit on {k}-part partitions",
                    )
    D8 = dihedral(8)
    suite.check(
        regular_orbit_on_partitions(D8, 2) is None,
        "D8 on 4 points: unexpected regular orbit on the power set",
    )
    suite.check(
        regular_orbit_on_partitions(D8, 3) is not None,
        "D8 on 4 points: no regular orbit on 3-part partitions",
    )
    suite.note(f"{classes_checked} conjugacy classes of p-subgroups")
    return suite.result()


# -- hook-length degrees ----------------------------------------------------


def _suite_hook_degrees(large: bool) -> SuiteResult:
    """The distinguished hook/near-hook partition degree has p-part
    exactly p for every valid n; small cases cross-checked against the
    standard-tableaux oracle."""
    suite = _Suite("hook-degrees")
    count = 0
    for p in (3, 5, 7):
        for n in range(p, p * p):
            if n <= 4 or (n, p) == (6, 3):
                continue
            count += 1
            la = hook_partition(n, p)
            degree = hook_degree(la)
            suite.check(
                valuation(degree, p) == 1,
                f"n={n} p={p}: degree {degree} has wrong p-part",
            )
            if n <= 12:
                suite.check(
                    degree == syt_count(la.parts),
                    f"n={n} p={p}: hook degree disagrees with tableaux count",
                )
    suite.note(f"{count} (n, p) pairs")
    return suite.result()


# -- exceptional orbit fixtures ---------------------------------------------


def _suite_exceptional_orbits(large: bool) -> SuiteResult:
    """The shipped linear-group fixtures reproduce their orbit sizes and
    are p-exceptional for the defining characteristic."""
    suite = _Suite("exceptional-orbits")
    cases = [
        ("sl2_5_gl4_3.mgrp", (1, 40, 40)),
        ("psl2_11_gl5_3.mgrp", (1, 22, 110, 110)),
        ("m11_gl5_3.mgrp", (1, 22, 220)),
    ]
    if large:
        cases.append(("m23_gl11_2.mgrp", (1, 23, 253, 1771)))
    for name, expected in cases:
        M = load_fixture(name, deep=large)
        space = M.space_size
        sizes = M.vector_orbits(bound=space).sizes
        suite.check(sizes == expected, f"{name}: orbit sizes {sizes}")
        flag, certificate = M.is_p_exceptional(bound=space)
        suite.check(flag, f"{name}: not {M.prime}-exceptional ({certificate})")
        suite.check(
            M.is_irreducible(bound=space), f"{name}: module is reducible"
        )
    suite.note(f"{len(cases)} fixtures")
    return suite.result()


# -- solvable orbit theorems ------------------------------------------------


def _sum_zero_matrix(perm: Sequence[int], p: int):
    """Action of a coordinate permutation on the sum-zero subspace, in the
    basis e_i - e_{i+1}."""
    n = len(perm)
    rows = []
    for j in range(n - 1):
        w = [0] * n
        w[perm[j]] += 1
        w[perm[j + 1]] -= 1
        rows.append(tuple(sum(w[: t + 1]) % p for t in range(n - 1)))
    return rows


def _orbit_theorem_instances() -> list[tuple[str, MatGroup, int, int]]:
    """(label, solvable matrix group, p, expected order); each module is
    faithful and completely reducible in characteristic p."""
    out = []
    gl22 = gl_mat(2, 2)
    out.append(("GL2(2) on F_2^2", gl22, 2, 6))

    companion = [(0, 1, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1), (1, 1, 1, 1)]
    inversion = [(1, 0, 0, 0), (1, 1, 1, 1), (0, 0, 0, 1), (0, 0, 1, 0)]
    out.append(
        ("D10 < GL4(2)", MatGroup(4, 2, [companion, inversion], name="D10"),
         2, 10)
    )

    a4_gens = [
        _sum_zero_matrix((1, 2, 0, 3), 3),  # (0 1 2)
        _sum_zero_matrix((1, 0, 3, 2), 3),  # (0 1)(2 3)
    ]
    out.append(("A4 sum-zero < GL3(3)", MatGroup(3, 3, a4_gens, name="A4"), 3, 12))

    def embed(mat, offset):
        rows = [[1 if i == j else 0 for j in range(4)] for i in range(4)]
        for i in range(2):
            for j in range(2):
                rows[offset + i][offset + j] = mat[i][j]
        return rows

    s3s3_gens = [embed(g, 0) for g in gl22.generators]
    s3s3_gens += [embed(g, 2) for g in gl22.generators]
    out.append(
        ("S3 x S3 < GL4(2)", MatGroup(4, 2, s3s3_gens, name="S3xS3"), 2, 36)
    )
    return out


def _suite_orbit_theorems(large: bool) -> SuiteResult:
    """Solvable linear groups with O_p = 1 in characteristic p: every
    abelian p-subgroup has a regular orbit on vectors, and an abelian
    Sylow p-subgroup has an orbit of size exactly p."""
    suite = _Suite("orbit-theorems")
    for label, M, p, expected_order in _orbit_theorem_instances():
        G = M.as_perm_group()
        points = range(M.space_size)
        suite.check(G.order() == expected_order, f"{label}: wrong order")
        suite.check(G.is_solvable(), f"{label}: group is not solvable")
        suite.check(
            G.p_core(p).order() == 1, f"{label}: O_p(G) is nontrivial"
        )
        if label.startswith("S3 x S3"):
            # block-diagonal sum of two copies of an irreducible module
            half = MatGroup(2, 2, gl_mat(2, 2).generators)
            suite.check(
                half.is_irreducible(), f"{label}: summand is reducible"
            )
        else:
            suite.check(M.is_irreducible(), f"{label}: module is reducible")

        # every abelian p-subgroup (all are conjugate into one Sylow
        # subgroup, and regular orbits transfer along conjugation)
        P = G.sylow(p)
        abelian_subs = [
            S
            for S in _all_subgroups(P)
            if len(S) > 1 and _is_abelian_set(S)
        ]
        for S in abelian_subs:
            sizes = _orbit_sizes_under(points, list(S))
            suite.check(
                len(S) in sizes,
                f"{label}: no regular orbit for an abelian {p}-subgroup "
                f"of order {len(S)}",
            )
        suite.check(P.is_abelian(), f"{label}: Sylow subgroup not abelian")
        sylow_sizes = _orbit_sizes_under(points, P.elements())
        suite.check(
            p in sylow_sizes,
            f"{label}: no Sylow orbit of size exactly {p}",
        )
        suite.note(
            f"{label}: {len(abelian_subs)} abelian {p}-subgroups checked"
        )
    return suite.result()


# -- imprimitivity ----------------------------------------------------------


def _suite_imprimitive(large: bool) -> SuiteResult:
    """Maximal block systems of imprimitive catalog groups induce
    primitive actions, concealment passes to the induced action, and the
    shipped monomial fixture checks out on its coordinate decomposition."""
    suite = _Suite("imprimitive")
    instances = 0
    for entry in _sweep_entries("builtin", 2000):
        G = _as_perm(entry.build())
        if G.degree < 2 or not G.is_transitive() or is_primitive(G):
            continue
        instances += 1
        label = entry.name
        system = maximal_block_system(G)
        suite.check(
            is_primitive(system.induced),
            f"{label}: induced action not primitive",
        )
        sizes = {len(b) for b in system.blocks}
        suite.check(
            len(sizes) == 1 and G.degree % sizes.pop() == 0,
            f"{label}: translates do not tile the domain",
        )
        if G.degree <= 16:  # power-set enumeration stays cheap
            for p in sorted(factorize(G.order())):
                suite.check(
                    induced_concealed_check(G, p),
                    f"{label} p={p}: concealment lost on the block action",
                )

    M = load_fixture("wr3.mgrp")
    lines = [[(1, 0, 0)], [(0, 1, 0)], [(0, 0, 1)]]
    report = M.check_imprimitive_decomposition(lines)
    suite.check(report.n_parts == 3, "wr3: wrong part count")
    suite.check(report.part_dims == (1, 1, 1), "wr3: wrong part dims")
    suite.check(
        report.part_stabilizer_transitive,
        "wr3: part stabilizer not transitive on nonzero part vectors",
    )
    suite.check(report.induced_primitive, "wr3: induced action not primitive")
    try:
        M.check_imprimitive_decomposition([[(1, 1, 0)], [(0, 1, 0)], [(0, 0, 1)]])
        suite.check(False, "wr3: invalid decomposition accepted")
    except ValueError:
        suite.check(True, "wr3: invalid decomposition rejected")
    suite.note(f"{instances} imprimitive catalog groups")
    return suite.result()


# ---------------------------------------------------------------------------
# suite registry


SUITES: dict[str, Callable[[bool], SuiteResult]] = {
    "ti-sylow": _suite_ti_sylow,
    "linear-extension": _suite_linear_extension,
    "solvable-principal": _suite_solvable_principal,
    "concealed-degree": _suite_concealed_degree,
    "block-covering": _suite_block_covering,
    "constrained-single-block": _suite_constrained_single_block,
    "regular-partition-orbits": _suite_regular_partition_orbits,
    "hook-degrees": _suite_hook_degrees,
    "exceptional-orbits": _suite_exceptional_orbits,
    "orbit-theorems": _suite_orbit_theorems,
    "imprimitive": _suite_imprimitive,
}


def run_lemma_suites(
    names: Sequence[str] = ("all",), large: bool = False
) -> list[SuiteResult]:
    """Run the named lemma suites ("all" for every one) in registry order."""
    if "all" in names:
        selected = list(SUITES)
    else:
        unknown = [n for n in names if n not in SUITES]
        if unknown:
            raise ValueError(f"unknown suite(s): {', '.join(unknown)}")
        selected = [n for n in SUITES if n in names]
    return [SUITES[n](large) for n in selected]
