"""Verification suites and their reports.

Each suite walks the catalogs (and, where it says so, seeded random samples)
and records every graph on which two computations that should agree do not.
A report passes exactly when it holds no counterexample.
"""
from __future__ import annotations

import logging
import time
from contextlib import contextmanager
from dataclasses import dataclass, field
from functools import lru_cache
from pathlib import Path
from typing import Any, Callable, Dict, Iterator, List, Optional, Set, Tuple

import networkx as nx
import numpy as np
import pandas as pd

from hng_c5 import (
    DIHEDRAL,
    CycleFamily,
    family_match,
    family_specs,
    generate_family,
    random_family_spec,
    relabel_type,
    type_mask,
)
from hng_canon import CanonicalCode, are_isomorphic, canonical_code
from hng_config import config
from hng_enumeration import KNOWN_COUNTS, NAIVE_ORDER_CAP, ensure_catalog, iter_graphs, naive_classes
from hng_errors import NotInClass, ParameterOutOfRange
from hng_graph import (
    Graph,
    claw,
    complement,
    complete,
    complete_bipartite,
    cycle,
    from_edges,
    graph6_encode,
    path,
    relabel,
    sun_with_pendant,
    union,
)
from hng_invariants import (
    THRESHOLD_OBSTRUCTIONS,
    InvariantMemo,
    chromatic_number,
    distinct_vertices,
    is_apex_perfect,
    is_c5_free,
    is_chordal,
    is_perfect,
    is_pseudo_split,
    is_split,
    is_sum_perfect,
    is_threshold,
    is_threshold_by_triples,
    is_weakly_chordal,
    matching_number,
)
from hng_membership import hereditary_ng_defect, in_hng, verify_inclusion_chain
from hng_miner import ObstructionSet, check_antichain, ensure_obstructions, graphs_by_edges, mine_minimal_fis
from hng_structure import (
    apex_perfect_witness,
    check_characterization,
    compatible_types,
    complement_type,
    fast_invariants,
    is_1hng_fast,
    is_biclique_or_doublestar_subgraph,
    omega_preserving_apex,
    type_compatible,
)
from hng_subsets import build_tables
from hng_types import CounterexamplePayload, ReportPayload
from hng_utils import json_dumps, lines_hash, write_text_atomic

logger = logging.getLogger("hng")

SCHEMA_VERSION = 1
MAX_COUNTEREXAMPLES = 100
FAMILY_MAX_ORDER = 10
FULL_OBSTRUCTION_ORDER = 8
# the claw plus 19 claw-free members of the 1-HNG set; the complement of the
# sun with a pendant contains a claw centred at the pendant
CLAW_SET_SIZE = 20


# ---------------------------------------------------------------------------
# Reports
# ---------------------------------------------------------------------------


@dataclass
class SuiteOptions:
    nmax: int = field(default_factory=lambda: config.DEFAULT_NMAX)
    amax: int = field(default_factory=lambda: config.DEFAULT_AMAX)
    seed: int = field(default_factory=lambda: config.DEFAULT_SEED)
    samples: int = field(default_factory=lambda: config.DEFAULT_SAMPLES)
    sample_orders: Tuple[int, ...] = field(default_factory=lambda: tuple(config.SAMPLE_ORDERS))
    workers: int = field(default_factory=lambda: config.WORKERS)
    catalog_dir: Optional[Path] = None
    obstruction_dir: Optional[Path] = None
    progress: bool = False


@dataclass
class VerificationReport:
    suite: str
    bounds: Dict[str, Any] = field(default_factory=dict)
    counterexamples: List[CounterexamplePayload] = field(default_factory=list)
    details: Dict[str, Any] = field(default_factory=dict)
    provenance: Dict[str, str] = field(default_factory=dict)
    timing_ms: Dict[str, int] = field(default_factory=dict)
    failures: int = 0

    @property
    def verdict(self) -> str:
        return "fail" if self.failures else "pass"

    @property
    def passed(self) -> bool:
        return not self.failures

    def fail(self, graph6: str, note: str, **clauses: Any) -> None:
        self.failures += 1
        if len(self.counterexamples) < MAX_COUNTEREXAMPLES:
            self.counterexamples.append(CounterexamplePayload(graph6=graph6, note=note, clauses=clauses))
        logger.warning(f"[{self.suite}] {note}: {graph6 or '-'} {clauses}")

    @contextmanager
    def phase(self, name: str) -> Iterator[None]:
        started = time.perf_counter()
        try:
            yield
        finally:
            self.timing_ms[name] = int((time.perf_counter() - started) * 1000)

    def to_payload(self, include_timing: bool = False) -> ReportPayload:
        details = dict(self.details)
        if self.failures > len(self.counterexamples):
            details["counterexamples_total"] = self.failures
        payload = ReportPayload(
            schema_version=SCHEMA_VERSION,
            suite=self.suite,
            bounds=dict(self.bounds),
            verdict=self.verdict,
            counterexamples=list(self.counterexamples),
            details=details,
            provenance=dict(self.provenance),
        )
        if include_timing:
            payload["timing_ms"] = dict(self.timing_ms)
        return payload


def _render_rows(rows: List[Dict[str, Any]]) -> str:
    return pd.DataFrame(rows).to_string(index=False)


def render_text(report: VerificationReport, include_timing: bool = False) -> str:
    lines = [f"suite: {report.suite}", f"verdict: {report.verdict}"]
    if report.bounds:
        lines.append("bounds: " + ", ".join(f"{k}={v}" for k, v in sorted(report.bounds.items())))
    for key, value in sorted(report.details.items()):
        if isinstance(value, list) and value and all(isinstance(row, dict) for row in value):
            lines.append(f"\n{key}:")
            lines.append(_render_rows(value))
        else:
            lines.append(f"{key}: {value}")
    if report.counterexamples:
        lines.append("\ncounterexamples:")
        lines.append(_render_rows([
            {"graph6": c.get("graph6", ""), "note": c.get("note", ""), "clauses": json_dumps(c.get("clauses", {}), None).strip()}
            for c in report.counterexamples
        ]))
    if report.provenance:
        lines.append("\nprovenance: " + ", ".join(f"{k}={v}" for k, v in sorted(report.provenance.items())))
    if include_timing and report.timing_ms:
        lines.append("timing_ms: " + ", ".join(f"{k}={v}" for k, v in sorted(report.timing_ms.items())))
    return "\n".join(lines) + "\n"


def emit_report(report: VerificationReport, fmt: str = "json", out: Optional[Path | str] = None,
                include_timing: bool = False) -> str:
    """Serialise ``report``; with ``out`` the text is also written there atomically."""
    if fmt == "json":
        text = json_dumps(report.to_payload(include_timing))
    elif fmt == "text":
        text = render_text(report, include_timing)
    else:
        raise ParameterOutOfRange(f"format must be 'json' or 'text', got {fmt!r}")
    if out is not None:
        write_text_atomic(out, text)
        logger.info(f"Report for {report.suite} written to {out}")
    return text


# ---------------------------------------------------------------------------
# Suite plumbing
# ---------------------------------------------------------------------------


class SuiteContext:
    """Options, the report being filled, and obstruction sets loaded so far."""

    def __init__(self, options: SuiteOptions, report: VerificationReport) -> None:
        self.options = options
        self.report = report
        self._sets: Dict[Tuple[str, int], ObstructionSet] = {}

    @property
    def nmax(self) -> int:
        return self.options.nmax

    def graphs(self, n_max: Optional[int] = None) -> Iterator[Graph]:
        return iter_graphs(n_max or self.nmax, cache_dir=self.options.catalog_dir, progress=self.options.progress)

    def obstructions(self, name: str, n_max: int = FULL_OBSTRUCTION_ORDER) -> ObstructionSet:
        key = (name, n_max)
        if key not in self._sets:
            with self.report.phase(f"derive-{name}"):
                found = ensure_obstructions(
                    name,
                    n_max,
                    directory=self.options.obstruction_dir,
                    catalog_dir=self.options.catalog_dir,
                    workers=self.options.workers,
                    progress=self.options.progress,
                )
            self._sets[key] = found
            self.report.provenance[name] = lines_hash(found.graph6_lines())
        return self._sets[key]

    def hng1(self) -> ObstructionSet:
        return self.obstructions("hng1", min(self.nmax, FULL_OBSTRUCTION_ORDER))

    def rng(self) -> np.random.Generator:
        self.report.bounds.update(seed=self.options.seed, samples=self.options.samples)
        return np.random.default_rng(self.options.seed)


SuiteFn = Callable[[SuiteContext], None]
SUITES: Dict[str, SuiteFn] = {}


def suite(name: str) -> Callable[[SuiteFn], SuiteFn]:
    def register(fn: SuiteFn) -> SuiteFn:
        SUITES[name] = fn
        return fn

    return register


def run_suite(name: str, options: Optional[SuiteOptions] = None) -> VerificationReport:
    if name not in SUITES:
        raise ParameterOutOfRange(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}")
    options = options or SuiteOptions()
    report = VerificationReport(name, bounds={"nmax": options.nmax})
    ctx = SuiteContext(options, report)
    logger.info(f"Running suite {name} (nmax={options.nmax})")
    with report.phase("total"):
        SUITES[name](ctx)
    logger.info(f"Suite {name}: {report.verdict} ({report.failures} counterexample(s), {report.timing_ms['total']} ms)")
    return report


def random_graph(rng: np.random.Generator, n: int, p: float) -> Graph:
    upper = np.triu(rng.random((n, n)) < p, k=1)
    return from_edges(n, [(int(i), int(j)) for i, j in zip(*np.nonzero(upper))])


def _sample_graphs(ctx: SuiteContext) -> Iterator[Graph]:
    rng = ctx.rng()
    orders = ctx.options.sample_orders
    ctx.report.bounds["sample_orders"] = list(orders)
    for i in range(ctx.options.samples):
        yield random_graph(rng, orders[i % len(orders)], float(rng.uniform(0.2, 0.8)))


def _full_tables(g: Graph) -> Dict[str, int]:
    t = build_tables(g)
    full = t.full
    return {
        "omega": int(t.omega[full]),
        "alpha": int(t.alpha[full]),
        "chi": int(t.chi[full]),
        "theta": int(t.theta[full]),
    }


@lru_cache(maxsize=1)
def _atlas() -> Tuple[Tuple[int, Tuple[Tuple[int, int], ...]], ...]:
    return tuple((G.number_of_nodes(), tuple(G.edges())) for G in nx.graph_atlas_g())


def atlas_codes(n: int) -> Set[CanonicalCode]:
    """Canonical codes of the networkx atlas graphs of order ``n`` (n ≤ 7)."""
    return {canonical_code(from_edges(order, edges)) for order, edges in _atlas() if order == n}


# ---------------------------------------------------------------------------
# Enumeration and the inclusion chain
# ---------------------------------------------------------------------------


@suite("enumeration")
def _enumeration(ctx: SuiteContext) -> None:
    rows = []
    for n in range(1, ctx.nmax + 1):
        with ctx.report.phase(f"order-{n}"):
            catalog = ensure_catalog(n, ctx.options.catalog_dir, ctx.options.workers, ctx.options.progress)
        expected = KNOWN_COUNTS[n] if n < len(KNOWN_COUNTS) else None
        row: Dict[str, Any] = {"order": n, "count": len(catalog), "expected": expected}
        codes = set(catalog.codes)
        if expected is not None and len(catalog) != expected:
            ctx.report.fail("", "catalog size differs from the known count", order=n, count=len(catalog), expected=expected)
        if n <= NAIVE_ORDER_CAP:
            naive = naive_classes(n)
            row["naive"] = len(naive)
            if naive != codes:
                ctx.report.fail("", "catalog differs from exhaustive enumeration", order=n)
        if n <= 7:
            atlas = atlas_codes(n)
            row["atlas"] = len(atlas)
            if atlas != codes:
                ctx.report.fail("", "catalog differs from the networkx atlas", order=n,
                                missing=len(atlas - codes), extra=len(codes - atlas))
        rows.append(row)
    ctx.report.details["per_order"] = rows


@suite("inclusion-chain")
def _inclusion_chain(ctx: SuiteContext) -> None:
    ctx.report.bounds["amax"] = ctx.options.amax
    result = verify_inclusion_chain(ctx.options.amax, ctx.nmax, ctx.graphs())
    for item in result.counterexamples:
        ctx.report.fail(item["graph6"], "inclusion chain broken", **item["clauses"])
    ctx.report.details["graphs_checked"] = result.graphs_checked
    ctx.report.details["witnesses"] = result.witnesses


@suite("threshold")
def _threshold(ctx: SuiteContext) -> None:
    """Hereditary defect 0 is the threshold class, and its obstructions are 2K2, P4, C4."""
    checked = 0
    for g in ctx.graphs():
        checked += 1
        zero = hereditary_ng_defect(g).hereditary_defect == 0
        peel = is_threshold(g)
        triples = is_threshold_by_triples(g)
        if not zero == peel == triples:
            ctx.report.fail(graph6_encode(g), "threshold tests disagree",
                            hereditary_defect_zero=zero, threshold_sequence=peel, obstruction_free=triples)
    mined = mine_minimal_fis("threshold", ctx.nmax, cache_dir=ctx.options.catalog_dir)
    expected = {canonical_code(h) for h in THRESHOLD_OBSTRUCTIONS if h.order <= ctx.nmax}
    if set(mined.members) != expected:
        ctx.report.fail("", "mined threshold obstructions differ", mined=mined.graph6_lines(),
                        expected=sorted(c.graph6 for c in expected))
    ctx.report.details.update(graphs_checked=checked, obstructions=mined.graph6_lines())


# ---------------------------------------------------------------------------
# The 1-HNG obstruction set
# ---------------------------------------------------------------------------

EXPECTED_COUNTS = {6: 24, 7: 24, 8: 4}
EXPECTED_PARTS = {"c5-free": {6: 24, 7: 2}, "c5": {7: 22, 8: 4}}


def _counts(codes) -> Dict[int, int]:
    counts: Dict[int, int] = {}
    for code in codes:
        counts[code.order] = counts.get(code.order, 0) + 1
    return counts


@suite("obstructions")
def _obstructions(ctx: SuiteContext) -> None:
    F = ctx.hng1()
    top = min(ctx.nmax, FULL_OBSTRUCTION_ORDER)
    ctx.report.bounds["obstruction_order"] = top
    parts = {name: _counts(F.parts.get(name, ())) for name in EXPECTED_PARTS}
    rows = []
    for n in range(1, top + 1):
        found = F.counts_by_order.get(n, 0)
        if not found and n not in EXPECTED_COUNTS:
            continue
        rows.append({"order": n, "members": found, "c5_free": parts["c5-free"].get(n, 0),
                     "with_c5": parts["c5"].get(n, 0), "expected": EXPECTED_COUNTS.get(n, 0)})
        if found != EXPECTED_COUNTS.get(n, 0):
            ctx.report.fail("", "obstruction count differs", order=n, found=found, expected=EXPECTED_COUNTS.get(n, 0))
        for name, expected in EXPECTED_PARTS.items():
            if parts[name].get(n, 0) != expected.get(n, 0):
                ctx.report.fail("", f"{name} part count differs", order=n, found=parts[name].get(n, 0),
                                expected=expected.get(n, 0))
    ctx.report.details["per_order"] = rows
    ctx.report.details["total"] = len(F)

    if len(F) and not F.complement_closed:
        ctx.report.fail("", "obstruction set is not closed under complement")
    for small, big in check_antichain(F):
        ctx.report.fail(big, "member contains another member", contained=small)

    for g in F.graphs():
        t = build_tables(g)
        full = t.full
        below = t.hereditary_below()
        g6 = graph6_encode(g)
        if int(t.defect()[full]) != 2:
            ctx.report.fail(g6, "member does not have χ+θ = n−1", defect=int(t.defect()[full]))
        if any(int(below[full ^ (1 << v)]) > 1 for v in range(g.order)):
            ctx.report.fail(g6, "a proper induced subgraph has χ+θ < n")
        if distinct_vertices(g, "chi") or distinct_vertices(g, "theta"):
            ctx.report.fail(g6, "member has a χ- or θ-distinct vertex")

    six = [g for g in F.graphs() if g.order == 6]
    if six:
        bipartite = [g for g in six if chromatic_number(g) <= 2 and matching_number(g) == 3]
        others = {canonical_code(g) for g in six} - {canonical_code(g) for g in bipartite}
        ctx.report.details["order6_bipartite_nu3"] = len(bipartite)
        if len(bipartite) != 12 or others != {canonical_code(complement(g)) for g in bipartite}:
            ctx.report.fail("", "order-6 members are not 12 bipartite graphs with ν=3 and their complements",
                            bipartite=len(bipartite))
    seven = [c.to_graph() for c in F.parts.get("c5-free", ()) if c.order == 7]
    if top >= 7:
        pair_ok = len(seven) == 2 and are_isomorphic(complement(seven[0]), seven[1])
        sun_ok = any(are_isomorphic(g, sun_with_pendant()) for g in seven)
        if not (pair_ok and sun_ok):
            ctx.report.fail("", "C5-free order-7 members are not the sun with a pendant and its complement",
                            members=[graph6_encode(g) for g in seven])


@suite("obstruction-equivalence")
def _obstruction_equivalence(ctx: SuiteContext) -> None:
    """Freedom from the mined set equals hereditary defect ≤ 1."""
    F = ctx.hng1()

    def compare(g: Graph) -> None:
        free = is_1hng_fast(g, F)
        brute = hereditary_ng_defect(g).hereditary_defect <= 1
        if free != brute:
            ctx.report.fail(graph6_encode(g), "obstruction freedom and hereditary defect disagree",
                            obstruction_free=free, hereditary_defect_at_most_1=brute)

    checked = 0
    with ctx.report.phase("exhaustive"):
        for g in ctx.graphs():
            compare(g)
            checked += 1
    ctx.report.details["graphs_checked"] = checked
    if ctx.nmax < FULL_OBSTRUCTION_ORDER:
        ctx.report.details["sampling"] = "skipped: obstruction set mined below order 8"
        return
    sampled = 0
    with ctx.report.phase("sampled"):
        for g in _sample_graphs(ctx):
            compare(g)
            sampled += 1
    ctx.report.details["graphs_sampled"] = sampled


@suite("sum-perfect")
def _sum_perfect(ctx: SuiteContext) -> None:
    top = min(ctx.nmax, FULL_OBSTRUCTION_ORDER)
    mined = mine_minimal_fis("sum-perfect", top, cache_dir=ctx.options.catalog_dir)
    F = ctx.hng1()
    expected = set(F.parts.get("c5-free", ()))
    if top >= 5:
        expected.add(canonical_code(cycle(5)))
    if set(mined.members) != expected:
        ctx.report.fail("", "sum-perfect obstructions are not the C5-free obstructions plus C5",
                        mined=len(mined), expected=len(expected))
    checked = 0
    for g in ctx.graphs():
        checked += 1
        sp = is_sum_perfect(g)
        other = in_hng(g, 1) and is_c5_free(g)
        if sp != other:
            ctx.report.fail(graph6_encode(g), "sum-perfect differs from C5-free 1-HNG", sum_perfect=sp, c5_free_1hng=other)
    ctx.report.details.update(graphs_checked=checked, obstructions=len(mined))


@suite("vertex-deletion")
def _vertex_deletion(ctx: SuiteContext) -> None:
    """A vertex with a stable neighbourhood whose neighbours are not θ-distinct
    after its deletion is θ-distinct; obstruction members have no distinct vertex."""
    checked = 0
    for g in ctx.graphs():
        checked += 1
        t = build_tables(g)
        full = t.full
        for v in range(g.order):
            if any(g.rows[u] & g.rows[v] for u in g.neighbors(v)):
                continue
            rest = full ^ (1 << v)
            quiet = all(int(t.theta[rest]) - int(t.theta[rest ^ (1 << w)]) == 0 for w in g.neighbors(v))
            distinct = int(t.theta[full]) - int(t.theta[rest]) == 1
            if quiet and not distinct:
                ctx.report.fail(graph6_encode(g), "stable neighbourhood rule fails", vertex=v)
    ctx.report.details["graphs_checked"] = checked

    members = [("hng-0", h) for h in THRESHOLD_OBSTRUCTIONS] + [("hng-1", g) for g in ctx.hng1().graphs()]
    for label, g in members:
        a = int(label[-1])
        report = hereditary_ng_defect(g)
        if report.defect != a + 1 or report.hereditary_defect != a + 1:
            ctx.report.fail(graph6_encode(g), f"minimal obstruction of {label} is not in the next class",
                            defect=report.defect, hereditary_defect=report.hereditary_defect)
        if distinct_vertices(g, "chi") or distinct_vertices(g, "theta"):
            ctx.report.fail(graph6_encode(g), f"minimal obstruction of {label} has a distinct vertex")
    ctx.report.details["obstructions_checked"] = len(members)


# ---------------------------------------------------------------------------
# C5 compatibility
# ---------------------------------------------------------------------------

ANY_TYPE = tuple(range(32))


def _types(*sets: Tuple[int, ...]) -> Tuple[int, ...]:
    return tuple(type_mask(s) for s in sets)


# (type of v, v~w, types of w listed as compatible), up to the symmetries fixing v's type
LISTED_COMPATIBLE: Tuple[Tuple[Tuple[int, ...], bool, Tuple[int, ...]], ...] = (
    ((), True, _types((1, 2, 3), (1, 2, 3, 4), (1, 2, 3, 4, 5))),
    ((), False, ANY_TYPE),
    ((1,), True, _types((3, 4), (1, 2, 3, 4, 5))),
    ((1,), False, _types((), (1,), (1, 2), (1, 3), (1, 4), (1, 5), (3, 4), (1, 2, 4), (1, 2, 5), (1, 3, 4),
                         (1, 3, 5), (1, 2, 3, 4, 5))),
    ((1, 2), True, _types((4,), (1, 2), (1, 2, 3), (1, 2, 4), (1, 2, 5), (1, 2, 3, 4), (1, 2, 3, 5),
                          (1, 2, 4, 5), (1, 2, 3, 4, 5))),
    ((1, 2), False, _types((), (1,), (4,), (1, 2), (1, 4), (2, 4), (1, 2, 4))),
    ((1, 3), True, _types((1, 3, 4, 5), (1, 2, 3, 4, 5))),
    ((1, 3), False, _types((), (1,), (3,), (1, 3), (1, 4), (1, 5), (3, 4), (3, 5), (1, 3, 4), (1, 3, 5),
                           (1, 2, 3, 4, 5))),
    ((1, 2, 3), True, _types((), (1, 2), (2, 3), (1, 2, 3), (1, 2, 4), (1, 2, 5), (2, 3, 4), (2, 3, 5),
                             (1, 2, 3, 4), (1, 2, 3, 5), (1, 2, 3, 4, 5))),
    ((1, 2, 3), False, _types((), (2,))),
    ((1, 2, 4), True, _types((1, 2), (1, 2, 3), (1, 2, 4), (1, 2, 5), (1, 2, 3, 4), (1, 2, 3, 5), (1, 2, 4, 5),
                             (1, 2, 3, 4, 5))),
    ((1, 2, 4), False, _types((), (1,), (2,), (4,), (1, 2), (1, 4), (2, 4), (1, 2, 4), (1, 2, 3, 5))),
    ((1, 2, 3, 4), True, _types((1, 2), (1, 4), (2, 3), (3, 4), (1, 2, 3), (2, 3, 4), (1, 2, 4), (1, 3, 4),
                                (2, 3, 5), (1, 2, 3, 4), (1, 2, 3, 4, 5))),
    ((1, 2, 3, 4), False, _types((), (2, 3, 5))),
    ((1, 2, 3, 4, 5), True, ANY_TYPE),
    ((1, 2, 3, 4, 5), False, _types((), (1,), (2,), (3,), (4,), (5,), (1, 3), (1, 4), (2, 4), (2, 5), (3, 5))),
)

KNOWN_INCOMPATIBLE = (((), True, (1,)),)


def listed_closure() -> Set[Tuple[int, bool, int]]:
    """Listed ``(t1, adjacent, t2)`` triples closed under rotation, reflection, swapping v and w, and complementation."""
    frontier = [(type_mask(v_type), adjacent, t2) for v_type, adjacent, listed in LISTED_COMPATIBLE for t2 in listed]
    closure = set(frontier)
    while frontier:
        t1, adjacent, t2 = frontier.pop()
        images = [(t2, adjacent, t1), (complement_type(t1), not adjacent, complement_type(t2))]
        images += [(relabel_type(t1, s), adjacent, relabel_type(t2, s)) for s in DIHEDRAL]
        for image in images:
            if image not in closure:
                closure.add(image)
                frontier.append(image)
    return closure


@suite("c5-compatibility")
def _c5_compatibility(ctx: SuiteContext) -> None:
    """Computed compatibility against the listed rows and their symmetric images."""
    F = ctx.obstructions("hng1", max(7, min(ctx.nmax, FULL_OBSTRUCTION_ORDER)))
    memo = InvariantMemo()
    rows = []
    derived = listed_closure()
    for v_type, adjacent, listed in LISTED_COMPATIBLE:
        t1 = type_mask(v_type)
        computed = set(compatible_types(t1, adjacent, F, memo))
        missing = sorted(set(listed) - computed)
        unlisted = sorted(t2 for t2 in computed if (t1, adjacent, t2) not in derived)
        for t2 in missing:
            ctx.report.fail("", "listed type pair is not compatible", v_type=list(v_type), adjacent=adjacent, w_type=t2)
        for t2 in unlisted:
            ctx.report.fail("", "compatible type pair is neither listed nor a symmetric image of a listed pair",
                            v_type=list(v_type), adjacent=adjacent, w_type=t2)
        rows.append({"v_type": str(sorted(v_type)), "adjacent": adjacent, "listed": len(listed),
                     "computed": len(computed), "unlisted_compatible": len(unlisted)})
    for v_type, adjacent, w_type in KNOWN_INCOMPATIBLE:
        if type_compatible(type_mask(v_type), adjacent, type_mask(w_type), F, memo):
            ctx.report.fail("", "type pair expected to be incompatible", v_type=list(v_type), w_type=list(w_type))
    ctx.report.details["rows"] = rows

    table = {(t1, adj, t2): type_compatible(t1, adj, t2, F) for t1 in range(32) for adj in (False, True) for t2 in range(32)}
    for (t1, adj, t2), ok in table.items():
        checks = [table[(t2, adj, t1)], table[(complement_type(t1), not adj, complement_type(t2))]]
        checks += [table[(relabel_type(t1, s), adj, relabel_type(t2, s))] for s in DIHEDRAL]
        if any(c != ok for c in checks):
            ctx.report.fail("", "compatibility not invariant under symmetry", v_type=t1, adjacent=adj, w_type=t2)
    ctx.report.details.update(pairs_checked=len(table), compatible=sum(table.values()), memo_entries=len(memo))


# ---------------------------------------------------------------------------
# Apex-perfection and the χ bound
# ---------------------------------------------------------------------------


@suite("apex-perfect")
def _apex_perfect(ctx: SuiteContext) -> None:
    members = imperfect = 0
    for g in ctx.graphs():
        if not in_hng(g, 1):
            continue
        members += 1
        g6 = graph6_encode(g)
        try:
            witness = apex_perfect_witness(g)
        except NotInClass as e:
            ctx.report.fail(g6, "no apex-perfect witness", error=str(e))
            continue
        if not is_apex_perfect(g):
            ctx.report.fail(g6, "witness found but no single deletion is perfect")
        if not witness.already_perfect:
            imperfect += 1
            if omega_preserving_apex(g) is None:
                ctx.report.fail(g6, "no perfect deletion at a C5 keeps ω")
    ctx.report.details.update(members=members, imperfect=imperfect)


@suite("chi-bound")
def _chi_bound(ctx: SuiteContext) -> None:
    members = attained = 0
    max_gap = 0
    example = ""
    for g in ctx.graphs():
        t = build_tables(g)
        if t.hereditary()[0] > 1:
            continue
        members += 1
        gap = int(t.chi[t.full]) - int(t.omega[t.full])
        if gap > 1:
            ctx.report.fail(graph6_encode(g), "χ exceeds ω+1", chi=int(t.chi[t.full]), omega=int(t.omega[t.full]))
        if gap == 1:
            attained += 1
            example = example or graph6_encode(g)
        max_gap = max(max_gap, gap)
    if ctx.nmax >= 5 and max_gap < 1:
        ctx.report.fail("", "χ = ω+1 is never attained")
    ctx.report.details.update(members=members, max_gap=max_gap, attained=attained, first_attained=example)


# ---------------------------------------------------------------------------
# Cycle families and the characterisations
# ---------------------------------------------------------------------------


@suite("cycle-families")
def _cycle_families(ctx: SuiteContext) -> None:
    """Every family instance up to order 10 is in 1-HNG."""
    F = ctx.obstructions("hng1") if ctx.nmax >= FULL_OBSTRUCTION_ORDER else None
    memo = InvariantMemo()
    ctx.report.bounds["family_max_order"] = FAMILY_MAX_ORDER
    rows = []
    for family in CycleFamily:
        count = 0
        for spec in family_specs(family, FAMILY_MAX_ORDER - 5):
            g = generate_family(spec)
            g6 = graph6_encode(g)
            count += 1
            if hereditary_ng_defect(g, memo).hereditary_defect > 1:
                ctx.report.fail(g6, f"{family.value} instance leaves 1-HNG")
            if F is not None and not is_1hng_fast(g, F):
                ctx.report.fail(g6, f"{family.value} instance contains an obstruction")
            if not family_match(g, family):
                ctx.report.fail(g6, f"{family.value} instance not recognised by its matcher")
        rows.append({"family": family.value, "instances": count})
    ctx.report.details.update(per_family=rows, distinct_graphs=len(memo), memo_hits=memo.hits)
    if F is None:
        ctx.report.details["fast_check"] = "skipped: obstruction set mined below order 8"


NAMED_LINE_OBSTRUCTIONS = {
    "3P3": union(path(3), path(3), path(3)),
    "P5+P3": union(path(5), path(3)),
    "P7": path(7),
    "C6": cycle(6),
    "K4": complete(4),
    "C4+P3": union(cycle(4), path(3)),
    "2K3": union(complete(3), complete(3)),
    "2K1,3": union(claw(), claw()),
    "K2,3": complete_bipartite(2, 3),
    "K3+K1,3": union(complete(3), claw()),
}


def _check_all(ctx: SuiteContext, theorem: str, sets: Dict[str, ObstructionSet], graphs) -> int:
    checked = 0
    for g in graphs:
        checked += 1
        result = check_characterization(theorem, g, sets)
        if not result.consistent:
            ctx.report.fail(result.graph6, f"{theorem} clauses disagree", **result.clauses)
    return checked


@suite("line-graphs")
def _line_graphs(ctx: SuiteContext) -> None:
    A = ctx.obstructions("line")
    ctx.report.bounds["max_edges"] = config.LINE_EDGE_CAP
    if config.LINE_EDGE_CAP >= 8 and len(A) != 16:
        ctx.report.fail("", "line-graph obstruction set does not have 16 members", found=len(A))
    codes = set(A.members)
    for name, h in NAMED_LINE_OBSTRUCTIONS.items():
        if h.edge_count <= config.LINE_EDGE_CAP and canonical_code(h) not in codes:
            ctx.report.fail(graph6_encode(h), f"{name} missing from line-graph obstructions")
    sets = {"line": A}
    if ctx.nmax * (ctx.nmax - 1) // 2 > config.SCAN_ORDER_CAP:
        sets["hng1"] = ctx.obstructions("hng1")
    by_order = _check_all(ctx, "line", sets, ctx.graphs())
    small = [g for graphs in graphs_by_edges(config.LINE_EDGE_CAP).values() for g in graphs]
    by_edges = _check_all(ctx, "line", sets, small)
    ctx.report.details.update(members=A.graph6_lines(), graphs_by_order=by_order, graphs_by_edges=by_edges)


@suite("claw-free")
def _claw_free(ctx: SuiteContext) -> None:
    B = ctx.obstructions("claw", min(ctx.nmax, FULL_OBSTRUCTION_ORDER))
    if ctx.nmax >= FULL_OBSTRUCTION_ORDER and len(B) != CLAW_SET_SIZE:
        ctx.report.fail("", f"claw-free obstruction set does not have {CLAW_SET_SIZE} members", found=len(B))
    checked = _check_all(ctx, "claw", {"claw": B}, ctx.graphs())
    ctx.report.details.update(members=len(B), graphs_checked=checked)


@suite("triangle-free")
def _triangle_free(ctx: SuiteContext) -> None:
    T = ctx.obstructions("triangle", min(ctx.nmax, FULL_OBSTRUCTION_ORDER))
    triangle = canonical_code(complete(3))
    others = [c.to_graph() for c in T.members if c != triangle]
    if triangle not in T:
        ctx.report.fail("", "K3 missing from triangle-free obstructions")
    if ctx.nmax >= 6 and len(others) != 12:
        ctx.report.fail("", "triangle-free obstructions besides K3 are not 12", found=len(others))
    for g in others:
        if g.order != 6 or chromatic_number(g) > 2 or matching_number(g) != 3:
            ctx.report.fail(graph6_encode(g), "triangle-free obstruction is not bipartite of order 6 with ν=3")
    checked = _check_all(ctx, "triangle", {"triangle": T}, ctx.graphs())
    ctx.report.details.update(members=len(T), graphs_checked=checked)


@suite("bipartite-doublestar")
def _bipartite_doublestar(ctx: SuiteContext) -> None:
    """Bipartite without a 3K2 subgraph exactly when a vertex pair covers every edge."""
    checked = 0
    for g in ctx.graphs():
        checked += 1
        lhs = chromatic_number(g) <= 2 and matching_number(g) < 3
        rhs = is_biclique_or_doublestar_subgraph(g)
        if lhs != rhs.any:
            ctx.report.fail(graph6_encode(g), "bipartite shape test disagrees", bipartite_no_3k2=lhs, **rhs.to_dict())
    ctx.report.details["graphs_checked"] = checked


# ---------------------------------------------------------------------------
# Fast algorithms and the class chain
# ---------------------------------------------------------------------------


def _compare_fast(ctx: SuiteContext, g: Graph, F: ObstructionSet, exact: Dict[str, int]) -> None:
    g6 = graph6_encode(g)
    try:
        fast = fast_invariants(g, F).to_dict()
    except NotInClass as e:
        ctx.report.fail(g6, "fast algorithms rejected a 1-HNG graph", error=str(e))
        return
    wrong = {k: {"fast": fast[k], "exact": exact[k]} for k in exact if fast[k] != exact[k]}
    if wrong:
        ctx.report.fail(g6, "fast invariant differs from exact value", **wrong)


@suite("fast-algorithms")
def _fast_algorithms(ctx: SuiteContext) -> None:
    F = ctx.hng1()
    members = 0
    with ctx.report.phase("exhaustive"):
        for g in ctx.graphs():
            t = build_tables(g)
            brute = t.hereditary()[0] <= 1
            fast = is_1hng_fast(g, F)
            if brute != fast:
                ctx.report.fail(graph6_encode(g), "fast membership differs", fast=fast, brute=brute)
            if not brute:
                continue
            members += 1
            _compare_fast(ctx, g, F, _full_tables(g))
            if not t.perfect() and omega_preserving_apex(g) is None:
                ctx.report.fail(graph6_encode(g), "no ω-preserving perfect deletion")
    ctx.report.details["members_checked"] = members
    if ctx.nmax < FULL_OBSTRUCTION_ORDER:
        ctx.report.details["sampling"] = "skipped: obstruction set mined below order 8"
        return
    rng = ctx.rng()
    memo = InvariantMemo()
    max_order = max(ctx.options.sample_orders)
    with ctx.report.phase("sampled"):
        for _ in range(ctx.options.samples):
            g = generate_family(random_family_spec(rng, max_order))
            g = relabel(g, [int(v) for v in rng.permutation(g.order)])
            exact = memo.get_or_compute(("exact", canonical_code(g)), lambda: _full_tables(g))
            _compare_fast(ctx, g, F, exact)
    ctx.report.details.update(family_samples=ctx.options.samples, distinct_samples=len(memo))


@suite("class-chain")
def _class_chain(ctx: SuiteContext) -> None:
    """threshold ⊂ split ⊂ chordal ⊂ weakly chordal ⊂ perfect ⊂ apex-perfect, plus
    the pseudo-split and ω+α facts."""
    counts = {name: 0 for name in ("threshold", "split", "chordal", "weakly_chordal", "perfect", "apex_perfect")}
    checked = 0
    for g in ctx.graphs():
        checked += 1
        g6 = graph6_encode(g)
        t = build_tables(g)
        full = t.full
        flags = {
            "threshold": is_threshold(g),
            "split": is_split(g),
            "chordal": is_chordal(g),
            "weakly_chordal": is_weakly_chordal(g),
            "perfect": is_perfect(g),
            "apex_perfect": is_apex_perfect(g),
        }
        names = list(flags)
        for small, big in zip(names, names[1:]):
            if flags[small] and not flags[big]:
                ctx.report.fail(g6, f"{small} graph is not {big}")
        for name, value in flags.items():
            counts[name] += value
        if flags["perfect"] != t.perfect():
            ctx.report.fail(g6, "hole test and definitional perfectness disagree")
        defect = int(t.defect()[full])
        if flags["split"] and t.hereditary()[0] > 1:
            ctx.report.fail(g6, "split graph outside 1-HNG")
        if is_pseudo_split(g):
            if defect > 1:
                ctx.report.fail(g6, "pseudo-split graph with χ+θ < n", defect=defect)
            if not is_c5_free(g) and defect != 0:
                ctx.report.fail(g6, "pseudo-split graph with a C5 and χ+θ ≠ n+1", defect=defect)
        sums = t.omega + t.alpha
        if int(sums[full]) > g.order + 1:
            ctx.report.fail(g6, "ω+α exceeds n+1")
        tight = bool(np.all(sums[1:] == t.popcount[1:] + 1))
        if tight != flags["threshold"]:
            ctx.report.fail(g6, "hereditary ω+α = n+1 differs from threshold", tight=tight)
    ctx.report.details.update(graphs_checked=checked, class_sizes=[{"class": k, "graphs": v} for k, v in counts.items()])
