"""Nordhaus-Gaddum defect and hereditary membership.

``ng_defect(g) = n + 1 - χ(g) - θ(g)``. A graph is in a-NG when its defect is
at most ``a`` and in a-HNG when every nonempty induced subgraph is.
"""
from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, Iterable, List, Optional, Tuple

from hng_canon import canonical_code
from hng_graph import Graph, cycle, graph6_encode, iter_bits, path
from hng_invariants import InvariantMemo, chromatic_number, clique_cover_number
from hng_subsets import build_tables
from hng_types import DefectPayload
from hng_validation import bounded_int

logger = logging.getLogger("hng")


@dataclass(frozen=True)
class DefectReport:
    defect: int
    hereditary_defect: int
    witness: Tuple[int, ...]

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def ng_defect(g: Graph) -> int:
    return g.order + 1 - chromatic_number(g) - clique_cover_number(g)


def in_ng(g: Graph, a: int) -> bool:
    return ng_defect(g) <= a


def _scan(g: Graph) -> DefectReport:
    tables = build_tables(g)
    top, witness = tables.hereditary()
    defect = int(tables.defect()[tables.full]) if g.order else 1
    return DefectReport(defect=defect, hereditary_defect=top, witness=tuple(iter_bits(witness)))


def hereditary_ng_defect(g: Graph, memo: Optional[InvariantMemo] = None) -> DefectReport:
    """Largest defect over nonempty induced subgraphs, with a witness subset.

    The memo, when given, is keyed on canonical codes; witnesses it returns
    refer to the labelling of the graph that first filled the entry, so it is
    only handed in by callers that read the numbers alone.
    """
    if memo is None:
        return _scan(g)
    return memo.get_or_compute(("defect", canonical_code(g)), lambda: _scan(g))


def in_hng(g: Graph, a: int, memo: Optional[InvariantMemo] = None) -> bool:
    """a-HNG membership; stops at the first subset whose defect exceeds ``a``."""
    if memo is not None:
        return hereditary_ng_defect(g, memo).hereditary_defect <= a
    tables = build_tables(g)
    if g.order == 0:
        return a >= 1
    return bool((tables.defect() <= a).all())


def defect_payload(g: Graph) -> DefectPayload:
    report = hereditary_ng_defect(g)
    return DefectPayload(
        graph6=graph6_encode(g),
        defect=report.defect,
        hereditary_defect=report.hereditary_defect,
        witness=list(report.witness),
    )


@dataclass
class InclusionReport:
    a_max: int
    n_max: int
    graphs_checked: int = 0
    counterexamples: List[Dict[str, Any]] = field(default_factory=list)
    witnesses: List[Dict[str, Any]] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.counterexamples

    def to_dict(self) -> Dict[str, Any]:
        data = asdict(self)
        data["passed"] = self.passed
        return data


def check_inclusions(g: Graph, a_max: int) -> List[str]:
    """Chain links ``a-HNG ⊆ a-NG ⊆ (a+1)-HNG`` that fail for ``g``."""
    report = hereditary_ng_defect(g)
    d, h = report.defect, report.hereditary_defect
    broken = []
    for a in range(a_max):
        if h <= a and d > a:
            broken.append(f"{a}-HNG ⊄ {a}-NG")
        if d <= a and h > a + 1:
            broken.append(f"{a}-NG ⊄ {a + 1}-HNG")
    return broken


def strictness_witnesses(a_max: int, order_cap: int = 16) -> List[Dict[str, Any]]:
    """C_{2a+5} ∈ a-NG minus a-HNG and P_{2a+4} ∈ (a+1)-HNG minus a-NG, as far as orders allow."""
    rows = []
    for a in range(a_max):
        for name, g, want_ng, want_hng in (
            (f"C{2 * a + 5}", cycle(2 * a + 5), a, a),
            (f"P{2 * a + 4}", path(2 * a + 4), a, a + 1),
        ):
            if g.order > order_cap:
                continue
            report = hereditary_ng_defect(g)
            if name.startswith("C"):
                ok = report.defect <= want_ng and report.hereditary_defect > want_hng
            else:
                ok = report.hereditary_defect <= want_hng and report.defect > want_ng
            rows.append({
                "a": a,
                "graph": name,
                "graph6": graph6_encode(g),
                "defect": report.defect,
                "hereditary_defect": report.hereditary_defect,
                "ok": ok,
            })
    return rows


def verify_inclusion_chain(a_max: int, n_max: int, graphs: Optional[Iterable[Graph]] = None) -> InclusionReport:
    """Check the inclusion chain on every graph of order ≤ ``n_max``.

    ``graphs`` defaults to the enumerated catalogs.
    """
    a_max = bounded_int(a_max, "a_max", 1)
    n_max = bounded_int(n_max, "n_max", 1, 16)
    if graphs is None:
        from hng_enumeration import iter_graphs

        graphs = iter_graphs(n_max)
    report = InclusionReport(a_max=a_max, n_max=n_max)
    for g in graphs:
        report.graphs_checked += 1
        broken = check_inclusions(g, a_max)
        if broken:
            report.counterexamples.append({"graph6": graph6_encode(g), "clauses": {"broken": broken}})
    report.witnesses = strictness_witnesses(a_max)
    for row in report.witnesses:
        if not row["ok"]:
            report.counterexamples.append({"graph6": row["graph6"], "clauses": row})
    logger.info(
        f"Inclusion chain a<{a_max}, n≤{n_max}: {report.graphs_checked} graphs, "
        f"{len(report.counterexamples)} counterexample(s)"
    )
    return report
