"""Type definitions for JSON payloads written by the toolkit."""
from typing import Any, Dict, List, TypedDict


class InvariantPayload(TypedDict, total=False):
    """One graph's exact invariants."""

    graph6: str
    order: int
    edges: int
    omega: int
    alpha: int
    chi: int
    theta: int
    nu: int
    flags: Dict[str, bool]


class DefectPayload(TypedDict, total=False):
    """Defect report for a single graph."""

    graph6: str
    defect: int
    hereditary_defect: int
    witness: List[int]


class CounterexamplePayload(TypedDict, total=False):
    """A failing graph with the clause values that disagreed."""

    graph6: str
    clauses: Dict[str, Any]
    note: str


class ReportPayload(TypedDict, total=False):
    """Serialized VerificationReport."""

    schema_version: int
    suite: str
    bounds: Dict[str, Any]
    verdict: str
    counterexamples: List[CounterexamplePayload]
    details: Dict[str, Any]
    provenance: Dict[str, str]
    timing_ms: Dict[str, int]


class ObstructionSidecar(TypedDict, total=False):
    """JSON sidecar stored next to an obstruction-set graph6 file."""

    name: str
    format_version: int
    order_kind: str
    counts_by_order: Dict[str, int]
    complement_closed: bool
    provenance: Dict[str, Any]
    hash: str
