"""Structure of 1-HNG: C5 compatibility, apex vertices, the fast invariant
algorithms, line graphs and the clause checkers for the restricted classes.

The fast algorithms take the 1-HNG obstruction set ``F`` when the caller has
one; without it membership is decided by the exact hereditary scan.
"""
from __future__ import annotations

import logging
from dataclasses import asdict, dataclass, field
from typing import Any, Dict, Mapping, Optional, Tuple

from hng_c5 import (
    CycleFamily,
    c5_gadget,
    chromatic_cores,
    family_match,
    in_any_family,
    induced_c5s,
    peel,
)
from hng_canon import canonical_code
from hng_config import config
from hng_errors import MissingObstructionSet, NotInClass, ParameterOutOfRange, TooManyEdges
from hng_graph import Graph, complement, delete_vertex, from_edges, graph6_encode, induced_on_mask
from hng_invariants import InvariantMemo, clique_number, is_claw_free, is_perfect
from hng_membership import in_hng
from hng_miner import ObstructionSet

logger = logging.getLogger("hng")

# c1..c5 of a C5 become these positions of the complementary C5
COMPLEMENT_POSITIONS = (0, 3, 1, 4, 2)


# ---------------------------------------------------------------------------
# Membership
# ---------------------------------------------------------------------------


def is_1hng_fast(g: Graph, F: ObstructionSet) -> bool:
    if F.order_kind != "induced":
        raise ParameterOutOfRange(f"{F.name} is a subgraph-order set; 1-HNG needs the induced set")
    return F.find_in(g) is None


def _require_member(g: Graph, F: Optional[ObstructionSet]) -> None:
    ok = is_1hng_fast(g, F) if F is not None else in_hng(g, 1)
    if not ok:
        raise NotInClass(f"{graph6_encode(g)} is not in 1-HNG")


# ---------------------------------------------------------------------------
# C5 type compatibility
# ---------------------------------------------------------------------------


def complement_type(mask: int) -> int:
    """Type of the same vertex in the complement, against the complementary C5."""
    return sum(1 << COMPLEMENT_POSITIONS[i] for i in range(5) if not mask >> i & 1)


def type_compatible(t1: int, adjacent: bool, t2: int, F: ObstructionSet,
                    memo: Optional[InvariantMemo] = None) -> bool:
    """Whether C5 plus v (type ``t1``) and w (type ``t2``) avoids every member of ``F``.

    Types are 5-bit masks over the cycle positions; see ``hng_c5.type_mask``.
    """
    for t in (t1, t2):
        if not 0 <= t < 32:
            raise ParameterOutOfRange(f"type mask {t} outside 0..31")
    gadget = c5_gadget(t1, adjacent, t2)
    if memo is None:
        return is_1hng_fast(gadget, F)
    return memo.get_or_compute(("compatible", F.name, canonical_code(gadget)), lambda: is_1hng_fast(gadget, F))


def compatible_types(t1: int, adjacent: bool, F: ObstructionSet,
                     memo: Optional[InvariantMemo] = None) -> Tuple[int, ...]:
    return tuple(t2 for t2 in range(32) if type_compatible(t1, adjacent, t2, F, memo))


# ---------------------------------------------------------------------------
# Apex vertices and the fast invariants
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ApexWitness:
    already_perfect: bool
    vertex: Optional[int] = None
    c5: Tuple[int, ...] = ()

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def _first_c5(g: Graph) -> Tuple[int, ...]:
    c5 = next(induced_c5s(g), None)
    if c5 is None:
        # imperfect with no C5 means a longer odd hole or antihole, impossible in 1-HNG
        raise NotInClass(f"{graph6_encode(g)} is imperfect but has no induced C5")
    return c5


def apex_perfect_witness(g: Graph, F: Optional[ObstructionSet] = None) -> ApexWitness:
    """A vertex of the first induced C5 whose deletion leaves a perfect graph."""
    _require_member(g, F)
    if is_perfect(g):
        return ApexWitness(already_perfect=True)
    c5 = _first_c5(g)
    for v in c5:
        if is_perfect(delete_vertex(g, v)):
            return ApexWitness(already_perfect=False, vertex=v, c5=c5)
    raise NotInClass(f"no vertex of {c5} leaves {graph6_encode(g)} perfect")


def omega_preserving_apex(g: Graph) -> Optional[int]:
    """A vertex of the first induced C5 whose deletion is perfect and keeps ω."""
    omega = clique_number(g)
    for v in _first_c5(g):
        h = delete_vertex(g, v)
        if is_perfect(h) and clique_number(h) == omega:
            return v
    return None


def clique_number_fast(g: Graph, F: Optional[ObstructionSet] = None) -> int:
    """ω as the best ω over perfect one-vertex deletions at a C5."""
    _require_member(g, F)
    if is_perfect(g):
        return clique_number(g)
    values = [clique_number(h) for h in (delete_vertex(g, v) for v in _first_c5(g)) if is_perfect(h)]
    if not values:
        raise NotInClass(f"no perfect deletion at a C5 of {graph6_encode(g)}")
    return max(values)


def independence_number_fast(g: Graph, F: Optional[ObstructionSet] = None) -> int:
    return clique_number_fast(complement(g), F)


def chromatic_number_fast(g: Graph, F: Optional[ObstructionSet] = None) -> int:
    """χ = ω, plus one exactly when a C5 core of ``hng_c5.chromatic_cores`` and a
    clique complete to it together reach ω."""
    omega = clique_number_fast(g, F)
    if is_perfect(g):
        return omega
    for core_omega, common in chromatic_cores(g):
        if core_omega + clique_number(induced_on_mask(g, common)) == omega:
            return omega + 1
    return omega


def clique_cover_number_fast(g: Graph, F: Optional[ObstructionSet] = None) -> int:
    return chromatic_number_fast(complement(g), F)


@dataclass(frozen=True)
class FastInvariants:
    omega: int
    alpha: int
    chi: int
    theta: int

    def to_dict(self) -> Dict[str, int]:
        return asdict(self)


def fast_invariants(g: Graph, F: Optional[ObstructionSet] = None) -> FastInvariants:
    _require_member(g, F)
    return FastInvariants(
        omega=clique_number_fast(g, F),
        alpha=independence_number_fast(g, F),
        chi=chromatic_number_fast(g, F),
        theta=clique_cover_number_fast(g, F),
    )


# ---------------------------------------------------------------------------
# Line graphs
# ---------------------------------------------------------------------------


def line_graph(g: Graph) -> Graph:
    """Vertices are the edges of ``g`` in lexicographic order."""
    edges = sorted(g.edges())
    if len(edges) > config.ORDER_CAP:
        raise TooManyEdges(f"{len(edges)} edges; line graphs support at most {config.ORDER_CAP}")
    adjacency = [
        (i, j)
        for j in range(len(edges))
        for i in range(j)
        if set(edges[i]) & set(edges[j])
    ]
    return from_edges(len(edges), adjacency)


# ---------------------------------------------------------------------------
# Bipartite shapes
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class BipartiteClass:
    biclique: bool
    double_star: bool

    @property
    def any(self) -> bool:
        return self.biclique or self.double_star

    def to_dict(self) -> Dict[str, bool]:
        return {"biclique": self.biclique, "double_star": self.double_star, "any": self.any}


def is_biclique_or_doublestar_subgraph(g: Graph) -> BipartiteClass:
    """Subgraph of K_{2,n-2} (a non-adjacent pair covers every edge) and/or of a
    double star (a pair covers every edge and no third vertex sees both)."""
    if g.order <= 1:
        return BipartiteClass(True, True)
    biclique = double_star = False
    for v in range(g.order):
        for u in range(v):
            pair = 1 << u | 1 << v
            if any(g.rows[x] & ~pair for x in range(g.order) if not pair >> x & 1):
                continue
            if not g.has_edge(u, v):
                biclique = True
            if not (g.rows[u] & g.rows[v]):
                double_star = True
            if biclique and double_star:
                return BipartiteClass(True, True)
    return BipartiteClass(biclique, double_star)


# ---------------------------------------------------------------------------
# Clause checkers
# ---------------------------------------------------------------------------

THEOREMS = ("line", "claw", "triangle")


@dataclass
class CharacterizationResult:
    theorem: str
    graph6: str
    clauses: Dict[str, bool] = field(default_factory=dict)

    @property
    def consistent(self) -> bool:
        return len(set(self.clauses.values())) <= 1

    def to_dict(self) -> Dict[str, Any]:
        return {"theorem": self.theorem, "graph6": self.graph6, "clauses": dict(self.clauses),
                "consistent": self.consistent}


def _need(sets: Mapping[str, ObstructionSet], name: str) -> ObstructionSet:
    if name not in sets or sets[name] is None:
        raise MissingObstructionSet(f"obstruction set {name!r} is required; run: hng_cli.py derive --set {name}")
    return sets[name]


def claw_structural_clause(g: Graph) -> bool:
    """Perfect, claw-free and in 1-HNG, or claw-free with a complement that is a
    cycle-family member once isolated and dominating vertices are stripped."""
    if not is_claw_free(g):
        return False
    if is_perfect(g):
        return in_hng(g, 1)
    return in_any_family(complement(peel(g))) is not None


def triangle_structural_clause(g: Graph) -> bool:
    """Subgraph of K_{2,n-2} or a double star, or a pendant-family member up to isolated vertices."""
    if is_biclique_or_doublestar_subgraph(g).any:
        return True
    return family_match(peel(g, dominating=False), CycleFamily.PENDANT)


def check_characterization(theorem: str, g: Graph, sets: Mapping[str, ObstructionSet]) -> CharacterizationResult:
    """Evaluate the mechanised clauses of one characterisation on ``g``."""
    if theorem not in THEOREMS:
        raise ParameterOutOfRange(f"unknown theorem {theorem!r}; choose from {', '.join(THEOREMS)}")
    result = CharacterizationResult(theorem, graph6_encode(g))
    if theorem == "line":
        obstructions = _need(sets, "line")
        lg = line_graph(g)
        if lg.order <= config.SCAN_ORDER_CAP:
            result.clauses["line_graph_in_1hng"] = in_hng(lg, 1)
        else:
            result.clauses["line_graph_in_1hng"] = is_1hng_fast(lg, _need(sets, "hng1"))
        result.clauses["no_forbidden_subgraph"] = obstructions.find_in(g) is None
    elif theorem == "claw":
        obstructions = _need(sets, "claw")
        result.clauses["1hng_and_claw_free"] = in_hng(g, 1) and is_claw_free(g)
        result.clauses["no_forbidden_induced"] = obstructions.find_in(g) is None
        result.clauses["structure"] = claw_structural_clause(g)
    else:
        obstructions = _need(sets, "triangle")
        result.clauses["1hng_and_triangle_free"] = in_hng(g, 1) and clique_number(g) <= 2
        result.clauses["no_forbidden_induced"] = obstructions.find_in(g) is None
        result.clauses["structure"] = triangle_structural_clause(g)
    if not result.consistent:
        logger.warning(f"Clauses of {theorem} disagree on {result.graph6}: {result.clauses}")
    return result

