"""Induced five-cycles, vertex types relative to them, and the cycle families.

Cycle positions are numbered 1..5 along the cycle (c1c2, c2c3, c3c4, c4c5,
c5c1 are the edges). The type of an outside vertex is the set of positions it
is adjacent to. Relabelling the cycle by one of its ten rotations/reflections
changes types accordingly; most tests below are "for some induced C5 and some
relabelling".
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from enum import Enum
from typing import Dict, FrozenSet, Iterable, Iterator, Optional, Sequence, Tuple

import numpy as np

from hng_config import config
from hng_errors import InvalidFamilyType, OrderCapExceeded
from hng_graph import Graph, VertexRole, from_edges, induced_on_mask, iter_bits, vertex_role

logger = logging.getLogger("hng")

FULL_TYPE = 0b11111

# sigma[j] = old index for new index j, over 0-based positions
DIHEDRAL: Tuple[Tuple[int, ...], ...] = tuple(
    tuple((s * j + r) % 5 for j in range(5)) for s in (1, -1) for r in range(5)
)


def type_mask(positions: Iterable[int]) -> int:
    """1-based cycle positions to a 5-bit mask."""
    mask = 0
    for p in positions:
        if not isinstance(p, int) or not 1 <= p <= 5:
            raise InvalidFamilyType(f"cycle position {p!r} is not in 1..5")
        mask |= 1 << (p - 1)
    return mask


def type_positions(mask: int) -> FrozenSet[int]:
    return frozenset(i + 1 for i in range(5) if mask >> i & 1)


def relabel_type(mask: int, sigma: Sequence[int]) -> int:
    return sum(1 << j for j in range(5) if mask >> sigma[j] & 1)


def _type_key(mask: int) -> Tuple[int, Tuple[int, ...]]:
    return mask.bit_count(), tuple(sorted(type_positions(mask)))


# ---------------------------------------------------------------------------
# Finding cycles
# ---------------------------------------------------------------------------


def _cycle_order(g: Graph, subset: Tuple[int, ...]) -> Optional[Tuple[int, ...]]:
    """Cycle order of a 5-vertex subset inducing C5, starting at its smallest
    vertex and heading to the smaller neighbour; None when it is not a C5."""
    mask = sum(1 << v for v in subset)
    for v in subset:
        if (g.rows[v] & mask).bit_count() != 2:
            return None
    start = subset[0]
    order = [start]
    prev, cur = start, min(iter_bits(g.rows[start] & mask))
    while cur != start:
        order.append(cur)
        nxt = [u for u in iter_bits(g.rows[cur] & mask) if u != prev]
        prev, cur = cur, nxt[0]
    return tuple(order)


def induced_c5s(g: Graph) -> Iterator[Tuple[int, ...]]:
    """Every induced C5, once each, in lexicographic order of vertex subsets."""
    candidates = [v for v in range(g.order) if g.degree(v) >= 2]
    for subset in itertools.combinations(candidates, 5):
        order = _cycle_order(g, subset)
        if order is not None:
            yield order


def types_of(g: Graph, c5: Sequence[int]) -> Dict[int, int]:
    """Type mask of every vertex outside ``c5``."""
    inside = set(c5)
    return {
        x: sum(1 << i for i, c in enumerate(c5) if g.rows[x] >> c & 1)
        for x in range(g.order)
        if x not in inside
    }


@dataclass(frozen=True)
class C5TypeProfile:
    c5: Tuple[int, ...]
    types: Dict[int, FrozenSet[int]] = field(default_factory=dict)

    @property
    def outside(self) -> Tuple[int, ...]:
        return tuple(sorted(self.types))

    def to_dict(self) -> Dict[str, object]:
        return {
            "c5": list(self.c5),
            "types": {str(v): sorted(t) for v, t in sorted(self.types.items())},
        }


def profile(g: Graph, c5: Sequence[int], normalize: bool = True) -> C5TypeProfile:
    """Type profile of ``g`` against ``c5``; with ``normalize`` the cycle is
    relabelled to the rotation/reflection giving the smallest sorted types."""
    base = types_of(g, c5)
    sigma = DIHEDRAL[0]
    if normalize and base:
        def signature(s: Sequence[int]) -> Tuple:
            return tuple(sorted(_type_key(relabel_type(m, s)) for m in base.values()))

        sigma = min(DIHEDRAL, key=signature)
    cycle = tuple(c5[sigma[j]] for j in range(5))
    return C5TypeProfile(cycle, {x: type_positions(relabel_type(m, sigma)) for x, m in base.items()})


def find_induced_c5(g: Graph) -> Optional[C5TypeProfile]:
    first = next(induced_c5s(g), None)
    if first is None:
        return None
    return profile(g, first)


def c5_gadget(t1: int, adjacent: bool, t2: int) -> Graph:
    """C5 on 0..4, v=5 of type ``t1``, w=6 of type ``t2``; vw an edge iff ``adjacent``."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5, i) for i in range(5) if t1 >> i & 1]
    edges += [(6, i) for i in range(5) if t2 >> i & 1]
    if adjacent:
        edges.append((5, 6))
    return from_edges(7, edges)


# ---------------------------------------------------------------------------
# Families
# ---------------------------------------------------------------------------


class CycleFamily(str, Enum):
    """C5 plus a stable set whose types come from a fixed list.

    ``opposite``: {c1,c3}, {c1,c4}, {c1,c3,c4}
    ``anchored``: {c4}, {c1,c4}, {c1,c3,c4}
    ``pendant``:  {c1}, {c1,c3}, {c1,c4}
    """

    OPPOSITE = "opposite"
    ANCHORED = "anchored"
    PENDANT = "pendant"


FAMILY_TYPES: Dict[CycleFamily, Tuple[int, ...]] = {
    CycleFamily.OPPOSITE: (type_mask({1, 3}), type_mask({1, 4}), type_mask({1, 3, 4})),
    CycleFamily.ANCHORED: (type_mask({4}), type_mask({1, 4}), type_mask({1, 3, 4})),
    CycleFamily.PENDANT: (type_mask({1}), type_mask({1, 3}), type_mask({1, 4})),
}

EXCEPTIONAL_SINGLE = frozenset({type_mask({1}), type_mask({1, 3}), type_mask({1, 4}), FULL_TYPE})
EXCEPTIONAL_PAIR = frozenset({type_mask({1, 2, 4}), type_mask({1, 2, 3, 5})})


@dataclass(frozen=True)
class FamilySpec:
    """Family plus how many stable vertices of each allowed type to add.

    ``multiplicities`` maps a type (1-based positions) to a count.
    """

    family: CycleFamily
    multiplicities: Tuple[Tuple[FrozenSet[int], int], ...] = ()

    @classmethod
    def of(cls, family: CycleFamily | str, counts: Dict[Iterable[int], int] | None = None) -> "FamilySpec":
        items = tuple((frozenset(k), int(v)) for k, v in (counts or {}).items())
        return cls(CycleFamily(family), items)

    @property
    def order(self) -> int:
        return 5 + sum(count for _, count in self.multiplicities)


def generate_family(spec: FamilySpec) -> Graph:
    allowed = FAMILY_TYPES[CycleFamily(spec.family)]
    if spec.order > config.ORDER_CAP:
        raise OrderCapExceeded(f"family instance of order {spec.order} exceeds {config.ORDER_CAP}")
    edges = [(i, (i + 1) % 5) for i in range(5)]
    nxt = 5
    for positions, count in spec.multiplicities:
        mask = type_mask(positions)
        if mask not in allowed:
            raise InvalidFamilyType(f"type {sorted(positions)} is not allowed in family {spec.family.value}")
        if count < 0:
            raise InvalidFamilyType(f"negative multiplicity {count} for type {sorted(positions)}")
        for _ in range(count):
            edges += [(nxt, i) for i in range(5) if mask >> i & 1]
            nxt += 1
    return from_edges(nxt, edges)


def family_specs(family: CycleFamily, max_added: int) -> Iterator[FamilySpec]:
    """Every instance of ``family`` with at most ``max_added`` added vertices."""
    types = [type_positions(m) for m in FAMILY_TYPES[family]]
    for total in range(max_added + 1):
        for combo in itertools.combinations_with_replacement(range(len(types)), total):
            counts = {types[i]: combo.count(i) for i in set(combo)}
            yield FamilySpec(family, tuple(sorted(counts.items(), key=lambda kv: sorted(kv[0]))))


def random_family_spec(rng: np.random.Generator, max_order: int) -> FamilySpec:
    family = list(CycleFamily)[int(rng.integers(len(CycleFamily)))]
    added = int(rng.integers(0, max_order - 5 + 1))
    picks = rng.integers(0, 3, size=added)
    types = [type_positions(m) for m in FAMILY_TYPES[family]]
    counts: Dict[FrozenSet[int], int] = {}
    for p in picks:
        counts[types[int(p)]] = counts.get(types[int(p)], 0) + 1
    return FamilySpec(family, tuple(sorted(counts.items(), key=lambda kv: sorted(kv[0]))))


def _stable_outside(g: Graph, c5: Sequence[int]) -> bool:
    outside = g.full_mask & ~sum(1 << c for c in c5)
    return all(not (g.rows[x] & outside) for x in iter_bits(outside))


def match_types(g: Graph, accept) -> Optional[Tuple[int, ...]]:
    """First induced C5 (relabelled) whose outside set is stable and whose
    outside types satisfy ``accept(set_of_type_masks)``."""
    for c5 in induced_c5s(g):
        if not _stable_outside(g, c5):
            continue
        masks = list(types_of(g, c5).values())
        for sigma in DIHEDRAL:
            relabelled = frozenset(relabel_type(m, sigma) for m in masks)
            if accept(relabelled):
                return tuple(c5[sigma[j]] for j in range(5))
    return None


def family_match(g: Graph, family: CycleFamily | str) -> bool:
    allowed = frozenset(FAMILY_TYPES[CycleFamily(family)])
    return match_types(g, lambda found: found <= allowed) is not None


def in_any_family(g: Graph) -> Optional[CycleFamily]:
    for family in CycleFamily:
        if family_match(g, family):
            return family
    return None


# ---------------------------------------------------------------------------
# Peeling and the exceptional colouring shape
# ---------------------------------------------------------------------------


def peel(g: Graph, isolated: bool = True, dominating: bool = True) -> Graph:
    """Repeatedly drop isolated and/or dominating vertices."""
    wanted = set()
    if isolated:
        wanted.add(VertexRole.ISOLATED)
    if dominating:
        wanted.add(VertexRole.DOMINATING)
    while g.order:
        drop = [v for v in range(g.order) if vertex_role(g, v) in wanted]
        if g.order == 1 and VertexRole.DOMINATING in wanted:
            drop = [0]
        if not drop:
            break
        g = induced_on_mask(g, g.full_mask & ~(1 << drop[0]))
    return g


def _exceptional_types(found: FrozenSet[int]) -> bool:
    if found <= EXCEPTIONAL_SINGLE:
        return True
    return found == EXCEPTIONAL_PAIR


def exceptional_shape(g: Graph) -> bool:
    """C5 plus a stable set of the types that force one colour above ω,
    after stripping isolated and dominating vertices.

    This is the shape of the whole graph; ``chromatic_cores`` is what decides
    χ when the C5 part sits inside a larger 1-HNG graph.
    """
    core = peel(g)
    return match_types(core, _exceptional_types) is not None


def _is_exceptional_pair(t1: int, t2: int) -> bool:
    return any(frozenset({relabel_type(t1, s), relabel_type(t2, s)}) == EXCEPTIONAL_PAIR for s in DIHEDRAL)


def chromatic_cores(g: Graph) -> Iterator[Tuple[int, int]]:
    """``(ω(core), mask of vertices complete to the core)`` for every colour-critical C5 core.

    A core is an induced C5 on its own (χ 3, ω 2), or an induced C5 with a
    non-adjacent pair of outside vertices whose types are {1,2,4} and
    {1,2,3,5} up to relabelling (χ 4, ω 3). A core joined to a clique of
    vertices complete to it needs one colour more than its clique number.
    """
    for c5 in induced_c5s(g):
        types = types_of(g, c5)
        full = sum(1 << x for x, m in types.items() if m == FULL_TYPE)
        yield 2, full
        pair_sides = [x for x, m in types.items() if m.bit_count() in (3, 4)]
        for u, w in itertools.combinations(pair_sides, 2):
            if not g.has_edge(u, w) and _is_exceptional_pair(types[u], types[w]):
                yield 3, full & g.rows[u] & g.rows[w]
