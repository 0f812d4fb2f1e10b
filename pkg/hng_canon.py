"""Canonical codes, isomorphism and containment search.

The canonical code of a graph is the smallest graph6 bit string reachable by
relabelling the vertices along an ordered equitable partition: start from the
degree partition, split cells by neighbour counts into the other cells until
nothing changes, then individualise each vertex of the first non-singleton
cell in turn and repeat. The ordering of cells depends only on isomorphism
invariants, so every labelled copy of a graph reaches the same set of leaves
and therefore the same minimum.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from hng_graph import Graph, components, graph6_encode, induced_on_mask, iter_bits, relabel

Cell = Tuple[int, ...]


@dataclass(frozen=True, order=True)
class CanonicalCode:
    """Isomorphism-invariant key: order plus the smallest upper-triangle bits
    over the refinement leaves. This is not in general the minimum over all n!
    labellings; ``exhaustive_code`` is, and the two agree on which graphs share
    a code.

    Bits are read in graph6 column order, most significant first, so codes of
    equal order sort the same way their canonical graph6 strings do.
    """

    order: int
    bits: int

    def to_graph(self) -> Graph:
        n = self.order
        total = n * (n - 1) // 2
        rows = [0] * n
        k = total - 1
        for j in range(1, n):
            for i in range(j):
                if self.bits >> k & 1:
                    rows[i] |= 1 << j
                    rows[j] |= 1 << i
                k -= 1
        return Graph(n, tuple(rows))

    @property
    def graph6(self) -> str:
        return graph6_encode(self.to_graph())


def _leaf_bits(rows: Sequence[int], order: Sequence[int]) -> int:
    bits = 0
    for j in range(1, len(order)):
        rj = rows[order[j]]
        for i in range(j):
            bits = bits << 1 | (rj >> order[i] & 1)
    return bits


def _refine(rows: Sequence[int], cells: List[Cell]) -> List[Cell]:
    while True:
        masks = [sum(1 << v for v in cell) for cell in cells]
        split: List[Cell] = []
        changed = False
        for cell in cells:
            if len(cell) == 1:
                split.append(cell)
                continue
            groups: Dict[Tuple[int, ...], List[int]] = {}
            for v in cell:
                key = tuple((rows[v] & m).bit_count() for m in masks)
                groups.setdefault(key, []).append(v)
            if len(groups) == 1:
                split.append(cell)
            else:
                changed = True
                split.extend(tuple(groups[key]) for key in sorted(groups))
        cells = split
        if not changed:
            return cells


def _twins(rows: Sequence[int], u: int, v: int) -> bool:
    return rows[u] & ~(1 << v) == rows[v] & ~(1 << u)


def _search(rows: Sequence[int], cells: List[Cell], best: List[Optional[Tuple[int, Tuple[int, ...]]]]) -> None:
    cells = _refine(rows, cells)
    target = next((i for i, cell in enumerate(cells) if len(cell) > 1), None)
    if target is None:
        order = tuple(cell[0] for cell in cells)
        bits = _leaf_bits(rows, order)
        if best[0] is None or bits < best[0][0]:
            best[0] = (bits, order)
        return
    cell = cells[target]
    tried: List[int] = []
    for v in cell:
        # swapping twins is an automorphism that fixes the partition
        if any(_twins(rows, u, v) for u in tried):
            continue
        tried.append(v)
        rest = tuple(u for u in cell if u != v)
        _search(rows, cells[:target] + [(v,), rest] + cells[target + 1:], best)


def _canonical_leaf(g: Graph) -> Tuple[int, Tuple[int, ...]]:
    if g.order == 0:
        return 0, ()
    rows = g.rows
    by_degree: Dict[int, List[int]] = {}
    for v in range(g.order):
        by_degree.setdefault(rows[v].bit_count(), []).append(v)
    cells = [tuple(by_degree[d]) for d in sorted(by_degree)]
    best: List[Optional[Tuple[int, Tuple[int, ...]]]] = [None]
    _search(rows, cells, best)
    assert best[0] is not None
    return best[0]


def canonical_code(g: Graph) -> CanonicalCode:
    bits, _ = _canonical_leaf(g)
    return CanonicalCode(g.order, bits)


def canonical_graph(g: Graph) -> Graph:
    """The relabelled copy of ``g`` whose graph6 string is its canonical one."""
    _, order = _canonical_leaf(g)
    return relabel(g, order)


def canonical_graph6(g: Graph) -> str:
    return canonical_code(g).graph6


def exhaustive_code(g: Graph) -> CanonicalCode:
    """Minimum over every permutation; the auditing oracle for small orders.

    Its values differ from ``canonical_code``, its equivalence classes do not.
    """
    best = min(_leaf_bits(g.rows, perm) for perm in itertools.permutations(range(g.order)))
    return CanonicalCode(g.order, best) if g.order else CanonicalCode(0, 0)


def labelled_code(g: Graph) -> CanonicalCode:
    """Code of ``g`` under its own labelling; equals canonical_code for stored canonical graphs."""
    return CanonicalCode(g.order, _leaf_bits(g.rows, range(g.order)))


def component_key(g: Graph) -> Tuple[CanonicalCode, ...]:
    """Sorted canonical codes of the components; an isomorphism key that stays
    cheap on graphs made of many small identical components."""
    return tuple(sorted(canonical_code(induced_on_mask(g, comp)) for comp in components(g)))


def are_isomorphic(a: Graph, b: Graph) -> bool:
    if a.order != b.order or a.edge_count != b.edge_count:
        return False
    if sorted(a.degrees()) != sorted(b.degrees()):
        return False
    return canonical_code(a) == canonical_code(b)


# ---------------------------------------------------------------------------
# Containment
# ---------------------------------------------------------------------------


def _pattern_order(pattern: Graph) -> List[int]:
    """Degree-descending order that keeps each vertex attached to earlier ones when possible."""
    remaining = set(range(pattern.order))
    placed_mask = 0
    order: List[int] = []
    while remaining:
        v = max(
            remaining,
            key=lambda u: ((pattern.rows[u] & placed_mask).bit_count(), pattern.degree(u), -u),
        )
        order.append(v)
        remaining.discard(v)
        placed_mask |= 1 << v
    return order


def contains_induced(host: Graph, pattern: Graph) -> Optional[Tuple[int, ...]]:
    """Vertex subset of ``host`` inducing a copy of ``pattern``, or None.

    The first witness in ascending candidate order is returned, sorted.
    """
    p, h = pattern.order, host.order
    if p == 0:
        return ()
    if p > h or pattern.edge_count > host.edge_count:
        return None
    seq = _pattern_order(pattern)
    full = host.full_mask
    non_rows = [full & ~row & ~(1 << v) for v, row in enumerate(host.rows)]
    host_deg = host.degrees()
    allowed = []
    for v in seq:
        deg, non = pattern.degree(v), p - 1 - pattern.degree(v)
        allowed.append(sum(1 << x for x in range(h) if host_deg[x] >= deg and h - 1 - host_deg[x] >= non))
    adjacent = [[pattern.has_edge(seq[i], seq[j]) for j in range(i)] for i in range(p)]
    mapped = [0] * p

    def extend(i: int, used: int) -> bool:
        if i == p:
            return True
        cand = allowed[i] & ~used
        for j in range(i):
            cand &= host.rows[mapped[j]] if adjacent[i][j] else non_rows[mapped[j]]
            if not cand:
                return False
        for x in iter_bits(cand):
            mapped[i] = x
            if extend(i + 1, used | 1 << x):
                return True
        return False

    if extend(0, 0):
        return tuple(sorted(mapped))
    return None


def contains_subgraph(host: Graph, pattern: Graph) -> Optional[Tuple[int, ...]]:
    """Injective edge-preserving map (``result[v]`` is the image of pattern vertex v), or None."""
    p, h = pattern.order, host.order
    if p == 0:
        return ()
    if p > h or pattern.edge_count > host.edge_count:
        return None
    seq = _pattern_order(pattern)
    host_deg = host.degrees()
    allowed = [sum(1 << x for x in range(h) if host_deg[x] >= pattern.degree(v)) for v in seq]
    adjacent = [[pattern.has_edge(seq[i], seq[j]) for j in range(i)] for i in range(p)]
    mapped = [0] * p

    def extend(i: int, used: int) -> bool:
        if i == p:
            return True
        cand = allowed[i] & ~used
        for j in range(i):
            if adjacent[i][j]:
                cand &= host.rows[mapped[j]]
        for x in iter_bits(cand):
            mapped[i] = x
            if extend(i + 1, used | 1 << x):
                return True
        return False

    if not extend(0, 0):
        return None
    image = [0] * p
    for i, v in enumerate(seq):
        image[v] = mapped[i]
    return tuple(image)
