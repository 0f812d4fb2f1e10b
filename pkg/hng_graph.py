"""Simple undirected graphs on at most 32 vertices, plus graph6 I/O.

A graph is stored as one adjacency bitmask per vertex. Every operation is a
pure function returning a new immutable ``Graph``.
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, List, Sequence, Tuple

from hng_config import config
from hng_errors import MalformedGraph6, OrderCapExceeded, ParameterOutOfRange
from hng_validation import bounded_int, check_vertex, check_vertex_subset


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def _check_order(order: int) -> int:
    if order > config.ORDER_CAP:
        raise OrderCapExceeded(f"order {order} exceeds the cap of {config.ORDER_CAP}")
    if order < 0:
        raise ParameterOutOfRange(f"order must be non-negative, got {order}")
    return order


@dataclass(frozen=True)
class Graph:
    """Finite simple graph; ``rows[v]`` is the neighbourhood bitmask of v."""

    order: int
    rows: Tuple[int, ...]

    def __post_init__(self) -> None:
        _check_order(self.order)
        if len(self.rows) != self.order:
            raise ParameterOutOfRange(f"expected {self.order} adjacency rows, got {len(self.rows)}")
        full = (1 << self.order) - 1
        for v, row in enumerate(self.rows):
            if row & ~full or row >> v & 1:
                raise ParameterOutOfRange(f"row {v} has a loop or an out-of-range neighbour")
            for u in iter_bits(row):
                if not self.rows[u] >> v & 1:
                    raise ParameterOutOfRange(f"adjacency is not symmetric at ({u}, {v})")

    @property
    def full_mask(self) -> int:
        return (1 << self.order) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, v: int) -> int:
        return self.rows[v].bit_count()

    def neighbors(self, v: int) -> Tuple[int, ...]:
        return tuple(iter_bits(self.rows[v]))

    def edges(self) -> List[Tuple[int, int]]:
        return [(u, v) for v in range(self.order) for u in iter_bits(self.rows[v]) if u < v]

    @property
    def edge_count(self) -> int:
        return sum(row.bit_count() for row in self.rows) // 2

    def degrees(self) -> Tuple[int, ...]:
        return tuple(row.bit_count() for row in self.rows)

    def __repr__(self) -> str:
        return f"Graph(order={self.order}, graph6={graph6_encode(self)!r})"


def from_edges(order: int, edges: Iterable[Tuple[int, int]]) -> Graph:
    _check_order(order)
    rows = [0] * order
    for u, v in edges:
        check_vertex(order, u)
        check_vertex(order, v)
        if u == v:
            raise ParameterOutOfRange(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(order, tuple(rows))


def relabel(g: Graph, order: Sequence[int]) -> Graph:
    """New graph whose vertex i is ``order[i]`` of ``g``; ``order`` must be a permutation."""
    pos = {v: i for i, v in enumerate(order)}
    rows = []
    for v in order:
        row = 0
        for u in iter_bits(g.rows[v]):
            row |= 1 << pos[u]
        rows.append(row)
    return Graph(g.order, tuple(rows))


# ---------------------------------------------------------------------------
# Named families
# ---------------------------------------------------------------------------


class FamilyKind(str, Enum):
    CYCLE = "cycle"
    PATH = "path"
    COMPLETE = "complete"
    COMPLETE_BIPARTITE = "complete-bipartite"
    EMPTY = "empty"
    CLAW = "claw"
    DOUBLE_STAR = "double-star"
    SUN_WITH_PENDANT = "sun-with-pendant"
    UNION = "disjoint-union-expression"


@dataclass(frozen=True)
class NamedFamily:
    """A named graph: ``kind`` plus integer ``params``.

    For ``disjoint-union-expression`` the parts are given in ``parts`` instead.
    """

    kind: FamilyKind
    params: Tuple[int, ...] = ()
    parts: Tuple["NamedFamily", ...] = ()


_ARITY = {
    FamilyKind.CYCLE: (1, 3),
    FamilyKind.PATH: (1, 1),
    FamilyKind.COMPLETE: (1, 0),
    FamilyKind.COMPLETE_BIPARTITE: (2, 0),
    FamilyKind.EMPTY: (1, 0),
    FamilyKind.CLAW: (0, 0),
    FamilyKind.DOUBLE_STAR: (2, 1),
    FamilyKind.SUN_WITH_PENDANT: (0, 0),
}


def construct_named(family: NamedFamily) -> Graph:
    """Build a named graph.

    Labelling: cycles and paths in traversal order; complete bipartite
    ``K_{a,b}`` with the a-side first; claw centre first; double-star centres
    first (vertex 0 has degree ``m``, vertex 1 degree ``k``), then the leaves of
    vertex 0, then those of vertex 1; sun-with-pendant as triangle a,b,c
    (0,1,2), then x,y,z (3,4,5) with x~a,b, y~b,c, z~c,a, then the pendant on x.
    """
    kind = FamilyKind(family.kind)
    if kind is FamilyKind.UNION:
        result = Graph(0, ())
        for part in family.parts:
            result = disjoint_union(result, construct_named(part))
        return result

    arity, low = _ARITY[kind]
    if len(family.params) != arity:
        raise ParameterOutOfRange(f"{kind.value} takes {arity} parameter(s), got {len(family.params)}")
    params = [bounded_int(p, f"{kind.value} parameter", low) for p in family.params]

    if kind is FamilyKind.CYCLE:
        n = params[0]
        _check_order(n)
        return from_edges(n, [(i, (i + 1) % n) for i in range(n)])
    if kind is FamilyKind.PATH:
        n = params[0]
        _check_order(n)
        return from_edges(n, [(i, i + 1) for i in range(n - 1)])
    if kind is FamilyKind.COMPLETE:
        n = params[0]
        _check_order(n)
        return from_edges(n, [(u, v) for v in range(n) for u in range(v)])
    if kind is FamilyKind.EMPTY:
        return Graph(_check_order(params[0]), (0,) * params[0])
    if kind is FamilyKind.COMPLETE_BIPARTITE:
        a, b = params
        _check_order(a + b)
        return from_edges(a + b, [(u, a + w) for u in range(a) for w in range(b)])
    if kind is FamilyKind.CLAW:
        return from_edges(4, [(0, 1), (0, 2), (0, 3)])
    if kind is FamilyKind.DOUBLE_STAR:
        m, k = params
        n = _check_order(m + k)
        edges = [(0, 1)]
        edges += [(0, 2 + i) for i in range(m - 1)]
        edges += [(1, 1 + m + i) for i in range(k - 1)]
        return from_edges(n, edges)
    # sun-with-pendant
    return from_edges(7, [(0, 1), (1, 2), (0, 2), (3, 0), (3, 1), (4, 1), (4, 2), (5, 2), (5, 0), (6, 3)])


def cycle(n: int) -> Graph:
    return construct_named(NamedFamily(FamilyKind.CYCLE, (n,)))


def path(n: int) -> Graph:
    return construct_named(NamedFamily(FamilyKind.PATH, (n,)))


def complete(n: int) -> Graph:
    return construct_named(NamedFamily(FamilyKind.COMPLETE, (n,)))


def empty(n: int) -> Graph:
    return construct_named(NamedFamily(FamilyKind.EMPTY, (n,)))


def complete_bipartite(a: int, b: int) -> Graph:
    return construct_named(NamedFamily(FamilyKind.COMPLETE_BIPARTITE, (a, b)))


def claw() -> Graph:
    return construct_named(NamedFamily(FamilyKind.CLAW))


def double_star(m: int, k: int) -> Graph:
    return construct_named(NamedFamily(FamilyKind.DOUBLE_STAR, (m, k)))


def sun_with_pendant() -> Graph:
    return construct_named(NamedFamily(FamilyKind.SUN_WITH_PENDANT))


def union(*graphs: Graph) -> Graph:
    result = Graph(0, ())
    for g in graphs:
        result = disjoint_union(result, g)
    return result


# ---------------------------------------------------------------------------
# Editing
# ---------------------------------------------------------------------------


def complement(g: Graph) -> Graph:
    full = g.full_mask
    return Graph(g.order, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.rows)))


def induced_subgraph(g: Graph, s: Iterable[int]) -> Graph:
    """Restrict to ``s``; new labels follow the ascending order of ``s``."""
    keep = check_vertex_subset(g.order, s)
    return induced_on_mask(g, sum(1 << v for v in keep))


def induced_on_mask(g: Graph, mask: int) -> Graph:
    """Same as induced_subgraph with the subset given as a bitmask (unchecked)."""
    keep = list(iter_bits(mask))
    rows = []
    for v in keep:
        row = g.rows[v] & mask
        new = 0
        for i, u in enumerate(keep):
            if row >> u & 1:
                new |= 1 << i
        rows.append(new)
    return Graph(len(keep), tuple(rows))


def delete_vertex(g: Graph, v: int) -> Graph:
    check_vertex(g.order, v)
    return induced_on_mask(g, g.full_mask & ~(1 << v))


def add_vertex(g: Graph, neighbors: Iterable[int] | int) -> Graph:
    """Append vertex ``g.order`` adjacent to ``neighbors`` (iterable or bitmask)."""
    n = _check_order(g.order + 1)
    if isinstance(neighbors, int):
        if neighbors & ~g.full_mask or neighbors < 0:
            raise ParameterOutOfRange(f"neighbour mask {neighbors:#x} reaches past order {g.order}")
        mask = neighbors
    else:
        mask = sum(1 << u for u in check_vertex_subset(g.order, neighbors))
    rows = [row | ((mask >> v & 1) << g.order) for v, row in enumerate(g.rows)]
    rows.append(mask)
    return Graph(n, tuple(rows))


def disjoint_union(a: Graph, b: Graph) -> Graph:
    n = _check_order(a.order + b.order)
    shift = a.order
    return Graph(n, a.rows + tuple(row << shift for row in b.rows))


class VertexRole(str, Enum):
    ISOLATED = "isolated"
    DOMINATING = "dominating"
    ORDINARY = "ordinary"


def vertex_role(g: Graph, v: int) -> VertexRole:
    """Isolated wins the tie on a one-vertex graph."""
    check_vertex(g.order, v)
    deg = g.degree(v)
    if deg == 0:
        return VertexRole.ISOLATED
    if deg == g.order - 1:
        return VertexRole.DOMINATING
    return VertexRole.ORDINARY


def components(g: Graph) -> List[int]:
    """Connected components as bitmasks, ordered by their smallest vertex."""
    seen = 0
    parts = []
    for v in range(g.order):
        if seen >> v & 1:
            continue
        comp = frontier = 1 << v
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g.rows[u]
            frontier = nxt & ~comp
            comp |= frontier
        seen |= comp
        parts.append(comp)
    return parts


def is_stable_mask(g: Graph, mask: int) -> bool:
    return all(not (g.rows[v] & mask) for v in iter_bits(mask))


def is_clique_mask(g: Graph, mask: int) -> bool:
    return all((g.rows[v] | 1 << v) & mask == mask for v in iter_bits(mask))


# ---------------------------------------------------------------------------
# graph6
# ---------------------------------------------------------------------------


def graph6_encode(g: Graph) -> str:
    """Standard graph6 line (no ``>>graph6<<`` header, no newline)."""
    n = g.order
    out = [chr(n + 63)]
    bits = []
    for j in range(1, n):
        row = g.rows[j]
        for i in range(j):
            bits.append(row >> i & 1)
    bits.extend([0] * (-len(bits) % 6))
    for k in range(0, len(bits), 6):
        value = 0
        for b in bits[k:k + 6]:
            value = value << 1 | b
        out.append(chr(value + 63))
    return "".join(out)


def graph6_decode(text: str) -> Graph:
    line = text.strip()
    if line.startswith(">>graph6<<"):
        line = line[len(">>graph6<<"):]
    if not line:
        raise MalformedGraph6("empty graph6 line")
    if any(not 63 <= ord(ch) <= 126 for ch in line):
        raise MalformedGraph6(f"illegal character in graph6 line {line!r}")
    if line[0] == "~":
        raise OrderCapExceeded(f"graph6 line {line[:8]!r}... encodes an order above {config.ORDER_CAP}")
    n = ord(line[0]) - 63
    _check_order(n)
    nbits = n * (n - 1) // 2
    expected = 1 + (nbits + 5) // 6
    if len(line) != expected:
        raise MalformedGraph6(f"graph6 line for order {n} must have {expected} characters, got {len(line)}")
    bits = []
    for ch in line[1:]:
        value = ord(ch) - 63
        bits.extend(value >> (5 - k) & 1 for k in range(6))
    if any(bits[nbits:]):
        raise MalformedGraph6(f"non-zero padding in graph6 line {line!r}")
    rows = [0] * n
    k = 0
    for j in range(1, n):
        for i in range(j):
            if bits[k]:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
            k += 1
    return Graph(n, tuple(rows))
