"""Exact graph invariants and the hereditary class tests built on them."""
from __future__ import annotations

import logging
import threading
from dataclasses import asdict, dataclass, field
from typing import Any, Callable, Dict, Hashable, List, Optional, Tuple

import networkx as nx

from hng_config import config
from hng_errors import OrderCapExceeded
from hng_graph import Graph, claw, complement, complete, cycle, delete_vertex, iter_bits, path, union
from hng_canon import contains_induced
from hng_subsets import build_tables

logger = logging.getLogger("hng")


# ---------------------------------------------------------------------------
# Cliques and stable sets
# ---------------------------------------------------------------------------


def _color_sort(rows: Tuple[int, ...], cand: int) -> Tuple[List[int], List[int]]:
    order: List[int] = []
    bounds: List[int] = []
    color = 0
    uncolored = cand
    while uncolored:
        color += 1
        avail = uncolored
        while avail:
            v = (avail & -avail).bit_length() - 1
            avail &= ~rows[v] & ~(1 << v)
            uncolored &= ~(1 << v)
            order.append(v)
            bounds.append(color)
    return order, bounds


def max_clique(g: Graph) -> Tuple[int, ...]:
    """A maximum clique, by branch and bound with greedy-colouring bounds."""
    rows = g.rows
    best: List[int] = [0, 0]  # size, mask

    def expand(cand: int, size: int, mask: int) -> None:
        order, bounds = _color_sort(rows, cand)
        for i in range(len(order) - 1, -1, -1):
            if size + bounds[i] <= best[0]:
                return
            v = order[i]
            new = cand & rows[v]
            if new:
                expand(new, size + 1, mask | 1 << v)
            elif size + 1 > best[0]:
                best[0], best[1] = size + 1, mask | 1 << v
            cand &= ~(1 << v)

    if g.order:
        expand(g.full_mask, 0, 0)
    return tuple(iter_bits(best[1]))


def clique_number(g: Graph) -> int:
    return len(max_clique(g))


def independence_number(g: Graph) -> int:
    return clique_number(complement(g))


# ---------------------------------------------------------------------------
# Colouring
# ---------------------------------------------------------------------------


def _dsatur_greedy(rows: Tuple[int, ...], n: int) -> int:
    color = [-1] * n
    used = 0
    for _ in range(n):
        best_v, best_key = -1, (-1, -1)
        for v in range(n):
            if color[v] >= 0:
                continue
            sat = {color[u] for u in iter_bits(rows[v]) if color[u] >= 0}
            key = (len(sat), rows[v].bit_count())
            if key > best_key:
                best_v, best_key = v, key
        taken = {color[u] for u in iter_bits(rows[best_v]) if color[u] >= 0}
        c = next(c for c in range(n) if c not in taken)
        color[best_v] = c
        used = max(used, c + 1)
    return used


def _k_colorable(rows: Tuple[int, ...], n: int, k: int, seed: Tuple[int, ...]) -> bool:
    color = [-1] * n
    for c, v in enumerate(seed):
        color[v] = c
    uncolored = ((1 << n) - 1) & ~sum(1 << v for v in seed)

    def search(uncolored: int, used: int) -> bool:
        if not uncolored:
            return True
        pick, pick_forb, pick_key = -1, 0, (-1, -1)
        for v in iter_bits(uncolored):
            forb = 0
            for u in iter_bits(rows[v] & ~uncolored):
                forb |= 1 << color[u]
            key = (forb.bit_count(), (rows[v] & uncolored).bit_count())
            if key > pick_key:
                pick, pick_forb, pick_key = v, forb, key
        if pick_key[0] >= k:
            return False
        rest = uncolored & ~(1 << pick)
        # a fresh colour is only tried once: its label is arbitrary
        for c in range(min(k, used + 1)):
            if pick_forb >> c & 1:
                continue
            color[pick] = c
            if search(rest, max(used, c + 1)):
                return True
        color[pick] = -1
        return False

    return search(uncolored, len(seed))


def chromatic_number(g: Graph) -> int:
    """Iterative deepening from ω up to the DSATUR greedy bound."""
    n = g.order
    if n == 0:
        return 0
    seed = max_clique(g)
    upper = _dsatur_greedy(g.rows, n)
    for k in range(len(seed), upper):
        if _k_colorable(g.rows, n, k, seed):
            return k
    return upper


def clique_cover_number(g: Graph) -> int:
    return chromatic_number(complement(g))


def matching_number(g: Graph) -> int:
    """Maximum matching size, by networkx's blossom matching."""
    G = nx.Graph()
    G.add_nodes_from(range(g.order))
    G.add_edges_from(g.edges())
    return len(nx.max_weight_matching(G, maxcardinality=True))


# ---------------------------------------------------------------------------
# Holes and perfectness
# ---------------------------------------------------------------------------


def find_hole(g: Graph, min_length: int = 4, odd_only: bool = False) -> Optional[Tuple[int, ...]]:
    """An induced cycle of length ≥ ``min_length`` (odd when ``odd_only``), or None.

    Walks induced paths p0..pk whose vertices all exceed p0, extending only
    through vertices with no neighbour among p1..p(k-1). A vertex adjacent to
    both pk and p0 closes a cycle and is never extended through.
    """
    rows = g.rows
    n = g.order

    def walk(p0: int, above: int, trail: List[int], inner: int, on_path: int) -> Optional[Tuple[int, ...]]:
        end = trail[-1]
        cand = rows[end] & above & ~inner & ~on_path
        for x in iter_bits(cand):
            if rows[p0] >> x & 1:
                length = len(trail) + 1
                if length >= min_length and (not odd_only or length % 2 == 1):
                    return tuple(trail + [x])
                continue
            grown = inner | rows[end] | 1 << end if len(trail) > 1 else inner
            found = walk(p0, above, trail + [x], grown, on_path | 1 << x)
            if found:
                return found
        return None

    for p0 in range(n):
        above = ((1 << n) - 1) & ~((1 << (p0 + 1)) - 1)
        for p1 in iter_bits(rows[p0] & above):
            found = walk(p0, above, [p0, p1], 0, 1 << p0 | 1 << p1)
            if found:
                return found
    return None


def _check_scan_order(g: Graph, what: str) -> None:
    if g.order > config.SCAN_ORDER_CAP:
        raise OrderCapExceeded(f"{what} supports order ≤ {config.SCAN_ORDER_CAP}, got {g.order}")


def is_perfect(g: Graph) -> bool:
    """No odd hole of length ≥ 5 in ``g`` or its complement."""
    _check_scan_order(g, "is_perfect")
    return find_hole(g, 5, odd_only=True) is None and find_hole(complement(g), 5, odd_only=True) is None


def is_perfect_definitional(g: Graph) -> bool:
    """χ(H) = ω(H) for every induced H; used to cross-check is_perfect."""
    return build_tables(g).perfect()


def is_chordal(g: Graph) -> bool:
    return find_hole(g, 4) is None


def is_weakly_chordal(g: Graph) -> bool:
    return find_hole(g, 5) is None and find_hole(complement(g), 5) is None


def is_split(g: Graph) -> bool:
    """Degree-sequence test: with d1 ≥ … ≥ dn and m = max{i : d_i ≥ i - 1},
    split iff the first m degrees sum to m(m-1) plus the remaining degrees."""
    degrees = sorted(g.degrees(), reverse=True)
    m = 0
    for i, d in enumerate(degrees, start=1):
        if d >= i - 1:
            m = i
    return sum(degrees[:m]) == m * (m - 1) + sum(degrees[m:])


def is_pseudo_split(g: Graph) -> bool:
    return contains_induced(g, cycle(4)) is None and contains_induced(g, union(complete(2), complete(2))) is None


def is_apex_perfect(g: Graph) -> bool:
    if is_perfect(g):
        return True
    return any(is_perfect(delete_vertex(g, v)) for v in range(g.order))


# ---------------------------------------------------------------------------
# Distinct vertices
# ---------------------------------------------------------------------------


def distinct_vertices(g: Graph, mode: str = "chi") -> Tuple[int, ...]:
    """Vertices whose deletion lowers χ (``mode="chi"``) or θ (``mode="theta"``) by one."""
    if mode not in ("chi", "theta"):
        raise ValueError(f"mode must be 'chi' or 'theta', got {mode!r}")
    solver = chromatic_number if mode == "chi" else clique_cover_number
    base = solver(g)
    return tuple(v for v in range(g.order) if solver(delete_vertex(g, v)) == base - 1)


# ---------------------------------------------------------------------------
# Threshold, sum-perfect and small forbidden subgraphs
# ---------------------------------------------------------------------------


def threshold_sequence(g: Graph) -> Optional[List[Tuple[int, str]]]:
    """Peel isolated or dominating vertices; the peel order, or None if it gets stuck.

    Vertices are reported with their original labels, isolated tried first.
    """
    rows = list(g.rows)
    alive = g.full_mask
    steps: List[Tuple[int, str]] = []
    while alive:
        count = alive.bit_count()
        pick = None
        for v in iter_bits(alive):
            deg = (rows[v] & alive).bit_count()
            if deg == 0:
                pick = (v, "isolated")
                break
            if deg == count - 1 and pick is None:
                pick = (v, "dominating")
        if pick is None:
            return None
        steps.append(pick)
        alive &= ~(1 << pick[0])
    return steps


def is_threshold(g: Graph) -> bool:
    return threshold_sequence(g) is not None


THRESHOLD_OBSTRUCTIONS = (union(complete(2), complete(2)), path(4), cycle(4))


def is_threshold_by_triples(g: Graph) -> bool:
    return all(contains_induced(g, h) is None for h in THRESHOLD_OBSTRUCTIONS)


def is_sum_perfect(g: Graph) -> bool:
    _check_scan_order(g, "is_sum_perfect")
    return build_tables(g).sum_perfect()


def is_claw_free(g: Graph) -> bool:
    return contains_induced(g, claw()) is None


def is_c5_free(g: Graph) -> bool:
    return contains_induced(g, cycle(5)) is None


# ---------------------------------------------------------------------------
# Records and memo
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InvariantRecord:
    omega: int
    alpha: int
    chi: int
    theta: int
    nu: int
    flags: Dict[str, bool] = field(default_factory=dict)

    def to_dict(self) -> Dict[str, Any]:
        return asdict(self)


def invariant_record(g: Graph) -> InvariantRecord:
    omega = clique_number(g)
    chi = chromatic_number(g)
    small = g.order <= config.SCAN_ORDER_CAP
    flags = {
        "bipartite": chi <= 2,
        "triangle-free": omega <= 2,
        "claw-free": is_claw_free(g),
        "C5-free": is_c5_free(g),
        "threshold": is_threshold(g),
    }
    if small:
        flags["perfect"] = is_perfect(g)
        flags["sum-perfect"] = is_sum_perfect(g)
    return InvariantRecord(
        omega=omega,
        alpha=independence_number(g),
        chi=chi,
        theta=clique_cover_number(g),
        nu=matching_number(g),
        flags=flags,
    )


class InvariantMemo:
    """Thread-safe map from canonical codes (or any hashable key) to computed values.

    Concurrent callers computing the same key may both run ``compute``; the
    first stored value wins, and values for one key are expected to agree.
    """

    def __init__(self) -> None:
        self._lock = threading.Lock()
        self._data: Dict[Hashable, Any] = {}
        self.hits = 0
        self.misses = 0

    def get(self, key: Hashable) -> Any:
        with self._lock:
            return self._data.get(key)

    def get_or_compute(self, key: Hashable, compute: Callable[[], Any]) -> Any:
        with self._lock:
            if key in self._data:
                self.hits += 1
                return self._data[key]
        value = compute()
        with self._lock:
            self.misses += 1
            return self._data.setdefault(key, value)

    def __len__(self) -> int:
        with self._lock:
            return len(self._data)
