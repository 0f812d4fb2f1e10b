"""Per-subset invariant tables.

For a graph on n ≤ 16 vertices, every induced subgraph is a bitmask S in
``range(2**n)``. The tables below hold ω, α, χ and θ of G[S] for every S at
once, computed with numpy over the whole index range. Hereditary scans
(defect, sum-perfectness, the definitional perfectness check) are then single
reductions over these arrays.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import List, Optional, Sequence, Tuple

import numpy as np

from hng_config import config
from hng_errors import OrderCapExceeded
from hng_graph import Graph, iter_bits

logger = logging.getLogger("hng")


@lru_cache(maxsize=None)
def _index(n: int) -> Tuple[np.ndarray, np.ndarray, Tuple[np.ndarray, ...]]:
    """(masks, popcounts, per-bit arrays of masks containing that bit)."""
    masks = np.arange(1 << n, dtype=np.int64)
    popcount = np.zeros(1 << n, dtype=np.int16)
    with_bit = []
    for v in range(n):
        has = (masks >> v) & 1
        popcount += has.astype(np.int16)
        with_bit.append(masks[has == 1])
    return masks, popcount, tuple(with_bit)


def _complement_rows(rows: Sequence[int], n: int) -> List[int]:
    full = (1 << n) - 1
    return [full & ~row & ~(1 << v) for v, row in enumerate(rows)]


def maximal_cliques(rows: Sequence[int], n: int) -> List[int]:
    """All maximal cliques as bitmasks (Bron-Kerbosch with pivoting)."""
    found: List[int] = []

    def expand(r: int, p: int, x: int) -> None:
        if not p and not x:
            found.append(r)
            return
        pivot_pool = p | x
        pivot = max(iter_bits(pivot_pool), key=lambda u: (rows[u] & p).bit_count())
        for v in iter_bits(p & ~rows[pivot]):
            bit = 1 << v
            expand(r | bit, p & rows[v], x & rows[v])
            p &= ~bit
            x |= bit

    if n:
        expand(0, (1 << n) - 1, 0)
    return found


def clique_table(rows: Sequence[int], n: int) -> np.ndarray:
    """``table[S]`` = clique number of G[S]."""
    masks, popcount, with_bit = _index(n)
    full = (1 << n) - 1
    is_clique = np.ones(1 << n, dtype=bool)
    for v in range(n):
        non_nb = full & ~rows[v] & ~(1 << v)
        has = ((masks >> v) & 1).astype(bool)
        is_clique &= ~has | ((masks & non_nb) == 0)
    table = np.where(is_clique, popcount, 0).astype(np.int16)
    for v in range(n):
        idx = with_bit[v]
        table[idx] = np.maximum(table[idx], table[idx ^ (1 << v)])
    return table


def chromatic_table(rows: Sequence[int], n: int) -> np.ndarray:
    """``table[S]`` = chromatic number of G[S].

    Rounds of ``chi[S] = min over maximal stable I of chi[S - I] + 1``; after
    round r every S with chromatic number ≤ r is exact.
    """
    masks, _, _ = _index(n)
    full = (1 << n) - 1
    stable = maximal_cliques(_complement_rows(rows, n), n)
    chi = np.full(1 << n, n + 1, dtype=np.int16)
    chi[0] = 0
    for _ in range(n):
        nxt = chi.copy()
        for s in stable:
            np.minimum(nxt, chi[masks & (full ^ s)] + 1, out=nxt)
        if np.array_equal(nxt, chi):
            break
        chi = nxt
    return chi


def subset_max(values: np.ndarray, n: int) -> np.ndarray:
    """``out[S]`` = max of ``values[T]`` over T ⊆ S."""
    out = values.copy()
    _, _, with_bit = _index(n)
    for v in range(n):
        idx = with_bit[v]
        out[idx] = np.maximum(out[idx], out[idx ^ (1 << v)])
    return out


@dataclass
class SubsetTables:
    """ω, α, χ, θ of every induced subgraph of one graph."""

    order: int
    popcount: np.ndarray
    omega: np.ndarray
    alpha: np.ndarray
    chi: np.ndarray
    theta: np.ndarray

    @property
    def full(self) -> int:
        return (1 << self.order) - 1

    def defect(self) -> np.ndarray:
        """n + 1 - χ - θ per subset; the empty subset is pinned to a sentinel below every real value."""
        values = (self.popcount + 1 - self.chi - self.theta).astype(np.int16)
        if self.order:
            values[0] = -self.order - 2
        return values

    def hereditary(self) -> Tuple[int, int]:
        """(largest defect over nonempty subsets, witness mask).

        Ties go to the largest subset, then to the smallest mask.
        """
        if self.order == 0:
            return 1, 0
        values = self.defect()
        top = int(values.max())
        cand = np.flatnonzero(values == top)
        sizes = self.popcount[cand]
        witness = int(cand[sizes == sizes.max()][0])
        return top, witness

    def hereditary_below(self) -> np.ndarray:
        """``out[S]`` = largest defect over nonempty subsets of S."""
        return subset_max(self.defect(), self.order)

    def sum_perfect(self) -> bool:
        return bool(np.all(self.omega[1:] + self.alpha[1:] >= self.popcount[1:]))

    def perfect(self) -> bool:
        return bool(np.array_equal(self.chi, self.omega))


def build_tables(g: Graph, cap: Optional[int] = None) -> SubsetTables:
    limit = config.SCAN_ORDER_CAP if cap is None else cap
    if g.order > limit:
        raise OrderCapExceeded(f"subset tables need order ≤ {limit}, got {g.order}")
    n = g.order
    co = _complement_rows(g.rows, n)
    _, popcount, _ = _index(n)
    return SubsetTables(
        order=n,
        popcount=popcount,
        omega=clique_table(g.rows, n),
        alpha=clique_table(co, n),
        chi=chromatic_table(g.rows, n),
        theta=chromatic_table(co, n),
    )
