"""Catalogs of all graphs of a given order, up to isomorphism.

Order n is built from order n-1 by adding a vertex with every possible
neighbourhood and keeping one canonical code per class. Catalogs are cached on
disk as sorted graph6 lines under ``config.CATALOG_DIR``.
"""
from __future__ import annotations

import itertools
import logging
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Iterator, List, Optional, Sequence, Set, Tuple

import numpy as np
from tqdm import tqdm

from hng_canon import CanonicalCode, canonical_code, labelled_code
from hng_config import config
from hng_errors import CorruptCatalog, MalformedGraph6, ParameterOutOfRange, StaleCache
from hng_graph import Graph, add_vertex, graph6_decode
from hng_utils import now_iso, write_lines_atomic
from hng_validation import bounded_int

logger = logging.getLogger("hng")

# Known class counts for orders 0..9; the naive oracle reproduces the small ones.
KNOWN_COUNTS = (1, 1, 2, 4, 11, 34, 156, 1044, 12346, 274668)
NAIVE_ORDER_CAP = 7

_HEADER = re.compile(r"^#\s*hng-catalog\s+format=(\d+)\s+order=(\d+)")


@dataclass(frozen=True)
class GraphCatalog:
    order: int
    codes: Tuple[CanonicalCode, ...]
    provenance: Dict[str, Any] = field(default_factory=dict, compare=False)

    def __len__(self) -> int:
        return len(self.codes)

    def graphs(self) -> Iterator[Graph]:
        for code in self.codes:
            yield code.to_graph()

    def graph6_lines(self) -> List[str]:
        return [code.graph6 for code in self.codes]


def _extend(parent_bits: Sequence[int], order: int) -> Set[int]:
    """Canonical bits of every one-vertex extension of the given parents."""
    found: Set[int] = set()
    for bits in parent_bits:
        parent = CanonicalCode(order - 1, bits).to_graph()
        for mask in range(1 << (order - 1)):
            found.add(canonical_code(add_vertex(parent, mask)).bits)
    return found


def enumerate_order(
    n: int,
    parent: Optional[GraphCatalog] = None,
    workers: int = 1,
    progress: bool = False,
) -> GraphCatalog:
    """All isomorphism classes on ``n`` vertices, sorted by canonical code.

    ``parent`` is the order ``n-1`` catalog; it is built recursively when absent.
    """
    n = bounded_int(n, "n", 1, config.ENUM_ORDER_CAP)
    if n == 1:
        return GraphCatalog(1, (CanonicalCode(1, 0),), {"method": "base", "count": 1, "created": now_iso()})
    if parent is None:
        parent = enumerate_order(n - 1, workers=workers, progress=progress)
    if parent.order != n - 1:
        raise ParameterOutOfRange(f"parent catalog has order {parent.order}, need {n - 1}")

    parent_bits = [code.bits for code in parent.codes]
    found: Set[int] = set()
    if workers > 1 and len(parent_bits) > workers:
        chunks = [parent_bits[i::workers] for i in range(workers)]
        with ProcessPoolExecutor(max_workers=workers) as pool:
            for part in pool.map(_extend, chunks, itertools.repeat(n)):
                found |= part
    else:
        for bits in tqdm(parent_bits, desc=f"order {n}", disable=not progress, leave=False):
            found |= _extend([bits], n)

    codes = tuple(CanonicalCode(n, bits) for bits in sorted(found))
    logger.info(f"Enumerated order {n}: {len(codes)} graphs from {len(parent_bits)} parents")
    return GraphCatalog(n, codes, {"method": "extension", "count": len(codes), "workers": workers, "created": now_iso()})


def _pair_index(n: int) -> Dict[Tuple[int, int], int]:
    return {(i, j): k for k, (i, j) in enumerate((i, j) for j in range(1, n) for i in range(j))}


def naive_classes(n: int) -> Set[CanonicalCode]:
    """Isomorphism classes of the labelled graphs on ``n`` vertices (n ≤ 7).

    Walks all 2^(n(n-1)/2) labelled graphs in order; each one not yet seen
    starts a class, and every relabelling of it is marked seen. Only the class
    representatives go through ``canonical_code``, so the class count and
    membership do not depend on the catalog's extension step.
    """
    n = bounded_int(n, "n", 0, NAIVE_ORDER_CAP)
    if n < 2:
        return {CanonicalCode(n, 0)}
    index = _pair_index(n)
    pairs = list(index)
    m = len(pairs)
    # weights[p, k]: bit that pair k lands on under permutation p
    weights = np.array(
        [[1 << index[tuple(sorted((perm[i], perm[j])))] for i, j in pairs] for perm in itertools.permutations(range(n))],
        dtype=np.int64,
    )
    seen = np.zeros(1 << m, dtype=bool)
    classes: Set[CanonicalCode] = set()
    for choice in range(1 << m):
        if seen[choice]:
            continue
        present = [k for k in range(m) if choice >> k & 1]
        seen[weights[:, present].sum(axis=1)] = True
        rows = [0] * n
        for k in present:
            i, j = pairs[k]
            rows[i] |= 1 << j
            rows[j] |= 1 << i
        classes.add(canonical_code(Graph(n, tuple(rows))))
    return classes


# ---------------------------------------------------------------------------
# Persistence
# ---------------------------------------------------------------------------


def catalog_path(n: int, cache_dir: Optional[Path] = None) -> Path:
    base = Path(cache_dir) if cache_dir else config.CATALOG_DIR
    return base / f"graphs-n{n}.v{config.FORMAT_VERSION}.g6"


def store_catalog(catalog: GraphCatalog, path: Path | str) -> Path:
    header = f"hng-catalog format={config.FORMAT_VERSION} order={catalog.order}"
    out = write_lines_atomic(path, catalog.graph6_lines(), header=header)
    logger.info(f"Stored order-{catalog.order} catalog ({len(catalog)} graphs) at {out}")
    return out


def load_catalog(path: Path | str, order: Optional[int] = None, verify: bool = False) -> GraphCatalog:
    """Read a catalog file, rejecting unsorted, duplicate or mixed-order content.

    ``verify`` additionally recomputes every canonical code.
    """
    path = Path(path)
    with open(path, "r", encoding="ascii") as f:
        raw = [line.strip() for line in f]
    codes: List[CanonicalCode] = []
    for lineno, line in enumerate(raw, start=1):
        if not line:
            continue
        if line.startswith("#"):
            match = _HEADER.match(line)
            if match:
                version, header_order = int(match.group(1)), int(match.group(2))
                if version != config.FORMAT_VERSION:
                    raise StaleCache(f"{path}: format {version}, expected {config.FORMAT_VERSION}")
                if order is None:
                    order = header_order
                elif order != header_order:
                    raise CorruptCatalog(f"{path}: header order {header_order}, expected {order}")
            continue
        try:
            g = graph6_decode(line)
        except MalformedGraph6 as e:
            raise CorruptCatalog(f"{path}:{lineno}: {e}") from None
        if order is None:
            order = g.order
        if g.order != order:
            raise CorruptCatalog(f"{path}:{lineno}: order {g.order} in an order-{order} catalog")
        code = labelled_code(g)
        if verify and canonical_code(g) != code:
            raise CorruptCatalog(f"{path}:{lineno}: {line} is not in canonical form")
        if codes and code <= codes[-1]:
            kind = "duplicate" if code == codes[-1] else "unsorted"
            raise CorruptCatalog(f"{path}:{lineno}: {kind} entry {line}")
        codes.append(code)
    return GraphCatalog(order or 0, tuple(codes), {"source": str(path), "count": len(codes)})


def _check_stale(n: int, cache_dir: Path) -> None:
    current = catalog_path(n, cache_dir)
    for other in cache_dir.glob(f"graphs-n{n}.v*.g6"):
        if other != current:
            raise StaleCache(f"{other} was written by another format version; remove it or rebuild the cache")


_MEMORY: Dict[Tuple[str, int], GraphCatalog] = {}


def ensure_catalog(n: int, cache_dir: Optional[Path] = None, workers: int = 1, progress: bool = False) -> GraphCatalog:
    """Load the order-``n`` catalog from the cache, building (and storing) it when missing.

    ``cache_dir=None`` keeps everything in memory.
    """
    key = (str(cache_dir), n)
    if key in _MEMORY:
        return _MEMORY[key]
    if cache_dir is not None:
        cache_dir = Path(cache_dir)
        _check_stale(n, cache_dir)
        path = catalog_path(n, cache_dir)
        if path.exists():
            catalog = load_catalog(path, order=n)
            if n < len(KNOWN_COUNTS) and len(catalog) != KNOWN_COUNTS[n]:
                raise CorruptCatalog(f"{path}: {len(catalog)} graphs, expected {KNOWN_COUNTS[n]}")
            _MEMORY[key] = catalog
            return catalog
    parent = ensure_catalog(n - 1, cache_dir, workers, progress) if n > 1 else None
    catalog = enumerate_order(n, parent=parent, workers=workers, progress=progress)
    if cache_dir is not None:
        store_catalog(catalog, catalog_path(n, cache_dir))
    _MEMORY[key] = catalog
    return catalog


def iter_graphs(n_max: int, n_min: int = 1, cache_dir: Optional[Path] = None, progress: bool = False) -> Iterator[Graph]:
    """Every graph of order ``n_min..n_max``, smallest order first."""
    n_max = bounded_int(n_max, "n_max", 0, config.ENUM_ORDER_CAP)
    for n in range(max(1, n_min), n_max + 1):
        yield from ensure_catalog(n, cache_dir, progress=progress).graphs()
