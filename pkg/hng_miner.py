"""Minimal forbidden induced subgraphs of hereditary classes.

A graph is a minimal obstruction for a hereditary predicate when it fails the
predicate and every one-vertex deletion passes. Mining walks the catalogs in
increasing order, so every deletion is already classified when it is looked up.
"""
from __future__ import annotations

import itertools
import logging
import re
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Dict, Iterable, List, Optional, Sequence, Set, Tuple

from tqdm import tqdm

from hng_canon import CanonicalCode, canonical_code, component_key, contains_induced, contains_subgraph, labelled_code
from hng_config import config
from hng_enumeration import ensure_catalog
from hng_errors import CorruptCatalog, MissingDependency, ParameterOutOfRange, StaleCache
from hng_graph import Graph, claw, complement, complete, cycle, delete_vertex, graph6_decode
from hng_invariants import clique_number, is_claw_free, is_perfect, is_sum_perfect, is_threshold
from hng_membership import in_hng
from hng_subsets import build_tables
from hng_types import ObstructionSidecar
from hng_utils import lines_hash, now_iso, safe_load_json, safe_save_json, write_lines_atomic
from hng_validation import bounded_int

logger = logging.getLogger("hng")

Predicate = Callable[[Graph], bool]


# ---------------------------------------------------------------------------
# Predicates
# ---------------------------------------------------------------------------

_HNG = re.compile(r"^hng-(\d+)$")

PREDICATES: Dict[str, Predicate] = {
    "threshold": is_threshold,
    "sum-perfect": is_sum_perfect,
    "perfect": is_perfect,
    "claw-free": is_claw_free,
    "triangle-free": lambda g: clique_number(g) <= 2,
}


def get_predicate(name: str) -> Predicate:
    """Named hereditary predicate; ``hng-<a>`` selects a-HNG membership."""
    if name in PREDICATES:
        return PREDICATES[name]
    match = _HNG.match(name)
    if match:
        a = int(match.group(1))
        return lambda g: in_hng(g, a)
    raise ParameterOutOfRange(f"unknown predicate {name!r}; choose from {sorted(PREDICATES)} or hng-<a>")


# ---------------------------------------------------------------------------
# Obstruction sets
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ObstructionSet:
    """Sorted canonical codes plus where they came from.

    ``order_kind`` is ``induced`` for sets forbidden as induced subgraphs and
    ``subgraph`` for sets forbidden as (not necessarily induced) subgraphs.
    """

    name: str
    members: Tuple[CanonicalCode, ...]
    order_kind: str = "induced"
    provenance: Dict[str, object] = field(default_factory=dict, compare=False)
    complement_closed: Optional[bool] = None
    parts: Dict[str, Tuple[CanonicalCode, ...]] = field(default_factory=dict, compare=False)

    def __len__(self) -> int:
        return len(self.members)

    def __contains__(self, code: object) -> bool:
        return code in set(self.members)

    def graphs(self) -> List[Graph]:
        return [code.to_graph() for code in self.members]

    def graph6_lines(self) -> List[str]:
        return [code.graph6 for code in self.members]

    @property
    def counts_by_order(self) -> Dict[int, int]:
        counts: Dict[int, int] = {}
        for code in self.members:
            counts[code.order] = counts.get(code.order, 0) + 1
        return dict(sorted(counts.items()))

    def part(self, name: str) -> "ObstructionSet":
        return ObstructionSet(f"{self.name}:{name}", self.parts[name], self.order_kind, dict(self.provenance))

    def find_in(self, host: Graph) -> Optional[Tuple[Graph, Tuple[int, ...]]]:
        """First member present in ``host`` (in this set's containment order), with its witness."""
        search = contains_induced if self.order_kind == "induced" else contains_subgraph
        for g in self.graphs():
            if g.order > host.order:
                break
            witness = search(host, g)
            if witness is not None:
                return g, witness
        return None

    def sidecar(self) -> ObstructionSidecar:
        lines = self.graph6_lines()
        data = ObstructionSidecar(
            name=self.name,
            format_version=config.FORMAT_VERSION,
            order_kind=self.order_kind,
            counts_by_order={str(k): v for k, v in self.counts_by_order.items()},
            provenance=dict(self.provenance, parts={k: [c.graph6 for c in v] for k, v in self.parts.items()}),
            hash=lines_hash(lines),
        )
        if self.complement_closed is not None:
            data["complement_closed"] = self.complement_closed
        return data


def check_complement_closed(members: Iterable[CanonicalCode]) -> bool:
    codes = set(members)
    return all(canonical_code(complement(code.to_graph())) in codes for code in codes)


def check_antichain(obstructions: ObstructionSet) -> List[Tuple[str, str]]:
    """Pairs (smaller, larger) where one member contains another; empty for a valid set."""
    search = contains_induced if obstructions.order_kind == "induced" else contains_subgraph
    graphs = obstructions.graphs()
    clashes = []
    for small, big in itertools.permutations(graphs, 2):
        if small.order < big.order or (small.order == big.order and small.edge_count < big.edge_count):
            if search(big, small) is not None:
                clashes.append((labelled_code(small).graph6, labelled_code(big).graph6))
    return clashes


def _sorted_set(name: str, codes: Iterable[CanonicalCode], **kwargs) -> ObstructionSet:
    return ObstructionSet(name, tuple(sorted(set(codes))), **kwargs)


# ---------------------------------------------------------------------------
# Mining
# ---------------------------------------------------------------------------


def _mine_chunk(predicate_name: str, order: int, bits: Sequence[int],
                passing_below: Set[int]) -> Tuple[List[int], List[int]]:
    """(minimal obstructions, passing graphs) among one shard of a catalog."""
    predicate = get_predicate(predicate_name)
    found, passing = [], []
    for b in bits:
        g = CanonicalCode(order, b).to_graph()
        if predicate(g):
            passing.append(b)
        elif all(canonical_code(delete_vertex(g, v)).bits in passing_below for v in range(order)):
            found.append(b)
    return found, passing


def mine_minimal_fis(
    predicate: Predicate | str,
    n_max: int,
    name: Optional[str] = None,
    cache_dir: Optional[Path] = None,
    workers: int = 1,
    progress: bool = False,
) -> ObstructionSet:
    """Every minimal obstruction of order ≤ ``n_max`` for a hereditary predicate.

    Pass the predicate by registry name to allow ``workers > 1``.
    """
    n_max = bounded_int(n_max, "n_max", 1, config.ENUM_ORDER_CAP)
    predicate_name = predicate if isinstance(predicate, str) else None
    check = get_predicate(predicate) if isinstance(predicate, str) else predicate
    if workers > 1 and predicate_name is None:
        raise ParameterOutOfRange("parallel mining needs a registered predicate name")
    label = name or predicate_name or getattr(check, "__name__", "predicate")

    members: List[CanonicalCode] = []
    passing_below: Set[int] = set()
    for n in range(1, n_max + 1):
        catalog = ensure_catalog(n, cache_dir, progress=progress)
        if n == 1:
            # the null graph is never an obstruction
            passing_below = {0}
        passing: Set[int] = set()
        found: List[int] = []
        if workers > 1:
            chunks = [[c.bits for c in catalog.codes[i::workers]] for i in range(workers)]
            with ProcessPoolExecutor(max_workers=workers) as pool:
                for part_found, part_passing in pool.map(
                    _mine_chunk, itertools.repeat(predicate_name), itertools.repeat(n), chunks,
                    itertools.repeat(passing_below),
                ):
                    found.extend(part_found)
                    passing.update(part_passing)
            found.sort()
        else:
            for code in tqdm(catalog.codes, desc=f"{label} n={n}", disable=not progress, leave=False):
                g = code.to_graph()
                if check(g):
                    passing.add(code.bits)
                    continue
                if all(canonical_code(delete_vertex(g, v)).bits in passing_below for v in range(n)):
                    found.append(code.bits)
        members.extend(CanonicalCode(n, b) for b in found)
        logger.info(f"Mined {label}: {len(found)} minimal obstruction(s) on {n} vertices")
        passing_below = passing

    return _sorted_set(
        label,
        members,
        provenance={"predicate": label, "n_max": n_max, "created": now_iso()},
    )


def derive_hng1_obstructions(n_max: int = 8, cache_dir: Optional[Path] = None, workers: int = 1,
                             progress: bool = False) -> ObstructionSet:
    """Minimal obstructions of 1-HNG, split into C5-free and C5-containing parts."""
    mined = mine_minimal_fis("hng-1", n_max, name="hng1", cache_dir=cache_dir, workers=workers, progress=progress)
    c5 = cycle(5)
    with_c5 = tuple(c for c in mined.members if contains_induced(c.to_graph(), c5) is not None)
    without = tuple(c for c in mined.members if c not in set(with_c5))
    return ObstructionSet(
        "hng1",
        mined.members,
        provenance=dict(mined.provenance),
        complement_closed=check_complement_closed(mined.members),
        parts={"c5-free": without, "c5": with_c5},
    )


def derive_claw_obstructions(hng1: ObstructionSet) -> ObstructionSet:
    members = [canonical_code(claw())]
    members += [c for c in hng1.members if is_claw_free(c.to_graph())]
    provenance = {"source": hng1.name, "n_max": hng1.provenance.get("n_max"), "created": now_iso()}
    return _sorted_set("claw", members, provenance=provenance)


def derive_trianglefree_obstructions(hng1: ObstructionSet) -> ObstructionSet:
    members = [canonical_code(complete(3))]
    members += [c for c in hng1.members if clique_number(c.to_graph()) <= 2]
    provenance = {"source": hng1.name, "n_max": hng1.provenance.get("n_max"), "created": now_iso()}
    return _sorted_set("triangle", members, provenance=provenance)


# ---------------------------------------------------------------------------
# Line-graph obstructions
# ---------------------------------------------------------------------------


def _edge_children(g: Graph) -> Iterable[Graph]:
    """One more edge: between existing vertices, to a new pendant vertex, or as a new component."""
    n = g.order
    for v in range(n):
        for u in range(v):
            if not g.has_edge(u, v):
                rows = list(g.rows)
                rows[u] |= 1 << v
                rows[v] |= 1 << u
                yield Graph(n, tuple(rows))
    if n + 1 <= config.SCAN_ORDER_CAP:
        for u in range(n):
            rows = list(g.rows) + [1 << u]
            rows[u] |= 1 << n
            yield Graph(n + 1, tuple(rows))
    if n + 2 <= config.SCAN_ORDER_CAP:
        yield Graph(n + 2, g.rows + (1 << (n + 1), 1 << n))


def graphs_by_edges(max_edges: int) -> Dict[int, List[Graph]]:
    """All graphs without isolated vertices having 1..``max_edges`` edges, one per class."""
    level = {component_key(complete(2)): complete(2)}
    result = {1: [complete(2)]}
    for m in range(2, max_edges + 1):
        nxt: Dict[Tuple[CanonicalCode, ...], Graph] = {}
        for g in level.values():
            for child in _edge_children(g):
                key = component_key(child)
                if key not in nxt:
                    nxt[key] = child
        level = nxt
        result[m] = [nxt[k] for k in sorted(nxt)]
        logger.debug(f"{len(level)} graphs with {m} edges")
    return result


def derive_line_obstructions(max_edges: int = 8) -> ObstructionSet:
    """Graphs H whose line graph leaves 1-HNG while every one-edge deletion's line graph stays in it."""
    from hng_structure import line_graph

    max_edges = bounded_int(max_edges, "max_edges", 1, config.SCAN_ORDER_CAP)
    members = []
    for m, graphs in graphs_by_edges(max_edges).items():
        for h in graphs:
            tables = build_tables(line_graph(h))
            full = tables.full
            defect = tables.defect()
            if defect[full] <= 1:
                continue
            below = tables.hereditary_below()
            if all(below[full ^ (1 << x)] <= 1 for x in range(m)):
                members.append(canonical_code(h))
    result = _sorted_set(
        "line",
        members,
        order_kind="subgraph",
        provenance={"max_edges": max_edges, "created": now_iso()},
    )
    logger.info(f"Derived {len(result)} line-graph obstructions with ≤ {max_edges} edges")
    return result


# ---------------------------------------------------------------------------
# Persistence
# ---------------------------------------------------------------------------


def obstruction_paths(name: str, directory: Optional[Path] = None) -> Tuple[Path, Path]:
    base = Path(directory) if directory else config.OBSTRUCTION_DIR
    stem = f"{name}.v{config.FORMAT_VERSION}"
    return base / f"{stem}.g6", base / f"{stem}.json"


def store_obstructions(obstructions: ObstructionSet, directory: Optional[Path] = None) -> Path:
    g6_path, json_path = obstruction_paths(obstructions.name, directory)
    write_lines_atomic(g6_path, obstructions.graph6_lines())
    if not safe_save_json(json_path, obstructions.sidecar()):
        raise OSError(f"could not write {json_path}")
    logger.info(f"Stored {obstructions.name} ({len(obstructions)} members) at {g6_path}")
    return g6_path


def load_obstructions(name: str, directory: Optional[Path] = None) -> ObstructionSet:
    g6_path, json_path = obstruction_paths(name, directory)
    if not g6_path.exists():
        raise MissingDependency(f"obstruction set {name!r} not found at {g6_path}", hint=f"hng_cli.py derive --set {name}")
    sidecar = safe_load_json(json_path) or {}
    if sidecar.get("format_version", config.FORMAT_VERSION) != config.FORMAT_VERSION:
        raise StaleCache(f"{json_path}: written by format {sidecar.get('format_version')}")
    with open(g6_path, "r", encoding="ascii") as f:
        lines = [line.strip() for line in f if line.strip() and not line.startswith("#")]
    if sidecar.get("hash") and sidecar["hash"] != lines_hash(lines):
        raise CorruptCatalog(f"{g6_path}: content does not match its sidecar hash")
    members = tuple(sorted(canonical_code(graph6_decode(line)) for line in lines))
    provenance = dict(sidecar.get("provenance", {}))
    parts_raw = provenance.pop("parts", {}) or {}
    parts = {k: tuple(sorted(canonical_code(graph6_decode(s)) for s in v)) for k, v in parts_raw.items()}
    return ObstructionSet(
        name,
        members,
        order_kind=sidecar.get("order_kind", "induced"),
        provenance=provenance,
        complement_closed=sidecar.get("complement_closed"),
        parts=parts,
    )


def ensure_obstructions(name: str, n_max: int = 8, directory: Optional[Path] = None,
                        catalog_dir: Optional[Path] = None, workers: int = 1,
                        progress: bool = False) -> ObstructionSet:
    """Load a derived set, deriving and storing it when missing.

    ``directory=None`` derives in memory without touching the cache.
    """
    if directory is not None:
        try:
            cached = load_obstructions(name, directory)
            if name == "line" or (cached.provenance.get("n_max") or 0) >= n_max:
                return cached
            logger.info(f"Cached {name} covers order ≤ {cached.provenance.get('n_max')}; deriving to {n_max}")
        except MissingDependency:
            logger.info(f"Obstruction set {name} not cached; deriving")
    if name == "hng1":
        result = derive_hng1_obstructions(n_max, catalog_dir, workers, progress)
    elif name == "claw":
        result = derive_claw_obstructions(ensure_obstructions("hng1", n_max, directory, catalog_dir, workers, progress))
    elif name == "triangle":
        result = derive_trianglefree_obstructions(
            ensure_obstructions("hng1", n_max, directory, catalog_dir, workers, progress))
    elif name == "line":
        result = derive_line_obstructions(config.LINE_EDGE_CAP)
    else:
        raise ParameterOutOfRange(f"unknown obstruction set {name!r}; choose hng1, claw, triangle or line")
    if directory is not None:
        store_obstructions(result, directory)
    return result
