"""Shared, lazily built fixtures for the hng tests."""
import os
import unittest
from functools import lru_cache

from hng_miner import ObstructionSet, derive_hng1_obstructions, derive_line_obstructions

SLOW = os.environ.get("HNG_SLOW_TESTS") == "1"
slow = unittest.skipUnless(SLOW, "set HNG_SLOW_TESTS=1 to run the exhaustive checks")


@lru_cache(maxsize=None)
def hng1_up_to(n_max: int = 7) -> ObstructionSet:
    """1-HNG obstructions mined in memory; complete for hosts of order ≤ n_max."""
    return derive_hng1_obstructions(n_max)


@lru_cache(maxsize=None)
def line_up_to(max_edges: int = 6) -> ObstructionSet:
    return derive_line_obstructions(max_edges)
