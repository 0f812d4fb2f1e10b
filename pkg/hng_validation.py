"""Input validation helpers."""
import argparse
import logging
from typing import Any, Iterable, Optional, Tuple

from hng_errors import InvalidVertex, ParameterOutOfRange

logger = logging.getLogger("hng")


def bounded_int(value: Any, name: str, min_val: Optional[int] = None, max_val: Optional[int] = None) -> int:
    """Convert ``value`` to int and reject it outside ``[min_val, max_val]``."""
    try:
        result = int(value)
    except (ValueError, TypeError):
        logger.debug(f"Failed to convert {value!r} to int for {name}")
        raise ParameterOutOfRange(f"{name} must be an integer, got {value!r}") from None
    if min_val is not None and result < min_val:
        raise ParameterOutOfRange(f"{name}={result} is below {min_val}")
    if max_val is not None and result > max_val:
        raise ParameterOutOfRange(f"{name}={result} is above {max_val}")
    return result


def check_vertex(order: int, v: Any) -> int:
    if not isinstance(v, int) or isinstance(v, bool) or not 0 <= v < order:
        raise InvalidVertex(f"vertex {v!r} is not in 0..{order - 1}")
    return v


def check_vertex_subset(order: int, vertices: Iterable[Any]) -> Tuple[int, ...]:
    """Validate a vertex subset and return it sorted without duplicates."""
    seen = set()
    for v in vertices:
        seen.add(check_vertex(order, v))
    return tuple(sorted(seen))


def int_arg(min_val: Optional[int] = None, max_val: Optional[int] = None):
    """argparse ``type=`` factory built on bounded_int."""

    def parse(text: str) -> int:
        try:
            return bounded_int(text, "value", min_val, max_val)
        except ParameterOutOfRange as e:
            raise argparse.ArgumentTypeError(str(e)) from None

    return parse
