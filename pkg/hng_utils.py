"""Utility functions shared by the hng modules."""
import datetime as dt
import hashlib
import json
import logging
from pathlib import Path
from typing import Any, Dict, Iterable, Optional

logger = logging.getLogger("hng")


def now_iso() -> str:
    """Get current ISO timestamp."""
    return dt.datetime.now().isoformat(timespec="seconds")


def json_dumps(obj: Any, indent: Optional[int] = 2) -> str:
    """Deterministic JSON text (sorted keys, trailing newline)."""
    return json.dumps(obj, ensure_ascii=False, sort_keys=True, indent=indent) + "\n"


def safe_load_json(path: Path | str) -> Optional[Dict[str, Any]]:
    """Load a JSON file, returning None when it is missing or unreadable."""
    path = Path(path)
    try:
        if not path.exists():
            logger.debug(f"JSON file not found: {path}")
            return None
        with open(path, "r", encoding="utf-8") as f:
            return json.load(f)
    except json.JSONDecodeError as e:
        logger.warning(f"Corrupted JSON in {path}: {e}")
        return None
    except OSError as e:
        logger.error(f"Could not read {path}: {e}")
        return None


def write_text_atomic(path: Path | str, text: str) -> Path:
    """Write ``text`` through a temp file and an atomic replace."""
    path = Path(path)
    path.parent.mkdir(parents=True, exist_ok=True)
    tmp = path.with_suffix(path.suffix + ".tmp")
    with open(tmp, "w", encoding="utf-8", newline="\n") as f:
        f.write(text)
    tmp.replace(path)
    return path


def safe_save_json(path: Path | str, data: Any) -> bool:
    """Save JSON atomically. Returns False (and logs) on failure."""
    try:
        write_text_atomic(path, json_dumps(data))
        return True
    except OSError as e:
        logger.error(f"Failed to save JSON to {path}: {e}")
        return False


def write_lines_atomic(path: Path | str, lines: Iterable[str], header: Optional[str] = None) -> Path:
    """Write one item per line, optionally preceded by a ``#`` header line."""
    body = []
    if header:
        body.append(f"# {header}")
    body.extend(lines)
    return write_text_atomic(path, "".join(f"{line}\n" for line in body))


def lines_hash(lines: Iterable[str]) -> str:
    """Short SHA-256 over sorted lines; used as set provenance."""
    h = hashlib.sha256()
    for line in sorted(lines):
        h.update(line.encode("ascii"))
        h.update(b"\n")
    return h.hexdigest()[:16]
