"""Configuration module for the hereditary Nordhaus-Gaddum toolkit."""
import logging
import os
from dataclasses import dataclass, field
from pathlib import Path
from typing import Any, Dict, Optional, Tuple

import yaml

logger = logging.getLogger("hng")


def read_yaml(path: Path) -> Dict[str, Any]:
    with path.open("r", encoding="utf-8") as f:
        data = yaml.safe_load(f) or {}
    if not isinstance(data, dict):
        raise ValueError(f"Settings must be a YAML mapping (dict). Got: {type(data)}")
    return data


def expand_path(value: str, ctx: Optional[Dict[str, Any]] = None) -> str:
    """Expand env vars, ``~`` and ``{placeholders}``."""
    if value is None:
        return ""
    s = os.path.expanduser(os.path.expandvars(str(value)))
    if ctx:
        try:
            s = s.format_map(ctx)
        except (KeyError, ValueError):
            pass
    return s


@dataclass
class Config:
    """Centralized toolkit configuration."""

    APP_TITLE: str = "Hereditary Nordhaus-Gaddum toolkit"
    APP_VERSION: str = "0.3.0"

    # Hard limits
    ORDER_CAP: int = 32
    SCAN_ORDER_CAP: int = 16
    ENUM_ORDER_CAP: int = 9
    FORMAT_VERSION: int = 1
    LINE_EDGE_CAP: int = 8

    # Suite defaults, overridable from hng.yaml
    DEFAULT_NMAX: int = 8
    DEFAULT_AMAX: int = 2
    DEFAULT_SEED: int = 20240601
    DEFAULT_SAMPLES: int = 10_000
    SAMPLE_ORDERS: Tuple[int, ...] = (9, 10, 11, 12)
    WORKERS: int = 1
    LOG_LEVEL: str = "INFO"

    BASE_DIR: Path = field(default_factory=lambda: Path(__file__).parent)

    # HNG_CACHE_DIR moves catalogs and mined sets out of the checkout.
    CACHE_DIR: Path = field(
        default_factory=lambda: Path(os.environ.get("HNG_CACHE_DIR", Path(__file__).parent / "cache")).resolve()
    )

    @property
    def CATALOG_DIR(self) -> Path:
        return self.CACHE_DIR / "catalogs"

    @property
    def OBSTRUCTION_DIR(self) -> Path:
        return self.CACHE_DIR / "obstructions"

    @property
    def REPORT_DIR(self) -> Path:
        return self.CACHE_DIR / "reports"

    @property
    def LOG_DIR(self) -> Path:
        return self.CACHE_DIR / "logs"

    @property
    def SETTINGS_PATH(self) -> Path:
        return Path(os.environ.get("HNG_CONFIG", self.BASE_DIR / "hng.yaml"))

    def ensure_directories(self) -> None:
        """Create all cache directories."""
        for path in [self.CACHE_DIR, self.CATALOG_DIR, self.OBSTRUCTION_DIR, self.REPORT_DIR, self.LOG_DIR]:
            path.mkdir(parents=True, exist_ok=True)

    def apply_settings(self, raw: Dict[str, Any]) -> None:
        """Overlay a parsed ``hng.yaml`` mapping onto this config."""
        paths = raw.get("paths", {}) or {}
        if not isinstance(paths, dict):
            raise ValueError("hng.yaml: paths must be a mapping")
        if "cache_dir" in paths and "HNG_CACHE_DIR" not in os.environ:
            cache_dir = expand_path(paths["cache_dir"], {"base_dir": str(self.BASE_DIR)})
            self.CACHE_DIR = Path(cache_dir).resolve()

        suites = raw.get("suites", {}) or {}
        if not isinstance(suites, dict):
            raise ValueError("hng.yaml: suites must be a mapping")
        self.DEFAULT_NMAX = int(suites.get("nmax", self.DEFAULT_NMAX))
        self.DEFAULT_AMAX = int(suites.get("amax", self.DEFAULT_AMAX))
        self.DEFAULT_SEED = int(suites.get("seed", self.DEFAULT_SEED))
        self.DEFAULT_SAMPLES = int(suites.get("samples", self.DEFAULT_SAMPLES))
        self.WORKERS = int(suites.get("workers", self.WORKERS))
        orders = suites.get("sample_orders")
        if isinstance(orders, list) and orders:
            self.SAMPLE_ORDERS = tuple(int(o) for o in orders)

        log_section = raw.get("logging", {}) or {}
        if isinstance(log_section, dict) and "level" in log_section:
            self.LOG_LEVEL = str(log_section["level"]).upper()

    @property
    def log_level(self) -> int:
        return getattr(logging, self.LOG_LEVEL, logging.INFO)


def default_workers() -> int:
    """Physical core count when psutil is around, else 1."""
    try:
        import psutil
    except Exception:  # pragma: no cover
        psutil = None
    if psutil is None:
        return 1
    return max(1, psutil.cpu_count(logical=False) or 1)


def load_config(settings_path: Optional[Path] = None) -> Config:
    """Build a Config, overlaying ``hng.yaml`` when it exists."""
    cfg = Config()
    path = Path(settings_path) if settings_path else cfg.SETTINGS_PATH
    if path.exists():
        cfg.apply_settings(read_yaml(path))
        logger.debug(f"Loaded settings from {path}")
    return cfg


config = load_config()
