"""Configuration, validation and file helpers."""
import argparse
import logging
import os
import tempfile
import unittest
from pathlib import Path
from unittest import mock

from hng_config import Config, default_workers, expand_path, load_config, read_yaml
from hng_errors import InvalidVertex, ParameterOutOfRange
from hng_logging import setup_logging
from hng_utils import json_dumps, lines_hash, safe_load_json, safe_save_json, write_lines_atomic
from hng_validation import bounded_int, check_vertex, check_vertex_subset, int_arg


class ConfigTests(unittest.TestCase):
    def test_apply_settings(self):
        cfg = Config()
        cfg.apply_settings({"suites": {"nmax": 6, "samples": 50, "sample_orders": [9]}, "logging": {"level": "debug"}})
        self.assertEqual((cfg.DEFAULT_NMAX, cfg.DEFAULT_SAMPLES, cfg.SAMPLE_ORDERS), (6, 50, (9,)))
        self.assertEqual(cfg.log_level, logging.DEBUG)
        with self.assertRaises(ValueError):
            cfg.apply_settings({"paths": ["cache"]})

    def test_load_config_resolves_cache_dir(self):
        with tempfile.TemporaryDirectory() as tmp:
            settings = Path(tmp) / "hng.yaml"
            settings.write_text('paths:\n  cache_dir: "{base_dir}/elsewhere"\n', encoding="utf-8")
            env = {k: v for k, v in os.environ.items() if k != "HNG_CACHE_DIR"}
            with mock.patch.dict(os.environ, env, clear=True):
                cfg = load_config(settings)
            self.assertEqual(cfg.CACHE_DIR, (cfg.BASE_DIR / "elsewhere").resolve())
            self.assertEqual(cfg.CATALOG_DIR, cfg.CACHE_DIR / "catalogs")

    def test_environment_wins_over_the_settings_file(self):
        with tempfile.TemporaryDirectory() as tmp:
            settings = Path(tmp) / "hng.yaml"
            settings.write_text('paths:\n  cache_dir: "/nowhere"\n', encoding="utf-8")
            with mock.patch.dict(os.environ, {"HNG_CACHE_DIR": tmp}):
                cfg = load_config(settings)
            self.assertEqual(cfg.CACHE_DIR, Path(tmp).resolve())

    def test_read_yaml_needs_a_mapping(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = Path(tmp) / "list.yaml"
            path.write_text("- a\n- b\n", encoding="utf-8")
            with self.assertRaises(ValueError):
                read_yaml(path)

    def test_expand_path(self):
        self.assertEqual(expand_path("{base_dir}/x", {"base_dir": "/b"}), "/b/x")
        self.assertEqual(expand_path(None), "")
        self.assertFalse(expand_path("~/x").startswith("~"))

    def test_default_workers(self):
        self.assertGreaterEqual(default_workers(), 1)


class ValidationTests(unittest.TestCase):
    def test_bounded_int(self):
        self.assertEqual(bounded_int("7", "n", 0, 9), 7)
        for bad in ("abc", None, -1, 10):
            with self.assertRaises(ParameterOutOfRange):
                bounded_int(bad, "n", 0, 9)

    def test_int_arg_reports_through_argparse(self):
        parse = int_arg(1, 8)
        self.assertEqual(parse("3"), 3)
        with self.assertRaises(argparse.ArgumentTypeError):
            parse("9")

    def test_vertices(self):
        self.assertEqual(check_vertex_subset(5, [3, 1, 3]), (1, 3))
        for bad in (5, -1, True, "0"):
            with self.assertRaises(InvalidVertex):
                check_vertex(5, bad)


class FileHelperTests(unittest.TestCase):
    def test_json_dumps_is_sorted(self):
        self.assertEqual(json_dumps({"b": 1, "a": 2}, None), '{"a": 2, "b": 1}\n')

    def test_lines_hash_ignores_order(self):
        self.assertEqual(lines_hash(["A_", "Dhc"]), lines_hash(["Dhc", "A_"]))
        self.assertNotEqual(lines_hash(["A_"]), lines_hash(["A?"]))

    def test_atomic_writes(self):
        with tempfile.TemporaryDirectory() as tmp:
            path = write_lines_atomic(Path(tmp) / "sub" / "set.g6", ["A_", "Dhc"], header="demo")
            self.assertEqual(path.read_text(encoding="utf-8"), "# demo\nA_\nDhc\n")
            self.assertFalse(path.with_suffix(".g6.tmp").exists())
            target = Path(tmp) / "data.json"
            self.assertTrue(safe_save_json(target, {"x": 1}))
            self.assertEqual(safe_load_json(target), {"x": 1})

    def test_safe_load_json_tolerates_bad_files(self):
        with tempfile.TemporaryDirectory() as tmp:
            self.assertIsNone(safe_load_json(Path(tmp) / "missing.json"))
            broken = Path(tmp) / "broken.json"
            broken.write_text("{not json", encoding="utf-8")
            with self.assertLogs("hng", level="WARNING"):
                self.assertIsNone(safe_load_json(broken))


class LoggingTests(unittest.TestCase):
    def test_setup_logging_returns_the_shared_logger(self):
        logger = setup_logging(None, logging.WARNING)
        self.assertEqual(logger.name, "hng")
        self.assertIs(setup_logging(None, logging.WARNING), logger)

    def test_file_handler_follows_the_log_dir(self):
        with tempfile.TemporaryDirectory() as tmp:
            logger = setup_logging(Path(tmp) / "a", logging.WARNING)
            setup_logging(Path(tmp) / "b", logging.WARNING)
            files = [h for h in logger.handlers if isinstance(h, logging.FileHandler)]
            try:
                self.assertEqual(len(files), 1)
                self.assertEqual(Path(files[0].baseFilename), (Path(tmp) / "b" / "hng.log").resolve())
            finally:
                for h in files:
                    logger.removeHandler(h)
                    h.close()


if __name__ == "__main__":
    unittest.main()
