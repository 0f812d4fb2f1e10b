"""Command-line behaviour and exit codes."""
import contextlib
import io
import json
import tempfile
import unittest
from pathlib import Path

from hng_cli import EXIT_OK, EXIT_USAGE, main
from hng_config import config
from hng_graph import graph6_encode, path


def _run(*argv):
    out, err = io.StringIO(), io.StringIO()
    with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
        code = main(["-q", *argv])
    return code, out.getvalue(), err.getvalue()


class InMemoryCommandTests(unittest.TestCase):
    def test_invariants_of_the_five_cycle(self):
        code, out, _ = _run("--no-cache", "invariants", "Dhc")
        self.assertEqual(code, EXIT_OK)
        data = json.loads(out)
        self.assertEqual((data["chi"], data["theta"], data["defect"], data["hereditary_defect"]), (3, 3, 0, 1))
        self.assertFalse(data["flags"]["perfect"])
        self.assertTrue(data["fast"]["agrees"])

    def test_invariants_of_an_edge(self):
        code, out, _ = _run("--no-cache", "invariants", "A_")
        data = json.loads(out)
        self.assertEqual((code, data["chi"], data["theta"], data["defect"]), (EXIT_OK, 2, 1, 0))

    def test_malformed_graph6_is_a_usage_error(self):
        code, _, err = _run("--no-cache", "invariants", "A!")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("error:", err)

    def test_membership(self):
        code, out, _ = _run("--no-cache", "membership", "--a", "0", "Dhc")
        data = json.loads(out)
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(data["in_ng"])
        self.assertFalse(data["in_hng"])

    def test_profile_and_fast_invariants(self):
        code, out, _ = _run("--no-cache", "profile-c5", "Dhc")
        data = json.loads(out)
        self.assertEqual(data["profile"]["c5"], [0, 1, 2, 3, 4])
        self.assertTrue(data["exceptional_shape"])
        self.assertIsNotNone(data["family"])
        code, out, _ = _run("--no-cache", "fast-invariants", "Dhc")
        self.assertEqual((code, json.loads(out)["chi"]), (EXIT_OK, 3))

    def test_fast_invariants_reject_non_members(self):
        code, _, _ = _run("--no-cache", "fast-invariants", graph6_encode(path(6)))
        self.assertEqual(code, EXIT_USAGE)

    def test_check_triangle_theorem(self):
        code, out, _ = _run("--no-cache", "check", "--theorem", "triangle", "--nmax", "6", "Dhc")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(json.loads(out)["consistent"])

    def test_enumerate_and_mine(self):
        code, out, _ = _run("--no-cache", "enumerate", "--nmax", "3", "--graph6")
        self.assertEqual(code, EXIT_OK)
        lines = out.splitlines()
        self.assertEqual(lines[:3], ["n=1: 1 graphs", "n=2: 2 graphs", "n=3: 4 graphs"])
        self.assertEqual(len(lines), 7)
        code, out, _ = _run("--no-cache", "mine", "--predicate", "threshold", "--nmax", "4")
        self.assertEqual((code, len(out.splitlines())), (EXIT_OK, 3))
        code, _, _ = _run("--no-cache", "mine", "--predicate", "planar", "--nmax", "3")
        self.assertEqual(code, EXIT_USAGE)

    def test_enumerate_and_mine_write_files(self):
        with tempfile.TemporaryDirectory() as tmp:
            catalog = Path(tmp) / "order4.g6"
            code, out, _ = _run("--no-cache", "enumerate", "--n", "4", "--out", str(catalog))
            self.assertEqual(code, EXIT_OK)
            self.assertEqual(out.splitlines()[-1], "n=4: 11 graphs")
            self.assertEqual(len(catalog.read_text().splitlines()), 11)
            found = Path(tmp) / "threshold.g6"
            code, out, _ = _run("--no-cache", "mine", "--class", "threshold", "--nmax", "4", "--out", str(found))
            self.assertEqual((code, out), (EXIT_OK, ""))
            self.assertEqual(len(found.read_text().splitlines()), 3)

    def test_verify_to_stdout_and_file(self):
        code, out, _ = _run("--no-cache", "verify", "--suite", "threshold", "--nmax", "4")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)["verdict"], "pass")
        with tempfile.TemporaryDirectory() as tmp:
            target = Path(tmp) / "threshold.txt"
            code, out, _ = _run("--no-cache", "verify", "--suite", "threshold", "--nmax", "4",
                                "--format", "text", "--out", str(target))
            self.assertEqual((code, out), (EXIT_OK, ""))
            self.assertIn("verdict: pass", target.read_text(encoding="utf-8"))

    def test_bad_flag_values_exit_through_argparse(self):
        with contextlib.redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as ctx:
                main(["--no-cache", "verify", "--nmax", "0"])
        self.assertEqual(ctx.exception.code, EXIT_USAGE)


class CachedCommandTests(unittest.TestCase):
    def setUp(self):
        self._saved = config.CACHE_DIR
        self._tmp = tempfile.TemporaryDirectory()

    def tearDown(self):
        config.CACHE_DIR = self._saved
        self._tmp.cleanup()

    def test_check_needs_a_derived_set(self):
        cache = self._tmp.name
        code, _, err = _run("--cache-dir", cache, "check", "--theorem", "triangle", "Dhc")
        self.assertEqual(code, EXIT_USAGE)
        self.assertIn("hint: hng_cli.py derive --set triangle", err)
        code, out, _ = _run("--cache-dir", cache, "derive", "--set", "triangle", "--nmax", "6")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)["name"], "triangle")
        self.assertTrue((Path(cache) / "obstructions" / "hng1.v1.g6").exists())
        code, out, _ = _run("--cache-dir", cache, "check", "--theorem", "triangle", "Dhc")
        self.assertEqual(code, EXIT_OK)


if __name__ == "__main__":
    unittest.main()
