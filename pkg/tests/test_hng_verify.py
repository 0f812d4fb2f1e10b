"""Verification suites and report emission."""
import json
import tempfile
import unittest
from pathlib import Path

import numpy as np

from hng_c5 import type_mask
from hng_errors import ParameterOutOfRange
from hng_fixtures import hng1_up_to, slow
from hng_structure import compatible_types
from hng_verify import (
    LISTED_COMPATIBLE,
    MAX_COUNTEREXAMPLES,
    SUITES,
    SuiteOptions,
    VerificationReport,
    emit_report,
    listed_closure,
    random_graph,
    run_suite,
)


def _options(**kwargs):
    kwargs.setdefault("samples", 0)
    return SuiteOptions(**kwargs)


class ReportTests(unittest.TestCase):
    def test_verdict_follows_failures(self):
        report = VerificationReport("demo")
        self.assertEqual(report.verdict, "pass")
        report.fail("Dhc", "something broke", lhs=True, rhs=False)
        self.assertEqual(report.verdict, "fail")
        self.assertEqual(report.counterexamples[0]["clauses"], {"lhs": True, "rhs": False})

    def test_counterexamples_are_capped(self):
        report = VerificationReport("demo")
        for _ in range(MAX_COUNTEREXAMPLES + 5):
            report.fail("A_", "again")
        payload = report.to_payload()
        self.assertEqual(len(payload["counterexamples"]), MAX_COUNTEREXAMPLES)
        self.assertEqual(payload["details"]["counterexamples_total"], MAX_COUNTEREXAMPLES + 5)

    def test_json_is_deterministic_and_sorted(self):
        report = VerificationReport("demo", bounds={"nmax": 4})
        report.details.update(zeta=1, alpha=[{"order": 1, "count": 1}])
        with report.phase("total"):
            pass
        first = emit_report(report)
        self.assertEqual(first, emit_report(report))
        payload = json.loads(first)
        self.assertEqual(list(payload), sorted(payload))
        self.assertEqual(payload["schema_version"], 1)
        self.assertNotIn("timing_ms", payload)
        self.assertIn("total", json.loads(emit_report(report, include_timing=True))["timing_ms"])

    def test_text_format_and_files(self):
        report = VerificationReport("demo", bounds={"nmax": 4})
        report.details["per_order"] = [{"order": 1, "count": 1}, {"order": 2, "count": 2}]
        text = emit_report(report, "text")
        self.assertIn("verdict: pass", text)
        self.assertIn("per_order:", text)
        with tempfile.TemporaryDirectory() as tmp:
            out = Path(tmp) / "reports" / "demo.json"
            emit_report(report, "json", out)
            self.assertEqual(json.loads(out.read_text(encoding="utf-8"))["suite"], "demo")
        with self.assertRaises(ParameterOutOfRange):
            emit_report(report, "yaml")


class SuiteTests(unittest.TestCase):
    def test_registry(self):
        self.assertEqual(len(SUITES), 17)
        with self.assertRaises(ParameterOutOfRange):
            run_suite("nope")

    def test_enumeration(self):
        report = run_suite("enumeration", _options(nmax=5))
        self.assertTrue(report.passed, report.counterexamples)
        last = report.details["per_order"][-1]
        self.assertEqual((last["count"], last["naive"], last["atlas"]), (34, 34, 34))

    def test_small_exhaustive_suites_pass(self):
        for name, nmax in (
            ("inclusion-chain", 5),
            ("threshold", 5),
            ("bipartite-doublestar", 6),
            ("class-chain", 6),
            ("chi-bound", 6),
            ("apex-perfect", 6),
            ("fast-algorithms", 6),
        ):
            with self.subTest(suite=name):
                report = run_suite(name, _options(nmax=nmax))
                self.assertTrue(report.passed, report.counterexamples)
                self.assertEqual(report.bounds["nmax"], nmax)

    def test_threshold_reports_its_obstructions(self):
        report = run_suite("threshold", _options(nmax=4))
        self.assertEqual(len(report.details["obstructions"]), 3)

    def test_sampling_is_skipped_below_order_eight(self):
        report = run_suite("fast-algorithms", _options(nmax=5))
        self.assertIn("skipped", report.details["sampling"])

    def test_random_graph_is_seeded(self):
        a = random_graph(np.random.default_rng(3), 9, 0.5)
        b = random_graph(np.random.default_rng(3), 9, 0.5)
        self.assertEqual(a, b)

    def test_listed_closure_uses_the_swapped_row(self):
        closure = listed_closure()
        four = type_mask((1, 2, 3, 4))
        self.assertIn((0, True, four), closure)
        self.assertIn((four, True, 0), closure)
        self.assertNotIn((0, True, type_mask((1,))), closure)

    def test_computed_compatibility_stays_inside_the_listed_closure(self):
        F = hng1_up_to(7)
        closure = listed_closure()
        for v_type, adjacent, listed in LISTED_COMPATIBLE:
            t1 = type_mask(v_type)
            computed = set(compatible_types(t1, adjacent, F))
            with self.subTest(v_type=v_type, adjacent=adjacent):
                self.assertLessEqual(set(listed), computed)
                self.assertEqual({t2 for t2 in computed if (t1, adjacent, t2) not in closure}, set())
        self.assertIn(0, compatible_types(type_mask((1, 2, 3, 4)), True, F))

    @slow
    def test_obstruction_suites_at_order_seven(self):
        for name in ("obstructions", "obstruction-equivalence", "sum-perfect", "vertex-deletion",
                     "claw-free", "triangle-free"):
            with self.subTest(suite=name):
                report = run_suite(name, _options(nmax=7))
                self.assertTrue(report.passed, report.counterexamples)

    @slow
    def test_every_suite_at_order_eight(self):
        for name in sorted(SUITES):
            with self.subTest(suite=name):
                report = run_suite(name, _options(nmax=8, samples=200))
                self.assertTrue(report.passed, report.counterexamples)


if __name__ == "__main__":
    unittest.main()
