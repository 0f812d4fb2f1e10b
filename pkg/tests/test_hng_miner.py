"""Mining minimal obstructions and the derived obstruction sets."""
import json
import tempfile
import unittest
from pathlib import Path

from hng_canon import canonical_code, contains_induced
from hng_errors import CorruptCatalog, MissingDependency, ParameterOutOfRange
from hng_fixtures import hng1_up_to, line_up_to, slow
from hng_graph import claw, complement, complete, complete_bipartite, cycle, path, sun_with_pendant, union
from hng_invariants import THRESHOLD_OBSTRUCTIONS, chromatic_number, matching_number
from hng_membership import in_hng
from hng_miner import (
    ObstructionSet,
    check_antichain,
    check_complement_closed,
    derive_claw_obstructions,
    derive_trianglefree_obstructions,
    ensure_obstructions,
    get_predicate,
    load_obstructions,
    mine_minimal_fis,
    obstruction_paths,
    store_obstructions,
)
from hng_verify import NAMED_LINE_OBSTRUCTIONS


class MiningTests(unittest.TestCase):
    def test_threshold_obstructions(self):
        for n_max in (4, 5):
            mined = mine_minimal_fis("threshold", n_max)
            self.assertEqual(set(mined.members), {canonical_code(h) for h in THRESHOLD_OBSTRUCTIONS})

    def test_hng0_matches_threshold(self):
        self.assertEqual(set(mine_minimal_fis("hng-0", 5).members), set(mine_minimal_fis("threshold", 5).members))

    def test_sum_perfect_starts_with_the_five_cycle(self):
        self.assertEqual(mine_minimal_fis("sum-perfect", 5).members, (canonical_code(cycle(5)),))

    def test_callable_predicate(self):
        mined = mine_minimal_fis(lambda g: g.edge_count == 0, 3, name="edgeless")
        self.assertEqual(mined.members, (canonical_code(complete(2)),))
        self.assertEqual(mined.name, "edgeless")

    def test_predicate_registry(self):
        self.assertTrue(get_predicate("hng-1")(cycle(5)))
        self.assertFalse(get_predicate("claw-free")(claw()))
        with self.assertRaises(ParameterOutOfRange):
            get_predicate("planar")
        with self.assertRaises(ParameterOutOfRange):
            mine_minimal_fis(lambda g: True, 3, workers=2)


class Hng1ObstructionTests(unittest.TestCase):
    def test_counts_through_order_seven(self):
        F = hng1_up_to(7)
        self.assertEqual(F.counts_by_order, {6: 24, 7: 24})
        self.assertEqual(len(F.parts["c5-free"]), 26)
        self.assertEqual(len(F.parts["c5"]), 22)
        self.assertTrue(F.complement_closed)
        self.assertEqual(check_antichain(F), [])

    def test_members_leave_the_class_minimally(self):
        F = hng1_up_to(7)
        for g in F.graphs():
            self.assertFalse(in_hng(g, 1))
        self.assertIn(canonical_code(sun_with_pendant()), F)
        self.assertIn(canonical_code(union(complete(2), complete(2), complete(2))), F)
        self.assertNotIn(canonical_code(cycle(5)), F)

    def test_find_in_returns_a_witness(self):
        F = hng1_up_to(7)
        host = union(cycle(4), complete(2), complete(1))
        found = F.find_in(host)
        self.assertIsNotNone(found)
        member, witness = found
        self.assertIsNotNone(contains_induced(host, member))
        self.assertEqual(len(witness), member.order)
        self.assertIsNone(F.find_in(cycle(5)))

    def test_complement_closed_check(self):
        self.assertTrue(check_complement_closed([canonical_code(path(4))]))
        self.assertFalse(check_complement_closed([canonical_code(claw())]))

    def test_triangle_free_set(self):
        T = derive_trianglefree_obstructions(hng1_up_to(7))
        triangle = canonical_code(complete(3))
        self.assertIn(triangle, T)
        others = [c.to_graph() for c in T.members if c != triangle]
        self.assertEqual(len(others), 12)
        for g in others:
            self.assertEqual(g.order, 6)
            self.assertLessEqual(chromatic_number(g), 2)
            self.assertEqual(matching_number(g), 3)
        self.assertEqual(T.provenance["n_max"], 7)

    def test_claw_set_contains_the_claw_and_no_other_claw(self):
        B = derive_claw_obstructions(hng1_up_to(7))
        self.assertEqual(B.members[0], canonical_code(claw()))
        for g in B.graphs()[1:]:
            self.assertIsNone(contains_induced(g, claw()))

    def test_sun_with_pendant_is_claw_free_but_its_complement_is_not(self):
        sun = sun_with_pendant()
        self.assertIsNone(contains_induced(sun, claw()))
        self.assertIsNotNone(contains_induced(complement(sun), claw()))
        B = derive_claw_obstructions(hng1_up_to(7))
        self.assertIn(canonical_code(sun), B.members)
        self.assertNotIn(canonical_code(complement(sun)), B.members)
        self.assertIn(canonical_code(complement(sun)), hng1_up_to(7).members)

    @slow
    def test_full_sets_at_order_eight(self):
        F = hng1_up_to(8)
        self.assertEqual(F.counts_by_order, {6: 24, 7: 24, 8: 4})
        self.assertEqual(len(derive_claw_obstructions(F)), 20)
        self.assertEqual(len(derive_trianglefree_obstructions(F)), 13)


class LineObstructionTests(unittest.TestCase):
    def test_named_members_with_six_edges(self):
        A = line_up_to(6)
        self.assertEqual(A.order_kind, "subgraph")
        for name, h in NAMED_LINE_OBSTRUCTIONS.items():
            self.assertIn(canonical_code(h), A, msg=name)
        for g in A.graphs():
            self.assertEqual(g.edge_count, 6)

    def test_subgraph_search(self):
        A = line_up_to(6)
        self.assertIsNotNone(A.find_in(complete_bipartite(3, 3)))
        self.assertIsNone(A.find_in(cycle(5)))

    @slow
    def test_sixteen_members_up_to_eight_edges(self):
        self.assertEqual(len(line_up_to(8)), 16)


class PersistenceTests(unittest.TestCase):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.dir = Path(self._tmp.name)

    def tearDown(self):
        self._tmp.cleanup()

    def test_store_and_load(self):
        F = hng1_up_to(7)
        store_obstructions(F, self.dir)
        loaded = load_obstructions("hng1", self.dir)
        self.assertEqual(loaded.members, F.members)
        self.assertEqual(loaded.parts["c5"], F.parts["c5"])
        self.assertTrue(loaded.complement_closed)
        self.assertEqual(loaded.provenance["n_max"], 7)

    def test_missing_set_names_the_command(self):
        with self.assertRaises(MissingDependency) as ctx:
            load_obstructions("claw", self.dir)
        self.assertIn("derive --set claw", ctx.exception.hint)

    def test_hash_mismatch(self):
        store_obstructions(ObstructionSet("demo", (canonical_code(path(4)),)), self.dir)
        g6_path, json_path = obstruction_paths("demo", self.dir)
        g6_path.write_text(f"{canonical_code(cycle(4)).graph6}\n", encoding="ascii")
        self.assertIn("hash", json.loads(json_path.read_text(encoding="utf-8")))
        with self.assertRaises(CorruptCatalog):
            load_obstructions("demo", self.dir)

    def test_ensure_reuses_sets_that_cover_the_order(self):
        store_obstructions(hng1_up_to(7), self.dir)
        reused = ensure_obstructions("hng1", 6, directory=self.dir)
        self.assertEqual(reused.provenance["n_max"], 7)
        derived = ensure_obstructions("triangle", 7, directory=self.dir)
        self.assertEqual(len(derived), 13)
        self.assertTrue(obstruction_paths("triangle", self.dir)[0].exists())
        with self.assertRaises(ParameterOutOfRange):
            ensure_obstructions("planar", 6)


if __name__ == "__main__":
    unittest.main()
