"""Graph catalogs: counts, oracles and the on-disk cache."""
import tempfile
import unittest
from pathlib import Path

from hng_enumeration import (
    KNOWN_COUNTS,
    GraphCatalog,
    catalog_path,
    enumerate_order,
    ensure_catalog,
    iter_graphs,
    load_catalog,
    naive_classes,
    store_catalog,
)
from hng_errors import CorruptCatalog, ParameterOutOfRange, StaleCache
from hng_fixtures import slow
from hng_verify import atlas_codes


class EnumerationTests(unittest.TestCase):
    def test_counts_up_to_order_six(self):
        for n in range(1, 7):
            self.assertEqual(len(ensure_catalog(n)), KNOWN_COUNTS[n], msg=f"order {n}")

    def test_matches_exhaustive_enumeration(self):
        for n in range(0, 7):
            classes = naive_classes(n)
            self.assertEqual(len(classes), KNOWN_COUNTS[n], msg=f"order {n}")
            if n:
                self.assertEqual(classes, set(ensure_catalog(n).codes))

    def test_matches_networkx_atlas(self):
        for n in range(1, 7):
            self.assertEqual(atlas_codes(n), set(ensure_catalog(n).codes))

    def test_codes_are_sorted(self):
        codes = ensure_catalog(5).codes
        self.assertEqual(list(codes), sorted(set(codes)))

    def test_parent_order_is_checked(self):
        with self.assertRaises(ParameterOutOfRange):
            enumerate_order(5, parent=ensure_catalog(3))
        with self.assertRaises(ParameterOutOfRange):
            naive_classes(8)

    def test_iter_graphs(self):
        graphs = list(iter_graphs(4))
        self.assertEqual(len(graphs), 1 + 2 + 4 + 11)
        self.assertEqual([g.order for g in graphs[:3]], [1, 2, 2])

    @slow
    def test_counts_for_orders_seven_and_eight(self):
        self.assertEqual(len(ensure_catalog(7)), 1044)
        self.assertEqual(atlas_codes(7), set(ensure_catalog(7).codes))
        self.assertEqual(naive_classes(7), set(ensure_catalog(7).codes))
        self.assertEqual(len(ensure_catalog(8)), 12346)


class CatalogCacheTests(unittest.TestCase):
    def setUp(self):
        self._tmp = tempfile.TemporaryDirectory()
        self.cache = Path(self._tmp.name)

    def tearDown(self):
        self._tmp.cleanup()

    def test_store_and_reload(self):
        built = ensure_catalog(4, self.cache)
        path = catalog_path(4, self.cache)
        self.assertTrue(path.exists())
        self.assertTrue(path.read_text(encoding="ascii").startswith("# hng-catalog"))
        loaded = load_catalog(path, order=4, verify=True)
        self.assertEqual(loaded.codes, built.codes)

    def _write(self, name, lines):
        path = self.cache / name
        path.write_text("".join(f"{line}\n" for line in lines), encoding="ascii")
        return path

    def test_rejects_duplicates_and_unsorted_lines(self):
        lines = ensure_catalog(3).graph6_lines()
        with self.assertRaises(CorruptCatalog):
            load_catalog(self._write("dup.g6", [lines[0], lines[0]]))
        with self.assertRaises(CorruptCatalog):
            load_catalog(self._write("unsorted.g6", list(reversed(lines))))
        with self.assertRaises(CorruptCatalog):
            load_catalog(self._write("mixed.g6", ensure_catalog(2).graph6_lines() + lines))
        with self.assertRaises(CorruptCatalog):
            load_catalog(self._write("garbage.g6", ["B!"]))

    def test_rejects_other_format_versions(self):
        path = self._write("old.g6", ["# hng-catalog format=99 order=3"] + ensure_catalog(3).graph6_lines())
        with self.assertRaises(StaleCache):
            load_catalog(path)
        self._write("graphs-n3.v0.g6", ensure_catalog(3).graph6_lines())
        with self.assertRaises(StaleCache):
            ensure_catalog(3, self.cache)

    def test_rejects_wrong_class_count(self):
        partial = GraphCatalog(3, ensure_catalog(3).codes[:2])
        store_catalog(partial, catalog_path(3, self.cache))
        with self.assertRaises(CorruptCatalog):
            ensure_catalog(3, self.cache)


if __name__ == "__main__":
    unittest.main()
