"""Canonical codes, isomorphism and containment search."""
import random
import unittest

from hng_canon import (
    are_isomorphic,
    canonical_code,
    canonical_graph,
    component_key,
    contains_induced,
    contains_subgraph,
    exhaustive_code,
    labelled_code,
)
from hng_graph import (
    claw,
    complement,
    complete,
    complete_bipartite,
    cycle,
    from_edges,
    graph6_decode,
    induced_subgraph,
    path,
    relabel,
    sun_with_pendant,
    union,
)


def _shuffled(g, seed):
    order = list(range(g.order))
    random.Random(seed).shuffle(order)
    return relabel(g, order)


class CanonicalCodeTests(unittest.TestCase):
    def test_code_ignores_labelling(self):
        for g in (sun_with_pendant(), complement(cycle(7)), union(claw(), path(4)), complete_bipartite(3, 4)):
            code = canonical_code(g)
            for seed in range(5):
                self.assertEqual(canonical_code(_shuffled(g, seed)), code)

    def test_separates_classes_like_the_exhaustive_minimum(self):
        rng = random.Random(7)
        graphs = []
        for _ in range(60):
            n = rng.randint(1, 6)
            graphs.append(from_edges(n, [(u, v) for v in range(n) for u in range(v) if rng.random() < 0.5]))
        graphs += [_shuffled(g, 11) for g in graphs[:20]]
        exact = [exhaustive_code(g) for g in graphs]
        fast = [canonical_code(g) for g in graphs]
        for i in range(len(graphs)):
            for j in range(i):
                self.assertEqual(fast[i] == fast[j], exact[i] == exact[j])

    def test_exhaustive_code_is_a_lower_bound(self):
        for g in (path(5), claw(), union(cycle(4), complete(2)), complement(path(6))):
            self.assertLessEqual(exhaustive_code(g), canonical_code(g))
            self.assertEqual(exhaustive_code(_shuffled(g, 2)), exhaustive_code(g))

    def test_canonical_graph_is_stored_form(self):
        g = _shuffled(sun_with_pendant(), 3)
        self.assertEqual(labelled_code(canonical_graph(g)), canonical_code(g))

    def test_code_round_trips_through_graph6(self):
        code = canonical_code(cycle(6))
        self.assertEqual(canonical_code(graph6_decode(code.graph6)), code)

    def test_isomorphism(self):
        self.assertTrue(are_isomorphic(path(4), complement(path(4))))
        self.assertTrue(are_isomorphic(cycle(5), complement(cycle(5))))
        self.assertFalse(are_isomorphic(cycle(4), union(complete(2), complete(2))))
        self.assertFalse(are_isomorphic(path(4), claw()))

    def test_component_key(self):
        a = union(cycle(4), path(3), complete(1))
        b = union(complete(1), path(3), cycle(4))
        self.assertEqual(component_key(a), component_key(b))
        self.assertNotEqual(component_key(a), component_key(union(cycle(4), path(4))))


class ContainmentTests(unittest.TestCase):
    def test_induced_witness_induces_the_pattern(self):
        host = path(6)
        witness = contains_induced(host, path(4))
        self.assertIsNotNone(witness)
        self.assertTrue(are_isomorphic(induced_subgraph(host, witness), path(4)))

    def test_induced_versus_subgraph(self):
        self.assertIsNone(contains_induced(cycle(5), cycle(4)))
        self.assertIsNotNone(contains_induced(cycle(5), path(4)))
        self.assertIsNone(contains_induced(complete(4), path(3)))
        self.assertIsNotNone(contains_subgraph(complete(4), path(3)))
        self.assertIsNotNone(contains_subgraph(cycle(5), path(5)))
        self.assertIsNone(contains_subgraph(path(5), cycle(5)))

    def test_subgraph_map_preserves_edges(self):
        host, pattern = sun_with_pendant(), claw()
        image = contains_subgraph(host, pattern)
        self.assertIsNotNone(image)
        self.assertEqual(len(set(image)), pattern.order)
        for u, v in pattern.edges():
            self.assertTrue(host.has_edge(image[u], image[v]))

    def test_empty_pattern(self):
        self.assertEqual(contains_induced(cycle(5), complete(0)), ())


if __name__ == "__main__":
    unittest.main()
