"""Graph construction, editing and graph6 I/O."""
import unittest

from hng_errors import InvalidVertex, MalformedGraph6, OrderCapExceeded, ParameterOutOfRange
from hng_graph import (
    FamilyKind,
    Graph,
    NamedFamily,
    VertexRole,
    add_vertex,
    claw,
    complement,
    complete,
    components,
    construct_named,
    cycle,
    delete_vertex,
    double_star,
    empty,
    from_edges,
    graph6_decode,
    graph6_encode,
    induced_subgraph,
    is_clique_mask,
    is_stable_mask,
    iter_bits,
    path,
    relabel,
    sun_with_pendant,
    union,
    vertex_role,
)


class GraphConstructionTests(unittest.TestCase):
    def test_rows_must_be_symmetric_and_loop_free(self):
        with self.assertRaises(ParameterOutOfRange):
            Graph(2, (0b10, 0))
        with self.assertRaises(ParameterOutOfRange):
            Graph(1, (0b1,))
        with self.assertRaises(ParameterOutOfRange):
            Graph(2, (0,))

    def test_from_edges_rejects_loops_and_unknown_vertices(self):
        with self.assertRaises(ParameterOutOfRange):
            from_edges(3, [(0, 0)])
        with self.assertRaises(InvalidVertex):
            from_edges(3, [(0, 3)])

    def test_order_cap(self):
        with self.assertRaises(OrderCapExceeded):
            cycle(33)
        self.assertEqual(empty(32).order, 32)

    def test_named_families_follow_documented_labels(self):
        star = claw()
        self.assertEqual(star.degrees(), (3, 1, 1, 1))
        ds = double_star(3, 2)
        self.assertEqual((ds.degree(0), ds.degree(1), ds.order), (3, 2, 5))
        sun = sun_with_pendant()
        self.assertEqual(sun.degrees(), (4, 4, 4, 3, 2, 2, 1))
        self.assertEqual(sun.edge_count, 10)

    def test_named_family_parameter_checks(self):
        with self.assertRaises(ParameterOutOfRange):
            construct_named(NamedFamily(FamilyKind.CYCLE, (2,)))
        with self.assertRaises(ParameterOutOfRange):
            construct_named(NamedFamily(FamilyKind.COMPLETE_BIPARTITE, (2,)))

    def test_union_expression(self):
        expr = NamedFamily(FamilyKind.UNION, parts=(NamedFamily(FamilyKind.CLAW), NamedFamily(FamilyKind.COMPLETE, (3,))))
        g = construct_named(expr)
        self.assertEqual((g.order, g.edge_count), (7, 6))
        self.assertEqual(g, union(claw(), complete(3)))


class GraphEditingTests(unittest.TestCase):
    def test_complement_is_an_involution(self):
        g = sun_with_pendant()
        self.assertEqual(complement(complement(g)), g)
        self.assertEqual(complement(complete(4)).edge_count, 0)

    def test_induced_subgraph_keeps_ascending_labels(self):
        self.assertEqual(induced_subgraph(cycle(5), [3, 1, 0, 2]), path(4))
        self.assertEqual(delete_vertex(cycle(5), 4), path(4))
        with self.assertRaises(InvalidVertex):
            induced_subgraph(cycle(5), [5])

    def test_add_vertex_accepts_list_or_mask(self):
        self.assertEqual(add_vertex(path(2), [0, 1]), complete(3))
        self.assertEqual(add_vertex(path(2), 0b11), complete(3))
        with self.assertRaises(ParameterOutOfRange):
            add_vertex(path(2), 0b100)

    def test_relabel_moves_the_centre(self):
        g = relabel(path(3), [1, 0, 2])
        self.assertEqual(g.degree(0), 2)

    def test_vertex_roles(self):
        self.assertIs(vertex_role(claw(), 0), VertexRole.DOMINATING)
        self.assertIs(vertex_role(claw(), 1), VertexRole.ORDINARY)
        self.assertIs(vertex_role(empty(1), 0), VertexRole.ISOLATED)

    def test_components_and_masks(self):
        g = union(path(2), empty(1), path(3))
        self.assertEqual(components(g), [0b11, 0b100, 0b111000])
        self.assertEqual(list(iter_bits(0b10110)), [1, 2, 4])
        self.assertTrue(is_stable_mask(cycle(5), 0b00101))
        self.assertFalse(is_stable_mask(cycle(5), 0b00011))
        self.assertTrue(is_clique_mask(complete(4), 0b1011))


class Graph6Tests(unittest.TestCase):
    def test_known_strings(self):
        self.assertEqual(graph6_encode(complete(2)), "A_")
        self.assertEqual(graph6_encode(cycle(5)), "Dhc")
        self.assertEqual(graph6_decode("Dhc"), cycle(5))
        self.assertEqual(graph6_decode(">>graph6<<A_\n"), complete(2))

    def test_decode_inverts_encode(self):
        for g in (empty(1), claw(), sun_with_pendant(), complement(cycle(7)), union(cycle(5), path(4))):
            self.assertEqual(graph6_decode(graph6_encode(g)), g)

    def test_malformed_lines(self):
        for bad in ("", "A!", "Dh", "A`"):
            with self.subTest(line=bad):
                with self.assertRaises(MalformedGraph6):
                    graph6_decode(bad)
        with self.assertRaises(OrderCapExceeded):
            graph6_decode("~?@?")


if __name__ == "__main__":
    unittest.main()
