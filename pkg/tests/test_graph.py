"""Core graph type: elementary operations, isomorphism, serialization."""

from __future__ import annotations

import random

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from nsplanar import families
from nsplanar.canon import canonical_form, is_isomorphic
from nsplanar.encoding import (
    from_edge_list,
    from_graph6,
    from_sparse6,
    parse_graph_line,
    to_edge_list,
    to_graph6,
    to_sparse6,
)
from nsplanar.errors import GraphFormatError, GraphTooLargeError
from nsplanar.graph import Graph

from conftest import random_graph


def graphs(max_n=10, p=None):
    @st.composite
    def build(draw):
        n = draw(st.integers(0, max_n))
        prob = p if p is not None else draw(st.sampled_from([0.2, 0.5, 0.8]))
        seed = draw(st.integers(0, 2**32 - 1))
        return random_graph(random.Random(seed), n, prob)

    return build()


class TestBasics:
    def test_rejects_self_loops_and_bad_indices(self):
        with pytest.raises(ValueError):
            Graph(3, [(1, 1)])
        with pytest.raises(ValueError):
            Graph(3, [(0, 3)])

    def test_adjacency_and_degrees(self):
        g = Graph(4, [(0, 1), (1, 2), (2, 3)])
        assert g.degrees() == [1, 2, 2, 1]
        assert g.neighbors(1) == (0, 2)
        assert g.has_edge(2, 1) and not g.has_edge(0, 2)

    def test_components(self):
        g = Graph(5, [(0, 1), (2, 3)])
        assert g.connected_components() == [(0, 1), (2, 3), (4,)]
        assert not g.is_connected()


class TestComplementAndJoin:
    def test_complement_c4_is_two_edges(self):
        c4 = families.cycle(4)
        cc = c4.complement()
        assert cc.edge_count() == 2
        assert is_isomorphic(cc, Graph(4, [(0, 1), (2, 3)]))

    def test_complement_of_wheel_shape(self):
        # hub isolates; the rest is the complete graph minus the rim cycle
        for n in (7, 9):
            cg = families.wheel(n).complement()
            rim = n - 1
            expected_edges = [
                (u, v)
                for u in range(rim)
                for v in range(u + 1, rim)
                if v - u != 1 and not (u == 0 and v == rim - 1)
            ]
            expected = Graph(n, expected_edges)
            assert is_isomorphic(cg, expected)
            assert cg.degree(n - 1) == 0

    def test_complement_of_unique_mop5(self):
        (mop5,) = families.enumerate_max_outerplanar(5)
        c = mop5.complement()
        assert c.edge_count() == 3
        assert is_isomorphic(c, Graph(5, [(0, 1), (1, 2), (2, 3)]))

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_n=12))
    def test_complement_involution(self, g):
        assert g.complement().complement() == g

    @settings(max_examples=200, deadline=None)
    @given(graphs(max_n=8), graphs(max_n=8))
    def test_join_edge_identity(self, a, b):
        j = a.join(b)
        assert j.n == a.n + b.n
        assert j.edge_count() == a.edge_count() + b.edge_count() + a.n * b.n

    def test_join_examples(self):
        for n in (5, 8, 10):
            g = families.wheel(n).join(families.empty(2))
            assert g.edge_count() == 4 * g.n - 10
        for hn in (4, 5, 6):
            h = families.enumerate_max_outerplanar(hn)[0]
            g = h.join(families.complete(3))
            assert g.edge_count() == 5 * g.n - 15
        assert families.complete(1).join(families.empty(1)).edge_count() == 1


class TestDeletionContraction:
    def test_contract_k4_gives_k3(self):
        g = families.complete(4).contract_edge(0, 1)
        assert is_isomorphic(g, families.complete(3))

    def test_delete_hub_gives_rim_cycle(self):
        for n in (6, 9):
            g = families.wheel(n).delete_vertex(n - 1)
            assert is_isomorphic(g, families.cycle(n - 1))

    def test_contract_prism_verticals_gives_triangle(self):
        g = families.elongated_prism(0, 0, 0)
        g = g.contract_edge(0, 1)
        # indices shift after each contraction; recompute by labels
        g = g.contract_edge(g.index_of("v3"), g.index_of("v4"))
        g = g.contract_edge(g.index_of("v5"), g.index_of("v6"))
        assert is_isomorphic(g, families.complete(3))

    def test_invalid_contraction_rejected(self):
        with pytest.raises(ValueError):
            families.cycle(5).contract_edge(0, 2)
        with pytest.raises(ValueError):
            families.cycle(5).add_edge(0, 1)

    @settings(max_examples=100, deadline=None)
    @given(graphs(max_n=8), st.integers(0, 2**32 - 1))
    def test_ops_commute_with_relabeling(self, g, seed):
        if g.n < 2:
            return
        rng = random.Random(seed)
        perm = list(range(g.n))
        rng.shuffle(perm)
        sg = g.relabeled(perm)
        v = rng.randrange(g.n)
        assert canonical_form(g.delete_vertex(v)) == canonical_form(
            sg.delete_vertex(perm[v])
        )
        if g.edges:
            u, w = sorted(g.edges)[rng.randrange(len(g.edges))]
            assert canonical_form(g.contract_edge(u, w)) == canonical_form(
                sg.contract_edge(perm[u], perm[w])
            )


class TestIsomorphism:
    def test_c5_self_complementary(self):
        c5 = families.cycle(5)
        assert is_isomorphic(c5, c5.complement())

    def test_k33_not_complement_of_c6(self):
        # the complement of the 6-cycle contains triangles; K33 does not
        assert not is_isomorphic(
            families.complete_bipartite(3, 3), families.cycle(6).complement()
        )

    def test_canonical_form_stable_under_relabeling(self, rng):
        g = random_graph(rng, 9, 0.45)
        ref = canonical_form(g)
        for _ in range(100):
            perm = list(range(9))
            rng.shuffle(perm)
            assert canonical_form(g.relabeled(perm)) == ref

    def test_agrees_with_networkx(self, rng):
        for _ in range(300):
            n = rng.randrange(2, 9)
            a = random_graph(rng, n, rng.choice([0.2, 0.5, 0.8]))
            b = random_graph(rng, n, rng.choice([0.2, 0.5, 0.8]))
            A = nx.Graph([*a.edges])
            A.add_nodes_from(range(n))
            B = nx.Graph([*b.edges])
            B.add_nodes_from(range(n))
            assert is_isomorphic(a, b) == nx.is_isomorphic(A, B)

    def test_too_large_is_an_error_not_a_guess(self):
        with pytest.raises(GraphTooLargeError):
            canonical_form(families.cycle(17))


class TestEncodings:
    @settings(max_examples=200, deadline=None)
    @given(graphs(max_n=14))
    def test_graph6_round_trip_and_bit_exactness(self, g):
        s = to_graph6(g)
        assert from_graph6(s) == g
        G = nx.Graph()
        G.add_nodes_from(range(g.n))
        G.add_edges_from(g.edges)
        assert s == nx.to_graph6_bytes(G, header=False).decode().strip()

    @settings(max_examples=200, deadline=None)
    @given(graphs(max_n=14))
    def test_sparse6_round_trip_and_bit_exactness(self, g):
        s = to_sparse6(g)
        assert from_sparse6(s) == g
        G = nx.Graph()
        G.add_nodes_from(range(g.n))
        G.add_edges_from(g.edges)
        assert s == nx.to_sparse6_bytes(G, header=False).decode().strip()

    def test_sparse6_power_of_two_corner(self, rng):
        for n in (2, 4, 8, 16):
            for _ in range(200):
                g = random_graph(rng, n, 0.3)
                s = to_sparse6(g)
                assert from_sparse6(s) == g
                G = nx.Graph()
                G.add_nodes_from(range(n))
                G.add_edges_from(g.edges)
                assert s == nx.to_sparse6_bytes(G, header=False).decode().strip()

    def test_headers_tolerated_on_input(self):
        g = families.cycle(5)
        assert parse_graph_line(">>graph6<<" + to_graph6(g)) == g
        assert parse_graph_line(">>sparse6<<" + to_sparse6(g)) == g

    def test_malformed_input_reports_offset(self):
        with pytest.raises(GraphFormatError) as exc:
            from_graph6("D" + chr(30))
        assert exc.value.offset is not None
        with pytest.raises(GraphFormatError):
            from_graph6("Dk???")  # trailing bytes

    def test_edge_list_round_trip(self):
        g = Graph(6, [(0, 3), (2, 5)])
        assert from_edge_list(to_edge_list(g)) == g
        assert from_edge_list("0 1\n1 2\n") == Graph(3, [(0, 1), (1, 2)])


class TestLabels:
    def test_labels_follow_operations(self):
        g = families.elongated_prism(2, 1, 1)
        assert g.label_of(0) == "v1" and g.label_of(6) == "a"
        assert g.index_of("d") == 9
        h = g.delete_vertex(0)
        assert h.label_of(h.index_of("v2")) == "v2"
        c = g.complement()
        assert c.index_of("b") == 7
