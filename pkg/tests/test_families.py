"""Family constructors and enumerators."""

from __future__ import annotations

import pytest

from nsplanar import families
from nsplanar.canon import canonical_form, is_isomorphic
from nsplanar.errors import GraphTooLargeError
from nsplanar.nonsep import classify_nonseparating
from nsplanar.planarity import is_outerplanar, is_planar

# counts of triangulated polygons up to isomorphism, frozen from the
# enumerator itself and cross-checked against labeled triangulation
# totals (Catalan numbers) at small orders
MOP_COUNTS = {3: 1, 4: 1, 5: 1, 6: 3, 7: 4, 8: 12, 9: 27, 10: 82, 11: 228}


class TestSmallFamilies:
    def test_wheel4_is_k4(self):
        assert is_isomorphic(families.wheel(4), families.complete(4))

    def test_wheel_degree_profile(self):
        w = families.wheel(10)
        assert w.degree(9) == 9
        assert all(w.degree(i) == 3 for i in range(9))

    def test_wheel_rejects_small(self):
        with pytest.raises(ValueError):
            families.wheel(3)

    def test_path_by_edges(self):
        p = families.path_by_edges(2)
        assert p.n == 3 and p.edge_count() == 2
        assert families.path_by_edges(0).n == 1

    def test_named_graphs(self):
        assert families.named("K7").edge_count() == 21
        k = families.named("K331_1")
        assert k.n == 8 and k.edge_count() == 22
        p = families.named("Petersen")
        assert p.n == 10 and p.edge_count() == 15
        assert all(p.degree(v) == 3 for v in range(10))
        # girth 5: no triangles, no 4-cycles
        assert not list(p.triangles())
        adj = p.adjacency
        for u in range(10):
            for v in range(u + 1, 10):
                if not p.has_edge(u, v):
                    assert (adj[u] & adj[v]).bit_count() <= 1
        with pytest.raises(KeyError):
            families.named("K99")


class TestElongatedPrisms:
    def test_base_prism(self):
        g = families.elongated_prism(0, 0, 0)
        assert g.n == 6 and g.edge_count() == 9

    def test_order_formula(self):
        g = families.elongated_prism(3, 2, 1)
        assert g.n == 12 and g.edge_count() == 9 + 6

    def test_enumeration_counts(self):
        assert len(families.enumerate_elongated_prisms(10)) == 4
        assert len(families.enumerate_elongated_prisms(7)) == 1
        assert len(families.enumerate_elongated_prisms(6)) == 1

    def test_every_prism_planar_nonseparating(self):
        for n in (6, 8, 10):
            for g in families.enumerate_elongated_prisms(n):
                assert is_planar(g).planar
                assert classify_nonseparating(g)

    def test_dedup_under_canonical_form(self):
        for n in (8, 10):
            keys = [
                canonical_form(g)
                for g in families.enumerate_elongated_prisms(n)
            ]
            assert len(keys) == len(set(keys))


class TestMaxOuterplanar:
    def test_counts(self):
        for n, count in MOP_COUNTS.items():
            assert len(families.enumerate_max_outerplanar(n)) == count

    def test_edge_counts(self):
        for n in range(3, 11):
            for g in families.enumerate_max_outerplanar(n):
                assert g.edge_count() == 2 * n - 3

    def test_unique_mop5(self):
        (g,) = families.enumerate_max_outerplanar(5)
        assert g.edge_count() == 7

    def test_all_outputs_outerplanar_and_edge_maximal(self):
        for n in (5, 6, 7):
            for g in families.enumerate_max_outerplanar(n):
                assert is_outerplanar(g).outerplanar
                for u, v in g.non_edges():
                    assert not is_outerplanar(g.add_edge(u, v)).outerplanar

    def test_enumeration_deterministic_and_duplicate_free(self):
        a = [canonical_form(g) for g in families.enumerate_max_outerplanar(8)]
        b = [canonical_form(g) for g in families.enumerate_max_outerplanar(8)]
        assert a == b
        assert len(a) == len(set(a))

    def test_size_limit_is_an_error(self):
        with pytest.raises(GraphTooLargeError):
            families.enumerate_max_outerplanar(13)


class TestFamilySpec:
    def test_specs_build_and_describe(self):
        specs = families.maximal_nonseparating_specs(8)
        assert len(specs) == MOP_COUNTS[8] + 1 + 2
        for spec in specs:
            g = spec.build()
            assert g.n == 8 == spec.order
            assert spec.describe()

    def test_join_spec(self):
        spec = families.FamilySpec(
            "join",
            (
                families.FamilySpec("wheel", (6,)),
                families.FamilySpec("empty", (2,)),
            ),
        )
        g = spec.build()
        assert g.n == 8 and g.edge_count() == 4 * 8 - 10
