"""Interval bounds for the Colin de Verdiere invariant."""

from __future__ import annotations

import pytest

from nsplanar import families
from nsplanar.errors import GraphTooLargeError
from nsplanar.graph import Graph
from nsplanar.minors import validate_certificate
from nsplanar.mu import check_klv, mu_bounds
from nsplanar.planarity import is_linear_forest, is_outerplanar, is_planar

from conftest import random_graph


class TestExactValues:
    def test_complete_graphs(self):
        assert (mu_bounds(families.named("K7")).lo, mu_bounds(families.named("K7")).hi) == (6, 6)
        assert mu_bounds(families.complete(2)).lo == 1

    def test_paths_and_small(self):
        iv = mu_bounds(families.path_by_edges(3))
        assert (iv.lo, iv.hi) == (1, 1)
        assert (mu_bounds(families.empty(4)).lo, mu_bounds(families.empty(4)).hi) == (0, 0)
        assert (mu_bounds(Graph(1)).lo, mu_bounds(Graph(1)).hi) == (0, 0)

    def test_family_complements_hit_n_minus_4(self):
        for n in (7, 8):
            for spec in families.maximal_nonseparating_specs(n):
                iv = mu_bounds(spec.build().complement())
                assert (iv.lo, iv.hi) == (n - 4, n - 4), spec.describe()

    def test_upper_route_via_apex_chain(self):
        # the apex certificate in the trace re-validates independently
        cg = families.wheel(9).complement()
        iv = mu_bounds(cg)
        assert (iv.lo, iv.hi) == (5, 5)

    def test_core_rules_alone_still_tight_on_families(self):
        for spec in families.maximal_nonseparating_specs(8):
            iv = mu_bounds(spec.build().complement(), external_rules=False)
            assert (iv.lo, iv.hi) == (4, 4), spec.describe()

    def test_size_limit(self):
        with pytest.raises(GraphTooLargeError):
            mu_bounds(families.complete(14))


class TestSoundness:
    def test_exact_values_match_small_characterizations(self, rng):
        for _ in range(120):
            g = random_graph(rng, rng.randrange(1, 9), rng.choice([0.25, 0.5, 0.75]))
            iv = mu_bounds(g)
            assert 0 <= iv.lo <= iv.hi
            if not iv.exact:
                continue
            v = iv.lo
            if g.edge_count() > 0:
                assert (v <= 1) == is_linear_forest(g)
                assert (v <= 2) == bool(is_outerplanar(g).outerplanar)
                assert (v <= 3) == bool(is_planar(g).planar)

    def test_interval_monotone_under_deletion(self):
        for spec in families.maximal_nonseparating_specs(8)[:8]:
            g = spec.build().complement()
            lo = mu_bounds(g).lo
            for v in range(0, g.n, 3):
                sub = g.delete_vertex(v)
                assert mu_bounds(sub).lo <= lo

    def test_trace_certificates_revalidate(self):
        iv = mu_bounds(families.wheel(8).complement())
        for step in iv.trace:
            cert = step.certificate
            if cert is None:
                continue
            if hasattr(cert, "branch_sets"):
                assert validate_certificate(
                    families.wheel(8).complement(), cert
                )

    def test_external_rules_flagged(self):
        iv = mu_bounds(families.path_by_edges(4))
        assert any(s.external for s in iv.trace)


class TestKlv:
    def test_complete_graph_holds(self):
        assert check_klv(families.complete(9)).status == "holds"

    def test_one_apex_samples_hold(self, rng):
        for _ in range(25):
            n = rng.randrange(5, 10)
            base = random_graph(rng, n - 1, 0.4)
            while not is_planar(base).planar:
                base = random_graph(rng, n - 1, 0.4)
            attach = [v for v in range(n - 1) if rng.random() < 0.5]
            g = Graph(n, list(base.edges) + [(v, n - 1) for v in attach])
            assert check_klv(g).status == "holds"

    def test_two_apex_over_nonseparating_core_holds(self):
        for spec in families.maximal_nonseparating_specs(7):
            h = spec.build()
            m = h.n
            edges = list(h.edges)
            edges += [(v, m) for v in range(m)]
            edges += [(v, m + 1) for v in range(m)]
            edges.append((m, m + 1))
            g = Graph(m + 2, edges)
            assert check_klv(g).status == "holds", spec.describe()

    def test_size_limit(self):
        with pytest.raises(GraphTooLargeError):
            check_klv(families.complete(13))
