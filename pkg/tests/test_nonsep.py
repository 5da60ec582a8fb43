"""Non-separating classification and maximality."""

from __future__ import annotations

import pytest

from nsplanar import families
from nsplanar.nonsep import (
    NOT_NONSEPARATING,
    OUTERPLANAR,
    PRISM_SUBGRAPH,
    WHEEL_SUBGRAPH,
    classify_nonseparating,
    is_maximal_nonseparating,
)

from conftest import random_graph


class TestClassification:
    def test_cycles_outerplanar(self):
        for n in (3, 7, 11):
            assert classify_nonseparating(families.cycle(n)).verdict == OUTERPLANAR

    def test_wheel_is_wheel_subgraph(self):
        r = classify_nonseparating(families.wheel(9))
        assert r.verdict == WHEEL_SUBGRAPH

    def test_k23_is_wheel_subgraph_with_degree2_hub(self):
        g = families.complete_bipartite(2, 3)
        r = classify_nonseparating(g)
        assert r.verdict == WHEEL_SUBGRAPH
        assert g.degree(r.hub) == 2

    def test_prisms_classify_as_prism_subgraph(self):
        for counts in ((0, 0, 0), (2, 1, 1), (4, 0, 0)):
            r = classify_nonseparating(families.elongated_prism(*counts))
            assert r.verdict == PRISM_SUBGRAPH
            assert r.host_counts == counts

    def test_prism_fragments_stay_nonseparating(self):
        g = families.elongated_prism(1, 1, 1)
        r = classify_nonseparating(g.delete_edge(0, 2))
        assert r.verdict != NOT_NONSEPARATING

    def test_negative_cases(self):
        assert not classify_nonseparating(families.named("K5"))
        assert not classify_nonseparating(
            families.complete(4).join(families.empty(2))
        )

    def test_downward_closed_under_edge_deletion(self, rng):
        for n in (7, 8):
            for spec in families.maximal_nonseparating_specs(n)[:6]:
                g = spec.build()
                edges = g.sorted_edges()
                e = edges[rng.randrange(len(edges))]
                assert classify_nonseparating(g.delete_edge(*e))


class TestMaximality:
    def test_wheels_maximal(self):
        for n in range(7, 11):
            assert is_maximal_nonseparating(families.wheel(n))

    def test_prisms_maximal(self):
        assert is_maximal_nonseparating(families.elongated_prism(1, 0, 0))
        assert is_maximal_nonseparating(families.elongated_prism(2, 1, 0))

    def test_cycles_not_maximal(self):
        assert not is_maximal_nonseparating(families.cycle(8))

    def test_mops_maximal_except_fans(self):
        # a fan (triangulated polygon with a dominating vertex) is one rim
        # edge short of the wheel, so it is not maximal at its order
        for n in (6, 7):
            for g in families.enumerate_max_outerplanar(n):
                is_fan = any(g.degree(v) == n - 1 for v in range(n))
                assert is_maximal_nonseparating(g) == (not is_fan)

    def test_requires_nonseparating_input(self):
        with pytest.raises(ValueError):
            is_maximal_nonseparating(families.named("K6"))


class TestFamilyClosure:
    def test_families_classify_nonseparating(self):
        for n in (7, 9):
            for spec in families.maximal_nonseparating_specs(n):
                g = spec.build()
                assert classify_nonseparating(g), spec.describe()
