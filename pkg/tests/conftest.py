"""Shared fixtures: small-graph catalogs and random graph helpers."""

from __future__ import annotations

import random

import pytest

from nsplanar.canon import canonical_form, canonical_graph
from nsplanar.graph import Graph


def random_graph(rng: random.Random, n: int, p: float) -> Graph:
    return Graph(
        n,
        [
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < p
        ],
    )


def build_catalog(max_n: int) -> dict[int, list[Graph]]:
    """All graphs with 1..max_n vertices up to isomorphism, by vertex
    extension with canonical dedup."""
    catalog = {1: [Graph(1)]}
    for n in range(2, max_n + 1):
        seen: dict[bytes, Graph] = {}
        for g in catalog[n - 1]:
            base = list(g.edges)
            for nb in range(1 << (n - 1)):
                edges = base + [(i, n - 1) for i in range(n - 1) if nb >> i & 1]
                h = Graph(n, edges)
                key = canonical_form(h)
                if key not in seen:
                    seen[key] = canonical_graph(h)
        catalog[n] = [seen[k] for k in sorted(seen)]
    return catalog


@pytest.fixture(scope="session")
def catalog6() -> dict[int, list[Graph]]:
    return build_catalog(6)


@pytest.fixture
def rng() -> random.Random:
    return random.Random(20240811)
