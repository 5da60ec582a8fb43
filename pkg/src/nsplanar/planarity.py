"""Planarity, outerplanarity, and linear-forest tests, with certificates
on both sides.

Positive answers carry a rotation system (clockwise neighbor order per
vertex) validated here by face tracing against Euler's formula; negative
answers carry a minor certificate for one of the standard obstructions,
re-derivable independently via the minors module. The planarity kernel
itself is networkx's left-right test; every verdict leaving this module
is backed by one of those two checkable witnesses.

Outerplanarity reduces to planarity of the cone over the graph, so a
single tested kernel serves both predicates.
"""

from __future__ import annotations

from dataclasses import dataclass

import networkx as nx

from . import families
from .graph import Graph
from .minors import Budget, MinorCertificate, has_minor


@dataclass
class PlanarityResult:
    planar: bool
    rotation: dict[int, tuple[int, ...]] | None = None
    obstruction: MinorCertificate | None = None

    def __bool__(self) -> bool:
        return self.planar

    def to_dict(self) -> dict:
        out: dict = {"planar": self.planar}
        if self.rotation is not None:
            out["rotation"] = {v: list(ns) for v, ns in sorted(self.rotation.items())}
        if self.obstruction is not None:
            out["obstruction"] = self.obstruction.to_dict()
        return out


@dataclass
class OuterplanarityResult:
    outerplanar: bool
    rotation: dict[int, tuple[int, ...]] | None = None
    outer_order: tuple[int, ...] | None = None
    obstruction: MinorCertificate | None = None

    def __bool__(self) -> bool:
        return self.outerplanar


def _to_nx(g: Graph) -> nx.Graph:
    G = nx.Graph()
    G.add_nodes_from(range(g.n))
    G.add_edges_from(g.edges)
    return G


def is_planar(g: Graph) -> PlanarityResult:
    ok, witness = nx.check_planarity(_to_nx(g), counterexample=True)
    if ok:
        rotation = {
            v: tuple(order) for v, order in witness.get_data().items()
        }
        return PlanarityResult(True, rotation=rotation)
    sub_vertices = sorted(witness.nodes())
    sub = Graph(
        len(sub_vertices),
        [
            (sub_vertices.index(u), sub_vertices.index(v))
            for u, v in witness.edges()
        ],
    )
    # A Kuratowski subgraph is a subdivision: branch vertices of degree 4
    # mean it subdivides K5, otherwise K33.
    target = (
        families.named("K5")
        if max(sub.degrees()) == 4
        else families.named("K33")
    )
    cert = has_minor(sub, target)
    assert cert is not None, "Kuratowski subgraph must contain its obstruction"
    lifted = MinorCertificate(
        cert.target,
        tuple(
            frozenset(sub_vertices[v] for v in bs) for bs in cert.branch_sets
        ),
        {
            he: (sub_vertices[u], sub_vertices[v])
            for he, (u, v) in cert.edge_witnesses.items()
        },
    )
    return PlanarityResult(False, obstruction=lifted)


def trace_faces(g: Graph, rotation: dict[int, tuple[int, ...]]) -> int:
    """Number of faces the rotation system induces (half-edge tracing)."""
    succ: dict[tuple[int, int], tuple[int, int]] = {}
    for v, order in rotation.items():
        deg = len(order)
        for i, u in enumerate(order):
            # entering v from u, leave along the next neighbor clockwise
            succ[(u, v)] = (v, order[(i + 1) % deg])
    seen: set[tuple[int, int]] = set()
    faces = 0
    for start in succ:
        if start in seen:
            continue
        faces += 1
        cur = start
        while cur not in seen:
            seen.add(cur)
            cur = succ[cur]
    return faces


def euler_check(g: Graph, rotation: dict[int, tuple[int, ...]]) -> bool:
    """Validate a rotation system as a genus-zero embedding, component by
    component (v - e + f = 2 for each)."""
    if set(rotation) != set(range(g.n)):
        return False
    for v, order in rotation.items():
        if sorted(order) != sorted(g.neighbors(v)):
            return False
    for comp in g.connected_components():
        sub = g.induced_subgraph(comp)
        sub_rot = {
            i: tuple(comp.index(u) for u in rotation[v])
            for i, v in enumerate(comp)
        }
        if sub.edge_count() == 0:
            continue  # lone vertex: one face, Euler holds trivially
        f = trace_faces(sub, sub_rot)
        if sub.n - sub.edge_count() + f != 2:
            return False
    return True


def is_outerplanar(g: Graph, budget: Budget | None = None) -> OuterplanarityResult:
    """True iff the cone over ``g`` is planar. The positive certificate is
    an embedding of ``g`` with every vertex on one face (the one left by
    the deleted cone apex); the negative certificate is a K4 or K23
    minor."""
    cone = g.join(families.complete(1))
    apex = g.n
    res = is_planar(cone)
    if res.planar:
        rotation = {
            v: tuple(u for u in res.rotation[v] if u != apex)
            for v in range(g.n)
        }
        return OuterplanarityResult(
            True, rotation=rotation, outer_order=res.rotation[apex]
        )
    for obs_id in ("K4", "K23"):
        target = (
            families.complete(4)
            if obs_id == "K4"
            else families.complete_bipartite(2, 3)
        )
        cert = has_minor(g, target, budget)
        if cert is not None:
            return OuterplanarityResult(False, obstruction=cert)
    raise AssertionError("non-outerplanar graph lacks both K4 and K23 minors")


def is_linear_forest(g: Graph) -> bool:
    """Disjoint union of paths: max degree at most 2 and no cycle."""
    if any(d > 2 for d in g.degrees()):
        return False
    return g.edge_count() == g.n - len(g.connected_components())
