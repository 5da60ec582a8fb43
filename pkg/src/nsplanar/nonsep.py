"""Recognition of (maximal) non-separating planar graphs through the
three-branch characterization: outerplanar graphs, subgraphs of wheels,
and subgraphs of elongated triangular prisms.

The wheel branch is decided directly: some hub vertex whose removal
leaves a disjoint union of paths (packable into the rim of a large
enough wheel) or a single spanning cycle. The prism branch searches for
a subgraph embedding into elongated prisms with up to ``HOST_SLACK``
extra vertices beyond the candidate's order; the slack covers
non-spanning subgraphs at this scale and is configurable.
"""

from __future__ import annotations

from dataclasses import dataclass

from . import families
from .graph import Graph
from .planarity import OuterplanarityResult, is_linear_forest, is_outerplanar

HOST_SLACK = 3

OUTERPLANAR = "outerplanar"
WHEEL_SUBGRAPH = "wheel-subgraph"
PRISM_SUBGRAPH = "prism-subgraph"
NOT_NONSEPARATING = "not-nonseparating"


@dataclass
class NonsepClassification:
    verdict: str
    outerplanar_certificate: OuterplanarityResult | None = None
    hub: int | None = None
    host_counts: tuple[int, int, int] | None = None
    embedding: tuple[int, ...] | None = None  # vertex -> host vertex

    def __bool__(self) -> bool:
        return self.verdict != NOT_NONSEPARATING

    def to_dict(self) -> dict:
        out: dict = {"verdict": self.verdict}
        if self.hub is not None:
            out["hub"] = self.hub
        if self.host_counts is not None:
            out["host_subdivisions"] = list(self.host_counts)
            out["embedding"] = list(self.embedding)
        return out


def _wheel_hub(g: Graph) -> int | None:
    """A vertex whose removal leaves a linear forest or one spanning
    cycle, i.e. something that packs into the rim of a wheel."""
    for v in range(g.n):
        rest = g.delete_vertex(v)
        if is_linear_forest(rest):
            return v
        if (
            rest.n >= 3
            and rest.edge_count() == rest.n
            and all(d == 2 for d in rest.degrees())
            and rest.is_connected()
        ):
            return v
    return None


def _subgraph_embedding(g: Graph, host: Graph) -> tuple[int, ...] | None:
    """Injective edge-preserving map of ``g`` into ``host`` (not induced),
    by backtracking with degree pruning."""
    gadj, hadj = g.adjacency, host.adjacency
    gdeg = g.degrees()
    # most-constrained first: descending degree, then connect to placed
    order = sorted(range(g.n), key=lambda v: (-gdeg[v], v))
    placed: dict[int, int] = {}
    used = [False] * host.n

    def extend(idx: int) -> bool:
        if idx == len(order):
            return True
        v = order[idx]
        need = gadj[v]
        for hv in range(host.n):
            if used[hv] or hadj[hv].bit_count() < gdeg[v]:
                continue
            ok = True
            m = need
            while m:
                b = m & -m
                m ^= b
                u = b.bit_length() - 1
                if u in placed and not hadj[hv] >> placed[u] & 1:
                    ok = False
                    break
            if ok:
                placed[v] = hv
                used[hv] = True
                if extend(idx + 1):
                    return True
                del placed[v]
                used[hv] = False
        return False

    if extend(0):
        return tuple(placed[v] for v in range(g.n))
    return None


def _prism_host(g: Graph, slack: int = HOST_SLACK):
    if g.n < 3 or max(g.degrees(), default=0) > 3:
        return None
    for order in range(max(g.n, 6), g.n + slack + 1):
        total = order - 6
        for s1 in range(total, -1, -1):
            for s2 in range(min(s1, total - s1), -1, -1):
                s3 = total - s1 - s2
                if s3 > s2:
                    continue
                host = families.elongated_prism(s1, s2, s3)
                emb = _subgraph_embedding(g, host)
                if emb is not None:
                    return (s1, s2, s3), emb
    return None


def classify_nonseparating(g: Graph, slack: int = HOST_SLACK) -> NonsepClassification:
    """First satisfied branch in the order outerplanar, wheel, prism;
    ``NOT_NONSEPARATING`` only after all three fail."""
    op = is_outerplanar(g)
    if op.outerplanar:
        return NonsepClassification(OUTERPLANAR, outerplanar_certificate=op)
    hub = _wheel_hub(g)
    if hub is not None:
        return NonsepClassification(WHEEL_SUBGRAPH, hub=hub)
    hit = _prism_host(g, slack)
    if hit is not None:
        counts, emb = hit
        return NonsepClassification(
            PRISM_SUBGRAPH, host_counts=counts, embedding=emb
        )
    return NonsepClassification(NOT_NONSEPARATING)


def is_maximal_nonseparating(g: Graph, slack: int = HOST_SLACK) -> bool:
    """No same-order edge addition stays non-separating. Requires ``g``
    itself to classify as non-separating."""
    cls = classify_nonseparating(g, slack)
    if not cls:
        raise ValueError("graph is not non-separating")
    for u, v in g.non_edges():
        if classify_nonseparating(g.add_edge(u, v), slack):
            return False
    return True
