"""Delta-wye move engine and isomorphism-deduplicated closures.

``delta_wye`` replaces a triangle with a new degree-3 vertex joined to
its corners ("ty"); ``wye_delta`` is the reverse ("yt"): a degree-3
vertex is removed and its neighbors pairwise joined. Wye-delta is
allowed when some neighbor pairs are already adjacent; the duplicate
edges simply merge, so the edge count can drop. Both moves keep the
edge count unchanged in the merge-free case.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .canon import canonical_form
from .errors import ClosureBudgetError
from .graph import Graph

TRIANGLE_TO_STAR = "ty"
STAR_TO_TRIANGLE = "yt"
MOVE_KINDS = (TRIANGLE_TO_STAR, STAR_TO_TRIANGLE)


@dataclass(frozen=True)
class Move:
    kind: str
    site: tuple[int, ...]  # triangle (a, b, c) for "ty", (v,) for "yt"


def delta_wye(g: Graph, triangle: Sequence[int]) -> Graph:
    """Remove the triangle's edges and join a fresh vertex to its corners.
    Vertex count grows by one; edge count is preserved."""
    a, b, c = sorted(triangle)
    if len({a, b, c}) != 3 or not (
        g.has_edge(a, b) and g.has_edge(a, c) and g.has_edge(b, c)
    ):
        raise ValueError(f"({a}, {b}, {c}) does not induce a triangle")
    t = g.n
    edges = [e for e in g.edges if e not in {(a, b), (a, c), (b, c)}]
    edges += [(a, t), (b, t), (c, t)]
    return Graph(g.n + 1, edges, g.labels)


def wye_delta(g: Graph, v: int) -> Graph:
    """Delete degree-3 vertex ``v`` and join its neighbors pairwise.
    Already-adjacent neighbor pairs merge (simple-graph semantics)."""
    nbrs = g.neighbors(v)
    if len(nbrs) != 3:
        raise ValueError(f"vertex {v} has degree {len(nbrs)}, need 3")
    x, y, z = nbrs
    extra = [(x, y), (x, z), (y, z)]
    edges = set(g.edges) | set(extra)
    keep = [w for w in range(g.n) if w != v]
    pos = {w: i for i, w in enumerate(keep)}
    new_edges = [
        (pos[a], pos[b]) for a, b in edges if a != v and b != v
    ]
    labels = None
    if g.labels:
        labels = {pos[w]: g.labels[w] for w in keep if w in g.labels}
    return Graph(g.n - 1, new_edges, labels)


def apply_moves(g: Graph, moves: Iterable[Move]) -> Graph:
    for mv in moves:
        if mv.kind == TRIANGLE_TO_STAR:
            g = delta_wye(g, mv.site)
        elif mv.kind == STAR_TO_TRIANGLE:
            g = wye_delta(g, mv.site[0])
        else:
            raise ValueError(f"unknown move kind {mv.kind!r}")
    return g


@dataclass
class ClosureItem:
    graph: Graph
    seed_index: int
    moves: tuple[Move, ...]

    @property
    def name(self) -> str:
        if not self.moves:
            return f"seed{self.seed_index}"
        tags = "".join("+t" if m.kind == TRIANGLE_TO_STAR else "-y" for m in self.moves)
        return f"seed{self.seed_index}{tags}"


@dataclass
class ClosureResult:
    items: list[ClosureItem]
    complete: bool = True

    @property
    def graphs(self) -> list[Graph]:
        return [it.graph for it in self.items]


def closure(
    seeds: Sequence[Graph],
    kinds: Sequence[str] = MOVE_KINDS,
    max_order: int | None = None,
    max_graphs: int = 5000,
) -> ClosureResult:
    """Least move-closed set containing the seeds, up to isomorphism.

    Breadth-first with canonical dedup; the frontier is expanded in
    canonical order so the result is deterministic. Growing past
    ``max_graphs`` raises ``ClosureBudgetError`` carrying the partial set.
    """
    if not seeds:
        raise ValueError("need at least one seed graph")
    for kind in kinds:
        if kind not in MOVE_KINDS:
            raise ValueError(f"unknown move kind {kind!r}")
    found: dict[bytes, ClosureItem] = {}
    frontier: list[tuple[bytes, ClosureItem]] = []
    for i, g in enumerate(seeds):
        if max_order is not None and g.n > max_order:
            raise ValueError(f"seed {i} exceeds max_order={max_order}")
        key = canonical_form(g)
        if key not in found:
            item = ClosureItem(g, i, ())
            found[key] = item
            frontier.append((key, item))
    while frontier:
        frontier.sort(key=lambda kv: (kv[1].graph.n, kv[0]))
        next_frontier: list[tuple[bytes, ClosureItem]] = []
        for _, item in frontier:
            g = item.graph
            children: list[tuple[Move, Graph]] = []
            if TRIANGLE_TO_STAR in kinds and (
                max_order is None or g.n + 1 <= max_order
            ):
                for tri in g.triangles():
                    children.append(
                        (Move(TRIANGLE_TO_STAR, tri), delta_wye(g, tri))
                    )
            if STAR_TO_TRIANGLE in kinds:
                for v in range(g.n):
                    if g.degree(v) == 3:
                        children.append(
                            (Move(STAR_TO_TRIANGLE, (v,)), wye_delta(g, v))
                        )
            for mv, child in children:
                key = canonical_form(child)
                if key in found:
                    continue
                new_item = ClosureItem(
                    child, item.seed_index, item.moves + (mv,)
                )
                found[key] = new_item
                next_frontier.append((key, new_item))
                if len(found) > max_graphs:
                    partial = _sorted_items(found)
                    raise ClosureBudgetError(
                        f"closure exceeded {max_graphs} graphs", partial=partial
                    )
        frontier = next_frontier
    return ClosureResult(_sorted_items(found))


def _sorted_items(found: dict[bytes, ClosureItem]) -> list[ClosureItem]:
    return [
        item
        for _, item in sorted(
            found.items(), key=lambda kv: (kv[1].graph.n, kv[0])
        )
    ]


def closure_graphs(
    seeds: Sequence[Graph],
    kinds: Sequence[str] = MOVE_KINDS,
    max_order: int | None = None,
    max_graphs: int = 5000,
) -> list[Graph]:
    return closure(seeds, kinds, max_order, max_graphs).graphs
