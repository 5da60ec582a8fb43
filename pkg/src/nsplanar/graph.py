"""Immutable simple undirected graphs on dense integer vertices.

Vertices are always ``0..n-1``. Edges are unordered pairs stored as
``(u, v)`` tuples with ``u < v``. An optional ``labels`` map carries
human-readable vertex names through operations so that certificates can
be written down in the same notation a construction was defined with;
labels never participate in equality or hashing.

Every operation returns a new ``Graph``; instances are safe to share
between threads.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Mapping

Edge = tuple[int, int]


def _normalize_edge(u: int, v: int) -> Edge:
    return (u, v) if u < v else (v, u)


class Graph:
    __slots__ = ("n", "edges", "labels", "_adj")

    def __init__(
        self,
        n: int,
        edges: Iterable[tuple[int, int]] = (),
        labels: Mapping[int, str] | None = None,
    ):
        if n < 0:
            raise ValueError("vertex count must be non-negative")
        norm = set()
        for u, v in edges:
            if u == v:
                raise ValueError(f"self-loop at vertex {u}")
            if not (0 <= u < n and 0 <= v < n):
                raise ValueError(f"edge ({u}, {v}) out of range for n={n}")
            norm.add(_normalize_edge(u, v))
        self.n = n
        self.edges = frozenset(norm)
        self.labels = dict(labels) if labels else None
        self._adj: tuple[int, ...] | None = None

    # -- basic accessors ---------------------------------------------------

    @property
    def adjacency(self) -> tuple[int, ...]:
        """Per-vertex neighbor bitmasks (bit ``v`` of ``adjacency[u]`` set
        iff ``uv`` is an edge)."""
        if self._adj is None:
            masks = [0] * self.n
            for u, v in self.edges:
                masks[u] |= 1 << v
                masks[v] |= 1 << u
            self._adj = tuple(masks)
        return self._adj

    def edge_count(self) -> int:
        return len(self.edges)

    def has_edge(self, u: int, v: int) -> bool:
        return _normalize_edge(u, v) in self.edges

    def degree(self, v: int) -> int:
        return self.adjacency[v].bit_count()

    def degrees(self) -> list[int]:
        return [m.bit_count() for m in self.adjacency]

    def neighbors(self, v: int) -> tuple[int, ...]:
        m = self.adjacency[v]
        out = []
        while m:
            b = m & -m
            out.append(b.bit_length() - 1)
            m ^= b
        return tuple(out)

    def vertices(self) -> range:
        return range(self.n)

    def sorted_edges(self) -> list[Edge]:
        return sorted(self.edges)

    def non_edges(self) -> list[Edge]:
        adj = self.adjacency
        return [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if not adj[u] >> v & 1
        ]

    def label_of(self, v: int) -> str:
        if self.labels and v in self.labels:
            return self.labels[v]
        return str(v)

    def index_of(self, label: str) -> int:
        """Vertex carrying the given label (exact match)."""
        if self.labels:
            for v, name in self.labels.items():
                if name == label:
                    return v
        raise KeyError(f"no vertex labeled {label!r}")

    # -- elementary operations ---------------------------------------------

    def complement(self) -> Graph:
        full = [
            (u, v)
            for u in range(self.n)
            for v in range(u + 1, self.n)
            if (u, v) not in self.edges
        ]
        return Graph(self.n, full, self.labels)

    def join(self, other: Graph) -> Graph:
        """Disjoint union plus all edges between the two vertex sets."""
        off = self.n
        edges = list(self.edges)
        edges += [(u + off, v + off) for u, v in other.edges]
        edges += [(u, v + off) for u in range(self.n) for v in range(other.n)]
        labels = None
        if self.labels or other.labels:
            labels = dict(self.labels or {})
            for v in range(other.n):
                labels[v + off] = other.label_of(v)
        return Graph(self.n + other.n, edges, labels)

    def disjoint_union(self, other: Graph) -> Graph:
        off = self.n
        edges = list(self.edges) + [(u + off, v + off) for u, v in other.edges]
        return Graph(self.n + other.n, edges)

    def add_edge(self, u: int, v: int) -> Graph:
        if u == v or not (0 <= u < self.n and 0 <= v < self.n):
            raise ValueError(f"invalid edge ({u}, {v})")
        if self.has_edge(u, v):
            raise ValueError(f"edge ({u}, {v}) already present")
        return Graph(self.n, list(self.edges) + [(u, v)], self.labels)

    def delete_edge(self, u: int, v: int) -> Graph:
        e = _normalize_edge(u, v)
        if e not in self.edges:
            raise ValueError(f"({u}, {v}) is not an edge")
        return Graph(self.n, self.edges - {e}, self.labels)

    def delete_vertex(self, v: int) -> Graph:
        return self.delete_vertices([v])

    def delete_vertices(self, vs: Iterable[int]) -> Graph:
        drop = set(vs)
        for v in drop:
            if not 0 <= v < self.n:
                raise ValueError(f"invalid vertex {v}")
        keep = [v for v in range(self.n) if v not in drop]
        return self.induced_subgraph(keep)

    def induced_subgraph(self, keep: Iterable[int]) -> Graph:
        """Subgraph induced on ``keep``, reindexed in the given order."""
        keep = list(keep)
        if len(set(keep)) != len(keep):
            raise ValueError("duplicate vertices in selection")
        pos = {v: i for i, v in enumerate(keep)}
        edges = [
            (pos[u], pos[v]) for u, v in self.edges if u in pos and v in pos
        ]
        labels = None
        if self.labels:
            labels = {
                pos[v]: self.labels[v] for v in keep if v in self.labels
            }
        return Graph(len(keep), edges, labels)

    def contract_edge(self, u: int, v: int) -> Graph:
        """Contract edge ``uv``: ``v`` merges into ``u``; loops vanish and
        parallel edges collapse (simple-graph semantics)."""
        if not self.has_edge(u, v):
            raise ValueError(f"({u}, {v}) is not an edge; cannot contract")
        keep = [w for w in range(self.n) if w != v]
        pos = {w: i for i, w in enumerate(keep)}
        edges = set()
        for a, b in self.edges:
            a2 = u if a == v else a
            b2 = u if b == v else b
            if a2 != b2:
                edges.add(_normalize_edge(pos[a2], pos[b2]))
        labels = None
        if self.labels:
            labels = {pos[w]: self.labels[w] for w in keep if w in self.labels}
        return Graph(len(keep), edges, labels)

    def relabeled(self, perm: Iterable[int]) -> Graph:
        """Apply a permutation, ``perm[old] = new``."""
        perm = list(perm)
        if sorted(perm) != list(range(self.n)):
            raise ValueError("not a permutation")
        edges = [(perm[u], perm[v]) for u, v in self.edges]
        labels = None
        if self.labels:
            labels = {perm[v]: name for v, name in self.labels.items()}
        return Graph(self.n, edges, labels)

    def with_labels(self, labels: Mapping[int, str] | None) -> Graph:
        return Graph(self.n, self.edges, labels)

    # -- structure queries ---------------------------------------------------

    def connected_components(self) -> list[tuple[int, ...]]:
        adj = self.adjacency
        seen = 0
        comps = []
        for s in range(self.n):
            if seen >> s & 1:
                continue
            comp = 1 << s
            frontier = comp
            while frontier:
                nxt = 0
                m = frontier
                while m:
                    b = m & -m
                    nxt |= adj[b.bit_length() - 1]
                    m ^= b
                frontier = nxt & ~comp
                comp |= frontier
            seen |= comp
            comps.append(_mask_to_tuple(comp))
        return comps

    def is_connected(self) -> bool:
        return self.n <= 1 or len(self.connected_components()) == 1

    def is_complete(self) -> bool:
        return len(self.edges) == self.n * (self.n - 1) // 2

    def triangles(self) -> Iterator[tuple[int, int, int]]:
        """All vertex triples inducing a triangle, in sorted order."""
        adj = self.adjacency
        for u, v in self.sorted_edges():
            common = adj[u] & adj[v]
            common &= ~((1 << (v + 1)) - 1)  # only w > v, dedup
            while common:
                b = common & -common
                yield (u, v, b.bit_length() - 1)
                common ^= b

    # -- dunder ------------------------------------------------------------

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, Graph)
            and self.n == other.n
            and self.edges == other.edges
        )

    def __hash__(self) -> int:
        return hash((self.n, self.edges))

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={len(self.edges)})"


def _mask_to_tuple(mask: int) -> tuple[int, ...]:
    out = []
    while mask:
        b = mask & -mask
        out.append(b.bit_length() - 1)
        mask ^= b
    return tuple(out)


def mask_to_vertices(mask: int) -> tuple[int, ...]:
    """Bit positions set in ``mask``, ascending."""
    return _mask_to_tuple(mask)


def vertices_to_mask(vs: Iterable[int]) -> int:
    mask = 0
    for v in vs:
        mask |= 1 << v
    return mask


def neighborhood_of_mask(adj: tuple[int, ...], mask: int) -> int:
    """Union of neighbor masks over the vertices in ``mask``."""
    acc = 0
    m = mask
    while m:
        b = m & -m
        acc |= adj[b.bit_length() - 1]
        m ^= b
    return acc & ~mask
