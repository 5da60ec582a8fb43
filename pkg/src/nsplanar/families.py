"""Constructors and up-to-isomorphism enumerators for the graph families
used throughout: wheels, cycles, paths, complete/empty graphs, elongated
triangular prisms, maximal outerplanar graphs (triangulated polygons),
and a handful of named constants.

Vertex labelings are frozen so that hand-written certificates can be
replayed verbatim:

* ``wheel(n)``: rim ``v1..v(n-1)`` in cycle order at indices ``0..n-2``,
  hub ``vn`` at index ``n-1``.
* ``elongated_prism(s1, s2, s3)``: triangles ``v1 v3 v5`` (indices 0,2,4)
  and ``v2 v4 v6`` (indices 1,3,5); the paths replacing the three
  triangle-joining edges run ``v1..v2``, ``v3..v4``, ``v5..v6`` with
  ``s1``, ``s2``, ``s3`` interior vertices labeled ``a, b, c, ...`` in
  path order along ``v1 v2`` first, then ``v3 v4``, then ``v5 v6``.
* ``enumerate_max_outerplanar(n)``: outer cycle ``v1..vn`` at indices
  ``0..n-1`` plus triangulating chords.
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from functools import lru_cache

from .canon import canonical_form
from .errors import GraphTooLargeError
from .graph import Graph

MAX_OUTERPLANAR_ENUM = 12


def empty(n: int) -> Graph:
    return Graph(n)


def complete(n: int) -> Graph:
    return Graph(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def cycle(n: int) -> Graph:
    if n < 3:
        raise ValueError("cycles need at least 3 vertices")
    return Graph(n, [(i, (i + 1) % n) for i in range(n)])


def path_by_edges(k: int) -> Graph:
    """Path with ``k`` edges (so ``k + 1`` vertices)."""
    if k < 0:
        raise ValueError("edge count must be non-negative")
    return Graph(k + 1, [(i, i + 1) for i in range(k)])


def complete_bipartite(a: int, b: int) -> Graph:
    return Graph(a + b, [(u, a + v) for u in range(a) for v in range(b)])


def wheel(n: int) -> Graph:
    """Hub joined to an ``(n-1)``-cycle; hub is the last vertex ``vn``."""
    if n < 4:
        raise ValueError("wheel graphs need at least 4 vertices")
    rim = n - 1
    edges = [(i, (i + 1) % rim) for i in range(rim)]
    edges += [(i, rim) for i in range(rim)]
    labels = {i: f"v{i + 1}" for i in range(n)}
    return Graph(n, edges, labels)


@dataclass(frozen=True)
class PrismSubdivision:
    """Interior vertex counts on the three triangle-joining prism edges."""

    s1: int
    s2: int
    s3: int

    def __post_init__(self):
        if min(self.s1, self.s2, self.s3) < 0:
            raise ValueError("subdivision counts must be non-negative")

    @property
    def order(self) -> int:
        return 6 + self.s1 + self.s2 + self.s3

    def sorted_counts(self) -> tuple[int, int, int]:
        return tuple(sorted((self.s1, self.s2, self.s3), reverse=True))


def elongated_prism(s1: int, s2: int, s3: int = 0) -> Graph:
    """Two disjoint triangles joined by three internally disjoint paths
    with ``s1``, ``s2``, ``s3`` interior vertices."""
    sub = PrismSubdivision(s1, s2, s3)
    labels = {i: f"v{i + 1}" for i in range(6)}
    edges = [(0, 2), (2, 4), (0, 4), (1, 3), (3, 5), (1, 5)]
    nxt = 6
    names = iter(string.ascii_lowercase)
    for (u, v), s in (((0, 1), s1), ((2, 3), s2), ((4, 5), s3)):
        prev = u
        for _ in range(s):
            labels[nxt] = next(names)
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
        edges.append((prev, v))
    return Graph(sub.order, edges, labels)


def enumerate_elongated_prisms(n: int) -> list[Graph]:
    """One representative per multiset of subdivision counts summing to
    ``n - 6``, in decreasing-count order."""
    if n < 6:
        raise ValueError("elongated prisms have at least 6 vertices")
    total = n - 6
    out = []
    for s1 in range(total, -1, -1):
        for s2 in range(min(s1, total - s1), -1, -1):
            s3 = total - s1 - s2
            if s3 <= s2:
                out.append(elongated_prism(s1, s2, s3))
    return out


@lru_cache(maxsize=None)
def _triangulation_chords(n: int) -> tuple[tuple[tuple[int, int], ...], ...]:
    """Chord sets of all triangulations of the convex polygon ``0..n-1``."""

    def rec(i: int, j: int) -> list[tuple[tuple[int, int], ...]]:
        if j - i < 2:
            return [()]
        out = []
        for k in range(i + 1, j):
            left = rec(i, k)
            right = rec(k, j)
            extra = []
            if k - i >= 2:
                extra.append((i, k))
            if j - k >= 2:
                extra.append((k, j))
            for a in left:
                for b in right:
                    out.append(tuple(sorted(a + b + tuple(extra))))
        return out

    return tuple(rec(0, n - 1))


def max_outerplanar_from_chords(n: int, chords) -> Graph:
    labels = {i: f"v{i + 1}" for i in range(n)}
    edges = [(i, (i + 1) % n) for i in range(n)]
    edges += list(chords)
    return Graph(n, edges, labels)


def enumerate_max_outerplanar(n: int) -> list[Graph]:
    """All maximal outerplanar graphs on ``n`` vertices up to isomorphism,
    built as triangulated polygons and deduplicated canonically."""
    if n < 3:
        raise ValueError("maximal outerplanar graphs need at least 3 vertices")
    if n > MAX_OUTERPLANAR_ENUM:
        raise GraphTooLargeError(
            f"enumeration limited to {MAX_OUTERPLANAR_ENUM} vertices, got {n}"
        )
    seen: dict[bytes, Graph] = {}
    for chords in _triangulation_chords(n):
        g = max_outerplanar_from_chords(n, chords)
        key = canonical_form(g)
        if key not in seen:
            seen[key] = g
    return [seen[k] for k in sorted(seen)]


def petersen_graph() -> Graph:
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    return Graph(10, edges)


def complete_multipartite(*parts: int) -> Graph:
    n = sum(parts)
    bounds = []
    start = 0
    for p in parts:
        bounds.append((start, start + p))
        start += p
    edges = []
    for ai, (a0, a1) in enumerate(bounds):
        for b0, b1 in bounds[ai + 1 :]:
            edges += [(u, v) for u in range(a0, a1) for v in range(b0, b1)]
    return Graph(n, edges)


NAMED_IDS = ("K5", "K33", "K6", "K7", "K331_1", "Petersen", "TriangularPrism")


def named(graph_id: str) -> Graph:
    """Fixed well-known graphs by identifier."""
    gid = graph_id.strip()
    if gid == "K5":
        return complete(5)
    if gid == "K33":
        return complete_bipartite(3, 3)
    if gid == "K6":
        return complete(6)
    if gid == "K7":
        return complete(7)
    if gid == "K331_1":
        return complete_multipartite(3, 3, 1, 1)
    if gid == "Petersen":
        return petersen_graph()
    if gid == "TriangularPrism":
        return elongated_prism(0, 0, 0)
    raise KeyError(f"unknown named graph {graph_id!r}")


# -- symbolic family descriptions ------------------------------------------------


@dataclass(frozen=True)
class FamilySpec:
    """Symbolic instance description, buildable and printable.

    Kinds: ``max_outerplanar`` (args: n, chord tuple), ``wheel`` (n),
    ``elongated_prism`` (s1, s2, s3), ``join`` (two specs), ``named``
    (identifier), ``cycle``/``path_edges``/``complete``/``empty`` (n).
    """

    kind: str
    args: tuple

    def build(self) -> Graph:
        k, a = self.kind, self.args
        if k == "max_outerplanar":
            return max_outerplanar_from_chords(a[0], a[1])
        if k == "wheel":
            return wheel(a[0])
        if k == "elongated_prism":
            return elongated_prism(*a)
        if k == "join":
            return a[0].build().join(a[1].build())
        if k == "named":
            return named(a[0])
        if k == "cycle":
            return cycle(a[0])
        if k == "path_edges":
            return path_by_edges(a[0])
        if k == "complete":
            return complete(a[0])
        if k == "empty":
            return empty(a[0])
        raise ValueError(f"unknown family kind {k!r}")

    @property
    def order(self) -> int:
        k, a = self.kind, self.args
        if k == "max_outerplanar":
            return a[0]
        if k in ("wheel", "cycle", "complete", "empty"):
            return a[0]
        if k == "path_edges":
            return a[0] + 1
        if k == "elongated_prism":
            return 6 + sum(a)
        if k == "join":
            return a[0].order + a[1].order
        if k == "named":
            return named(a[0]).n
        raise ValueError(f"unknown family kind {k!r}")

    def describe(self) -> str:
        k, a = self.kind, self.args
        if k == "max_outerplanar":
            chords = ",".join(f"{u + 1}-{v + 1}" for u, v in a[1])
            return f"max-outerplanar(n={a[0]}; chords {chords})"
        if k == "wheel":
            return f"wheel({a[0]})"
        if k == "elongated_prism":
            return f"elongated-prism{a}"
        if k == "join":
            return f"{a[0].describe()} + {a[1].describe()}"
        if k == "named":
            return str(a[0])
        return f"{k}({a[0]})"


def mop_spec(n: int, chords) -> FamilySpec:
    return FamilySpec("max_outerplanar", (n, tuple(sorted(map(tuple, chords)))))


def maximal_nonseparating_specs(n: int) -> list[FamilySpec]:
    """The three maximal families at order ``n``: every maximal
    outerplanar graph (up to isomorphism), the wheel, every elongated
    prism class."""
    specs: list[FamilySpec] = []
    for g in enumerate_max_outerplanar(n):
        chords = [e for e in g.sorted_edges() if not _is_polygon_edge(e, n)]
        specs.append(mop_spec(n, chords))
    if n >= 4:
        specs.append(FamilySpec("wheel", (n,)))
    if n >= 6:
        total = n - 6
        for s1 in range(total, -1, -1):
            for s2 in range(min(s1, total - s1), -1, -1):
                s3 = total - s1 - s2
                if s3 <= s2:
                    specs.append(FamilySpec("elongated_prism", (s1, s2, s3)))
    return specs


def _is_polygon_edge(e: tuple[int, int], n: int) -> bool:
    u, v = e
    return v - u == 1 or (u == 0 and v == n - 1)
