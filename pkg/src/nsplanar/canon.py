"""Canonical forms and isomorphism testing for small graphs.

The canonical form of a graph is the graph6 encoding of a canonically
relabeled copy, so equal byte strings mean isomorphic graphs and the
string itself is directly usable as a dedup key or for output.

Labeling is found by ordered-partition refinement plus backtracking over
the cells, keeping the lexicographically least adjacency matrix; prefix
pruning cuts most branches. Exact and deliberately simple: intended for
graphs with at most ``MAX_CANON_VERTICES`` vertices.
"""

from __future__ import annotations

from .errors import GraphTooLargeError
from .graph import Graph

MAX_CANON_VERTICES = 16


def canonical_relabeling(g: Graph) -> tuple[int, ...]:
    """A permutation ``perm[old] = new`` whose application yields the
    canonical copy. Isomorphic graphs map to identical copies."""
    n = g.n
    if n > MAX_CANON_VERTICES:
        raise GraphTooLargeError(
            f"canonical labeling limited to {MAX_CANON_VERTICES} vertices, got {n}"
        )
    if n <= 1:
        return tuple(range(n))
    m2 = 2 * len(g.edges)
    if m2 > n * (n - 1) // 2:
        # Canonicalize the sparser complement; any labeling canonical for
        # the complement is canonical for the graph itself.
        return canonical_relabeling(g.complement())
    if not g.edges:
        return tuple(range(n))

    adj = g.adjacency
    best_cols: list[int] | None = None
    best_order: list[int] | None = None

    def refine(cells: list[list[int]]) -> list[list[int]]:
        cells = [list(c) for c in cells]
        while True:
            masks = []
            for c in cells:
                m = 0
                for v in c:
                    m |= 1 << v
                masks.append(m)
            split = False
            for ci, cell in enumerate(cells):
                if len(cell) == 1:
                    continue
                groups: dict[tuple[int, ...], list[int]] = {}
                for v in cell:
                    key = tuple((adj[v] & m).bit_count() for m in masks)
                    groups.setdefault(key, []).append(v)
                if len(groups) > 1:
                    parts = [groups[k] for k in sorted(groups, reverse=True)]
                    cells[ci : ci + 1] = parts
                    split = True
                    break
            if not split:
                return cells

    def prefix_columns(order: list[int]) -> list[int]:
        cols = []
        for j, vj in enumerate(order):
            col = 0
            avj = adj[vj]
            for i in range(j):
                if avj >> order[i] & 1:
                    col |= 1 << i
            cols.append(col)
        return cols

    def search(cells: list[list[int]], tight: bool) -> None:
        nonlocal best_cols, best_order
        order = []
        branch_at = -1
        for ci, c in enumerate(cells):
            if len(c) == 1:
                order.append(c[0])
            else:
                branch_at = ci
                break
        if tight and best_cols is not None:
            cols = prefix_columns(order)
            for j, col in enumerate(cols):
                if col > best_cols[j]:
                    return
                if col < best_cols[j]:
                    tight = False
                    break
        if branch_at < 0:
            cols = prefix_columns(order)
            if best_cols is None or cols < best_cols:
                best_cols = cols
                best_order = order
            return
        cell = cells[branch_at]
        # Module cells (clique or independent set seen identically by every
        # outside vertex): all members are exchanged by automorphisms, so a
        # single branch choice suffices.
        choices = cell[:1] if _is_module_cell(adj, cell) else cell
        for v in choices:
            child = (
                cells[:branch_at]
                + [[v], [w for w in cell if w != v]]
                + cells[branch_at + 1 :]
            )
            search(refine(child), tight)

    search(refine([list(range(n))]), True)
    assert best_order is not None
    perm = [0] * n
    for pos, v in enumerate(best_order):
        perm[v] = pos
    return tuple(perm)


def _is_module_cell(adj: tuple[int, ...], cell: list[int]) -> bool:
    """True when all cell members are exchangeable by graph automorphisms
    that fix everything outside the cell.

    Sufficient condition used: identical neighborhoods outside the cell,
    and inside the cell a disjoint union of equal-size cliques (covers
    empty and complete cells and perfect matchings) or the complement of
    one (complete multipartite with equal parts)."""
    if len(cell) <= 1:
        return True
    cmask = 0
    for v in cell:
        cmask |= 1 << v
    outside = adj[cell[0]] & ~cmask
    d = (adj[cell[0]] & cmask).bit_count()
    for v in cell:
        if (adj[v] & ~cmask) != outside:
            return False
        if (adj[v] & cmask).bit_count() != d:
            return False
    if d == 0 or d == len(cell) - 1:
        return True

    def union_of_cliques(inner_mask_of) -> bool:
        for v in cell:
            block = inner_mask_of(v) | (1 << v)
            for u in cell:
                if block >> u & 1 and inner_mask_of(u) | (1 << u) != block:
                    return False
        return True

    if union_of_cliques(lambda v: adj[v] & cmask):
        return True
    return union_of_cliques(lambda v: ~adj[v] & cmask & ~(1 << v))


def canonical_graph(g: Graph) -> Graph:
    return g.relabeled(canonical_relabeling(g))


def canonical_form(g: Graph) -> bytes:
    """Canonical byte string: graph6 of the canonical copy."""
    from .encoding import to_graph6

    return to_graph6(canonical_graph(g)).encode("ascii")


def is_isomorphic(g: Graph, h: Graph) -> bool:
    if g.n != h.n or len(g.edges) != len(h.edges):
        return False
    if sorted(g.degrees()) != sorted(h.degrees()):
        return False
    return canonical_form(g) == canonical_form(h)
