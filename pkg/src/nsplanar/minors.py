"""Minor containment search with explicit, independently checkable
certificates.

``has_minor`` runs a complete branch-and-bound over branch-set
assignments: target vertices are embedded one at a time (maximum-
adjacency order), each receiving a connected set of unused host
vertices that touches every previously placed neighbor. A ``None``
answer is exhaustive; running out of budget raises
``BudgetExceededError`` instead of ever degrading to a false "no".

``minor_closure_canons`` / ``naive_has_minor`` implement the slow
deletion/contraction oracle used to cross-check the solver on small
graphs.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field

from .canon import canonical_form
from .errors import BudgetExceededError, GraphTooLargeError
from .graph import Edge, Graph, mask_to_vertices, neighborhood_of_mask


class Budget:
    """Node/time budget shared across nested searches."""

    __slots__ = ("max_nodes", "deadline", "nodes")

    def __init__(
        self, max_nodes: int | None = None, max_seconds: float | None = None
    ):
        self.max_nodes = max_nodes
        self.deadline = (
            time.monotonic() + max_seconds if max_seconds is not None else None
        )
        self.nodes = 0

    def tick(self) -> None:
        self.nodes += 1
        if self.max_nodes is not None and self.nodes > self.max_nodes:
            raise BudgetExceededError(
                f"search exceeded {self.max_nodes} nodes", nodes=self.nodes
            )
        if self.deadline is not None and self.nodes % 1024 == 0:
            if time.monotonic() > self.deadline:
                raise BudgetExceededError(
                    "search exceeded time budget", nodes=self.nodes
                )


@dataclass
class MinorCertificate:
    """Witness that ``target`` is a minor of some host graph: one branch
    set per target vertex plus a host edge for every target edge."""

    target: Graph
    branch_sets: tuple[frozenset[int], ...]
    edge_witnesses: dict[Edge, Edge] = field(default_factory=dict)

    def to_dict(self) -> dict:
        return {
            "target_n": self.target.n,
            "target_edges": sorted(map(list, self.target.edges)),
            "branch_sets": [sorted(s) for s in self.branch_sets],
            "edge_witnesses": {
                f"{a},{b}": list(e) for (a, b), e in sorted(self.edge_witnesses.items())
            },
        }


class ValidationReport:
    __slots__ = ("ok", "reason")

    def __init__(self, ok: bool, reason: str = "ok"):
        self.ok = ok
        self.reason = reason

    def __bool__(self) -> bool:
        return self.ok

    def __repr__(self) -> str:
        return f"ValidationReport(ok={self.ok}, reason={self.reason!r})"


def validate_certificate(g: Graph, cert: MinorCertificate) -> ValidationReport:
    """Re-check every invariant of a minor certificate, independent of the
    solver that produced it."""
    h = cert.target
    if len(cert.branch_sets) != h.n:
        return ValidationReport(False, "wrong number of branch sets")
    adj = g.adjacency
    masks = []
    seen = 0
    for i, bs in enumerate(cert.branch_sets):
        if not bs:
            return ValidationReport(False, f"branch set {i} is empty")
        m = 0
        for v in bs:
            if not 0 <= v < g.n:
                return ValidationReport(False, f"branch set {i}: vertex {v} out of range")
            m |= 1 << v
        if m & seen:
            return ValidationReport(False, f"branch set {i} overlaps another")
        seen |= m
        # connectivity inside the branch set
        start = m & -m
        comp = start
        while True:
            grow = 0
            mm = comp
            while mm:
                b = mm & -mm
                grow |= adj[b.bit_length() - 1]
                mm ^= b
            grow = grow & m & ~comp
            if not grow:
                break
            comp |= grow
        if comp != m:
            return ValidationReport(False, f"branch set {i} is not connected")
        masks.append(m)
    for a, b in h.sorted_edges():
        w = cert.edge_witnesses.get((a, b))
        if w is None:
            return ValidationReport(False, f"target edge ({a},{b}) has no witness")
        u, v = w
        if not g.has_edge(u, v):
            return ValidationReport(False, f"witness ({u},{v}) is not a host edge")
        mu, mv = 1 << u, 1 << v
        straight = mu & masks[a] and mv & masks[b]
        flipped = mu & masks[b] and mv & masks[a]
        if not (straight or flipped):
            return ValidationReport(
                False, f"witness ({u},{v}) does not join branch sets {a} and {b}"
            )
    return ValidationReport(True)


def _twin_classes(h: Graph) -> list[list[int]]:
    """Disjoint classes of interchangeable target vertices: open twins
    (equal neighborhoods) or closed twins (equal closed neighborhoods).
    Swapping two class members is an automorphism of ``h``, so branch-set
    assignments may be canonicalized within each class."""
    hadj = h.adjacency
    by_open: dict[int, list[int]] = {}
    by_closed: dict[int, list[int]] = {}
    for v in range(h.n):
        by_open.setdefault(hadj[v], []).append(v)
        by_closed.setdefault(hadj[v] | (1 << v), []).append(v)
    candidates = [c for c in by_open.values() if len(c) > 1]
    candidates += [c for c in by_closed.values() if len(c) > 1]
    candidates.sort(key=len, reverse=True)
    chosen: list[list[int]] = []
    taken = 0
    for c in candidates:
        cmask = 0
        for v in c:
            cmask |= 1 << v
        if cmask & taken:
            continue
        chosen.append(c)
        taken |= cmask
    return chosen


def _embedding_order(h: Graph) -> list[int]:
    """Maximum-adjacency order: each vertex after the first (per component)
    has at least one already-placed neighbor."""
    hadj = h.adjacency
    degs = h.degrees()
    remaining = set(range(h.n))
    placed_mask = 0
    order: list[int] = []
    while remaining:
        best = None
        best_key = None
        for v in remaining:
            key = ((hadj[v] & placed_mask).bit_count(), degs[v], -v)
            if best_key is None or key > best_key:
                best, best_key = v, key
        order.append(best)
        remaining.remove(best)
        placed_mask |= 1 << best
    return order


def has_minor(
    g: Graph, h: Graph, budget: Budget | None = None
) -> MinorCertificate | None:
    """Search for an ``h``-minor in ``g``. ``None`` means exhaustively no;
    budget exhaustion raises instead of returning."""
    n, hn = g.n, h.n
    if hn == 0:
        return MinorCertificate(h, ())
    if hn > n or len(h.edges) > len(g.edges):
        return None
    if budget is None:
        budget = Budget()
    adj = g.adjacency
    order = _embedding_order(h)
    pos_of = {v: k for k, v in enumerate(order)}
    hadj = h.adjacency
    earlier: list[tuple[int, ...]] = []
    fdeg: list[int] = []
    for k, v in enumerate(order):
        eneigh = tuple(
            pos_of[u] for u in mask_to_vertices(hadj[v]) if pos_of[u] < k
        )
        earlier.append(eneigh)
        fdeg.append(h.degree(v) - len(eneigh))
    # symmetry breaking: within a twin class, branch-set minima increase
    # along the assignment order
    prev_twin: list[int] = [-1] * hn
    for cls in _twin_classes(h):
        positions = sorted(pos_of[v] for v in cls)
        for a, b in zip(positions, positions[1:]):
            prev_twin[b] = a
    full = (1 << n) - 1
    branch: list[int] = [0] * hn
    # future_need[k] = number of H-neighbors of order[k] placed after step k
    tick = budget.tick

    def neighborhood(mask: int) -> int:
        acc = 0
        m = mask
        while m:
            b = m & -m
            acc |= adj[b.bit_length() - 1]
            m ^= b
        return acc & ~mask

    def conn_sets(seed: int, allowed: int, maxpop: int):
        """Connected subsets of ``allowed`` containing ``seed``, each
        exactly once, small sets first along each branch."""
        stack = [(1 << seed, adj[seed] & allowed, 0)]
        while stack:
            s_mask, cand, banned = stack.pop()
            yield s_mask
            if s_mask.bit_count() >= maxpop:
                continue
            newly = 0
            c = cand
            while c:
                b = c & -c
                c ^= b
                v = b.bit_length() - 1
                s2 = s_mask | b
                cand2 = ((cand | (adj[v] & allowed)) & ~s2) & ~(banned | newly)
                stack.append((s2, cand2, banned | newly))
                newly |= b

    def place(k: int, used: int) -> bool:
        if k == hn:
            return True
        free = full & ~used
        maxpop = free.bit_count() - (hn - k - 1)
        if maxpop <= 0:
            return False
        universe = free
        if prev_twin[k] >= 0:
            lsb = branch[prev_twin[k]] & -branch[prev_twin[k]]
            universe &= ~((lsb << 1) - 1)
            if not universe:
                return False
        reqs = [neighborhood(branch[j]) & universe for j in earlier[k]]
        if any(not r for r in reqs):
            return False
        need_future = fdeg[k]
        # placed sets that still await neighbors must keep enough free room
        pending: list[tuple[int, int]] = []
        for j in range(k):
            later = fdeg[j] - sum(
                1 for t in range(j + 1, k + 1) if j in earlier[t]
            )
            if later > 0:
                pending.append((neighborhood(branch[j]) & free, later))

        def feasible(s_mask: int) -> bool:
            for r in reqs:
                if not r & s_mask:
                    return False
            rest = free & ~s_mask
            if (neighborhood(s_mask) & rest).bit_count() < need_future:
                return False
            for nbh, cnt in pending:
                if (nbh & rest).bit_count() < cnt:
                    return False
            return True

        # candidates anchor on the smallest requirement set when there is
        # one, else on their own least vertex
        anchors = min(reqs, key=int.bit_count) if reqs else universe
        tried = 0
        m = anchors
        while m:
            b = m & -m
            m ^= b
            seed = b.bit_length() - 1
            for s_mask in conn_sets(seed, universe & ~tried, maxpop):
                tick()
                if feasible(s_mask):
                    branch[k] = s_mask
                    if place(k + 1, used | s_mask):
                        return True
            tried |= b
        return False

    if not place(0, 0):
        return None
    branch_sets = [frozenset()] * hn
    masks_by_vertex = [0] * hn
    for k, v in enumerate(order):
        masks_by_vertex[v] = branch[k]
        branch_sets[v] = frozenset(mask_to_vertices(branch[k]))
    witnesses: dict[Edge, Edge] = {}
    for a, b in h.sorted_edges():
        ma, mb = masks_by_vertex[a], masks_by_vertex[b]
        found = None
        mm = ma
        while mm and found is None:
            bb = mm & -mm
            mm ^= bb
            u = bb.bit_length() - 1
            hit = adj[u] & mb
            if hit:
                found = (u, (hit & -hit).bit_length() - 1)
        witnesses[(a, b)] = found
    return MinorCertificate(h, tuple(branch_sets), witnesses)


def _complete(k: int) -> Graph:
    return Graph(k, [(u, v) for u in range(k) for v in range(u + 1, k)])


@dataclass
class HadwigerResult:
    value: int
    exact: bool
    certificate: MinorCertificate | None


def hadwiger_number(g: Graph, budget: Budget | None = None) -> HadwigerResult:
    """Largest ``k`` with a complete-minor certificate. ``exact`` is False
    only when the terminating "no" search was cut off by the budget."""
    if g.n == 0:
        return HadwigerResult(0, True, None)
    e = len(g.edges)
    kmax = g.n
    while kmax * (kmax - 1) // 2 > e:
        kmax -= 1
    best = 1
    best_cert = has_minor(g, _complete(1), budget)
    k = 2
    while k <= kmax:
        try:
            cert = has_minor(g, _complete(k), budget)
        except BudgetExceededError:
            return HadwigerResult(best, False, best_cert)
        if cert is None:
            return HadwigerResult(best, True, best_cert)
        best, best_cert = k, cert
        k += 1
    return HadwigerResult(best, True, best_cert)


def certificate_from_branch_sets(
    g: Graph, target: Graph, branch_sets
) -> MinorCertificate:
    """Complete hand-written branch sets into a full certificate by
    finding a witness edge for every target edge; raises if any target
    edge has no witness. The result still goes through
    ``validate_certificate`` like any other."""
    sets = tuple(frozenset(s) for s in branch_sets)
    adj = g.adjacency
    masks = []
    for s in sets:
        m = 0
        for v in s:
            m |= 1 << v
        masks.append(m)
    witnesses: dict[Edge, Edge] = {}
    for a, b in target.sorted_edges():
        found = None
        mm = masks[a]
        while mm and found is None:
            bb = mm & -mm
            mm ^= bb
            u = bb.bit_length() - 1
            hit = adj[u] & masks[b]
            if hit:
                found = (u, (hit & -hit).bit_length() - 1)
        if found is None:
            raise ValueError(
                f"no host edge joins branch sets {a} and {b}: "
                f"{sorted(sets[a])} / {sorted(sets[b])}"
            )
        witnesses[(a, b)] = found
    return MinorCertificate(target, sets, witnesses)


# -- slow reference oracle -----------------------------------------------------

_NAIVE_LIMIT = 8
_naive_memo: dict[bytes, frozenset[bytes]] = {}


def minor_closure_canons(g: Graph) -> frozenset[bytes]:
    """Canonical forms of every minor of ``g``, computed by exhaustive
    single-step deletions and contractions. Small graphs only."""
    if g.n > _NAIVE_LIMIT:
        raise GraphTooLargeError(
            f"naive oracle limited to {_NAIVE_LIMIT} vertices, got {g.n}"
        )
    key = canonical_form(g)
    cached = _naive_memo.get(key)
    if cached is not None:
        return cached
    out = {key}
    for v in range(g.n):
        out |= minor_closure_canons(g.delete_vertex(v))
    for u, v in g.sorted_edges():
        out |= minor_closure_canons(g.delete_edge(u, v))
        out |= minor_closure_canons(g.contract_edge(u, v))
    result = frozenset(out)
    _naive_memo[key] = result
    return result


def naive_has_minor(g: Graph, h: Graph) -> bool:
    return canonical_form(h) in minor_closure_canons(g)
