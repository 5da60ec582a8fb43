"""Intrinsic linking (exact) and intrinsic knotting (certified both ways
where possible), plus the same-order maximality certifiers.

Linking is decided exactly: a graph links iff it has a minor in the
family of seven graphs generated from K6 by delta-wye/wye-delta moves,
and the decision returns the minor certificate.

Knotting has no known finite characterization, so ``ik_status`` is a
three-way verdict: a minor certificate into the knotting obstruction
library proves IK; a 2-apex certificate proves nIK; otherwise the result
is ``unknown`` and carries the list of strategies exhausted. The
library holds exactly the triangle-to-star descendants of K7 and of the
complete 4-partite graph K_{3,3,1,1} (the move preserves knotting;
the reverse move does not, so only "ty" expansions are trusted). Extra
obstructions can be plugged in as graph6 text with a provenance note.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache

from . import families
from .apex import ApexCertificate, is_k_apex
from .encoding import parse_graph_line
from .errors import BudgetExceededError, IntegrityError
from .graph import Graph
from .minors import Budget, MinorCertificate, has_minor, validate_certificate
from .moves import STAR_TO_TRIANGLE, TRIANGLE_TO_STAR, closure

IK_LIBRARY_MAX_ORDER = 14

IK = "IK"
NIK = "nIK"
UNKNOWN = "unknown"


@lru_cache(maxsize=1)
def petersen_family() -> tuple[Graph, ...]:
    """The seven minor obstructions to linkless embedding, generated from
    K6 by both moves. Order: ascending vertex count."""
    res = closure(
        [families.named("K6")],
        (TRIANGLE_TO_STAR, STAR_TO_TRIANGLE),
        max_order=10,
    )
    return tuple(res.graphs)


@dataclass(frozen=True)
class LibraryMember:
    name: str
    graph: Graph
    provenance: str


@dataclass
class ObstructionLibrary:
    """Knotting obstructions, every one reachable from a seed by
    triangle-to-star moves alone (or supplied explicitly)."""

    members: tuple[LibraryMember, ...]

    def fitting(self, g: Graph) -> list[LibraryMember]:
        return [
            m
            for m in self.members
            if m.graph.n <= g.n and m.graph.edge_count() <= g.edge_count()
        ]

    def with_extra(self, graph6_line: str, note: str) -> "ObstructionLibrary":
        extra = LibraryMember(
            f"extra{len(self.members)}", parse_graph_line(graph6_line), note
        )
        return ObstructionLibrary(self.members + (extra,))


@lru_cache(maxsize=4)
def ik_obstruction_library(max_order: int = IK_LIBRARY_MAX_ORDER) -> ObstructionLibrary:
    members: list[LibraryMember] = []
    for seed_id in ("K7", "K331_1"):
        res = closure(
            [families.named(seed_id)], (TRIANGLE_TO_STAR,), max_order=max_order
        )
        for i, item in enumerate(res.items):
            members.append(
                LibraryMember(
                    f"{seed_id}.{i}",
                    item.graph,
                    f"{seed_id} after {len(item.moves)} triangle-to-star moves",
                )
            )
    members.sort(key=lambda m: (m.graph.n, m.graph.edge_count(), m.name))
    return ObstructionLibrary(tuple(members))


@dataclass
class IlResult:
    linked: bool
    certificate: MinorCertificate | None = None
    obstruction_name: str = ""

    def __bool__(self) -> bool:
        return self.linked


def is_il(g: Graph, budget: Budget | None = None) -> IlResult:
    """Exact intrinsic-linking decision with a minor certificate when
    linked. Budget exhaustion raises (the test is otherwise exact)."""
    for i, member in enumerate(petersen_family()):
        if member.n > g.n or member.edge_count() > g.edge_count():
            continue
        cert = has_minor(g, member, budget)
        if cert is not None:
            return IlResult(True, cert, f"petersen-family.{i}")
    return IlResult(False)


@dataclass
class IkVerdict:
    status: str
    minor_certificate: MinorCertificate | None = None
    obstruction_name: str = ""
    apex_certificate: ApexCertificate | None = None
    exhausted: tuple[str, ...] = ()
    notes: str = ""

    def to_dict(self) -> dict:
        out: dict = {"status": self.status}
        if self.minor_certificate is not None:
            out["obstruction"] = self.obstruction_name
            out["minor_certificate"] = self.minor_certificate.to_dict()
        if self.apex_certificate is not None:
            out["apex_certificate"] = self.apex_certificate.to_dict()
        if self.exhausted:
            out["exhausted"] = list(self.exhausted)
        if self.notes:
            out["notes"] = self.notes
        return out


def ik_status(
    g: Graph,
    budget: Budget | None = None,
    library: ObstructionLibrary | None = None,
) -> IkVerdict:
    """Three-way knotting verdict.

    The nIK check (2-apex) runs first; since a 2-apex graph can never
    contain a member of the knotting library as a minor, the two
    certificate kinds stay mutually exclusive by construction. Budget
    exhaustion downgrades to ``unknown`` with the strategy list."""
    if library is None:
        library = ik_obstruction_library()
    exhausted: list[str] = []
    try:
        for k in range(0, 3):
            apex_cert = is_k_apex(g, k)
            if apex_cert is not None:
                return IkVerdict(NIK, apex_certificate=apex_cert)
        exhausted.append("2-apex search (no deleting set)")
    except BudgetExceededError as exc:
        exhausted.append(f"2-apex search (budget: {exc})")
    notes = ""
    for member in library.fitting(g):
        try:
            cert = has_minor(g, member.graph, budget)
        except BudgetExceededError as exc:
            exhausted.append(f"minor search {member.name} (budget: {exc})")
            notes = "library search incomplete"
            continue
        if cert is not None:
            return IkVerdict(
                IK, minor_certificate=cert, obstruction_name=member.name
            )
    exhausted.append("knotting obstruction library exhausted")
    return IkVerdict(UNKNOWN, exhausted=tuple(exhausted), notes=notes)


def assert_exclusive(g: Graph, verdict: IkVerdict) -> None:
    """Integrity guard: a validated IK minor certificate and a validated
    2-apex certificate can never coexist."""
    if verdict.status == IK:
        if validate_certificate(g, verdict.minor_certificate) and any(
            is_k_apex(g, k) is not None for k in range(0, 3)
        ):
            raise IntegrityError(
                "graph carries both a knotting minor and a 2-apex certificate"
            )


@dataclass
class MaxNilResult:
    maximal: bool
    base: IlResult
    failing_edge: tuple[int, int] | None = None
    per_edge: dict = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.maximal


def is_max_nil(g: Graph, budget: Budget | None = None) -> MaxNilResult:
    """Linklessly embeddable and every same-order edge addition links.
    Exact; a complete nIL graph is vacuously maximal."""
    base = is_il(g, budget)
    if base.linked:
        return MaxNilResult(False, base)
    per_edge = {}
    for u, v in g.non_edges():
        added = is_il(g.add_edge(u, v), budget)
        per_edge[(u, v)] = added
        if not added.linked:
            return MaxNilResult(False, base, failing_edge=(u, v), per_edge=per_edge)
    return MaxNilResult(True, base, per_edge=per_edge)


CERTIFIED = "certified"
REFUTED = "refuted"
INCONCLUSIVE = "inconclusive"


@dataclass
class MaxNikResult:
    status: str
    base: IkVerdict
    failing_edge: tuple[int, int] | None = None
    per_edge: dict = field(default_factory=dict)


def certify_max_nik(
    g: Graph,
    budget: Budget | None = None,
    library: ObstructionLibrary | None = None,
) -> MaxNikResult:
    """Certified: knotlessly embeddable (2-apex) and every edge addition
    produces a library minor. Refuted: the graph itself is IK, or some
    addition is provably nIK. Anything resting on an ``unknown`` edge is
    inconclusive."""
    base = ik_status(g, budget, library)
    if base.status == IK:
        return MaxNikResult(REFUTED, base)
    if base.status == UNKNOWN:
        return MaxNikResult(INCONCLUSIVE, base)
    per_edge = {}
    saw_unknown = None
    for u, v in g.non_edges():
        verdict = ik_status(g.add_edge(u, v), budget, library)
        per_edge[(u, v)] = verdict
        if verdict.status == NIK:
            return MaxNikResult(REFUTED, base, failing_edge=(u, v), per_edge=per_edge)
        if verdict.status == UNKNOWN and saw_unknown is None:
            saw_unknown = (u, v)
    if saw_unknown is not None:
        return MaxNikResult(
            INCONCLUSIVE, base, failing_edge=saw_unknown, per_edge=per_edge
        )
    return MaxNikResult(CERTIFIED, base, per_edge=per_edge)
