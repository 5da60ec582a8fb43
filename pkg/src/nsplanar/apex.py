"""k-apex recognition: find vertex sets whose deletion leaves a planar
graph, with the planarity witness bundled into the certificate.

The subset search is exhaustive, so a negative answer means no deleting
set of the requested size exists. High-degree vertices are tried first
(dense complements shed crossings fastest); ``deterministic=True``
switches to plain lexicographic order so the returned set is the least
valid one.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations

from .errors import BudgetExceededError
from .graph import Graph
from .planarity import PlanarityResult, is_planar

DEFAULT_SUBSET_BUDGET = 2_000_000


@dataclass
class ApexCertificate:
    removed: tuple[int, ...]
    planarity: PlanarityResult

    def to_dict(self) -> dict:
        return {
            "removed": list(self.removed),
            "planarity": self.planarity.to_dict(),
        }


def validate_apex_certificate(g: Graph, cert: ApexCertificate, k: int) -> bool:
    """Re-run planarity on ``g`` minus the claimed set."""
    if len(set(cert.removed)) != len(cert.removed) or len(cert.removed) != k:
        return False
    if any(not 0 <= v < g.n for v in cert.removed):
        return False
    return bool(is_planar(g.delete_vertices(cert.removed)).planar)


def is_k_apex(
    g: Graph,
    k: int,
    deterministic: bool = False,
    max_subsets: int = DEFAULT_SUBSET_BUDGET,
) -> ApexCertificate | None:
    """Certificate that deleting some ``k`` vertices leaves ``g`` planar,
    or ``None`` after exhausting every size-``k`` subset."""
    if not 0 <= k <= g.n:
        raise ValueError(f"k={k} out of range for n={g.n}")
    if deterministic:
        pool = list(range(g.n))
    else:
        pool = sorted(range(g.n), key=lambda v: (-g.degree(v), v))
    tried = 0
    for subset in combinations(pool, k):
        tried += 1
        if tried > max_subsets:
            raise BudgetExceededError(
                f"apex search exceeded {max_subsets} subsets", nodes=tried
            )
        rest = g.delete_vertices(subset)
        m = rest.n
        # standard planar edge bound: skip hopeless subsets cheaply
        if rest.edge_count() > max(3 * m - 6, m - 1):
            continue
        res = is_planar(rest)
        if res.planar:
            return ApexCertificate(tuple(sorted(subset)), res)
    return None


def apex_number(
    g: Graph,
    max_k: int | None = None,
    deterministic: bool = False,
    max_subsets: int = DEFAULT_SUBSET_BUDGET,
) -> tuple[int, ApexCertificate]:
    """Smallest ``k`` admitting a valid certificate (0 iff planar)."""
    top = g.n if max_k is None else max_k
    for k in range(top + 1):
        cert = is_k_apex(g, k, deterministic, max_subsets)
        if cert is not None:
            return k, cert
    raise ValueError(f"no apex set of size <= {top} found")
