"""Toolkit for non-separating planar graphs and their complements:
family generators, planarity/apex/minor certificates, intrinsic linking
and knotting verdicts, Colin de Verdiere interval bounds, and the
verification suites tying them together.
"""

from .graph import Graph
from .canon import canonical_form, is_isomorphic
from .encoding import (
    from_graph6,
    from_sparse6,
    parse_graph_line,
    to_graph6,
    to_sparse6,
)
from .errors import (
    BudgetExceededError,
    ClosureBudgetError,
    GraphFormatError,
    GraphTooLargeError,
    IntegrityError,
    NsplanarError,
)
from .minors import (
    Budget,
    HadwigerResult,
    MinorCertificate,
    certificate_from_branch_sets,
    hadwiger_number,
    has_minor,
    naive_has_minor,
    validate_certificate,
)
from .planarity import (
    OuterplanarityResult,
    PlanarityResult,
    euler_check,
    is_linear_forest,
    is_outerplanar,
    is_planar,
)
from .apex import ApexCertificate, apex_number, is_k_apex
from .moves import Move, closure, closure_graphs, delta_wye, wye_delta
from .nonsep import NonsepClassification, classify_nonseparating, is_maximal_nonseparating
from .topology import (
    IkVerdict,
    IlResult,
    certify_max_nik,
    ik_obstruction_library,
    ik_status,
    is_il,
    is_max_nil,
    petersen_family,
)
from .mu import KlvResult, MuInterval, check_klv, mu_bounds
from .verify import SUITES, SuiteReport, run_suite

__version__ = "0.1.0"

__all__ = [
    "Graph",
    "canonical_form",
    "is_isomorphic",
    "to_graph6",
    "from_graph6",
    "to_sparse6",
    "from_sparse6",
    "parse_graph_line",
    "NsplanarError",
    "GraphTooLargeError",
    "GraphFormatError",
    "BudgetExceededError",
    "ClosureBudgetError",
    "IntegrityError",
    "Budget",
    "MinorCertificate",
    "HadwigerResult",
    "has_minor",
    "hadwiger_number",
    "naive_has_minor",
    "validate_certificate",
    "certificate_from_branch_sets",
    "PlanarityResult",
    "OuterplanarityResult",
    "is_planar",
    "is_outerplanar",
    "is_linear_forest",
    "euler_check",
    "ApexCertificate",
    "is_k_apex",
    "apex_number",
    "Move",
    "delta_wye",
    "wye_delta",
    "closure",
    "closure_graphs",
    "NonsepClassification",
    "classify_nonseparating",
    "is_maximal_nonseparating",
    "IlResult",
    "IkVerdict",
    "is_il",
    "ik_status",
    "is_max_nil",
    "certify_max_nik",
    "petersen_family",
    "ik_obstruction_library",
    "MuInterval",
    "KlvResult",
    "mu_bounds",
    "check_klv",
    "SUITES",
    "SuiteReport",
    "run_suite",
]
