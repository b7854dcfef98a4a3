"""Radio labelings of generalized prism graphs Z(n, s), 1 <= s <= 3.

The package builds the graphs with exact BFS distances (``graphs``), knows
the tight lower bound (n - 1) * phi(n, s) + 2 and its gap parameters
(``bounds``), constructs labelings meeting that bound (``labeling``), audits
any labeling pair-by-pair (``verification``), and can prove radio numbers of
small instances by branch-and-bound (``exact``).  The ``prismradio`` console
script exposes all of it.
"""

from .graphs import (
    CycleView,
    PrismGraph,
    Vertex,
    build_graph,
    cycle_view,
    diameter,
    distance,
    is_v_tight,
    normalize_vertex,
    principal_cycle,
    standard_cycle,
)
from .bounds import (
    PhiParams,
    check_triple_bound,
    d_offset,
    in_phi_scope,
    lower_bound_rn,
    omega,
    phi,
    triple_bound_violations,
)
from .labeling import (
    CaseId,
    Labeling,
    case_select,
    construct_labeling,
    label_sequence,
    position_case1,
    position_case2,
    position_case3,
    position_case4,
)
from .verification import VerificationReport, Violation, span_of, verify
from .exact import ExactResult, SearchConfig, exact_radio_number, greedy_span_for_order

__version__ = "0.1.0"

__all__ = [
    "Vertex",
    "PrismGraph",
    "CycleView",
    "normalize_vertex",
    "build_graph",
    "distance",
    "diameter",
    "cycle_view",
    "principal_cycle",
    "standard_cycle",
    "is_v_tight",
    "PhiParams",
    "in_phi_scope",
    "phi",
    "lower_bound_rn",
    "d_offset",
    "omega",
    "check_triple_bound",
    "triple_bound_violations",
    "CaseId",
    "Labeling",
    "case_select",
    "label_sequence",
    "position_case1",
    "position_case2",
    "position_case3",
    "position_case4",
    "construct_labeling",
    "VerificationReport",
    "Violation",
    "verify",
    "span_of",
    "SearchConfig",
    "ExactResult",
    "greedy_span_for_order",
    "exact_radio_number",
    "__version__",
]
