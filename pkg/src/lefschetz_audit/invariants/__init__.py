"""Invariants of the total space and Kodaira-dimension helpers."""

from .engine import (
    REPORT_FIELDS,
    HomologySummary,
    InvariantReport,
    chern_square,
    compute_report,
    euler_number,
    hodge_pairing,
    homology_over_sphere,
    invariants_over_base,
    ruled_mu,
    vanishing_class_matrix,
)
from .kodaira import (
    UNBOUNDED,
    KodairaDim,
    KodairaInput,
    Unbounded,
    curve_kodaira,
    fibration_kodaira_bound,
    kneser_max_degree,
    kodaira_dimension,
    kodaira_sum,
    subadditivity_holds,
)

__all__ = [
    "REPORT_FIELDS",
    "UNBOUNDED",
    "HomologySummary",
    "InvariantReport",
    "KodairaDim",
    "KodairaInput",
    "Unbounded",
    "chern_square",
    "compute_report",
    "curve_kodaira",
    "euler_number",
    "fibration_kodaira_bound",
    "hodge_pairing",
    "homology_over_sphere",
    "invariants_over_base",
    "kneser_max_degree",
    "kodaira_dimension",
    "kodaira_sum",
    "ruled_mu",
    "subadditivity_holds",
    "vanishing_class_matrix",
]
