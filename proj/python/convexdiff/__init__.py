"""Convex difference sets: extremal constructions, exact statistics, and
exhaustive verification of the representation bound.

Everything is exact: elements are rationals, counts are integers, and the
decimal ratio strings are truncated values of integer-root computations.
"""

from ._core import (
    BoundReport,
    ConstructionResult,
    ConvexSet,
    DiffStats,
    GluedResult,
    MaxRep,
    Rational,
    RepWitness,
    RichEntry,
    ScalingRow,
    SearchReport,
    construct,
    default_delta,
    diff_stats,
    enumerate_gap_sequences,
    from_gaps,
    glue,
    max_rep_diff,
    max_rep_sum,
    power_ratio_decimal,
    rep_diff,
    rep_sum,
    report_thresholds,
    rich_count,
    scaling_report,
    search,
    verify_bound,
    witnesses,
)

__all__ = [
    "BoundReport",
    "ConstructionResult",
    "ConvexSet",
    "DiffStats",
    "GluedResult",
    "MaxRep",
    "Rational",
    "RepWitness",
    "RichEntry",
    "ScalingRow",
    "SearchReport",
    "construct",
    "default_delta",
    "diff_stats",
    "enumerate_gap_sequences",
    "from_gaps",
    "glue",
    "max_rep_diff",
    "max_rep_sum",
    "power_ratio_decimal",
    "rep_diff",
    "rep_sum",
    "report_thresholds",
    "rich_count",
    "scaling_report",
    "search",
    "verify_bound",
    "witnesses",
]

__version__ = "1.0.0"
