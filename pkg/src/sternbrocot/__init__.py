"""Exact arithmetic for Stern-Brocot sequences, reduced continued
fractions, and the singular distribution functions they generate."""

from .cf import (
    RegularCF,
    ReducedRCF,
    digit_sum_L,
    expand_rcf,
    expand_rrcf,
    rcf_to_rrcf,
    sum_partial_quotients,
    value_rcf,
    value_rrcf,
)
from .dist import (
    ConvergenceReport,
    ConvergenceRow,
    EmpiricalCDF,
    empirical_cdf,
    fibonacci_ratio_limit,
    mediant_ratio,
    verify_theorem1,
)
from .exact import (
    SQRT5,
    TAU,
    TAU2,
    QuadSurd,
    mediant,
    parse_quadsurd,
    parse_rational,
    quad_pow,
    to_decimal,
)
from .singular import g_inductive, g_series, g_stream, g_tau2, question_mark
from .stern import (
    SternBrocotLevel,
    characterize_Qn,
    first_level,
    new_mediants,
    next_level,
    stern_level,
)
from .xi import (
    XiSequence,
    XiTreeNode,
    fibonacci,
    left_child,
    node_for,
    right_child,
    subtree_count,
    subtree_nodes,
    theta,
    xi,
)

__all__ = [
    "SQRT5",
    "TAU",
    "TAU2",
    "ConvergenceReport",
    "ConvergenceRow",
    "EmpiricalCDF",
    "QuadSurd",
    "ReducedRCF",
    "RegularCF",
    "SternBrocotLevel",
    "XiSequence",
    "XiTreeNode",
    "characterize_Qn",
    "digit_sum_L",
    "empirical_cdf",
    "expand_rcf",
    "expand_rrcf",
    "fibonacci",
    "fibonacci_ratio_limit",
    "first_level",
    "g_inductive",
    "g_series",
    "g_stream",
    "g_tau2",
    "left_child",
    "mediant",
    "mediant_ratio",
    "new_mediants",
    "next_level",
    "node_for",
    "parse_quadsurd",
    "parse_rational",
    "quad_pow",
    "question_mark",
    "rcf_to_rrcf",
    "right_child",
    "stern_level",
    "subtree_count",
    "subtree_nodes",
    "sum_partial_quotients",
    "theta",
    "to_decimal",
    "value_rcf",
    "value_rrcf",
    "verify_theorem1",
    "xi",
]
