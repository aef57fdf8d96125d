"""Exact checks over Q(r) for the tricanonical cubics and the quotient genus accounting."""

from ._core import (
    ConfigError,
    InfeasibleError,
    ParseError,
    ci_genus,
    distinct_points,
    eval_expr,
    exceptional_multiplicity,
    nf_inverse,
    nf_reduce,
    quotient_feasibility,
    rh_relation,
    run_suite,
)

__all__ = [
    "ConfigError",
    "InfeasibleError",
    "ParseError",
    "ci_genus",
    "distinct_points",
    "eval_expr",
    "exceptional_multiplicity",
    "nf_inverse",
    "nf_reduce",
    "quotient_feasibility",
    "rh_relation",
    "run_suite",
]
