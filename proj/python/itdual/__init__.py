"""Exact algebra for linear information inequalities.

Formal duals, balanced versions, Shannon-type certificates, entropies of
finite discrete distributions, and the bundled five-variable distribution
showing that the dual of a valid inequality need not be valid.
"""

from ._itdual import (
    GroundSet,
    InfExpr,
    JointDistribution,
    balance,
    catalog_entry,
    catalog_names,
    conditional_version,
    counterexample_distribution,
    dual,
    entropic_vector,
    entropy,
    evaluate,
    h_form,
    i_form,
    is_balanced,
    is_self_dual,
    is_shannon_type,
    mutual_information,
    parse,
    residuals,
    verify_main_theorem,
)

__all__ = [
    "GroundSet",
    "InfExpr",
    "JointDistribution",
    "balance",
    "catalog_entry",
    "catalog_names",
    "conditional_version",
    "counterexample_distribution",
    "dual",
    "entropic_vector",
    "entropy",
    "evaluate",
    "h_form",
    "i_form",
    "is_balanced",
    "is_self_dual",
    "is_shannon_type",
    "mutual_information",
    "parse",
    "residuals",
    "verify_main_theorem",
]
