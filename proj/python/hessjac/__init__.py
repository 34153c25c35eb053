"""Jacobian arithmetic of global function fields with Hess-reduced divisors."""

from ._hessjac import (
    Divisor,
    FunctionField,
    HessjacError,
    Jacobian,
    Place,
    ReducedClassRep,
    __version__,
    count_degree_one_places,
    gen_adhoc,
    gen_tang,
    jacobian_order,
    l_polynomial,
    run_chains,
)

__all__ = [
    "Divisor",
    "FunctionField",
    "HessjacError",
    "Jacobian",
    "Place",
    "ReducedClassRep",
    "__version__",
    "count_degree_one_places",
    "gen_adhoc",
    "gen_tang",
    "jacobian_order",
    "l_polynomial",
    "run_chains",
]
