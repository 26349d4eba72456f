"""π series from balancing, Lucas-balancing, Fibonacci and Lucas numbers, at arbitrary precision."""

from .bigreal import BigReal, arctan, count_correct_digits, ln, pi_reference, sqrt
from .errors import ConvergenceViolation, DegenerateIndexWarning, DomainError, IntegrityError, NoValidRoot
from .identities import PartialSumReport, check_exotic_representations, pi_identity_eval
from .polynomials import (
    PolyArgument,
    coefficients,
    connection_even,
    connection_odd,
    eval_balancing,
    eval_binet,
    eval_chebyshev_route,
    eval_lucas_balancing,
    growth_pair,
)
from .roots import (
    RootSolution,
    Verdict,
    solve_squared_quartic,
    solve_unit_arctan_quadratic,
    theorem3_arguments,
)
from .sequences import (
    balancing_number,
    check_catalan_identities,
    check_lucas_square_identity,
    fibonacci,
    golden_power_identity,
    lucas,
    lucas_balancing_number,
)
from .series import SeriesFamily, SeriesSpec, closed_form, partial_sum, tail_bound, verify_arctan_addition

__all__ = [
    "BigReal", "arctan", "count_correct_digits", "ln", "pi_reference", "sqrt",
    "ConvergenceViolation", "DegenerateIndexWarning", "DomainError", "IntegrityError", "NoValidRoot",
    "PartialSumReport", "check_exotic_representations", "pi_identity_eval",
    "PolyArgument", "coefficients", "connection_even", "connection_odd", "eval_balancing", "eval_binet",
    "eval_chebyshev_route", "eval_lucas_balancing", "growth_pair",
    "RootSolution", "Verdict", "solve_squared_quartic", "solve_unit_arctan_quadratic", "theorem3_arguments",
    "balancing_number", "check_catalan_identities", "check_lucas_square_identity", "fibonacci",
    "golden_power_identity", "lucas", "lucas_balancing_number",
    "SeriesFamily", "SeriesSpec", "closed_form", "partial_sum", "tail_bound", "verify_arctan_addition",
]
