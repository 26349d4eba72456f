"""The closed catalogue of π identities built from the series families.

Each identity reads  π = scale * (constant + multiplier * S)  where S is the
family's series at the argument z = 1/w and w is given by an explicit
radical.  Radicals are written over a generic square-root function so the
same expression yields a BigReal (exact arithmetic) or a double (the
floating-point pipeline used for the convergence tables).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Literal, NoReturn

from .bigreal import DEFAULT_PRECISION, BigReal, count_correct_digits, ln, pi_reference
from .errors import DomainError, NoValidRoot
from .polynomials import PolyArgument
from .roots import (
    QuadraticKind,
    QuarticKind,
    Target,
    Verdict,
    big_root,
    inverse_argument,
    solve_squared_quartic,
    solve_unit_arctan_quadratic,
)
from .series import SeriesFamily, SeriesSpec, closed_form, double_partial_sum, partial_sum, tail_bound
from .sequences import fibonacci, lucas

Arithmetic = Literal["exact", "double"]
ARITHMETIC_MODES = ("exact", "double")

Root = Callable[[object], object]


@dataclass(frozen=True)
class PiIdentity:
    id: str
    family: SeriesFamily
    description: str
    inverse_argument: Callable[[int, Root], object]
    scale: Callable[[Root], object]
    multiplier: Callable[[Root], object] = lambda r: 1
    constant: Callable[[int, Root], object] | None = None
    only_m0: bool = False
    x: int | None = None


@dataclass(frozen=True)
class PartialSumReport:
    identity: str
    m: int
    N: int
    arithmetic: str
    sum: BigReal
    tail_bound: BigReal
    closed_form: BigReal
    pi_estimate: BigReal
    digits: int

    @property
    def n_terms(self) -> int:
        return self.N + 1


def _L(m: int) -> int:
    return lucas(2 * m)


def _F(m: int) -> int:
    return fibonacci(2 * m + 1)


def _lucas_square_w(m: int, r: Root):
    L = _L(m)
    t = (L * L + r(L**4 + 8 * L * L - 16)) / 4
    return 1 / (t + r(t * t + 1))


def _sub_luc_pi6_parts(m: int, r: Root):
    L = _L(m)
    K = r((2 + r(3)) ** 2 * L * L + 4)
    return L, K


def _sub_fib_pi6_parts(m: int, r: Root):
    F = _F(m)
    K = r(5 * F * F + 4 * (2 - r(3)) ** 2)
    return F, K


def _sub_luc_pi6_constant(m: int, r: Root):
    L, K = _sub_luc_pi6_parts(m, r)
    top = (9 + 5 * r(3)) * L * L + (3 + r(3)) * L * K + 4
    bottom = (5 + 3 * r(3)) * L * L + (1 + r(3)) * L * K + 4
    return ln(top / bottom)


def _sub_fib_pi6_constant(m: int, r: Root):
    F, K = _sub_fib_pi6_parts(m, r)
    core = r(5) * (r(5) * F * F + F * K)
    return ln(((9 + 5 * r(3)) * core + 4) / ((5 + 3 * r(3)) * core + 4))


def _exotic_bal_pi6_constant(m: int, r: Root):
    q = r(2 + 8 * r(3))
    head = 2 + 8 * r(3) + 4 * q
    tail = 4 * (2 - r(3)) * (4 + q)
    return ln((head + tail) / (head - tail))


def _exotic_lucbal_pi6_constant(m: int, r: Root):
    p = r(4 - r(3))
    head = 32 - 8 * r(3) + 12 * p
    tail = 6 * (2 - r(3)) * (3 + 2 * p)
    return ln((head + tail) / (head - tail))


def _angle_argument(target: Target, kind: QuadraticKind) -> Callable[[int, Root], object]:
    return lambda m, r: inverse_argument(target, kind, m, r)


_FAMILY = SeriesFamily
_CATALOGUE = [
    PiIdentity("castellanos-squared", _FAMILY.FIB_ODD_SQ, "π/20 from squared odd Fibonacci numbers",
               lambda m, r: 1 / (3 + r(10)), lambda r: 20, only_m0=True),
    PiIdentity("lucbal", _FAMILY.LUCBAL_ODD, "π/8 from Lucas-balancing numbers C_{2n+1}",
               lambda m, r: 1 / (3 + r(10)), lambda r: 8, only_m0=True, x=1),
    PiIdentity("theorem2", _FAMILY.LUC_EVEN, "π/4 from even-indexed Lucas numbers",
               lambda m, r: 2 / (_L(m) + r(_L(m) ** 2 + 4)), lambda r: 4),
    PiIdentity("theorem3-pi6", _FAMILY.LUC_EVEN, "π/6 from even-indexed Lucas numbers",
               _angle_argument(Target.PI_6, QuadraticKind.LUC_EVEN), lambda r: 6),
    PiIdentity("theorem3-pi12", _FAMILY.LUC_EVEN, "π/12 from even-indexed Lucas numbers",
               _angle_argument(Target.PI_12, QuadraticKind.LUC_EVEN), lambda r: 12),
    PiIdentity("theorem3-pi5", _FAMILY.LUC_EVEN, "π/5 from even-indexed Lucas numbers",
               _angle_argument(Target.PI_5, QuadraticKind.LUC_EVEN), lambda r: 5),
    PiIdentity("theorem4-pi12", _FAMILY.FIB_ODD, "π/(12 sqrt 5) from odd-indexed Fibonacci numbers",
               _angle_argument(Target.PI_12, QuadraticKind.FIB_ODD), lambda r: 12 * r(5)),
    PiIdentity("theorem4-pi6", _FAMILY.FIB_ODD, "π/(6 sqrt 5) from odd-indexed Fibonacci numbers",
               _angle_argument(Target.PI_6, QuadraticKind.FIB_ODD), lambda r: 6 * r(5)),
    PiIdentity("theorem4-pi5", _FAMILY.FIB_ODD, "π/(5 sqrt 5) from odd-indexed Fibonacci numbers",
               _angle_argument(Target.PI_5, QuadraticKind.FIB_ODD), lambda r: 5 * r(5)),
    PiIdentity("castellanos1", _FAMILY.FIB_ODD, "π/(4 sqrt 5) from odd-indexed Fibonacci numbers",
               lambda m, r: 2 / (r(5) * _F(m) + r(5 * _F(m) ** 2 + 4)), lambda r: 4 * r(5)),
    PiIdentity("lucbal-squared", _FAMILY.LUCBAL_SQ, "π/16 from squared Lucas-balancing numbers",
               lambda m, r: 1 / (9 + 7 * r(2) + 3 * r(20 + 14 * r(2))), lambda r: 16, only_m0=True, x=1),
    PiIdentity("lucas-squared", _FAMILY.LUC_EVEN_SQ, "π/4 from squared even-indexed Lucas numbers",
               _lucas_square_w, lambda r: 4),
    PiIdentity("sub-fib", _FAMILY.SUB_FIB_ODD, "π/2 from a 4n+3 Fibonacci subseries",
               lambda m, r: 2 / (r(5) * _F(m) + r(5 * _F(m) ** 2 + 4)), lambda r: 2,
               multiplier=lambda r: -4 * r(5),
               constant=lambda m, r: ln((5 * _F(m) ** 2 + r(5) * _F(m) * r(5 * _F(m) ** 2 + 4) + 2) / 2)),
    PiIdentity("sub-luc", _FAMILY.SUB_LUC_EVEN, "π/2 from a 4n+3 Lucas subseries",
               lambda m, r: 2 / (_L(m) + r(_L(m) ** 2 + 4)), lambda r: 2,
               multiplier=lambda r: -4,
               constant=lambda m, r: ln((_L(m) ** 2 + _L(m) * r(_L(m) ** 2 + 4) + 2) / 2)),
    PiIdentity("sub-luc-pi6", _FAMILY.SUB_LUC_EVEN, "π/6 from a 4n+3 Lucas subseries",
               lambda m, r: 2 / ((2 + r(3)) * _L(m) + _sub_luc_pi6_parts(m, r)[1]), lambda r: 6,
               multiplier=lambda r: -4, constant=_sub_luc_pi6_constant),
    PiIdentity("sub-fib-pi6", _FAMILY.SUB_FIB_ODD, "π/6 from a 4n+3 Fibonacci subseries",
               lambda m, r: 2 * (2 - r(3)) / (r(5) * _F(m) + _sub_fib_pi6_parts(m, r)[1]), lambda r: 6,
               multiplier=lambda r: -4 * r(5), constant=_sub_fib_pi6_constant),
    PiIdentity("exotic-bal-pi3", _FAMILY.SUB_BAL, "π/3 from a 4n+3 balancing subseries at x = 1",
               lambda m, r: 1 / (2 * r(6) + r(23)), lambda r: 3, multiplier=lambda r: -16 * r(2),
               constant=lambda m, r: ln((46 + 4 * r(138) + 8 * r(12) + 4 * r(46))
                                        / (46 + 4 * r(138) - 8 * r(12) - 4 * r(46))),
               only_m0=True, x=1),
    PiIdentity("exotic-lucbal-pi3", _FAMILY.SUB_LUCBAL, "π/3 from a 4n+3 Lucas-balancing subseries at x = 1",
               lambda m, r: 1 / (3 * r(3) + 2 * r(7)), lambda r: 3, multiplier=lambda r: -8,
               constant=lambda m, r: ln((56 + 12 * r(21) + 18 * r(3) + 12 * r(7))
                                        / (56 + 12 * r(21) - 18 * r(3) - 12 * r(7))),
               only_m0=True, x=1),
    PiIdentity("exotic-bal-pi6", _FAMILY.SUB_BAL, "π/6 from a 4n+3 balancing subseries at x = 1",
               lambda m, r: (2 - r(3)) / (2 * r(2) + r(1 + 4 * r(3))), lambda r: 6,
               multiplier=lambda r: -16 * r(2), constant=_exotic_bal_pi6_constant, only_m0=True, x=1),
    PiIdentity("exotic-lucbal-pi6", _FAMILY.SUB_LUCBAL, "π/6 from a 4n+3 Lucas-balancing subseries at x = 1",
               lambda m, r: (2 - r(3)) / (3 + 2 * r(4 - r(3))), lambda r: 6,
               multiplier=lambda r: -8, constant=_exotic_lucbal_pi6_constant, only_m0=True, x=1),
]
IDENTITIES = {identity.id: identity for identity in _CATALOGUE}
EXOTIC_IDS = ("exotic-bal-pi3", "exotic-lucbal-pi3", "exotic-bal-pi6", "exotic-lucbal-pi6")

# shapes for which no π-series exists; each maps to the root problem that shows it
NEGATIVE_IDS = {
    "balancing-squared": "no series with squared balancing coefficients B_{2n+1}(1)^2 exists",
    "fib-even": "no series with even-indexed Fibonacci coefficients F_{2m(2n+1)} exists",
    "luc-odd": "no series with odd-indexed Lucas coefficients L_{(2m+1)(2n+1)} exists",
    "fib-even-squared": "no series with squared even-indexed Fibonacci coefficients exists",
}


def identity_ids() -> list[str]:
    return list(IDENTITIES)


def _negative(identity_id: str, m: int, precision: int) -> NoReturn:
    if identity_id == "balancing-squared":
        solution = solve_squared_quartic(QuarticKind.BAL_SQ_X1, precision=precision)
    elif identity_id == "fib-even-squared":
        solution = solve_squared_quartic(QuarticKind.FIB_EVEN_SQ, m, precision)
    elif identity_id == "fib-even":
        solution = solve_unit_arctan_quadratic(QuadraticKind.FIB_EVEN, max(m, 1), precision)
    else:
        solution = solve_unit_arctan_quadratic(QuadraticKind.LUC_ODD, m, precision)
    if solution.verdict is Verdict.EXISTS:
        raise AssertionError(f"{identity_id}: unexpected admissible root {solution.selected}")
    real = solution.real_roots
    detail = (f"largest real root {max(real).to_string(12)}" if real else "all roots complex")
    raise NoValidRoot(f"{NEGATIVE_IDS[identity_id]}: {detail}, threshold {solution.threshold.to_string(12)}")


def lookup(identity_id: str, m: int = 0, precision: int = DEFAULT_PRECISION) -> PiIdentity:
    """Return the catalogue entry, raising NoValidRoot for shapes proven not to exist."""
    if identity_id in NEGATIVE_IDS:
        _negative(identity_id, m, precision)
    if identity_id not in IDENTITIES:
        raise DomainError(f"unknown identity {identity_id!r}; known: {', '.join(IDENTITIES)}")
    identity = IDENTITIES[identity_id]
    if not isinstance(m, int) or m < 0:
        raise DomainError("m must be a non-negative integer")
    if identity.only_m0 and m != 0:
        raise DomainError(f"{identity_id} is defined for m = 0 only")
    return identity


def _spec(identity: PiIdentity, m: int, precision: int) -> SeriesSpec:
    root = big_root(precision)
    z = 1 / identity.inverse_argument(m, root)
    if identity.x is not None:
        return SeriesSpec(identity.family, z, x=PolyArgument.real(identity.x))
    return SeriesSpec(identity.family, z, m=m)


def _assemble(identity: PiIdentity, m: int, series_value: BigReal, precision: int) -> BigReal:
    root = big_root(precision)
    constant = identity.constant(m, root) if identity.constant else 0
    return identity.scale(root) * (constant + identity.multiplier(root) * series_value)


def pi_identity_eval(identity_id: str, m: int = 0, N: int = 10, precision: int = DEFAULT_PRECISION,
                     arithmetic: Arithmetic = "exact") -> PartialSumReport:
    """Partial sum of an identity's series up to n = N and the π estimate it implies.

    ``arithmetic="double"`` forms each term in IEEE double precision (the
    argument w itself evaluated with ``math.sqrt``) and adds the terms
    exactly; ``"exact"`` carries everything at ``precision`` digits.
    """
    if arithmetic not in ARITHMETIC_MODES:
        raise DomainError(f"arithmetic must be one of {ARITHMETIC_MODES}")
    identity = lookup(identity_id, m, precision)
    spec = _spec(identity, m, precision)
    if arithmetic == "exact":
        total = partial_sum(spec, N, precision)
    else:
        w = identity.inverse_argument(m, math.sqrt)
        total = double_partial_sum(spec, w, N, precision)
    root = big_root(precision)
    weight = abs(identity.scale(root) * identity.multiplier(root))
    estimate = _assemble(identity, m, total, precision)
    return PartialSumReport(
        identity=identity_id,
        m=m,
        N=N,
        arithmetic=arithmetic,
        sum=total,
        tail_bound=weight * tail_bound(spec, N, precision),
        closed_form=closed_form(spec, precision),
        pi_estimate=estimate,
        digits=count_correct_digits(estimate, pi_reference(precision)),
    )


def identity_residual(identity_id: str, m: int = 0, precision: int = DEFAULT_PRECISION) -> BigReal:
    """|right-hand side with the series replaced by its closed form - π|."""
    identity = lookup(identity_id, m, precision)
    spec = _spec(identity, m, precision)
    value = _assemble(identity, m, closed_form(spec, precision), precision)
    return abs(value - pi_reference(precision))


@dataclass(frozen=True)
class ExoticCheck:
    identity: str
    residual: BigReal
    flagged: bool


def check_exotic_representations(precision: int = DEFAULT_PRECISION,
                                 tolerance: str = "1e-20") -> list[ExoticCheck]:
    """Evaluate the four x = 1 subseries representations; flag any that miss π by more than ``tolerance``."""
    limit = BigReal(tolerance, precision)
    checks = []
    for identity_id in EXOTIC_IDS:
        residual = identity_residual(identity_id, 0, precision)
        checks.append(ExoticCheck(identity_id, residual, residual > limit))
    return checks
