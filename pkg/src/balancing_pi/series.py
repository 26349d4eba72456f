"""Series families: partial sums, closed forms and tail bounds.

Every family is a sum over n >= 0 of ``sign_n * c_n / (e_n * z^{e_n})`` where
the exponent e_n is 2n+1 (arctan type), 4n+3 (subseries) or n (the
logarithmic Lucas series, which starts at n = 1).  The coefficients c_n are
computed exactly whenever possible and converted once per term.

Tail bounds come from Binet domination |c_n| <= K * g^{e_n}:

    ============  =====================  ============
    coefficient   growth g               K
    ============  =====================  ============
    B_j(x)        λ1                     1/(2s)
    C_j(x)        λ1                     1
    F_j           α^step                 1
    L_j, j even   α^step                 2
    L_j, j odd    α^step                 1
    squares       g^2                    K^2
    ============  =====================  ============

with s = sqrt(9x^2 - 1).  Then with r = g/z < 1 the remainder after n = N is
at most K r^{e_{N+1}} / (e_{N+1} (1 - r^{step})).  A rounding allowance of
(N + 2) * max(1, K) * 10^-precision is added so the bound also covers the
finite-precision partial sum and closed form.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction

from .bigreal import DEFAULT_PRECISION, BigReal, arctan, arctan2, ln, pi_reference, sqrt
from .errors import ConvergenceViolation, DomainError
from .polynomials import PolyArgument, as_argument, balancing_sequence
from .sequences import fibonacci, golden_ratio, lucas


class SeriesFamily(enum.Enum):
    TAYLOR_ARCTAN = "taylor-arctan"
    BAL_ODD = "bal-odd"
    LUCBAL_ODD = "lucbal-odd"
    FIB_EVEN = "fib-even"
    LUC_EVEN = "luc-even"
    FIB_ODD = "fib-odd"
    LUC_ODD = "luc-odd"
    BAL_SQ = "bal-sq"
    LUCBAL_SQ = "lucbal-sq"
    FIB_EVEN_SQ = "fib-even-sq"
    LUC_EVEN_SQ = "luc-even-sq"
    FIB_ODD_SQ = "fib-odd-sq"
    SUB_BAL = "sub-bal"
    SUB_LUCBAL = "sub-lucbal"
    SUB_FIB_ODD = "sub-fib-odd"
    SUB_LUC_EVEN = "sub-luc-even"
    MEZO_LN2 = "mezo-ln2"


F = SeriesFamily
POLYNOMIAL_FAMILIES = frozenset({F.BAL_ODD, F.LUCBAL_ODD, F.BAL_SQ, F.LUCBAL_SQ, F.SUB_BAL, F.SUB_LUCBAL})
INDEXED_FAMILIES = frozenset({F.FIB_EVEN, F.LUC_EVEN, F.FIB_ODD, F.LUC_ODD, F.FIB_EVEN_SQ,
                              F.LUC_EVEN_SQ, F.FIB_ODD_SQ, F.SUB_FIB_ODD, F.SUB_LUC_EVEN})
SQUARED_FAMILIES = frozenset({F.BAL_SQ, F.LUCBAL_SQ, F.FIB_EVEN_SQ, F.LUC_EVEN_SQ, F.FIB_ODD_SQ})
SUBSERIES_FAMILIES = frozenset({F.SUB_BAL, F.SUB_LUCBAL, F.SUB_FIB_ODD, F.SUB_LUC_EVEN})
ALTERNATING_FAMILIES = frozenset(set(F) - SUBSERIES_FAMILIES - {F.MEZO_LN2})


def exponent(family: SeriesFamily, n: int) -> int:
    if family is F.MEZO_LN2:
        return n
    return 4 * n + 3 if family in SUBSERIES_FAMILIES else 2 * n + 1


def first_index(family: SeriesFamily) -> int:
    return 1 if family is F.MEZO_LN2 else 0


@dataclass(frozen=True)
class SeriesSpec:
    """A family with its parameters and summation argument z.

    Polynomial families take ``x``; Fibonacci/Lucas families take ``m``.
    Construction fails with :class:`ConvergenceViolation` unless z exceeds
    the family's threshold.
    """

    family: SeriesFamily
    z: BigReal
    m: int | None = None
    x: PolyArgument | None = None

    def __post_init__(self) -> None:
        object.__setattr__(self, "family", SeriesFamily(self.family))
        if not isinstance(self.z, BigReal):
            object.__setattr__(self, "z", BigReal.of(self.z))
        if self.family in POLYNOMIAL_FAMILIES:
            if self.x is None:
                raise DomainError(f"{self.family.value} needs a polynomial argument x")
            object.__setattr__(self, "x", as_argument(self.x))
            if self.x.real_value(self.z.precision) <= Fraction(1, 3):
                raise DomainError(f"{self.family.value} needs x > 1/3")
        elif self.family in INDEXED_FAMILIES:
            if not isinstance(self.m, int) or self.m < 0:
                raise DomainError(f"{self.family.value} needs an index m >= 0")
        limit = threshold(self, self.z.precision)
        if not self.z > limit:
            raise ConvergenceViolation(
                f"{self.family.value}: z = {self.z.to_string(20)} does not exceed the threshold {limit.to_string(20)}"
            )


# -- per-family data ---------------------------------------------------------


def _root_term(spec: SeriesSpec, precision: int) -> BigReal:
    """s = sqrt(9x^2 - 1) for polynomial families."""
    x = spec.x.real_value(precision)
    return sqrt(9 * x * x - 1)


def _growth(spec: SeriesSpec, precision: int) -> BigReal:
    """g with |c_n| <= K g^{e_n}."""
    family = spec.family
    one = BigReal.of(1, precision)
    if family is F.TAYLOR_ARCTAN:
        return one
    if family is F.MEZO_LN2:
        return golden_ratio(precision)
    if family in POLYNOMIAL_FAMILIES:
        x = spec.x.real_value(precision)
        base = 3 * x + sqrt(9 * x * x - 1)
    else:
        alpha = golden_ratio(precision)
        odd = family in (F.FIB_ODD, F.LUC_ODD, F.FIB_ODD_SQ, F.SUB_FIB_ODD)
        base = alpha ** (2 * spec.m + 1) if odd else alpha ** (2 * spec.m)
    return base * base if family in SQUARED_FAMILIES else base


def threshold(spec: SeriesSpec, precision: int = DEFAULT_PRECISION) -> BigReal:
    """The value z must exceed: λ1(x)^k or the matching golden-ratio power."""
    return _growth(spec, precision)


def _coefficient_constant(spec: SeriesSpec, precision: int) -> BigReal:
    family = spec.family
    one = BigReal.of(1, precision)
    if family in (F.BAL_ODD, F.SUB_BAL):
        return 1 / (2 * _root_term(spec, precision))
    if family is F.BAL_SQ:
        s = _root_term(spec, precision)
        return 1 / (4 * s * s)
    if family in (F.LUC_EVEN, F.SUB_LUC_EVEN, F.MEZO_LN2):
        return 2 * one
    if family is F.LUC_EVEN_SQ:
        return 4 * one
    return one


def _coefficients(spec: SeriesSpec, start: int, stop: int, precision: int) -> list:
    """Exact (int or Fraction) or BigReal coefficients c_n for start <= n < stop."""
    family = spec.family
    indices = range(start, stop)
    if family is F.TAYLOR_ARCTAN:
        return [1 for _ in indices]
    if family is F.MEZO_LN2:
        return [lucas(n) for n in indices]
    if family in POLYNOMIAL_FAMILIES:
        top = exponent(family, stop - 1) + 1 if stop > start else 0
        x = spec.x.value(precision)
        which = "B" if family in (F.BAL_ODD, F.BAL_SQ, F.SUB_BAL) else "C"
        values = balancing_sequence(top, x, which)
        picked = [values[exponent(family, n)] for n in indices]
        return [v * v for v in picked] if family in SQUARED_FAMILIES else picked
    m = spec.m
    if family in (F.FIB_EVEN, F.FIB_EVEN_SQ):
        picked = [fibonacci(2 * m * (2 * n + 1)) for n in indices]
    elif family in (F.LUC_EVEN, F.LUC_EVEN_SQ):
        picked = [lucas(2 * m * (2 * n + 1)) for n in indices]
    elif family in (F.FIB_ODD, F.FIB_ODD_SQ):
        picked = [fibonacci((2 * m + 1) * (2 * n + 1)) for n in indices]
    elif family is F.LUC_ODD:
        picked = [lucas((2 * m + 1) * (2 * n + 1)) for n in indices]
    elif family is F.SUB_FIB_ODD:
        picked = [fibonacci((2 * m + 1) * (4 * n + 3)) for n in indices]
    elif family is F.SUB_LUC_EVEN:
        picked = [lucas(2 * m * (4 * n + 3)) for n in indices]
    else:
        raise DomainError(f"unknown family {family}")
    return [c * c for c in picked] if family in SQUARED_FAMILIES else picked


def coefficients(spec: SeriesSpec, count: int, precision: int = DEFAULT_PRECISION) -> list:
    """The first ``count`` coefficients c_n of the family, starting at its first index."""
    start = first_index(spec.family)
    return _coefficients(spec, start, start + count, precision)


def _sign(family: SeriesFamily, n: int) -> int:
    return -1 if family in ALTERNATING_FAMILIES and n % 2 else 1


def partial_sum(spec: SeriesSpec, N: int, precision: int = DEFAULT_PRECISION) -> BigReal:
    """Sum of the terms up to and including n = N, in ascending order."""
    if not isinstance(N, int) or N < 0:
        raise DomainError("N must be a non-negative integer")
    family = spec.family
    start = first_index(family)
    w = 1 / spec.z.with_precision(precision)
    total = BigReal.of(0, precision)
    if N < start:
        return total
    coeffs = _coefficients(spec, start, N + 1, precision)
    step = exponent(family, start + 1) - exponent(family, start)
    power = w ** exponent(family, start)
    w_step = w**step
    for n, c in zip(range(start, N + 1), coeffs):
        e = exponent(family, n)
        term = BigReal.of(c, precision) * power / e
        total = total - term if _sign(family, n) < 0 else total + term
        power = power * w_step
    return total


def _atan_ratio(num: BigReal, den: BigReal) -> BigReal:
    # the numerators below are positive for z > 1, so the continuous branch
    # that vanishes as z -> oo is the angle of (den, num) in (0, π)
    return arctan2(num, den)


def closed_form(spec: SeriesSpec, precision: int = DEFAULT_PRECISION) -> BigReal:
    """Value of the full series via its arctan/log closed form."""
    family = spec.family
    z = spec.z.with_precision(precision)
    z2 = z * z
    root5 = sqrt(BigReal.of(5, precision))
    if family is F.TAYLOR_ARCTAN:
        return arctan(1 / z)
    if family is F.MEZO_LN2:
        return ln(z2 / (z2 - z - 1))
    if family in POLYNOMIAL_FAMILIES:
        x = spec.x.real_value(precision)
        s = _root_term(spec, precision)
        if family is F.BAL_ODD:
            return _atan_ratio(2 * s * z, z2 + 1) / (2 * s)
        if family is F.LUCBAL_ODD:
            return _atan_ratio(6 * x * z, z2 - 1) / 2
        if family is F.BAL_SQ:
            s2 = s * s
            return _atan_ratio(4 * s2 * z * (z2 - 1), z2 * z2 + 6 * (12 * x * x - 1) * z2 + 1) / (4 * s2)
        if family is F.LUCBAL_SQ:
            return _atan_ratio(36 * x * x * z * (z2 - 1), z2 * z2 - 2 * (36 * x * x - 1) * z2 + 1) / 4
        if family is F.SUB_BAL:
            log_part = ln((z2 + 2 * s * z - 1) / (z2 - 2 * s * z - 1)) / (8 * s)
            return log_part - _atan_ratio(2 * s * z, z2 + 1) / (4 * s)
        log_part = ln((z2 + 6 * x * z + 1) / (z2 - 6 * x * z + 1)) / 8
        return log_part - _atan_ratio(6 * x * z, z2 - 1) / 4
    m = spec.m
    if family is F.FIB_EVEN:
        c = root5 * fibonacci(2 * m)
        return _atan_ratio(c * z, z2 + 1) / root5
    if family is F.LUC_EVEN:
        return _atan_ratio(lucas(2 * m) * z, z2 - 1)
    if family is F.FIB_ODD:
        c = root5 * fibonacci(2 * m + 1)
        return _atan_ratio(c * z, z2 - 1) / root5
    if family is F.LUC_ODD:
        return _atan_ratio(lucas(2 * m + 1) * z, z2 + 1)
    if family is F.FIB_EVEN_SQ:
        c = 5 * fibonacci(2 * m) ** 2
        return _atan_ratio(c * z * (z2 - 1), z2 * z2 + 2 * (c + 1) * z2 + 1) / 5
    if family is F.LUC_EVEN_SQ:
        c = lucas(2 * m) ** 2
        return _atan_ratio(c * z * (z2 - 1), z2 * z2 - 2 * (c - 1) * z2 + 1)
    if family is F.FIB_ODD_SQ:
        c = 5 * fibonacci(2 * m + 1) ** 2
        return _atan_ratio(c * z * (z2 - 1), z2 * z2 - 2 * (c - 1) * z2 + 1) / 5
    if family is F.SUB_FIB_ODD:
        c = root5 * fibonacci(2 * m + 1)
        log_part = ln((z2 + c * z + 1) / (z2 - c * z + 1)) / (4 * root5)
        return log_part - _atan_ratio(c * z, z2 - 1) / (2 * root5)
    if family is F.SUB_LUC_EVEN:
        c = lucas(2 * m)
        log_part = ln((z2 + c * z + 1) / (z2 - c * z + 1)) / 4
        return log_part - _atan_ratio(c * z, z2 - 1) / 2
    raise DomainError(f"unknown family {family}")


def tail_bound(spec: SeriesSpec, N: int, precision: int = DEFAULT_PRECISION) -> BigReal:
    """Upper bound on |series - partial_sum(N)|, including a rounding allowance."""
    if not isinstance(N, int) or N < 0:
        raise DomainError("N must be a non-negative integer")
    family = spec.family
    z = spec.z.with_precision(precision)
    K = _coefficient_constant(spec, precision)
    r = _growth(spec, precision) / z
    if not r < 1:
        raise ConvergenceViolation(f"{family.value}: ratio {r} is not below 1")
    next_n = max(N + 1, first_index(family))
    e_next = exponent(family, next_n)
    step = exponent(family, next_n + 1) - e_next
    geometric = K * r**e_next / (e_next * (1 - r**step))
    rounding = (N + 2) * max(K, BigReal.of(1, precision)) * BigReal(f"1e{-precision}", precision)
    return geometric + rounding


# -- auxiliary identity checks ------------------------------------------------


def verify_arctan_addition(a, b, precision: int = DEFAULT_PRECISION, sign: int = 1) -> bool:
    """arctan(a) ± arctan(b) == arctan((a ± b)/(1 ∓ ab)) on the principal branch.

    Raises :class:`DomainError` when 1 ∓ ab vanishes or when the left side
    leaves (-π/2, π/2), where the identity needs a ±π correction.
    """
    if sign not in (1, -1):
        raise DomainError("sign must be +1 or -1")
    a, b = BigReal.of(a, precision), BigReal.of(b, precision)
    denominator = 1 - sign * a * b
    if not denominator:
        raise DomainError("1 ∓ ab = 0: the combined argument is infinite")
    left = arctan(a) + sign * arctan(b)
    half_pi = pi_reference(precision) / 2
    if not abs(left) < half_pi or denominator.sign() < 0:
        raise DomainError("outside the principal branch")
    right = arctan((a + sign * b) / denominator)
    return abs(left - right) < BigReal(f"1e{-precision + 6}", precision)


def mezo_companion_sum(N: int, precision: int = DEFAULT_PRECISION) -> BigReal:
    """Σ_{n=1..N} 2/(n 2^n), whose limit 2 ln 2 is shared with the Lucas series at z = 2."""
    total = BigReal.of(0, precision)
    for n in range(1, N + 1):
        total = total + BigReal.of(Fraction(2, n * 2**n), precision)
    return total


def fibonacci_subseries_m0(N: int, precision: int = DEFAULT_PRECISION) -> BigReal:
    """ln α - sqrt(5) Σ_{n<=N} F_{4n+3}/((4n+3) α^{8n+6}), which tends to π/8."""
    alpha = golden_ratio(precision)
    spec = SeriesSpec(F.SUB_FIB_ODD, alpha * alpha, m=0)
    return ln(alpha) - sqrt(BigReal.of(5, precision)) * partial_sum(spec, N, precision)


def double_partial_sum(spec: SeriesSpec, w: float, N: int, precision: int = DEFAULT_PRECISION) -> BigReal:
    """Partial sum with every term formed in IEEE double arithmetic.

    Each term is ``sign / e * float(c) * w**e`` with ``w`` a double
    approximation of 1/z; the doubles are then added exactly.  This is the
    arithmetic of an ordinary floating-point implementation and reproduces
    its characteristic stalling near 15-16 correct digits.
    """
    if not isinstance(N, int) or N < 0:
        raise DomainError("N must be a non-negative integer")
    family = spec.family
    total = BigReal.of(0, precision)
    for n, c in zip(range(first_index(family), N + 1), _coefficients(spec, first_index(family), N + 1, precision)):
        e = exponent(family, n)
        try:
            term = float(_sign(family, n)) / e * float(c) * w**e
        except OverflowError:
            raise DomainError(f"term {n} leaves the double range; use exact arithmetic") from None
        total = total + BigReal.of(term, precision)
    return total
