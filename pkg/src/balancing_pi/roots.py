"""Argument equations for π-series and their existence verdicts.

A π-series of a given shape exists when the equation "closed-form arctan
argument = tan(target angle)" has a real root beyond the convergence
threshold of the family.  Quadratics are solved with the quadratic
formula.  The quartics of the squared families are all of the form

    z^4 + p z^3 + q z^2 - p z + 1 = 0,

which the substitution u = z - 1/z turns into u^2 + p u + q + 2 = 0.
With t = u/2 every root is t ± sqrt(t^2 + 1); this is the radical form in
which the roots are reported.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Sequence, Union

from .bigreal import DEFAULT_PRECISION, BigReal, arctan2, sqrt
from .errors import DomainError, IntegrityError
from .sequences import fibonacci, golden_ratio, lucas

Coefficient = Union[int, BigReal]


class Verdict(enum.Enum):
    EXISTS = "EXISTS"
    NO_SERIES = "NO_SERIES"


class QuadraticKind(enum.Enum):
    FIB_EVEN = "fib-even"
    LUC_EVEN = "luc-even"
    FIB_ODD = "fib-odd"
    LUC_ODD = "luc-odd"


class QuarticKind(enum.Enum):
    LUCBAL_SQ_X1 = "lucbal-squared-x1"
    BAL_SQ_X1 = "balancing-squared-x1"
    LUC_EVEN_SQ = "luc-even-squared"
    FIB_EVEN_SQ = "fib-even-squared"


class Target(enum.Enum):
    PI_6 = "pi6"
    PI_12 = "pi12"
    PI_5 = "pi5"

    @property
    def divisor(self) -> int:
        return {"pi6": 6, "pi12": 12, "pi5": 5}[self.value]


@dataclass(frozen=True)
class ComplexRoot:
    re: BigReal
    im: BigReal

    def is_real(self, precision: int | None = None) -> bool:
        precision = self.re.precision if precision is None else precision
        return abs(self.im) < BigReal(f"1e{-(precision // 2)}", precision)

    def __str__(self) -> str:
        if self.is_real():
            return self.re.to_string(31)
        sign = "-" if self.im.sign() < 0 else "+"
        return f"{self.re.to_string(31)} {sign} {abs(self.im).to_string(31)}i"


@dataclass(frozen=True)
class RootSolution:
    """Roots of an argument equation.

    ``equation`` lists the coefficients leading term first.
    """

    kind: str
    m: int | None
    equation: tuple[Coefficient, ...]
    roots: tuple[ComplexRoot, ...]
    threshold: BigReal
    selected: BigReal | None
    verdict: Verdict

    @property
    def real_roots(self) -> list[BigReal]:
        return [r.re for r in self.roots if r.is_real()]


# -- complex helpers on (re, im) pairs ------------------------------------


def _csqrt(re: BigReal, im: BigReal) -> tuple[BigReal, BigReal]:
    """Principal square root of re + i·im."""
    if not im:
        if re.sign() >= 0:
            return sqrt(re), im * 0
        return re * 0, sqrt(-re)
    modulus = sqrt(re * re + im * im)
    real_part = sqrt((modulus + re) / 2)
    imag_part = sqrt((modulus - re) / 2)
    return real_part, imag_part if im.sign() > 0 else -imag_part


def _horner(coeffs: Sequence[Coefficient], re: BigReal, im: BigReal) -> tuple[BigReal, BigReal]:
    acc_re, acc_im = re * 0, re * 0
    for c in coeffs:
        acc_re, acc_im = acc_re * re - acc_im * im + c, acc_re * im + acc_im * re
    return acc_re, acc_im


def residual(equation: Sequence[Coefficient], root: ComplexRoot) -> BigReal:
    """|P(r)| divided by max(1, Σ|c_k||r|^k), the scale of the evaluation itself."""
    value_re, value_im = _horner(equation, root.re, root.im)
    size = sqrt(root.re * root.re + root.im * root.im)
    scale = root.re * 0 + 1
    power = root.re * 0 + 1
    total = root.re * 0
    for c in reversed(equation):
        total = total + abs(c) * power
        power = power * size
    if total > scale:
        scale = total
    return sqrt(value_re * value_re + value_im * value_im) / scale


def _finish(kind: str, m: int | None, equation: Sequence[Coefficient], roots: list[ComplexRoot],
            threshold: BigReal, precision: int) -> RootSolution:
    limit = BigReal(f"1e{-precision + 8}", precision)
    for root in roots:
        if residual(equation, root) >= limit:
            raise IntegrityError(f"{kind}: root {root} fails the residual check")
    real = sorted((r.re for r in roots if r.is_real(precision)), reverse=True)
    tolerance = BigReal(f"1e{-precision + 8}", precision) * max(threshold, BigReal.of(1, precision))
    selected = None
    if real and real[0] - threshold > tolerance:
        selected = real[0]
    verdict = Verdict.EXISTS if selected is not None else Verdict.NO_SERIES
    return RootSolution(kind, m, tuple(equation), tuple(roots), threshold, selected, verdict)


def _quadratic_roots(a: Coefficient, b: Coefficient, c: Coefficient, precision: int) -> list[ComplexRoot]:
    a, b, c = (BigReal.of(v, precision) for v in (a, b, c))
    disc = b * b - 4 * a * c
    zero = BigReal.of(0, precision)
    if disc.sign() >= 0:
        root = sqrt(disc)
        return [ComplexRoot((-b + root) / (2 * a), zero), ComplexRoot((-b - root) / (2 * a), zero)]
    root = sqrt(-disc)
    return [ComplexRoot(-b / (2 * a), root / (2 * a)), ComplexRoot(-b / (2 * a), -root / (2 * a))]


def solve_unit_arctan_quadratic(kind: QuadraticKind | str, m: int,
                                precision: int = DEFAULT_PRECISION) -> RootSolution:
    """Roots of the quadratic that makes the linear-family arctan argument equal to 1.

    FIB_EVEN: z^2 - sqrt(5) F_{2m} z + 1;  LUC_EVEN: z^2 - L_{2m} z - 1;
    FIB_ODD:  z^2 - sqrt(5) F_{2m+1} z - 1; LUC_ODD: z^2 - L_{2m+1} z + 1.
    """
    kind = QuadraticKind(kind)
    if m < 0:
        raise DomainError("m must be non-negative")
    if kind is QuadraticKind.FIB_EVEN and m == 0:
        raise DomainError("FIB_EVEN needs m >= 1: F_0 = 0 degenerates the equation")
    root5 = sqrt(BigReal.of(5, precision))
    alpha = golden_ratio(precision)
    if kind is QuadraticKind.FIB_EVEN:
        equation = (1, -root5 * fibonacci(2 * m), 1)
        threshold = alpha ** (2 * m)
    elif kind is QuadraticKind.LUC_EVEN:
        equation = (1, -lucas(2 * m), -1)
        threshold = alpha ** (2 * m)
    elif kind is QuadraticKind.FIB_ODD:
        equation = (1, -root5 * fibonacci(2 * m + 1), -1)
        threshold = alpha ** (2 * m + 1)
    else:
        equation = (1, -lucas(2 * m + 1), 1)
        threshold = alpha ** (2 * m + 1)
    roots = _quadratic_roots(*equation, precision)
    return _finish(kind.value, m, equation, roots, threshold, precision)


def _antipalindromic_roots(p: Coefficient, q: Coefficient, precision: int) -> list[ComplexRoot]:
    """Roots of z^4 + p z^3 + q z^2 - p z + 1 as t ± sqrt(t^2 + 1), t = u/2, u^2 + p u + q + 2 = 0."""
    roots = []
    for u in _quadratic_roots(1, p, BigReal.of(q, precision) + 2, precision):
        t_re, t_im = u.re / 2, u.im / 2
        # t^2 + 1
        s_re, s_im = _csqrt(t_re * t_re - t_im * t_im + 1, 2 * t_re * t_im)
        roots.append(ComplexRoot(t_re + s_re, t_im + s_im))
        roots.append(ComplexRoot(t_re - s_re, t_im - s_im))
    return roots


def quartic_equation(kind: QuarticKind | str, m: int = 0) -> tuple[int, ...]:
    """Exact integer coefficients, leading term first."""
    kind = QuarticKind(kind)
    if kind is QuarticKind.BAL_SQ_X1:
        return (1, -32, 66, 32, 1)
    if kind is QuarticKind.LUCBAL_SQ_X1:
        return (1, -36, -70, 36, 1)
    if kind is QuarticKind.LUC_EVEN_SQ:
        a = lucas(2 * m) ** 2
        return (1, -a, -2 * (a - 1), a, 1)
    b = 5 * fibonacci(2 * m) ** 2
    return (1, -b, 2 * (b + 1), b, 1)


def solve_squared_quartic(kind: QuarticKind | str, m: int = 0,
                          precision: int = DEFAULT_PRECISION) -> RootSolution:
    """Roots of the squared-family quartic whose arctan argument equals 1.

    The two x = 1 kinds ignore ``m``.  The threshold is λ1(x)^2:
    (3 + 2 sqrt(2))^2 at x = 1 and α^{4m} for the Fibonacci/Lucas kinds.
    """
    kind = QuarticKind(kind)
    if m < 0:
        raise DomainError("m must be non-negative")
    equation = quartic_equation(kind, m)
    if kind in (QuarticKind.BAL_SQ_X1, QuarticKind.LUCBAL_SQ_X1):
        m = None
        threshold = (3 + 2 * sqrt(BigReal.of(2, precision))) ** 2
    else:
        threshold = golden_ratio(precision) ** (4 * m)
    _, p, q, _, _ = equation
    # extra digits: the roots grow like p, and the residual is measured relative to p^4
    work = precision + 2 * len(str(abs(p)))
    roots = _antipalindromic_roots(p, q, work)
    roots = [ComplexRoot(r.re.with_precision(precision), r.im.with_precision(precision)) for r in roots]
    return _finish(kind.value, m, equation, roots, threshold, precision)


# -- explicit radicals for arctan targets other than π/4 -----------------------


def tan_target(target: Target | str, precision: int = DEFAULT_PRECISION) -> BigReal:
    """tan(π/6) = 1/sqrt(3), tan(π/12) = 2 - sqrt(3), tan(π/5) = sqrt(5 - 2 sqrt(5))."""
    target = Target(target)
    if target is Target.PI_6:
        return 1 / sqrt(BigReal.of(3, precision))
    if target is Target.PI_12:
        return 2 - sqrt(BigReal.of(3, precision))
    return sqrt(5 - 2 * sqrt(BigReal.of(5, precision)))


def inverse_argument(target: Target | str, kind: QuadraticKind | str, m: int, root) -> object:
    """w = 1/z for the target angle, written as the published radical over a generic ``root``.

    Works for floats (``root = math.sqrt``) as well as BigReals, so one
    expression feeds both the exact and the double-precision pipelines.
    """
    target, kind = Target(target), QuadraticKind(kind)
    if kind is QuadraticKind.LUC_EVEN:
        c = lucas(2 * m)
        if target is Target.PI_6:
            return 2 / (root(3) * c + root(3 * c * c + 4))
        if target is Target.PI_12:
            return 2 * (2 - root(3)) / (c + root(c * c + 4 * (2 - root(3)) ** 2))
        return 2 * root(5 - 2 * root(5)) / (c + root(c * c + 4 * (5 - 2 * root(5))))
    if kind is QuadraticKind.FIB_ODD:
        c = fibonacci(2 * m + 1)
        if target is Target.PI_6:
            return 2 / (root(15) * c + root(15 * c * c + 4))
        if target is Target.PI_12:
            return 2 * (2 - root(3)) / (root(5) * c + root(5 * c * c + 4 * (2 - root(3)) ** 2))
        return 2 * root(5 - 2 * root(5)) / (root(5) * c + root(5 * c * c + 4 * (5 - 2 * root(5))))
    raise DomainError(f"no explicit radical for kind {kind.value}")


def big_root(precision: int):
    """A sqrt accepting ints as well as BigReals, for use with :func:`inverse_argument`."""
    def root(v):
        return sqrt(BigReal.of(v, precision))
    return root


def theorem3_arguments(target: Target | str, kind: QuadraticKind | str, m: int,
                       precision: int = DEFAULT_PRECISION) -> RootSolution:
    """z making the LUC_EVEN or FIB_ODD arctan argument equal tan(π/6), tan(π/12) or tan(π/5).

    The published radical is evaluated and checked against the quadratic
    tan(θ) z^2 - c z - tan(θ) = 0 (c = L_{2m} or sqrt(5) F_{2m+1}), against
    the threshold and against the arctan argument itself.
    """
    target, kind = Target(target), QuadraticKind(kind)
    if kind not in (QuadraticKind.LUC_EVEN, QuadraticKind.FIB_ODD):
        raise DomainError("theorem3_arguments supports LUC_EVEN and FIB_ODD")
    if m < 0:
        raise DomainError("m must be non-negative")
    tan = tan_target(target, precision)
    alpha = golden_ratio(precision)
    if kind is QuadraticKind.LUC_EVEN:
        c = BigReal.of(lucas(2 * m), precision)
        threshold = alpha ** (2 * m)
    else:
        c = sqrt(BigReal.of(5, precision)) * fibonacci(2 * m + 1)
        threshold = alpha ** (2 * m + 1)
    z = 1 / inverse_argument(target, kind, m, big_root(precision))
    tolerance = BigReal(f"1e{-precision + 6}", precision)
    if abs(c * z / (z * z - 1) - tan) > tolerance:
        raise IntegrityError(f"radical for {target.value}/{kind.value}/m={m} misses tan(target)")
    angle = arctan2(c * z, z * z - 1)
    if abs(angle * target.divisor - arctan2(BigReal.of(0, precision), BigReal.of(-1, precision))) > tolerance:
        raise IntegrityError(f"radical for {target.value}/{kind.value}/m={m} misses the target angle")
    equation = (tan, -c, -tan)
    roots = _quadratic_roots(*equation, precision)
    solution = _finish(f"{kind.value}-{target.value}", m, equation, roots, threshold, precision)
    if solution.selected is None or abs(solution.selected - z) > tolerance * z:
        raise IntegrityError(f"radical for {target.value}/{kind.value}/m={m} is not the admissible root")
    return RootSolution(solution.kind, m, solution.equation, solution.roots, threshold, z, Verdict.EXISTS)
