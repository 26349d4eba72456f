"""Balancing polynomials B_n(x) and Lucas-balancing polynomials C_n(x).

Both satisfy u_n = 6x u_{n-1} - u_{n-2}; B starts from (0, 1) and C from
(1, 3x).  Values are available by three routes which are kept separate on
purpose so that they can check one another:

* the defining recurrence (exact when ``x`` is rational),
* the Binet forms in terms of λ1,2(x) = 3x ± sqrt(9x^2 - 1),
* the Chebyshev forms B_n(x) = U_{n-1}(3x), C_n(x) = T_n(3x).
"""

from __future__ import annotations

import enum
import warnings
from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Union

from .bigreal import DEFAULT_PRECISION, BigReal, sqrt
from .errors import DegenerateIndexWarning, DomainError, IntegrityError
from .sequences import fibonacci, golden_ratio, lucas

Which = Literal["B", "C"]
Exact = Union[int, Fraction]
Value = Union[Fraction, BigReal]

COEFFICIENT_CAP = 64
THIRD = Fraction(1, 3)
# Binet route refuses arguments this close to 1/3: λ1 - λ2 cancels there
BINET_MARGIN = Fraction(1, 10**6)


class ArgumentKind(enum.Enum):
    GENERIC = "generic-real"
    EVEN_LUCAS = "even-lucas"
    ODD_FIBONACCI = "odd-fibonacci"


@dataclass(frozen=True)
class PolyArgument:
    """A polynomial argument, either a plain real or one of the two special families.

    ``even_lucas(m)`` is x = L_{2m}/6 (exact rational) and
    ``odd_fibonacci(m)`` is x = sqrt(5) F_{2m+1}/6 (irrational).
    """

    kind: ArgumentKind
    x: Fraction | BigReal | None = None
    m: int | None = None

    @classmethod
    def real(cls, x: int | Fraction | BigReal | str | float) -> PolyArgument:
        if isinstance(x, (int, Fraction)):
            return cls(ArgumentKind.GENERIC, x=Fraction(x))
        if isinstance(x, (str, float)):
            x = BigReal.of(x)
        return cls(ArgumentKind.GENERIC, x=x)

    @classmethod
    def even_lucas(cls, m: int) -> PolyArgument:
        if m < 0:
            raise DomainError("m must be non-negative")
        return cls(ArgumentKind.EVEN_LUCAS, m=m)

    @classmethod
    def odd_fibonacci(cls, m: int) -> PolyArgument:
        if m < 0:
            raise DomainError("m must be non-negative")
        return cls(ArgumentKind.ODD_FIBONACCI, m=m)

    @property
    def is_exact(self) -> bool:
        if self.kind is ArgumentKind.GENERIC:
            return isinstance(self.x, Fraction)
        return self.kind is ArgumentKind.EVEN_LUCAS

    def value(self, precision: int = DEFAULT_PRECISION) -> Value:
        if self.kind is ArgumentKind.EVEN_LUCAS:
            return Fraction(lucas(2 * self.m), 6)
        if self.kind is ArgumentKind.ODD_FIBONACCI:
            return sqrt(BigReal.of(5, precision)) * fibonacci(2 * self.m + 1) / 6
        if isinstance(self.x, BigReal):
            return self.x.with_precision(precision)
        return self.x

    def real_value(self, precision: int = DEFAULT_PRECISION) -> BigReal:
        return BigReal.of(self.value(precision), precision)

    def __str__(self) -> str:
        if self.kind is ArgumentKind.EVEN_LUCAS:
            return f"L_{2 * self.m}/6"
        if self.kind is ArgumentKind.ODD_FIBONACCI:
            return f"sqrt(5)*F_{2 * self.m + 1}/6"
        return str(self.x)


def as_argument(x: PolyArgument | int | Fraction | BigReal | str | float) -> PolyArgument:
    return x if isinstance(x, PolyArgument) else PolyArgument.real(x)


def _working_value(x, precision: int) -> Value:
    arg = as_argument(x)
    return arg.value(precision)


def _check_which(which: str) -> None:
    if which not in ("B", "C"):
        raise DomainError(f"which must be 'B' or 'C', got {which!r}")


# -- recurrence route -----------------------------------------------------


def _recurrence(n: int, x: Value, which: Which) -> Value:
    if n < 0:
        raise DomainError(f"negative index {n}")
    six_x = 6 * x
    if which == "B":
        prev, cur = 0 * x, 1 + 0 * x
    else:
        prev, cur = 1 + 0 * x, 3 * x
    if n == 0:
        return prev
    for _ in range(n - 1):
        prev, cur = cur, six_x * cur - prev
    return cur


def eval_balancing(n: int, x, precision: int = DEFAULT_PRECISION) -> Value:
    """B_n(x) by the recurrence; a Fraction when x is rational."""
    return _recurrence(n, _working_value(x, precision), "B")


def eval_lucas_balancing(n: int, x, precision: int = DEFAULT_PRECISION) -> Value:
    """C_n(x) by the recurrence; a Fraction when x is rational."""
    return _recurrence(n, _working_value(x, precision), "C")


def balancing_sequence(count: int, x: Value, which: Which) -> list[Value]:
    """[u_0, ..., u_{count-1}] for u = B or C at x, sharing one recurrence pass."""
    six_x = 6 * x
    if which == "B":
        prev, cur = 0 * x, 1 + 0 * x
    else:
        prev, cur = 1 + 0 * x, 3 * x
    values = []
    for _ in range(count):
        values.append(prev)
        prev, cur = cur, six_x * cur - prev
    return values


# -- Binet route ----------------------------------------------------------


def _real_above_third(x, precision: int, margin: Fraction = Fraction(0)) -> BigReal:
    arg = as_argument(x)
    value = arg.value(precision)
    if value <= THIRD + margin:
        raise DomainError(f"argument {arg} must exceed 1/3" + (f" + {margin}" if margin else ""))
    return BigReal.of(value, precision)


def eval_binet(n: int, x, precision: int = DEFAULT_PRECISION, which: Which = "B") -> BigReal:
    _check_which(which)
    if n < 0:
        raise DomainError(f"negative index {n}")
    work = precision + 2 * len(str(max(n, 1)))
    real = _real_above_third(x, work, BINET_MARGIN)
    root = sqrt(9 * real * real - 1)
    lam1 = 3 * real + root
    lam2 = 3 * real - root
    p1, p2 = lam1**n, lam2**n
    result = (p1 - p2) / (2 * root) if which == "B" else (p1 + p2) / 2
    return result.with_precision(precision)


# -- Chebyshev route ------------------------------------------------------


def _chebyshev_t(n: int, y: Value) -> Value:
    t_prev, t_cur = 1 + 0 * y, y
    if n == 0:
        return t_prev
    for _ in range(n - 1):
        t_prev, t_cur = t_cur, 2 * y * t_cur - t_prev
    return t_cur


def _chebyshev_u(n: int, y: Value) -> Value:
    u_prev, u_cur = 1 + 0 * y, 2 * y
    if n == 0:
        return u_prev
    for _ in range(n - 1):
        u_prev, u_cur = u_cur, 2 * y * u_cur - u_prev
    return u_cur


def eval_chebyshev_route(n: int, x, precision: int = DEFAULT_PRECISION, which: Which = "B") -> Value:
    """B_n(x) = U_{n-1}(3x) or C_n(x) = T_n(3x)."""
    _check_which(which)
    y = 3 * _working_value(x, precision)
    if which == "B":
        if n < 0:
            raise DomainError(f"negative index {n}")
        # U_{-1} = 0
        return _chebyshev_u(n - 1, y) if n else y * 0
    if n < 0:
        raise DomainError(f"negative index {n}")
    return _chebyshev_t(n, y)


# -- exact coefficients ---------------------------------------------------


@dataclass(frozen=True)
class IntPolynomial:
    coefficients: tuple[int, ...]  # ascending degree, no trailing zeros

    @property
    def degree(self) -> int:
        return len(self.coefficients) - 1

    @property
    def leading(self) -> int:
        return self.coefficients[-1] if self.coefficients else 0

    def __call__(self, x):
        acc = 0 * x
        for c in reversed(self.coefficients):
            acc = acc * x + c
        return acc

    def __str__(self) -> str:
        terms = []
        for power in range(self.degree, -1, -1):
            c = self.coefficients[power]
            if c:
                mono = "" if power == 0 else ("x" if power == 1 else f"x^{power}")
                coef = str(abs(c)) if abs(c) != 1 or power == 0 else ""
                terms.append(("-" if c < 0 else "+") + coef + mono)
        if not terms:
            return "0"
        text = "".join(terms)
        return text[1:] if text[0] == "+" else text


def _trim(coeffs: list[int]) -> tuple[int, ...]:
    while coeffs and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def coefficients(n: int, which: Which = "B", cap: int = COEFFICIENT_CAP) -> IntPolynomial:
    """Integer coefficient vector of B_n or C_n, built by the polynomial recurrence."""
    _check_which(which)
    if n < 0:
        raise DomainError(f"negative index {n}")
    if n > cap:
        raise DomainError(f"degree {n} exceeds the coefficient cap {cap}")
    prev, cur = ([0], [1]) if which == "B" else ([1], [0, 3])
    if n == 0:
        return IntPolynomial(_trim(list(prev)))
    for _ in range(n - 1):
        shifted = [0] + [6 * c for c in cur]
        padded = prev + [0] * (len(shifted) - len(prev))
        prev, cur = cur, [a - b for a, b in zip(shifted, padded)]
    return IntPolynomial(_trim(list(cur)))


# -- connections to Fibonacci and Lucas numbers ---------------------------


def connection_even(m: int, n: int) -> tuple[Fraction, Fraction]:
    """(B_n(L_{2m}/6), C_n(L_{2m}/6)) checked exactly against F_{2mn}/F_{2m} and L_{2mn}/2.

    At m = 0 the B-side target divides by F_0 = 0; that check is skipped
    with a :class:`DegenerateIndexWarning`.
    """
    if m < 0 or n < 0:
        raise DomainError("m and n must be non-negative")
    x = Fraction(lucas(2 * m), 6)
    b_value = Fraction(_recurrence(n, x, "B"))
    c_value = Fraction(_recurrence(n, x, "C"))
    if m == 0:
        warnings.warn("m = 0: F_0 = 0, the balancing side of the connection is undefined",
                      DegenerateIndexWarning, stacklevel=2)
    elif b_value != Fraction(fibonacci(2 * m * n), fibonacci(2 * m)):
        raise IntegrityError(f"B_{n}(L_{2 * m}/6) != F_{2 * m * n}/F_{2 * m}")
    if c_value != Fraction(lucas(2 * m * n), 2):
        raise IntegrityError(f"C_{n}(L_{2 * m}/6) != L_{2 * m * n}/2")
    return b_value, c_value


def connection_odd(m: int, n: int, precision: int = DEFAULT_PRECISION) -> tuple[BigReal, BigReal]:
    """(B_{2n+1}(x), C_{2n+1}(x)) at x = sqrt(5) F_{2m+1}/6, checked against Lucas/Fibonacci forms."""
    if m < 0 or n < 0:
        raise DomainError("m and n must be non-negative")
    x = PolyArgument.odd_fibonacci(m).value(precision)
    k = 2 * n + 1
    b_value = _recurrence(k, x, "B")
    c_value = _recurrence(k, x, "C")
    b_target = BigReal.of(Fraction(lucas((2 * m + 1) * k), lucas(2 * m + 1)), precision)
    c_target = sqrt(BigReal.of(5, precision)) * fibonacci((2 * m + 1) * k) / 2
    tolerance = BigReal(f"1e{-precision + 6}", precision)
    for got, want, label in ((b_value, b_target, "B"), (c_value, c_target, "C")):
        if abs(got - want) > tolerance * abs(want):
            raise IntegrityError(f"{label}_{k}(sqrt(5) F_{2 * m + 1}/6) disagrees with its Fibonacci form")
    return b_value, c_value


# -- characteristic roots -------------------------------------------------


@dataclass(frozen=True)
class GrowthPair:
    lambda1: BigReal
    lambda2: BigReal


def growth_pair(x, precision: int = DEFAULT_PRECISION) -> GrowthPair:
    """λ1,2(x) = 3x ± sqrt(9x^2 - 1) with their product/sum/difference checks.

    For the special arguments λ1 is also compared with the golden-ratio
    power it should equal: α^{2m} for L_{2m}/6 and α^{2m+1} for sqrt(5) F_{2m+1}/6.
    """
    arg = as_argument(x)
    real = _real_above_third(arg, precision)
    root = sqrt(9 * real * real - 1)
    pair = GrowthPair(3 * real + root, 3 * real - root)
    tolerance = BigReal(f"1e{-precision + 4}", precision)
    scale = max(BigReal.of(1, precision), pair.lambda1)
    if abs(pair.lambda1 * pair.lambda2 - 1) > tolerance:
        raise IntegrityError("λ1 λ2 != 1")
    if abs(pair.lambda1 + pair.lambda2 - 6 * real) > tolerance * scale:
        raise IntegrityError("λ1 + λ2 != 6x")
    if abs(pair.lambda1 - pair.lambda2 - 2 * root) > tolerance * scale:
        raise IntegrityError("λ1 - λ2 != 2 sqrt(9x^2 - 1)")
    power = None
    if arg.kind is ArgumentKind.EVEN_LUCAS:
        power = 2 * arg.m
    elif arg.kind is ArgumentKind.ODD_FIBONACCI:
        power = 2 * arg.m + 1
    if power is not None:
        expected = golden_ratio(precision) ** power
        if abs(pair.lambda1 - expected) > BigReal(f"1e{-precision + 6}", precision) * expected:
            raise IntegrityError(f"λ1({arg}) != α^{power}")
    return pair
