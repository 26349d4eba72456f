"""Arbitrary-precision real numbers built on :mod:`decimal`.

A :class:`BigReal` carries its working precision in decimal digits.  The
stored value keeps ``GUARD_DIGITS`` extra digits which are stripped when
the number is printed.  Arithmetic between two BigReals runs at the
smaller of the two precisions.

Every operation builds a fresh :class:`decimal.Context`, so no shared
mutable state is touched and the functions are safe to call from several
threads at once.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from decimal import (
    MAX_EMAX,
    MIN_EMIN,
    ROUND_HALF_EVEN,
    Context,
    Decimal,
)
from fractions import Fraction
from typing import Union

from .errors import DomainError, IntegrityError

DEFAULT_PRECISION = 64
GUARD_DIGITS = 10
MIN_PRECISION = 10

# π to 68 decimal places, from a printed table; an external cross-check only.
PRINTED_PI = (
    "3.14159265358979323846264338327950288419716939937510582097494459230781"
)


def context(digits: int) -> Context:
    """Return a fresh round-half-even context with ``digits`` significant digits."""
    return Context(prec=digits, rounding=ROUND_HALF_EVEN, Emax=MAX_EMAX, Emin=MIN_EMIN)


Number = Union["BigReal", int, Fraction, Decimal, float, str]


@dataclass(frozen=True, eq=False, slots=True)
class BigReal:
    value: Decimal
    precision: int = DEFAULT_PRECISION

    def __post_init__(self) -> None:
        if not isinstance(self.precision, int) or self.precision < MIN_PRECISION:
            raise DomainError(f"precision must be an integer >= {MIN_PRECISION}, got {self.precision!r}")
        value = self.value
        if isinstance(value, (int, str)):
            value = Decimal(value)
        elif not isinstance(value, Decimal):
            raise TypeError(f"BigReal value must be Decimal, int or str, not {type(value).__name__}")
        object.__setattr__(self, "value", context(self.precision + GUARD_DIGITS).plus(value))

    # -- construction -----------------------------------------------------

    @classmethod
    def of(cls, x: Number, precision: int = DEFAULT_PRECISION) -> BigReal:
        """Convert ``x`` to a BigReal at ``precision`` digits.

        Integers, fractions, decimals and strings are converted with a single
        rounding.  Floats are converted from their exact binary value.
        """
        if isinstance(x, BigReal):
            return x if x.precision == precision else cls(x.value, precision)
        return cls(_to_decimal(x, precision + GUARD_DIGITS), precision)

    @property
    def ctx(self) -> Context:
        return context(self.precision + GUARD_DIGITS)

    def with_precision(self, precision: int) -> BigReal:
        return BigReal(self.value, precision)

    # -- arithmetic -------------------------------------------------------

    def _operand(self, other: Number) -> tuple[Decimal, int] | None:
        if isinstance(other, BigReal):
            return other.value, min(self.precision, other.precision)
        if isinstance(other, (int, Fraction, Decimal, float)):
            return _to_decimal(other, self.precision + GUARD_DIGITS), self.precision
        return None

    def _binary(self, other: Number, op: str, reflected: bool = False) -> BigReal:
        operand = self._operand(other)
        if operand is None:
            return NotImplemented
        rhs, precision = operand
        ctx = context(precision + GUARD_DIGITS)
        a, b = (rhs, self.value) if reflected else (self.value, rhs)
        if op == "divide" and b == 0:
            raise ZeroDivisionError("BigReal division by zero")
        return BigReal(getattr(ctx, op)(a, b), precision)

    def __add__(self, other: Number) -> BigReal:
        return self._binary(other, "add")

    def __radd__(self, other: Number) -> BigReal:
        return self._binary(other, "add", reflected=True)

    def __sub__(self, other: Number) -> BigReal:
        return self._binary(other, "subtract")

    def __rsub__(self, other: Number) -> BigReal:
        return self._binary(other, "subtract", reflected=True)

    def __mul__(self, other: Number) -> BigReal:
        return self._binary(other, "multiply")

    def __rmul__(self, other: Number) -> BigReal:
        return self._binary(other, "multiply", reflected=True)

    def __truediv__(self, other: Number) -> BigReal:
        return self._binary(other, "divide")

    def __rtruediv__(self, other: Number) -> BigReal:
        return self._binary(other, "divide", reflected=True)

    def __pow__(self, exponent: int) -> BigReal:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return 1 / (self ** -exponent)
        # square-and-multiply with a few extra digits; Decimal.power with an
        # integral exponent is exact-then-rounded only for small results
        ctx = context(self.precision + GUARD_DIGITS + len(str(exponent)) + 2)
        result, base, e = Decimal(1), self.value, exponent
        while e:
            if e & 1:
                result = ctx.multiply(result, base)
            e >>= 1
            if e:
                base = ctx.multiply(base, base)
        return BigReal(result, self.precision)

    def __neg__(self) -> BigReal:
        return BigReal(self.value.copy_negate(), self.precision)

    def __pos__(self) -> BigReal:
        return self

    def __abs__(self) -> BigReal:
        return BigReal(self.value.copy_abs(), self.precision)

    # -- comparison -------------------------------------------------------

    def _cmp_value(self, other: Number) -> Decimal:
        if isinstance(other, BigReal):
            return other.value
        return _to_decimal(other, self.precision + GUARD_DIGITS)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, (BigReal, int, Fraction, Decimal, float)):
            return NotImplemented
        if isinstance(other, Fraction):
            return Fraction(self.value) == other
        return self.value == self._cmp_value(other)

    def __hash__(self) -> int:
        return hash(self.value)

    def __lt__(self, other: Number) -> bool:
        if isinstance(other, Fraction):
            return Fraction(self.value) < other
        return self.value < self._cmp_value(other)

    def __le__(self, other: Number) -> bool:
        return self < other or self == other

    def __gt__(self, other: Number) -> bool:
        if isinstance(other, Fraction):
            return Fraction(self.value) > other
        return self.value > self._cmp_value(other)

    def __ge__(self, other: Number) -> bool:
        return self > other or self == other

    def __bool__(self) -> bool:
        return bool(self.value)

    # -- conversion -------------------------------------------------------

    def __float__(self) -> float:
        return float(self.value)

    def sign(self) -> int:
        return (self.value > 0) - (self.value < 0)

    def to_string(self, figures: int | None = None) -> str:
        """Render with ``figures`` significant digits (default: the precision), half-even."""
        figures = self.precision if figures is None else figures
        rounded = context(figures).plus(self.value)
        if rounded == 0:
            return "0"
        if rounded.adjusted() < -8:
            return f"{rounded:E}"
        text = format(rounded, "f")
        return text

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"BigReal('{self.to_string()}', precision={self.precision})"


def _to_decimal(x: Number, digits: int) -> Decimal:
    ctx = context(digits)
    if isinstance(x, BigReal):
        return ctx.plus(x.value)
    if isinstance(x, bool):
        raise TypeError("booleans are not numbers here")
    if isinstance(x, int):
        return ctx.plus(Decimal(x))
    if isinstance(x, Fraction):
        return ctx.divide(Decimal(x.numerator), Decimal(x.denominator))
    if isinstance(x, (Decimal, float, str)):
        return ctx.plus(Decimal(x))
    raise TypeError(f"cannot convert {type(x).__name__} to BigReal")


# -- elementary functions -------------------------------------------------


def sqrt(x: BigReal) -> BigReal:
    if x.value < 0:
        raise DomainError(f"sqrt of negative number {x}")
    return BigReal(x.ctx.sqrt(x.value), x.precision)


def ln(x: BigReal) -> BigReal:
    if x.value <= 0:
        raise DomainError(f"ln of non-positive number {x}")
    return BigReal(x.ctx.ln(x.value), x.precision)


def arctan(x: BigReal) -> BigReal:
    """Principal arctangent, accurate to the stored guard digits."""
    digits = x.precision + GUARD_DIGITS
    return BigReal(_atan(x.value, digits), x.precision)


def arctan2(y: BigReal, x: BigReal) -> BigReal:
    """Angle of the point (x, y) in (-π, π]."""
    precision = min(y.precision, x.precision)
    digits = precision + GUARD_DIGITS
    if x.value == 0:
        if y.value == 0:
            raise DomainError("arctan2(0, 0) is undefined")
        half_pi = context(digits + 5).divide(_pi_decimal(digits + 5), 2)
        return BigReal(half_pi if y.value > 0 else context(digits + 5).minus(half_pi), precision)
    ctx = context(digits + 5)
    base = _atan(ctx.divide(y.value, x.value), digits + 3)
    if x.value < 0:
        pi = _pi_decimal(digits + 5)
        base = ctx.add(base, pi) if y.value >= 0 else ctx.subtract(base, pi)
    return BigReal(base, precision)


def _atan(x: Decimal, digits: int) -> Decimal:
    work = digits + 8
    ctx = context(work)
    if x == 0:
        return Decimal(0)
    negative = x < 0
    y = x.copy_abs()
    invert = y > 1
    if invert:
        y = ctx.divide(1, y)
    # halve the angle until the Taylor series converges quickly:
    # atan(y) = 2 atan(y / (1 + sqrt(1 + y^2)))
    halvings = 0
    limit = Decimal("0.01")
    while y > limit:
        y = ctx.divide(y, ctx.add(1, ctx.sqrt(ctx.add(1, ctx.multiply(y, y)))))
        halvings += 1
    y2 = ctx.multiply(y, y)
    total = power = y
    eps = ctx.multiply(y, Decimal(f"1e-{work + 1}"))
    k = 1
    while True:
        power = ctx.minus(ctx.multiply(power, y2))
        term = ctx.divide(power, 2 * k + 1)
        if term.copy_abs() < eps:
            break
        total = ctx.add(total, term)
        k += 1
    total = ctx.multiply(total, 2**halvings)
    if invert:
        total = ctx.subtract(ctx.divide(_pi_decimal(work), 2), total)
    return ctx.minus(total) if negative else total


# -- π reference ----------------------------------------------------------


def _arctan_inverse(k: int, unity: int) -> int:
    """arctan(1/k) scaled by ``unity``, summed in exact integer arithmetic."""
    power = unity // k
    total = power
    k2 = k * k
    n = 1
    while power:
        power //= k2
        term = power // (2 * n + 1)
        total += -term if n % 2 else term
        n += 1
    return total


@functools.lru_cache(maxsize=32)
def _machin_scaled(digits: int) -> tuple[int, int]:
    unity = 10 ** (digits + 10)
    machin = 4 * (4 * _arctan_inverse(5, unity) - _arctan_inverse(239, unity))
    euler = 4 * (_arctan_inverse(2, unity) + _arctan_inverse(3, unity))
    return machin // 10**10, euler // 10**10


@functools.lru_cache(maxsize=32)
def _pi_decimal(digits: int) -> Decimal:
    machin, euler = _machin_scaled(digits)
    if abs(machin - euler) > 10:
        raise IntegrityError("Machin decompositions of pi disagree")
    return Decimal(machin).scaleb(-digits, context(digits + 10))


def machin_variants(precision: int = DEFAULT_PRECISION) -> tuple[BigReal, BigReal]:
    """π from 4·arctan(1/5)−arctan(1/239) and from arctan(1/2)+arctan(1/3), scaled by 4."""
    if precision < MIN_PRECISION:
        raise DomainError(f"precision must be >= {MIN_PRECISION}")
    digits = precision + GUARD_DIGITS
    machin, euler = _machin_scaled(digits)
    return (
        BigReal(Decimal(machin).scaleb(-digits, context(digits + 10)), precision),
        BigReal(Decimal(euler).scaleb(-digits, context(digits + 10)), precision),
    )


def pi_reference(precision: int = DEFAULT_PRECISION) -> BigReal:
    """π at ``precision`` digits, cross-checked between two Machin-type formulas."""
    if not isinstance(precision, int) or precision < MIN_PRECISION:
        raise DomainError(f"precision must be an integer >= {MIN_PRECISION}, got {precision!r}")
    first, second = machin_variants(precision)
    gap = context(precision + GUARD_DIGITS).subtract(first.value, second.value).copy_abs()
    if gap >= Decimal(f"1e{-precision + 2}"):
        raise IntegrityError("Machin decompositions of pi disagree")
    return first


# -- digit counting -------------------------------------------------------


def _fixed(value: Decimal) -> tuple[str, str, str]:
    sign = "-" if value.is_signed() and value != 0 else ""
    integer, _, fraction = format(value.copy_abs(), "f").partition(".")
    return sign, integer, fraction


def count_correct_digits(estimate: BigReal | str, reference: BigReal) -> int:
    """Number of leading decimal places on which the truncated expansions agree.

    Only places inside both operands' precision are compared.  Differing
    signs or integer parts give 0.
    """
    if isinstance(estimate, str):
        estimate = BigReal.of(estimate, max(MIN_PRECISION, len(estimate.replace("-", "").replace(".", ""))))
    e_sign, e_int, e_frac = _fixed(estimate.value)
    r_sign, r_int, r_frac = _fixed(reference.value)
    if e_sign != r_sign or e_int != r_int:
        return 0
    leading = len(r_int.lstrip("0"))
    places = min(estimate.precision, reference.precision) - leading
    e_frac = e_frac[:places].ljust(places, "0")
    r_frac = r_frac[:places].ljust(places, "0")
    count = 0
    for a, b in zip(e_frac, r_frac):
        if a != b:
            break
        count += 1
    return count
