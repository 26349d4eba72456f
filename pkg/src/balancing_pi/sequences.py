"""Exact Fibonacci, Lucas, balancing and Lucas-balancing numbers."""

from __future__ import annotations

from .bigreal import DEFAULT_PRECISION, BigReal, sqrt
from .errors import DomainError

MAX_INDEX = 10**6


def _check_index(n: int, limit: int) -> None:
    if not isinstance(n, int) or isinstance(n, bool):
        raise TypeError(f"index must be an int, got {type(n).__name__}")
    if n < 0:
        raise DomainError(f"negative index {n}")
    if n > limit:
        raise DomainError(f"index {n} exceeds the configured cap {limit}")


def _fib_pair(n: int) -> tuple[int, int]:
    """(F_n, F_{n+1}) by fast doubling."""
    a, b = 0, 1
    for bit in bin(n)[2:]:
        # F_2k = F_k (2 F_{k+1} - F_k), F_2k+1 = F_k^2 + F_{k+1}^2
        c = a * (2 * b - a)
        d = a * a + b * b
        if bit == "1":
            a, b = d, c + d
        else:
            a, b = c, d
    return a, b


def fibonacci(n: int, limit: int = MAX_INDEX) -> int:
    _check_index(n, limit)
    return _fib_pair(n)[0]


def lucas(n: int, limit: int = MAX_INDEX) -> int:
    _check_index(n, limit)
    f, g = _fib_pair(n)
    # L_n = 2 F_{n+1} - F_n
    return 2 * g - f


def _six_recurrence(n: int, u0: int, u1: int) -> int:
    if n == 0:
        return u0
    prev, cur = u0, u1
    for _ in range(n - 1):
        prev, cur = cur, 6 * cur - prev
    return cur


def balancing_number(n: int, limit: int = MAX_INDEX) -> int:
    """B_n = B_n(1): 0, 1, 6, 35, 204, ..."""
    _check_index(n, limit)
    return _six_recurrence(n, 0, 1)


def lucas_balancing_number(n: int, limit: int = MAX_INDEX) -> int:
    """C_n = C_n(1): 1, 3, 17, 99, 577, ..."""
    _check_index(n, limit)
    return _six_recurrence(n, 1, 3)


def check_lucas_square_identity(n: int) -> bool:
    """L_n^2 - 5 F_n^2 == 4 (-1)^n."""
    return lucas(n) ** 2 - 5 * fibonacci(n) ** 2 == 4 * (-1) ** n


def check_catalan_identities(m: int) -> bool:
    """F_{2m+2}^2 + 1 = F_{2m+3} F_{2m+1} and F_{2m+2}^2 - 1 = F_{2m+4} F_{2m}."""
    _check_index(m, MAX_INDEX)
    f = fibonacci
    square = f(2 * m + 2) ** 2
    return square + 1 == f(2 * m + 3) * f(2 * m + 1) and square - 1 == f(2 * m + 4) * f(2 * m)


def golden_ratio(precision: int = DEFAULT_PRECISION) -> BigReal:
    return (1 + sqrt(BigReal.of(5, precision))) / 2


def golden_power_identity(n: int, precision: int = DEFAULT_PRECISION) -> bool:
    """Check α^n = α F_n + F_{n-1} numerically, and α^{2m} < F_{2m+2} when n = 2m is even.

    The second check is the bound that makes z = F_{2m+2} an admissible
    summation argument for the even-index series.
    """
    if n < 1:
        raise DomainError("golden_power_identity needs n >= 1")
    alpha = golden_ratio(precision)
    power = alpha**n
    tolerance = BigReal(f"1e{-precision + 4}", precision)
    holds = abs(power - (alpha * fibonacci(n) + fibonacci(n - 1))) < tolerance * max(1, abs(power))
    if n % 2 == 0:
        holds = holds and power < fibonacci(n + 2)
    return holds
