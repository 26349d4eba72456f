"""Independent reference implementations used only by the tests.

Everything here is built on mpmath or plain integer loops, never on the
package under test.
"""

from __future__ import annotations

import mpmath

ORACLE_DPS = 90


def naive_fibonacci(n: int) -> int:
    a, b = 0, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def naive_lucas(n: int) -> int:
    a, b = 2, 1
    for _ in range(n):
        a, b = b, a + b
    return a


def naive_six(n: int, u0: int, u1: int) -> int:
    if n == 0:
        return u0
    a, b = u0, u1
    for _ in range(n - 1):
        a, b = b, 6 * b - a
    return b


def mp(value) -> mpmath.mpf:
    """A BigReal (or anything str()-able) as an mpf."""
    return mpmath.mpf(str(value))


def bisect(f, lo, hi, dps: int = ORACLE_DPS, steps: int = 400) -> mpmath.mpf:
    """Root of f on [lo, hi] by plain bisection; f(lo) and f(hi) must differ in sign."""
    with mpmath.workdps(dps):
        lo, hi = mpmath.mpf(lo), mpmath.mpf(hi)
        flo = f(lo)
        assert flo * f(hi) < 0, "no sign change on the bracket"
        for _ in range(steps):
            mid = (lo + hi) / 2
            fm = f(mid)
            if fm == 0:
                return mid
            if (fm < 0) == (flo < 0):
                lo, flo = mid, fm
            else:
                hi = mid
        return (lo + hi) / 2


def real_roots(coefficients, lo, hi, samples: int = 4000, dps: int = ORACLE_DPS) -> list:
    """All simple real roots of a polynomial (leading coefficient first) inside [lo, hi].

    Scans a uniform grid for sign changes, then bisects each bracket.
    """
    with mpmath.workdps(dps):
        coeffs = [mpmath.mpf(c) if not isinstance(c, mpmath.mpf) else c for c in coefficients]

        def f(t):
            return mpmath.polyval(coeffs, t)

        lo, hi = mpmath.mpf(lo), mpmath.mpf(hi)
        step = (hi - lo) / samples
        roots = []
        previous_t, previous = lo, f(lo)
        for i in range(1, samples + 1):
            t = lo + i * step
            value = f(t)
            if previous * value < 0:
                roots.append(bisect(f, previous_t, t, dps))
            previous_t, previous = t, value
        return roots


def direct_series_sum(coefficient, exponent, sign, z, start: int, stop: int, dps: int = ORACLE_DPS):
    """Σ sign(n) c(n) / (e(n) z^e(n)) for n = start..stop, term by term in mpmath."""
    with mpmath.workdps(dps):
        z = mpmath.mpf(z)
        total = mpmath.mpf(0)
        for n in range(start, stop + 1):
            e = exponent(n)
            total += sign(n) * mpmath.mpf(coefficient(n)) / (e * z**e)
        return total
