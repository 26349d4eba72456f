import warnings
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from balancing_pi import (
    BigReal,
    DegenerateIndexWarning,
    DomainError,
    PolyArgument,
    balancing_number,
    coefficients,
    connection_even,
    connection_odd,
    eval_balancing,
    eval_binet,
    eval_chebyshev_route,
    eval_lucas_balancing,
    growth_pair,
    lucas_balancing_number,
    sqrt,
)
from balancing_pi.sequences import golden_ratio

from oracles import mp

P = 64


def test_exact_rational_evaluation():
    assert eval_balancing(3, 2) == 143
    assert eval_balancing(3, Fraction(1, 2)) == 8
    assert eval_lucas_balancing(0, Fraction(7, 3)) == 1
    assert eval_lucas_balancing(3, Fraction(1, 2)) == 9
    assert isinstance(eval_balancing(5, Fraction(2, 3)), Fraction)


def test_chebyshev_route_exact():
    assert eval_chebyshev_route(3, Fraction(1, 2), which="C") == 9
    assert eval_chebyshev_route(4, 1, which="B") == 204
    assert eval_chebyshev_route(0, 1, which="B") == 0


def test_binet_examples():
    assert abs(eval_binet(1, BigReal.of("0.9", P)) - 1) < BigReal("1e-60", P)
    assert abs(eval_binet(2, 1, P, "C") - 17) < BigReal("1e-60", P)
    gap = abs(eval_binet(5, BigReal.of("0.7", P)) - eval_balancing(5, BigReal.of("0.7", P), P))
    assert gap < BigReal(f"1e{-P + 6}", P)


@pytest.mark.parametrize("x", [Fraction(1, 3), Fraction(1, 4), BigReal.of("0.3333333333", P)])
def test_binet_domain(x):
    with pytest.raises(DomainError):
        eval_binet(4, x, P)


def test_binet_domain_margin():
    with pytest.raises(DomainError):
        eval_binet(4, Fraction(1, 3) + Fraction(1, 10**7), P)
    eval_binet(4, Fraction(1, 3) + Fraction(1, 10**5), P)


def test_coefficient_lists():
    assert coefficients(4, "B").coefficients == (0, -12, 0, 216)
    assert coefficients(0, "B").coefficients == ()
    assert coefficients(4, "C").coefficients == (1, 0, -72, 0, 648)
    with pytest.raises(DomainError):
        coefficients(65)


def test_coefficients_at_one_are_balancing_numbers():
    for n in range(65):
        assert coefficients(n, "B")(1) == balancing_number(n)
        assert coefficients(n, "C")(1) == lucas_balancing_number(n)


@settings(max_examples=80, deadline=None)
@given(st.integers(min_value=1, max_value=60),
       st.decimals(min_value="0.34", max_value=10, places=8, allow_nan=False, allow_infinity=False))
def test_three_routes_against_mpmath_chebyshev(n, x):
    with mpmath.workdps(100):
        y = 3 * mpmath.mpf(str(x))
        expected_b = mpmath.chebyu(n - 1, y)
        expected_c = mpmath.chebyt(n, y)
        for which, expected, recurrence in (("B", expected_b, eval_balancing),
                                            ("C", expected_c, eval_lucas_balancing)):
            scale = max(abs(expected), 1) * mpmath.mpf(10) ** (-P + 8)
            for route in (recurrence(n, BigReal.of(x, P), P),
                          eval_binet(n, BigReal.of(x, P), P, which),
                          eval_chebyshev_route(n, BigReal.of(x, P), P, which)):
                assert abs(mp(route) - expected) < scale


@pytest.mark.parametrize("m,n,b", [(1, 3, 8), (1, 1, 1), (2, 2, 7)])
def test_connection_even_examples(m, n, b):
    assert connection_even(m, n)[0] == b


def test_connection_even_degenerate_index_warns():
    with pytest.warns(DegenerateIndexWarning):
        _, c = connection_even(0, 4)
    assert c == 1  # C_n(1/3) = T_n(1) = 1


def test_connection_odd_examples():
    b, _ = connection_odd(0, 0)
    assert abs(b - 1) < BigReal("1e-60", P)
    _, c = connection_odd(0, 1)
    assert abs(c - sqrt(BigReal.of(5, P))) < BigReal("1e-60", P)
    b, _ = connection_odd(1, 1)
    assert abs(b - 19) < BigReal("1e-58", P)


def test_connection_odd_range():
    for m in range(0, 6):
        for n in range(0, 12):
            connection_odd(m, n)


def test_growth_pair_at_one():
    pair = growth_pair(1)
    with mpmath.workdps(80):
        assert abs(mp(pair.lambda1) - (3 + 2 * mpmath.sqrt(2))) < mpmath.mpf("1e-60")
        assert abs(mp(pair.lambda1) * mp(pair.lambda2) - 1) < mpmath.mpf("1e-60")


@pytest.mark.parametrize("m", range(1, 6))
def test_growth_pair_golden_powers(m):
    alpha = golden_ratio(P)
    even = growth_pair(PolyArgument.even_lucas(m), P).lambda1
    odd = growth_pair(PolyArgument.odd_fibonacci(m), P).lambda1
    tolerance = BigReal("1e-55", P)
    assert abs(even - alpha ** (2 * m)) < tolerance * alpha ** (2 * m)
    assert abs(odd - alpha ** (2 * m + 1)) < tolerance * alpha ** (2 * m + 1)


def test_growth_pair_odd_fibonacci_m0_is_alpha():
    alpha = golden_ratio(P)
    assert abs(growth_pair(PolyArgument.odd_fibonacci(0), P).lambda1 - alpha) < BigReal("1e-58", P)


def test_even_lucas_m0_sits_on_the_boundary():
    # L_0 / 6 = 1/3 exactly: the characteristic roots coincide
    with pytest.raises(DomainError):
        growth_pair(PolyArgument.even_lucas(0), P)


def test_growth_pair_domain():
    with pytest.raises(DomainError):
        growth_pair(Fraction(1, 3))
