import mpmath
import pytest
from hypothesis import HealthCheck, given, settings
from hypothesis import strategies as st

from balancing_pi import (
    BigReal,
    ConvergenceViolation,
    DomainError,
    SeriesFamily,
    SeriesSpec,
    closed_form,
    partial_sum,
    pi_reference,
    sqrt,
    tail_bound,
    verify_arctan_addition,
)
from balancing_pi.sequences import golden_ratio
from balancing_pi.series import (
    ALTERNATING_FAMILIES,
    INDEXED_FAMILIES,
    POLYNOMIAL_FAMILIES,
    double_partial_sum,
    exponent,
    first_index,
    fibonacci_subseries_m0,
    mezo_companion_sum,
    threshold,
)

from oracles import direct_series_sum, mp, naive_fibonacci, naive_lucas

P = 64
F = SeriesFamily


def oracle_coefficient(family, m, x):
    """c_n built from naive integer loops or mpmath Chebyshev polynomials."""
    def coefficient(n):
        e = exponent(family, n)
        if family is F.TAYLOR_ARCTAN:
            return 1
        if family is F.MEZO_LN2:
            return naive_lucas(n)
        if family in POLYNOMIAL_FAMILIES:
            y = 3 * x
            if family in (F.BAL_ODD, F.BAL_SQ, F.SUB_BAL):
                value = mpmath.chebyu(e - 1, y)
            else:
                value = mpmath.chebyt(e, y)
        else:
            base = {F.FIB_EVEN: 2 * m, F.FIB_EVEN_SQ: 2 * m, F.LUC_EVEN: 2 * m, F.LUC_EVEN_SQ: 2 * m,
                    F.SUB_LUC_EVEN: 2 * m}.get(family, 2 * m + 1)
            fib = family in (F.FIB_EVEN, F.FIB_EVEN_SQ, F.FIB_ODD, F.FIB_ODD_SQ, F.SUB_FIB_ODD)
            value = (naive_fibonacci if fib else naive_lucas)(base * e)
        squared = family in (F.BAL_SQ, F.LUCBAL_SQ, F.FIB_EVEN_SQ, F.LUC_EVEN_SQ, F.FIB_ODD_SQ)
        return value * value if squared else value
    return coefficient


def oracle_partial_sum(spec, N):
    with mpmath.workdps(100):
        x = mp(spec.x.real_value(P + 20)) if spec.x is not None else None
        family = spec.family
        return direct_series_sum(
            oracle_coefficient(family, spec.m, x),
            lambda n: exponent(family, n),
            lambda n: -1 if family in ALTERNATING_FAMILIES and n % 2 else 1,
            mp(spec.z), first_index(family), N, dps=100,
        )


def spec_for(family, scale, m=1, x="1"):
    kwargs = {}
    if family in POLYNOMIAL_FAMILIES:
        kwargs["x"] = BigReal.of(x, P)
    elif family in INDEXED_FAMILIES:
        kwargs["m"] = m
    probe = SeriesSpec(family, BigReal.of(10**30, P), **kwargs)
    return SeriesSpec(family, threshold(probe, P) * BigReal.of(scale, P), **kwargs)


def test_lucbal_closed_form_is_eighth_pi():
    z = 3 + sqrt(BigReal.of(10, P))
    spec = SeriesSpec(F.LUCBAL_ODD, z, x=1)
    assert abs(closed_form(spec, P) * 8 - pi_reference(P)) < BigReal("1e-60", P)


def test_lucbal_partial_sum_table_value():
    spec = SeriesSpec(F.LUCBAL_ODD, 3 + sqrt(BigReal.of(10, P)), x=1)
    estimate = partial_sum(spec, 10, P) * 8
    # exact summation agrees with the published 3.16812536586831343388... on 15 places
    assert estimate.to_string(17) == "3.1681253658683133"
    import math
    w = 1 / (3 + math.sqrt(10))
    emulated = double_partial_sum(spec, w, 10, P) * 8
    assert emulated.to_string(32) == "3.1681253658683134338813758290598"


def test_luc_even_m0_closed_form_is_quarter_pi():
    spec = SeriesSpec(F.LUC_EVEN, 1 + sqrt(BigReal.of(2, P)), m=0)
    assert abs(closed_form(spec, P) * 4 - pi_reference(P)) < BigReal("1e-60", P)


def test_single_term_sum():
    alpha = golden_ratio(P)
    spec = SeriesSpec(F.FIB_ODD, alpha * alpha, m=0)
    assert abs(partial_sum(spec, 0, P) - 1 / (alpha * alpha)) < BigReal("1e-62", P)


def test_sub_lucbal_vanishes_for_large_z():
    values = [abs(closed_form(SeriesSpec(F.SUB_LUCBAL, BigReal.of(10**k, P), x=1), P)) for k in (3, 6, 9)]
    assert values[0] > values[1] > values[2]
    # leading term C_3(1) / (3 z^3) = 33 / z^3
    assert abs(values[2] * BigReal.of(10**27, P) - 33) < BigReal("1e-10", P)


def test_fib_even_squared_against_direct_oracle():
    spec = SeriesSpec(F.FIB_EVEN_SQ, BigReal.of(10, 80), m=1)
    with mpmath.workdps(100):
        expected = direct_series_sum(lambda n: naive_fibonacci(2 * (2 * n + 1)) ** 2, lambda n: 2 * n + 1,
                                     lambda n: (-1) ** n, 10, 0, 20, dps=100)
        assert abs(mp(partial_sum(spec, 20, 80)) - expected) < mpmath.mpf("1e-78")


@pytest.mark.parametrize("family", list(SeriesFamily))
def test_partial_sums_against_independent_oracle(family):
    spec = spec_for(family, "1.7", m=2, x="0.8")
    with mpmath.workdps(100):
        expected = oracle_partial_sum(spec, 30)
        got = mp(partial_sum(spec, 30, P))
        assert abs(got - expected) <= max(abs(expected), 1) * mpmath.mpf(10) ** (-P + 4)


@pytest.mark.parametrize("family", list(SeriesFamily))
def test_high_n_sum_approaches_closed_form(family):
    spec = spec_for(family, "2.5", m=1, x="1.3")
    gap = abs(partial_sum(spec, 200, P) - closed_form(spec, P))
    assert gap <= tail_bound(spec, 200, P)
    assert gap < BigReal("1e-55", P) * max(abs(closed_form(spec, P)), BigReal.of(1, P))


@settings(max_examples=40, deadline=None, suppress_health_check=[HealthCheck.too_slow])
@given(st.sampled_from(list(SeriesFamily)), st.integers(min_value=0, max_value=4),
       st.decimals(min_value="0.34", max_value=4, places=6), st.decimals(min_value="1.02", max_value=5, places=4),
       st.integers(min_value=0, max_value=40))
def test_partial_sum_within_tail_bound(family, m, x, scale, n):
    spec = spec_for(family, scale, m=m, x=x)
    assert abs(partial_sum(spec, n, P) - closed_form(spec, P)) <= tail_bound(spec, n, P)


@pytest.mark.parametrize("family", list(SeriesFamily))
def test_tail_bound_decreases(family):
    spec = spec_for(family, "1.5")
    bounds = [tail_bound(spec, n, P) for n in (0, 5, 10, 25, 50)]
    assert all(a > b for a, b in zip(bounds, bounds[1:]))


@pytest.mark.parametrize("family", list(SeriesFamily))
def test_convergence_violation(family):
    with pytest.raises(ConvergenceViolation):
        spec_for(family, "1")


def test_parameter_mismatch():
    with pytest.raises(DomainError):
        SeriesSpec(F.BAL_ODD, BigReal.of(50, P))
    with pytest.raises(DomainError):
        SeriesSpec(F.FIB_ODD, BigReal.of(50, P))
    with pytest.raises(DomainError):
        SeriesSpec(F.BAL_ODD, BigReal.of(50, P), x="0.3")


@pytest.mark.parametrize("m", range(0, 5))
def test_special_arguments_reduce_to_linear_series(m):
    # at z = L_{2m}, F_{2m+2} and L_{2m+1} the closed forms agree with mpmath's arctangent
    with mpmath.workdps(90):
        alpha = (1 + mpmath.sqrt(5)) / 2
        cases = [
            (F.LUC_EVEN, naive_lucas(2 * m) + 1, lambda z: mpmath.atan(naive_lucas(2 * m) * z / (z * z - 1))),
            (F.FIB_ODD, naive_fibonacci(2 * m + 3),
             lambda z: mpmath.atan(mpmath.sqrt(5) * naive_fibonacci(2 * m + 1) * z / (z * z - 1)) / mpmath.sqrt(5)),
            (F.LUC_ODD, naive_lucas(2 * m + 1) + 1,
             lambda z: mpmath.atan(naive_lucas(2 * m + 1) * z / (z * z + 1))),
        ]
        for family, z, expected in cases:
            if z <= alpha ** (2 * m + (family is not F.LUC_EVEN)):
                continue
            spec = SeriesSpec(family, BigReal.of(z, P), m=m)
            assert abs(mp(closed_form(spec, P)) - expected(mpmath.mpf(z))) < mpmath.mpf("1e-60")


def test_arctan_addition():
    assert verify_arctan_addition(0, 0)
    assert verify_arctan_addition(0.5, BigReal.of(1, P) / 3)
    assert verify_arctan_addition("0.7", "0.2", sign=-1)
    with pytest.raises(DomainError):
        verify_arctan_addition(1, 1)
    with pytest.raises(DomainError):
        verify_arctan_addition(2, 3)


def test_arctan_addition_at_balancing_roots():
    lam1 = 3 + 2 * sqrt(BigReal.of(2, P))
    lam2 = 3 - 2 * sqrt(BigReal.of(2, P))
    z = BigReal.of(7, P)
    assert verify_arctan_addition(lam1 / z, lam2 / z, P, sign=-1)


def test_mezo_series_and_companion():
    spec = SeriesSpec(F.MEZO_LN2, BigReal.of(2, P))
    with mpmath.workdps(90):
        two_ln2 = 2 * mpmath.log(2)
        assert abs(mp(closed_form(spec, P)) - two_ln2) < mpmath.mpf("1e-60")
        assert abs(mp(mezo_companion_sum(250, P)) - two_ln2) < mpmath.mpf("1e-60")
        assert abs(mp(partial_sum(spec, 800, P)) - two_ln2) < mpmath.mpf("1e-60")


def test_fibonacci_subseries_gives_eighth_pi():
    with mpmath.workdps(90):
        assert abs(8 * mp(fibonacci_subseries_m0(60, P)) - mpmath.pi) < mpmath.mpf("1e-45")


def test_negative_term_count():
    spec = spec_for(F.TAYLOR_ARCTAN, "2")
    with pytest.raises(DomainError):
        partial_sum(spec, -1, P)
