import mpmath
import pytest

from balancing_pi import (
    BigReal,
    DomainError,
    Verdict,
    fibonacci,
    lucas,
    solve_squared_quartic,
    solve_unit_arctan_quadratic,
    theorem3_arguments,
)
from balancing_pi.roots import QuarticKind, Target, quartic_equation, residual

from oracles import mp, real_roots

P = 64
DPS = 90


def _quadratic(kind, m):
    with mpmath.workdps(DPS):
        r5 = mpmath.sqrt(5)
        return {
            "fib-even": [1, -r5 * fibonacci(2 * m), 1],
            "luc-even": [1, -lucas(2 * m), -1],
            "fib-odd": [1, -r5 * fibonacci(2 * m + 1), -1],
            "luc-odd": [1, -lucas(2 * m + 1), 1],
        }[kind]


def _scan(coefficients, bound, samples=600):
    # the two roots multiply to +-1, so one lies in [-1, 1] and the other outside
    found = []
    for lo, hi in ((-bound, -1), (-1, 1), (1, bound)):
        found += real_roots(coefficients, lo, hi, samples=samples)
    return sorted(found)


def _agree(got, expected, digits):
    with mpmath.workdps(DPS):
        return abs(mp(got) - expected) <= max(abs(expected), 1) * mpmath.mpf(10) ** (-digits)


@pytest.mark.parametrize("kind", ["fib-even", "luc-even", "fib-odd", "luc-odd"])
@pytest.mark.parametrize("m", range(0, 7))
def test_quadratic_roots_against_bisection(kind, m):
    if kind == "fib-even" and m == 0:
        with pytest.raises(DomainError):
            solve_unit_arctan_quadratic(kind, m, P)
        return
    solution = solve_unit_arctan_quadratic(kind, m, P)
    if kind == "luc-odd" and m == 0:
        # z^2 - z + 1 has the complex roots exp(±iπ/3)
        assert not solution.real_roots
        with mpmath.workdps(DPS):
            assert all(abs(mp(r.re) - mpmath.mpf(1) / 2) < mpmath.mpf("1e-60") for r in solution.roots)
            assert all(abs(abs(mp(r.im)) - mpmath.sqrt(3) / 2) < mpmath.mpf("1e-60") for r in solution.roots)
        return
    with mpmath.workdps(DPS):
        oracle = _scan(_quadratic(kind, m), 2 * lucas(2 * m + 2) + 2)
    got = sorted(solution.real_roots, key=mp)
    assert len(got) == len(oracle) == 2
    for g, o in zip(got, oracle):
        assert _agree(g, o, P - 10)


@pytest.mark.parametrize("m", range(0, 8))
def test_quadratic_verdicts(m):
    assert solve_unit_arctan_quadratic("luc-even", m, P).verdict is Verdict.EXISTS
    assert solve_unit_arctan_quadratic("fib-odd", m, P).verdict is Verdict.EXISTS
    assert solve_unit_arctan_quadratic("luc-odd", m, P).verdict is Verdict.NO_SERIES
    if m:
        assert solve_unit_arctan_quadratic("fib-even", m, P).verdict is Verdict.NO_SERIES


def test_luc_even_selected_root_formula():
    for m in range(0, 6):
        c = lucas(2 * m)
        with mpmath.workdps(DPS):
            expected = (c + mpmath.sqrt(c * c + 4)) / 2
        assert _agree(solve_unit_arctan_quadratic("luc-even", m, P).selected, expected, P - 4)


def test_luc_even_m0_is_one_plus_root_two():
    with mpmath.workdps(DPS):
        assert _agree(solve_unit_arctan_quadratic("luc-even", 0, P).selected, 1 + mpmath.sqrt(2), P - 4)


def test_fib_even_m1_roots_are_golden():
    roots = sorted(solve_unit_arctan_quadratic("fib-even", 1, P).real_roots, key=mp)
    with mpmath.workdps(DPS):
        phi = (1 + mpmath.sqrt(5)) / 2
        assert _agree(roots[0], phi - 1, P - 4) and _agree(roots[1], phi, P - 4)


def test_fib_even_largest_root_approaches_threshold():
    ratios = []
    for m in range(1, 21):
        solution = solve_unit_arctan_quadratic("fib-even", m, P)
        z1 = max(solution.real_roots)
        assert z1 < solution.threshold
        ratios.append(mp(z1 / solution.threshold))
    assert all(a < b for a, b in zip(ratios, ratios[1:]))
    assert 1 - ratios[-1] < mpmath.mpf("1e-15")


def test_lucbal_quartic_root():
    solution = solve_squared_quartic("lucbal-squared-x1", precision=P)
    assert solution.verdict is Verdict.EXISTS
    with mpmath.workdps(DPS):
        r2 = mpmath.sqrt(2)
        radical = 9 + 7 * r2 + 3 * mpmath.sqrt(20 + 14 * r2)
        oracle = max(real_roots([1, -36, -70, 36, 1], 1, 50, samples=500))
    assert _agree(solution.selected, radical, P - 4)
    assert _agree(solution.selected, oracle, P - 10)
    assert str(solution.selected).startswith("37.8254")


def test_balancing_quartic_has_no_series():
    solution = solve_squared_quartic("balancing-squared-x1", precision=P)
    assert solution.verdict is Verdict.NO_SERIES and solution.selected is None
    real = sorted(solution.real_roots, key=mp)
    with mpmath.workdps(DPS):
        r47 = mpmath.sqrt(47)
        expected = sorted(8 + a * r47 + b * 4 * mpmath.sqrt(7 + a * r47) for a in (1, -1) for b in (1, -1))
        oracle = real_roots([1, -32, 66, 32, 1], -1, 1, samples=400) + real_roots([1, -32, 66, 32, 1], 1, 50)
    assert len(real) == 4
    for got, radical, bisected in zip(real, expected, oracle):
        assert _agree(got, radical, P - 4) and _agree(got, bisected, P - 10)
    assert max(real) < solution.threshold


def test_lucas_squared_m0_root():
    solution = solve_squared_quartic("luc-even-squared", 0, P)
    with mpmath.workdps(DPS):
        expected = 1 + mpmath.sqrt(2) + mpmath.sqrt(4 + 2 * mpmath.sqrt(2))
    assert solution.verdict is Verdict.EXISTS
    assert _agree(solution.selected, expected, P - 4)
    assert str(solution.selected).startswith("5.027339")


@pytest.mark.parametrize("m", range(0, 7))
def test_lucas_squared_quartic_against_polyroots(m):
    solution = solve_squared_quartic("luc-even-squared", m, P)
    with mpmath.workdps(DPS):
        expected = sorted(mpmath.polyroots(quartic_equation("luc-even-squared", m), maxsteps=200, extraprec=200),
                          key=lambda r: (mpmath.re(r), mpmath.im(r)))
        got = sorted((mpmath.mpc(mp(r.re), mp(r.im)) for r in solution.roots),
                     key=lambda r: (mpmath.re(r), mpmath.im(r)))
        for g, e in zip(got, expected):
            assert abs(g - e) <= max(abs(e), 1) * mpmath.mpf(10) ** (-P + 10)
    assert solution.verdict is Verdict.EXISTS


def test_fib_even_squared_complex_roots_at_m1():
    solution = solve_squared_quartic("fib-even-squared", 1, P)
    assert solution.verdict is Verdict.NO_SERIES
    assert not solution.real_roots
    # z = t ± sqrt(t^2 + 1) with t = (5 ± i sqrt(31)) / 4
    with mpmath.workdps(DPS):
        t = mpmath.mpc(5, mpmath.sqrt(31)) / 4
        z = t + mpmath.sqrt(t * t + 1)
        got = [mpmath.mpc(mp(r.re), mp(r.im)) for r in solution.roots]
        assert min(abs(g - z) for g in got) < mpmath.mpf("1e-55")


@pytest.mark.parametrize("m", range(0, 11))
def test_fib_even_squared_never_admits_a_series(m):
    assert solve_squared_quartic("fib-even-squared", m, P).verdict is Verdict.NO_SERIES


@pytest.mark.parametrize("kind", list(QuarticKind))
def test_quartic_residuals(kind):
    solution = solve_squared_quartic(kind, 2, P)
    for root in solution.roots:
        assert residual(solution.equation, root) < BigReal("1e-56", P)


@pytest.mark.parametrize("target", list(Target))
@pytest.mark.parametrize("kind", ["luc-even", "fib-odd"])
@pytest.mark.parametrize("m", range(0, 7))
def test_target_angle_arguments_against_bisection(target, kind, m):
    solution = theorem3_arguments(target, kind, m, P)
    assert solution.verdict is Verdict.EXISTS
    assert solution.selected > solution.threshold
    with mpmath.workdps(DPS):
        tan = {Target.PI_6: 1 / mpmath.sqrt(3), Target.PI_12: 2 - mpmath.sqrt(3),
               Target.PI_5: mpmath.sqrt(5 - 2 * mpmath.sqrt(5))}[target]
        c = lucas(2 * m) if kind == "luc-even" else mpmath.sqrt(5) * fibonacci(2 * m + 1)
        oracle = max(real_roots([tan, -c, -tan], 1, 3 * c / tan + 3, samples=600))
        assert _agree(solution.selected, oracle, P - 10)


def test_target_tangent_values():
    with mpmath.workdps(DPS):
        z = mp(theorem3_arguments("pi12", "luc-even", 0, P).selected)
        assert abs(2 * z / (z * z - 1) - (2 - mpmath.sqrt(3))) < mpmath.mpf("1e-58")
        z = mp(theorem3_arguments("pi5", "fib-odd", 0, P).selected)
        assert abs(mpmath.sqrt(5) * z / (z * z - 1) - mpmath.sqrt(5 - 2 * mpmath.sqrt(5))) < mpmath.mpf("1e-58")


def test_pi6_luc_even_m1_exceeds_threshold():
    solution = theorem3_arguments("pi6", "luc-even", 1, P)
    assert solution.selected > solution.threshold


def test_target_rejects_other_kinds():
    with pytest.raises(DomainError):
        theorem3_arguments("pi6", "luc-odd", 0, P)
