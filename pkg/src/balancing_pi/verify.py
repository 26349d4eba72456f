"""Self-verification suites run by ``balancing-pi verify``."""

from __future__ import annotations

import random
import warnings
from dataclasses import dataclass
from typing import Callable, Iterator

from .bigreal import PRINTED_PI, BigReal, count_correct_digits, pi_reference
from .errors import DegenerateIndexWarning, DomainError
from .identities import check_exotic_representations, identity_residual, IDENTITIES
from .polynomials import (
    coefficients,
    connection_even,
    connection_odd,
    eval_balancing,
    eval_binet,
    eval_chebyshev_route,
    eval_lucas_balancing,
)
from .roots import (
    QuadraticKind,
    QuarticKind,
    Target,
    Verdict,
    residual,
    solve_squared_quartic,
    solve_unit_arctan_quadratic,
    theorem3_arguments,
)
from .sequences import (
    balancing_number,
    check_catalan_identities,
    check_lucas_square_identity,
    fibonacci,
    lucas,
    lucas_balancing_number,
)
from .series import (
    INDEXED_FAMILIES,
    POLYNOMIAL_FAMILIES,
    SeriesFamily,
    SeriesSpec,
    closed_form,
    fibonacci_subseries_m0,
    mezo_companion_sum,
    partial_sum,
    tail_bound,
    threshold,
    verify_arctan_addition,
)
from .tables import TABLE_COLUMNS, build_table, compare_with_published

SUITES = ("identities", "roots", "series", "tables")

PRINTED_COEFFICIENTS = {
    "B": [(), (1,), (0, 6), (-1, 0, 36), (0, -12, 0, 216), (1, 0, -108, 0, 1296)],
    "C": [(1,), (0, 3), (-1, 0, 18), (0, -9, 0, 108), (1, 0, -72, 0, 648), (0, 15, 0, -540, 0, 3888)],
}


@dataclass(frozen=True)
class Check:
    suite: str
    name: str
    passed: bool
    worst: str = ""
    detail: str = ""


def _check(suite: str, name: str, body: Callable[[], tuple[bool, str, str] | bool]) -> Check:
    try:
        outcome = body()
    except Exception as exc:  # a crash is a failed check, reported rather than raised
        return Check(suite, name, False, detail=f"{type(exc).__name__}: {exc}")
    if isinstance(outcome, bool):
        return Check(suite, name, outcome)
    passed, worst, detail = outcome
    return Check(suite, name, passed, worst, detail)


def _sci(value: BigReal) -> str:
    return f"{float(value):.2e}"


# -- identities ----------------------------------------------------------


def _connection_even_suite() -> bool:
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", DegenerateIndexWarning)
        for m in range(1, 9):
            for n in range(31):
                connection_even(m, n)
    return True


def _three_routes(precision: int, draws: int = 40, seed: int = 7) -> tuple[bool, str, str]:
    rng = random.Random(seed)
    worst = BigReal.of(0, precision)
    for _ in range(draws):
        n = rng.randint(1, 60)
        x = BigReal.of(f"{rng.uniform(0.34, 10):.12f}", precision)
        for which, route in (("B", eval_balancing), ("C", eval_lucas_balancing)):
            reference = route(n, x, precision)
            scale = max(abs(reference), BigReal.of(1, precision))
            for other in (eval_binet(n, x, precision, which), eval_chebyshev_route(n, x, precision, which)):
                worst = max(worst, abs(other - reference) / scale)
    return worst < BigReal(f"1e{-precision + 8}", precision), _sci(worst), "relative"


def identity_checks(precision: int) -> Iterator[Check]:
    s = "identities"
    yield _check(s, "pi reference matches every printed digit",
                 lambda: count_correct_digits(PRINTED_PI, pi_reference(80)) == len(PRINTED_PI) - 2)
    yield _check(s, "fast doubling equals the naive recurrence (n <= 2000)", _naive_fibonacci_agrees)
    yield _check(s, "Lucas square identity (n <= 500)",
                 lambda: all(check_lucas_square_identity(n) for n in range(501)))
    yield _check(s, "Catalan identities (m <= 200)", lambda: all(check_catalan_identities(m) for m in range(201)))
    yield _check(s, "even Lucas connection exact (1 <= m <= 8, n <= 30)", _connection_even_suite)
    yield _check(s, "odd Fibonacci connection (m <= 3, n <= 10)",
                 lambda: all(connection_odd(m, n, precision) for m in range(4) for n in range(11)))
    yield _check(s, "printed coefficient lists B_0..B_5, C_0..C_5",
                 lambda: all(coefficients(n, w).coefficients == PRINTED_COEFFICIENTS[w][n]
                             for w in "BC" for n in range(6)))
    yield _check(s, "coefficients at x = 1 give balancing numbers (n <= 64)",
                 lambda: all(coefficients(n, "B")(1) == balancing_number(n)
                             and coefficients(n, "C")(1) == lucas_balancing_number(n) for n in range(65)))
    yield _check(s, "recurrence, Binet and Chebyshev routes agree", lambda: _three_routes(precision))


def _naive_fibonacci_agrees() -> bool:
    f0, f1, l0, l1 = 0, 1, 2, 1
    for n in range(2001):
        if fibonacci(n) != f0 or lucas(n) != l0:
            return False
        f0, f1, l0, l1 = f1, f0 + f1, l1, l0 + l1
    return True


# -- roots ---------------------------------------------------------------


EXPECTED_QUADRATIC = {
    QuadraticKind.FIB_EVEN: Verdict.NO_SERIES,
    QuadraticKind.LUC_EVEN: Verdict.EXISTS,
    QuadraticKind.FIB_ODD: Verdict.EXISTS,
    QuadraticKind.LUC_ODD: Verdict.NO_SERIES,
}
EXPECTED_QUARTIC = {
    QuarticKind.LUCBAL_SQ_X1: Verdict.EXISTS,
    QuarticKind.BAL_SQ_X1: Verdict.NO_SERIES,
    QuarticKind.LUC_EVEN_SQ: Verdict.EXISTS,
    QuarticKind.FIB_EVEN_SQ: Verdict.NO_SERIES,
}


def _verdict_suite(solutions, expected) -> tuple[bool, str, str]:
    worst = None
    ok = True
    for solution, verdict in zip(solutions, expected):
        ok &= solution.verdict is verdict
        for root in solution.roots:
            r = residual(solution.equation, root)
            worst = r if worst is None or r > worst else worst
    return ok, _sci(worst), "scaled residual"


def root_checks(precision: int) -> Iterator[Check]:
    s = "roots"
    for kind, verdict in EXPECTED_QUADRATIC.items():
        ms = range(1 if kind is QuadraticKind.FIB_EVEN else 0, 7)
        yield _check(s, f"quadratic {kind.value} is {verdict.value} (m <= 6)", lambda kind=kind, ms=ms, v=verdict:
                     _verdict_suite([solve_unit_arctan_quadratic(kind, m, precision) for m in ms], [v] * len(ms)))
    for kind, verdict in EXPECTED_QUARTIC.items():
        ms = range(11) if kind in (QuarticKind.LUC_EVEN_SQ, QuarticKind.FIB_EVEN_SQ) else range(1)
        yield _check(s, f"quartic {kind.value} is {verdict.value}", lambda kind=kind, ms=ms, v=verdict:
                     _verdict_suite([solve_squared_quartic(kind, m, precision) for m in ms], [v] * len(ms)))

    def selected_z():
        z = solve_squared_quartic(QuarticKind.LUCBAL_SQ_X1, precision=precision).selected
        return z.to_string(6) == "37.8254", z.to_string(20), ""
    yield _check(s, "selected root of the x = 1 Lucas-balancing quartic", selected_z)
    yield _check(s, "explicit radicals hit tan(π/6), tan(π/12), tan(π/5) (m <= 6)",
                 lambda: all(theorem3_arguments(t, k, m, precision).verdict is Verdict.EXISTS
                             for t in Target for k in (QuadraticKind.LUC_EVEN, QuadraticKind.FIB_ODD)
                             for m in range(7)))


# -- series --------------------------------------------------------------


def random_spec(family: SeriesFamily, rng: random.Random, precision: int) -> SeriesSpec:
    """An admissible spec with z drawn from [1.05, 3] times the threshold."""
    x = m = None
    if family in POLYNOMIAL_FAMILIES:
        x = BigReal.of(f"{rng.uniform(0.34, 3):.10f}", precision)
    elif family in INDEXED_FAMILIES:
        m = rng.randint(0, 4)
    probe = SeriesSpec(family, BigReal.of(10**40, precision), m=m, x=x)
    z = threshold(probe, precision) * BigReal.of(f"{rng.uniform(1.05, 3):.8f}", precision)
    return SeriesSpec(family, z, m=m, x=x)


def family_bound_suite(family: SeriesFamily, precision: int, draws: int, seed: int = 2024,
                       n_values=(5, 10, 25, 50)) -> tuple[bool, str, str]:
    rng = random.Random(f"{family.value}-{seed}")
    ok, worst = True, 0.0
    for _ in range(draws):
        spec = random_spec(family, rng, precision)
        exact = closed_form(spec, precision)
        for n in n_values:
            gap = abs(partial_sum(spec, n, precision) - exact)
            bound = tail_bound(spec, n, precision)
            ok &= gap <= bound
            if bound:
                worst = max(worst, float(gap / bound))
    return ok, f"{worst:.3f}", "max |partial - closed| / tail bound"


def series_checks(precision: int, draws: int = 5) -> Iterator[Check]:
    s = "series"
    for family in SeriesFamily:
        yield _check(s, f"{family.value}: partial sums within tail bound",
                     lambda family=family: family_bound_suite(family, precision, draws))
    yield _check(s, "arctan addition: 1/2 + 1/3", lambda: verify_arctan_addition(0.5, BigReal.of(1, precision) / 3,
                                                                                precision))

    def mezo():
        target = closed_form(SeriesSpec(SeriesFamily.MEZO_LN2, BigReal.of(2, precision)), precision)
        gap = abs(mezo_companion_sum(400, precision) - target)
        return gap < BigReal("1e-40", precision), _sci(gap), "companion sum vs 2 ln 2"
    yield _check(s, "Lucas logarithmic series and its companion share 2 ln 2", mezo)

    def m0():
        gap = abs(8 * fibonacci_subseries_m0(60, precision) - pi_reference(precision))
        return gap < BigReal("1e-40", precision), _sci(gap), "N = 60"
    yield _check(s, "m = 0 Fibonacci subseries gives π/8", m0)

    def exotic():
        checks = check_exotic_representations(precision)
        worst = max(c.residual for c in checks)
        flagged = [c.identity for c in checks if c.flagged]
        return not flagged, _sci(worst), "flagged: " + ", ".join(flagged) if flagged else ""
    yield _check(s, "four x = 1 subseries representations", exotic)

    def all_identities():
        worst = max(identity_residual(i, m, precision) for i, entry in IDENTITIES.items()
                    for m in ((0,) if entry.only_m0 else (0, 1, 2)))
        return worst < BigReal(f"1e{-precision + 8}", precision), _sci(worst), "closed form vs π"
    yield _check(s, "every catalogued identity sums to π", all_identities)


# -- tables --------------------------------------------------------------


def table_checks(precision: int) -> Iterator[Check]:
    for table_id in TABLE_COLUMNS:
        def body(table_id=table_id):
            comparisons = compare_with_published(build_table(table_id, precision=max(precision, 32)))
            bad = [c for c in comparisons if not c.ok]
            detail = "; ".join(f"{c.row.series_label} m={c.row.m} n={c.row.n}: {c.row.digits} vs "
                               f"{c.published_digits}" for c in bad)
            return not bad, f"{len(comparisons) - len(bad)}/{len(comparisons)}", detail
        yield _check("tables", f"table {table_id} digit counts and prefixes", body)


def run_suite(suite: str, precision: int = 64) -> list[Check]:
    if suite == "all":
        return [check for name in SUITES for check in run_suite(name, precision)]
    runners = {"identities": identity_checks, "roots": root_checks, "series": series_checks,
               "tables": table_checks}
    if suite not in runners:
        raise DomainError(f"suite must be one of {SUITES + ('all',)}")
    return list(runners[suite](precision))


def format_report(checks: list[Check]) -> str:
    lines = []
    for check in checks:
        status = "PASS" if check.passed else "FAIL"
        extra = f" [{check.worst}]" if check.worst else ""
        detail = f" {check.detail}" if check.detail else ""
        lines.append(f"{status} {check.suite}: {check.name}{extra}{detail}")
    failed = sum(not c.passed for c in checks)
    lines.append(f"{len(checks) - failed} passed, {failed} failed")
    return "\n".join(lines) + "\n"
