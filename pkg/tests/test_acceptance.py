"""Acceptance criteria 1-10, each at its stated tolerance and time limit.

Run under pytest (a PASS/FAIL line per criterion is printed in the
terminal summary) or directly with ``python tests/test_acceptance.py``.
"""

from __future__ import annotations

import json
import time
from fractions import Fraction

import mpmath
import pytest

from levicivita.algebra import GaussianRational, QuadElem
from levicivita.constructions import (
    analytic_pair,
    classify_additive,
    counterexample_functions,
    derivation_witness,
    discontinuity_witness,
    gaussian_re_im,
    satisfies_unit_bound,
    thmB_pair,
)
from levicivita.core import check_decomposition
from levicivita.errors import HypothesisViolation
from levicivita.inequalities import (
    check_chain_paired_difference,
    check_chain_paired_sum,
    check_cs_reverse,
    check_discriminant_A9,
    check_hyperbolic_gap,
    check_identity,
    check_unit_bound,
)
from levicivita.reports import Verdict, serialize_scalar
from levicivita.search import (
    SampleSpec,
    equivalence_check_thm1,
    equivalence_check_thm2,
    random_additive_maps,
    sample_elements,
    sample_pairs,
    search_counterexample,
)

RESULTS: dict[int, str] = {}


def _record(number: int, title: str, passed: bool, elapsed: float, detail: str) -> None:
    status = "PASS" if passed else "FAIL"
    line = f"[{status}] criterion {number:>2}: {title} ({elapsed:.2f} s) {detail}"
    RESULTS[number] = line
    print(line)


def _dumps(reports) -> str:
    return json.dumps([r if isinstance(r, dict) else r.to_dict() for r in reports], indent=2)


# -- criterion bodies: each returns (passed, detail, json payload) ------------------


def thm_b_suite(p: int):
    A, B, rep = thmB_pair(p)
    pairs = sample_pairs(SampleSpec(f"quad:{p}", seed=p, count=10_000))
    reports = [
        check_decomposition(rep, (A, B), pairs, seed=p),
        check_chain_paired_sum(A, B, pairs, seed=p),
        check_identity(A, B, pairs, "sum-system", seed=p),
    ]
    ok = all(r.verdict is Verdict.HOLDS for r in reports) and all(r.sample_count == 10_000 for r in reports)
    return ok, f"p={p}: " + ", ".join(f"{r.check_name}={r.verdict.value}" for r in reports), _dumps(reports)


def gaussian_suite():
    # one chain report covers xy1, xy2 and their conjunction xy+; each
    # relation's own verdict sits in sub_verdicts
    reports = []
    pairs = sample_pairs(SampleSpec("gauss", seed=11, count=10_000))
    for conjugate in (False, True):
        A, B, rep = gaussian_re_im(conjugate)
        chain = check_chain_paired_difference(A, B, pairs, seed=11)
        if len(chain.sub_verdicts) != 4:
            return False, f"expected four chain relations, got {sorted(chain.sub_verdicts)}", ""
        reports += [
            check_decomposition(rep, (A, B), pairs, seed=11),
            chain,
            check_identity(A, B, pairs, "difference-system", seed=11),
        ]
    A, B, _ = gaussian_re_im()
    x, y = GaussianRational(1, 2), GaussianRational(2, -1)
    chain = (-B(x * y) ** 2, A(x * x) * A(y * y), A(x * y) ** 2)
    point = check_chain_paired_difference(A, B, [(x, y)])
    reports.append(point)
    ok = (
        all(r.verdict is Verdict.HOLDS for r in reports)
        and all(v is Verdict.HOLDS for r in reports for v in r.sub_verdicts.values())
        and chain == (-9, -9, 16)
        and point.equality_points == 2
    )
    shown = ", ".join(str(v) for v in chain)
    return ok, f"chain at (1+2i, 2-i) = ({shown}), {len(reports)} reports all HOLD={ok}", _dumps(reports)


def example_a():
    f = counterexample_functions("example-a", Fraction(1, 2))
    elements = sample_elements(SampleSpec("rat", seed=0, count=1000))
    unit = check_unit_bound(f, elements, seed=0)
    has_pm_one = Fraction(1) in elements and Fraction(-1) in elements
    at_one = f(Fraction(1)) * f(Fraction(1))
    search = search_counterexample("cs-reverse", f, 10_000, SampleSpec("rat", seed=0))
    hits = [c for c in search.counterexamples if c.x * c.y == 1 and c.lhs == 1 and c.rhs == Fraction(1, 4)]
    ok = (
        unit.verdict is Verdict.HOLDS
        and len(elements) == 1000
        and has_pm_one
        and at_one == Fraction(1, 4)
        and search.verdict is Verdict.FAILS
        and bool(hits)
    )
    first = search.first_counterexample
    detail = f"unit bound {unit.verdict.value} on {len(elements)} x; first reverse-bound counterexample ({first.x}, {first.y}) lhs={first.lhs} rhs={first.rhs}"
    return ok, detail, _dumps([unit, search])


def example_co():
    A = counterexample_functions("example-co")
    search = search_counterexample("cs-reverse", A, 10_000, SampleSpec("rat", seed=0))
    target = [c for c in search.counterexamples if (c.x, c.y) == (2, Fraction(1, 2))]
    ok = bool(target) and all((c.lhs, c.rhs) == (Fraction(9, 4), 0) for c in target)
    c = target[0] if target else search.first_counterexample
    return ok, f"found ({c.x}, {c.y}) lhs={c.lhs} rhs={c.rhs}", _dumps([search])


_DIRECTIONS: dict = {}


def _direction_table(p: int, points: int):
    # (a^2 + p b^2, 2ab) for a = cos t, b = sin t, t sweeping [0, pi)
    key = (p, points)
    if key not in _DIRECTIONS:
        mpmath.mp.dps = 50
        rows = []
        for k in range(points):
            t = mpmath.pi * k / points
            a, b = mpmath.cos(t), mpmath.sin(t)
            rows.append((a * a + p * b * b, 2 * a * b))
        _DIRECTIONS[key] = rows
    return _DIRECTIONS[key]


def _sign_oracle(A, p: int, points: int = 10_000) -> str:
    """Classify by sampling the sign of A(x^2) at 50 digits, independent of the exact kernel.

    The points ``cos t + sin t * sqrt p`` sweep every direction of the plane.
    """
    mpmath.mp.dps = 50
    rp = mpmath.sqrt(p)

    def real(q: QuadElem):
        return mpmath.mpf(q.a.numerator) / q.a.denominator + mpmath.mpf(q.b.numerator) / q.b.denominator * rp

    alpha, beta = real(A.alpha), real(A.beta)
    tiny = mpmath.mpf(10) ** -40
    seen = set()
    for diag, cross in _direction_table(p, points):
        v = alpha * diag + beta * cross
        if abs(v) > tiny:
            seen.add(v > 0)
    if not seen:
        return "ZERO"
    if seen == {True}:
        return "POSITIVE"
    if seen == {False}:
        return "NEGATIVE"
    return "NONE"


def thm1_equivalence():
    maps = random_additive_maps(2, 100, seed=2024)
    spec = SampleSpec("quad:2", seed=7, count=300)
    mismatches, inconsistent, payload, tags = [], 0, [], {}
    for i, A in enumerate(maps):
        tag = classify_additive(A).tag.value
        tags[tag] = tags.get(tag, 0) + 1
        if _sign_oracle(A, 2) != tag:
            mismatches.append(i)
        eq = equivalence_check_thm1(A, spec)
        inconsistent += not eq.consistent
        payload.append(eq.to_dict())
    ok = not mismatches and inconsistent == 0
    detail = f"classes {dict(sorted(tags.items()))}, oracle mismatches {mismatches}, inconsistent {inconsistent}"
    return ok, detail, _dumps(payload)


def thm2_equivalence():
    maps = random_additive_maps(2, 100, seed=2025, nonzero_unit=True)
    spec = SampleSpec("quad:2", seed=8, count=300)
    pairs = sample_pairs(SampleSpec("quad:2", seed=9, count=300))
    inconsistent, a9_fail, a9_run, payload = 0, 0, 0, []
    for A in maps:
        eq = equivalence_check_thm2(A, spec)
        inconsistent += not eq.consistent
        payload.append(eq.to_dict())
        pre, _ = satisfies_unit_bound(A)
        if pre:
            a9_run += 1
            r = check_discriminant_A9(A, pairs, seed=9)
            a9_fail += r.verdict is not Verdict.HOLDS
            payload.append(r.to_dict())
        else:
            with pytest.raises(HypothesisViolation):
                check_discriminant_A9(A, pairs)
    ok = inconsistent == 0 and a9_fail == 0
    return ok, f"inconsistent {inconsistent}/100, A9 ran on {a9_run} maps, failures {a9_fail}", _dumps(payload)


def cor4_derivation():
    pairs = sample_pairs(SampleSpec("poly", seed=4, count=1000, max_degree=6))
    reports = []
    for c in (0, 1, 2, -3):
        A, rep = derivation_witness(c)
        reports.append(check_decomposition(rep, A, pairs, seed=4, name=f"leibniz@{c}"))
        reports.append(check_cs_reverse(A, pairs, seed=4))
    ok = all(r.verdict is Verdict.HOLDS for r in reports)
    return ok, f"{len(reports)} reports, all HOLD={ok}", _dumps(reports)


def interval_grid():
    grid = [Fraction(k, 10) for k in range(-20, 21)]
    pairs = [(x, y) for x in grid for y in grid]
    kw = {"seed": 0, "digits": 12, "max_digits": 24}
    cos, sin, _ = analytic_pair("trig", 12)
    cosh, sinh, _ = analytic_pair("hyperbolic", 12)
    reports = [
        check_chain_paired_difference(cos, sin, pairs, **kw),
        check_chain_paired_sum(cosh, sinh, pairs, **kw),
        check_hyperbolic_gap(cosh, sinh, pairs, **kw),
    ]
    inconclusive = sum(r.verdict is Verdict.INCONCLUSIVE for r in reports)
    digits = max(r.precision_digits for r in reports)
    ok = all(r.verdict is Verdict.HOLDS for r in reports) and digits <= 24
    return ok, f"{len(pairs)} pairs, inconclusive={inconclusive}, max digits used {digits}", _dumps(reports)


def discontinuity():
    eps = Fraction(1, 1000)
    lines, ok, payload = [], True, []
    for p in (2, 3, 5):
        A, B, _ = thmB_pair(p)
        wa = discontinuity_witness(A, p, 6)
        wb = discontinuity_witness(B, p, 6)
        close = wa.within(eps)
        gap_a = wa.value_gap >= 1
        gap_b = wb.value_gap >= QuadElem.sqrt(p) - Fraction(1, 10)
        ok = ok and close and gap_a and gap_b and wa.all_certified and wb.all_certified
        r = wa.approximants[-1] - 1
        dist = abs(mpmath.mpf(r.numerator) / r.denominator - mpmath.sqrt(p))
        lines.append(
            f"p={p}: y6={wa.approximants[-1]} |y-u|={mpmath.nstr(dist, 3)} (<1e-3 {close}), gapA {gap_a}, gapB {gap_b}"
        )
        payload.append(
            {
                "p": p,
                "approximants": [serialize_scalar(y) for y in wa.approximants],
                "bounds": [serialize_scalar(b) for b in wa.distance_bounds],
                "gap_A": serialize_scalar(wa.value_gap),
                "gap_B": serialize_scalar(wb.value_gap),
            }
        )
    return ok, "; ".join(lines), _dumps(payload)


CRITERIA = {
    1: ("Thm B suite, p in {2,3,5,7}", None, 40.0),
    2: ("Gaussian suite", gaussian_suite, 10.0),
    3: ("Example a reproduction", example_a, 5.0),
    4: ("Example co reproduction", example_co, 5.0),
    5: ("Thm 1 equivalence over 100 maps", thm1_equivalence, 60.0),
    6: ("Thm 2 equivalence over 100 maps", thm2_equivalence, 60.0),
    7: ("Cor 4 derivation", cor4_derivation, 10.0),
    8: ("Cor 5/6 interval certification", interval_grid, 30.0),
    9: ("Discontinuity witnesses", discontinuity, 5.0),
}

_PAYLOADS: dict[int, str] = {}


def _run(number: int):
    title, body, limit = CRITERIA[number]
    start = time.perf_counter()
    ok, detail, payload = body()
    elapsed = time.perf_counter() - start
    _PAYLOADS[number] = payload
    passed = ok and elapsed < limit
    _record(number, title, passed, elapsed, detail + ("" if elapsed < limit else f" [over {limit:.0f} s]"))
    return passed, detail


def test_criterion_01_thmB_suite():
    start = time.perf_counter()
    oks, details, payloads, slow = [], [], [], []
    for p in (2, 3, 5, 7):
        t0 = time.perf_counter()
        ok, detail, payload = thm_b_suite(p)
        dt = time.perf_counter() - t0
        oks.append(ok)
        details.append(detail)
        payloads.append(payload)
        if dt >= 10.0:
            slow.append(f"p={p} took {dt:.1f} s")
    _PAYLOADS[1] = "".join(payloads)
    passed = all(oks) and not slow
    _record(1, CRITERIA[1][0], passed, time.perf_counter() - start, "; ".join(details + slow))
    assert passed, details + slow


def test_criterion_02_gaussian_suite():
    passed, detail = _run(2)
    assert passed, detail


def test_criterion_03_example_a():
    passed, detail = _run(3)
    assert passed, detail


def test_criterion_04_example_co():
    passed, detail = _run(4)
    assert passed, detail


def test_criterion_05_thm1_equivalence():
    passed, detail = _run(5)
    assert passed, detail


def test_criterion_06_thm2_equivalence():
    passed, detail = _run(6)
    assert passed, detail


def test_criterion_07_cor4_derivation():
    passed, detail = _run(7)
    assert passed, detail


def test_criterion_08_interval_grid():
    passed, detail = _run(8)
    assert passed, detail


def test_criterion_09_discontinuity():
    passed, detail = _run(9)
    assert passed, detail


def _cli_json(argv):
    import contextlib
    import io

    from levicivita.cli import main

    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        main(argv + ["--format", "json", "--no-timing"])
    return buf.getvalue()


def test_criterion_10_determinism():
    start = time.perf_counter()
    bodies = {1: lambda: ("", "", "".join(thm_b_suite(p)[2] for p in (2, 3, 5, 7)))}
    bodies.update({n: CRITERIA[n][1] for n in range(2, 10)})
    differing = []
    for n, body in bodies.items():
        again = body()[2]
        if n in _PAYLOADS and again != _PAYLOADS[n]:
            differing.append(n)
        elif n not in _PAYLOADS and again != body()[2]:
            differing.append(n)
    cli_runs = [
        "verify --theorem thmB --carrier quad:2 --samples 1000 --seed 42".split(),
        "search --theorem thm2 --carrier rat --example a --budget 2000".split(),
        "verify --theorem cor6 --carrier reals-interval --samples 300".split(),
    ]
    for argv in cli_runs:
        if _cli_json(argv) != _cli_json(argv):
            differing.append(" ".join(argv[:3]))
    passed = not differing
    _record(10, "Determinism (byte-identical JSON)", passed, time.perf_counter() - start, f"differing: {differing or 'none'}")
    assert passed, differing


if __name__ == "__main__":
    import sys

    failures = 0
    for name, fn in sorted(globals().items()):
        if name.startswith("test_criterion_"):
            try:
                fn()
            except AssertionError:
                failures += 1
    sys.exit(1 if failures else 0)
