from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from levicivita.algebra import QuadElem
from levicivita.constructions import ClassTag, counterexample_functions, make_additive_quad, thmB_pair
from levicivita.errors import DomainError, HypothesisViolation
from levicivita.reports import Verdict, element_height
from levicivita.search import (
    SampleSpec,
    equivalence_check_thm1,
    equivalence_check_thm2,
    random_additive_maps,
    sample_elements,
    sample_pairs,
    search_counterexample,
)


def test_same_spec_same_elements():
    spec = SampleSpec("quad:2", seed=17, count=200)
    assert sample_elements(spec) == sample_elements(spec)
    assert sample_pairs(spec) == sample_pairs(spec)


def test_quad_special_prefix():
    r2 = QuadElem.sqrt(2)
    head = sample_elements(SampleSpec("quad:2", count=10))[:6]
    assert head == [QuadElem(0, 0, 2), QuadElem(1, 0, 2), QuadElem(-1, 0, 2), r2, -r2, 1 + r2]


@pytest.mark.parametrize("carrier", ["quad:3", "gauss", "poly", "rat"])
def test_count_and_height_bound(carrier):
    xs = sample_elements(SampleSpec(carrier, count=5, height_bound=10, include_special=False))
    assert len(xs) == 5
    assert all(element_height(x) <= 10 for x in xs)


def test_different_seeds_differ():
    a = sample_elements(SampleSpec("gauss", seed=1, count=50, include_special=False))
    b = sample_elements(SampleSpec("gauss", seed=2, count=50, include_special=False))
    assert a != b


@settings(max_examples=25, deadline=None)
@given(st.integers(min_value=0, max_value=2**32), st.integers(min_value=1, max_value=300))
def test_pair_stream_is_prefix_stable(seed, n):
    short = sample_pairs(SampleSpec("rat", seed=seed, count=n))
    long = sample_pairs(SampleSpec("rat", seed=seed, count=n + 50))
    assert long[: len(short)] == short


def test_reciprocal_pairs_present():
    pairs = sample_pairs(SampleSpec("rat", seed=4, count=400))
    assert (Fraction(2), Fraction(1, 2)) in pairs
    recips = [(x, y) for x, y in pairs if x != 0 and x * y == 1]
    assert len(recips) >= 50


def test_thmB_search_finds_nothing():
    A, B, _ = thmB_pair(2)
    report = search_counterexample("sum-chain-A", (A, B), 10_000, SampleSpec("quad:2", seed=0))
    assert report.verdict is Verdict.HOLDS_WITHIN_BUDGET
    assert report.sample_count == 10_000


def test_unknown_predicate():
    A, _, _ = thmB_pair(2)
    with pytest.raises(DomainError):
        search_counterexample("7<", A, 10, SampleSpec("quad:2"))


def test_example_a_search_on_hyperbola():
    f = counterexample_functions("example-a", Fraction(1, 2))
    report = search_counterexample("cs-reverse", f, 1000, SampleSpec("rat", seed=0))
    assert report.verdict is Verdict.FAILS
    assert all(c.x * c.y == 1 for c in report.counterexamples)
    assert all((c.lhs, c.rhs) == (1, Fraction(1, 4)) for c in report.counterexamples)


@settings(max_examples=10, deadline=None)
@given(st.integers(min_value=0, max_value=10**6), st.integers(min_value=20, max_value=400))
def test_search_is_monotone_in_budget(seed, budget):
    f = counterexample_functions("example-co")
    spec = SampleSpec("rat", seed=seed)
    small = search_counterexample("cs-reverse", f, budget, spec)
    big = search_counterexample("cs-reverse", f, 2 * budget, spec)
    if small.verdict is Verdict.FAILS:
        assert big.verdict is Verdict.FAILS
        seen = {tuple(c.to_dict().values()) for c in big.counterexamples}
        assert all(tuple(c.to_dict().values()) in seen for c in small.counterexamples)


def test_thm1_documented_maps():
    spec = SampleSpec("quad:2", seed=0, count=300)
    r = equivalence_check_thm1(make_additive_quad(2, 1, 0), spec)
    assert (r.left_label, r.right, r.consistent) == ("POSITIVE", Verdict.HOLDS, True)
    r = equivalence_check_thm1(make_additive_quad(2, 0, 0), spec)
    assert (r.left_label, r.right, r.consistent) == ("ZERO", Verdict.HOLDS, True)
    r = equivalence_check_thm1(make_additive_quad(2, 0, 1), spec)
    assert (r.left_label, r.right, r.consistent) == ("NONE", Verdict.FAILS, True)


def test_thm1_none_counterexample_at_one_plus_root_two():
    A = make_additive_quad(2, 0, 1)
    x, y = QuadElem(1, 1, 2), QuadElem(1, -1, 2)
    assert (A(x * x), A(y * y), A(x * y)) == (2, -2, 0)


def test_thm2_documented_maps():
    spec = SampleSpec("quad:2", seed=0, count=300)
    r = equivalence_check_thm2(make_additive_quad(2, 1, QuadElem(0, 2, 2)), spec)
    assert r.left is Verdict.HOLDS and r.right is Verdict.HOLDS and r.consistent
    A = make_additive_quad(2, 1, 0)
    r = equivalence_check_thm2(A, spec)
    assert r.left is Verdict.FAILS and r.right is Verdict.FAILS and r.consistent
    x, y = QuadElem.sqrt(2), QuadElem(1, 1, 2)
    assert A(x * x) * A(y * y) == 6 and A(x * y) ** 2 == 4
    r = equivalence_check_thm2(make_additive_quad(2, -1, 0), spec)
    assert r.consistent


def test_thm2_needs_nonzero_unit():
    with pytest.raises(HypothesisViolation):
        equivalence_check_thm2(make_additive_quad(2, 0, 1), SampleSpec("quad:2", count=10))


def test_random_maps_are_deterministic_and_varied():
    a = random_additive_maps(2, 40, seed=3)
    b = random_additive_maps(2, 40, seed=3)
    assert [(m.alpha, m.beta) for m in a] == [(m.alpha, m.beta) for m in b]
    from levicivita.constructions import classify_additive

    tags = {classify_additive(m).tag for m in a}
    assert {ClassTag.NONE, ClassTag.POSITIVE, ClassTag.NEGATIVE} <= tags


def test_nonzero_unit_maps():
    assert all(m.alpha != 0 for m in random_additive_maps(3, 50, seed=1, nonzero_unit=True))


def test_short_ids_are_aliases():
    f = counterexample_functions("example-co")
    spec = SampleSpec("rat", seed=0)
    long = search_counterexample("cs-reverse", f, 300, spec).to_dict()
    short = search_counterexample("2<", f, 300, spec).to_dict()
    assert long["counterexamples"] == short["counterexamples"]
    A, B, _ = thmB_pair(2)
    r = search_counterexample("6xy2", (A, B), 100, SampleSpec("quad:2"))
    assert set(r.sub_verdicts) == {"sum-chain-B:lower", "sum-chain-B:upper"}
