from fractions import Fraction

import pytest

from levicivita.algebra import GaussianRational, QuadElem
from levicivita.constructions import counterexample_functions, gaussian_re_im, thmB_pair
from levicivita.core import (
    CarrierFunction,
    LeviCivitaRep,
    RepKind,
    check_decomposition,
    gaussian_carrier,
    quad_carrier,
    rational_carrier,
    rep_rhs,
)
from levicivita.errors import CarrierMismatchError, DomainError
from levicivita.reports import Verdict
from levicivita.search import SampleSpec, sample_pairs


def test_quad_carrier_rejects_bad_radicand():
    with pytest.raises(DomainError):
        quad_carrier(9)


def test_thmB_decomposition_at_documented_pair():
    A, B, rep = thmB_pair(2)
    x, y = QuadElem(1, 1, 2), QuadElem(3, -1, 2)
    a, b = rep_rhs(rep, x, y)
    assert a == 1 == A(x * y)
    # 3 - 2 from A(x)A(y) + B(x)B(y)
    assert A(x) * A(y) == 3 and B(x) * B(y) == -2
    assert b == B(x * y)


def test_thmB_decomposition_holds_on_samples():
    A, B, rep = thmB_pair(2)
    pairs = sample_pairs(SampleSpec("quad:2", seed=3, count=100))
    assert check_decomposition(rep, (A, B), pairs, seed=3).verdict is Verdict.HOLDS


@pytest.mark.parametrize("conjugate", [False, True])
def test_gaussian_decomposition(conjugate):
    A, B, rep = gaussian_re_im(conjugate)
    pairs = sample_pairs(SampleSpec("gauss", seed=5, count=100))
    assert check_decomposition(rep, (A, B), pairs).verdict is Verdict.HOLDS


def test_example_a_is_not_rank_one():
    f = counterexample_functions("example-a", Fraction(1, 2))
    report = check_decomposition(LeviCivitaRep.rank_n(f), f, [(Fraction(1), Fraction(2))])
    assert report.verdict is Verdict.FAILS
    c = report.first_counterexample
    assert (c.lhs, c.rhs) == (2, 1)


def test_mixed_carriers_rejected():
    A, _, _ = thmB_pair(2)
    re, _, _ = gaussian_re_im()
    with pytest.raises(CarrierMismatchError):
        LeviCivitaRep.difference(A, re)
    with pytest.raises(CarrierMismatchError):
        check_decomposition(LeviCivitaRep.rank_n(re), A, [])


def test_element_from_wrong_carrier():
    re, _, _ = gaussian_re_im()
    with pytest.raises(CarrierMismatchError):
        re(QuadElem(1, 1, 2))


def test_paired_shape_needs_two_targets():
    A, B, rep = thmB_pair(3)
    with pytest.raises(ValueError):
        check_decomposition(rep, A, [])


@pytest.mark.parametrize("kind", list(RepKind))
def test_rhs_is_symmetric(kind):
    A, B, _ = thmB_pair(5)
    rep = LeviCivitaRep(kind, (A, B))
    for x, y in sample_pairs(SampleSpec("quad:5", seed=11, count=200)):
        assert rep_rhs(rep, x, y) == rep_rhs(rep, y, x)


def test_rank_n_sums_all_components():
    carrier = gaussian_carrier()
    one = CarrierFunction(carrier, lambda z: Fraction(1), "one")
    re, im, _ = gaussian_re_im()
    rep = LeviCivitaRep.rank_n(one, re, im)
    x, y = GaussianRational(1, 2), GaussianRational(2, -1)
    assert rep_rhs(rep, x, y) == 1 + 2 - 2


def test_decomposition_report_is_deterministic():
    A, B, rep = thmB_pair(7)
    spec = SampleSpec("quad:7", seed=42, count=300)
    first = check_decomposition(rep, (A, B), sample_pairs(spec), seed=42).to_json()
    second = check_decomposition(rep, (A, B), sample_pairs(spec), seed=42).to_json()
    assert first == second


def test_rational_carrier_membership():
    c = rational_carrier()
    assert c.member(Fraction(3, 4)) and c.member(5)
    assert not c.member(True) and not c.member(0.5)
