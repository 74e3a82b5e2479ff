"""Deterministic sampling, budgeted counterexample search and the two
iff-characterizations checked in both directions.

Random elements come from NumPy's Philox counter-based generator seeded
with the 64-bit ``seed`` of a :class:`SampleSpec`, so a spec reproduces
the same stream on every platform.  Random rationals are drawn uniformly
from the reduced fractions ``n/d`` with ``|n| <= H`` and ``1 <= d <= H``
(rejection on ``gcd(n, d) != 1``).
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field, replace
from fractions import Fraction
from itertools import islice
from math import gcd
from typing import Iterator, Optional

import numpy as np

from .algebra import GaussianRational, PolyQ, QuadElem, exact_sign
from .constructions import AdditiveMap, ClassTag, Classification, classify_additive, in_R_A
from .core import (
    Carrier,
    CarrierFunction,
    gaussian_carrier,
    polyq_carrier,
    quad_carrier,
    rational_carrier,
    reals_interval_carrier,
)
from .errors import CarrierMismatchError, DomainError, HypothesisViolation
from .inequalities import (
    check_chain_paired_difference,
    check_chain_paired_sum,
    check_cs_forward,
    check_cs_reverse,
    check_discriminant_A9,
    check_identity,
    check_unit_bound,
)
from .reports import CheckReport, Verdict

__all__ = [
    "EquivalenceReport",
    "PREDICATES",
    "SampleSpec",
    "carrier_from_id",
    "equivalence_check_thm1",
    "equivalence_check_thm2",
    "random_additive_maps",
    "sample_elements",
    "sample_pairs",
    "search_counterexample",
]

RECIPROCAL_EVERY = 4
REAL_RANGE = 2

_QUAD_ID = re.compile(r"^quad[:(]\s*(\d+)\s*\)?$")


def carrier_from_id(identifier: str, digits: int = 12) -> Carrier:
    """``quad:p``, ``gauss``, ``poly``, ``rat`` or ``reals-interval``."""
    ident = identifier.strip().lower()
    m = _QUAD_ID.match(ident)
    if m:
        return quad_carrier(int(m.group(1)))
    if ident in ("gauss", "gaussian"):
        return gaussian_carrier()
    if ident in ("poly", "polyq"):
        return polyq_carrier()
    if ident in ("rat", "rational"):
        return rational_carrier()
    if ident in ("reals-interval", "reals"):
        return reals_interval_carrier(digits)
    raise DomainError(f"unknown carrier {identifier!r}")


@dataclass(frozen=True)
class SampleSpec:
    carrier: str
    seed: int = 0
    count: int = 1000
    height_bound: int = 100
    include_special: bool = True
    max_degree: int = 6

    def __post_init__(self):
        if self.count < 1:
            raise DomainError("sample count must be >= 1")
        if self.height_bound < 1:
            raise DomainError("height bound must be >= 1")
        if not 0 <= self.seed < 2**64:
            raise DomainError("seed must be a 64-bit unsigned integer")

    def resolve(self) -> Carrier:
        return carrier_from_id(self.carrier)


def _special_elements(carrier: Carrier) -> list:
    kind = carrier.kind
    if kind == "quad":
        p = carrier.p
        return [QuadElem(a, b, p) for a, b in ((0, 0), (1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1))]
    if kind == "gaussian":
        return [GaussianRational(a, b) for a, b in ((0, 0), (1, 0), (-1, 0), (0, 1), (0, -1), (1, 1), (1, -1), (1, 2), (2, -1))]
    if kind == "polyq":
        return [PolyQ(c) for c in ((), (1,), (-1,), (0, 1), (0, -1), (1, 1), (0, 0, 1))]
    if kind == "rational":
        return [Fraction(v) for v in (0, 1, -1, 2, Fraction(1, 2), -2, Fraction(-1, 2))]
    return [Fraction(v) for v in (0, Fraction(1, 2), Fraction(-1, 2), 1, -1)]


def _reciprocal(carrier: Carrier, x):
    if carrier.kind == "reals-interval" or not x:
        return None
    if carrier.kind == "polyq":
        return PolyQ((1 / x.coeffs[0],)) if x.degree == 0 else None
    if carrier.kind == "rational":
        return 1 / Fraction(x)
    return x.inverse()


class _Draw:
    def __init__(self, spec: SampleSpec):
        self.rng = np.random.Generator(np.random.Philox(spec.seed))
        self.h = spec.height_bound

    def int_(self, lo: int, hi: int) -> int:
        return int(self.rng.integers(lo, hi, endpoint=True))

    def rational(self) -> Fraction:
        while True:
            n, d = self.int_(-self.h, self.h), self.int_(1, self.h)
            if gcd(n, d) == 1:
                return Fraction(n, d)

    def real_point(self) -> Fraction:
        while True:
            d = self.int_(1, self.h)
            n = self.int_(-REAL_RANGE * d, REAL_RANGE * d)
            if gcd(n, d) == 1:
                return Fraction(n, d)


def _random_elements(spec: SampleSpec, carrier: Carrier) -> Iterator:
    draw = _Draw(spec)
    kind = carrier.kind
    while True:
        if kind == "quad":
            yield QuadElem(draw.rational(), draw.rational(), carrier.p)
        elif kind == "gaussian":
            yield GaussianRational(draw.rational(), draw.rational())
        elif kind == "polyq":
            deg = draw.int_(0, spec.max_degree)
            yield PolyQ(draw.rational() for _ in range(deg + 1))
        elif kind == "rational":
            yield draw.rational()
        else:
            yield draw.real_point()


def sample_elements(spec: SampleSpec) -> list:
    """``spec.count`` elements: the special ones first (when requested), then random draws."""
    carrier = spec.resolve()
    specials = _special_elements(carrier) if spec.include_special else []
    out = specials[: spec.count]
    out.extend(islice(_random_elements(spec, carrier), spec.count - len(out)))
    return out


def _pair_stream(spec: SampleSpec, carrier: Carrier) -> Iterator:
    if spec.include_special:
        specials = _special_elements(carrier)
        for s in specials:
            for t in specials:
                yield s, t
        for s in specials:
            r = _reciprocal(carrier, s)
            if r is not None:
                yield s, r
    stream = _random_elements(spec, carrier)
    i = 0
    while True:
        x = next(stream)
        r = _reciprocal(carrier, x) if i % RECIPROCAL_EVERY == RECIPROCAL_EVERY - 1 else None
        yield (x, r) if r is not None else (x, next(stream))
        i += 1


def sample_pairs(spec: SampleSpec) -> list:
    """``spec.count`` pairs; a larger count always extends a smaller one (prefix-stable).

    Every fourth random pair is ``(x, 1/x)`` on carriers with inverses, so
    the hyperbola ``xy = 1`` is always visited.
    """
    carrier = spec.resolve()
    return list(islice(_pair_stream(spec, carrier), spec.count))


# -- counterexample search -----------------------------------------------------

# canonical predicate ids, each followed by the short ids it also answers to
PREDICATES = {
    "cs-forward": ("1<", "1*<"),
    "cs-reverse": ("2<", "3<", "C4<"),
    "cs-reverse@R_A": ("2<@R_A",),
    "unit-bound": ("2xe",),
    "chain-paired-difference": ("difference-chain-A", "difference-chain-B", "xy1", "xy2", "xy+"),
    "chain-paired-sum": ("sum-chain-A", "sum-chain-B", "6xy1", "6xy2", "a"),
    "identity-difference": (),
    "identity-sum": (),
    "discriminant": ("A9", "a9"),
}
_ALIASES = {alias: name for name, aliases in PREDICATES.items() for alias in (name, *aliases)}


def _run_predicate(name: str, alias: str, targets, spec: SampleSpec) -> CheckReport:
    kw = {"seed": spec.seed}
    A = targets[0]
    if name == "unit-bound":
        return check_unit_bound(A, sample_elements(spec), **kw)
    pairs = sample_pairs(spec)
    if name == "cs-forward":
        return check_cs_forward(A, pairs, **kw)
    if name == "cs-reverse":
        return check_cs_reverse(A, pairs, **kw)
    if name == "cs-reverse@R_A":
        return check_cs_reverse(A, pairs, restrict_to_R_A=True, **kw)
    if name == "discriminant":
        return check_discriminant_A9(A, pairs, **kw)
    if len(targets) != 2:
        raise DomainError(f"predicate {alias!r} needs two functions (A, B)")
    B = targets[1]
    which = {
        "difference-chain-A": "first",
        "difference-chain-B": "second",
        "sum-chain-A": "first",
        "sum-chain-B": "second",
        "xy1": "first",
        "xy2": "second",
        "6xy1": "first",
        "6xy2": "second",
    }.get(alias, "both")
    if name == "chain-paired-difference":
        return check_chain_paired_difference(A, B, pairs, which=which, **kw)
    if name == "chain-paired-sum":
        return check_chain_paired_sum(A, B, pairs, which=which, **kw)
    variant = "difference-system" if name == "identity-difference" else "sum-system"
    return check_identity(A, B, pairs, variant, **kw)


def search_counterexample(predicate: str, target, budget: int, spec: SampleSpec) -> CheckReport:
    """Search the first ``budget`` sampled pairs for a violation of ``predicate``.

    Returns a FAILS report (counterexamples in canonical order) or a report
    with verdict HOLDS-within-budget.
    """
    if predicate not in _ALIASES:
        raise DomainError(f"unknown predicate {predicate!r}; known: {sorted(_ALIASES)}")
    if budget < 1:
        raise DomainError("search budget must be >= 1")
    targets = tuple(target) if isinstance(target, (tuple, list)) else (target,)
    carrier = spec.resolve()
    for t in targets:
        if not t.carrier.same_as(carrier):
            raise CarrierMismatchError(f"target on {t.carrier.name} but sample spec is for {carrier.name}")
    name = _ALIASES[predicate]
    report = _run_predicate(name, predicate, targets, replace(spec, count=budget))
    report.check_name = f"search:{predicate}"
    if report.verdict is Verdict.HOLDS:
        report.verdict = Verdict.HOLDS_WITHIN_BUDGET
    return report


# -- equivalence checks ----------------------------------------------------------


@dataclass
class EquivalenceReport:
    theorem: str
    left: Verdict
    right: Verdict
    consistent: bool
    details: list = field(default_factory=list)
    left_label: str = ""

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "left": self.left.value,
            "left_label": self.left_label,
            "right": self.right.value,
            "consistent": self.consistent,
            "details": [d.to_dict() for d in self.details],
        }


def _spec_for(A: AdditiveMap, spec: SampleSpec) -> SampleSpec:
    if not spec.resolve().same_as(A.carrier):
        raise CarrierMismatchError(f"sample spec carrier {spec.carrier} does not match {A.carrier.name}")
    return spec


def equivalence_check_thm1(A: AdditiveMap, spec: SampleSpec) -> EquivalenceReport:
    """Sign condition on ``A(x^2)`` versus the forward inequality on samples.

    The right-hand side is an independent sampled check.  When the
    classifier says no sign condition holds but the sampled pairs show no
    violation, a wider search (ten times the sample count, next seed) runs
    before the verdict is settled.
    """
    spec = _spec_for(A, spec)
    cls: Classification = classify_additive(A)
    left_ok = cls.tag is not ClassTag.NONE
    forward = check_cs_forward(A, sample_pairs(spec), seed=spec.seed)
    details = [forward]
    right_ok = forward.holds
    if not left_ok and right_ok:
        wider = replace(spec, seed=(spec.seed + 1) % 2**64)
        found = search_counterexample("1<", A, 10 * spec.count, wider)
        details.append(found)
        right_ok = found.holds
    return EquivalenceReport(
        theorem="thm1",
        left=Verdict.HOLDS if left_ok else Verdict.FAILS,
        right=Verdict.HOLDS if right_ok else Verdict.FAILS,
        consistent=left_ok == right_ok,
        details=details,
        left_label=cls.tag.value,
    )


def equivalence_check_thm2(A: CarrierFunction, spec: SampleSpec) -> EquivalenceReport:
    """``A(x^2)A(e) <= A(x)^2`` on R_A versus the reverse inequality on R_A x R_A.

    The pair set always contains ``(x, e)`` for every sampled ``x`` in R_A.
    """
    carrier = spec.resolve()
    if not carrier.same_as(A.carrier):
        raise CarrierMismatchError(f"sample spec carrier {spec.carrier} does not match {A.carrier.name}")
    e = carrier.unit
    if exact_sign(A(e)) == 0:
        raise HypothesisViolation("A(e) = 0; the characterization needs A(e) != 0", witness=e)
    region = [x for x in sample_elements(spec) if in_R_A(A, x)]
    left = check_unit_bound(A, region, seed=spec.seed)
    pairs = [(x, e) for x in region] + sample_pairs(spec)
    right = check_cs_reverse(A, pairs, restrict_to_R_A=True, seed=spec.seed)
    return EquivalenceReport(
        theorem="thm2",
        left=left.verdict,
        right=right.verdict,
        consistent=left.holds == right.holds,
        details=[left, right],
        left_label="unit-bound on R_A",
    )


def random_additive_maps(p: int, n: int, seed: int = 0, height: int = 10, nonzero_unit: bool = False):
    """``n`` seeded additive maps on Q(sqrt p) mixing all sign classes.

    Every fifth map has ``beta = s*alpha`` with ``|s| <= 1`` (semidefinite);
    with ``nonzero_unit`` false the first map is zero and some have ``alpha = 0``.
    """
    draw = _Draw(SampleSpec(f"quad:{p}", seed=seed, height_bound=height))

    def quad(rational_only=False):
        b = 0 if rational_only else draw.rational()
        return QuadElem(draw.rational(), b, p)

    maps = []
    for i in range(n):
        kind = i % 5
        if kind == 0:
            alpha = quad()
            s = draw.rational()
            s = 1 / s if abs(s) > 1 else s
            beta = alpha * s
        elif kind == 1:
            alpha, beta = quad(True), quad(True)
        elif kind == 2:
            alpha, beta = quad(True), QuadElem(0, draw.rational(), p)
        elif kind == 3:
            alpha, beta = quad(), quad()
        else:
            alpha = QuadElem(0, 0, p) if not nonzero_unit else quad()
            beta = quad()
        if not nonzero_unit and i == 0:
            alpha = beta = QuadElem(0, 0, p)
        if nonzero_unit and not alpha:
            alpha = QuadElem(1, 0, p)
        maps.append(AdditiveMap(p, alpha, beta))
    return maps
