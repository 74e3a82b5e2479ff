"""Concrete functions: additive maps on Q(sqrt p), the (A, B) pair with
A(a + b sqrt p) = a and B(a + b sqrt p) = b sqrt p, real and imaginary parts
on Q(i), a Leibniz-rule witness on Q[t], the two non-additive
counterexamples, and the sign classification of additive maps.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .algebra import (
    QuadElem,
    as_fraction,
    exact_sign,
    poly_derivative,
    poly_eval,
    sqrt_convergents,
    sqrt_within,
)
from .core import (
    CarrierFunction,
    LeviCivitaRep,
    gaussian_carrier,
    polyq_carrier,
    quad_carrier,
    rational_carrier,
    reals_interval_carrier,
)
from .intervals import enclose_analytic
from .errors import DomainError, HypothesisViolation, UnsupportedCarrierError

__all__ = [
    "AdditiveMap",
    "analytic_pair",
    "ClassTag",
    "Classification",
    "DiscontinuityWitness",
    "classify_additive",
    "counterexample_functions",
    "derivation_witness",
    "discontinuity_witness",
    "gaussian_re_im",
    "in_R_A",
    "make_additive_quad",
    "satisfies_unit_bound",
    "thmB_pair",
]


def _quad(value, p: int) -> QuadElem:
    if isinstance(value, QuadElem):
        if value.p != p:
            raise DomainError(f"value {value} is not in Q(sqrt {p})")
        return value
    return QuadElem(as_fraction(value), 0, p)


class AdditiveMap(CarrierFunction):
    """The Q-linear map on Q(sqrt p) with ``A(1) = alpha`` and ``A(sqrt p) = beta``.

    ``A(a + b sqrt p) = a*alpha + b*beta``; values lie in Q(sqrt p).
    """

    def __init__(self, p: int, alpha, beta, descriptor: Optional[str] = None):
        carrier = quad_carrier(p)
        self.p = p
        self.alpha = _quad(alpha, p)
        self.beta = _quad(beta, p)
        super().__init__(
            carrier,
            self._evaluate,
            descriptor or f"additive(alpha={self.alpha}, beta={self.beta})",
        )

    def _evaluate(self, x: QuadElem) -> QuadElem:
        return self.alpha * x.a + self.beta * x.b

    def square_value(self, a, b) -> QuadElem:
        """``A(x^2)`` for ``x = a + b sqrt p`` via ``(a^2 + p b^2) alpha + 2ab beta``."""
        a, b = as_fraction(a), as_fraction(b)
        return self.alpha * (a * a + self.p * b * b) + self.beta * (2 * a * b)

    def __repr__(self):
        return f"AdditiveMap(p={self.p}, alpha={self.alpha}, beta={self.beta})"


def make_additive_quad(p: int, alpha, beta) -> AdditiveMap:
    return AdditiveMap(p, alpha, beta)


# -- sign classification -----------------------------------------------------


class ClassTag(str, enum.Enum):
    ZERO = "ZERO"
    POSITIVE = "POSITIVE"
    NEGATIVE = "NEGATIVE"
    NONE = "NONE"


@dataclass(frozen=True)
class Classification:
    """Which of ``A = 0``, ``A(x^2) >= 0``, ``A(x^2) <= 0`` holds, if any.

    For ``NONE``, ``witness`` is ``(x_pos, x_neg)`` with ``A(x_pos^2) > 0``
    and ``A(x_neg^2) < 0``.
    """

    tag: ClassTag
    witness: Optional[tuple] = None

    @property
    def satisfies_condition(self) -> bool:
        return self.tag is not ClassTag.NONE


def _opposite_sign_point(A: AdditiveMap) -> QuadElem:
    # Q(t) = A((t + sqrt p)^2) = alpha t^2 + 2 beta t + p alpha has two real roots
    # around t* = -beta/alpha, where its sign is -sign(alpha).  Walk rational
    # approximations of t* built from convergents of sqrt p until one lands between.
    p, alpha, beta = A.p, A.alpha, A.beta
    target = -exact_sign(alpha)
    centre = -beta / alpha
    u, v = centre.a, centre.b
    candidates = [u] if v == 0 else []
    n = 4
    while True:
        if v != 0:
            candidates = [u + v * r for r in sqrt_convergents(p, n)[n // 2 :]]
        for t in candidates:
            if exact_sign(A.square_value(t, 1)) == target:
                return QuadElem(t, 1, p)
        if v == 0 or n > 4096:
            raise ArithmeticError("no rational point found inside the negative cone")
        n *= 2


def classify_additive(A: AdditiveMap) -> Classification:
    """Exact decision via the quadratic form ``(a, b) -> A((a + b sqrt p)^2)``.

    With matrix ``[[alpha, beta], [beta, p*alpha]]`` the form is positive
    semidefinite iff ``alpha >= 0`` and ``beta^2 <= p alpha^2``.
    """
    alpha, beta, p = A.alpha, A.beta, A.p
    sa = exact_sign(alpha)
    if sa == 0 and exact_sign(beta) == 0:
        return Classification(ClassTag.ZERO)
    semidefinite = exact_sign(alpha * alpha * p - beta * beta) >= 0
    if semidefinite and sa > 0:
        return Classification(ClassTag.POSITIVE)
    if semidefinite and sa < 0:
        return Classification(ClassTag.NEGATIVE)

    if sa == 0:
        # A(x^2) = 2ab beta
        plus, minus = QuadElem(1, 1, p), QuadElem(1, -1, p)
        if exact_sign(beta) < 0:
            plus, minus = minus, plus
        return Classification(ClassTag.NONE, (plus, minus))
    one = QuadElem(1, 0, p)
    other = _opposite_sign_point(A)
    witness = (one, other) if sa > 0 else (other, one)
    return Classification(ClassTag.NONE, witness)


def satisfies_unit_bound(A: AdditiveMap):
    """Closed-form test of ``A0(x^2) <= A0(x)^2`` for all x, where ``A0 = A/A(1)``.

    ``A0(x)^2 - A0(x^2) = b^2 (beta0^2 - p)`` with ``beta0 = beta/alpha``, so
    the bound holds everywhere iff ``beta0^2 >= p``.  Returns
    ``(holds, witness)`` with ``witness = sqrt p`` when it fails.
    """
    if exact_sign(A.alpha) == 0:
        raise HypothesisViolation("A(e) = 0: the normalized map is undefined", witness=QuadElem(1, 0, A.p))
    beta0 = A.beta / A.alpha
    if exact_sign(beta0 * beta0 - A.p) >= 0:
        return True, None
    return False, QuadElem.sqrt(A.p)


def in_R_A(A: CarrierFunction, x, unit=None) -> bool:
    """Membership in ``R_A = {x : 0 <= A(x^2) A(e)}``; requires ``A(e) != 0``."""
    if not A.carrier.exact:
        raise UnsupportedCarrierError("R_A membership needs an exact carrier")
    e = A.carrier.unit if unit is None else unit
    ae = A(e)
    if exact_sign(ae) == 0:
        raise HypothesisViolation("A(e) = 0, so R_A is not defined", witness=e)
    return exact_sign(A(A.carrier(x, x)) * ae) >= 0


# -- the named constructions -------------------------------------------------


def thmB_pair(p: int):
    """``A(a + b sqrt p) = a`` and ``B(a + b sqrt p) = b sqrt p`` with their paired-sum decomposition."""
    A = AdditiveMap(p, 1, 0, "thmB-A")
    B = AdditiveMap(p, 0, QuadElem.sqrt(p), "thmB-B")
    return A, B, LeviCivitaRep.paired_sum(A, B)


def gaussian_re_im(conjugate: bool = False):
    """``A = Re(phi)`` and ``B = Im(phi)`` for phi the identity or complex conjugation on Q(i)."""
    carrier = gaussian_carrier()
    tag = "conj" if conjugate else "id"
    flip = -1 if conjugate else 1
    A = CarrierFunction(carrier, lambda z: z.re, f"Re∘{tag}")
    B = CarrierFunction(carrier, lambda z: flip * z.im, f"Im∘{tag}")
    return A, B, LeviCivitaRep.paired_difference(A, B)


def _analytic(carrier, name):
    return CarrierFunction(carrier, lambda x, digits: enclose_analytic(name, x, digits), name)


def analytic_pair(kind: str, digits: int = 12):
    """Interval-valued function pairs on the rational points of (R, +).

    ``trig``: ``(cos, sin)`` with the paired-difference decomposition (addition formulas).
    ``hyperbolic``: ``(cosh, sinh)`` with the paired-sum decomposition.
    """
    carrier = reals_interval_carrier(digits)
    if kind == "trig":
        A, B = _analytic(carrier, "cos"), _analytic(carrier, "sin")
        return A, B, LeviCivitaRep.paired_difference(A, B)
    if kind == "hyperbolic":
        A, B = _analytic(carrier, "cosh"), _analytic(carrier, "sinh")
        return A, B, LeviCivitaRep.paired_sum(A, B)
    raise DomainError(f"unknown analytic pair {kind!r}")


def derivation_witness(c):
    """``A(h) = h'(c)`` on Q[t]; Leibniz rule makes ``A(hk) = h(c)A(k) + A(h)k(c)``."""
    c = as_fraction(c)
    carrier = polyq_carrier()
    A = CarrierFunction(carrier, lambda h: poly_eval(poly_derivative(h), c), f"d/dt at {c}")
    f = CarrierFunction(carrier, lambda h: poly_eval(h, c), f"eval at {c}")
    return A, LeviCivitaRep.symmetrized(f, A)


def counterexample_functions(kind: str, q=None) -> CarrierFunction:
    """Non-additive functions on (Q, *).

    ``example-a``: ``f(x) = x`` except ``f(1) = q`` with ``0 < q < 1``.
    ``example-co``: ``A(x) = |x - 1|``.
    """
    carrier = rational_carrier()
    if kind in ("example-a", "a"):
        if q is None:
            raise DomainError("example-a needs a parameter q in (0, 1)")
        q = as_fraction(q)
        if not 0 < q < 1:
            raise DomainError(f"q must lie in (0, 1), got {q}")
        return CarrierFunction(carrier, lambda x: q if x == 1 else Fraction(x), f"example-a(q={q})")
    if kind in ("example-co", "co"):
        return CarrierFunction(carrier, lambda x: abs(Fraction(x) - 1), "example-co")
    raise DomainError(f"unknown counterexample kind {kind!r}")


# -- discontinuity -------------------------------------------------------------


@dataclass(frozen=True)
class DiscontinuityWitness:
    """Rationals ``y_k`` converging to ``u`` while ``|A(y_k) - A(u)|`` stays large.

    ``distance_bounds[k]`` is a certified bound on ``|y_k - u|``;
    ``value_gap`` is the least value gap over all approximants.
    """

    point: QuadElem
    approximants: tuple
    distance_bounds: tuple
    value_gaps: tuple
    certified: tuple

    @property
    def distance_bound(self) -> Fraction:
        return self.distance_bounds[-1]

    @property
    def value_gap(self) -> QuadElem:
        gap = self.value_gaps[0]
        for g in self.value_gaps[1:]:
            if g < gap:
                gap = g
        return gap

    @property
    def all_certified(self) -> bool:
        return all(self.certified)

    def within(self, eps) -> bool:
        """Exact check that the last approximant is closer than ``eps`` to the point."""
        p = self.point.p
        return sqrt_within(p, self.approximants[-1] - 1, eps)


def discontinuity_witness(A: AdditiveMap, p: int, depth: int) -> DiscontinuityWitness:
    """Witness at ``u = 1 + sqrt p`` from ``y_k = 1 + r_k``, ``r_k`` the convergents of sqrt p.

    ``|y_k - u| = |r_k - sqrt p| < 1/den(r_k)^2`` is certified by exact squaring.
    Any additive map with ``A(sqrt p) != sqrt(p) A(1)`` is accepted; maps of
    the continuous form ``x -> A(1) x`` are rejected.
    """
    if not isinstance(A, AdditiveMap) or A.p != p:
        raise DomainError("discontinuity witnesses are built for additive maps on Q(sqrt p)")
    if A.beta == A.alpha * QuadElem.sqrt(p):
        raise DomainError("this map is x -> A(1)*x, which is continuous")
    u = QuadElem(1, 1, p)
    au = A(u)
    ys, bounds, gaps, certs = [], [], [], []
    for r in sqrt_convergents(p, depth):
        y = 1 + r
        bound = Fraction(1, r.denominator**2)
        ys.append(y)
        bounds.append(bound)
        gaps.append(abs(A(QuadElem(y, 0, p)) - au))
        certs.append(sqrt_within(p, r, bound))
    return DiscontinuityWitness(u, tuple(ys), tuple(bounds), tuple(gaps), tuple(certs))
