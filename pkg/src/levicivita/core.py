"""Groupoid carriers, functions on them, and Levi-Civita decompositions.

A decomposition expresses ``A(x*y)`` as a short sum of products of
one-variable functions.  Five shapes are supported::

    RANK_N             A(x*y) = sum_i f_i(x) f_i(y)
    DIFFERENCE         A(x*y) = f(x)f(y) - g(x)g(y)
    SYMMETRIZED        A(x*y) = f(x)g(y) + g(x)f(y)
    PAIRED_DIFFERENCE  A(x*y) = f(x)f(y) - g(x)g(y),  B(x*y) = f(x)g(y) + g(x)f(y)
    PAIRED_SUM         A(x*y) = f(x)f(y) + g(x)g(y),  B(x*y) = f(x)g(y) + g(x)f(y)
"""

from __future__ import annotations

import enum
import operator
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Any, Callable, Optional, Sequence

from .algebra import GaussianRational, PolyQ, QuadElem, exact_sign, is_valid_radicand
from .errors import CarrierMismatchError, DomainError
from .intervals import RationalInterval
from .reports import CheckReport, Counterexample, Verdict

__all__ = [
    "Carrier",
    "CarrierFunction",
    "LeviCivitaRep",
    "RepKind",
    "check_decomposition",
    "gaussian_carrier",
    "polyq_carrier",
    "quad_carrier",
    "rational_carrier",
    "reals_interval_carrier",
    "rep_rhs",
]


@dataclass(frozen=True, eq=False)
class Carrier:
    """A concrete groupoid ``(G, *)``.

    ``exact`` carriers produce exact function values; the reals-interval
    carrier (rational points of (R, +)) produces interval enclosures at
    ``digits`` decimal digits.
    """

    name: str
    kind: str
    op: Callable[[Any, Any], Any]
    member: Callable[[Any], bool]
    unit: Any = None
    p: Optional[int] = None
    exact: bool = True
    digits: Optional[int] = None
    add: Optional[Callable[[Any, Any], Any]] = None

    def __call__(self, x, y):
        return self.op(x, y)

    def check_member(self, x):
        if not self.member(x):
            raise CarrierMismatchError(f"{x!r} is not an element of carrier {self.name}")

    def same_as(self, other: "Carrier") -> bool:
        return self.kind == other.kind and self.p == other.p

    def __repr__(self):
        return f"Carrier({self.name})"


def _is_rational(x) -> bool:
    return isinstance(x, Fraction) or (isinstance(x, int) and not isinstance(x, bool))


@lru_cache(maxsize=None)
def quad_carrier(p: int) -> Carrier:
    if not is_valid_radicand(p):
        raise DomainError(f"radicand must be a square-free integer >= 2, got {p!r}")
    return Carrier(
        name=f"quad({p})",
        kind="quad",
        op=operator.mul,
        member=lambda x: isinstance(x, QuadElem) and x.p == p,
        unit=QuadElem(1, 0, p),
        p=p,
        add=operator.add,
    )


@lru_cache(maxsize=None)
def gaussian_carrier() -> Carrier:
    return Carrier(
        name="gaussian",
        kind="gaussian",
        op=operator.mul,
        member=lambda x: isinstance(x, GaussianRational),
        unit=GaussianRational(1, 0),
        add=operator.add,
    )


@lru_cache(maxsize=None)
def polyq_carrier() -> Carrier:
    return Carrier(
        name="polyq",
        kind="polyq",
        op=operator.mul,
        member=lambda x: isinstance(x, PolyQ),
        unit=PolyQ((1,)),
        add=operator.add,
    )


@lru_cache(maxsize=None)
def rational_carrier() -> Carrier:
    """(Q, *): home of the non-additive counterexample functions."""
    return Carrier(
        name="rational",
        kind="rational",
        op=operator.mul,
        member=_is_rational,
        unit=Fraction(1),
        add=operator.add,
    )


@lru_cache(maxsize=None)
def reals_interval_carrier(digits: int = 12) -> Carrier:
    """Rational points of (R, +); functions return interval enclosures."""
    return Carrier(
        name="reals-interval",
        kind="reals-interval",
        op=operator.add,
        member=_is_rational,
        unit=Fraction(0),
        exact=False,
        digits=digits,
    )


class CarrierFunction:
    """A function ``G -> value field`` with metadata describing what it is.

    Exact carriers call ``evaluator(x)``; the interval carrier calls
    ``evaluator(x, digits)`` and expects a :class:`RationalInterval`.
    """

    def __init__(self, carrier: Carrier, evaluator: Callable, descriptor: str = ""):
        self.carrier = carrier
        self.evaluator = evaluator
        self.descriptor = descriptor

    def __call__(self, x, digits: Optional[int] = None):
        if not self.carrier.member(x):
            raise CarrierMismatchError(f"{x!r} is not an element of carrier {self.carrier.name}")
        if self.carrier.exact:
            return self.evaluator(x)
        return self.evaluator(x, self.carrier.digits if digits is None else digits)

    def __repr__(self):
        return f"CarrierFunction({self.descriptor or '?'} on {self.carrier.name})"


class RepKind(str, enum.Enum):
    RANK_N = "rank-n"
    DIFFERENCE = "difference"
    SYMMETRIZED = "symmetrized"
    PAIRED_DIFFERENCE = "paired-difference"
    PAIRED_SUM = "paired-sum"

    @property
    def paired(self) -> bool:
        return self in (RepKind.PAIRED_DIFFERENCE, RepKind.PAIRED_SUM)


@dataclass(frozen=True)
class LeviCivitaRep:
    kind: RepKind
    components: tuple

    def __post_init__(self):
        comps = tuple(self.components)
        object.__setattr__(self, "components", comps)
        if not comps:
            raise ValueError("a decomposition needs at least one component")
        if self.kind is not RepKind.RANK_N and len(comps) != 2:
            raise ValueError(f"{self.kind.value} decompositions take exactly two functions (f, g)")
        first = comps[0].carrier
        for c in comps[1:]:
            if not c.carrier.same_as(first):
                raise CarrierMismatchError("all components must live on the same carrier")

    @classmethod
    def rank_n(cls, *fs):
        return cls(RepKind.RANK_N, fs)

    @classmethod
    def difference(cls, f, g):
        return cls(RepKind.DIFFERENCE, (f, g))

    @classmethod
    def symmetrized(cls, f, g):
        return cls(RepKind.SYMMETRIZED, (f, g))

    @classmethod
    def paired_difference(cls, f, g):
        return cls(RepKind.PAIRED_DIFFERENCE, (f, g))

    @classmethod
    def paired_sum(cls, f, g):
        return cls(RepKind.PAIRED_SUM, (f, g))

    @property
    def carrier(self) -> Carrier:
        return self.components[0].carrier


def rep_rhs(rep: LeviCivitaRep, x, y, digits: Optional[int] = None):
    """Right-hand side(s) of the decomposition at ``(x, y)``.

    Paired shapes return the tuple ``(A-side, B-side)``.
    """
    comps = rep.components
    if rep.kind is RepKind.RANK_N:
        total = 0
        for f in comps:
            total = total + f(x, digits) * f(y, digits)
        return total
    f, g = comps
    fx, fy, gx, gy = f(x, digits), f(y, digits), g(x, digits), g(y, digits)
    sym = fx * gy + gx * fy
    if rep.kind is RepKind.DIFFERENCE:
        return fx * fy - gx * gy
    if rep.kind is RepKind.SYMMETRIZED:
        return sym
    if rep.kind is RepKind.PAIRED_DIFFERENCE:
        return fx * fy - gx * gy, sym
    return fx * fy + gx * gy, sym


def _values_agree(lhs, rhs) -> bool:
    if isinstance(lhs, RationalInterval) or isinstance(rhs, RationalInterval):
        lo = lhs if isinstance(lhs, RationalInterval) else RationalInterval(lhs)
        ro = rhs if isinstance(rhs, RationalInterval) else RationalInterval(rhs)
        return lo.overlaps(ro)
    return exact_sign(lhs - rhs) == 0


def check_decomposition(
    rep: LeviCivitaRep,
    target,
    pairs: Sequence,
    *,
    seed: Optional[int] = None,
    digits: Optional[int] = None,
    name: Optional[str] = None,
) -> CheckReport:
    """Verify ``target(x*y) == rep_rhs(rep, x, y)`` on every sampled pair.

    ``target`` is one function, or an ``(A, B)`` tuple for paired shapes.
    On the interval carrier agreement means the enclosures overlap, so a
    HOLDS there is advisory only.
    """
    targets = tuple(target) if isinstance(target, (tuple, list)) else (target,)
    if len(targets) != (2 if rep.kind.paired else 1):
        raise ValueError(f"{rep.kind.value} decompositions need {2 if rep.kind.paired else 1} target(s)")
    carrier = rep.carrier
    for t in targets:
        if not t.carrier.same_as(carrier):
            raise CarrierMismatchError(
                f"target lives on {t.carrier.name}, decomposition on {carrier.name}"
            )
    labels = ("A", "B") if rep.kind.paired else ("A",)
    if digits is None and not carrier.exact:
        digits = carrier.digits

    failures = []
    count = 0
    for x, y in pairs:
        carrier.check_member(x)
        carrier.check_member(y)
        count += 1
        xy = carrier(x, y)
        rhs = rep_rhs(rep, x, y, digits)
        rhs = rhs if rep.kind.paired else (rhs,)
        for label, t, r in zip(labels, targets, rhs):
            lhs = t(xy, digits)
            if not _values_agree(lhs, r):
                failures.append(Counterexample(x, y, lhs, r, f"{label}(x*y) = {rep.kind.value} rhs"))

    verdict = Verdict.FAILS if failures else Verdict.HOLDS
    notes = [] if carrier.exact else ["interval carrier: agreement means overlapping enclosures (advisory)"]
    return CheckReport(
        check_name=name or f"decomposition:{rep.kind.value}",
        carrier=carrier.name,
        sample_count=count,
        verdict=verdict,
        counterexamples=failures,
        seed=seed,
        precision_digits=None if carrier.exact else digits,
        sub_verdicts={"decomposition": verdict},
        notes=notes,
    )
