"""Checkers for the Cauchy-Schwarz-type inequalities and companion identities.

Every checker evaluates a handful of relations between the values
``F(x*y), F(x*x), F(y*y)`` (and sometimes ``F(x), F(y)``) of one or two
carrier functions at each sampled pair, and returns a :class:`CheckReport`.

On exact carriers the verdict of ``lhs <= rhs`` is the exact sign of
``lhs - rhs``.  On the interval carrier a relation holds when the upper end
of the enclosure of ``lhs - rhs`` is <= 0 and fails when its lower end is
> 0; a straddling enclosure is first retried at higher precision (when
``max_digits`` allows), then resolved by the diagonal shortcut, and is
otherwise reported INCONCLUSIVE.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional, Sequence

from .algebra import exact_sign
from .constructions import AdditiveMap, in_R_A, satisfies_unit_bound
from .core import CarrierFunction
from .errors import CarrierMismatchError, HypothesisViolation, UnsupportedCarrierError
from .intervals import RationalInterval
from .reports import CheckReport, Counterexample, Verdict, combine_verdicts

__all__ = [
    "Relation",
    "check_additivity",
    "check_chain_paired_difference",
    "check_chain_paired_sum",
    "check_cs_forward",
    "check_cs_reverse",
    "check_discriminant_A9",
    "check_hyperbolic_gap",
    "check_identity",
    "check_relations",
    "check_unit_bound",
]

PRECISION_STEP = 6


def _sq(v):
    if isinstance(v, RationalInterval):
        return v.square()
    return v * v


@dataclass(frozen=True)
class Relation:
    """``lhs <= rhs`` (or ``lhs == rhs``) in terms of the pair values.

    ``diagonal`` marks relations that compare ``F(x*x)F(y*y)`` with
    ``F(x*y)^2`` for one and the same ``F``; at ``x == y`` both sides are the
    same real number.
    """

    name: str
    text: str
    lhs: Callable
    rhs: Callable
    equality: bool = False
    diagonal: bool = False


class _PairValues:
    """Lazily evaluated ``F_where`` values, e.g. ``A_xy`` or ``B_xx``."""

    def __init__(self, funcs, carrier, x, y, digits):
        self._funcs = funcs
        self._carrier = carrier
        self._args = {"x": x, "y": y}
        self._x, self._y = x, y
        self._digits = digits

    def _arg(self, where):
        if where not in self._args:
            a, b = where
            self._args[where] = self._carrier(self._args[a], self._args[b])
        return self._args[where]

    def __getattr__(self, name):
        label, _, where = name.partition("_")
        value = self._funcs[label](self._arg(where), self._digits)
        setattr(self, name, value)
        return value


# -- relation catalogue ------------------------------------------------------

CS_FORWARD = Relation(
    "forward", "A(x*y)^2 <= A(x*x)A(y*y)", lambda v: _sq(v.A_xy), lambda v: v.A_xx * v.A_yy, diagonal=True
)
CS_REVERSE = Relation(
    "reverse", "A(x*x)A(y*y) <= A(x*y)^2", lambda v: v.A_xx * v.A_yy, lambda v: _sq(v.A_xy), diagonal=True
)
UNIT_BOUND = Relation(
    "unit-bound", "A(x*x)A(e) <= A(x)^2", lambda v: v.A_xx * v.A_y, lambda v: _sq(v.A_x)
)

XY1_LEFT = Relation("difference-chain-A:lower", "-B(x*y)^2 <= A(x*x)A(y*y)", lambda v: -_sq(v.B_xy), lambda v: v.A_xx * v.A_yy)
XY1_RIGHT = Relation(
    "difference-chain-A:upper", "A(x*x)A(y*y) <= A(x*y)^2", lambda v: v.A_xx * v.A_yy, lambda v: _sq(v.A_xy), diagonal=True
)
XY2_LEFT = Relation("difference-chain-B:lower", "-A(x*y)^2 <= B(x*x)B(y*y)", lambda v: -_sq(v.A_xy), lambda v: v.B_xx * v.B_yy)
XY2_RIGHT = Relation(
    "difference-chain-B:upper", "B(x*x)B(y*y) <= B(x*y)^2", lambda v: v.B_xx * v.B_yy, lambda v: _sq(v.B_xy), diagonal=True
)

SXY1_LEFT = Relation("sum-chain-A:lower", "B(x*x)B(y*y) <= A(x*y)^2", lambda v: v.B_xx * v.B_yy, lambda v: _sq(v.A_xy))
SXY1_RIGHT = Relation(
    "sum-chain-A:upper", "A(x*y)^2 <= A(x*x)A(y*y)", lambda v: _sq(v.A_xy), lambda v: v.A_xx * v.A_yy, diagonal=True
)
SXY2_LEFT = Relation(
    "sum-chain-B:lower", "B(x*x)B(y*y) <= B(x*y)^2", lambda v: v.B_xx * v.B_yy, lambda v: _sq(v.B_xy), diagonal=True
)
SXY2_RIGHT = Relation("sum-chain-B:upper", "B(x*y)^2 <= A(x*x)A(y*y)", lambda v: _sq(v.B_xy), lambda v: v.A_xx * v.A_yy)

IDENTITY_DIFFERENCE = Relation(
    "identity:difference-system",
    "B(x*y)^2 + A(x*x)A(y*y) = A(x*y)^2 + B(x*x)B(y*y)",
    lambda v: _sq(v.B_xy) + v.A_xx * v.A_yy,
    lambda v: _sq(v.A_xy) + v.B_xx * v.B_yy,
    equality=True,
)
IDENTITY_SUM = Relation(
    "identity:sum-system",
    "B(x*x)B(y*y) + A(x*x)A(y*y) = A(x*y)^2 + B(x*y)^2",
    lambda v: v.B_xx * v.B_yy + v.A_xx * v.A_yy,
    lambda v: _sq(v.A_xy) + _sq(v.B_xy),
    equality=True,
)

A9 = Relation(
    "discriminant",
    "(A0(x)A0(y) - A0(xy))^2 <= (A0(x)^2 - A0(x^2))(A0(y)^2 - A0(y^2))",
    lambda v: _sq(v.A_x * v.A_y - v.A_xy),
    lambda v: (_sq(v.A_x) - v.A_xx) * (_sq(v.A_y) - v.A_yy),
)

ADDITIVITY = Relation(
    "additive", "A(x+y) = A(x) + A(y)", lambda v: v.A_sum, lambda v: v.A_x + v.A_y, equality=True
)


# -- evaluation engine -------------------------------------------------------


def _outcome(rel: Relation, lhs, rhs, x, y) -> str:
    """One of ``ok``, ``eq``, ``fail``, ``unknown``."""
    diff = lhs - rhs
    if isinstance(diff, RationalInterval):
        if diff.lo == 0 and diff.hi == 0:
            return "eq"
        if rel.equality:
            raise UnsupportedCarrierError("identities cannot be certified on interval enclosures")
        if diff.hi <= 0:
            return "ok"
        if diff.lo > 0:
            return "fail"
        if rel.diagonal and x == y:
            return "eq"
        return "unknown"
    s = exact_sign(diff)
    if s == 0:
        return "eq"
    if rel.equality:
        return "fail"
    return "ok" if s < 0 else "fail"


def check_relations(
    check_name: str,
    funcs: dict,
    relations: Sequence[Relation],
    pairs,
    *,
    seed: Optional[int] = None,
    digits: Optional[int] = None,
    max_digits: Optional[int] = None,
    extra_values: Optional[Callable] = None,
) -> CheckReport:
    """Evaluate ``relations`` at every pair and aggregate a report.

    ``funcs`` maps labels (``"A"``, ``"B"``) to carrier functions on a
    common carrier.
    """
    carrier = next(iter(funcs.values())).carrier
    for f in funcs.values():
        if not f.carrier.same_as(carrier):
            raise CarrierMismatchError("all functions of a check must share one carrier")
    exact = carrier.exact
    if not exact:
        if any(r.equality for r in relations):
            raise UnsupportedCarrierError(f"{check_name} needs an exact carrier, got {carrier.name}")
        digits = carrier.digits if digits is None else digits
        max_digits = digits if max_digits is None else max(max_digits, digits)

    outcomes = {r.name: [] for r in relations}
    failures = []
    equalities = 0
    count = 0
    used_digits = digits
    unresolved = []
    for x, y in pairs:
        carrier.check_member(x)
        carrier.check_member(y)
        count += 1
        d = digits
        while True:
            vals = _PairValues(funcs, carrier, x, y, d)
            if extra_values is not None:
                extra_values(vals, x, y, d)
            results = []
            for rel in relations:
                lhs, rhs = rel.lhs(vals), rel.rhs(vals)
                results.append((rel, lhs, rhs, _outcome(rel, lhs, rhs, x, y)))
            if exact or d >= max_digits or all(r[3] != "unknown" for r in results):
                break
            d = min(d + PRECISION_STEP, max_digits)
        if not exact:
            used_digits = max(used_digits, d)
        for rel, lhs, rhs, out in results:
            outcomes[rel.name].append(out)
            if out == "eq":
                equalities += 1
            elif out == "fail":
                failures.append(Counterexample(x, y, lhs, rhs, rel.name))
            elif out == "unknown":
                unresolved.append((x, y, rel.name))

    sub = {}
    for rel in relations:
        outs = outcomes[rel.name]
        if "fail" in outs:
            sub[rel.name] = Verdict.FAILS
        elif "unknown" in outs:
            sub[rel.name] = Verdict.INCONCLUSIVE
        else:
            sub[rel.name] = Verdict.HOLDS
    notes = []
    if unresolved:
        notes.append(
            f"{len(unresolved)} relation(s) unresolved at {used_digits} digits; "
            f"retry with precision_digits >= {used_digits + PRECISION_STEP}"
        )
    return CheckReport(
        check_name=check_name,
        carrier=carrier.name,
        sample_count=count,
        verdict=combine_verdicts(sub.values()) if sub else Verdict.HOLDS,
        counterexamples=failures,
        equality_points=equalities,
        seed=seed,
        precision_digits=None if exact else used_digits,
        sub_verdicts=sub,
        notes=notes,
    )


# -- public checkers ---------------------------------------------------------


def check_cs_forward(A: CarrierFunction, pairs, **kw) -> CheckReport:
    """``A(x*y)^2 <= A(x*x) A(y*y)`` at every pair."""
    return check_relations("cs-forward", {"A": A}, [CS_FORWARD], pairs, **kw)


def _require_nonzero_unit(A: CarrierFunction, unit=None):
    e = A.carrier.unit if unit is None else unit
    if e is None:
        raise HypothesisViolation(f"carrier {A.carrier.name} has no unit element")
    if not A.carrier.exact:
        raise UnsupportedCarrierError("R_A membership needs an exact carrier")
    if exact_sign(A(e)) == 0:
        raise HypothesisViolation("A(e) = 0: the R_A restriction needs A(e) != 0", witness=e)
    return e


def check_cs_reverse(
    A: CarrierFunction, pairs, restrict_to_R_A: bool = False, unit=None, **kw
) -> CheckReport:
    """``A(x*x) A(y*y) <= A(x*y)^2``, optionally only over pairs from R_A."""
    name = "cs-reverse"
    if restrict_to_R_A:
        e = _require_nonzero_unit(A, unit)
        member = {}

        def inside(z):
            if z not in member:
                member[z] = in_R_A(A, z, e)
            return member[z]

        pairs = [(x, y) for x, y in pairs if inside(x) and inside(y)]
        name = "cs-reverse@R_A"
    return check_relations(name, {"A": A}, [CS_REVERSE], pairs, **kw)


def check_unit_bound(A: CarrierFunction, elements, unit=None, **kw) -> CheckReport:
    """``A(x*x) A(e) <= A(x)^2`` for each sampled element ``x``.

    Counterexamples are recorded as pairs ``(x, e)``.
    """
    e = A.carrier.unit if unit is None else unit
    if e is None:
        raise HypothesisViolation(f"carrier {A.carrier.name} has no unit element")
    return check_relations("unit-bound", {"A": A}, [UNIT_BOUND], [(x, e) for x in elements], **kw)


def _chain_relations(left, right, which):
    if which == "both":
        return left + right
    if which == "first":
        return left
    if which == "second":
        return right
    raise ValueError(f"unknown chain selector {which!r}")


def check_chain_paired_difference(
    A: CarrierFunction, B: CarrierFunction, pairs, which: str = "both", **kw
) -> CheckReport:
    """``-B(x*y)^2 <= A(x*x)A(y*y) <= A(x*y)^2`` and ``-A(x*y)^2 <= B(x*x)B(y*y) <= B(x*y)^2``."""
    rels = _chain_relations([XY1_LEFT, XY1_RIGHT], [XY2_LEFT, XY2_RIGHT], which)
    return check_relations("chain:paired-difference", {"A": A, "B": B}, rels, pairs, **kw)


def check_chain_paired_sum(
    A: CarrierFunction, B: CarrierFunction, pairs, which: str = "both", **kw
) -> CheckReport:
    """``B(x*x)B(y*y) <= A(x*y)^2 <= A(x*x)A(y*y)`` and ``B(x*x)B(y*y) <= B(x*y)^2 <= A(x*x)A(y*y)``."""
    rels = _chain_relations([SXY1_LEFT, SXY1_RIGHT], [SXY2_LEFT, SXY2_RIGHT], which)
    return check_relations("chain:paired-sum", {"A": A, "B": B}, rels, pairs, **kw)


def check_identity(A: CarrierFunction, B: CarrierFunction, pairs, variant: str, **kw) -> CheckReport:
    if not A.carrier.exact:
        raise UnsupportedCarrierError("identities are only checked on exact carriers")
    if variant in ("difference-system", "difference"):
        rel = IDENTITY_DIFFERENCE
    elif variant in ("sum-system", "sum"):
        rel = IDENTITY_SUM
    else:
        raise ValueError(f"unknown identity variant {variant!r}")
    return check_relations(rel.name, {"A": A, "B": B}, [rel], pairs, **kw)


def check_discriminant_A9(A: AdditiveMap, pairs, **kw) -> CheckReport:
    """Discriminant inequality for the normalized map ``A0 = A / A(1)``.

    The precondition ``A0(x^2) <= A0(x)^2`` for all x is decided up front by
    the closed form; a violation raises :class:`HypothesisViolation` naming
    a violating element.
    """
    if not isinstance(A, AdditiveMap):
        raise UnsupportedCarrierError("the A9 check is defined for additive maps on Q(sqrt p)")
    e = _require_nonzero_unit(A)
    ok, witness = satisfies_unit_bound(A)
    if not ok:
        raise HypothesisViolation(
            f"A0(x^2) <= A0(x)^2 fails at x = {witness}", witness=witness
        )
    ae = A(e)
    A0 = CarrierFunction(A.carrier, lambda z: A(z) / ae, f"{A.descriptor}/A(e)")
    return check_relations("discriminant", {"A": A0}, [A9], pairs, **kw)


def _add_sum(vals, x, y, digits):
    vals.A_sum = vals._funcs["A"](x + y, digits)


def check_additivity(A: CarrierFunction, pairs, **kw) -> CheckReport:
    """``A(x+y) == A(x) + A(y)`` on the ring carrier."""
    if A.carrier.add is None:
        raise UnsupportedCarrierError(f"carrier {A.carrier.name} has no ring addition")
    return check_relations("additivity", {"A": A}, [ADDITIVITY], pairs, extra_values=_add_sum, **kw)


def check_hyperbolic_gap(A: CarrierFunction, B: CarrierFunction, pairs, **kw) -> CheckReport:
    """Certify ``B(x*y)^2 < A(x*y)^2`` through ``A^2 - B^2 = 1``.

    For ``(A, B) = (cosh, sinh)`` the enclosure of ``A(x*y)^2 - B(x*y)^2``
    must contain 1 and be narrower than 1, which puts it strictly above 0.
    """
    if A.carrier.exact:
        raise UnsupportedCarrierError("the hyperbolic gap check runs on the interval carrier")
    carrier = A.carrier
    digits = kw.get("digits") or carrier.digits
    failures, count = [], 0
    for x, y in pairs:
        count += 1
        s = carrier(x, y)
        a, b = A(s, digits), B(s, digits)
        gap = a.square() - b.square()
        if not (gap.contains(1) and gap.width < 1):
            failures.append(Counterexample(x, y, b.square(), a.square(), "hyperbolic-gap"))
    verdict = Verdict.FAILS if failures else Verdict.HOLDS
    return CheckReport(
        check_name="hyperbolic-gap",
        carrier=carrier.name,
        sample_count=count,
        verdict=verdict,
        counterexamples=failures,
        seed=kw.get("seed"),
        precision_digits=digits,
        sub_verdicts={"hyperbolic-gap": verdict},
    )
