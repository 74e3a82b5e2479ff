"""Check verdicts, counterexample records and their JSON serialization."""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Optional

from .algebra import GaussianRational, PolyQ, QuadElem, fmt_rational, rational_height
from .intervals import RationalInterval

__all__ = [
    "CheckReport",
    "Counterexample",
    "Verdict",
    "canonical_key",
    "combine_verdicts",
    "serialize_scalar",
]


class Verdict(str, enum.Enum):
    HOLDS = "HOLDS"
    FAILS = "FAILS"
    INCONCLUSIVE = "INCONCLUSIVE"
    HOLDS_WITHIN_BUDGET = "HOLDS-within-budget"

    def __str__(self):
        return self.value

    @property
    def passed(self) -> bool:
        return self in (Verdict.HOLDS, Verdict.HOLDS_WITHIN_BUDGET)


def combine_verdicts(verdicts) -> Verdict:
    verdicts = list(verdicts)
    if Verdict.FAILS in verdicts:
        return Verdict.FAILS
    if Verdict.INCONCLUSIVE in verdicts:
        return Verdict.INCONCLUSIVE
    if Verdict.HOLDS_WITHIN_BUDGET in verdicts:
        return Verdict.HOLDS_WITHIN_BUDGET
    return Verdict.HOLDS


def serialize_scalar(value) -> str:
    """Exact text form of any element or value the package produces."""
    if isinstance(value, bool):
        raise TypeError("booleans are not scalars")
    if isinstance(value, (int, Fraction)):
        return fmt_rational(value)
    if isinstance(value, (QuadElem, GaussianRational, PolyQ, RationalInterval)):
        return str(value)
    raise TypeError(f"cannot serialize {value!r}")


def element_height(x) -> int:
    if isinstance(x, (int, Fraction)):
        return rational_height(x)
    return x.height()


def canonical_key(x) -> tuple:
    """Total order on elements of one carrier: height first, then coefficients."""
    if isinstance(x, (int, Fraction)):
        return (rational_height(x), Fraction(x))
    if isinstance(x, QuadElem):
        return (x.height(), x.a, x.b)
    if isinstance(x, GaussianRational):
        return (x.height(), x.re, x.im)
    if isinstance(x, PolyQ):
        return (x.height(), x.degree, x.coeffs)
    raise TypeError(f"no canonical order for {x!r}")


def pair_key(x, y) -> tuple:
    kx, ky = canonical_key(x), canonical_key(y)
    return (max(kx[0], ky[0]), kx, ky)


@dataclass(frozen=True)
class Counterexample:
    x: Any
    y: Any
    lhs: Any
    rhs: Any
    relation: str

    def sort_key(self):
        return (pair_key(self.x, self.y), self.relation)

    def to_dict(self) -> dict:
        return {
            "relation": self.relation,
            "x": serialize_scalar(self.x),
            "y": serialize_scalar(self.y),
            "lhs": serialize_scalar(self.lhs),
            "rhs": serialize_scalar(self.rhs),
        }


@dataclass
class CheckReport:
    """Outcome of one checker over a sample set.

    ``equality_points`` counts (pair, relation) instances where both sides
    were exactly equal.  ``sub_verdicts`` maps each relation checked to its
    own verdict.
    """

    check_name: str
    carrier: str
    sample_count: int
    verdict: Verdict
    counterexamples: list = field(default_factory=list)
    equality_points: int = 0
    seed: Optional[int] = None
    precision_digits: Optional[int] = None
    sub_verdicts: dict = field(default_factory=dict)
    notes: list = field(default_factory=list)

    def __post_init__(self):
        if self.verdict is Verdict.FAILS and not self.counterexamples:
            raise ValueError("a FAILS verdict needs at least one counterexample")
        if self.verdict.passed and self.counterexamples:
            raise ValueError("a passing verdict cannot carry counterexamples")
        self.counterexamples = sorted(self.counterexamples, key=Counterexample.sort_key)

    @property
    def holds(self) -> bool:
        return self.verdict.passed

    @property
    def first_counterexample(self) -> Optional[Counterexample]:
        return self.counterexamples[0] if self.counterexamples else None

    def to_dict(self) -> dict:
        return {
            "check": self.check_name,
            "carrier": self.carrier,
            "samples": self.sample_count,
            "verdict": self.verdict.value,
            "equality_points": self.equality_points,
            "seed": self.seed,
            "precision_digits": self.precision_digits,
            "sub_verdicts": {k: v.value for k, v in self.sub_verdicts.items()},
            "counterexamples": [c.to_dict() for c in self.counterexamples],
            "notes": list(self.notes),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2)

    def summary(self) -> str:
        line = (
            f"{self.check_name:<34} {self.carrier:<16} {self.verdict.value:<20}"
            f" samples={self.sample_count} equalities={self.equality_points}"
        )
        if self.precision_digits is not None:
            line += f" digits={self.precision_digits}"
        return line
