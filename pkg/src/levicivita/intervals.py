"""Closed intervals with rational endpoints and rigorous enclosures of
sin, cos, sinh and cosh at rational points.

Endpoint arithmetic is exact, so every operation returns the exact image
set of the operands (or a superset, for products).  Enclosures of the
analytic functions come from Taylor partial sums plus a Lagrange remainder
bound, all evaluated in rational arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import ceil, floor

from .algebra import as_fraction, fmt_rational
from .errors import DomainError, PrecisionError

__all__ = ["RationalInterval", "enclose_analytic", "ANALYTIC_FUNCTIONS", "MAX_ARGUMENT"]

MAX_ARGUMENT = 8
MAX_TERMS = 400
ANALYTIC_FUNCTIONS = ("sin", "cos", "sinh", "cosh")


class RationalInterval:
    __slots__ = ("lo", "hi")

    def __init__(self, lo, hi=None):
        lo = as_fraction(lo)
        hi = lo if hi is None else as_fraction(hi)
        if lo > hi:
            raise ValueError(f"empty interval [{lo}, {hi}]")
        self.lo = lo
        self.hi = hi

    @staticmethod
    def _coerce(other):
        if isinstance(other, RationalInterval):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return RationalInterval(other)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalInterval(self.lo + o.lo, self.hi + o.hi)

    __radd__ = __add__

    def __neg__(self):
        return RationalInterval(-self.hi, -self.lo)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return RationalInterval(self.lo - o.hi, self.hi - o.lo)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        ps = (self.lo * o.lo, self.lo * o.hi, self.hi * o.lo, self.hi * o.hi)
        return RationalInterval(min(ps), max(ps))

    __rmul__ = __mul__

    def square(self) -> "RationalInterval":
        """Tight enclosure of ``{v*v : v in self}`` (never negative)."""
        a, b = self.lo * self.lo, self.hi * self.hi
        if self.lo <= 0 <= self.hi:
            return RationalInterval(0, max(a, b))
        return RationalInterval(min(a, b), max(a, b))

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def midpoint(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, other) -> bool:
        if isinstance(other, RationalInterval):
            return self.lo <= other.lo and other.hi <= self.hi
        v = as_fraction(other)
        return self.lo <= v <= self.hi

    def __contains__(self, item):
        return self.contains(item)

    def overlaps(self, other: "RationalInterval") -> bool:
        return self.lo <= other.hi and other.lo <= self.hi

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.lo == o.lo and self.hi == o.hi

    def __hash__(self):
        return hash((self.lo, self.hi))

    def __str__(self):
        return f"[{fmt_rational(self.lo)}, {fmt_rational(self.hi)}]"

    def __repr__(self):
        return f"RationalInterval({str(self)})"


def _lagrange_scale(fn: str, ax: Fraction) -> int:
    # sup of |f^(n)| on [-|x|, |x|]: 1 for sin/cos, cosh|x| <= e^|x| < 3^ceil|x| for sinh/cosh
    if fn in ("sin", "cos"):
        return 1
    return 3 ** ceil(ax)


@lru_cache(maxsize=65536)
def _enclose(fn: str, x: Fraction, digits: int) -> RationalInterval:
    tol = Fraction(1, 10**digits)
    odd = fn in ("sin", "sinh")
    alternating = fn in ("sin", "cos")
    scale = _lagrange_scale(fn, abs(x))

    # Taylor sum of degree m; the remainder is bounded by scale*|x|^(m+1)/(m+1)!
    m = 1 if odd else 0
    term = x if odd else Fraction(1)
    total = term
    x2 = x * x
    for _ in range(MAX_TERMS):
        bound = scale * term * x / (m + 1)
        bound = abs(bound)
        if 2 * bound <= tol / 4:
            break
        term = term * x2 / ((m + 1) * (m + 2))
        if alternating:
            term = -term
        m += 2
        total += term
    else:
        raise PrecisionError(f"{fn}({x}) not enclosed to 1e-{digits} within {MAX_TERMS} terms")

    # outward rounding to a decimal grid, then padding by tol/4 so that any
    # finer enclosure of the same value nests inside this one
    grid = 10 ** (digits + 2)
    lo = Fraction(floor((total - bound) * grid), grid) - tol / 4
    hi = Fraction(ceil((total + bound) * grid), grid) + tol / 4
    return RationalInterval(lo, hi)


def enclose_analytic(fn: str, x, digits: int = 12) -> RationalInterval:
    """Interval of width <= 10**-digits containing ``fn(x)`` exactly.

    ``fn`` is one of ``sin``, ``cos``, ``sinh``, ``cosh``; ``x`` is rational
    with ``|x| <= 8`` (there is no argument reduction by pi).
    """
    if fn not in ANALYTIC_FUNCTIONS:
        raise DomainError(f"unknown analytic function {fn!r}")
    x = as_fraction(x)
    if abs(x) > MAX_ARGUMENT:
        raise DomainError(f"|x| must be <= {MAX_ARGUMENT}, got {x}")
    if isinstance(digits, bool) or not isinstance(digits, int) or digits < 0:
        raise DomainError(f"digits must be a non-negative integer, got {digits!r}")
    if x == 0:
        return RationalInterval(1 if fn in ("cos", "cosh") else 0)
    return _enclose(fn, x, digits)
