"""Exact scalar arithmetic.

Rationals are :class:`fractions.Fraction` throughout.  On top of them this
module provides the real quadratic field Q(sqrt p) with exact sign
determination, the Gaussian rationals Q(i), the polynomial ring Q[t], and
continued-fraction convergents of sqrt p.

All values are immutable and kept in canonical form after every operation,
so structural equality coincides with mathematical equality.
"""

from __future__ import annotations

import re
from fractions import Fraction
from functools import lru_cache
from math import gcd, isqrt
from typing import Iterable, Union

from .errors import CarrierMismatchError, DomainError

Rational = Union[int, Fraction]

__all__ = [
    "GaussianRational",
    "PolyQ",
    "QuadElem",
    "as_fraction",
    "continued_fraction_sqrt",
    "exact_sign",
    "fmt_rational",
    "is_valid_radicand",
    "parse_quad",
    "parse_rational",
    "poly_derivative",
    "poly_eval",
    "quad_mul",
    "quad_sign",
    "rational_height",
    "sqrt_convergents",
    "sqrt_within",
]


def as_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool) or not isinstance(value, (int, str)):
        raise TypeError(f"expected an int, Fraction or rational string, got {value!r}")
    return Fraction(value)


def fmt_rational(value) -> str:
    """Serialize a rational as ``num/den`` (denominator always present)."""
    value = as_fraction(value)
    return f"{value.numerator}/{value.denominator}"


def rational_height(value) -> int:
    value = as_fraction(value)
    return max(abs(value.numerator), value.denominator)


def _int_sign(n: int) -> int:
    return (n > 0) - (n < 0)


@lru_cache(maxsize=256)
def is_valid_radicand(p) -> bool:
    """True iff ``p`` is an integer >= 2 that no prime square divides.

    p = 1 is square-free but rejected: Q(sqrt 1) collapses to Q.
    """
    if isinstance(p, bool) or not isinstance(p, int) or p < 2:
        return False
    n = p
    f = 2
    while f * f <= n:
        if n % f == 0:
            n //= f
            if n % f == 0:
                return False
        f += 1
    return True


def _require_radicand(p) -> int:
    if not is_valid_radicand(p):
        raise DomainError(f"radicand must be a square-free integer >= 2, got {p!r}")
    return p


# ---------------------------------------------------------------------------
# Q(sqrt p)
# ---------------------------------------------------------------------------


class QuadElem:
    """The real number ``a + b*sqrt(p)`` with rational ``a``, ``b``.

    Stored as integers ``(an + bn*sqrt(p)) / d`` with ``d > 0`` and
    ``gcd(an, bn, d) == 1``.  Mixed arithmetic with ``int`` and ``Fraction``
    is supported; combining elements with different ``p`` raises
    :class:`CarrierMismatchError`.
    """

    __slots__ = ("_an", "_bn", "_d", "p")

    def __init__(self, a: Rational = 0, b: Rational = 0, p: int = 2):
        _require_radicand(p)
        a = as_fraction(a)
        b = as_fraction(b)
        d = a.denominator * b.denominator // gcd(a.denominator, b.denominator)
        self._set(a.numerator * (d // a.denominator), b.numerator * (d // b.denominator), d, p)

    def _set(self, an, bn, d, p):
        g = gcd(gcd(an, bn), d)
        if g != 1:
            an //= g
            bn //= g
            d //= g
        self._an = an
        self._bn = bn
        self._d = d
        self.p = p

    @classmethod
    def _raw(cls, an, bn, d, p):
        obj = object.__new__(cls)
        if d < 0:
            an, bn, d = -an, -bn, -d
        obj._set(an, bn, d, p)
        return obj

    @classmethod
    def sqrt(cls, p: int) -> "QuadElem":
        return cls(0, 1, p)

    # -- accessors ---------------------------------------------------------

    @property
    def a(self) -> Fraction:
        return Fraction(self._an, self._d)

    @property
    def b(self) -> Fraction:
        return Fraction(self._bn, self._d)

    @property
    def is_rational(self) -> bool:
        return self._bn == 0

    def height(self) -> int:
        return max(rational_height(self.a), rational_height(self.b))

    def conjugate(self) -> "QuadElem":
        return QuadElem._raw(self._an, -self._bn, self._d, self.p)

    def norm(self) -> Fraction:
        """Field norm ``a^2 - p b^2``."""
        return Fraction(self._an * self._an - self.p * self._bn * self._bn, self._d * self._d)

    def sign(self) -> int:
        return quad_sign(self)

    # -- arithmetic --------------------------------------------------------

    def _coerce(self, other):
        if isinstance(other, QuadElem):
            if other.p != self.p:
                raise CarrierMismatchError(
                    f"cannot combine elements of Q(sqrt {self.p}) and Q(sqrt {other.p})"
                )
            return other._an, other._bn, other._d
        if isinstance(other, Fraction):
            return other.numerator, 0, other.denominator
        if isinstance(other, int) and not isinstance(other, bool):
            return other, 0, 1
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        an, bn, d = o
        if d == self._d:
            return QuadElem._raw(self._an + an, self._bn + bn, d, self.p)
        return QuadElem._raw(self._an * d + an * self._d, self._bn * d + bn * self._d, self._d * d, self.p)

    __radd__ = __add__

    def __neg__(self):
        return QuadElem._raw(-self._an, -self._bn, self._d, self.p)

    def __pos__(self):
        return self

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        an, bn, d = o
        return QuadElem._raw(self._an * d - an * self._d, self._bn * d - bn * self._d, self._d * d, self.p)

    def __rsub__(self, other):
        return (-self).__add__(other)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        an, bn, d = o
        a1, b1 = self._an, self._bn
        return QuadElem._raw(a1 * an + self.p * b1 * bn, a1 * bn + an * b1, self._d * d, self.p)

    __rmul__ = __mul__

    def inverse(self) -> "QuadElem":
        if self._an == 0 and self._bn == 0:
            raise ZeroDivisionError("inverse of zero in Q(sqrt p)")
        n = self._an * self._an - self.p * self._bn * self._bn
        return QuadElem._raw(self._d * self._an, -self._d * self._bn, n, self.p)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * QuadElem._raw(*o, self.p).inverse()

    def __rtruediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return QuadElem._raw(*o, self.p) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            return NotImplemented
        result = QuadElem._raw(1, 0, 1, self.p)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __abs__(self):
        return -self if self.sign() < 0 else self

    # -- comparison --------------------------------------------------------

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        an, bn, d = o
        return self._an * d == an * self._d and self._bn * d == bn * self._d

    def __hash__(self):
        if self._bn == 0:
            return hash(Fraction(self._an, self._d))
        return hash((self._an, self._bn, self._d, self.p))

    def _cmp(self, other):
        o = self._coerce(other)
        if o is None:
            return None
        return (self - QuadElem._raw(*o, self.p)).sign()

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is None else c >= 0

    def __bool__(self):
        return self._an != 0 or self._bn != 0

    def __float__(self):
        # display only; never used in a verdict
        return self._an / self._d + self._bn / self._d * self.p ** 0.5

    # -- text --------------------------------------------------------------

    def __str__(self):
        b = self.b
        op = "-" if b < 0 else "+"
        return f"{fmt_rational(self.a)} {op} {fmt_rational(abs(b))}*sqrt({self.p})"

    def __repr__(self):
        return f"QuadElem({str(self)!r})"


_RAT = r"[+-]?\d+(?:/\d+)?"
_QUAD_RE = re.compile(
    rf"^\s*(?:(?P<a>{_RAT})\s*)?(?:(?P<op>[+-])?\s*(?:(?P<b>\d+(?:/\d+)?)\s*\*\s*)?sqrt\(\s*(?P<p>\d+)\s*\))?\s*$"
)


def parse_rational(text: str) -> Fraction:
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise DomainError(f"not a rational number: {text!r}") from exc


def parse_quad(text: str, p: int) -> QuadElem:
    """Parse ``"a"``, ``"b*sqrt(p)"``, ``"sqrt(p)"`` or ``"a + b*sqrt(p)"``.

    The radicand written in the text must equal ``p``.
    """
    m = _QUAD_RE.match(text)
    if not m or (m.group("a") is None and m.group("p") is None):
        raise DomainError(f"cannot parse {text!r} as an element of Q(sqrt {p})")
    a = Fraction(m.group("a")) if m.group("a") else Fraction(0)
    b = Fraction(0)
    if m.group("p") is not None:
        if int(m.group("p")) != p:
            raise CarrierMismatchError(f"{text!r} is not written over sqrt({p})")
        b = Fraction(m.group("b")) if m.group("b") else Fraction(1)
        if m.group("op") == "-":
            b = -b
        elif m.group("op") is None and m.group("a") is not None:
            raise DomainError(f"missing operator in {text!r}")
    return QuadElem(a, b, p)


def quad_mul(x: QuadElem, y: QuadElem) -> QuadElem:
    """Product in Q(sqrt p): ``(a1 a2 + p b1 b2) + (a1 b2 + a2 b1) sqrt p``."""
    if x.p != y.p:
        raise CarrierMismatchError(f"cannot multiply elements of Q(sqrt {x.p}) and Q(sqrt {y.p})")
    return x * y


def quad_sign(x: QuadElem) -> int:
    """Exact sign of ``a + b*sqrt(p)``.

    When ``a`` and ``b`` do not have opposite signs the answer is immediate;
    otherwise it is ``sign(a) * sign(a^2 - p b^2)``.
    """
    sa = _int_sign(x._an)
    sb = _int_sign(x._bn)
    if sa == 0:
        return sb
    if sb == 0 or sa == sb:
        return sa
    return sa * _int_sign(x._an * x._an - x.p * x._bn * x._bn)


def exact_sign(value) -> int:
    """Sign of an exact scalar (int, Fraction or QuadElem)."""
    if isinstance(value, QuadElem):
        return quad_sign(value)
    return (value > 0) - (value < 0)


# ---------------------------------------------------------------------------
# Continued fractions of sqrt p
# ---------------------------------------------------------------------------


def continued_fraction_sqrt(p: int, n: int) -> list[int]:
    """First ``n`` partial quotients of sqrt p (periodic after the first)."""
    _require_radicand(p)
    a0 = isqrt(p)
    m, d, a = 0, 1, a0
    out = []
    for _ in range(n):
        out.append(a)
        m = d * a - m
        d = (p - m * m) // d
        a = (a0 + m) // d
    return out


def sqrt_convergents(p: int, k: int) -> list[Fraction]:
    """The first ``k`` continued-fraction convergents ``h_n / k_n`` of sqrt p."""
    _require_radicand(p)
    if isinstance(k, bool) or not isinstance(k, int) or k < 1:
        raise DomainError(f"convergent count must be a positive integer, got {k!r}")
    h_prev, h = 0, 1
    k_prev, kk = 1, 0
    out = []
    for a in continued_fraction_sqrt(p, k):
        h_prev, h = h, a * h + h_prev
        k_prev, kk = kk, a * kk + k_prev
        out.append(Fraction(h, kk))
    return out


def sqrt_within(p: int, r, eps) -> bool:
    """Decide ``|r - sqrt(p)| < eps`` exactly, by squaring the bracket ends."""
    r = as_fraction(r)
    eps = as_fraction(eps)
    if eps <= 0:
        return False
    lo, hi = r - eps, r + eps
    return (lo < 0 or lo * lo < p) and hi > 0 and hi * hi > p


# ---------------------------------------------------------------------------
# Gaussian rationals
# ---------------------------------------------------------------------------


class GaussianRational:
    """``re + im*i`` with rational parts."""

    __slots__ = ("re", "im")

    def __init__(self, re: Rational = 0, im: Rational = 0):
        self.re = as_fraction(re)
        self.im = as_fraction(im)

    @staticmethod
    def _coerce(other):
        if isinstance(other, GaussianRational):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return GaussianRational(other, 0)
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re + o.re, self.im + o.im)

    __radd__ = __add__

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re - o.re, self.im - o.im)

    def __rsub__(self, other):
        return (-self) + other

    def __neg__(self):
        return GaussianRational(-self.re, -self.im)

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return GaussianRational(self.re * o.re - self.im * o.im, self.re * o.im + self.im * o.re)

    __rmul__ = __mul__

    def conjugate(self) -> "GaussianRational":
        return GaussianRational(self.re, -self.im)

    def norm(self) -> Fraction:
        return self.re * self.re + self.im * self.im

    def inverse(self) -> "GaussianRational":
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("inverse of zero in Q(i)")
        return GaussianRational(self.re / n, -self.im / n)

    def __truediv__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self * o.inverse()

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.re == o.re and self.im == o.im

    def __hash__(self):
        if self.im == 0:
            return hash(self.re)
        return hash((self.re, self.im))

    def __bool__(self):
        return bool(self.re) or bool(self.im)

    def height(self) -> int:
        return max(rational_height(self.re), rational_height(self.im))

    def __str__(self):
        op = "-" if self.im < 0 else "+"
        return f"{fmt_rational(self.re)} {op} {fmt_rational(abs(self.im))}*i"

    def __repr__(self):
        return f"GaussianRational({str(self)!r})"


# ---------------------------------------------------------------------------
# Q[t]
# ---------------------------------------------------------------------------


class PolyQ:
    """Polynomial over Q, coefficients stored lowest degree first, no trailing zeros."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[Rational] = ()):
        cs = [as_fraction(c) for c in coeffs]
        while cs and cs[-1] == 0:
            cs.pop()
        self.coeffs = tuple(cs)

    @classmethod
    def t(cls) -> "PolyQ":
        return cls((0, 1))

    @classmethod
    def constant(cls, c: Rational) -> "PolyQ":
        return cls((c,))

    @property
    def degree(self) -> int:
        """Degree, with -1 for the zero polynomial."""
        return len(self.coeffs) - 1

    @staticmethod
    def _coerce(other):
        if isinstance(other, PolyQ):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return PolyQ((other,))
        return None

    def __add__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        n = max(len(self.coeffs), len(o.coeffs))
        a = self.coeffs + (Fraction(0),) * (n - len(self.coeffs))
        b = o.coeffs + (Fraction(0),) * (n - len(o.coeffs))
        return PolyQ(x + y for x, y in zip(a, b))

    __radd__ = __add__

    def __neg__(self):
        return PolyQ(-c for c in self.coeffs)

    def __sub__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if not self.coeffs or not o.coeffs:
            return PolyQ()
        out = [Fraction(0)] * (len(self.coeffs) + len(o.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(o.coeffs):
                    out[i + j] += a * b
        return PolyQ(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if not isinstance(n, int) or n < 0:
            raise ValueError("polynomials only take non-negative integer powers")
        out, base = PolyQ((1,)), self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def __call__(self, c):
        return poly_eval(self, c)

    def derivative(self) -> "PolyQ":
        return poly_derivative(self)

    def __eq__(self, other):
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self.coeffs == o.coeffs

    def __hash__(self):
        if len(self.coeffs) <= 1:
            return hash(self.coeffs[0] if self.coeffs else Fraction(0))
        return hash(self.coeffs)

    def __bool__(self):
        return bool(self.coeffs)

    def height(self) -> int:
        return max((rational_height(c) for c in self.coeffs), default=1)

    def __str__(self):
        if not self.coeffs:
            return "0/1"
        terms = []
        for i, c in enumerate(self.coeffs):
            if c == 0:
                continue
            s = fmt_rational(c)
            terms.append(s if i == 0 else (f"{s}*t" if i == 1 else f"{s}*t^{i}"))
        return " + ".join(terms)

    def __repr__(self):
        return f"PolyQ({[fmt_rational(c) for c in self.coeffs]})"


def poly_derivative(f: PolyQ) -> PolyQ:
    return PolyQ(i * c for i, c in enumerate(f.coeffs) if i)


def poly_eval(f: PolyQ, c) -> Fraction:
    """Horner evaluation at a rational point."""
    c = as_fraction(c)
    acc = Fraction(0)
    for coef in reversed(f.coeffs):
        acc = acc * c + coef
    return acc
