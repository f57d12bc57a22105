"""Exact arithmetic in real quadratic fields Q(sqrt(D)).

A :class:`QuadSurd` is stored as an integer triple ``(p, q, r)`` meaning
``(p + q*sqrt(D))/r`` with ``r > 0`` and ``gcd(p, q, r) == 1``, so two values
in the same field are equal exactly when their triples are equal.  Every
comparison reduces to :func:`QuadSurd.sign`, which never touches floating
point.  Rationals embed as ``q == 0`` and mix freely with surds of any field.

The default radicand is 26565; other fields (5, 2, ...) are runtime choices.
Mixed-field arithmetic is rejected, but :func:`cross_field_cmp` decides
order between two surds from different fields exactly.
"""

from __future__ import annotations

import math
import re
from fractions import Fraction
from typing import Union

DEFAULT_DISC = 26565

Rationalish = Union[int, Fraction]


class FieldMismatch(ValueError):
    """Arithmetic attempted between surds over different radicands."""


class DivByZero(ZeroDivisionError):
    """Division by an exactly-zero surd."""


def _is_perfect_square(n: int) -> bool:
    return n >= 0 and math.isqrt(n) ** 2 == n


class QuadSurd:
    """An exact element p/r + (q/r)*sqrt(disc) of a real quadratic field."""

    __slots__ = ("p", "q", "r", "disc")

    def __init__(self, p: int, q: int, r: int = 1, disc: int = DEFAULT_DISC):
        if r == 0:
            raise DivByZero("zero denominator")
        if disc <= 0 or _is_perfect_square(disc):
            raise ValueError(f"radicand must be positive and not a perfect square: {disc}")
        if r < 0:
            p, q, r = -p, -q, -r
        g = math.gcd(p, q, r)
        if g > 1:
            p, q, r = p // g, q // g, r // g
        object.__setattr__(self, "p", p)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "r", r)
        object.__setattr__(self, "disc", disc)

    def __setattr__(self, name, value):
        raise AttributeError("QuadSurd is immutable")

    def __reduce__(self):
        # slots + the immutability guard break default pickling; rebuild
        # through the constructor instead
        return (QuadSurd, (self.p, self.q, self.r, self.disc))

    # -- constructors -------------------------------------------------

    @classmethod
    def from_rational(cls, value: Rationalish, disc: int = DEFAULT_DISC) -> QuadSurd:
        f = Fraction(value)
        return cls(f.numerator, 0, f.denominator, disc)

    @classmethod
    def sqrt_disc(cls, disc: int = DEFAULT_DISC) -> QuadSurd:
        return cls(0, 1, 1, disc)

    # -- field components ----------------------------------------------

    @property
    def rat(self) -> Fraction:
        """Rational part p/r."""
        return Fraction(self.p, self.r)

    @property
    def coef(self) -> Fraction:
        """Coefficient q/r of sqrt(disc)."""
        return Fraction(self.q, self.r)

    @property
    def is_rational(self) -> bool:
        return self.q == 0

    def as_fraction(self) -> Fraction:
        if self.q != 0:
            raise ValueError(f"{self} is irrational")
        return Fraction(self.p, self.r)

    # -- coercion ------------------------------------------------------

    def _coerce(self, other) -> "QuadSurd | None":
        if isinstance(other, QuadSurd):
            if other.disc != self.disc and self.q != 0 and other.q != 0:
                raise FieldMismatch(f"sqrt({self.disc}) vs sqrt({other.disc})")
            if other.disc != self.disc:
                # one side is rational; re-embed it in the other field
                if other.q == 0:
                    return QuadSurd(other.p, 0, other.r, self.disc)
                return other
            return other
        if isinstance(other, (int, Fraction)):
            return QuadSurd.from_rational(other, self.disc)
        return None

    # -- arithmetic ----------------------------------------------------

    def __add__(self, other) -> QuadSurd:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.disc != self.disc:  # self is rational, adopt other's field
            return o + QuadSurd(self.p, 0, self.r, o.disc)
        return QuadSurd(self.p * o.r + o.p * self.r,
                        self.q * o.r + o.q * self.r,
                        self.r * o.r, self.disc)

    __radd__ = __add__

    def __neg__(self) -> QuadSurd:
        return QuadSurd(-self.p, -self.q, self.r, self.disc)

    def __sub__(self, other) -> QuadSurd:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return self + (-o)

    def __rsub__(self, other) -> QuadSurd:
        return (-self) + other

    def __mul__(self, other) -> QuadSurd:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.disc != self.disc:
            return o * QuadSurd(self.p, 0, self.r, o.disc)
        return QuadSurd(self.p * o.p + self.q * o.q * self.disc,
                        self.p * o.q + self.q * o.p,
                        self.r * o.r, self.disc)

    __rmul__ = __mul__

    def inverse(self) -> QuadSurd:
        """Exact 1/x via the conjugate; raises DivByZero on zero."""
        if self.p == 0 and self.q == 0:
            raise DivByZero("inverse of zero")
        # 1/((p + q*sqrt(D))/r) = r*(p - q*sqrt(D)) / (p^2 - q^2*D)
        norm = self.p * self.p - self.q * self.q * self.disc
        return QuadSurd(self.r * self.p, -self.r * self.q, norm, self.disc)

    def __truediv__(self, other) -> QuadSurd:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        if o.disc != self.disc:
            return QuadSurd(self.p, 0, self.r, o.disc) / o
        return self * o.inverse()

    def __rtruediv__(self, other) -> QuadSurd:
        return self.inverse() * other

    def __pow__(self, n: int) -> QuadSurd:
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        out = QuadSurd(1, 0, 1, self.disc)
        base = self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    def conjugate(self) -> QuadSurd:
        return QuadSurd(self.p, -self.q, self.r, self.disc)

    # -- sign and order --------------------------------------------------

    def sign(self) -> int:
        """Exact sign in {-1, 0, +1}, decided by integer arithmetic only."""
        p, q = self.p, self.q
        if q == 0:
            return (p > 0) - (p < 0)
        if p == 0:
            return 1 if q > 0 else -1
        if p > 0 and q > 0:
            return 1
        if p < 0 and q < 0:
            return -1
        # opposite signs: compare p^2 against q^2 * D
        lhs, rhs = p * p, q * q * self.disc
        if p > 0:  # q < 0: positive iff p^2 > q^2 D
            return (lhs > rhs) - (lhs < rhs)
        return (rhs > lhs) - (rhs < lhs)

    def _cmp(self, other) -> int:
        o = self._coerce(other)
        if o is None:
            return NotImplemented
        return (self - o).sign()

    def __eq__(self, other) -> bool:
        if isinstance(other, QuadSurd) and other.disc == self.disc:
            return (self.p, self.q, self.r) == (other.p, other.q, other.r)
        c = self._cmp(other)
        return False if c is NotImplemented else c == 0

    def __hash__(self):
        if self.q == 0:
            return hash(Fraction(self.p, self.r))
        return hash((self.p, self.q, self.r, self.disc))

    def __lt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c < 0

    def __le__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c <= 0

    def __gt__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c > 0

    def __ge__(self, other):
        c = self._cmp(other)
        return NotImplemented if c is NotImplemented else c >= 0

    def __bool__(self) -> bool:
        return not (self.p == 0 and self.q == 0)

    def __abs__(self) -> QuadSurd:
        return -self if self.sign() < 0 else self

    # -- rendering --------------------------------------------------------

    def __repr__(self) -> str:
        return f"QuadSurd({self.p}, {self.q}, {self.r}, disc={self.disc})"

    def __str__(self) -> str:
        return self.canonical_text()

    def canonical_text(self) -> str:
        """Canonical exact form ``(p + q*sqrt(D))/r``; round-trips via parse_surd."""
        sign = "+" if self.q >= 0 else "-"
        return f"({self.p} {sign} {abs(self.q)}*sqrt({self.disc}))/{self.r}"

    def to_decimal(self, digits: int) -> str:
        """Correctly rounded decimal string with `digits` fractional digits."""
        if digits < 1:
            raise ValueError("digits must be >= 1")
        if self.q == 0:
            return _round_fraction_decimal(Fraction(self.p, self.r), digits)
        # bracket value * 10^(digits+guard) between integers, widen the guard
        # until the rounded result is unambiguous (irrational: no exact ties)
        guard = 8
        while True:
            m = digits + guard
            scale = 10 ** m
            root_lo = math.isqrt(self.disc * scale * scale)
            if self.q > 0:
                num_lo = self.p * scale + self.q * root_lo
                num_hi = num_lo + self.q
            else:
                num_hi = self.p * scale + self.q * root_lo
                num_lo = num_hi + self.q
            # v*10^digits is bracketed by num_lo/(r*10^g) .. num_hi/(r*10^g)
            den = self.r * 10 ** guard
            two_lo = (2 * num_lo) // den
            two_hi = (2 * num_hi) // den
            if two_lo == two_hi:
                scaled = (two_lo + 1) // 2  # round-half never exact here
                return _format_scaled(scaled, digits)
            guard *= 2
            if guard > 4096:  # pragma: no cover - would mean a rational leak
                raise AssertionError("decimal rounding failed to converge")

    def __float__(self) -> float:
        # Fraction handles components too large for int.__truediv__
        return float(Fraction(self.p, self.r)) + float(Fraction(self.q, self.r)) * math.sqrt(self.disc)


def _format_scaled(scaled: int, digits: int) -> str:
    neg = scaled < 0
    scaled = abs(scaled)
    whole, frac = divmod(scaled, 10 ** digits)
    out = f"{whole}.{str(frac).zfill(digits)}"
    return "-" + out if neg else out


def _round_fraction_decimal(f: Fraction, digits: int) -> str:
    scale = 10 ** digits
    scaled = f * scale
    whole = scaled.numerator // scaled.denominator
    rem = scaled - whole
    if 2 * rem > 1 or (2 * rem == 1 and whole % 2 == 1):  # half-even
        whole += 1
    return _format_scaled(whole, digits)


_SURD_RE = re.compile(
    r"^\s*\(\s*(-?\d+)\s*([+-])\s*(\d+)\s*\*\s*sqrt\s*\(\s*(\d+)\s*\)\s*\)\s*/\s*(\d+)\s*$"
)


def parse_surd(text: str, disc: int | None = None) -> QuadSurd:
    """Parse the canonical ``(p + q*sqrt(D))/r`` form (exact round-trip).

    Plain integers, fractions ``a/b`` and finite decimals are accepted as
    rational embeddings; `disc` fixes their field (default 26565).
    """
    m = _SURD_RE.match(text)
    if m:
        p, sgn, q, d, r = m.groups()
        q = int(q) if sgn == "+" else -int(q)
        parsed = QuadSurd(int(p), q, int(r), int(d))
        if disc is not None and parsed.disc != disc and parsed.q != 0:
            raise FieldMismatch(f"expected sqrt({disc}), got sqrt({parsed.disc})")
        return parsed
    try:
        f = Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise ValueError(f"not a surd or rational literal: {text!r}") from exc
    return QuadSurd.from_rational(f, disc if disc is not None else DEFAULT_DISC)


def cross_field_cmp(x: QuadSurd, y: QuadSurd) -> int:
    """Exact sign of x - y even when x and y live over different radicands.

    Writes x - y = A - B with A = x - rat(y) in x's field and B = coef(y) *
    sqrt(disc_y); when the signs of A and B do not settle it, compares A^2
    with B^2 (a rational), which stays inside x's field.
    """
    if x.disc == y.disc or x.q == 0 or y.q == 0:
        return (x - y).sign()
    a = x - y.rat
    sa = a.sign()
    sb = (y.q > 0) - (y.q < 0)
    if sa != sb:
        return sa if sa != 0 else -sb
    # same nonzero sign: |x - y| has the sign of sa * (A^2 - B^2)
    diff = a * a - Fraction(y.q * y.q * y.disc, y.r * y.r)
    return sa * diff.sign()


# spec-facing operation aliases

def qs_add(x: QuadSurd, y: QuadSurd) -> QuadSurd:
    return x + y


def qs_sub(x: QuadSurd, y: QuadSurd) -> QuadSurd:
    return x - y


def qs_mul(x: QuadSurd, y: QuadSurd) -> QuadSurd:
    return x * y


def qs_div(x: QuadSurd, y: QuadSurd) -> QuadSurd:
    if not y:
        raise DivByZero("division by zero surd")
    return x / y


def qs_sign(x: QuadSurd) -> int:
    return x.sign()


def qs_to_decimal(x: QuadSurd, digits: int) -> str:
    return x.to_decimal(digits)
