"""Continued-fraction machinery: convergents, exact evaluation, reversal,
Perron products and the Dirichlet-spectrum transforms.

Finite words evaluate to `Fraction`; eventually-periodic expansions evaluate
to :class:`~f4cantor.surd.QuadSurd` by solving the Moebius fixed-point
quadratic of the period and folding the preperiod through its Moebius map.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Sequence

from .surd import QuadSurd


class EmptyWord(ValueError):
    pass


class DigitRange(ValueError):
    """A partial quotient lies outside the supported digit set."""


class MalformedPeriod(ValueError):
    """Period whose fixed point is not a positive quadratic irrational."""


class DomainError(ValueError):
    pass


class InsufficientDigits(ValueError):
    """A finite word is too short for the requested index."""


@dataclass(frozen=True)
class CFWord:
    """Finite continued fraction [x0; x1, ..., xn].

    The head may be 0 (reversal values [0; xn, ..., x0]); every later
    quotient must be >= 1.
    """

    digits: tuple[int, ...]

    def __post_init__(self):
        if not self.digits:
            raise EmptyWord("continued fraction word must be non-empty")
        if self.digits[0] < 0 or any(d < 1 for d in self.digits[1:]):
            raise DigitRange(f"invalid partial quotients: {self.digits}")

    @property
    def head(self) -> int:
        return self.digits[0]

    @property
    def tail(self) -> tuple[int, ...]:
        return self.digits[1:]

    def __len__(self) -> int:
        return len(self.digits)

    def __str__(self) -> str:
        return format_word(self)


@dataclass(frozen=True)
class PeriodicCF:
    """Eventually periodic expansion: preperiod digits, then a repeating block.

    An empty preperiod denotes the purely periodic value, e.g.
    ``PeriodicCF((), (1,))`` is the golden ratio.
    """

    preperiod: tuple[int, ...]
    period: tuple[int, ...]

    def __post_init__(self):
        if not self.period:
            raise MalformedPeriod("period must be non-empty")
        if any(d < 1 for d in self.period):
            raise DigitRange(f"period digits must be >= 1: {self.period}")
        if self.preperiod and (self.preperiod[0] < 0 or any(d < 1 for d in self.preperiod[1:])):
            raise DigitRange(f"invalid preperiod: {self.preperiod}")

    def digit_at(self, i: int) -> int:
        if i < 0:
            raise IndexError(i)
        if i < len(self.preperiod):
            return self.preperiod[i]
        return self.period[(i - len(self.preperiod)) % len(self.period)]

    def prefix(self, n: int) -> tuple[int, ...]:
        return tuple(self.digit_at(i) for i in range(n))

    def __str__(self) -> str:
        return format_word(self)


@dataclass(frozen=True)
class ConvergentSeq:
    """Convergent table p_k/q_k of a finite word, with the standard seeds
    p_{-1}=1, q_{-1}=0, p_0=x0, q_0=1."""

    digits: tuple[int, ...]
    pairs: tuple[tuple[int, int], ...]

    def p(self, k: int) -> int:
        return 1 if k == -1 else self.pairs[k][0]

    def q(self, k: int) -> int:
        return 0 if k == -1 else self.pairs[k][1]


def fold_matrix(digits: Iterable[int]) -> tuple[int, int, int, int]:
    """Product of [[d,1],[1,0]] over the digits; identity for no digits."""
    a, b, c, d = 1, 0, 0, 1
    for x in digits:
        a, b, c, d = a * x + b, a, c * x + d, c
    return a, b, c, d


def apply_moebius(m: tuple[int, int, int, int], t: QuadSurd) -> QuadSurd:
    a, b, c, d = m
    return (t * a + b) / (t * c + d)


def apply_moebius_fraction(m: tuple[int, int, int, int], t: Fraction) -> Fraction:
    a, b, c, d = m
    return (a * t + b) / (c * t + d)


def convergents(w: CFWord) -> ConvergentSeq:
    pairs = []
    p_prev, q_prev = 1, 0
    p, q = w.digits[0], 1
    pairs.append((p, q))
    for a in w.digits[1:]:
        p, p_prev = a * p + p_prev, p
        q, q_prev = a * q + q_prev, q
        pairs.append((p, q))
    return ConvergentSeq(w.digits, tuple(pairs))


def eval_finite(w: CFWord) -> Fraction:
    seq = convergents(w)
    p, q = seq.pairs[-1]
    return Fraction(p, q)


def epsilon_seq(w: CFWord) -> list[Fraction]:
    """The ratios eps_k = q_{k-1}/q_k; eps_k is in [1/5, 1] for k >= 1
    whenever the quotients stay in {1,2,3,4}."""
    if any(d not in (1, 2, 3, 4) for d in w.digits):
        raise DigitRange(f"quotients must lie in 1..4: {w.digits}")
    seq = convergents(w)
    return [Fraction(seq.q(k - 1), seq.q(k)) for k in range(len(w.digits))]


def _square_free_split(n: int) -> tuple[int, int]:
    """n = f^2 * d with d square-free; exact for n < 10^18."""
    if n <= 0:
        raise ValueError("positive integer required")
    f, d = 1, 1
    m = n
    p = 2
    while p * p <= m and p <= 1_000_000:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            f *= p ** (e // 2)
            if e % 2:
                d *= p
        p += 1 if p == 2 else 2
    if m > 1:
        r = math.isqrt(m)
        if r * r == m:
            f *= r
        elif m < 10 ** 18:
            d *= m  # no prime factor <= 1e6, so m is square-free below 1e18
        else:
            raise ValueError(f"cannot certify square-free part of {n}")
    return f, d


def eval_periodic(pcf: PeriodicCF) -> QuadSurd:
    """Exact value as a QuadSurd whose radicand is square-free.

    The purely periodic tail t solves c*t^2 + (d-a)*t - b = 0 for the period
    matrix [[a,b],[c,d]]; the positive root is unique because -b/c < 0.
    """
    a, b, c, d = fold_matrix(pcf.period)
    disc_full = (d - a) * (d - a) + 4 * b * c
    if disc_full <= 0:
        raise MalformedPeriod(f"non-real fixed point for period {pcf.period}")
    f, d0 = _square_free_split(disc_full)
    if d0 == 1:
        raise MalformedPeriod(f"rational fixed point for period {pcf.period}")
    t = QuadSurd(a - d, f, 2 * c, d0)
    if t.sign() <= 0:  # unreachable for digits >= 1
        raise MalformedPeriod(f"non-positive fixed point for period {pcf.period}")
    if pcf.preperiod:
        t = apply_moebius(fold_matrix(pcf.preperiod), t)
    return t


def reverse_star(w: CFWord, n: int) -> CFWord:
    """The reversal value word [0; x_n, x_{n-1}, ..., x_0]."""
    if not 0 <= n < len(w.digits):
        raise IndexError(f"index {n} outside word of length {len(w.digits)}")
    return CFWord((0,) + tuple(reversed(w.digits[: n + 1])))


def _reversed_factor(digits: Sequence[int], n: int) -> Fraction:
    return eval_finite(CFWord(tuple(digits[n::-1])))


def perron_rho_n(w: CFWord | PeriodicCF, n: int, depth: int | None = None):
    """The Perron product [x_n; x_{n-1},...,x_0] * [x_{n+1}; x_{n+2}, ...].

    Finite words: the second factor is truncated after `depth` digits (all
    remaining digits when `depth` is None); the result is a Fraction.

    Periodic words with ``depth=None``: both factors are evaluated for the
    bi-infinite periodic extension (the junction-family limit value), and a
    QuadSurd is returned; `n` must lie inside the periodic part.
    """
    if n < 0:
        raise IndexError(n)
    if isinstance(w, CFWord):
        digits = w.digits
        if n + 1 >= len(digits):
            raise InsufficientDigits(f"need a digit after index {n}")
        if any(d < 1 for d in digits):
            raise DigitRange("Perron reversal needs all quotients >= 1")
        first = _reversed_factor(digits, n)
        stop = len(digits) if depth is None else min(len(digits), n + 1 + depth)
        second = eval_finite(CFWord(tuple(digits[n + 1: stop])))
        return first * second
    if depth is not None:
        raise ValueError("depth only applies to finite words")
    if n < len(w.preperiod):
        raise IndexError("junction limit requires n inside the periodic part")
    plen = len(w.period)
    back = tuple(w.digit_at(n - i) for i in range(plen))
    fwd = tuple(w.digit_at(n + 1 + i) for i in range(plen))
    return eval_periodic(PeriodicCF((), back)) * eval_periodic(PeriodicCF((), fwd))


def psi_of_t(w: CFWord, t) -> Fraction:
    """Smallest ||q * alpha|| over 1 <= q <= t, via the convergent bracket
    q_n <= t < q_{n+1} (alpha is the exact value of the finite word)."""
    t = Fraction(t)
    if t < 1:
        raise DomainError(f"t must be >= 1, got {t}")
    seq = convergents(w)
    n = None
    for k in range(len(seq.pairs)):
        if seq.q(k) <= t:
            n = k
        else:
            break
    if n is None or n + 1 >= len(seq.pairs) or seq.q(n + 1) <= t:
        raise InsufficientDigits(f"word too short to bracket t={t}")
    alpha_next = eval_finite(CFWord(w.digits[n + 1:]))
    return 1 / (seq.q(n) * alpha_next + seq.q(n - 1))


def dirichlet_d(rho):
    """Dirichlet constant from a Perron limsup: d = 1/(1 + 1/rho)."""
    return 1 / (1 + 1 / rho)


def delta_from_mu(mu):
    """delta = mu/(1 + mu)."""
    return mu / (1 + mu)


# -- text syntax -------------------------------------------------------------

def format_word(w: CFWord | PeriodicCF) -> str:
    """"[4;3,1,4]" for finite words, "[4;3,(1,4,1,4,1,3)]" for periodic ones;
    a purely periodic value renders as "[(1,2)]"."""
    if isinstance(w, CFWord):
        if len(w.digits) == 1:
            return f"[{w.digits[0]}]"
        return f"[{w.digits[0]};{','.join(map(str, w.digits[1:]))}]"
    per = f"({','.join(map(str, w.period))})"
    if not w.preperiod:
        return f"[{per}]"
    head, *rest = w.preperiod
    if rest:
        return f"[{head};{','.join(map(str, rest))},{per}]"
    return f"[{head};{per}]"


def parse_word(text: str) -> CFWord | PeriodicCF:
    """Inverse of :func:`format_word` (exact round-trip)."""
    s = text.strip()
    if not (s.startswith("[") and s.endswith("]")):
        raise ValueError(f"malformed word: {text!r}")
    body = s[1:-1].strip()
    if not body:
        raise EmptyWord(text)
    period: tuple[int, ...] | None = None
    if "(" in body:
        open_i = body.index("(")
        if not body.endswith(")"):
            raise ValueError(f"malformed period in {text!r}")
        period = tuple(int(x) for x in body[open_i + 1: -1].split(","))
        body = body[:open_i].rstrip().rstrip(",").rstrip(";").strip()
    if body:
        if ";" in body:
            head_s, rest = body.split(";", 1)
            digits = (int(head_s),) + (tuple(int(x) for x in rest.split(",")) if rest else ())
        else:
            digits = (int(body),)
    else:
        digits = ()
    if period is not None:
        return PeriodicCF(digits, period)
    if not digits:
        raise EmptyWord(text)
    return CFWord(digits)
