from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from f4cantor.cf import (CFWord, DigitRange, DomainError, InsufficientDigits,
                         PeriodicCF, convergents, delta_from_mu, dirichlet_d,
                         epsilon_seq, eval_finite, eval_periodic, fold_matrix,
                         format_word, parse_word, perron_rho_n, psi_of_t,
                         reverse_star)
from f4cantor.surd import QuadSurd


def nested_eval(digits):
    """Independent evaluation: fold 1/x from the right with Fractions."""
    acc = Fraction(digits[-1])
    for d in reversed(digits[:-1]):
        acc = d + 1 / acc
    return acc


def test_fibonacci_convergent():
    assert eval_finite(CFWord((1, 1, 1, 1, 1))) == Fraction(8, 5)


def test_four_three():
    assert eval_finite(CFWord((4, 3))) == Fraction(13, 3)


def test_q_sequence_by_independent_recurrence():
    word = (4, 3, 1, 4, 1, 4, 1, 3)
    seq = convergents(CFWord(word))
    # oracle: the nested-fraction value fixes the final pair, and the
    # recurrence re-run fixes the rest
    assert Fraction(*seq.pairs[-1]) == nested_eval(word)
    qs = [q for _, q in seq.pairs]
    expect = []
    q_prev, q = 0, 1
    for a in word[1:]:
        expect.append(q)
        q, q_prev = a * q + q_prev, q
    expect.append(q)
    assert qs == expect == [1, 3, 4, 19, 23, 111, 134, 513]


digit_words = st.lists(st.integers(1, 4), min_size=1, max_size=12).map(tuple)


@given(digit_words)
def test_convergent_determinant_identity(word):
    seq = convergents(CFWord(word))
    for k in range(len(word)):
        assert seq.p(k) * seq.q(k - 1) - seq.p(k - 1) * seq.q(k) == (-1) ** (k - 1)


def test_epsilon_basic():
    assert epsilon_seq(CFWord((1, 1, 1))) == [0, 1, Fraction(1, 2)]


@given(digit_words)
def test_epsilon_in_fifth_to_one(word):
    eps = epsilon_seq(CFWord(word))
    assert all(Fraction(1, 5) <= e <= 1 for e in eps[1:])


def test_epsilon_all_fours():
    eps = epsilon_seq(CFWord((4,) * 12))
    assert all(Fraction(1, 5) <= e <= 1 for e in eps[1:])


def test_epsilon_rejects_digit_range():
    with pytest.raises(DigitRange):
        epsilon_seq(CFWord((4, 5)))


def test_eval_periodic_golden():
    assert eval_periodic(PeriodicCF((), (1,))) == QuadSurd(1, 1, 2, 5)


def test_eval_periodic_root_endpoints():
    lo = eval_periodic(PeriodicCF((4, 3), (1, 4, 1, 4, 1, 3)))
    hi = eval_periodic(PeriodicCF((4, 3), (4, 1, 4, 1, 3, 1)))
    assert lo == QuadSurd(783, 1, 222)
    assert hi == QuadSurd(5501, -1, 1238)


periods = st.lists(st.integers(1, 4), min_size=1, max_size=6).map(tuple)
pres = st.lists(st.integers(1, 4), min_size=0, max_size=4).map(tuple)


@given(pres, periods)
def test_periodic_fixed_point_residual_zero(pre, period):
    pcf = PeriodicCF(pre, period)
    val = eval_periodic(pcf)
    tail = eval_periodic(PeriodicCF((), period))
    a, b, c, d = fold_matrix(period)
    # the defining Moebius fixed-point equation, exactly
    assert tail * (tail * c + d) - (tail * a + b) == QuadSurd(0, 0, 1, tail.disc)
    folded = tail
    for digit in reversed(pre):
        folded = digit + 1 / folded
    assert folded == val


@given(periods, st.integers(0, 5))
def test_period_cyclic_shift_with_preperiod_adjustment(period, k):
    k %= len(period)
    shifted = period[k:] + period[:k]
    direct = eval_periodic(PeriodicCF((), period))
    adjusted = eval_periodic(PeriodicCF(period[:k], shifted))
    assert direct == adjusted


@given(pres, periods, st.integers(1, 5))
def test_prefix_evaluations_alternate_around_periodic_value(pre, period, reps):
    pcf = PeriodicCF(pre, period)
    val = eval_periodic(pcf)
    n = len(pre) + reps * len(period)
    prefix_vals = [eval_finite(CFWord(pcf.prefix(m))) for m in range(1, n + 1)]
    signs = [(QuadSurd.from_rational(v, val.disc) - val).sign() for v in prefix_vals]
    assert 0 not in signs
    assert all(a == -b for a, b in zip(signs, signs[1:]))
    diffs = [abs(QuadSurd.from_rational(v, val.disc) - val) for v in prefix_vals]
    assert all(d1 > d2 for d1, d2 in zip(diffs, diffs[1:]))


def test_reverse_star():
    assert reverse_star(CFWord((4, 3)), 1).digits == (0, 3, 4)
    assert reverse_star(CFWord((4, 3, 1)), 2).digits == (0, 1, 3, 4)
    pal = CFWord((2, 1, 2))
    assert reverse_star(pal, 2).digits == (0,) + pal.digits
    with pytest.raises(IndexError):
        reverse_star(CFWord((4, 3)), 2)


def test_perron_golden_junction():
    rho = perron_rho_n(PeriodicCF((), (1,)), 5)
    assert rho == QuadSurd(3, 1, 2, 5)


def test_perron_mu_bound_product():
    big = eval_periodic(PeriodicCF((), (4, 1, 4, 1, 3, 1)))
    mid = eval_periodic(PeriodicCF((), (3, 1, 4, 1, 4, 1)))
    assert big * mid == QuadSurd(19425, 111, 2030)


def test_perron_finite_truncation():
    w = CFWord((4, 3, 1, 2, 1, 3))
    rho = perron_rho_n(w, 2, depth=2)
    first = nested_eval((1, 3, 4))
    second = nested_eval((2, 1))
    assert rho == first * second
    with pytest.raises(InsufficientDigits):
        perron_rho_n(w, 5)


def brute_psi(alpha: Fraction, t: Fraction) -> Fraction:
    best = None
    q = 1
    while q <= t:
        x = q * alpha
        dist = abs(x - round(x))
        if best is None or dist < best:
            best = dist
        q += 1
    return best


@given(digit_words.filter(lambda w: len(w) >= 4), st.integers(1, 200))
@settings(max_examples=60)
def test_psi_matches_brute_force(word, t):
    w = CFWord(word)
    seq = convergents(w)
    if t >= seq.pairs[-1][1]:  # need q_n <= t < q_{n+1} inside the word
        return
    assert psi_of_t(w, t) == brute_psi(eval_finite(w), Fraction(t))


def test_psi_domain():
    with pytest.raises(DomainError):
        psi_of_t(CFWord((4, 3, 1)), Fraction(1, 2))


def test_dirichlet_transforms():
    rho = QuadSurd(3, 1, 2, 5)
    # 1/(1 + 1/rho) for rho = (3+sqrt5)/2, derived symbolically: (5+sqrt5)/10
    assert dirichlet_d(rho) == QuadSurd(5, 1, 10, 5)
    mu = QuadSurd(19425, 111, 2030)
    assert delta_from_mu(mu) == QuadSurd(44067, 111, 65522)
    # large rho pushes d toward 1
    assert dirichlet_d(QuadSurd.from_rational(10 ** 12)) > QuadSurd.from_rational(
        Fraction(999999, 1000000))


def test_word_syntax_roundtrip():
    for text in ["[4;3,1,4]", "[4;3,(1,4,1,4,1,3)]", "[(1,2)]", "[7]", "[0;3,4]"]:
        assert format_word(parse_word(text)) == text
    w = parse_word("[4;3,(1,4,1,4,1,3)]")
    assert isinstance(w, PeriodicCF)
    assert w.preperiod == (4, 3) and w.period == (1, 4, 1, 4, 1, 3)
    with pytest.raises(ValueError):
        parse_word("4;3")
