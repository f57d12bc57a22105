"""Constructive product decomposition: given a target inside the square of
the root interval, refine a pair of segments whose endpoint products always
bracket the target, then interleave the two digit streams into a single
witness word whose Perron products converge to the target.

The refinement splits whichever factor currently has the larger log-length
(the balance that keeps the other factor wide enough to bridge any gap) and
prefers the left child on ties.  Certified log-thickness > 1 is what
guarantees the `Stuck` escape hatch never fires for targets inside the
product interval.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from . import constants
from .cf import (CFWord, PeriodicCF, convergents, eval_finite, eval_periodic,
                 perron_rho_n)
from .segments import TYPE_TABLE, Segment, root_segment, subdivide
from .surd import DEFAULT_DISC, QuadSurd, cross_field_cmp


class Stuck(RuntimeError):
    """No child of either factor keeps the target inside the product hull;
    would indicate a violated thickness hypothesis."""


class BadCut(ValueError):
    """An interleaving cut landed on a digit 4."""


def product_interval() -> tuple[QuadSurd, QuadSurd]:
    """Endpoints of the full product set: the square of the root interval."""
    root = root_segment()
    return root.lo * root.lo, root.hi * root.hi


def mu_delta_bounds() -> tuple[QuadSurd, QuadSurd]:
    """The spectrum bounds: mu_bound as a product of two periodic values,
    delta = mu/(1+mu); both verified against their closed forms, and
    mu_bound checked below 10 + 6*sqrt(2) across fields."""
    mu = (eval_periodic(PeriodicCF((), (4, 1, 4, 1, 3, 1)))
          * eval_periodic(PeriodicCF((), (3, 1, 4, 1, 4, 1))))
    delta = mu / (1 + mu)
    if delta != constants.DELTA_BOUND:
        raise AssertionError("delta bound does not match its closed form")
    if cross_field_cmp(mu, constants.TEN_PLUS_6_SQRT2) >= 0:
        raise AssertionError("mu bound is not below 10 + 6*sqrt(2)")
    return mu, delta


@dataclass(frozen=True)
class Step:
    """One refinement: which factor split, which child kept (0 = left), and
    the kept child's exact interval plus the product width afterwards."""

    factor: str
    child: int
    type_id: int
    lo: QuadSurd
    hi: QuadSurd
    width: QuadSurd


@dataclass
class ProductState:
    """Current factors, the target, and the refinement history."""

    seg_x: Segment
    seg_y: Segment
    target: QuadSurd
    history: list[Step] = field(default_factory=list)

    @property
    def prod_lo(self) -> QuadSurd:
        return self.seg_x.lo * self.seg_y.lo

    @property
    def prod_hi(self) -> QuadSurd:
        return self.seg_x.hi * self.seg_y.hi

    @property
    def width(self) -> QuadSurd:
        return self.prod_hi - self.prod_lo

    def contains_target(self) -> bool:
        return self.prod_lo <= self.target <= self.prod_hi


def rational_surrogate(x: QuadSurd, digits: int = 55) -> Fraction:
    """Rational stand-in within 10^-digits; used for targets outside the
    working field (their error is far below any reachable interval width)."""
    return Fraction(x.to_decimal(digits))


def _as_target(target) -> QuadSurd:
    if isinstance(target, QuadSurd):
        if target.disc == DEFAULT_DISC:
            return target
        if target.is_rational:
            return QuadSurd(target.p, 0, target.r, DEFAULT_DISC)
        return QuadSurd.from_rational(rational_surrogate(target))
    return QuadSurd.from_rational(Fraction(target))


def _log_longer_is_x(x: Segment, y: Segment) -> bool:
    # |log X| >= |log Y|  <=>  X.hi * Y.lo >= Y.hi * X.lo
    return x.hi * y.lo >= y.hi * x.lo


def _candidate_moves(seg_x: Segment, seg_y: Segment, target: QuadSurd):
    """Hull-preserving refinements of the log-longer factor, left child
    first.  Only the longer factor is split: when the target's true
    factorization lives in this state, the child holding its factor always
    passes the hull test, so an empty result marks a branch that lost the
    target and must be abandoned."""
    factor = "x" if _log_longer_is_x(seg_x, seg_y) else "y"
    seg, other = (seg_x, seg_y) if factor == "x" else (seg_y, seg_x)
    c1, _, c2 = subdivide(seg)
    left, right = (c1, c2) if c1.lo < c2.lo else (c2, c1)
    moves = [(factor, pick, child) for pick, child in enumerate((left, right))
             if child.lo * other.lo <= target <= child.hi * other.hi]
    if len(moves) == 2 and moves[1][2].length < moves[0][2].length:
        # both hulls contain the target: try the shorter child first (faster
        # width decay); exact ties keep the left child first
        moves.reverse()
    return moves


def decompose(target, steps: int, record_widths: bool = False,
              attempt_budget: int | None = None):
    """Refine (seg_x, seg_y) for `steps` single-factor splits, keeping
    target inside [x.lo*y.lo, x.hi*y.hi].

    Hull containment cannot always see which child the target's actual
    factorization lives in, so the search backtracks: a branch whose hull
    loses the target dies and the previous level tries its next candidate.
    Raises Stuck when no hull-preserving path of the requested depth exists
    within the attempt budget.  Returns the final ProductState (with
    per-step widths when requested).
    """
    t = _as_target(target)
    lo, hi = product_interval()
    if not (lo <= t <= hi):
        raise ValueError(f"target {t} outside the product interval")
    budget = attempt_budget if attempt_budget is not None else 200 + 50 * steps
    root = root_segment()
    # path of (seg_x, seg_y, untried candidate moves)
    path: list[tuple[Segment, Segment, list]] = [
        (root, root, _candidate_moves(root, root, t))]
    attempts = 0
    while len(path) - 1 < steps:
        seg_x, seg_y, pending = path[-1]
        if not pending:
            path.pop()
            if not path:
                raise Stuck(f"no hull-preserving refinement path reaches "
                            f"depth {steps} for {t}")
            continue
        factor, pick, child = pending.pop(0)
        attempts += 1
        if attempts > budget:
            raise Stuck(f"attempt budget {budget} exhausted for {t}")
        nx, ny = (child, seg_y) if factor == "x" else (seg_x, child)
        path.append((nx, ny, _candidate_moves(nx, ny, t)))

    state = ProductState(path[-1][0], path[-1][1], t)
    widths: list[QuadSurd] = []
    prev: tuple[Segment, Segment] | None = None
    for sx, sy, _ in path:
        if prev is not None:
            factor = "x" if sx is not prev[0] else "y"
            child = sx if factor == "x" else sy
            pick = 0 if (factor == "x" and prev[0].lo == sx.lo) or \
                        (factor == "y" and prev[1].lo == sy.lo) else 1
            width = sx.hi * sy.hi - sx.lo * sy.lo
            state.history.append(Step(factor, pick, child.type_id,
                                      child.lo, child.hi, width))
            if record_widths:
                widths.append(width)
        prev = (sx, sy)
    if not state.contains_target():
        raise AssertionError("containment invariant broken")
    if record_widths:
        return state, widths
    return state


def segment_element(seg: Segment) -> PeriodicCF:
    """A concrete set element inside `seg`: the cylinder endpoint obtained by
    extending the prefix with the type's low tail."""
    tail = TYPE_TABLE[seg.type_id].alpha
    return PeriodicCF(seg.prefix + tail.preperiod, tail.period)


@dataclass(frozen=True)
class WitnessWord:
    """Interleaved word x = [S_1, S_2, ...] with S_i the reversed x-prefix up
    to cut n_i followed by the y-prefix up to cut m_i; junction k_i marks the
    x_0 digit of block i (the only (4,4) pairs sit at k_i, k_i + 1)."""

    digits: tuple[int, ...]
    junctions: tuple[int, ...]
    cuts: tuple[tuple[int, int], ...]
    block_ends: tuple[int, ...]

    def reversed_block(self, i: int) -> tuple[int, ...]:
        start = 0 if i == 0 else self.block_ends[i - 1] + 1
        return tuple(reversed(self.digits[start:self.block_ends[i] + 1]))


def interleave(x_digits, y_digits, cuts) -> WitnessWord:
    """Build the witness word from digit streams and cut pairs (n_i, m_i)."""
    digits: list[int] = []
    junctions: list[int] = []
    block_ends: list[int] = []
    prev_n = prev_m = -1
    for n_i, m_i in cuts:
        if n_i <= prev_n or m_i <= prev_m:
            raise ValueError("cut sequences must be strictly increasing")
        if x_digits[n_i] == 4 or y_digits[m_i] == 4:
            raise BadCut(f"cut ({n_i}, {m_i}) lands on a digit 4")
        junctions.append(len(digits) + n_i)
        digits.extend(reversed(x_digits[: n_i + 1]))
        digits.extend(y_digits[: m_i + 1])
        block_ends.append(len(digits) - 1)
        prev_n, prev_m = n_i, m_i
    return WitnessWord(tuple(digits), tuple(junctions), tuple(cuts), tuple(block_ends))


def default_cuts(x_digits, y_digits, blocks: int, stride: int = 3):
    """Deterministic cut choice: the i-th cut is the first index >= i*stride
    whose digit differs from 4, in each stream separately."""
    out = []
    for i in range(1, blocks + 1):
        n = i * stride
        while x_digits[n] == 4:
            n += 1
        m = i * stride
        while y_digits[m] == 4:
            m += 1
        out.append((n, m))
    return tuple(out)


def witness_for_target(target, steps: int = 220, blocks: int = 60,
                       stride: int = 3) -> tuple[WitnessWord, ProductState]:
    """Decompose the target, pick concrete elements of the two factors, and
    interleave them into a witness word with `blocks` blocks."""
    state = decompose(target, steps)
    need = blocks * stride + 8
    x_stream = segment_element(state.seg_x)
    y_stream = segment_element(state.seg_y)
    x_digits = [x_stream.digit_at(i) for i in range(need)]
    y_digits = [y_stream.digit_at(i) for i in range(need)]
    cuts = default_cuts(x_digits, y_digits, blocks, stride)
    return interleave(x_digits, y_digits, cuts), state


def rho_at_junction(w: WitnessWord, i: int) -> Fraction:
    """Perron product at junction i, truncated at the end of block i."""
    word = CFWord(w.digits[: w.block_ends[i] + 1])
    return perron_rho_n(word, w.junctions[i])


def verify_construction(w: WitnessWord, target, i_max: int = 5,
                        scan_digits: int = 10_000, sample_stride: int = 97,
                        product_width: QuadSurd | None = None) -> dict:
    """Check the witness word: patterns, junction convergence, and the
    off-junction Perron cap.

    (i) the first `scan_digits` digits contain (4,4) exactly at the
    junctions and (4,1,4,1,4) nowhere; (ii) |rho_{k_i} - target| strictly
    decreases for i < i_max, and when the decompose hull width is supplied
    each distance is bounded by the truncation enclosures plus that width;
    (iii) sampled non-junction Perron products stay below mu_bound plus the
    truncation enclosure width.
    """
    t = _as_target(target)
    digits = w.digits[:scan_digits]
    junction_set = set(w.junctions)
    pair_bad = [i for i in range(len(digits) - 1)
                if digits[i] == 4 and digits[i + 1] == 4 and i not in junction_set]
    missing = [k for k in w.junctions if k + 1 < len(digits)
               and (digits[k] != 4 or digits[k + 1] != 4)]
    quint_bad = [i for i in range(len(digits) - 4)
                 if tuple(digits[i:i + 5]) == (4, 1, 4, 1, 4)]

    distances = []
    bounded = True
    for i in range(min(i_max, len(w.junctions))):
        rho = rho_at_junction(w, i)
        d = abs(QuadSurd.from_rational(rho) - t)
        distances.append(d)
        if product_width is not None:
            # both factors share a digit prefix with the true pair, so the
            # distance is capped by convergent enclosures plus the hull width
            f1 = eval_finite(CFWord(tuple(w.digits[w.junctions[i]::-1])))
            e1 = _tail_enclosure_width(CFWord(tuple(w.digits[w.junctions[i]::-1])))
            e2 = _tail_enclosure_width(
                CFWord(w.digits[w.junctions[i] + 1: w.block_ends[i] + 1]))
            cap = f1 * e2 + 5 * e1 + product_width
            if d > cap:
                bounded = False
    decreasing = all(a > b for a, b in zip(distances, distances[1:]))

    mu = constants.MU_BOUND
    off_junction_ok = True
    off_junction_witness = None
    start = w.junctions[1] + 2 if len(w.junctions) > 1 else 2
    for k in range(start, len(w.digits) - 2, sample_stride):
        if k in junction_set:
            continue
        horizon = min(len(w.digits), k + 42)
        rho = perron_rho_n(CFWord(w.digits[:horizon]), k)
        first = eval_finite(CFWord(tuple(w.digits[k::-1])))
        tail_word = CFWord(w.digits[k + 1: horizon])
        enclosure = first * _tail_enclosure_width(tail_word)
        if QuadSurd.from_rational(rho) > mu + QuadSurd.from_rational(enclosure):
            off_junction_ok = False
            off_junction_witness = k
            break

    return {
        "patterns_ok": not pair_bad and not missing and not quint_bad,
        "stray_pairs": pair_bad[:5],
        "bad_junctions": missing[:5],
        "forbidden_quints": quint_bad[:5],
        "junction_distances": distances,
        "distances_strictly_decreasing": decreasing,
        "junction_distances_bounded": bounded,
        "off_junction_ok": off_junction_ok,
        "off_junction_witness": off_junction_witness,
        "ok": (not pair_bad and not missing and not quint_bad
               and decreasing and bounded and off_junction_ok),
    }


def _tail_enclosure_width(word: CFWord) -> Fraction:
    """Width of the alternating-convergent enclosure of all infinite
    continuations of a finite tail: |p_m/q_m - p_{m-1}/q_{m-1}|."""
    seq = convergents(word)
    if len(seq.pairs) < 2:
        return Fraction(1)
    (p1, q1), (p2, q2) = seq.pairs[-2], seq.pairs[-1]
    return abs(Fraction(p2, q2) - Fraction(p1, q1))
