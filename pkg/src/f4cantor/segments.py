"""The Cantor-set construction: nine segment types over prefixes starting
(4,3), binary subdivision rules, exact cylinder endpoints, and the suffix
classifier for cylinder words.

A segment of type t with rule-prefix p covers the closed interval between the
two values ``[p..., alpha_t]`` and ``[p..., beta_t]``, where the tail pair
(alpha_t, beta_t) is fixed per type.  Which of the two is the left endpoint
depends on the parity of the prefix length; endpoints are ordered here by
exact comparison and the parity bit is kept as metadata.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Optional

from . import words
from .cf import PeriodicCF, eval_periodic, fold_matrix, apply_moebius
from .surd import QuadSurd

P_LOW = (1, 4, 1, 4, 1, 3)
P_HIGH = (4, 1, 4, 1, 3, 1)
P_MID = (3, 1, 4, 1, 4, 1)


class Inadmissible(ValueError):
    pass


class DepthLimit(ValueError):
    pass


MAX_GENERATE_DEPTH = 22  # 2^23 segments; repository default is depth 12


@dataclass(frozen=True)
class SegmentType:
    """One row of the type table: tail pair, definite digits beyond the
    prefix, prefix suffix restrictions, and the subdivision children."""

    id: int
    alpha: PeriodicCF
    beta: PeriodicCF
    word_ext: tuple[int, ...]
    forbidden_suffixes: tuple[tuple[int, ...], ...]
    children: tuple[tuple[int, tuple[int, ...]], ...]  # (child type, prefix extension)


TYPE_TABLE: dict[int, SegmentType] = {
    1: SegmentType(1, PeriodicCF((), P_LOW), PeriodicCF((), P_HIGH), (),
                   ((4,), (4, 1), (4, 1, 4), (4, 1, 4, 1)),
                   ((2, ()), (4, ()))),
    2: SegmentType(2, PeriodicCF((), P_LOW), PeriodicCF((), P_MID), (),
                   ((4,), (4, 1, 4), (4, 1, 4, 1)),
                   ((3, ()), (1, (3,)))),
    3: SegmentType(3, PeriodicCF((), P_LOW), PeriodicCF((2,), P_LOW), (),
                   ((4,), (4, 1, 4)),
                   ((1, (1,)), (1, (2,)))),
    4: SegmentType(4, PeriodicCF((4,), P_MID), PeriodicCF((), P_HIGH), (4,),
                   ((4, 1),),
                   ((1, (4, 3)), (5, ()))),
    5: SegmentType(5, PeriodicCF((4, 2), P_LOW), PeriodicCF((), P_HIGH), (4,),
                   ((4, 1),),
                   ((1, (4, 2)), (6, ()))),
    6: SegmentType(6, PeriodicCF((4, 1), P_LOW), PeriodicCF((), P_HIGH), (4, 1),
                   ((4, 1),),
                   ((2, (4, 1)), (7, ()))),
    7: SegmentType(7, PeriodicCF((4, 1, 4), P_MID), PeriodicCF((), P_HIGH), (4, 1, 4),
                   (),
                   ((1, (4, 1, 4, 3)), (8, ()))),
    8: SegmentType(8, PeriodicCF((4, 1, 4, 2), P_LOW), PeriodicCF((), P_HIGH), (4, 1, 4),
                   (),
                   ((1, (4, 1, 4, 2)), (9, ()))),
    9: SegmentType(9, PeriodicCF((4, 1, 4, 1), P_LOW), PeriodicCF((), P_HIGH), (4, 1, 4, 1),
                   (),
                   ((3, (4, 1, 4, 1)), (1, (4, 1, 4, 1, 3)))),
}

# tail values are shared by every segment of a type; computed once
TAIL_VALUES: dict[int, tuple[QuadSurd, QuadSurd]] = {
    tid: (eval_periodic(spec.alpha), eval_periodic(spec.beta))
    for tid, spec in TYPE_TABLE.items()
}
assert all(lo < hi for lo, hi in TAIL_VALUES.values())


@dataclass(frozen=True)
class Segment:
    """A cylinder interval of the construction.

    `prefix` is the rule prefix (the tail tables attach behind it); `word` is
    the full definite digit string, which is what the brute-force oracle
    enumerates.  `depth`/`index` are tree coordinates when the segment came
    from `generate`, None when built directly from a word.
    """

    prefix: tuple[int, ...]
    type_id: int
    lo: QuadSurd
    hi: QuadSurd
    matrix: tuple[int, int, int, int]
    depth: Optional[int] = None
    index: Optional[int] = None

    @property
    def word(self) -> tuple[int, ...]:
        return self.prefix + TYPE_TABLE[self.type_id].word_ext

    @property
    def parity(self) -> int:
        """Parity of n for prefix (a_0, ..., a_n); 1 means the alpha-tail
        endpoint is the left one."""
        return (len(self.prefix) - 1) % 2

    @property
    def length(self) -> QuadSurd:
        return self.hi - self.lo

    def __str__(self) -> str:
        coords = f"A^{self.depth}_{self.index} " if self.depth is not None else ""
        return f"{coords}T{list(self.word)} type {self.type_id}"

    def dump_line(self, precision: int = 12) -> str:
        """One-line record: depth, index, type, prefix digits, exact
        endpoints, decimal previews; fixed field order for consumers."""
        d = "-" if self.depth is None else self.depth
        j = "-" if self.index is None else self.index
        digits = ",".join(map(str, self.prefix))
        return (f"{d}\t{j}\t{self.type_id}\t{digits}\t"
                f"{self.lo.canonical_text()}\t{self.hi.canonical_text()}\t"
                f"{self.lo.to_decimal(precision)}\t{self.hi.to_decimal(precision)}")


@dataclass(frozen=True)
class Gap:
    """Open interval removed between the two children of a subdivision."""

    lo: QuadSurd
    hi: QuadSurd
    parent: Segment
    left: Segment   # value-ordered children flanking the gap
    right: Segment
    depth: Optional[int] = None
    index: Optional[int] = None

    @property
    def length(self) -> QuadSurd:
        return self.hi - self.lo


def _check_prefix(prefix: tuple[int, ...], type_id: int) -> None:
    if len(prefix) < 2 or prefix[:2] != (4, 3):
        raise Inadmissible(f"prefix must start (4,3): {prefix}")
    if not words.admissible(prefix):
        raise Inadmissible(f"prefix {prefix} contains a forbidden pattern")
    for suffix in TYPE_TABLE[type_id].forbidden_suffixes:
        if prefix[len(prefix) - len(suffix):] == suffix:
            raise Inadmissible(
                f"prefix {prefix} violates type {type_id} restriction on suffix {suffix}")


def make_segment(prefix: tuple[int, ...], type_id: int,
                 matrix: tuple[int, int, int, int] | None = None,
                 depth: Optional[int] = None, index: Optional[int] = None,
                 validate: bool = True) -> Segment:
    if validate:
        _check_prefix(prefix, type_id)
    if matrix is None:
        matrix = fold_matrix(prefix)
    ta, tb = TAIL_VALUES[type_id]
    va = apply_moebius(matrix, ta)
    vb = apply_moebius(matrix, tb)
    lo, hi = (va, vb) if va < vb else (vb, va)
    return Segment(prefix, type_id, lo, hi, matrix, depth, index)


def root_segment() -> Segment:
    """T[4,3], the type-1 segment the whole construction starts from."""
    return make_segment((4, 3), 1, depth=0, index=1)


def subdivide(seg: Segment) -> tuple[Segment, Gap, Segment]:
    """Split a segment by its type's rule; returns (first child, gap, second
    child) in rule order, which children 2j-1 and 2j follow."""
    spec = TYPE_TABLE[seg.type_id]
    kids = []
    for child_type, ext in spec.children:
        prefix = seg.prefix + ext
        matrix = seg.matrix if not ext else _extend_matrix(seg.matrix, ext)
        d = None if seg.depth is None else seg.depth + 1
        i = None if seg.index is None else 2 * seg.index - 1 + len(kids)
        kids.append(make_segment(prefix, child_type, matrix, d, i, validate=False))
    c1, c2 = kids
    left, right = (c1, c2) if c1.lo < c2.lo else (c2, c1)
    gap = Gap(left.hi, right.lo, seg, left, right, depth=c1.depth, index=seg.index)
    if not (seg.lo <= left.lo and left.hi < right.lo and right.hi <= seg.hi):
        raise AssertionError(f"subdivision broke nesting at {seg}")
    return c1, gap, c2


def _extend_matrix(m: tuple[int, int, int, int], digits: tuple[int, ...]):
    a, b, c, d = m
    for x in digits:
        a, b, c, d = a * x + b, a, c * x + d, c
    return a, b, c, d


def generate(depth: int, max_depth: int = MAX_GENERATE_DEPTH) -> tuple[list[Segment], list[Gap]]:
    """All segments with tree depth <= `depth` and the gaps between their
    children, breadth-first, ordered by (depth, index)."""
    if depth < 0:
        raise ValueError("depth must be >= 0")
    if depth > max_depth:
        raise DepthLimit(f"depth {depth} exceeds limit {max_depth}")
    segments = [root_segment()]
    gaps: list[Gap] = []
    frontier = [segments[0]]
    for _ in range(depth):
        nxt = []
        for seg in frontier:
            c1, gap, c2 = subdivide(seg)
            nxt.extend((c1, c2))
            gaps.append(gap)
        segments.extend(nxt)
        frontier = nxt
    return segments, gaps


def iter_levels(depth: int) -> Iterator[list[Segment]]:
    """Yield the segment levels 0..depth one at a time (bounded memory)."""
    if depth > MAX_GENERATE_DEPTH:
        raise DepthLimit(f"depth {depth} exceeds limit {MAX_GENERATE_DEPTH}")
    frontier = [root_segment()]
    yield frontier
    for _ in range(depth):
        nxt = []
        for seg in frontier:
            c1, _, c2 = subdivide(seg)
            nxt.extend((c1, c2))
        frontier = nxt
        yield frontier


def classify_prefix(word: tuple[int, ...]) -> int:
    """Type of the cylinder T[word] from its suffix: ..4 -> 4, ..4,1 -> 6,
    ..4,1,4 -> 7, ..4,1,4,1 -> 9, else 1."""
    if len(word) < 2 or word[:2] != (4, 3) or not words.admissible(word):
        raise Inadmissible(f"not an admissible (4,3)-word: {word}")
    if word[-4:] == (4, 1, 4, 1):
        return 9
    if word[-3:] == (4, 1, 4):
        return 7
    if word[-2:] == (4, 1):
        return 6
    if word[-1:] == (4,):
        return 4
    return 1


def segment_for_word(word: tuple[int, ...]) -> Segment:
    """The full cylinder T[word] as a segment (oracle route: suffix
    classification instead of rule propagation)."""
    type_id = classify_prefix(word)
    ext = TYPE_TABLE[type_id].word_ext
    prefix = word[: len(word) - len(ext)]
    return make_segment(prefix, type_id, validate=False)
