"""Static integer tables shared by the enumeration kernels.

Everything a kernel needs is plain integers: the admissibility automaton,
the per-state cylinder tail pair (as reduced surd triples), the subdivision
rule graph, and the full tail triples per segment type.  Building them here,
from the same sources the rest of the package uses, keeps the compiled and
pure backends semantically identical.
"""

from __future__ import annotations

from ..cf import PeriodicCF, eval_periodic
from ..segments import TAIL_VALUES, TYPE_TABLE
from ..surd import DEFAULT_DISC
from ..words import TRANSITIONS

BASE_PERIOD = (1, 4, 1, 4, 1, 3)


def _rotations(period):
    return [period[i:] + period[:i] for i in range(len(period))]


def _triple(s):
    return (s.p, s.q, s.r)


def build_tables() -> dict:
    sigma = [eval_periodic(PeriodicCF((), rot)) for rot in _rotations(BASE_PERIOD)]
    assert all(s.disc == DEFAULT_DISC for s in sigma)

    # cylinder tails, indexed by the automaton state at the end of the word:
    # state 0 ends "plain" (type 1), 1 ends in 4 (type 4), 2 in (4,1) (type 6),
    # 3 in (4,1,4) (type 7), 4 in (4,1,4,1) (type 9)
    state_type = (1, 4, 6, 7, 9)
    post_pairs = {
        1: (0, 1),  # continuations per(1,4,1,4,1,3) / per(4,1,4,1,3,1)
        4: (2, 5),  # per(1,4,1,3,1,4) / per(3,1,4,1,4,1)
        6: (0, 3),  # per(1,4,1,4,1,3) / per(4,1,3,1,4,1)
        7: (4, 5),  # per(1,3,1,4,1,4) / per(3,1,4,1,4,1)
        9: (0, 5),  # per(1,4,1,4,1,3) / per(3,1,4,1,4,1)
    }
    for i, j in post_pairs.values():
        assert sigma[i] < sigma[j]

    return {
        "disc": DEFAULT_DISC,
        "transitions": tuple(TRANSITIONS),
        "sigma": tuple(_triple(s) for s in sigma),
        "state_post_pair": tuple(post_pairs[state_type[s]] for s in range(5)),
        "state_type": state_type,
        "rule_children": {
            tid: tuple((ct, ext) for ct, ext in spec.children)
            for tid, spec in TYPE_TABLE.items()
        },
        "type_ext_len": {tid: len(spec.word_ext) for tid, spec in TYPE_TABLE.items()},
        "type_ext_digits": {tid: spec.word_ext for tid, spec in TYPE_TABLE.items()},
        "type_tails": {
            tid: (_triple(lo), _triple(hi)) for tid, (lo, hi) in TAIL_VALUES.items()
        },
        "root_prefix": (4, 3),
    }
