import pytest

from f4cantor.segments import (DepthLimit, Inadmissible, TAIL_VALUES,
                               TYPE_TABLE, classify_prefix, generate,
                               iter_levels, make_segment, root_segment,
                               segment_for_word, subdivide)
from f4cantor.surd import QuadSurd
from f4cantor.words import admissible


def test_root_segment_endpoints():
    root = root_segment()
    assert root.type_id == 1
    assert root.lo == QuadSurd(783, 1, 222)
    assert root.hi == QuadSurd(5501, -1, 1238)
    assert root.length.to_decimal(2) == "0.05"


def test_rule_one_from_root():
    c1, gap, c2 = subdivide(root_segment())
    assert (c1.type_id, c2.type_id) == (2, 4)
    assert c1.prefix == (4, 3) and c2.prefix == (4, 3)
    assert c2.word == (4, 3, 4)
    assert gap.lo < gap.hi


def test_remark_split_chain_reaches_all_four_cylinders():
    # rules 1, 2, 3 split T[4,3] into the four next-digit cylinders
    c1, _, c2 = subdivide(root_segment())
    d1, _, d2 = subdivide(c1)
    assert (d1.type_id, d2.type_id) == (3, 1)
    assert d2.prefix == (4, 3, 3)
    e1, _, e2 = subdivide(d1)
    assert (e1.type_id, e2.type_id) == (1, 1)
    assert e1.prefix == (4, 3, 1) and e2.prefix == (4, 3, 2)
    words = {e1.word, e2.word, d2.word, c2.word}
    assert words == {(4, 3, 1), (4, 3, 2), (4, 3, 3), (4, 3, 4)}


def test_division_list():
    expected = {1: (2, 4), 2: (3, 1), 3: (1, 1), 4: (1, 5), 5: (1, 6),
                6: (2, 7), 7: (1, 8), 8: (1, 9), 9: (3, 1)}
    for tid, spec in TYPE_TABLE.items():
        assert tuple(ct for ct, _ in spec.children) == expected[tid]


def test_generate_counts():
    segs, gaps = generate(0)
    assert len(segs) == 1 and not gaps
    segs, gaps = generate(3)
    assert len(segs) == 15 and len(gaps) == 7
    assert sum(1 for s in segs if s.depth == 3) == 8


def test_generate_depth_limit():
    with pytest.raises(DepthLimit):
        generate(23)


def test_indices_follow_binary_scheme():
    segs, gaps = generate(4)
    for s in segs:
        if s.depth == 0:
            continue
        parent_index = (s.index + 1) // 2
        parents = [p for p in segs if p.depth == s.depth - 1 and p.index == parent_index]
        assert len(parents) == 1
        assert parents[0].lo <= s.lo and s.hi <= parents[0].hi
    for g in gaps:
        assert g.lo < g.hi
        assert g.left.hi == g.lo and g.right.lo == g.hi


def test_generated_prefixes_admissible_and_restricted():
    for level in iter_levels(9):
        for seg in level:
            word = seg.word
            assert word[:2] == (4, 3) and admissible(word)
            for suffix in TYPE_TABLE[seg.type_id].forbidden_suffixes:
                assert seg.prefix[len(seg.prefix) - len(suffix):] != suffix


def test_parity_predicts_endpoint_order():
    for level in iter_levels(8):
        for seg in level:
            ta, tb = TAIL_VALUES[seg.type_id]
            from f4cantor.cf import apply_moebius
            va = apply_moebius(seg.matrix, ta)
            vb = apply_moebius(seg.matrix, tb)
            if len(seg.prefix) % 2 == 0:  # increasing Moebius map
                assert (va, vb) == (seg.lo, seg.hi)
            else:
                assert (vb, va) == (seg.lo, seg.hi)


def test_classify_prefix():
    assert classify_prefix((4, 3, 4)) == 4
    assert classify_prefix((4, 3, 4, 1, 4)) == 7
    assert classify_prefix((4, 3, 2)) == 1
    assert classify_prefix((4, 3, 4, 1)) == 6
    assert classify_prefix((4, 3, 4, 1, 4, 1)) == 9
    with pytest.raises(Inadmissible):
        classify_prefix((4, 3, 4, 4))
    with pytest.raises(Inadmissible):
        classify_prefix((1, 2))


def test_rule_endpoints_match_suffix_classification():
    # every generated segment whose interval is a full cylinder agrees with
    # the segment rebuilt from its word alone
    for level in iter_levels(7):
        for seg in level:
            if seg.type_id in (1, 4, 6, 7, 9):
                rebuilt = segment_for_word(seg.word)
                assert rebuilt.type_id == seg.type_id
                assert rebuilt.lo == seg.lo and rebuilt.hi == seg.hi


def test_make_segment_validates():
    with pytest.raises(Inadmissible):
        make_segment((4, 3, 4), 1)  # type 1 forbids trailing 4
    with pytest.raises(Inadmissible):
        make_segment((4, 3, 4, 1), 6)  # type 6 forbids prefix ending (4,1)


def test_dump_line_format():
    line = root_segment().dump_line(precision=10)
    depth, index, tid, digits, lo, hi, lo_dec, hi_dec = line.split("\t")
    assert (depth, index, tid, digits) == ("0", "1", "1", "4,3")
    assert lo == "(783 + 1*sqrt(26565))/222"
    assert hi == "(5501 - 1*sqrt(26565))/1238"
    assert lo_dec.startswith("4.26") and hi_dec.startswith("4.31")
