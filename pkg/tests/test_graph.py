import numpy as np
import pytest
from hypothesis import given, strategies as st

from ebiset import (Instance, Labeling, counts, format_labeling, new_labeling,
                    parse_labeling, swap_pair, vertex_summaries)
from ebiset.errors import InvalidInstance, LabelingError, SwapError

from conftest import labelings


@pytest.mark.parametrize("m,n", [(4, 2), (3, 2), (2, 1), (0, 1), (-3, 1), (1, 3), (3, 5)])
def test_invalid_instances(m, n):
    with pytest.raises(InvalidInstance):
        Instance(m, n)


def test_k11_single_bit():
    lab = new_labeling(Instance(1, 1), {(1, 1)})
    c = counts(lab)
    assert (c.e1, c.e0) == (1, 0)
    assert (c.v1, c.v0, c.index) == (2, 0, 2)
    s = vertex_summaries(lab)
    assert s.deg1_a.tolist() == [1] and s.deg1_b.tolist() == [1]
    assert s.label_a.all() and s.label_b.all()


def test_k31_labels():
    lab = new_labeling(Instance(3, 1), {(1, 2), (1, 3)})
    assert (counts(lab).e1, counts(lab).e0) == (2, 1)
    s = vertex_summaries(lab)
    assert s.deg1_b.tolist() == [2] and s.deg0_b.tolist() == [1]
    assert s.label_b.tolist() == [True]
    assert s.label_a.tolist() == [False, True, True]


def test_cardinality_is_enforced():
    inst = Instance(3, 3)
    new_labeling(inst, {(1, 1), (1, 2), (1, 3), (2, 1), (2, 2)})
    with pytest.raises(LabelingError):
        new_labeling(inst, {(1, 1), (1, 2), (1, 3), (2, 1)})
    with pytest.raises(LabelingError):
        new_labeling(inst, {(1, 1), (1, 2), (1, 3), (2, 1), (2, 2), (3, 3)})


@pytest.mark.parametrize("cell", [(0, 1), (4, 1), (1, 4), (1, 0)])
def test_out_of_range_cell(cell):
    with pytest.raises(LabelingError):
        new_labeling(Instance(3, 3), {cell, (1, 1), (1, 2), (2, 2), (3, 3)})


def test_k33_hand_count(k33_example):
    s = vertex_summaries(k33_example)
    # rows 110 / 011 / 001
    assert s.deg1_a.tolist() == [1, 2, 2]
    assert s.label_a.tolist() == [False, True, True]
    assert s.deg1_b.tolist() == [2, 2, 1]
    assert s.label_b.tolist() == [True, True, False]
    c = counts(k33_example)
    assert (c.v1, c.v0, c.index) == (4, 2, 2)


def test_k33_swap(k33_example):
    out = swap_pair(k33_example, (3, 1), (3, 3))
    before, after = vertex_summaries(k33_example), vertex_summaries(out)
    assert after.deg1_a[0] == before.deg1_a[0] + 1
    assert after.deg1_a[2] == before.deg1_a[2] - 1
    assert after.deg1_b[2] == before.deg1_b[2]
    assert swap_pair(out, (3, 3), (3, 1)) == k33_example


def test_swap_checks_labels(k33_example):
    with pytest.raises(SwapError):
        swap_pair(k33_example, (1, 1), (1, 2))
    with pytest.raises(SwapError):
        swap_pair(k33_example, (3, 1), (2, 1))


def test_labeling_is_immutable(k33_example):
    with pytest.raises(ValueError):
        k33_example.bits[0, 0] = 0
    with pytest.raises(AttributeError):
        k33_example.bits = None


def test_text_format_exact(k33_example):
    assert format_labeling(k33_example) == "3 3\n110\n011\n001\n"
    assert parse_labeling("3 3\n110\n011\n001\n") == k33_example


@pytest.mark.parametrize("text", [
    "3 3\n110\n011\n001",        # no trailing newline
    "3 3\n110\n011\n001\n\n",    # blank line
    "3  3\n110\n011\n001\n",     # double space
    "3 3\n110\n011\n",           # missing row
    "3 3\n110 \n011\n001\n",     # stray whitespace
    "3 3\n112\n011\n001\n",      # bad character
    "3 3\n111\n011\n001\n",      # wrong 1-count
    "4 3\n1100\n0110\n0011\n",   # even part
])
def test_parse_rejects(text):
    with pytest.raises((LabelingError, InvalidInstance)):
        parse_labeling(text)


def test_mask_round_trip(k33_example):
    # row-major: cell (i, i') is bit (i-1)*m + i'-1
    assert k33_example.mask == 0b100_110_011
    assert Labeling.from_mask(k33_example.instance, k33_example.mask) == k33_example


@given(labelings())
def test_degree_sums(lab):
    inst = lab.instance
    s = vertex_summaries(lab)
    assert np.all(s.deg1_a + s.deg0_a == inst.n)
    assert np.all(s.deg1_b + s.deg0_b == inst.m)
    assert not np.any(s.deg1_a == s.deg0_a) and not np.any(s.deg1_b == s.deg0_b)
    total1 = s.deg1_a.sum() + s.deg1_b.sum()
    total0 = s.deg0_a.sum() + s.deg0_b.sum()
    assert total1 - total0 == 2


@given(labelings())
def test_counts_invariants(lab):
    inst = lab.instance
    c = counts(lab)
    assert c.e1 - c.e0 == 1 and c.e1 + c.e0 == inst.edges
    assert c.v0 + c.v1 == inst.m + inst.n
    assert c.index % 2 == 0


@given(labelings())
def test_text_round_trip(lab):
    text = format_labeling(lab)
    assert parse_labeling(text) == lab
    assert format_labeling(parse_labeling(text)) == text


@given(labelings())
def test_summaries_depend_only_on_bits(lab):
    twin = Labeling(lab.instance, lab.bits.copy())
    assert twin == lab and hash(twin) == hash(lab)
    assert vertex_summaries(twin) == vertex_summaries(lab)


@given(labelings(), st.data())
def test_swap_conserves_and_inverts(lab, data):
    zeros = [tuple(int(v) + 1 for v in c) for c in np.argwhere(lab.bits == 0)]
    ones = [tuple(int(v) + 1 for v in c) for c in np.argwhere(lab.bits == 1)]
    if not zeros:
        return
    a = data.draw(st.sampled_from(zeros))
    b = data.draw(st.sampled_from(ones))
    out = swap_pair(lab, a, b)
    assert counts(out).e1 == counts(lab).e1
    assert int((out.bits != lab.bits).sum()) == 2
    assert swap_pair(out, b, a) == lab
