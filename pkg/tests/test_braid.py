import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import strand_cycles
from plumbing_bounds.braid import (
    BraidLetter,
    BraidWord,
    Permutation,
    closure_component_count,
    closure_seifert_graph,
    ensure_all_generators_both_signs,
    find_coil_prefix,
    is_alternating_closure,
    is_positive,
    letter_counts,
    parse_braid_word,
    random_connected_braid,
    split_braid,
    underlying_permutation,
)
from plumbing_bounds.errors import BraidParseError


def w(text, n=None):
    return parse_braid_word(text, n)


class TestParse:
    def test_trefoil(self):
        b = w("1 1 1")
        assert b.strands == 2
        assert b.letters == (BraidLetter(1, 1),) * 3

    def test_figure_eight(self):
        b = w("1 -2 1 -2")
        assert b.strands == 3
        assert b.ints() == [1, -2, 1, -2]

    def test_empty_with_strands(self):
        b = w("", 3)
        assert b.strands == 3 and len(b) == 0

    def test_empty_without_strands_rejected(self):
        with pytest.raises(BraidParseError):
            w("")

    @pytest.mark.parametrize("text", ["1 x", "0", "1.5", "1,2"])
    def test_bad_tokens(self, text):
        with pytest.raises(BraidParseError):
            w(text)

    def test_index_too_big_for_strands(self):
        with pytest.raises(BraidParseError):
            w("3", 3)

    def test_extra_strands_kept(self):
        assert w("1", 4).strands == 4

    def test_round_trip(self):
        assert str(w("1 -2 1 -2")) == "1 -2 1 -2"


class TestPermutation:
    def test_single_transposition(self):
        assert underlying_permutation(w("1")).images == (2, 1)

    def test_involution(self):
        assert underlying_permutation(w("1 1")) == Permutation.identity(2)

    def test_three_cycle_composition_order(self):
        # left to right: strand 1 goes to 2 then to 3
        assert underlying_permutation(w("1 2")).images == (3, 1, 2)

    def test_rejects_non_permutation(self):
        with pytest.raises(ValueError):
            Permutation((1, 1))


class TestComponents:
    @pytest.mark.parametrize("text,n,l", [("1 1 1", None, 1), ("1 1", None, 2), ("", 3, 3)])
    def test_counts(self, text, n, l):
        assert closure_component_count(w(text, n)) == l


class TestCoil:
    def test_trefoil(self):
        split = find_coil_prefix(w("1 1 1"))
        assert split.rotation == 0 and split.remainder.ints() == [1, 1]

    def test_three_strands(self):
        split = find_coil_prefix(w("2 1 -2 1"))
        assert split.rotation == 0 and split.remainder.ints() == [-2, 1]

    def test_negative_word_has_none(self):
        assert find_coil_prefix(w("-1 -1")) is None

    def test_found_after_rotation(self):
        split = find_coil_prefix(w("-2 1 2 1"))
        assert split.rotation == 2 and split.remainder.ints() == [-2, 1]

    def test_word_shorter_than_coil(self):
        assert find_coil_prefix(w("1", 4)) is None


class TestCounts:
    def test_direct(self):
        assert letter_counts(w("1 1 1 1 -1")) == {1: {1: 4, -1: 1}}

    def test_empty(self):
        assert letter_counts(w("", 3)) == {1: {1: 0, -1: 0}, 2: {1: 0, -1: 0}}

    def test_mixed(self):
        assert letter_counts(w("1 -2 1 -2")) == {1: {1: 2, -1: 0}, 2: {1: 0, -1: 2}}

    def test_pad_trefoil(self):
        assert ensure_all_generators_both_signs(w("1 1 1")).ints() == [1, 1, 1, 1, -1]

    def test_pad_noop(self):
        b = w("1 -1")
        assert ensure_all_generators_both_signs(b) == b

    def test_pad_two_generators(self):
        c = letter_counts(ensure_all_generators_both_signs(w("1 -2 1 -2")))
        assert c == {1: {1: 3, -1: 1}, 2: {1: 1, -1: 3}}


class TestSeifertGraph:
    def test_trefoil(self):
        g = closure_seifert_graph(w("1 1 1"))
        assert g.s == 2 and g.l == 1
        assert [(e.u, e.v, e.sign) for e in g.edges] == [(1, 2, 1)] * 3

    def test_figure_eight(self):
        g = closure_seifert_graph(w("1 -2 1 -2"))
        assert g.s == 3 and g.l == 1
        assert sorted((e.u, e.v, e.sign) for e in g.edges) == [(1, 2, 1)] * 2 + [(2, 3, -1)] * 2

    def test_trivial_one_strand(self):
        g = closure_seifert_graph(w("", 1))
        assert (g.s, g.c, g.l) == (1, 0, 1)


class TestPredicates:
    @pytest.mark.parametrize(
        "text,n,pos,alt",
        [("1 1 1", None, True, True), ("1 -2 1 -2", None, False, True), ("1 2", 3, True, False)],
    )
    def test_examples(self, text, n, pos, alt):
        b = w(text, n)
        assert is_positive(b) is pos
        assert is_alternating_closure(b) is alt

    def test_empty_is_not_positive(self):
        assert not is_positive(w("", 2))


def test_split_braid_blocks():
    parts = split_braid(w("1 -1 3", 5))
    assert [(p.strands, p.ints()) for p in parts] == [(2, [1, -1]), (2, [1]), (1, [])]


def test_random_braids_are_connected_and_bounded():
    rng = random.Random(3)
    for _ in range(200):
        b = random_connected_braid(rng)
        assert 2 <= b.strands <= 6
        assert b.strands - 1 <= len(b) <= 20
        assert {abs(k) for k in b.ints()} == set(range(1, b.strands))


braids = st.integers(2, 6).flatmap(
    lambda n: st.lists(
        st.integers(1, n - 1).flatmap(lambda i: st.sampled_from([i, -i])), max_size=20
    ).map(lambda ints: BraidWord.from_ints(ints, n))
)


@settings(max_examples=300, deadline=None)
@given(braids, st.integers(0, 40))
def test_components_invariant_under_rotation(b, r):
    ints = b.ints()
    if ints:
        r %= len(ints)
        rotated = BraidWord.from_ints(ints[r:] + ints[:r], b.strands)
        assert closure_component_count(rotated) == closure_component_count(b)


@settings(max_examples=300, deadline=None)
@given(braids)
def test_components_match_strand_tracing(b):
    assert closure_component_count(b) == strand_cycles(b.ints(), b.strands)


@settings(max_examples=300, deadline=None)
@given(braids)
def test_padding_keeps_closure_and_parity(b):
    padded = ensure_all_generators_both_signs(b)
    assert underlying_permutation(padded) == underlying_permutation(b)
    g = closure_seifert_graph(b)
    assert (g.c - g.s + g.l) % 2 == 0


@settings(max_examples=200, deadline=None)
@given(braids)
def test_mirror_keeps_permutation(b):
    mirror = BraidWord.from_ints([-k for k in b.ints()], b.strands)
    assert underlying_permutation(mirror) == underlying_permutation(b)
