import itertools

import pytest
from hypothesis import given, settings, strategies as st

from popwilf.poset import (
    LabeledPoset,
    PopSyntaxError,
    block_reversal,
    delete_labels,
    disjoint_sum,
    format_pop,
    from_classical,
    induced_subposet,
    ordinal_sum,
    parse_pop,
    standardise,
    transitive_closure,
)

VEE = LabeledPoset.build(3, {(2, 1), (3, 1)})  # 1 above both 2 and 3


def random_posets(max_size=5):
    """Random DAG on 1..k via upward edges, transitively closed."""

    @st.composite
    def build(draw):
        k = draw(st.integers(min_value=1, max_value=max_size))
        pairs = set()
        for a, b in itertools.combinations(range(1, k + 1), 2):
            flag = draw(st.sampled_from((0, 1, 2)))
            if flag == 1:
                pairs.add((a, b))
            elif flag == 2:
                pairs.add((b, a))
        try:
            return LabeledPoset.build(k, pairs)
        except ValueError:
            return LabeledPoset(k, frozenset())

    return build()


class TestConstruction:
    def test_validates_labels(self):
        with pytest.raises(ValueError):
            LabeledPoset(2, frozenset({(1, 3)}))

    def test_validates_irreflexive(self):
        with pytest.raises(ValueError):
            LabeledPoset(2, frozenset({(1, 1)}))

    def test_validates_antisymmetric(self):
        with pytest.raises(ValueError):
            LabeledPoset(2, frozenset({(1, 2), (2, 1)}))

    def test_requires_closure(self):
        with pytest.raises(ValueError):
            LabeledPoset(3, frozenset({(1, 2), (2, 3)}))
        p = LabeledPoset.build(3, {(1, 2), (2, 3)})
        assert p.less(1, 3)

    def test_closure_idempotent(self):
        pairs = transitive_closure({(1, 2), (2, 3), (3, 4)})
        assert transitive_closure(pairs) == pairs


class TestFromClassical:
    def test_213(self):
        p = from_classical((2, 1, 3))
        assert p.relation == frozenset({(2, 1), (2, 3), (1, 3)})

    def test_singleton(self):
        p = from_classical((1,))
        assert p.size == 1 and not p.relation

    def test_321_reverse_chain(self):
        p = from_classical((3, 2, 1))
        assert p.less(3, 2) and p.less(2, 1) and p.less(3, 1)

    def test_rejects_non_permutation(self):
        with pytest.raises(ValueError):
            from_classical((1, 3))


class TestLinearExtensions:
    def test_antichain_all_orderings(self):
        p = LabeledPoset(3, frozenset())
        assert len(p.linear_extensions()) == 6

    def test_chain_single(self):
        p = from_classical((3, 2, 1))
        assert p.linear_extensions() == [(3, 2, 1)]

    def test_one_relation_brute_force(self):
        # oracle: filter all orderings for order-compatibility
        p = LabeledPoset.build(3, {(3, 2)})
        expected = [e for e in itertools.permutations((1, 2, 3))
                    if e.index(3) < e.index(2)]
        assert p.linear_extensions() == sorted(expected)

    def test_lexicographic_order(self):
        p = LabeledPoset(3, frozenset())
        exts = p.linear_extensions()
        assert exts == sorted(exts)

    @settings(max_examples=60, deadline=None)
    @given(random_posets(5))
    def test_count_against_filter_oracle(self, p):
        expected = [e for e in itertools.permutations(range(1, p.size + 1))
                    if all(e.index(a) < e.index(b) for a, b in p.relation)]
        assert p.linear_extensions() == sorted(expected)

    @settings(max_examples=40, deadline=None)
    @given(random_posets(5))
    def test_antichain_iff_factorial(self, p):
        import math

        count = len(p.linear_extensions())
        assert count >= 1
        assert (count == math.factorial(p.size)) == (not p.relation)


class TestPatternSet:
    def test_theorem16_first_last_variant(self):
        p = parse_pop("pop 3: c[2>3], i[1]")
        assert p.pattern_set() == {(1, 3, 2), (2, 3, 1), (3, 2, 1)}

    def test_theorem16_first_second_variant(self):
        p = parse_pop("pop 3: c[3>2], i[1]")
        assert p.pattern_set() == {(1, 2, 3), (2, 1, 3), (3, 1, 2)}

    def test_chain_self(self):
        p = from_classical((3, 2, 1))
        assert p.pattern_set() == {(3, 2, 1)}

    @settings(max_examples=40, deadline=None)
    @given(random_posets(4))
    def test_reverse_reverses_patterns(self, p):
        reversed_patterns = {tuple(reversed(sigma)) for sigma in p.pattern_set()}
        assert p.reverse().pattern_set() == reversed_patterns


class TestStandardise:
    def test_rank_replacement(self):
        p = standardise([4, 7], {(7, 4)})
        assert p.size == 2 and p.relation == frozenset({(2, 1)})

    def test_single_vertex(self):
        p = standardise([9], set())
        assert p.size == 1 and not p.relation

    def test_restriction_of_example_chain(self):
        # chain 5 over 3 over 1 over 2 with 4 isolated, restricted to {4, 5}
        p = parse_pop("pop 5: c[3>5>1>2], i[4]")
        labels, rel = induced_subposet(p, {4, 5})
        st_p = standardise(labels, rel)
        assert st_p.size == 2 and not st_p.relation

    def test_rejects_duplicates(self):
        with pytest.raises(ValueError):
            standardise([2, 2], set())


class TestInducedSubposet:
    def test_restriction(self):
        p = from_classical((3, 2, 1))
        labels, rel = induced_subposet(p, {1, 3})
        assert rel == frozenset({(3, 1)})

    def test_empty(self):
        labels, rel = induced_subposet(from_classical((2, 1)), set())
        assert not labels and not rel

    def test_low_block_of_isolated_example(self):
        p = parse_pop("pop 5: c[5>1>2>3], i[4]")
        assert p.isolated_vertices() == {4}
        labels, rel = induced_subposet(p, {1, 2, 3})
        assert standardise(labels, rel) == from_classical((3, 2, 1))

    def test_rejects_foreign_labels(self):
        with pytest.raises(ValueError):
            induced_subposet(from_classical((2, 1)), {3})


class TestSums:
    def test_ordinal_sum_figure(self):
        chain = from_classical((1, 2))  # 1 below 2: drawn 2 over 1
        p = LabeledPoset.build(2, {(2, 1)})
        q = VEE
        s = ordinal_sum(p, q)
        assert s.size == 5
        for pair in [(2, 1), (1, 4), (1, 5), (4, 3), (5, 3), (2, 3)]:
            assert s.less(*pair), pair
        assert not s.comparable(4, 5)

    def test_ordinal_identity(self):
        p = from_classical((2, 1))
        assert ordinal_sum(p, LabeledPoset(0, frozenset())) == p

    def test_chains_concatenate(self):
        a, b = from_classical((1, 2)), from_classical((1, 2))
        s = ordinal_sum(a, b)
        assert s.all_chains() and len(s.connected_components()) == 1

    def test_disjoint_sum_figure(self):
        p = LabeledPoset.build(2, {(2, 1)})
        s = disjoint_sum(p, VEE)
        assert s.relation == frozenset({(2, 1), (5, 3), (4, 3)})
        assert sorted(map(sorted, s.connected_components())) == [[1, 2], [3, 4, 5]]

    def test_disjoint_identity(self):
        p = from_classical((2, 1))
        assert disjoint_sum(p, LabeledPoset(0, frozenset())) == p

    def test_antichains_stay_antichain(self):
        a = LabeledPoset(2, frozenset())
        assert not disjoint_sum(a, a).relation

    @settings(max_examples=30, deadline=None)
    @given(random_posets(2), random_posets(2), random_posets(2))
    def test_sums_associative(self, p, q, r):
        assert ordinal_sum(ordinal_sum(p, q), r) == ordinal_sum(p, ordinal_sum(q, r))
        assert disjoint_sum(disjoint_sum(p, q), r) == disjoint_sum(p, disjoint_sum(q, r))

    @settings(max_examples=30, deadline=None)
    @given(random_posets(3), random_posets(3))
    def test_disjoint_sum_symmetric_as_unlabeled(self, p, q):
        left = disjoint_sum(p, q)
        right = disjoint_sum(q, p)
        assert sorted(len(c) for c in left.connected_components()) == \
            sorted(len(c) for c in right.connected_components())
        assert len(left.relation) == len(right.relation)


class TestSymmetries:
    def test_reverse_tuple_identity(self):
        # reverse of (1,2,3;4) is (4,3,2;1)
        from popwilf.classify import pop_from_tuple, tuple_from_pop

        p = pop_from_tuple("(1,2,3;4)")
        assert tuple_from_pop(p.reverse()) == "(4,3,2;1)"

    def test_complement_tuple_identity(self):
        from popwilf.classify import pop_from_tuple, tuple_from_pop

        p = pop_from_tuple("(1,2,3;4)")
        assert tuple_from_pop(p.complement()) == "(3,2,1;4)"

    @settings(max_examples=40, deadline=None)
    @given(random_posets(5))
    def test_involutions(self, p):
        assert p.reverse().reverse() == p
        assert p.complement().complement() == p

    def test_antichain_fixed(self):
        a = LabeledPoset(3, frozenset())
        assert a.reverse() == a and a.complement() == a


class TestBlockReversal:
    def test_empty_block_identity(self):
        p = from_classical((2, 1))
        assert block_reversal(p, set()) == p

    def test_p_block_of_disjoint_sum(self):
        p_plus_q = disjoint_sum(VEE, LabeledPoset.build(2, {(2, 1)}))
        flipped = block_reversal(p_plus_q, {1, 2, 3})
        # vee top label 1 -> 3 after complementing within the block
        assert flipped.less(2, 3) and flipped.less(1, 3) and flipped.less(5, 4)

    def test_lemma_31_worked_pair(self):
        q = LabeledPoset.build(2, {(2, 1)})
        s = disjoint_sum(VEE, q)
        out = block_reversal(s, range(1, 4)).reverse()
        out = block_reversal(out, range(1, q.size + 1))
        assert out == disjoint_sum(q, VEE)

    def test_rejects_non_component_block(self):
        p = from_classical((1, 2, 3))
        with pytest.raises(ValueError):
            block_reversal(p, {1, 2})

    def test_rejects_non_contiguous(self):
        p = disjoint_sum(from_classical((1, 2)), from_classical((1, 2)))
        with pytest.raises(ValueError):
            block_reversal(p, {1, 4})


class TestComponents:
    def test_isolated_of_theorem12_example(self):
        p = parse_pop("pop 5: c[5>1>2>3], i[4]")
        assert p.isolated_vertices() == {4}

    def test_antichain_all_isolated(self):
        assert LabeledPoset(3, frozenset()).isolated_vertices() == {1, 2, 3}

    def test_vee_single_component_not_chain(self):
        assert len(VEE.connected_components()) == 1
        assert not VEE.all_chains()

    def test_chains_are_chains(self):
        p = parse_pop("pop 4: c[2>1], c[4>3]")
        assert p.all_chains()


class TestGrammar:
    def test_roundtrip_examples(self):
        for text in ["pop 5: c[3>5>1>2], i[4]", "pop 3: c[2>3], i[1]",
                     "pop 1: i[1]", "pop 4: c[1>2], c[3>4]"]:
            assert format_pop(parse_pop(text)) == text

    def test_positions_in_errors(self):
        with pytest.raises(PopSyntaxError) as err:
            parse_pop("pop 3: c[2>>1], i[3]")
        assert err.value.position == 11

    def test_missing_labels_detected(self):
        with pytest.raises(PopSyntaxError):
            parse_pop("pop 3: c[2>1]")

    def test_repeated_label_detected(self):
        with pytest.raises(PopSyntaxError):
            parse_pop("pop 2: c[1>1]")

    def test_non_chain_not_serializable(self):
        with pytest.raises(ValueError):
            format_pop(VEE)

    @settings(max_examples=40, deadline=None)
    @given(random_posets(5))
    def test_roundtrip_chain_component_posets(self, p):
        if not p.all_chains():
            return
        assert parse_pop(format_pop(p)) == p


class TestDeleteLabels:
    def test_drops_and_standardises(self):
        p = parse_pop("pop 5: c[3>5>1>2], i[4]")
        q = delete_labels(p, {4})
        assert format_pop(q) == "pop 4: c[3>4>1>2]"
