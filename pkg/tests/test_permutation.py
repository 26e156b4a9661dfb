import math
from itertools import permutations

import pytest
from hypothesis import given, settings, strategies as st

from popwilf.permutation import (
    BudgetError,
    Permutation,
    RankOverflowError,
    avoiders,
    contains_pop,
    contains_pop_via_patterns,
    count_avoiders,
    count_avoiders_naive,
    left_multiply_adjacent,
    p_rank,
    p_ranks,
)
from popwilf.poset import LabeledPoset, from_classical, parse_pop

from test_poset import random_posets


class TestPermutationType:
    def test_parse_compact(self):
        assert Permutation.from_string("45231") == (4, 5, 2, 3, 1)

    def test_parse_commas(self):
        assert Permutation.from_string("10,2,3,4,5,6,7,8,9,1")[0] == 10

    def test_str_forms(self):
        assert str(Permutation((4, 5, 2, 3, 1))) == "45231"
        assert "," in str(Permutation(tuple(range(1, 11))))

    def test_rejects_non_bijection(self):
        with pytest.raises(ValueError):
            Permutation((1, 1, 2))

    def test_inverse(self):
        w = Permutation((3, 1, 2))
        assert w.inverse() == (2, 3, 1)


class TestContains:
    def test_antichain_any_positions(self):
        assert contains_pop((1, 2, 3, 4, 5), LabeledPoset(3, frozenset()))

    def test_theorem16_variant(self):
        pp = parse_pop("pop 3: c[3>2], i[1]")  # avoid {123, 213, 312}
        assert not contains_pop((3, 2, 1), pp)
        assert contains_pop((1, 2, 3), pp)

    def test_witness_is_lexicographically_least(self):
        # 45231 holds the values 4,2,3 at positions 1,3,4: its first (and
        # lex-least) 312 occurrence; an exhaustive scan finds no 213 at all
        p312 = from_classical((3, 1, 2))
        assert contains_pop((4, 5, 2, 3, 1), p312, witness=True) == (0, 2, 3)
        assert not contains_pop((4, 5, 2, 3, 1), from_classical((2, 1, 3)))

    def test_too_short_is_false(self):
        assert not contains_pop((1,), from_classical((1, 2)))

    @settings(max_examples=60, deadline=None)
    @given(random_posets(4), st.permutations(tuple(range(1, 7))))
    def test_detectors_agree(self, p, w):
        assert contains_pop(tuple(w), p) == contains_pop_via_patterns(tuple(w), p)

    def test_detectors_agree_exhaustively(self):
        # every poset of size <= 3 and every chain-component poset of size 4,
        # against every permutation of length <= 5
        from popwilf.classify import chain_component_pops
        from popwilf.poset import transitive_closure
        from itertools import combinations

        pops = []
        for k in (1, 2, 3):
            seen = set()
            pair_slots = list(combinations(range(1, k + 1), 2))
            for flags in range(3 ** len(pair_slots)):
                pairs = set()
                rem = flags
                for a, b in pair_slots:
                    rem, flag = divmod(rem, 3)
                    if flag == 1:
                        pairs.add((a, b))
                    elif flag == 2:
                        pairs.add((b, a))
                closed = transitive_closure(pairs)
                if any((b, a) in closed or a == b for a, b in closed):
                    continue
                if closed not in seen:
                    seen.add(closed)
                    pops.append(LabeledPoset(k, closed))
        pops.extend(chain_component_pops(4))
        for n in range(1, 6):
            for w in permutations(range(1, n + 1)):
                for p in pops:
                    assert contains_pop(w, p) == contains_pop_via_patterns(w, p)


class TestCountAvoiders:
    def test_table1_row1(self):
        seq = count_avoiders(from_classical((2, 1, 3)), 8)
        assert seq.counts == (1, 2, 5, 14, 42, 132, 429, 1430)

    def test_table1_row2(self):
        seq = count_avoiders(parse_pop("pop 3: c[1>2], i[3]"), 8)
        assert seq.counts == (1, 2, 3, 4, 5, 6, 7, 8)

    def test_table1_row3(self):
        seq = count_avoiders(parse_pop("pop 3: c[1>3], i[2]"), 8)
        assert seq.counts == (1, 2, 3, 5, 8, 13, 21, 34)

    def test_budget_error(self):
        with pytest.raises(BudgetError):
            count_avoiders(from_classical((2, 1)), 10)
        count_avoiders(from_classical((2, 1)), 10, budget=None)

    def test_matches_naive_oracle(self):
        for text in ["pop 3: c[2>3], i[1]", "pop 4: c[1>2], c[3>4]",
                     "pop 4: c[4>1>2>3]"]:
            p = parse_pop(text)
            assert count_avoiders(p, 6).counts == count_avoiders_naive(p, 6).counts

    def test_short_lengths_are_factorials(self):
        p = parse_pop("pop 5: c[1>2>3>4], i[5]")
        seq = count_avoiders(p, 6)
        for n in range(1, 5):
            assert seq.counts[n - 1] == math.factorial(n)

    def test_worker_counts_identical(self):
        p = parse_pop("pop 4: c[4>1>2>3]")
        base = count_avoiders(p, 8).counts
        assert count_avoiders(p, 8, workers=2).counts == base
        assert count_avoiders(p, 8, workers=5).counts == base

    def test_csv_and_json(self):
        seq = count_avoiders(from_classical((2, 1)), 3)
        assert seq.to_csv().splitlines()[1] == "1,1"
        assert '"counts": [1, 1, 1]' in seq.to_json()


class TestAvoiders:
    def test_increasing_only(self):
        assert list(avoiders(from_classical((2, 1)), 3)) == [(1, 2, 3)]

    def test_short_pattern_all(self):
        assert len(list(avoiders(LabeledPoset(4, frozenset()), 3))) == 6

    def test_theorem16_variant_count(self):
        pp = parse_pop("pop 3: c[3>2], i[1]")
        found = list(avoiders(pp, 3))
        expected = [w for w in permutations((1, 2, 3)) if not contains_pop(w, pp)]
        assert found == expected and len(found) == 3

    def test_lexicographic_and_cardinality(self):
        p = parse_pop("pop 3: c[1>3], i[2]")
        for n in range(1, 6):
            outs = list(avoiders(p, n))
            assert outs == sorted(outs)
            assert len(outs) == count_avoiders(p, n).counts[n - 1]


class TestPRank:
    def test_first_entry_rank_one(self):
        p = from_classical((3, 2, 1))
        assert p_rank((1, 2, 3), p, 1) == 1

    def test_ranks_of_132_under_increasing_chain(self):
        p = from_classical((1, 2, 3))
        assert p_ranks((1, 3, 2), p) == [1, 2, 2]

    def test_overflow_on_containment(self):
        p = from_classical((1, 2, 3))
        with pytest.raises(RankOverflowError):
            p_rank((1, 2, 3), p, 3)

    def test_left_neighbour_of_top_rank(self):
        # inside an avoider of the extended pattern, every top-rank entry of
        # the reduced pattern sits just right of a rank-(k-1) entry
        from popwilf.poset import delete_labels
        from popwilf.permutation import _rank_at

        p = parse_pop("pop 5: c[3>5>1>2], i[4]")
        q = delete_labels(p, {4})
        K = q.size
        for w in avoiders(p, 6):
            for i in range(1, 7):
                if _rank_at(w, q, i, allow_full=True) == K:
                    assert i >= 2
                    assert _rank_at(w, q, i - 1, allow_full=True) == K - 1


class TestLeftMultiply:
    def test_s1_on_identity(self):
        assert left_multiply_adjacent((1, 2, 3), [1]) == (2, 1, 3)
        assert left_multiply_adjacent((1, 2, 3), [1], convention="value") == (2, 1, 3)

    def test_conventions_differ_in_general(self):
        w = (2, 3, 1)
        assert left_multiply_adjacent(w, [1]) == (3, 2, 1)
        assert left_multiply_adjacent(w, [1], convention="value") == (1, 3, 2)

    def test_disjoint_involution(self):
        w = (4, 3, 2, 1)
        out = left_multiply_adjacent(w, [1, 3])
        assert left_multiply_adjacent(out, [1, 3]) == w

    def test_range_check(self):
        with pytest.raises(ValueError):
            left_multiply_adjacent((1, 2), [2])
