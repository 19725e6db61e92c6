import pytest
from hypothesis import given, settings

from spvote import fixtures
from spvote.elections import (
    NotSinglePeakedError,
    WinningSet,
    bloc_tally,
    bloc_winners,
    committee_monotonicity_violations,
    condorcet_winner,
    copeland_ranking,
    copeland_scores,
    k_copeland_winner,
    k_copeland_winners,
    median_elimination_ranking,
    pairwise_matrix,
    select_top_k,
)
from spvote.profiles import profile_from_counts

import oracles
from strategies import sp_profiles, any_profiles

A, B, C, D, E = range(5)


@pytest.fixture(scope="module")
def ex145():
    return fixtures.load("bloc-five-145")


@pytest.fixture(scope="module")
def ex211():
    return fixtures.load("axis-median-211")


@pytest.fixture(scope="module")
def ex61():
    return fixtures.load("center-squeeze-61")


class TestBloc:
    def test_tally_k2(self, ex145):
        assert bloc_tally(ex145, 2).votes == (50, 140, 20, 35, 45)

    def test_tally_k3(self, ex145):
        assert bloc_tally(ex145, 3).votes == (50, 145, 110, 55, 75)

    def test_winner_progression(self, ex145):
        assert bloc_winners(ex145, 1).members == (A,)
        assert bloc_winners(ex145, 2).members == (A, B)
        assert bloc_winners(ex145, 3).members == (B, C, E)
        assert bloc_winners(ex145, 4).members == (B, C, D, E)

    def test_unanimous_profile(self):
        p = profile_from_counts(3, [((0, 1, 2), 3)])
        w = bloc_winners(p, 2)
        assert w.members == (0, 1) and not w.tie_broken

    def test_k_out_of_range(self, ex145):
        for bad in (0, 5, -1):
            with pytest.raises(ValueError):
                bloc_tally(ex145, bad)

    def test_even_totals_rejected(self):
        p = profile_from_counts(3, [((0, 1, 2), 2)])
        with pytest.raises(ValueError):
            bloc_tally(p, 1)

    @given(sp_profiles())
    @settings(max_examples=60)
    def test_tally_sums_to_k_n(self, p):
        for k in range(1, p.m):
            assert sum(bloc_tally(p, k).votes) == k * p.n

    @given(any_profiles())
    @settings(max_examples=40, deadline=None)
    def test_tally_matches_brute_force(self, p):
        for k in range(1, p.m):
            assert list(bloc_tally(p, k).votes) == oracles.bloc_votes(p, k)


class TestSelectTopK:
    def test_boundary_tie_resolves_leftmost(self):
        w = select_top_k([5, 3, 3, 1], 2)
        assert w.members == (0, 1)
        assert w.tie_broken and w.tied_candidates == frozenset({1, 2})

    def test_internal_tie_is_not_flagged(self):
        w = select_top_k([4, 4, 2, 1], 2)
        assert w.members == (0, 1) and not w.tie_broken

    def test_full_tie_group_recorded(self):
        w = select_top_k([2, 2, 2], 2)
        assert w.members == (0, 1)
        assert w.tied_candidates == frozenset({0, 1, 2})


class TestPairwise:
    def test_recorded_table(self, ex145):
        M = pairwise_matrix(ex145)
        assert M.count(A, B) == 50 and M.count(B, A) == 95
        assert M.count(C, E) == 70 and M.count(E, C) == 75

    def test_cycle_in_145(self, ex145):
        M = pairwise_matrix(ex145)
        assert M.beats(C, D) and M.beats(D, E) and M.beats(E, C)

    def test_center_squeeze_margins(self, ex61):
        M = pairwise_matrix(ex61)
        # recomputed from the ballot table; C tops every contest with 41 votes
        assert M.count(C, B) == 41
        assert M.count(C, D) == 41

    def test_unanimous(self):
        p = profile_from_counts(3, [((1, 0, 2), 5)])
        M = pairwise_matrix(p)
        assert M.count(1, 0) == 5 and M.count(1, 2) == 5 and M.count(0, 1) == 0

    @given(any_profiles())
    @settings(max_examples=40, deadline=None)
    def test_matches_brute_force(self, p):
        M = pairwise_matrix(p)
        assert M.t.tolist() == oracles.pairwise(p)


class TestCopeland:
    def test_scores_145(self, ex145):
        assert copeland_scores(pairwise_matrix(ex145)) == (0.0, 4.0, 2.0, 2.0, 2.0)

    def test_scores_211(self, ex211):
        assert copeland_scores(pairwise_matrix(ex211)) == (1.0, 2.0, 3.0, 0.0)

    def test_unanimous_scores_follow_ballot(self):
        p = profile_from_counts(4, [((2, 0, 3, 1), 7)])
        scores = copeland_scores(pairwise_matrix(p))
        assert scores[2] == 3 and scores[0] == 2 and scores[3] == 1 and scores[1] == 0

    def test_tied_sets_k2(self, ex145):
        sets = k_copeland_winners(pairwise_matrix(ex145), 2)
        assert [w.members for w in sets] == [(B, C), (B, D), (B, E)]
        assert all(w.tie_broken for w in sets)
        assert sets[0].tied_candidates == frozenset({C, D, E})

    def test_tied_sets_k3(self, ex145):
        # every committee compatible with the score order 4 > 2 = 2 = 2 > 0
        sets = k_copeland_winners(pairwise_matrix(ex145), 3)
        assert [w.members for w in sets] == [(B, C, D), (B, C, E), (B, D, E)]

    def test_k4_unique(self, ex145):
        sets = k_copeland_winners(pairwise_matrix(ex145), 4)
        assert [w.members for w in sets] == [(B, C, D, E)]
        assert not sets[0].tie_broken

    def test_deterministic_pick_is_leftmost(self, ex145):
        assert k_copeland_winner(pairwise_matrix(ex145), 2).members == (B, C)

    @given(any_profiles())
    @settings(max_examples=40, deadline=None)
    def test_scores_match_brute_force(self, p):
        assert list(copeland_scores(pairwise_matrix(p))) == oracles.copeland_scores(p)


class TestCondorcetWinner:
    def test_145_winner_is_b(self, ex145):
        assert condorcet_winner(pairwise_matrix(ex145)) == B

    def test_61_winner_is_c(self, ex61):
        assert condorcet_winner(pairwise_matrix(ex61)) == C

    def test_cycle_has_no_winner(self):
        p = profile_from_counts(3, [((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1)])
        assert oracles.condorcet_winner(p) is None
        assert condorcet_winner(pairwise_matrix(p)) is None

    @given(any_profiles())
    @settings(max_examples=40, deadline=None)
    def test_matches_brute_force(self, p):
        assert condorcet_winner(pairwise_matrix(p)) == oracles.condorcet_winner(p)


class TestMedianElimination:
    def test_211_order(self, ex211):
        assert median_elimination_ranking(ex211) == (C, B, A, D)

    def test_unanimous_follows_ballot(self):
        p = profile_from_counts(4, [((2, 1, 3, 0), 9)])
        assert median_elimination_ranking(p) == (2, 1, 3, 0)

    def test_rejects_non_single_peaked(self, ex145):
        with pytest.raises(NotSinglePeakedError):
            median_elimination_ranking(ex145)

    @given(sp_profiles())
    @settings(max_examples=80)
    def test_equals_copeland_order(self, p):
        assert median_elimination_ranking(p) == copeland_ranking(pairwise_matrix(p))


class TestSinglePeakedStructure:
    @given(sp_profiles())
    @settings(max_examples=80)
    def test_majority_relation_is_a_strict_total_order(self, p):
        M = pairwise_matrix(p)
        for i in range(p.m):
            for j in range(i + 1, p.m):
                assert M.beats(i, j) != M.beats(j, i)
        order = copeland_ranking(M)
        for i in range(p.m):
            for j in range(i + 1, p.m):
                assert M.beats(order[i], order[j])

    @given(sp_profiles())
    @settings(max_examples=80)
    def test_copeland_scores_are_a_permutation(self, p):
        scores = copeland_scores(pairwise_matrix(p))
        assert sorted(scores) == [float(i) for i in range(p.m)]

    @given(sp_profiles(min_m=3))
    @settings(max_examples=60)
    def test_left_prefix_tallies_are_monotone(self, p):
        for k in range(1, p.m):
            votes = bloc_tally(p, k).votes
            for i in range(k - 1):
                assert votes[i] <= votes[i + 1]
            for i in range(p.m - k, p.m - 1):
                assert votes[i] >= votes[i + 1]


class TestCommitteeMonotonicity:
    def test_145_drops_a_after_k2(self, ex145):
        violations = committee_monotonicity_violations(ex145, 4)
        assert (2, A) in violations

    def test_unanimous_has_none(self):
        p = profile_from_counts(4, [((0, 1, 2, 3), 5)])
        assert committee_monotonicity_violations(p, 3) == []

    @given(sp_profiles(min_m=3))
    @settings(max_examples=40)
    def test_matches_recomputation_from_tallies(self, p):
        got = committee_monotonicity_violations(p, p.m - 1)
        expected = []
        for k in range(1, p.m - 1):
            now = set(bloc_winners(p, k).members)
            nxt = set(bloc_winners(p, k + 1).members)
            expected.extend((k, c) for c in sorted(now - nxt))
        assert got == expected


def test_winning_set_label():
    assert WinningSet((1, 2)).label(5) == "BC"
