"""Bundled electorates with independently recorded outcomes.

Every profile ships as a plain text file in this package so it can also be fed
directly to ``spvote elect`` / ``spvote classify``; ``spvote verify`` replays
the recorded outcomes below against the engine.
"""

from __future__ import annotations

from dataclasses import dataclass
from importlib import resources
from typing import Callable

from ..elections import (
    bloc_tally,
    bloc_winners,
    committee_monotonicity_violations,
    condorcet_winner,
    copeland_scores,
    k_copeland_winners,
    median_elimination_ranking,
    pairwise_matrix,
)
from ..profiles import Profile, eliminate_candidate, parse_profile
from ..stability import Quota, block_size, classify, is_condorcet_set, is_gehrlein_stable

CheckFn = Callable[[Profile], tuple[bool, str]]


@dataclass(frozen=True)
class Check:
    description: str
    run: CheckFn


@dataclass(frozen=True)
class Fixture:
    name: str
    filename: str
    checks: tuple[Check, ...]


def load(name: str) -> Profile:
    """Load a bundled fixture profile by name."""
    fixture = by_name(name)
    text = resources.files(__package__).joinpath(fixture.filename).read_text("utf-8")
    return parse_profile(text)


def by_name(name: str) -> Fixture:
    for f in FIXTURES:
        if f.name == name:
            return f
    raise KeyError(f"unknown fixture {name!r}")


def run_fixture(fixture: Fixture) -> list[tuple[Check, bool, str]]:
    """Run every check; a load/parse failure fails all of them."""
    try:
        profile = load(fixture.name)
    except Exception as exc:  # profile file unreadable or malformed
        return [(c, False, f"fixture load failed: {exc}") for c in fixture.checks]
    out = []
    for check in fixture.checks:
        try:
            ok, detail = check.run(profile)
        except Exception as exc:
            ok, detail = False, f"raised {type(exc).__name__}: {exc}"
        out.append((check, ok, detail))
    return out


def _eq(expected, actual) -> tuple[bool, str]:
    return expected == actual, f"expected {expected!r}, got {actual!r}"


def _check_bloc(k: int, members: tuple[int, ...]) -> CheckFn:
    return lambda p: _eq(members, bloc_winners(p, k).members)


def _check_tally(k: int, votes: tuple[int, ...]) -> CheckFn:
    return lambda p: _eq(votes, bloc_tally(p, k).votes)


def _check_scores(scores: tuple[float, ...]) -> CheckFn:
    return lambda p: _eq(scores, copeland_scores(pairwise_matrix(p)))


def _check_pairwise(cells: dict[tuple[int, int], int]) -> CheckFn:
    def run(p: Profile) -> tuple[bool, str]:
        M = pairwise_matrix(p)
        bad = {ij: (want, M.count(*ij)) for ij, want in cells.items() if M.count(*ij) != want}
        return not bad, f"mismatched head-to-head counts: {bad}"

    return run


def _check_condorcet_winner(c: int | None) -> CheckFn:
    return lambda p: _eq(c, condorcet_winner(pairwise_matrix(p)))


def _check_copeland_sets(k: int, sets: list[tuple[int, ...]]) -> CheckFn:
    return lambda p: _eq(
        sets, [w.members for w in k_copeland_winners(pairwise_matrix(p), k)]
    )


def _check_median_order(order: tuple[int, ...]) -> CheckFn:
    return lambda p: _eq(order, median_elimination_ranking(p))


def _check_classification(
    members: tuple[int, ...],
    gehrlein: bool,
    condorcet_set: bool,
    locally_majority: bool,
) -> CheckFn:
    def run(p: Profile) -> tuple[bool, str]:
        rep = classify(p, members)
        got = (rep.gehrlein_stable, rep.condorcet_set, rep.locally_stable["majority"])
        return _eq((gehrlein, condorcet_set, locally_majority), got)

    return run


def _check_block(c: int, members: tuple[int, ...], size: int) -> CheckFn:
    return lambda p: _eq(size, block_size(p, c, members))


def _check_all_pairs_lose(members: tuple[int, ...]) -> CheckFn:
    """Every non-member beats every member head to head."""

    def run(p: Profile) -> tuple[bool, str]:
        M = pairwise_matrix(p)
        inside = set(members)
        bad = [
            (c, w)
            for c in range(p.m)
            if c not in inside
            for w in members
            if not M.beats(c, w)
        ]
        return not bad, f"pairs where the challenger fails to win: {bad}"

    return run


def _check_beats(pairs: list[tuple[int, int]], expected: bool = True) -> CheckFn:
    def run(p: Profile) -> tuple[bool, str]:
        M = pairwise_matrix(p)
        bad = [(i, j) for i, j in pairs if M.beats(i, j) != expected]
        word = "losing" if expected else "winning"
        return not bad, f"unexpected {word} pairs: {bad}"

    return run


A, B, C, D, E, F, G = range(7)

FIXTURES: tuple[Fixture, ...] = (
    Fixture(
        "bloc-five-145",
        "bloc-five-145.profile",
        (
            Check("top-2 tallies are 50/140/20/35/45", _check_tally(2, (50, 140, 20, 35, 45))),
            Check("1 seat elects A", _check_bloc(1, (A,))),
            Check("2 seats elect AB", _check_bloc(2, (A, B))),
            Check("3 seats elect BCE", _check_bloc(3, (B, C, E))),
            Check("4 seats elect BCDE", _check_bloc(4, (B, C, D, E))),
            Check(
                "head-to-head counts match the recorded table",
                _check_pairwise(
                    {
                        (A, B): 50, (B, A): 95,
                        (A, C): 50, (C, A): 95,
                        (A, D): 50, (D, A): 95,
                        (A, E): 50, (E, A): 95,
                        (B, C): 125, (C, B): 20,
                        (B, D): 110, (D, B): 35,
                        (B, E): 140, (E, B): 5,
                        (C, D): 110, (D, C): 35,
                        (C, E): 70, (E, C): 75,
                        (D, E): 100, (E, D): 45,
                    }
                ),
            ),
            Check("Copeland scores are 0,4,2,2,2", _check_scores((0.0, 4.0, 2.0, 2.0, 2.0))),
            Check(
                "2-seat Copeland ties give BC, BD, BE",
                _check_copeland_sets(2, [(B, C), (B, D), (B, E)]),
            ),
            Check(
                "3-seat Copeland ties give BCD, BCE, BDE",
                _check_copeland_sets(3, [(B, C, D), (B, C, E), (B, D, E)]),
            ),
            Check("4-seat Copeland committee is BCDE", _check_copeland_sets(4, [(B, C, D, E)])),
            Check("Condorcet winner is B", _check_condorcet_winner(B)),
            Check(
                "A falls out of the committee between k=2 and k=3",
                lambda p: _eq(True, (2, A) in committee_monotonicity_violations(p, 4)),
            ),
            Check(
                "AB is a Condorcet set but not pairwise-dominant",
                lambda p: _eq(
                    (True, False),
                    (
                        is_condorcet_set((A, B), pairwise_matrix(p))[0],
                        is_gehrlein_stable((A, B), pairwise_matrix(p))[0],
                    ),
                ),
            ),
        ),
    ),
    Fixture(
        "axis-median-211",
        "axis-median-211.profile",
        (
            Check("profile is single-peaked", lambda p: _eq(True, p.single_peaked)),
            Check("median elimination seats C, B, A, D", _check_median_order((C, B, A, D))),
            Check("Copeland scores are 1,2,3,0", _check_scores((1.0, 2.0, 3.0, 0.0))),
            Check(
                "removing C leaves the adjusted 50/141/20 profile",
                lambda p: _eq(
                    {(0, 1, 2): 50, (1, 0, 2): 141, (2, 1, 0): 20},
                    eliminate_candidate(p, C).counts,
                ),
            ),
        ),
    ),
    Fixture(
        "center-squeeze-61",
        "center-squeeze-61.profile",
        (
            Check("2 seats elect the split pair BD", _check_bloc(2, (B, D))),
            Check("Condorcet winner is C", _check_condorcet_winner(C)),
            Check("41 voters prefer C to B and 41 prefer C to D",
                  _check_pairwise({(C, B): 41, (C, D): 41})),
            Check("only 21 voters prefer C to both winners", _check_block(C, (B, D), 21)),
            Check(
                "BD: not dominant, not a Condorcet set, majority-stable",
                _check_classification((B, D), False, False, True),
            ),
            Check(
                "a 21-voter quota breaks BD's local stability",
                lambda p: _eq(
                    False,
                    classify(p, (B, D), (Quota.droop(),)).locally_stable["droop"],
                ),
            ),
            Check(
                "droop quota evaluates to 21 here",
                lambda p: _eq(21, Quota.droop().value(p.n, 2)),
            ),
        ),
    ),
    Fixture(
        "flank-pair-251",
        "flank-pair-251.profile",
        (
            Check("2 seats elect the left flank AB", _check_bloc(2, (A, B))),
            Check("A polls 101 and B 151", lambda p: _eq((101, 151), bloc_tally(p, 2).votes[:2])),
            Check(
                "C, D, E all beat A and C also beats B, 150 votes to 101",
                _check_pairwise(
                    {(C, A): 150, (D, A): 150, (E, A): 150, (C, B): 150, (A, C): 101, (B, C): 101}
                ),
            ),
            Check(
                "AB is neither dominant nor a Condorcet set nor majority-stable",
                _check_classification((A, B), False, False, False),
            ),
            Check(
                "the strongest blocker is C with 150 voters",
                lambda p: _eq((C, 150), classify(p, (A, B)).max_block),
            ),
        ),
    ),
    Fixture(
        "split-pair-205",
        "split-pair-205.profile",
        (
            Check("2 seats elect the split pair BD", _check_bloc(2, (B, D))),
            Check(
                "B polls 102 and D 103",
                lambda p: _eq((102, 103), tuple(bloc_tally(p, 2).votes[i] for i in (B, D))),
            ),
            Check(
                "E beats B 103-102; C beats B 104-101 and D 103-102",
                _check_pairwise({(E, B): 103, (C, B): 104, (C, D): 103}),
            ),
            Check(
                "BD is not dominant, not a Condorcet set, yet majority-stable",
                _check_classification((B, D), False, False, True),
            ),
        ),
    ),
    Fixture(
        "six-flank-ab-9",
        "six-flank-ab-9.profile",
        (
            Check("2 seats elect the left flank AB", _check_bloc(2, (A, B))),
            Check("every non-winner beats both winners", _check_all_pairs_lose((A, B))),
            Check("Condorcet winner is D", _check_condorcet_winner(D)),
            Check(
                "AB fails every criterion at the majority quota",
                _check_classification((A, B), False, False, False),
            ),
            Check(
                "the blocking group has 5 voters",
                lambda p: _eq(5, classify(p, (A, B)).max_block[1]),
            ),
        ),
    ),
    Fixture(
        "six-offcenter-bc-9",
        "six-offcenter-bc-9.profile",
        (
            Check("2 seats elect BC", _check_bloc(2, (B, C))),
            Check("D beats both winners", _check_beats([(D, B), (D, C)])),
            Check("E and F beat B", _check_beats([(E, B), (F, B)])),
            Check("Condorcet winner is D", _check_condorcet_winner(D)),
            Check(
                "BC is neither a Condorcet set nor majority-stable",
                _check_classification((B, C), False, False, False),
            ),
        ),
    ),
    Fixture(
        "seven-flank-abc-9",
        "seven-flank-abc-9.profile",
        (
            Check("3 seats elect the left flank ABC", _check_bloc(3, (A, B, C))),
            Check("Condorcet winner is D", _check_condorcet_winner(D)),
            Check(
                "every non-winner beats A",
                _check_beats([(D, A), (E, A), (F, A), (G, A)]),
            ),
            Check("a 5-voter block prefers D to all winners", _check_block(D, (A, B, C), 5)),
            Check(
                "ABC is not locally stable at the majority quota",
                _check_classification((A, B, C), False, False, False),
            ),
        ),
    ),
    Fixture(
        "seven-split-bce-9",
        "seven-split-bce-9.profile",
        (
            Check("3 seats elect the split BCE", _check_bloc(3, (B, C, E))),
            Check("Condorcet winner is E", _check_condorcet_winner(E)),
            Check("D beats B and C but not E", _check_beats([(D, B), (D, C)])),
            Check("D does not beat E", _check_beats([(D, E)], expected=False)),
            Check("F and G beat B", _check_beats([(F, B), (G, B)])),
            Check(
                "BCE: not dominant, a Condorcet set, majority-stable",
                _check_classification((B, C, E), False, True, True),
            ),
        ),
    ),
    Fixture(
        "seven-squeeze-cd-13",
        "seven-squeeze-cd-13.profile",
        (
            Check("2 seats elect the central pair CD", _check_bloc(2, (C, D))),
            Check("Condorcet winner is E", _check_condorcet_winner(E)),
            Check(
                "CD fails every criterion at the majority quota",
                _check_classification((C, D), False, False, False),
            ),
            Check(
                "an 8-voter block prefers E to both winners (quota 7)",
                lambda p: _eq((E, 8), classify(p, (C, D)).max_block),
            ),
        ),
    ),
)
