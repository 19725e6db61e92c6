"""Bloc and k-Copeland committees, head-to-head counts, and Condorcet machinery.

Vote counting is exact integer arithmetic throughout; a strict majority means
``2 * t > n``. Election-facing operations require an odd voter total so that
head-to-head contests cannot tie.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Sequence

import numpy as np

from . import kernels
from .profiles import Profile, eliminate_candidate, ranking_label


class NotSinglePeakedError(ValueError):
    """The operation is only defined for single-peaked profiles."""


@dataclass(frozen=True)
class BlocTally:
    """Per-candidate vote totals when every voter approves their top ``k``."""

    k: int
    votes: tuple[int, ...]


@dataclass(frozen=True, eq=False)
class PairwiseMatrix:
    """Head-to-head vote counts: ``t[i][j]`` voters prefer candidate i to j."""

    m: int
    n: int
    t: np.ndarray

    def count(self, i: int, j: int) -> int:
        return int(self.t[i, j])

    def beats(self, i: int, j: int) -> bool:
        """Strict majority of voters prefers i to j."""
        return 2 * int(self.t[i, j]) > self.n


@dataclass(frozen=True)
class WinningSet:
    """A committee of candidates plus how any boundary tie was handled.

    ``tie_broken`` is set when the tally of the last seated candidate equals
    the tally of the best unseated one; ``tied_candidates`` then records the
    whole group at that boundary value.
    """

    members: tuple[int, ...]
    tie_broken: bool = False
    tied_candidates: frozenset[int] | None = None

    def label(self, m: int) -> str:
        return ranking_label(self.members, m)


def _require_odd(p: Profile) -> None:
    if p.n % 2 == 0:
        raise ValueError(f"election requires an odd voter total, got {p.n}")


def _require_k(m: int, k: int) -> None:
    if not 1 <= k < m:
        raise ValueError(f"winner count k={k} out of range for m={m}")


def profile_arrays(p: Profile) -> tuple[np.ndarray, np.ndarray]:
    """Count vector and candidate-position table for the kernel functions."""
    if p.m > 127:
        raise ValueError("kernel position table limited to 127 candidates")
    rankings = p.rankings()
    r = len(rankings)
    x = np.fromiter(p.counts.values(), dtype=np.int64, count=r)
    order = np.array(rankings, dtype=np.int8).reshape(r, p.m)
    pos = np.empty_like(order)
    pos[np.arange(r)[:, None], order] = np.arange(p.m, dtype=np.int8)[None, :]
    return x, pos


def select_top_k(values: Sequence[int | float], k: int) -> WinningSet:
    """Top-k selection with leftmost (lowest-index) resolution of boundary ties."""
    order = sorted(range(len(values)), key=lambda c: (-values[c], c))
    members = tuple(sorted(order[:k]))
    boundary = values[order[k - 1]]
    tie = k < len(values) and values[order[k]] == boundary
    tied = (
        frozenset(c for c in range(len(values)) if values[c] == boundary)
        if tie
        else None
    )
    return WinningSet(members, tie_broken=tie, tied_candidates=tied)


def bloc_tally(p: Profile, k: int) -> BlocTally:
    """Each voter casts one vote for every candidate in their top ``k``."""
    _require_odd(p)
    _require_k(p.m, k)
    x, pos = profile_arrays(p)
    votes = kernels.bloc_votes(x, pos, k)
    return BlocTally(k, tuple(int(v) for v in votes))


def bloc_winners(p: Profile, k: int) -> WinningSet:
    """The ``k`` candidates with the highest Bloc tallies."""
    return select_top_k(bloc_tally(p, k).votes, k)


def pairwise_matrix(p: Profile) -> PairwiseMatrix:
    x, pos = profile_arrays(p)
    t = kernels.pairwise_counts(x, pos)
    off = ~np.eye(p.m, dtype=bool)
    assert (t.diagonal() == 0).all() and ((t + t.T)[off] == p.n).all()
    return PairwiseMatrix(p.m, p.n, t)


def _copeland_doubled(M: PairwiseMatrix) -> np.ndarray:
    # Integer scores at twice the usual scale: 2 per win, 1 per tie.
    wins = (2 * M.t > M.n).sum(axis=1)
    ties = (M.t == M.t.T).sum(axis=1) - 1
    return 2 * wins + ties


def copeland_scores(M: PairwiseMatrix) -> tuple[float, ...]:
    """One point per head-to-head win, half a point per tie."""
    return tuple(s / 2 for s in _copeland_doubled(M).tolist())


def copeland_ranking(M: PairwiseMatrix) -> tuple[int, ...]:
    """Candidates by descending Copeland score, ties by axis position.

    For a single-peaked profile with an odd electorate the scores are all
    distinct and this is the Condorcet ranking.
    """
    d = _copeland_doubled(M).tolist()
    return tuple(sorted(range(M.m), key=lambda c: (-d[c], c)))


def k_copeland_winners(M: PairwiseMatrix, k: int) -> list[WinningSet]:
    """Every committee compatible with the Copeland score order.

    Candidates scoring strictly above the k-th highest score sit in every
    committee; the remaining seats are filled by each possible choice from the
    group tied at that boundary score.
    """
    _require_k(M.m, k)
    d = _copeland_doubled(M).tolist()
    order = sorted(range(M.m), key=lambda c: (-d[c], c))
    cut = d[order[k - 1]]
    must = [c for c in range(M.m) if d[c] > cut]
    tied = [c for c in range(M.m) if d[c] == cut]
    slots = k - len(must)
    straddle = len(tied) > slots
    tied_set = frozenset(tied) if straddle else None
    sets = [
        WinningSet(tuple(sorted(must + list(combo))), straddle, tied_set)
        for combo in combinations(tied, slots)
    ]
    sets.sort(key=lambda w: w.members)
    return sets


def k_copeland_winner(M: PairwiseMatrix, k: int) -> WinningSet:
    """Deterministic single committee: boundary ties resolved leftmost."""
    _require_k(M.m, k)
    return select_top_k(_copeland_doubled(M).tolist(), k)


def condorcet_winner(M: PairwiseMatrix) -> int | None:
    """The candidate beating every other head to head, if one exists."""
    for c in range(M.m):
        if all(M.beats(c, d) for d in range(M.m) if d != c):
            return c
    return None


def median_elimination_ranking(p: Profile) -> tuple[int, ...]:
    """Rank candidates by repeatedly seating and removing the median favourite.

    Lay the first-place votes out in axis order and take the candidate holding
    position ``(n + 1) / 2``; that candidate wins every remaining head-to-head
    contest. Removing it and repeating yields the Condorcet ranking. Only
    defined for single-peaked profiles with an odd electorate.
    """
    if not p.single_peaked:
        raise NotSinglePeakedError("median elimination requires a single-peaked profile")
    _require_odd(p)
    alive = list(range(p.m))
    cur = p
    out: list[int] = []
    while True:
        firsts = [0] * cur.m
        for r, cnt in cur.counts.items():
            firsts[r[0]] += cnt
        target = (cur.n + 1) // 2
        acc = 0
        for idx in range(cur.m):
            acc += firsts[idx]
            if acc >= target:
                median = idx
                break
        out.append(alive.pop(median))
        if cur.m == 1:
            return tuple(out)
        cur = eliminate_candidate(cur, median)


def committee_monotonicity_violations(p: Profile, max_k: int) -> list[tuple[int, int]]:
    """Pairs ``(k, c)`` where ``c`` wins a ``k``-seat Bloc election but not ``k+1``.

    Uses the deterministic tie-broken committees; ``k`` runs from 1 to
    ``max_k`` as far as ``k+1`` is still a valid seat count.
    """
    _require_odd(p)
    if not 1 <= max_k < p.m:
        raise ValueError(f"max_k={max_k} out of range for m={p.m}")
    out: list[tuple[int, int]] = []
    prev = set(bloc_winners(p, 1).members)
    for k in range(1, min(max_k, p.m - 2) + 1):
        nxt = set(bloc_winners(p, k + 1).members)
        out.extend((k, c) for c in sorted(prev - nxt))
        prev = nxt
    return out
