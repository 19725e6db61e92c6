"""Brute-force reference implementations, independent of the library internals.

Everything here expands the profile to a flat per-voter ballot list and counts
naively; suitable only for small electorates, which is the point.
"""

from __future__ import annotations

from spvote.profiles import Profile


def expand(p: Profile) -> list[tuple[int, ...]]:
    out: list[tuple[int, ...]] = []
    for r, cnt in p.counts.items():
        out.extend([r] * cnt)
    return out


def bloc_votes(p: Profile, k: int) -> list[int]:
    votes = [0] * p.m
    for ballot in expand(p):
        for c in ballot[:k]:
            votes[c] += 1
    return votes


def pairwise(p: Profile) -> list[list[int]]:
    t = [[0] * p.m for _ in range(p.m)]
    for ballot in expand(p):
        for i, a in enumerate(ballot):
            for b in ballot[i + 1 :]:
                t[a][b] += 1
    return t


def copeland_scores(p: Profile) -> list[float]:
    t = pairwise(p)
    scores = []
    for a in range(p.m):
        s = 0.0
        for b in range(p.m):
            if a == b:
                continue
            if t[a][b] > t[b][a]:
                s += 1.0
            elif t[a][b] == t[b][a]:
                s += 0.5
        scores.append(s)
    return scores


def condorcet_winner(p: Profile) -> int | None:
    t = pairwise(p)
    for c in range(p.m):
        if all(t[c][d] > t[d][c] for d in range(p.m) if d != c):
            return c
    return None


def block_size(p: Profile, c: int, members: tuple[int, ...]) -> int:
    count = 0
    for ballot in expand(p):
        pos = {cand: i for i, cand in enumerate(ballot)}
        if all(pos[c] < pos[w] for w in members):
            count += 1
    return count


def is_single_peaked_profile(p: Profile) -> bool:
    for ballot in p.counts:
        for j in range(1, p.m + 1):
            prefix = ballot[:j]
            if max(prefix) - min(prefix) + 1 != j:
                return False
    return True
