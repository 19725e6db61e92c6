"""Candidates, rankings, and anonymous ballot profiles on a fixed left-to-right axis.

Candidates are identified by their axis position: index 0 is the leftmost
candidate, index m-1 the rightmost. For up to 26 candidates the text format
renders indices as the letters A..Z; beyond that, decimal indices are used.

A ranking is *single-peaked* with respect to the axis when every top-j prefix
of it covers a contiguous interval of candidate indices, i.e. each successive
candidate extends the interval built so far by one position on either side.
"""

from __future__ import annotations

import functools
import re
from dataclasses import dataclass, field
from typing import Iterable

Ranking = tuple[int, ...]


class ProfileError(ValueError):
    """Malformed profile data or profile text."""


def candidate_name(c: int, m: int) -> str:
    """Render candidate index ``c`` as a letter (m <= 26) or as a decimal index."""
    if not 0 <= c < m:
        raise ValueError(f"candidate index {c} out of range for m={m}")
    return chr(ord("A") + c) if m <= 26 else str(c)


def parse_candidate(token: str, m: int) -> int:
    """Inverse of :func:`candidate_name`; accepts letters (any case) and digits."""
    token = token.strip()
    if len(token) == 1 and token.isalpha():
        c = ord(token.upper()) - ord("A")
    elif token.isdigit():
        c = int(token)
    else:
        raise ValueError(f"unknown candidate {token!r}")
    if not 0 <= c < m:
        raise ValueError(f"candidate {token!r} out of range for m={m}")
    return c


def ranking_label(r: Iterable[int], m: int) -> str:
    names = [candidate_name(c, m) for c in r]
    return "".join(names) if m <= 26 else "-".join(names)


def is_single_peaked(ranking: Ranking) -> bool:
    """True iff every top-j prefix of the ranking is a contiguous index interval."""
    lo = hi = ranking[0]
    for c in ranking[1:]:
        if c == lo - 1:
            lo = c
        elif c == hi + 1:
            hi = c
        else:
            return False
    return True


@functools.lru_cache(maxsize=None)
def _sp_rankings(m: int) -> tuple[Ranking, ...]:
    out: list[Ranking] = []

    def grow(seq: list[int], lo: int, hi: int) -> None:
        if len(seq) == m:
            out.append(tuple(seq))
            return
        if lo > 0:
            grow(seq + [lo - 1], lo - 1, hi)
        if hi < m - 1:
            grow(seq + [hi + 1], lo, hi + 1)

    for peak in range(m):
        grow([peak], peak, peak)
    out.sort()
    return tuple(out)


def enumerate_single_peaked_rankings(m: int) -> list[Ranking]:
    """All single-peaked rankings of ``m`` candidates, in lexicographic order.

    There are exactly ``2**(m-1)``: after the peak, each next candidate is the
    current interval's left or right neighbour.
    """
    if m < 1:
        raise ValueError("candidate count must be at least 1")
    return list(_sp_rankings(m))


@dataclass(frozen=True)
class Profile:
    """An anonymous electorate: how many voters hold each ranking.

    ``counts`` maps rankings (most-preferred candidate first) to positive voter
    counts; zero-count entries are dropped and duplicates merged at
    construction. The total ``n`` and the ``single_peaked`` flag are derived.
    Instances are immutable; do not mutate ``counts`` in place.
    """

    m: int
    counts: dict[Ranking, int]
    n: int = field(init=False)
    single_peaked: bool = field(init=False)

    def __post_init__(self) -> None:
        if self.m < 1:
            raise ProfileError("candidate count must be at least 1")
        want = list(range(self.m))
        clean: dict[Ranking, int] = {}
        for r, cnt in self.counts.items():
            ranking = tuple(int(c) for c in r)
            cnt = int(cnt)
            if cnt < 0:
                raise ProfileError(f"negative count {cnt} for ranking {ranking}")
            if sorted(ranking) != want:
                raise ProfileError(
                    f"ranking {ranking} is not a permutation of 0..{self.m - 1}"
                )
            if cnt:
                clean[ranking] = clean.get(ranking, 0) + cnt
        object.__setattr__(self, "counts", dict(sorted(clean.items())))
        object.__setattr__(self, "n", sum(clean.values()))
        object.__setattr__(
            self, "single_peaked", all(is_single_peaked(r) for r in clean)
        )

    def rankings(self) -> list[Ranking]:
        """Rankings with positive count, in lexicographic order."""
        return list(self.counts)


def profile_from_counts(
    m: int,
    entries: Iterable[tuple[Iterable[int], int]],
    require_odd: bool = False,
) -> Profile:
    """Build a profile from ``(ranking, count)`` pairs, merging duplicates.

    With ``require_odd`` (the election-facing constructor) an even voter total
    is rejected, since election semantics here presuppose an odd electorate.
    """
    acc: dict[Ranking, int] = {}
    for r, cnt in entries:
        key = tuple(int(c) for c in r)
        acc[key] = acc.get(key, 0) + int(cnt)
    p = Profile(m, acc)
    if require_odd and p.n % 2 == 0:
        raise ProfileError(f"voter total must be odd, got {p.n}")
    return p


def eliminate_candidate(p: Profile, c: int) -> Profile:
    """Remove candidate ``c``: delete it from every ballot and close the axis gap.

    Indices above ``c`` shift down by one, so the surviving candidates keep
    their left-to-right order; rankings made identical by the deletion are
    merged. The voter total is unchanged and single-peakedness is preserved.
    """
    if not 0 <= c < p.m:
        raise ValueError(f"candidate {c} out of range for m={p.m}")
    if p.m < 2:
        raise ValueError("cannot eliminate the only candidate")
    acc: dict[Ranking, int] = {}
    for r, cnt in p.counts.items():
        nr = tuple(x - 1 if x > c else x for x in r if x != c)
        acc[nr] = acc.get(nr, 0) + cnt
    out = Profile(p.m - 1, acc)
    assert not p.single_peaked or out.single_peaked
    assert out.n == p.n
    return out


_HEADER_RE = re.compile(r"m\s*=\s*(\d+)")


def parse_profile(text: str) -> Profile:
    """Parse the line-oriented profile format.

    Comment lines start with ``#``. The first data line must be ``m=<count>``;
    each following line is ``<count>: <candidates, best first>``. Duplicate
    ranking lines are merged.
    """
    m: int | None = None
    entries: list[tuple[Ranking, int]] = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        if m is None:
            mo = _HEADER_RE.fullmatch(line)
            if not mo:
                raise ProfileError(
                    f"line {lineno}: expected 'm=<candidates>' header, got {line!r}"
                )
            m = int(mo.group(1))
            if m < 1:
                raise ProfileError(f"line {lineno}: candidate count must be >= 1")
            continue
        count_part, sep, rank_part = line.partition(":")
        if not sep:
            raise ProfileError(f"line {lineno}: expected '<count>: <ranking>'")
        try:
            cnt = int(count_part.strip())
        except ValueError:
            raise ProfileError(
                f"line {lineno}: bad ballot count {count_part.strip()!r}"
            ) from None
        if cnt < 0:
            raise ProfileError(f"line {lineno}: negative ballot count {cnt}")
        tokens = rank_part.split()
        if len(tokens) != m:
            raise ProfileError(
                f"line {lineno}: expected {m} candidates, got {len(tokens)}"
            )
        try:
            ranking = tuple(parse_candidate(t, m) for t in tokens)
        except ValueError as exc:
            raise ProfileError(f"line {lineno}: {exc}") from None
        if sorted(ranking) != list(range(m)):
            raise ProfileError(f"line {lineno}: ranking is not a permutation")
        entries.append((ranking, cnt))
    if m is None:
        raise ProfileError("missing 'm=<candidates>' header")
    return profile_from_counts(m, entries)


def serialize_profile(p: Profile) -> str:
    """Emit the text format; ballot lines appear in canonical lexicographic order."""
    lines = [f"m={p.m}"]
    for r, cnt in p.counts.items():
        cands = " ".join(candidate_name(c, p.m) for c in r)
        lines.append(f"{cnt}: {cands}")
    return "\n".join(lines) + "\n"
