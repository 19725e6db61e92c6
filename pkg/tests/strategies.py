"""Hypothesis strategies shared across the test modules."""

from __future__ import annotations

from hypothesis import strategies as st

from spvote.profiles import Profile, enumerate_single_peaked_rankings


@st.composite
def sp_profiles(draw, min_m: int = 2, max_m: int = 7, max_count: int = 30) -> Profile:
    """Random single-peaked profile with an odd voter total."""
    m = draw(st.integers(min_m, max_m))
    rankings = enumerate_single_peaked_rankings(m)
    counts = draw(
        st.lists(st.integers(0, max_count), min_size=len(rankings), max_size=len(rankings))
    )
    if sum(counts) % 2 == 0:
        bump = draw(st.integers(0, len(rankings) - 1))
        counts[bump] += 1
    return Profile(m, {r: c for r, c in zip(rankings, counts) if c})


@st.composite
def any_profiles(draw, min_m: int = 2, max_m: int = 6, max_count: int = 20) -> Profile:
    """Random profile over arbitrary rankings, odd voter total."""
    m = draw(st.integers(min_m, max_m))
    base = tuple(range(m))
    rankings = draw(
        st.lists(st.permutations(base), min_size=1, max_size=8, unique_by=tuple)
    )
    counts = draw(
        st.lists(st.integers(0, max_count), min_size=len(rankings), max_size=len(rankings))
    )
    if sum(counts) % 2 == 0:
        counts[draw(st.integers(0, len(counts) - 1))] += 1
    return Profile(m, {tuple(r): c for r, c in zip(rankings, counts) if c})
