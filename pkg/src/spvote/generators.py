"""Random single-peaked electorates: a composition-uniform model and two 1-D spatial models.

Model names as used by the CLI and the simulation module:

* ``iac``  — uniform over all count vectors of the single-peaked rankings that
  sum to the voter total (sampled exactly via the stars-and-bars bijection);
* ``en``   — voter ideal points from one normal distribution;
* ``eb``   — voter ideal points from an equal-weight mixture of two normals,
  modelling a polarised electorate: the voters split into two equal halves
  (the left half gets the odd voter) drawn around the two centres. Since
  distance rankings are invariant under rescaling the axis, only the
  centre-separation/stddev ratio matters; the default (centres ±1,
  component stddev 0.5) was calibrated against the reference committee
  distributions, which a unit component stddev cannot reproduce.

Spatial candidates are drawn uniformly *without replacement* from the voter
positions, then sorted so that candidate index equals axis position. A voter
ranks candidates by increasing distance; exact-distance ties go to the
lower-indexed (leftmost) candidate. The resulting profile is single-peaked by
construction.

Reproducibility: the stream for trial ``t`` of a campaign seeded with ``s`` is
``PCG64(SeedSequence((s, t)))``. Streams depend only on ``(s, t)``, never on
scheduling, so parallel runs are bit-reproducible.
"""

from __future__ import annotations

import functools
import io
from dataclasses import dataclass

import numpy as np

from .profiles import Profile, enumerate_single_peaked_rankings


@dataclass(frozen=True)
class NormalDistribution:
    mean: float = 0.0
    stddev: float = 1.0

    def __post_init__(self) -> None:
        if not self.stddev > 0:
            raise ValueError("stddev must be positive")

    def draw(self, n: int, rng: np.random.Generator) -> np.ndarray:
        return rng.normal(self.mean, self.stddev, n)


@dataclass(frozen=True)
class BimodalDistribution:
    """Equal-weight two-centre mixture with exact half-and-half assignment.

    ``ceil(n/2)`` voters draw around the left centre and ``floor(n/2)`` around
    the right one, so the two camps differ by at most the one unavoidable
    voter. (A per-voter coin flip would add a ``sqrt(n)/2``-sized camp
    imbalance per trial, which visibly distorts committee frequencies for
    electorates in the low thousands.)
    """

    mean_left: float = -1.0
    mean_right: float = 1.0
    stddev: float = 0.5

    def __post_init__(self) -> None:
        if not self.stddev > 0:
            raise ValueError("stddev must be positive")

    def draw(self, n: int, rng: np.random.Generator) -> np.ndarray:
        left = (n + 1) // 2
        return np.concatenate(
            [
                rng.normal(self.mean_left, self.stddev, left),
                rng.normal(self.mean_right, self.stddev, n - left),
            ]
        )


@dataclass(frozen=True)
class SpatialSpec:
    distribution: NormalDistribution | BimodalDistribution
    voters: int
    candidates: int

    def __post_init__(self) -> None:
        if self.voters % 2 == 0 or self.voters < 1:
            raise ValueError(f"voter total must be odd, got {self.voters}")
        if not 1 <= self.candidates <= self.voters:
            raise ValueError(
                f"candidate count {self.candidates} outside 1..{self.voters}"
            )


@dataclass(frozen=True)
class RandomSource:
    """Derives an independent, schedule-free random stream per trial index."""

    master_seed: int

    def stream(self, trial_index: int) -> np.random.Generator:
        seq = np.random.SeedSequence((self.master_seed, trial_index))
        return np.random.Generator(np.random.PCG64(seq))


def derive_stream(source: RandomSource, trial_index: int) -> np.random.Generator:
    return source.stream(trial_index)


@dataclass(frozen=True, eq=False)
class RankingTables:
    """Precomputed arrays over the canonical single-peaked ranking list."""

    m: int
    rankings: tuple[tuple[int, ...], ...]
    order: np.ndarray  # (r, m) int8, order[i, j] = candidate at position j
    pos: np.ndarray  # (r, m) int8, pos[i, c] = position of candidate c
    key_weights: np.ndarray  # base-m digit weights for encoding ranking rows
    key_to_index: dict[int, int]


@functools.lru_cache(maxsize=None)
def ranking_tables(m: int) -> RankingTables:
    if not 1 <= m <= 15:
        raise ValueError(f"ranking tables support 1..15 candidates, got {m}")
    rankings = tuple(enumerate_single_peaked_rankings(m))
    r = len(rankings)
    order = np.array(rankings, dtype=np.int8)
    pos = np.empty_like(order)
    pos[np.arange(r)[:, None], order] = np.arange(m, dtype=np.int8)[None, :]
    weights = (m ** np.arange(m - 1, -1, -1)).astype(np.int64)
    keys = order.astype(np.int64) @ weights
    key_to_index = {int(kv): i for i, kv in enumerate(keys.tolist())}
    return RankingTables(m, rankings, order, pos, weights, key_to_index)


def iac_count_vector(m: int, n: int, rng: np.random.Generator) -> np.ndarray:
    """Uniform count vector over the canonical single-peaked rankings.

    Stars and bars: choose ``r - 1`` distinct cut positions among the
    ``n + r - 1`` star/bar slots; the gaps between consecutive cuts are the
    counts. Every composition of ``n`` into ``r`` parts is hit exactly once,
    so the draw is exactly uniform.
    """
    if n < 1 or n % 2 == 0:
        raise ValueError(f"voter total must be odd, got {n}")
    if m < 2:
        raise ValueError("composition sampling needs at least two candidates")
    r = len(ranking_tables(m).rankings)
    total = n + r - 1
    cuts = np.sort(rng.choice(total, size=r - 1, replace=False))
    bounds = np.concatenate(([-1], cuts, [total]))
    return np.diff(bounds) - 1


def profile_from_count_vector(m: int, x: np.ndarray) -> Profile:
    tables = ranking_tables(m)
    counts = {
        tables.rankings[i]: int(v) for i, v in enumerate(x.tolist()) if v
    }
    return Profile(m, counts)


def sample_iac_single_peaked(m: int, n: int, rng: np.random.Generator) -> Profile:
    """A profile drawn uniformly from all single-peaked profiles of ``n`` voters."""
    return profile_from_count_vector(m, iac_count_vector(m, n, rng))


def spatial_positions(
    spec: SpatialSpec, rng: np.random.Generator
) -> tuple[np.ndarray, np.ndarray]:
    """Voter ideal points and sorted, distinct candidate positions.

    If the drawn candidate positions collide (possible only through floating
    point coincidences), the whole draw is repeated once before giving up.
    """
    for _ in range(2):
        voters = spec.distribution.draw(spec.voters, rng)
        chosen = rng.choice(voters, size=spec.candidates, replace=False)
        cands = np.sort(chosen)
        if spec.candidates == 1 or (np.diff(cands) > 0).all():
            return voters, cands
    raise RuntimeError("could not draw distinct candidate positions")


def rank_count_vector(voters: np.ndarray, cands: np.ndarray) -> np.ndarray:
    """Aggregate distance rankings into a canonical count vector.

    Stable argsort over the distance rows implements the leftmost tie rule.
    """
    m = len(cands)
    tables = ranking_tables(m)
    d = np.abs(voters[:, None] - cands[None, :])
    order = np.argsort(d, axis=1, kind="stable")
    keys = order @ tables.key_weights
    x = np.zeros(len(tables.rankings), dtype=np.int64)
    uniq, cnts = np.unique(keys, return_counts=True)
    for kv, cnt in zip(uniq.tolist(), cnts.tolist()):
        try:
            x[tables.key_to_index[kv]] = cnt
        except KeyError:  # pragma: no cover - impossible for 1-D distances
            raise AssertionError("spatial ranking is not single-peaked") from None
    return x


def spatial_count_vector(
    spec: SpatialSpec, rng: np.random.Generator
) -> tuple[np.ndarray, np.ndarray]:
    voters, cands = spatial_positions(spec, rng)
    return rank_count_vector(voters, cands), cands


def sample_spatial(
    spec: SpatialSpec, rng: np.random.Generator
) -> tuple[Profile, np.ndarray]:
    """Draw one spatial electorate; returns the profile and candidate positions."""
    x, cands = spatial_count_vector(spec, rng)
    profile = profile_from_count_vector(spec.candidates, x)
    assert profile.single_peaked and profile.n == spec.voters
    return profile, cands


def positions_csv(voters: np.ndarray, cands: np.ndarray) -> str:
    """Debug dump of one spatial draw: ``voter_pos,candidate_pos`` columns."""
    buf = io.StringIO()
    buf.write("voter_pos,candidate_pos\n")
    for i in range(max(len(voters), len(cands))):
        v = repr(float(voters[i])) if i < len(voters) else ""
        c = repr(float(cands[i])) if i < len(cands) else ""
        buf.write(f"{v},{c}\n")
    return buf.getvalue()
