"""Numpy fallback for the counting kernels.

All kernels operate on a profile given as a count vector ``counts`` (int64,
one entry per ranking) and a position table ``pos`` (int8, ``pos[i, c]`` is
the position of candidate ``c`` in ranking ``i``, 0 = most preferred).
"""

from __future__ import annotations

import numpy as np

BACKEND = "pure"


def bloc_votes(counts: np.ndarray, pos: np.ndarray, k: int) -> np.ndarray:
    """Per-candidate number of voters ranking the candidate in their top k."""
    return counts @ (pos < k)


def pairwise_counts(counts: np.ndarray, pos: np.ndarray) -> np.ndarray:
    """Head-to-head matrix: ``t[a, b]`` voters place a above b."""
    prefers = pos[:, :, None] < pos[:, None, :]
    return np.tensordot(counts, prefers, axes=1)


def block_sizes(counts: np.ndarray, pos: np.ndarray, members: np.ndarray) -> np.ndarray:
    """Voters placing each non-member above every member of the committee.

    ``members`` is a uint8 mask over candidates; member entries of the result
    are zero.
    """
    wmin = pos[:, members.astype(bool)].min(axis=1)
    out = counts @ (pos < wmin[:, None])
    out[members.astype(bool)] = 0
    return out
