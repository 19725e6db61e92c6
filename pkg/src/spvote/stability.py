"""Committee quality checks: adjacency, head-to-head dominance, voter-block stability.

Three nested committee criteria, strongest first:

* *pairwise-dominant* (Gehrlein-stable): every member beats every non-member
  head to head;
* *Condorcet set*: every non-member is beaten by at least one member;
* *locally stable at quota q*: no group of at least ``q`` voters unanimously
  prefers one non-member to every member.

The "at least q" threshold is inclusive: a block of exactly ``q`` voters
already breaks local stability.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from . import kernels
from .elections import PairwiseMatrix, WinningSet, condorcet_winner, pairwise_matrix, profile_arrays
from .profiles import Profile, candidate_name


@dataclass(frozen=True)
class Quota:
    """Voter-block threshold as a function of electorate size and seat count."""

    kind: str  # "majority" | "droop" | "custom"
    amount: int | None = None

    @classmethod
    def majority(cls) -> "Quota":
        return cls("majority")

    @classmethod
    def droop(cls) -> "Quota":
        return cls("droop")

    @classmethod
    def custom(cls, amount: int) -> "Quota":
        return cls("custom", int(amount))

    def value(self, n: int, k: int) -> int:
        if self.kind == "majority":
            return n // 2 + 1
        if self.kind == "droop":
            return n // (k + 1) + 1
        if self.kind == "custom":
            if self.amount is None or not 1 <= self.amount <= n:
                raise ValueError(f"custom quota {self.amount} outside 1..{n}")
            return self.amount
        raise ValueError(f"unknown quota kind {self.kind!r}")

    @property
    def label(self) -> str:
        return self.kind if self.kind != "custom" else f"q={self.amount}"


def _members(w: WinningSet | Iterable[int], m: int) -> tuple[int, ...]:
    members = tuple(sorted(w.members if isinstance(w, WinningSet) else w))
    if not members:
        raise ValueError("committee must not be empty")
    if len(set(members)) != len(members):
        raise ValueError(f"duplicate candidates in committee {members}")
    if members[0] < 0 or members[-1] >= m:
        raise ValueError(f"committee {members} out of range for m={m}")
    return members


def is_adjacent(w: WinningSet | Iterable[int]) -> bool:
    """True iff the committee occupies consecutive axis positions."""
    members = sorted(w.members if isinstance(w, WinningSet) else w)
    return members[-1] - members[0] == len(members) - 1


def gehrlein_holds(
    t: np.ndarray, n: int, members: tuple[int, ...]
) -> tuple[bool, tuple[int, int] | None]:
    """Array-level pairwise-dominance test; witness is a (challenger, member) pair."""
    inside = set(members)
    for w in members:
        for c in range(t.shape[0]):
            if c not in inside and not 2 * t[w, c] > n:
                return False, (c, w)
    return True, None


def condorcet_set_holds(
    t: np.ndarray, n: int, members: tuple[int, ...]
) -> tuple[bool, int | None]:
    """Array-level Condorcet-set test; witness is an uncovered challenger."""
    inside = set(members)
    for c in range(t.shape[0]):
        if c in inside:
            continue
        if not any(2 * t[w, c] > n for w in members):
            return False, c
    return True, None


def is_gehrlein_stable(
    w: WinningSet | Iterable[int], M: PairwiseMatrix
) -> tuple[bool, tuple[int, int] | None]:
    """Does every member beat every non-member head to head?"""
    return gehrlein_holds(M.t, M.n, _members(w, M.m))


def is_condorcet_set(
    w: WinningSet | Iterable[int], M: PairwiseMatrix
) -> tuple[bool, int | None]:
    """Is every non-member beaten head to head by some member?"""
    return condorcet_set_holds(M.t, M.n, _members(w, M.m))


def block_size(p: Profile, c: int, w: WinningSet | Iterable[int]) -> int:
    """Voters ranking ``c`` strictly above every committee member."""
    members = _members(w, p.m)
    if c in members:
        raise ValueError(f"candidate {c} is a committee member")
    if not 0 <= c < p.m:
        raise ValueError(f"candidate {c} out of range for m={p.m}")
    x, pos = profile_arrays(p)
    mask = np.zeros(p.m, dtype=np.uint8)
    mask[list(members)] = 1
    return int(kernels.block_sizes(x, pos, mask)[c])


def max_block(
    p: Profile, w: WinningSet | Iterable[int]
) -> tuple[int, int] | None:
    """The non-member with the largest block and its size; None if none exist."""
    members = _members(w, p.m)
    x, pos = profile_arrays(p)
    mask = np.zeros(p.m, dtype=np.uint8)
    mask[list(members)] = 1
    blocks = kernels.block_sizes(x, pos, mask)
    return max_block_from_sizes(blocks, members)


def max_block_from_sizes(
    blocks: np.ndarray, members: tuple[int, ...]
) -> tuple[int, int] | None:
    inside = set(members)
    outsiders = [c for c in range(len(blocks)) if c not in inside]
    if not outsiders:
        return None
    best = max(outsiders, key=lambda c: (blocks[c], -c))
    return best, int(blocks[best])


def is_locally_stable(
    p: Profile, w: WinningSet | Iterable[int], q: Quota
) -> tuple[bool, tuple[int, int] | None]:
    """No non-member is preferred to the whole committee by ``q`` or more voters.

    The witness is always the strongest blocker (candidate, block size), even
    when the committee is stable.
    """
    members = _members(w, p.m)
    witness = max_block(p, members)
    if witness is None:
        return True, None
    return witness[1] < q.value(p.n, len(members)), witness


@dataclass(frozen=True)
class StabilityReport:
    """All committee verdicts for one profile, with witnessing evidence."""

    m: int
    members: tuple[int, ...]
    adjacent: bool
    gehrlein_stable: bool
    condorcet_set: bool
    condorcet_winner: int | None
    contains_condorcet_winner: bool | None
    locally_stable: dict[str, bool]
    quota_values: dict[str, int]
    gehrlein_witness: tuple[int, int] | None
    condorcet_set_witness: int | None
    max_block: tuple[int, int] | None

    def to_json_dict(self) -> dict:
        def name(c: int | None) -> str | None:
            return None if c is None else candidate_name(c, self.m)

        witnesses: dict[str, object] = {}
        if self.gehrlein_witness is not None:
            c, w = self.gehrlein_witness
            witnesses["gehrlein"] = {"challenger": name(c), "not_beaten_by": name(w)}
        if self.condorcet_set_witness is not None:
            witnesses["condorcet_set"] = {"uncovered": name(self.condorcet_set_witness)}
        if self.max_block is not None:
            witnesses["max_block"] = {
                "candidate": name(self.max_block[0]),
                "size": self.max_block[1],
            }
        return {
            "committee": [name(c) for c in self.members],
            "adjacent": self.adjacent,
            "gehrlein_stable": self.gehrlein_stable,
            "condorcet_set": self.condorcet_set,
            "condorcet_winner": name(self.condorcet_winner),
            "contains_condorcet_winner": self.contains_condorcet_winner,
            "locally_stable": dict(self.locally_stable),
            "quota_values": dict(self.quota_values),
            "witnesses": witnesses,
        }


def classify(
    p: Profile,
    w: WinningSet | Iterable[int],
    quotas: tuple[Quota, ...] = (Quota.majority(), Quota.droop()),
) -> StabilityReport:
    """Evaluate every committee criterion for ``w`` against profile ``p``."""
    members = _members(w, p.m)
    if p.n % 2 == 0:
        raise ValueError(f"classification requires an odd voter total, got {p.n}")
    M = pairwise_matrix(p)
    adjacent = is_adjacent(members)
    gehrlein, geh_wit = gehrlein_holds(M.t, M.n, members)
    cset, cset_wit = condorcet_set_holds(M.t, M.n, members)
    cw = condorcet_winner(M)
    contains_cw = None if cw is None else cw in members
    blocker = max_block(p, members)
    k = len(members)
    quota_values = {q.label: q.value(p.n, k) for q in quotas}
    locally = {
        label: blocker is None or blocker[1] < qv
        for label, qv in quota_values.items()
    }

    assert not gehrlein or cset
    if "majority" in locally:
        assert not gehrlein or locally["majority"]
    if p.single_peaked and cw is not None:
        assert cset == contains_cw

    return StabilityReport(
        m=p.m,
        members=members,
        adjacent=adjacent,
        gehrlein_stable=gehrlein,
        condorcet_set=cset,
        condorcet_winner=cw,
        contains_condorcet_winner=contains_cw,
        locally_stable=locally,
        quota_values=quota_values,
        gehrlein_witness=geh_wit,
        condorcet_set_witness=cset_wit,
        max_block=blocker,
    )
