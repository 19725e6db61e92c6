"""Seeded simulation campaigns comparing Bloc and k-Copeland committees trial by trial.

Each trial draws one electorate from the configured model, elects both
committees (deterministic leftmost tie handling, tie occurrences counted),
records agreement, and classifies the Bloc committee exactly. Aggregation is
a commutative merge of integer counters, so results are identical for any
worker count.

Two stability figures are reported: exact per-trial rates, and the classic
lower bounds obtained by summing the frequencies of committee labels that are
*guaranteed* stable for the given ``(m, k)`` (available for 4-7 candidates).
"""

from __future__ import annotations

import json
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field

import numpy as np

from . import kernels
from .elections import select_top_k
from .generators import (
    BimodalDistribution,
    NormalDistribution,
    RandomSource,
    RankingTables,
    SpatialSpec,
    iac_count_vector,
    ranking_tables,
    spatial_count_vector,
)
from .profiles import ranking_label
from .stability import (
    Quota,
    condorcet_set_holds,
    gehrlein_holds,
    is_adjacent,
    max_block_from_sizes,
)

MODELS = ("iac", "en", "eb")
TIE_POLICIES = ("resolve_leftmost", "discard_trial")


@dataclass(frozen=True)
class ExperimentConfig:
    """One campaign: model, sizes, seed, and how boundary ties are handled.

    ``resolve_leftmost`` seats the lower-indexed candidate and keeps the
    trial (occurrences are counted); ``discard_trial`` drops any trial where
    either method hit a boundary tie, reporting the number discarded.
    """

    m: int
    k: int
    trials: int
    model: str
    seed: int = 0
    voters: int = 1001
    tie_policy: str = "resolve_leftmost"
    quotas: tuple[Quota, ...] = (Quota.majority(), Quota.droop())

    def __post_init__(self) -> None:
        if self.m < 2:
            raise ValueError("need at least two candidates")
        if not 1 <= self.k < self.m:
            raise ValueError(f"winner count k={self.k} out of range for m={self.m}")
        if self.trials < 1:
            raise ValueError("need at least one trial")
        if self.model not in MODELS:
            raise ValueError(f"unknown model {self.model!r}; expected one of {MODELS}")
        if self.voters % 2 == 0 or self.voters < 1:
            raise ValueError(f"voter total must be odd, got {self.voters}")
        if self.tie_policy not in TIE_POLICIES:
            raise ValueError(f"unknown tie policy {self.tie_policy!r}")
        if not self.quotas:
            raise ValueError("need at least one quota")


# Committee labels guaranteed stable by the structural results for small
# candidate counts. First table: every Bloc committee with that label is
# pairwise-dominant (hence also locally stable). Second table: additional
# labels guaranteed locally stable only.
_GEHRLEIN_LABELS: dict[tuple[int, int], tuple[str, ...]] = {
    (4, 2): ("AB", "BC", "CD"),
    (4, 3): ("ABC", "BCD"),
    (5, 2): ("BC", "CD"),
    (5, 3): ("ABC", "BCD", "CDE"),
    (5, 4): ("ABCD", "BCDE"),
    (6, 2): ("CD",),
    (6, 3): ("ABC", "BCD", "CDE", "DEF"),
    (6, 4): ("ABCD", "BCDE", "CDEF"),
    (6, 5): ("ABCDE", "BCDEF"),
    (7, 2): (),
    (7, 3): ("BCD", "CDE", "DEF"),
    (7, 4): ("ABCD", "BCDE", "CDEF", "DEFG"),
    (7, 5): ("ABCDE", "BCDEF", "CDEFG"),
    (7, 6): ("ABCDEF", "BCDEFG"),
}
_EXTRA_LOCAL_LABELS: dict[tuple[int, int], tuple[str, ...]] = {
    (5, 2): ("BD",),
    (6, 2): ("BD", "BE", "CE"),
    (7, 3): ("BCE", "CEF"),
}


def _label_members(label: str) -> tuple[int, ...]:
    return tuple(sorted(ord(ch) - ord("A") for ch in label))


def guaranteed_stable_labels(
    m: int, k: int
) -> tuple[frozenset[tuple[int, ...]], frozenset[tuple[int, ...]]]:
    """Committees guaranteed (pairwise-dominant, locally stable) for ``(m, k)``."""
    try:
        gehrlein = _GEHRLEIN_LABELS[(m, k)]
    except KeyError:
        raise ValueError(
            f"no guaranteed-stability table for m={m}, k={k}; "
            "exact per-trial rates remain available"
        ) from None
    extra = _EXTRA_LOCAL_LABELS.get((m, k), ())
    g = frozenset(_label_members(s) for s in gehrlein)
    return g, g | frozenset(_label_members(s) for s in extra)


@dataclass
class ExperimentResult:
    config: ExperimentConfig
    bloc_freq: dict[tuple[int, ...], int] = field(default_factory=dict)
    copeland_freq: dict[tuple[int, ...], int] = field(default_factory=dict)
    agreement_count: int = 0
    bloc_tie_count: int = 0
    copeland_tie_count: int = 0
    discarded_trials: int = 0
    gehrlein_count: int = 0
    condorcet_set_count: int = 0
    adjacent_count: int = 0
    locally_stable_counts: dict[str, int] = field(default_factory=dict)
    label_gehrlein_count: int | None = None
    label_locally_stable_count: int | None = None

    @property
    def effective_trials(self) -> int:
        return self.config.trials - self.discarded_trials

    def _rate(self, count: int) -> float:
        return count / self.effective_trials if self.effective_trials else 0.0

    @property
    def agreement_rate(self) -> float:
        return self._rate(self.agreement_count)

    @property
    def gehrlein_rate(self) -> float:
        return self._rate(self.gehrlein_count)

    @property
    def condorcet_set_rate(self) -> float:
        return self._rate(self.condorcet_set_count)

    @property
    def adjacent_rate(self) -> float:
        return self._rate(self.adjacent_count)

    @property
    def locally_stable_rate(self) -> dict[str, float]:
        return {lbl: self._rate(c) for lbl, c in self.locally_stable_counts.items()}

    @property
    def label_lower_bounds(self) -> dict[str, float] | None:
        if self.label_gehrlein_count is None:
            return None
        return {
            "gehrlein": self._rate(self.label_gehrlein_count),
            "locally_stable": self._rate(self.label_locally_stable_count or 0),
        }


def stability_lower_bound_from_labels(result: ExperimentResult) -> dict[str, float]:
    """Class-membership lower bounds recomputed from the committee frequencies.

    Sums the frequencies of Bloc committees whose label is in the
    guaranteed-stable classes for this ``(m, k)``. Raises ValueError when no
    table exists for the configuration.
    """
    g_class, l_class = guaranteed_stable_labels(result.config.m, result.config.k)
    g = sum(c for members, c in result.bloc_freq.items() if members in g_class)
    l = sum(c for members, c in result.bloc_freq.items() if members in l_class)
    eff = result.effective_trials
    return {
        "gehrlein": g / eff if eff else 0.0,
        "locally_stable": l / eff if eff else 0.0,
    }


def _sample_counts(
    cfg: ExperimentConfig,
    tables: RankingTables,
    spec: SpatialSpec | None,
    rng: np.random.Generator,
) -> np.ndarray:
    if cfg.model == "iac":
        return iac_count_vector(cfg.m, cfg.voters, rng)
    assert spec is not None
    x, _ = spatial_count_vector(spec, rng)
    return x


def model_spatial_spec(cfg: ExperimentConfig) -> SpatialSpec | None:
    """The spatial drawing spec behind ``cfg.model``; None for the composition model."""
    if cfg.model == "en":
        return SpatialSpec(NormalDistribution(), cfg.voters, cfg.m)
    if cfg.model == "eb":
        return SpatialSpec(BimodalDistribution(), cfg.voters, cfg.m)
    return None


def _run_range(cfg: ExperimentConfig, start: int, stop: int) -> ExperimentResult:
    tables = ranking_tables(cfg.m)
    spec = model_spatial_spec(cfg)
    source = RandomSource(cfg.seed)
    n, k = cfg.voters, cfg.k
    quota_values = {q.label: q.value(n, k) for q in cfg.quotas}
    try:
        g_class, l_class = guaranteed_stable_labels(cfg.m, cfg.k)
    except ValueError:
        g_class = l_class = None

    part = ExperimentResult(config=cfg)
    part.locally_stable_counts = {lbl: 0 for lbl in quota_values}
    if g_class is not None:
        part.label_gehrlein_count = 0
        part.label_locally_stable_count = 0

    discard = cfg.tie_policy == "discard_trial"
    progress = stop - start >= 50_000 and sys.stderr.isatty()

    for t in range(start, stop):
        if progress and (t - start) % 10_000 == 0:
            print(f"trial {t - start}/{stop - start}", file=sys.stderr)
        rng = source.stream(t)
        x = _sample_counts(cfg, tables, spec, rng)

        votes = kernels.bloc_votes(x, tables.pos, k)
        bloc = select_top_k(votes.tolist(), k)
        t_mat = kernels.pairwise_counts(x, tables.pos)
        wins = (2 * t_mat > n).sum(axis=1)
        ties = (t_mat == t_mat.T).sum(axis=1) - 1
        cop = select_top_k((2 * wins + ties).tolist(), k)

        if bloc.tie_broken:
            part.bloc_tie_count += 1
        if cop.tie_broken:
            part.copeland_tie_count += 1
        if discard and (bloc.tie_broken or cop.tie_broken):
            part.discarded_trials += 1
            continue

        members = bloc.members
        part.bloc_freq[members] = part.bloc_freq.get(members, 0) + 1
        part.copeland_freq[cop.members] = part.copeland_freq.get(cop.members, 0) + 1
        if members == cop.members:
            part.agreement_count += 1

        if gehrlein_holds(t_mat, n, members)[0]:
            part.gehrlein_count += 1
        if condorcet_set_holds(t_mat, n, members)[0]:
            part.condorcet_set_count += 1
        if is_adjacent(members):
            part.adjacent_count += 1

        mask = np.zeros(cfg.m, dtype=np.uint8)
        mask[list(members)] = 1
        blocker = max_block_from_sizes(kernels.block_sizes(x, tables.pos, mask), members)
        size = 0 if blocker is None else blocker[1]
        for lbl, qv in quota_values.items():
            if size < qv:
                part.locally_stable_counts[lbl] += 1

        if g_class is not None:
            if members in g_class:
                part.label_gehrlein_count += 1
            if members in l_class:
                part.label_locally_stable_count += 1
    return part


def _merge(into: ExperimentResult, other: ExperimentResult) -> None:
    for members, c in other.bloc_freq.items():
        into.bloc_freq[members] = into.bloc_freq.get(members, 0) + c
    for members, c in other.copeland_freq.items():
        into.copeland_freq[members] = into.copeland_freq.get(members, 0) + c
    into.agreement_count += other.agreement_count
    into.bloc_tie_count += other.bloc_tie_count
    into.copeland_tie_count += other.copeland_tie_count
    into.discarded_trials += other.discarded_trials
    into.gehrlein_count += other.gehrlein_count
    into.condorcet_set_count += other.condorcet_set_count
    into.adjacent_count += other.adjacent_count
    for lbl, c in other.locally_stable_counts.items():
        into.locally_stable_counts[lbl] = into.locally_stable_counts.get(lbl, 0) + c
    if other.label_gehrlein_count is not None:
        into.label_gehrlein_count = (into.label_gehrlein_count or 0) + other.label_gehrlein_count
        into.label_locally_stable_count = (
            into.label_locally_stable_count or 0
        ) + (other.label_locally_stable_count or 0)


def run_experiment(cfg: ExperimentConfig, workers: int = 1) -> ExperimentResult:
    """Run the campaign; the result is independent of ``workers``.

    Trials own independent derived streams and the counters merge
    commutatively, so any split into worker chunks yields the same result.
    """
    if workers <= 1 or cfg.trials < 2:
        return _run_range(cfg, 0, cfg.trials)
    workers = min(workers, cfg.trials)
    bounds = np.linspace(0, cfg.trials, workers + 1, dtype=int)
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = list(
            pool.map(_run_range, [cfg] * workers, bounds[:-1], bounds[1:])
        )
    total = parts[0]
    for part in parts[1:]:
        _merge(total, part)
    return total


def _report_dict(result: ExperimentResult) -> dict:
    cfg = result.config
    m = cfg.m
    eff = result.effective_trials

    def freq_and_prob(freq: dict[tuple[int, ...], int]) -> tuple[dict, dict]:
        items = sorted(freq.items())
        counts = {ranking_label(mem, m): c for mem, c in items}
        probs = {ranking_label(mem, m): (c / eff if eff else 0.0) for mem, c in items}
        return counts, probs

    bloc_counts, bloc_probs = freq_and_prob(result.bloc_freq)
    cop_counts, cop_probs = freq_and_prob(result.copeland_freq)
    return {
        "config": {
            "m": cfg.m,
            "k": cfg.k,
            "voters": cfg.voters,
            "trials": cfg.trials,
            "model": cfg.model,
            "seed": cfg.seed,
            "tie_policy": cfg.tie_policy,
            "quotas": [q.label for q in cfg.quotas],
        },
        "effective_trials": eff,
        "discarded_trials": result.discarded_trials,
        "bloc_freq": bloc_counts,
        "bloc_prob": bloc_probs,
        "copeland_freq": cop_counts,
        "copeland_prob": cop_probs,
        "agreement_count": result.agreement_count,
        "agreement_rate": result.agreement_rate,
        "bloc_tie_count": result.bloc_tie_count,
        "copeland_tie_count": result.copeland_tie_count,
        "gehrlein_rate": result.gehrlein_rate,
        "condorcet_set_rate": result.condorcet_set_rate,
        "adjacent_rate": result.adjacent_rate,
        "locally_stable_rate": result.locally_stable_rate,
        "label_lower_bounds": result.label_lower_bounds,
    }


def emit_report(result: ExperimentResult, format: str = "json") -> str:
    """Render the result deterministically as ``json``, ``csv`` or ``text``."""
    doc = _report_dict(result)
    if format == "json":
        return json.dumps(doc, indent=2, sort_keys=True) + "\n"
    if format == "csv":
        return _emit_csv(doc)
    if format == "text":
        return _emit_text(doc)
    raise ValueError(f"unknown report format {format!r}")


def _emit_csv(doc: dict) -> str:
    lines = ["winning_set,bloc_count,bloc_prob,copeland_count,copeland_prob"]
    labels = sorted(set(doc["bloc_freq"]) | set(doc["copeland_freq"]))
    for lbl in labels:
        bc = doc["bloc_freq"].get(lbl, 0)
        bp = doc["bloc_prob"].get(lbl, 0.0)
        cc = doc["copeland_freq"].get(lbl, 0)
        cp = doc["copeland_prob"].get(lbl, 0.0)
        lines.append(f"{lbl},{bc},{bp!r},{cc},{cp!r}")
    lines.append(f"agreement,{doc['agreement_count']},{doc['agreement_rate']!r},,")
    lines.append(f"bloc_ties,{doc['bloc_tie_count']},,,")
    lines.append(f"copeland_ties,{doc['copeland_tie_count']},,,")
    lines.append(f"discarded,{doc['discarded_trials']},,,")
    lines.append(f"gehrlein_rate,,{doc['gehrlein_rate']!r},,")
    lines.append(f"condorcet_set_rate,,{doc['condorcet_set_rate']!r},,")
    lines.append(f"adjacent_rate,,{doc['adjacent_rate']!r},,")
    for lbl in sorted(doc["locally_stable_rate"]):
        lines.append(
            f"locally_stable_rate[{lbl}],,{doc['locally_stable_rate'][lbl]!r},,"
        )
    if doc["label_lower_bounds"] is not None:
        for key in sorted(doc["label_lower_bounds"]):
            lines.append(
                f"label_lower_bound[{key}],,{doc['label_lower_bounds'][key]!r},,"
            )
    return "\n".join(lines) + "\n"


def _emit_text(doc: dict) -> str:
    cfg = doc["config"]
    out = [
        f"model={cfg['model']} m={cfg['m']} k={cfg['k']} voters={cfg['voters']} "
        f"trials={cfg['trials']} seed={cfg['seed']}",
        "",
        f"{'committee':<12}{'bloc':>10}{'bloc_p':>12}{'copeland':>10}{'copeland_p':>12}",
    ]
    labels = sorted(set(doc["bloc_freq"]) | set(doc["copeland_freq"]))
    for lbl in labels:
        out.append(
            f"{lbl:<12}{doc['bloc_freq'].get(lbl, 0):>10}"
            f"{doc['bloc_prob'].get(lbl, 0.0):>12.5f}"
            f"{doc['copeland_freq'].get(lbl, 0):>10}"
            f"{doc['copeland_prob'].get(lbl, 0.0):>12.5f}"
        )
    out.append("")
    out.append(f"agreement rate      {doc['agreement_rate']:.5f}")
    out.append(f"gehrlein rate       {doc['gehrlein_rate']:.5f}")
    out.append(f"condorcet set rate  {doc['condorcet_set_rate']:.5f}")
    out.append(f"adjacent rate       {doc['adjacent_rate']:.5f}")
    for lbl in sorted(doc["locally_stable_rate"]):
        out.append(
            f"locally stable rate [{lbl}] {doc['locally_stable_rate'][lbl]:.5f}"
        )
    if doc["label_lower_bounds"] is not None:
        lb = doc["label_lower_bounds"]
        out.append(
            f"label lower bounds  gehrlein={lb['gehrlein']:.5f} "
            f"locally_stable={lb['locally_stable']:.5f}"
        )
    out.append(
        f"ties: bloc={doc['bloc_tie_count']} copeland={doc['copeland_tie_count']} "
        f"discarded={doc['discarded_trials']}"
    )
    return "\n".join(out) + "\n"
