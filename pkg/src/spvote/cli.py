"""Command-line front end.

Subcommands: ``rankings`` (enumerate single-peaked rankings), ``elect`` (run
one election on a profile file), ``classify`` (stability report for a
committee), ``simulate`` (seeded simulation campaign), ``verify`` (replay the
bundled fixtures). Exit codes: 0 success, 1 verification failure, 2 usage or
input errors.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from pathlib import Path

from . import fixtures
from .elections import (
    NotSinglePeakedError,
    bloc_tally,
    bloc_winners,
    copeland_scores,
    k_copeland_winner,
    k_copeland_winners,
    pairwise_matrix,
)
from .generators import RandomSource, positions_csv, spatial_positions
from .montecarlo import (
    MODELS,
    TIE_POLICIES,
    ExperimentConfig,
    emit_report,
    model_spatial_spec,
    run_experiment,
)
from .profiles import (
    Profile,
    ProfileError,
    candidate_name,
    enumerate_single_peaked_rankings,
    parse_candidate,
    parse_profile,
)
from .stability import Quota, classify


def _load_profile(path: str) -> Profile:
    try:
        text = Path(path).read_text("utf-8")
    except OSError as exc:
        raise ProfileError(f"cannot read {path}: {exc}") from None
    return parse_profile(text)


def _parse_quota(token: str) -> Quota:
    token = token.strip().lower()
    if token == "majority":
        return Quota.majority()
    if token == "droop":
        return Quota.droop()
    try:
        return Quota.custom(int(token))
    except ValueError:
        raise ProfileError(
            f"quota must be 'majority', 'droop' or an integer, got {token!r}"
        ) from None


def cmd_rankings(args: argparse.Namespace) -> int:
    rankings = enumerate_single_peaked_rankings(args.candidates)
    for r in rankings:
        print(" ".join(candidate_name(c, args.candidates) for c in r))
    print(f"{len(rankings)} single-peaked rankings of {args.candidates} candidates")
    return 0


def cmd_elect(args: argparse.Namespace) -> int:
    p = _load_profile(args.profile)
    k = args.winners
    if args.method == "bloc":
        tally = bloc_tally(p, k)
        winners = bloc_winners(p, k)
        if args.format == "json":
            doc = {
                "method": "bloc",
                "k": k,
                "tallies": {candidate_name(c, p.m): v for c, v in enumerate(tally.votes)},
                "winners": winners.label(p.m),
                "winner_indices": list(winners.members),
                "tie_broken": winners.tie_broken,
            }
            print(json.dumps(doc, indent=2, sort_keys=True))
        else:
            print(f"m={p.m} voters={p.n} method=bloc k={k}")
            print(
                "tallies: "
                + " ".join(
                    f"{candidate_name(c, p.m)}={v}" for c, v in enumerate(tally.votes)
                )
            )
            print(f"winners: {winners.label(p.m)}")
            if winners.tie_broken:
                group = "".join(
                    candidate_name(c, p.m) for c in sorted(winners.tied_candidates)
                )
                print(f"tie at the last seat broken leftmost (tied group: {group})")
    else:
        M = pairwise_matrix(p)
        scores = copeland_scores(M)
        sets = k_copeland_winners(M, k)
        pick = k_copeland_winner(M, k)
        if args.format == "json":
            doc = {
                "method": "copeland",
                "k": k,
                "scores": {candidate_name(c, p.m): s for c, s in enumerate(scores)},
                "winning_sets": [w.label(p.m) for w in sets],
                "selected": pick.label(p.m),
                "tie_broken": pick.tie_broken,
            }
            print(json.dumps(doc, indent=2, sort_keys=True))
        else:
            print(f"m={p.m} voters={p.n} method=copeland k={k}")
            print(
                "scores: "
                + " ".join(
                    f"{candidate_name(c, p.m)}={s:g}" for c, s in enumerate(scores)
                )
            )
            print("winning sets: " + " ".join(w.label(p.m) for w in sets))
            print(f"selected (leftmost): {pick.label(p.m)}")
    return 0


def cmd_classify(args: argparse.Namespace) -> int:
    p = _load_profile(args.profile)
    members = tuple(
        sorted(parse_candidate(tok, p.m) for tok in args.set.replace(",", " ").split())
    )
    quotas = tuple(_parse_quota(q) for q in args.quota) if args.quota else (
        Quota.majority(),
        Quota.droop(),
    )
    report = classify(p, members, quotas)
    if args.format == "json":
        print(json.dumps(report.to_json_dict(), indent=2, sort_keys=True))
    else:
        d = report.to_json_dict()
        print(f"committee: {''.join(d['committee'])}")
        print(f"adjacent: {d['adjacent']}")
        print(f"gehrlein_stable: {d['gehrlein_stable']}")
        print(f"condorcet_set: {d['condorcet_set']}")
        print(f"condorcet_winner: {d['condorcet_winner']}")
        print(f"contains_condorcet_winner: {d['contains_condorcet_winner']}")
        for lbl in sorted(d["locally_stable"]):
            print(
                f"locally_stable[{lbl}]: {d['locally_stable'][lbl]} "
                f"(quota {d['quota_values'][lbl]})"
            )
        if "max_block" in d["witnesses"]:
            w = d["witnesses"]["max_block"]
            print(f"strongest blocker: {w['candidate']} with {w['size']} voters")
    return 0


def _default_threads() -> int:
    env = os.environ.get("SPVOTE_THREADS", "").strip()
    if env.isdigit() and int(env) > 0:
        return int(env)
    return 1


def cmd_simulate(args: argparse.Namespace) -> int:
    quotas = tuple(_parse_quota(q) for q in args.quota) if args.quota else (
        Quota.majority(),
        Quota.droop(),
    )
    cfg = ExperimentConfig(
        m=args.candidates,
        k=args.winners,
        trials=args.trials,
        model=args.model,
        seed=args.seed,
        voters=args.voters,
        tie_policy=args.tie_policy,
        quotas=quotas,
    )
    if args.dump_positions:
        spec = model_spatial_spec(cfg)
        if spec is None:
            raise ProfileError("--dump-positions needs a spatial model (en or eb)")
        voters, cands = spatial_positions(spec, RandomSource(cfg.seed).stream(0))
        Path(args.dump_positions).write_text(positions_csv(voters, cands), "utf-8")
    result = run_experiment(cfg, workers=args.threads)
    report = emit_report(result, args.format)
    if args.out:
        Path(args.out).write_text(report, "utf-8")
        print(
            f"model={cfg.model} m={cfg.m} k={cfg.k} trials={cfg.trials} "
            f"agreement={result.agreement_rate:.5f} "
            f"gehrlein={result.gehrlein_rate:.5f} -> {args.out}"
        )
    else:
        sys.stdout.write(report)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    if args.list:
        for fixture in fixtures.FIXTURES:
            print(fixture.name)
        return 0
    failures = 0
    for fixture in fixtures.FIXTURES:
        for check, ok, detail in fixtures.run_fixture(fixture):
            status = "PASS" if ok else "FAIL"
            line = f"{status} {fixture.name}: {check.description}"
            if not ok:
                line += f" [{detail}]"
                failures += 1
            print(line)
    total = sum(len(f.checks) for f in fixtures.FIXTURES)
    print(f"{total - failures}/{total} fixture checks passed")
    return 1 if failures else 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="spvote",
        description="Committee elections on a one-dimensional candidate axis",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("rankings", help="enumerate single-peaked rankings")
    p.add_argument("--candidates", type=int, required=True, metavar="M")
    p.set_defaults(func=cmd_rankings)

    p = sub.add_parser("elect", help="run one election on a profile file")
    p.add_argument("--profile", required=True)
    p.add_argument("--winners", type=int, required=True, metavar="K")
    p.add_argument("--method", choices=("bloc", "copeland"), default="bloc")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_elect)

    p = sub.add_parser("classify", help="stability report for a committee")
    p.add_argument("--profile", required=True)
    p.add_argument("--set", required=True, help="committee, e.g. 'B,D'")
    p.add_argument(
        "--quota",
        action="append",
        metavar="Q",
        help="majority, droop or an integer; repeatable (default: majority and droop)",
    )
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(func=cmd_classify)

    p = sub.add_parser("simulate", help="run a seeded simulation campaign")
    p.add_argument("--model", choices=MODELS, required=True)
    p.add_argument("--candidates", type=int, required=True, metavar="M")
    p.add_argument("--winners", type=int, required=True, metavar="K")
    p.add_argument("--voters", type=int, default=1001, metavar="N")
    p.add_argument("--trials", type=int, required=True, metavar="T")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("json", "csv", "text"), default="json")
    p.add_argument("--out", help="write the report here instead of stdout")
    p.add_argument("--tie-policy", choices=TIE_POLICIES, default="resolve_leftmost")
    p.add_argument("--quota", action="append", metavar="Q")
    p.add_argument(
        "--threads",
        type=int,
        default=_default_threads(),
        help="worker processes (default: SPVOTE_THREADS or 1)",
    )
    p.add_argument(
        "--dump-positions",
        metavar="CSV",
        help="write voter/candidate positions of trial 0 (spatial models)",
    )
    p.set_defaults(func=cmd_simulate)

    p = sub.add_parser("verify", help="replay the bundled fixture outcomes")
    p.add_argument("--list", action="store_true", help="list fixture names only")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (ProfileError, NotSinglePeakedError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
