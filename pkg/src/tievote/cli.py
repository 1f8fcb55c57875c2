"""Command-line harness with JSON input and output for scripting.

Exit status 0 covers success including a "decision: false" answer; 2 flags
usage or input errors; 3 flags capacity or solver-not-applicable errors.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from fractions import Fraction

from .core import (
    FORMAT_JSON,
    FORMAT_PREFLIB,
    Profile,
    parse_profile,
)
from .elimination import elimination_order_to_json, elimination_veto_winner
from .errors import CapacityError, NotApplicableError, ParseError, ValidationError
from .manipulation import (
    SWEEP_FAMILIES,
    instance_from_json_dict,
    random_instance,
    reduce_partition_to_cwcm,
    instance_to_json_dict,
    result_to_json_dict,
    solve_cwcm,
    solve_cwcm_oracle,
    PartitionInstance,
)
from .pairwise import CopelandRule, copeland_scores
from .peakedness import Axis, SPModel, axis_to_json, find_axis, validate_vote
from .scoring import (
    Extension,
    ScoringVector,
    score_profile,
    score_table_to_json_dict,
    scoring_winners,
    winners_of,
)

_MODEL_BY_NAME = {m.value: m for m in SPModel}
_EXT_BY_NAME = {e.value: e for e in Extension}
_NAMED_VECTORS = {
    "plurality": ScoringVector.plurality,
    "veto": ScoringVector.veto,
    "borda": ScoringVector.borda,
    "triviality": ScoringVector.triviality,
}


def _read_text(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _load_profile(args) -> Profile:
    fmt = FORMAT_PREFLIB if args.format == "preflib" else FORMAT_JSON
    return parse_profile(_read_text(args.profile), fmt)


def _parse_vector(text: str, m: int) -> ScoringVector:
    if text in _NAMED_VECTORS:
        return _NAMED_VECTORS[text](m)
    try:
        return ScoringVector(tuple(int(tok) for tok in text.split(",")))
    except ValueError as exc:
        raise ValidationError(f"bad scoring vector {text!r}: {exc}") from exc


def _parse_axis(text: str, profile: Profile) -> Axis:
    try:
        return Axis(tuple(profile.id_of(tok.strip()) for tok in text.split(",")))
    except KeyError as exc:
        raise ValidationError(f"axis names unknown candidate {exc.args[0]!r}") from exc


def _emit(data) -> None:
    print(json.dumps(data))


def _cmd_score(args) -> int:
    profile = _load_profile(args)
    vector = _parse_vector(args.vector, profile.m)
    table = score_profile(profile, vector, _EXT_BY_NAME[args.ext])
    _emit(score_table_to_json_dict(table, profile.candidates))
    return 0


def _cmd_winners(args) -> int:
    profile = _load_profile(args)
    spec = args.rule
    out: dict = {}
    if spec.startswith("scoring:"):
        _, vector_text, ext_text = spec.split(":")
        vector = _parse_vector(vector_text, profile.m)
        win = scoring_winners(profile, vector, _EXT_BY_NAME[ext_text])
    elif spec.startswith("copeland:"):
        rule = CopelandRule(Fraction(spec.split(":", 1)[1]))
        win = winners_of(copeland_scores(profile, rule))
    elif spec == "elimveto":
        winner, order = elimination_veto_winner(profile)
        win = {winner}
        out["elimination_order"] = elimination_order_to_json(order, profile.names)
    else:
        raise ValidationError(f"unknown rule {spec!r}")
    out["winners"] = sorted(profile.names[c] for c in sorted(win))
    _emit(out)
    return 0


def _cmd_check_axis(args) -> int:
    profile = _load_profile(args)
    axis = _parse_axis(args.axis, profile)
    model = _MODEL_BY_NAME[args.model]
    voters = []
    all_ok = True
    for i, v in enumerate(profile.voters):
        witness = validate_vote(v.order, axis, model)
        ok = witness is not None
        all_ok = all_ok and ok
        entry: dict = {"index": i, "valid": ok, "witness": None}
        if witness is not None:
            entry["witness"] = {
                key: [profile.names[c] for c in seg]
                for key, seg in zip(
                    ("o1", "x", "y", "z", "o2"), witness.segments
                )
            }
        voters.append(entry)
    _emit({"valid": all_ok, "voters": voters})
    return 0


def _cmd_find_axis(args) -> int:
    profile = _load_profile(args)
    axis = find_axis(profile, _MODEL_BY_NAME[args.model], cap=args.cap)
    _emit({"axis": None if axis is None else axis_to_json(axis, profile.names)})
    return 0


def _cmd_cwcm(args) -> int:
    instance = instance_from_json_dict(json.loads(_read_text(args.instance)))
    result = solve_cwcm(instance, solver=args.solver)
    _emit(result_to_json_dict(result, instance.candidates))
    return 0


def _cmd_gen_partition(args) -> int:
    items = tuple(int(tok) for tok in args.items.split(","))
    instance = reduce_partition_to_cwcm(
        PartitionInstance(items), _EXT_BY_NAME[args.ext]
    )
    _emit(instance_to_json_dict(instance))
    return 0


def _cmd_compare(args) -> int:
    rng = random.Random(args.seed)
    families = list(SWEEP_FAMILIES) if args.family == "all" else [args.family]
    compared = 0
    skipped = 0
    disagreements = []
    while compared < args.count:
        instance = random_instance(rng, family=rng.choice(families))
        try:
            fast = solve_cwcm(instance, solver="polytime")
        except NotApplicableError:
            skipped += 1
            continue
        slow = solve_cwcm_oracle(instance)
        compared += 1
        if fast.decision != slow.decision:
            disagreements.append(
                {
                    "instance": instance_to_json_dict(instance),
                    "polytime": fast.decision,
                    "oracle": slow.decision,
                }
            )
    _emit(
        {
            "compared": compared,
            "skipped_not_applicable": skipped,
            "disagreements": disagreements,
        }
    )
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tievote",
        description="Elections over votes with ties: scoring, Copeland, "
        "elimination veto, peakedness checks, and manipulation solving.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_profile_args(p):
        p.add_argument("--profile", default="-", help="profile path or - for stdin")
        p.add_argument("--format", choices=("json", "preflib"), default="json")

    p = sub.add_parser("score", help="score a profile with a vector and extension")
    add_profile_args(p)
    p.add_argument("--vector", required=True, help="name or comma-separated integers")
    p.add_argument("--ext", choices=sorted(_EXT_BY_NAME), required=True)
    p.set_defaults(func=_cmd_score)

    p = sub.add_parser("winners", help="winner set under a rule")
    add_profile_args(p)
    p.add_argument(
        "--rule",
        required=True,
        help="scoring:<vector>:<ext> | copeland:<alpha p/q> | elimveto",
    )
    p.set_defaults(func=_cmd_winners)

    p = sub.add_parser("check-axis", help="validate each voter against an axis")
    add_profile_args(p)
    p.add_argument("--axis", required=True, help="comma-separated candidate names")
    p.add_argument("--model", choices=sorted(_MODEL_BY_NAME), required=True)
    p.set_defaults(func=_cmd_check_axis)

    p = sub.add_parser("find-axis", help="exhaustively search for a validating axis")
    add_profile_args(p)
    p.add_argument("--model", choices=sorted(_MODEL_BY_NAME), required=True)
    p.add_argument("--cap", type=int, default=9)
    p.set_defaults(func=_cmd_find_axis)

    p = sub.add_parser("cwcm", help="solve a manipulation instance")
    p.add_argument("--instance", default="-", help="instance JSON path or -")
    p.add_argument("--solver", choices=("auto", "polytime", "oracle"), default="auto")
    p.set_defaults(func=_cmd_cwcm)

    p = sub.add_parser("gen-partition", help="emit the reduced instance for items")
    p.add_argument("--items", required=True, help="comma-separated positive integers")
    p.add_argument("--ext", choices=sorted(_EXT_BY_NAME), required=True)
    p.set_defaults(func=_cmd_gen_partition)

    p = sub.add_parser("compare", help="random polytime-versus-oracle sweep")
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--family", choices=("all",) + SWEEP_FAMILIES, default="all")
    p.set_defaults(func=_cmd_compare)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (CapacityError, NotApplicableError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 3
    except (ParseError, ValidationError, ValueError, OSError, KeyError) as exc:
        print(json.dumps({"error": str(exc)}), file=sys.stderr)
        return 2


if __name__ == "__main__":
    raise SystemExit(main())
