"""Command-line front end.

Exit codes are a stable contract: 0 success, 1 claim failure, 2 parse error,
3 validation error, 4 bad profile, 5 bad family spec, 6 family budget
exceeded. Reports are pure functions of the input bytes and flags: no
timestamps, hostnames or other machine state appear in any output.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
from pathlib import Path

from .classify import build_class_report
from .explorer import (
    DEFAULT_INSTANCE_LIMIT,
    FamilyBudgetError,
    FamilySpec,
    FamilySpecError,
    sweep,
    write_outcome,
)
from .games import (
    best_response_dynamics,
    best_response_graph,
    best_responses,
    enumerate_nash,
    is_nash,
    payoff,
)
from .graph import TemporalGraph, from_json, to_canonical_json, to_json_obj, validate
from .instances import INSTANCE_NAMES, build_instance
from .reach import all_pairs
from .reproduce import DEFAULT_SEED, run_claims

EXIT_OK = 0
EXIT_CLAIM_FAILURE = 1
EXIT_PARSE = 2
EXIT_VALIDATION = 3
EXIT_PROFILE = 4
EXIT_SPEC = 5
EXIT_BUDGET = 6


class _CliError(Exception):
    code = EXIT_CLAIM_FAILURE


class _ParseError(_CliError):
    code = EXIT_PARSE


class _ValidationError(_CliError):
    code = EXIT_VALIDATION


class _ProfileError(_CliError):
    code = EXIT_PROFILE


def _load_graph(path: str) -> tuple[TemporalGraph, str]:
    try:
        raw = Path(path).read_bytes()
    except OSError as exc:
        raise _ParseError(f"cannot read {path}: {exc}") from exc
    try:
        g = from_json(raw.decode("utf-8"))
    except (ValueError, UnicodeDecodeError) as exc:
        raise _ParseError(f"{path}: {exc}") from exc
    problems = validate(g)
    if problems:
        raise _ValidationError(f"{path}: " + "; ".join(problems))
    return g, hashlib.sha256(raw).hexdigest()


def _parse_profile(text: str, n: int) -> tuple[int, int]:
    parts = text.split(",")
    if len(parts) != 2:
        raise _ProfileError(f"profile must be two comma-separated vertices, got {text!r}")
    try:
        p1, p2 = int(parts[0]), int(parts[1])
    except ValueError as exc:
        raise _ProfileError(f"profile must be two integers, got {text!r}") from exc
    for p in (p1, p2):
        if not 1 <= p <= n:
            raise _ProfileError(f"profile vertex {p} out of range 1..{n}")
    return p1, p2


def _parse_range(text: str) -> tuple[int, int]:
    try:
        if ".." in text:
            lo, hi = text.split("..")
            return int(lo), int(hi)
        value = int(text)
        return value, value
    except ValueError as exc:
        raise FamilySpecError(f"bad range {text!r}; expected N or A..B") from exc


def _emit(obj: dict) -> None:
    print(json.dumps(obj, indent=2))


def _cmd_analyze(args) -> int:
    g, digest = _load_graph(args.input)
    d = all_pairs(g)
    _emit(
        {
            "command": "analyze",
            "input_sha256": digest,
            "n": g.n,
            "tau": g.tau,
            "class_report": build_class_report(g, d).to_json_obj(),
            "distances": d.to_json_obj(),
        }
    )
    return EXIT_OK


def _cmd_distances(args) -> int:
    g, digest = _load_graph(args.input)
    _emit(
        {
            "command": "distances",
            "input_sha256": digest,
            "distances": all_pairs(g).to_json_obj(),
        }
    )
    return EXIT_OK


def _cmd_payoff(args) -> int:
    g, digest = _load_graph(args.input)
    profile = _parse_profile(args.profile, g.n)
    result = payoff(g, all_pairs(g), args.game, profile)
    _emit(
        {
            "command": "payoff",
            "input_sha256": digest,
            "game": args.game,
            "profile": list(profile),
            "payoff": result.to_json_obj(),
        }
    )
    return EXIT_OK


def _cmd_best_response(args) -> int:
    g, digest = _load_graph(args.input)
    d = all_pairs(g)
    out = {"command": "best-response", "input_sha256": digest, "game": args.game}
    if args.fixed is not None:
        if not 1 <= args.fixed <= g.n:
            raise _ProfileError(f"fixed vertex {args.fixed} out of range 1..{g.n}")
        responses, value = best_responses(g, d, args.game, args.role, args.fixed)
        out.update({"fixed": args.fixed, "role": args.role, "responses": list(responses), "value": value})
    else:
        out["best_response_graph"] = best_response_graph(g, d, args.game).to_json_obj()
    _emit(out)
    return EXIT_OK


def _cmd_nash(args) -> int:
    g, digest = _load_graph(args.input)
    d = all_pairs(g)
    out = {"command": "nash", "input_sha256": digest, "game": args.game}
    if args.profile:
        profile = _parse_profile(args.profile, g.n)
        out["profile"] = list(profile)
        out["result"] = is_nash(g, d, args.game, profile).to_json_obj()
    else:
        equilibria = enumerate_nash(g, d, args.game)
        out["equilibria"] = [list(p) for p in equilibria]
        out["count"] = len(equilibria)
    _emit(out)
    return EXIT_OK


def _cmd_dynamics(args) -> int:
    g, digest = _load_graph(args.input)
    profile = _parse_profile(args.profile, g.n)
    result = best_response_dynamics(
        g, all_pairs(g), args.game, profile, max_steps=args.max_steps
    )
    _emit(
        {
            "command": "dynamics",
            "input_sha256": digest,
            "game": args.game,
            "start": list(profile),
            "result": result.to_json_obj(),
        }
    )
    return EXIT_OK


def _cmd_reproduce(args) -> int:
    if args.claim:
        target = args.claim
    elif args.instance:
        target = args.instance
    else:
        target = "all"
    try:
        results = run_claims(target, seed=args.seed)
    except ValueError as exc:
        raise FamilySpecError(str(exc)) from exc
    for res in results:
        print(f"{'PASS' if res.ok else 'FAIL'} {res.claim}: {res.detail}")
    passed = sum(1 for r in results if r.ok)
    print(f"{passed}/{len(results)} claims passed")
    return EXIT_OK if passed == len(results) else EXIT_CLAIM_FAILURE


def _cmd_sweep(args) -> int:
    if args.growing and args.shrinking:
        raise FamilySpecError("--growing and --shrinking are mutually exclusive")
    monotonicity = "growing" if args.growing else "shrinking" if args.shrinking else "any"
    spec = FamilySpec(
        base_class=args.family,
        n_range=_parse_range(args.n),
        tau_range=_parse_range(args.tau),
        monotonicity=monotonicity,
        max_edge_changes=args.changes,
    )
    outcome = sweep(spec, args.game, limit=args.limit)
    records_path, summary_path = write_outcome(outcome, args.out)
    _emit(
        {
            "command": "sweep",
            "records": str(records_path),
            "summary": str(summary_path),
            "result": outcome.summary_obj(),
        }
    )
    return EXIT_OK


def _cmd_fixtures(args) -> int:
    names = [args.instance] if args.instance else list(INSTANCE_NAMES)
    try:
        fixtures = [build_instance(name) for name in names]
    except ValueError as exc:
        raise FamilySpecError(str(exc)) from exc
    if args.out:
        outdir = Path(args.out)
        outdir.mkdir(parents=True, exist_ok=True)
        written = []
        for fx in fixtures:
            path = outdir / f"{fx.name}.json"
            path.write_text(to_canonical_json(fx.graph) + "\n", encoding="utf-8")
            written.append(str(path))
        _emit({"command": "fixtures", "written": written})
    else:
        _emit(
            {
                "command": "fixtures",
                "fixtures": [
                    {
                        "name": fx.name,
                        "graph": to_json_obj(fx.graph),
                        "ne_exists": dict(sorted(fx.ne_exists.items())),
                        "witnesses": {
                            kind: [list(p) for p in profs]
                            for kind, profs in sorted(fx.witnesses.items())
                        },
                    }
                    for fx in fixtures
                ],
            }
        )
    return EXIT_OK


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tempvor",
        description="Two-player Voronoi games on temporal graphs.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_game(p):
        p.add_argument("--game", choices=("vor", "rvor"), required=True,
                       help="classic (vor) or reverse (rvor) game")

    p = sub.add_parser("analyze", help="class report plus all-pairs distances")
    p.add_argument("input", help="temporal graph JSON file")
    p.set_defaults(fn=_cmd_analyze)

    p = sub.add_parser("distances", help="all-pairs temporal distances")
    p.add_argument("input")
    p.set_defaults(fn=_cmd_distances)

    p = sub.add_parser("payoff", help="evaluate a strategy profile")
    p.add_argument("input")
    add_game(p)
    p.add_argument("--profile", required=True, metavar="P1,P2")
    p.set_defaults(fn=_cmd_payoff)

    p = sub.add_parser("best-response", help="best replies to a fixed vertex, or the full graph")
    p.add_argument("input")
    add_game(p)
    p.add_argument("--fixed", type=int, help="opponent vertex; omit for the whole graph")
    p.add_argument("--role", type=int, choices=(1, 2), default=2, help="responding player")
    p.set_defaults(fn=_cmd_best_response)

    p = sub.add_parser("nash", help="check a profile or enumerate all equilibria")
    p.add_argument("input")
    add_game(p)
    p.add_argument("--profile", metavar="P1,P2")
    p.set_defaults(fn=_cmd_nash)

    p = sub.add_parser("dynamics", help="alternating best-response dynamics")
    p.add_argument("input")
    add_game(p)
    p.add_argument("--profile", required=True, metavar="P1,P2", help="start profile")
    p.add_argument("--max-steps", type=int, default=10_000)
    p.set_defaults(fn=_cmd_dynamics)

    p = sub.add_parser("reproduce", help="re-check the bundled results")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--instance", help="restrict to claims about one bundled instance")
    group.add_argument("--claim", help="run a single claim by id")
    p.add_argument("--seed", type=int, default=DEFAULT_SEED)
    p.set_defaults(fn=_cmd_reproduce)

    p = sub.add_parser("sweep", help="exhaustive equilibrium sweep over a family")
    p.add_argument("--class", dest="family", required=True,
                   help="base class (path, cycle, tree, grid, clique, complete_k_partite, split, threshold)")
    p.add_argument("--n", required=True, metavar="A..B", help="vertex count or range")
    p.add_argument("--tau", default="1..3", metavar="A..B", help="lifetime or range (default 1..3)")
    p.add_argument("--growing", action="store_true")
    p.add_argument("--shrinking", action="store_true")
    p.add_argument("--changes", type=int, help="total edge-change budget across the lifetime")
    add_game(p)
    p.add_argument("--out", required=True, help="output directory")
    p.add_argument("--limit", type=int, default=DEFAULT_INSTANCE_LIMIT,
                   help="instance guard (error 6 when exceeded)")
    p.set_defaults(fn=_cmd_sweep)

    p = sub.add_parser("fixtures", help="dump the bundled instances")
    p.add_argument("--instance", help="a single instance name")
    p.add_argument("--out", help="write one canonical JSON file per instance")
    p.set_defaults(fn=_cmd_fixtures)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if exc.code else EXIT_OK
    try:
        return args.fn(args)
    except _CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except FamilySpecError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_SPEC
    except FamilyBudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()
