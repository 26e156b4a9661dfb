"""Batch command line: enumerate avoider counts, classify families,
check the package's claims, verify the bijections, test the conjecture.

Exit status: 0 all verdicts pass, 1 a verdict failed, 2 unusable input.
Outputs are deterministic for a fixed invocation regardless of worker
count; --output writes the document and, for delimited classification and
enumeration output, a .png figure beside it.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from .bijections import (
    VARIANT_P,
    VARIANT_P_PRIME,
    theorem12_map,
    theorem13_map,
    theorem14_map,
    theorem16_map,
    variant_poset,
    west_map,
    west_map_inverse,
)
from .checks import CHECKS, THEOREM12_PAIR, THEOREM13_PAIR, check_suitable_rule
from .classify import FAMILY_TAGS, dimitrov_check, generate_family, wilf_classes
from .ferrers import FerrersBoard, contains_pop_in_board, transversals
from .permutation import BudgetError, avoiders, count_avoiders, default_workers
from .poset import PopSyntaxError, delete_labels, disjoint_sum, parse_pop

HORIZON_CAP = 9
BOARD_CAP = 6


@dataclass
class RunConfig:
    subcommand: str
    horizon: int = 8
    n_max: int = 5
    fmt: str = "md"
    workers: int = 1
    output: str | None = None
    unsafe_budget: bool = False

    def __post_init__(self):
        if self.workers < 1:
            raise ValueError("worker count must be >= 1")
        if not self.unsafe_budget:
            if self.horizon > HORIZON_CAP:
                raise BudgetError(
                    f"horizon {self.horizon} over the default cap {HORIZON_CAP}; "
                    "pass --unsafe-budget to lift it")
            if self.n_max > BOARD_CAP:
                raise BudgetError(
                    f"board size {self.n_max} over the default cap {BOARD_CAP}; "
                    "pass --unsafe-budget to lift it")


def _write_output(text, config, figure=None):
    if config.output:
        with open(config.output, "w", encoding="utf-8") as fh:
            fh.write(text)
        if figure is not None:
            base, _ = os.path.splitext(config.output)
            figure(base + ".png")
    else:
        sys.stdout.write(text)


def _cmd_enumerate(args, config):
    try:
        p = parse_pop(args.pop)
    except PopSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    budget = None if config.unsafe_budget else HORIZON_CAP
    seq = count_avoiders(p, args.n, workers=config.workers, budget=budget)
    text = seq.to_json() + "\n" if config.fmt == "json" else seq.to_csv()

    def figure(path):
        from .report import render_sequence_figure

        render_sequence_figure(seq, path)

    _write_output(text, config, figure=figure if config.fmt == "csv" else None)
    return 0


def _cmd_classify(args, config):
    from .report import emit_table, render_classes_figure

    family = generate_family(args.family)
    budget = None if config.unsafe_budget else HORIZON_CAP
    report = wilf_classes(family, config.horizon, workers=config.workers,
                          budget=budget)
    text = emit_table(report, config.fmt)
    if not text.endswith("\n"):
        text += "\n"

    def figure(path):
        render_classes_figure(report, path)

    _write_output(text, config, figure=figure if config.fmt in ("csv", "md") else None)
    return 0


def _cmd_check(args, config):
    if args.theorem == "suitable-rule":
        result = check_suitable_rule(config.n_max)
    else:
        check = CHECKS[args.theorem]
        if args.theorem in ("1.2", "1.4", "1.6", "lemma-2.1"):
            kwargs = {"n_max": config.n_max}
        elif args.theorem == "1.3":
            kwargs = {"n_max": min(config.horizon, 6)}
        elif args.theorem in ("1.5", "gk-5.1"):
            kwargs = {"n_max": min(config.horizon, 7)}
        else:
            kwargs = {}
        result = check(**kwargs)
    _write_output(json.dumps(result, indent=2, default=list) + "\n", config)
    return 0 if result["pass"] else 1


def _sweep_permutation_map(p, pp, forward, backward, n_max):
    rows = []
    ok = True
    for n in range(1, n_max + 1):
        targets = set(avoiders(pp, n))
        for w in avoiders(p, n):
            y = forward(w)
            image_ok = y in targets
            roundtrip_ok = backward(y) == w
            ok = ok and image_ok and roundtrip_ok
            rows.append({"n": n, "input": str(w), "output": str(y),
                         "roundtrip_ok": roundtrip_ok, "image_ok": image_ok})
    return ok, rows


def _sweep_board_map(p, pp, forward, backward, n_max, square_only=True):
    from .ferrers import boards

    rows = []
    ok = True
    for n in range(1, n_max + 1):
        board_list = [FerrersBoard.square(n)] if square_only else boards(n)
        for board in board_list:
            targets = {T.rows for T in transversals(board)
                       if not contains_pop_in_board(T, pp)}
            for T in transversals(board):
                if contains_pop_in_board(T, p):
                    continue
                y = forward(T)
                image_ok = y.rows in targets
                roundtrip_ok = backward(y) == T
                ok = ok and image_ok and roundtrip_ok
                rows.append({"board": str(board), "input": str(T),
                             "output": str(y),
                             "roundtrip_ok": roundtrip_ok, "image_ok": image_ok})
    return ok, rows


def _cmd_verify_bijection(args, config):
    n_max = config.n_max
    if args.map == "west":
        p = parse_pop(THEOREM13_PAIR[0])
        pp = parse_pop(THEOREM13_PAIR[1])
        q, qp = delete_labels(p, {4}), delete_labels(pp, {4})
        ok, rows = _sweep_permutation_map(
            q, qp, lambda w: west_map(q, qp, w),
            lambda y: west_map_inverse(q, qp, y), n_max)
    elif args.map == "f13":
        p, pp = (parse_pop(t) for t in THEOREM13_PAIR)
        ok, rows = _sweep_permutation_map(
            p, pp, lambda w: theorem13_map(p, pp, w),
            lambda y: theorem13_map(p, pp, y, inverse=True), n_max)
    elif args.map == "t12":
        p, pp = (parse_pop(t) for t in THEOREM12_PAIR)
        ok, rows = _sweep_board_map(
            p, pp, lambda T: theorem12_map(p, pp, T),
            lambda y: theorem12_map(p, pp, y, inverse=True), n_max)
    elif args.map == "t14":
        chain21 = parse_pop("pop 2: c[1>2]")
        chain12 = parse_pop("pop 2: c[2>1]")
        pq = disjoint_sum(chain21, chain12)
        pqp = disjoint_sum(chain21, chain21)
        ok, rows = _sweep_board_map(
            pq, pqp, lambda T: theorem14_map(chain21, chain12, chain21, T),
            lambda y: theorem14_map(chain21, chain12, chain21, y, inverse=True),
            n_max)
    elif args.map == "t16":
        p, pp = variant_poset(VARIANT_P), variant_poset(VARIANT_P_PRIME)
        ok, rows = _sweep_board_map(
            p, pp, theorem16_map,
            lambda y: theorem16_map(y, inverse=True), n_max, square_only=False)
    else:
        raise ValueError(args.map)
    payload = {"map": args.map, "n_max": n_max, "pass": ok, "instances": rows}
    _write_output(json.dumps(payload, indent=2) + "\n", config)
    return 0 if ok else 1


def _cmd_conjecture(args, config):
    report = dimitrov_check(config.horizon)
    payload = {
        "conjecture": args.name,
        "horizon": report.horizon,
        "pass": report.verdict,
        "chains": [{"members": list(members),
                    "counts": [list(c) for c in counts],
                    "all_equal": equal,
                    "matches_reference": matches}
                   for members, counts, equal, matches in report.chains],
    }
    _write_output(json.dumps(payload, indent=2) + "\n", config)
    return 0 if report.verdict else 1


def build_parser():
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--workers", type=int, default=None,
                        help="worker count (default: POPWILF_WORKERS or 1)")
    common.add_argument("--output", help="write the document here "
                        "(delimited outputs get a .png figure beside them)")
    common.add_argument("--unsafe-budget", action="store_true",
                        help="lift the default horizon/board caps")
    parser = argparse.ArgumentParser(
        prog="popwilf",
        description="Pattern avoidance counts, Wilf classification, and "
                    "bijection verification for partially ordered patterns.")
    sub = parser.add_subparsers(dest="subcommand", required=True)

    def add(name, **kwargs):
        return sub.add_parser(name, parents=[common], **kwargs)

    p_enum = add("enumerate", help="avoider counts for one pattern")
    p_enum.add_argument("--pop", required=True, help='e.g. "pop 3: c[2>1], i[3]"')
    p_enum.add_argument("--n", type=int, default=8, help="horizon (default 8)")
    p_enum.add_argument("--format", dest="fmt", choices=("csv", "json"),
                        default="csv")

    p_cls = add("classify", help="Wilf classes of one family")
    p_cls.add_argument("--family", required=True, choices=FAMILY_TAGS)
    p_cls.add_argument("--horizon", type=int, default=8)
    p_cls.add_argument("--format", dest="fmt", choices=("md", "csv", "json"),
                       default="md")

    p_chk = add("check", help="verify one claim end to end")
    p_chk.add_argument("--theorem", required=True,
                       choices=tuple(CHECKS) + ("suitable-rule",))
    p_chk.add_argument("--nmax", type=int, default=5,
                       help="board size cap for board sweeps (default 5)")
    p_chk.add_argument("--horizon", type=int, default=8)

    p_ver = add("verify-bijection", help="instance-level bijection report")
    p_ver.add_argument("--map", required=True,
                       choices=("west", "f13", "t12", "t14", "t16"))
    p_ver.add_argument("--nmax", type=int, default=5)

    p_con = add("conjecture", help="run a bundled conjecture check")
    p_con.add_argument("name", choices=("dimitrov",))
    p_con.add_argument("--horizon", type=int, default=8)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        config = RunConfig(
            subcommand=args.subcommand,
            horizon=getattr(args, "horizon", 8),
            n_max=getattr(args, "nmax", 5),
            fmt=getattr(args, "fmt", "md"),
            workers=args.workers if args.workers else default_workers(),
            output=args.output,
            unsafe_budget=args.unsafe_budget,
        )
        if args.subcommand == "enumerate":
            if not config.unsafe_budget and args.n > HORIZON_CAP:
                raise BudgetError(
                    f"horizon {args.n} over the default cap {HORIZON_CAP}; "
                    "pass --unsafe-budget to lift it")
            return _cmd_enumerate(args, config)
        if args.subcommand == "classify":
            return _cmd_classify(args, config)
        if args.subcommand == "check":
            return _cmd_check(args, config)
        if args.subcommand == "verify-bijection":
            return _cmd_verify_bijection(args, config)
        if args.subcommand == "conjecture":
            return _cmd_conjecture(args, config)
        parser.error(f"unknown subcommand {args.subcommand}")
    except PopSyntaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except BudgetError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 2


if __name__ == "__main__":
    sys.exit(main())
