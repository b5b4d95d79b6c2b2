"""Command-line front end.

Subcommands:
  eval EXPR            print the canonical form of a group/functor expression
  check SUITE          run a verification suite (exit 1 on any failed trial)
  section4 EXPR        derived-functor report for an abelian group

Exit codes: 0 success, 1 check failure, 2 usage or parse error.  The
default seed comes from the DFW_SEED environment variable; reports are
byte-identical for identical seeds and configs.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import List, Optional, Tuple

from .abelian import PresentedGroup
from .expr import ExprError, evaluate, parse
from .linalg import IntMatrix
from .theorems import CHECKS, SUITE_NAMES, TrialConfig, TrialRecord, Verdict, evaluate_section4

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2

SECTION4_KEYS = ("H2", "L1SP2(H2)", "L2Ls3(H2)", "L1SP3(Gab)", "L1SP4(Gab)")


class UsageError(ValueError):
    pass


def load_relations(path: str) -> PresentedGroup:
    """Relation matrix file: one generator row per line of
    whitespace-separated integers; '#' starts a comment."""
    rows: List[List[int]] = []
    try:
        with open(path, "r", encoding="utf-8") as fh:
            for lineno, line in enumerate(fh, start=1):
                body = line.split("#", 1)[0].strip()
                if not body:
                    continue
                try:
                    rows.append([int(tok) for tok in body.split()])
                except ValueError:
                    raise UsageError(f"{path}:{lineno}: not an integer row: {body!r}")
    except OSError as exc:
        raise UsageError(f"cannot read relations file: {exc}")
    if rows and any(len(r) != len(rows[0]) for r in rows):
        raise UsageError(f"{path}: rows have differing lengths")
    matrix = IntMatrix.from_rows(rows)
    return PresentedGroup(matrix.rows, matrix)


def _default_seed() -> int:
    raw = os.environ.get("DFW_SEED")
    if raw is None:
        return 0
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"DFW_SEED must be an integer, got {raw!r}")


# -------------------------------------------------------------- reporting

def _record_rows(records: Tuple[TrialRecord, ...]) -> List[dict]:
    return [
        {
            "suite": r.suite,
            "trial": r.trial,
            "status": r.status,
            "lhs": r.lhs,
            "rhs": r.rhs,
            "counterexample": r.counterexample,
        }
        for r in records
    ]


def render_text(results: List[Tuple[str, Verdict]]) -> str:
    lines = []
    total = failures = 0
    for name, verdict in results:
        trials = verdict.passed + verdict.failed
        total += trials
        failures += verdict.failed
        lines.append(
            f"suite {name}: trials={trials} passed={verdict.passed} failed={verdict.failed}"
        )
        for rec in verdict.records:
            if rec.status == "fail":
                lines.append(f"  trial {rec.trial} FAIL")
                lines.append(f"    lhs: {rec.lhs}")
                lines.append(f"    rhs: {rec.rhs}")
                lines.append(
                    "    counterexample: "
                    + json.dumps(rec.counterexample, sort_keys=True, separators=(",", ":"))
                )
    status = "PASS" if failures == 0 else "FAIL"
    lines.append(f"result: {status} ({len(results)} suites, {total} trials, {failures} failures)")
    return "\n".join(lines) + "\n"


def render_tsv(results: List[Tuple[str, Verdict]]) -> str:
    lines = []
    for _, verdict in results:
        for rec in verdict.records:
            fields = [rec.suite, str(rec.trial), rec.status, rec.lhs, rec.rhs]
            if rec.counterexample is not None:
                fields.append(
                    json.dumps(rec.counterexample, sort_keys=True, separators=(",", ":"))
                )
            lines.append("\t".join(fields))
    return "\n".join(lines) + "\n"


def render_json(results: List[Tuple[str, Verdict]]) -> str:
    rows = []
    for _, verdict in results:
        rows.extend(_record_rows(verdict.records))
    return json.dumps(rows, sort_keys=True, separators=(",", ":")) + "\n"


RENDERERS = {"text": render_text, "tsv": render_tsv, "json": render_json}


# ------------------------------------------------------------ subcommands

def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="dfw",
        description="exact workbench for derived functors of abelian groups",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_eval = sub.add_parser("eval", help="evaluate an expression to a canonical form")
    p_eval.add_argument("expression")
    p_eval.add_argument("--relations", metavar="FILE",
                        help="relation matrix file binding the atom G")

    p_check = sub.add_parser("check", help="run a verification suite")
    p_check.add_argument("suite", choices=list(SUITE_NAMES) + ["all"])
    p_check.add_argument("--seed", type=int, default=None)
    p_check.add_argument("--trials", type=int, default=100)
    p_check.add_argument("--max-rank", type=int, default=4)
    p_check.add_argument("--max-entry", type=int, default=6)
    p_check.add_argument("--format", choices=sorted(RENDERERS), default="text")

    p_sec = sub.add_parser("section4", help="derived-functor report for an abelian group")
    p_sec.add_argument("expression", nargs="?")
    p_sec.add_argument("--relations", metavar="FILE")
    return parser


def _group_from_args(expression: Optional[str], relations: Optional[str]) -> PresentedGroup:
    rel_group = load_relations(relations) if relations else None
    if expression is None:
        if rel_group is None:
            raise UsageError("need an expression or --relations FILE")
        return rel_group
    return evaluate(parse(expression), rel_group)


def cmd_eval(args) -> int:
    group = _group_from_args(args.expression, args.relations)
    sys.stdout.write(str(group.canonical) + "\n")
    return EXIT_OK


def cmd_check(args) -> int:
    seed = args.seed if args.seed is not None else _default_seed()
    try:
        cfg = TrialConfig(seed=seed, trials=args.trials,
                          max_rank=args.max_rank, max_entry=args.max_entry)
    except ValueError as exc:
        raise UsageError(str(exc))
    names = list(SUITE_NAMES) if args.suite == "all" else [args.suite]
    results = [(name, CHECKS[name](cfg)) for name in names]
    sys.stdout.write(RENDERERS[args.format](results))
    failed = sum(v.failed for _, v in results)
    return EXIT_OK if failed == 0 else EXIT_CHECK_FAILED


def cmd_section4(args) -> int:
    group = _group_from_args(args.expression, args.relations)
    report = evaluate_section4(group)
    for key in SECTION4_KEYS:
        sys.stdout.write(f"{key} = {report[key]}\n")
    return EXIT_OK


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        if args.command == "eval":
            return cmd_eval(args)
        if args.command == "check":
            return cmd_check(args)
        return cmd_section4(args)
    except (ExprError, UsageError) as exc:
        sys.stderr.write(f"dfw: error: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
