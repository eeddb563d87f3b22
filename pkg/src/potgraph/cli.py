"""Command-line front end.

Exit codes: 0 success, 1 usage error, 2 parse/domain error, 3 cross-validation
discrepancy (or internal inconsistency), 4 oracle budget exhausted. Every
error is a single machine-parsable ``error: <reason>`` line on stderr.

Environment: POTGRAPH_BUDGET (default node budget), POTGRAPH_CATALOG
(catalog directory), POTGRAPH_JOBS (survey workers), POTGRAPH_KERNEL
(kernel selection, read at import).
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from typing import Optional

from .catalogs import load_catalog
from .characterization import theorem31_decide
from .errors import (
    BudgetExceededError,
    DomainError,
    InternalCheckError,
    PotgraphError,
    SequenceParseError,
    StrategyDisagreementError,
)
from .graphs import havel_hakimi_realize
from .oracle import (
    DEFAULT_BUDGET,
    STRATEGIES,
    STRATEGY_EMBED,
    oracle_potentially,
    sigma_empirical,
)
from .sequences import is_graphic_eg, is_graphic_kw, parse_sequence
from .survey import cross_validate, emit_report

__all__ = ["build_parser", "run_cli", "main"]

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_DOMAIN = 2
EXIT_DISCREPANCY = 3
EXIT_BUDGET = 4


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits 2 on bad usage; the CLI contract reserves 2 for domain
    # errors and uses 1 for usage, so intercept
    def error(self, message):
        raise _UsageError(message)


def _env_int(name: str, fallback: int) -> int:
    raw = os.environ.get(name)
    if raw is None or not raw.strip():
        return fallback
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"{name} must be an integer, got {raw!r}") from None


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="potgraph",
        description=(
            "Decide whether degree sequences have realizations containing "
            "the 6-vertex wheel (K6 minus a 5-cycle), and verify the "
            "closed-form decision against an exhaustive oracle."
        ),
    )
    parser.add_argument(
        "--catalog",
        metavar="DIR",
        default=None,
        help="exception-catalog directory (default: packaged data or POTGRAPH_CATALOG)",
    )
    parser.add_argument(
        "--budget",
        metavar="N",
        type=int,
        default=None,
        help=f"oracle node budget per sequence (default: POTGRAPH_BUDGET or {DEFAULT_BUDGET})",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("graphic", help="test graphicality by both methods")
    p.add_argument("sequence")

    p = sub.add_parser("check", help="closed-form feasibility verdict with trace")
    p.add_argument("sequence")
    p.add_argument(
        "--alternative-5i",
        action="store_true",
        help="use the alternative reading of clause (5)(i)",
    )

    p = sub.add_parser("oracle", help="exhaustive-search verdict plus witness file")
    p.add_argument("sequence")
    p.add_argument("--strategy", choices=STRATEGIES, default=STRATEGY_EMBED)
    p.add_argument(
        "--witness",
        metavar="FILE",
        default=None,
        help="witness path (default: witness_<sequence>.txt when the verdict is positive)",
    )
    p.add_argument(
        "--no-witness-file",
        action="store_true",
        help="do not write a witness file",
    )

    p = sub.add_parser("realize", help="print one realization as an edge list")
    p.add_argument("sequence")
    p.add_argument(
        "--contain",
        action="store_true",
        help="realization containing the wheel pattern (oracle witness) instead of Havel-Hakimi",
    )
    p.add_argument("--out", metavar="FILE", default=None)

    p = sub.add_parser("survey", help="cross-validate all graphic sequences of length n")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--oracle", action="store_true")
    p.add_argument("--out", metavar="FILE", default=None)
    p.add_argument("--format", choices=("json", "csv"), default="json")
    p.add_argument("--strategy", choices=STRATEGIES, default=STRATEGY_EMBED)
    p.add_argument("--jobs", type=int, default=None, help="parallel oracle workers")
    p.add_argument(
        "--allow-zeros",
        action="store_true",
        help="admit zero terms (stripped with a warning before evaluation)",
    )

    p = sub.add_parser("sigma", help="empirical sigma for length n (oracle)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--strategy", choices=STRATEGIES, default=STRATEGY_EMBED)

    return parser


def _cmd_graphic(args, catalog, budget) -> int:
    seq = parse_sequence(args.sequence)
    eg = is_graphic_eg(seq)
    kw = is_graphic_kw(seq)
    agree = eg == kw
    print(
        f"sequence={seq.render()} eg={str(eg).lower()} kw={str(kw).lower()} "
        f"agree={str(agree).lower()}"
    )
    return EXIT_OK if agree else EXIT_DISCREPANCY


def _cmd_check(args, catalog, budget) -> int:
    seq = parse_sequence(args.sequence)
    report = theorem31_decide(seq, catalog, alternative_5i=args.alternative_5i)
    print(json.dumps(report.to_dict(), indent=2))
    return EXIT_OK


def _cmd_oracle(args, catalog, budget) -> int:
    seq = parse_sequence(args.sequence)
    verdict = oracle_potentially(seq, None, args.strategy, budget)
    witness_file: Optional[str] = None
    if verdict.potentially and not args.no_witness_file:
        witness_file = args.witness or f"witness_{seq.render()}.txt"
        with open(witness_file, "w", encoding="utf-8") as fh:
            fh.write(verdict.witness.to_text())
    print(
        json.dumps(
            {
                "sequence": seq.render(),
                "potentially": verdict.potentially,
                "strategy": verdict.strategy,
                "nodes_explored": verdict.nodes_explored,
                "witness_file": witness_file,
            },
            indent=2,
        )
    )
    return EXIT_OK


def _cmd_realize(args, catalog, budget) -> int:
    seq = parse_sequence(args.sequence)
    if args.contain:
        verdict = oracle_potentially(seq, None, STRATEGY_EMBED, budget)
        if not verdict.potentially:
            raise DomainError(
                f"({seq}) has no realization containing the pattern"
            )
        graph = verdict.witness
    else:
        graph = havel_hakimi_realize(seq)
    text = graph.to_text()
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text)
    else:
        print(text, end="")
    return EXIT_OK


def _cmd_survey(args, catalog, budget) -> int:
    jobs = args.jobs if args.jobs is not None else _env_int("POTGRAPH_JOBS", 1)
    report = cross_validate(
        args.n,
        args.oracle,
        budget=budget,
        catalog=catalog,
        strategy=args.strategy,
        jobs=jobs,
        allow_zeros=args.allow_zeros,
    )
    text = emit_report(report, args.format, args.out)
    if args.out is None:
        print(text, end="")
    else:
        print(f"report written to {args.out}")
    return EXIT_DISCREPANCY if report.discrepancies else EXIT_OK


def _cmd_sigma(args, catalog, budget) -> int:
    print(sigma_empirical(args.n, None, budget, args.strategy))
    return EXIT_OK


_COMMANDS = {
    "graphic": _cmd_graphic,
    "check": _cmd_check,
    "oracle": _cmd_oracle,
    "realize": _cmd_realize,
    "survey": _cmd_survey,
    "sigma": _cmd_sigma,
}


def run_cli(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    try:
        catalog = load_catalog(args.catalog) if args.catalog else None
        budget = args.budget if args.budget is not None else _env_int(
            "POTGRAPH_BUDGET", DEFAULT_BUDGET
        )
        if budget < 1:
            raise DomainError(f"budget must be positive, got {budget}")
        return _COMMANDS[args.command](args, catalog, budget)
    except BudgetExceededError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BUDGET
    except (StrategyDisagreementError, InternalCheckError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DISCREPANCY
    except (SequenceParseError, DomainError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except PotgraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
