"""Command-line front end.

Exit codes: 0 success, 1 unreadable or invalid input files, 2 bad arguments.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys
import time
from dataclasses import dataclass, field
from pathlib import Path

from .cost_model import CostModel, validate_cost_text
from .search import EmptyQuery, MatchResult, approx_search, worst_case_factor
from .trie import LexTrie, load_dictionary

log = logging.getLogger("fuzzylex")

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_USAGE = 2


class InputFileError(Exception):
    pass


def format_cost(value: float) -> str:
    """Six decimals at most, trailing zeros trimmed."""
    text = f"{value:.6f}".rstrip("0").rstrip(".")
    return "0" if text in ("", "-0") else text


def fold_case(text: str) -> str:
    # per-scalar only: characters whose lowercase form is longer stay as they are
    return "".join(lo if len(lo := ch.lower()) == 1 else ch for ch in text)


@dataclass
class BatchReport:
    per_query: list[tuple[str, list[MatchResult]]] = field(default_factory=list)
    timing: dict[str, float] = field(default_factory=dict)

    @property
    def queries(self) -> int:
        return len(self.per_query)

    @property
    def matched(self) -> int:
        return sum(1 for _, found in self.per_query if found)

    @property
    def unmatched(self) -> int:
        return self.queries - self.matched


def _read_text(path: str) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except (OSError, UnicodeDecodeError) as exc:
        raise InputFileError(f"cannot read {path}: {exc}") from exc


def _load_model(path: str | None) -> CostModel:
    if path is None:
        return CostModel()
    model, errors = validate_cost_text(_read_text(path))
    if errors:
        raise InputFileError(
            "\n".join(f"{path}: {err}" for err in errors)
        )
    return model


def _load_trie(path: str, lowercase: bool) -> LexTrie:
    try:
        words = load_dictionary(path)
    except (OSError, UnicodeDecodeError) as exc:
        raise InputFileError(f"cannot read {path}: {exc}") from exc
    if lowercase:
        words = [fold_case(w) for w in words]
    return LexTrie(words)


def _threshold(args: argparse.Namespace, query: str) -> float:
    if args.per_symbol_threshold:
        return args.threshold * len(query)
    return args.threshold


def _positive_real(text: str) -> float:
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not math.isfinite(value) or value <= 0:
        raise argparse.ArgumentTypeError(f"threshold must be a positive real, got {text!r}")
    return value


def cmd_validate(args: argparse.Namespace) -> int:
    path = args.costs or args.path
    if path is None:
        print("validate: a cost file is required", file=sys.stderr)
        return EXIT_USAGE
    try:
        text = _read_text(path)
    except InputFileError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INPUT
    model, errors = validate_cost_text(text)
    if errors:
        for err in errors:
            kind = type(err).__name__
            print(f"{path}:{err.line}: {kind}: {err.message}")
        print(f"INVALID, {len(errors)} problem(s)")
        return EXIT_INPUT
    rules = sum(1 for sc in model.shortcuts if (sc.left, sc.right) <= (sc.right, sc.left))
    print(
        f"OK, {rules} rules, kappa={model.kappa}, epsilon={format_cost(model.epsilon_min)}"
    )
    return EXIT_OK


def cmd_search(args: argparse.Namespace) -> int:
    query = fold_case(args.query) if args.lowercase else args.query
    if not query:
        print("search: query must not be empty", file=sys.stderr)
        return EXIT_USAGE
    trie = _load_trie(args.dict, args.lowercase)
    model = _load_model(args.costs)
    matches, diag = approx_search(trie, model, query, _threshold(args, query))
    for m in matches:
        print(f"{m.word}\t{format_cost(m.raw_cost)}\t{format_cost(m.normalized_cost)}")
    if args.diagnostics:
        print(
            f"beta={diag.mean_branching:.6g}\tkappa={diag.kappa}\t"
            f"epsilon={format_cost(diag.epsilon)}\t"
            f"states_expanded={diag.states_expanded}\t"
            f"states_dominated={diag.states_dominated}\t"
            f"arcs_considered={diag.arcs_considered}\t"
            f"worst_case_factor={diag.worst_case_factor:.6g}",
            file=sys.stderr,
        )
    return EXIT_OK


def run_batch(
    trie: LexTrie, model: CostModel, queries: list[str], threshold: float, per_symbol: bool
) -> BatchReport:
    report = BatchReport()
    start = time.perf_counter()
    for query in queries:
        limit = threshold * len(query) if per_symbol else threshold
        matches, _ = approx_search(trie, model, query, limit)
        report.per_query.append((query, matches))
    report.timing["search"] = time.perf_counter() - start
    return report


def cmd_batch(args: argparse.Namespace) -> int:
    if args.queries is None:
        print("batch: --queries is required", file=sys.stderr)
        return EXIT_USAGE
    t0 = time.perf_counter()
    trie = _load_trie(args.dict, args.lowercase)
    model = _load_model(args.costs)
    raw = _read_text(args.queries).splitlines()
    load_time = time.perf_counter() - t0

    queries = []
    for lineno, line in enumerate(raw, start=1):
        if not line:
            log.warning("%s:%d: empty query skipped", args.queries, lineno)
            continue
        queries.append(fold_case(line) if args.lowercase else line)

    report = run_batch(trie, model, queries, args.threshold, args.per_symbol_threshold)
    report.timing["load"] = load_time
    for query, matches in report.per_query:
        for m in matches:
            print(
                f"{query}\t{m.word}\t{format_cost(m.raw_cost)}\t"
                f"{format_cost(m.normalized_cost)}"
            )
    print(
        f"#summary\tqueries={report.queries}\tmatched={report.matched}\t"
        f"unmatched={report.unmatched}"
    )
    if args.diagnostics:
        print(
            "\t".join(f"{phase}_seconds={secs:.6f}" for phase, secs in report.timing.items()),
            file=sys.stderr,
        )
    return EXIT_OK


def cmd_stats(args: argparse.Namespace) -> int:
    trie = _load_trie(args.dict, args.lowercase)
    model = _load_model(args.costs).with_symbols(trie.alphabet)
    stats = trie.branching_stats()
    ratio = args.threshold / model.epsilon_min
    factor = worst_case_factor(
        stats.mean_branching, args.threshold, model.epsilon_min, len(model.alphabet), model.kappa
    )
    root_branching = len(trie.children(trie.root))
    rows = [
        ("word_count", trie.word_count),
        ("node_count", stats.node_count),
        ("depth", trie.depth),
        ("root_branching", root_branching),
        ("mean_branching", f"{stats.mean_branching:.6g}"),
        ("max_branching", stats.max_branching),
        ("alphabet_size", len(model.alphabet)),
        ("kappa", model.kappa),
        ("epsilon", format_cost(model.epsilon_min)),
        ("threshold", format_cost(args.threshold)),
        ("threshold_over_epsilon", format_cost(ratio)),
        ("arc_count", (len(model.alphabet) + 1) ** 2 + model.kappa - 1),
        ("worst_case_factor", f"{factor:.6g}"),
    ]
    for key, value in rows:
        print(f"{key}\t{value}")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--dict", metavar="PATH", help="dictionary, one entry per line")
    common.add_argument("--costs", metavar="PATH", help="short-circuit cost file")
    common.add_argument("--lowercase", action="store_true", help="fold case on input")
    common.add_argument("--diagnostics", action="store_true", help="report search statistics on stderr")

    searching = argparse.ArgumentParser(add_help=False)
    searching.add_argument("--threshold", type=_positive_real, required=True, metavar="REAL")
    searching.add_argument(
        "--per-symbol-threshold",
        action="store_true",
        help="multiply the threshold by the query length",
    )

    parser = argparse.ArgumentParser(
        prog="fuzzylex", description="Approximate dictionary lookup with block edit costs."
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="check a cost file")
    p.add_argument("path", nargs="?", help="cost file (alternative to --costs)")
    p.set_defaults(func=cmd_validate)

    p = sub.add_parser("search", parents=[common, searching], help="look up one query")
    p.add_argument("query")
    p.set_defaults(func=cmd_search, needs_dict=True)

    p = sub.add_parser("batch", parents=[common, searching], help="look up many queries")
    p.add_argument("--queries", metavar="PATH", help="queries, one per line")
    p.set_defaults(func=cmd_batch, needs_dict=True)

    p = sub.add_parser("stats", parents=[common], help="trie and cost-model diagnostics")
    p.add_argument("--threshold", type=_positive_real, default=1.0, metavar="REAL")
    p.set_defaults(func=cmd_stats, needs_dict=True)
    return parser


def main(argv: list[str] | None = None) -> int:
    logging.basicConfig(level=logging.WARNING, format="%(levelname)s: %(message)s")
    for stream in (sys.stdout, sys.stderr):
        if hasattr(stream, "reconfigure"):
            stream.reconfigure(encoding="utf-8")
    parser = build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "needs_dict", False) and args.dict is None:
        parser.error(f"{args.command}: --dict is required")
    try:
        return args.func(args)
    except InputFileError as exc:
        print(exc, file=sys.stderr)
        return EXIT_INPUT
    except EmptyQuery as exc:
        print(exc, file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
