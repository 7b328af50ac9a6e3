"""Command-line frontend.

Subcommands mirror the library: ``fq`` (recursion table rows), ``count``
(subcubes contained in a vertex file), ``optimal`` (prefix-sum optimum and
optional emission of the initial segment), ``oracle`` (exhaustive search),
``bijection`` (special-bijection witness), ``hypercubic`` (partition
sizes), and ``counterexample`` (maximizers that no bit position explains).

Every subcommand emits plain, json, or csv with identical numeric content;
reports go to stdout, diagnostics to stderr. Exit codes: 0 success,
1 usage error, 2 input error, 3 enumeration budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass

from . import bijection as bij
from . import cube, oracle, recursion
from .weights import prefix_hq

__all__ = ["main", "run"]

ENV_BUDGET = "CUBESEG_BUDGET"


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):  # keep usage failures on exit code 1
        raise UsageError(message)


@dataclass
class _Report:
    json_obj: object
    csv_header: list
    csv_rows: list
    plain_lines: list


def _cell(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (list, tuple, set, frozenset)):
        return "|".join(str(v) for v in value)
    return str(value)


def _plain_cell(value) -> str:
    if isinstance(value, (list, tuple, set, frozenset)) and not value:
        return "-"
    return _cell(value)


def _render(report: _Report, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(report.json_obj, indent=2) + "\n"
    if fmt == "csv":
        lines = [",".join(report.csv_header)]
        lines += [",".join(_cell(v) for v in row) for row in report.csv_rows]
        return "\n".join(lines) + "\n"
    return "\n".join(report.plain_lines) + "\n" if report.plain_lines else ""


def _build_parser() -> _Parser:
    parser = _Parser(prog="cubeseg", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    def add_output(p):
        p.add_argument(
            "--output",
            choices=("plain", "json", "csv"),
            default="plain",
            help="report format (default: plain)",
        )

    p = sub.add_parser("fq", help="recursion values, maximizers, hypercubic sizes")
    p.add_argument("--q", type=int, required=True, help="subcube dimension (>= 0)")
    p.add_argument("--kmax", type=int, required=True, help="largest set size")
    add_output(p)

    p = sub.add_parser("count", help="count subcubes contained in a vertex file")
    p.add_argument("--dim", type=int, required=True, help="cube dimension n")
    p.add_argument("--q", type=int, required=True, help="subcube dimension")
    p.add_argument("--input", required=True, help="vertex file, one vertex per line")
    p.add_argument(
        "--input-format",
        choices=("decimal", "binary"),
        default="decimal",
        help="vertex file format (default: decimal)",
    )
    add_output(p)

    p = sub.add_parser("optimal", help="prefix-sum optimum for k vertices")
    p.add_argument("--dim", type=int, required=True, help="cube dimension n")
    p.add_argument("--q", type=int, required=True, help="subcube dimension")
    p.add_argument("--k", type=int, required=True, help="set size")
    p.add_argument(
        "--emit-set",
        metavar="PATH",
        help="also write the initial segment {0..k-1} as a vertex file",
    )
    p.add_argument(
        "--input-format",
        choices=("decimal", "binary"),
        default="decimal",
        help="format of the emitted vertex file (default: decimal)",
    )
    add_output(p)

    p = sub.add_parser("oracle", help="exhaustive maximum over all k-subsets")
    p.add_argument("--dim", type=int, required=True, help="cube dimension n")
    p.add_argument("--k", type=int, required=True, help="set size")
    p.add_argument("--q", type=int, required=True, help="subcube dimension")
    p.add_argument(
        "--argmax-cap",
        type=int,
        default=oracle.DEFAULT_ARGMAX_CAP,
        help=f"max argmax examples reported (default: {oracle.DEFAULT_ARGMAX_CAP})",
    )
    p.add_argument(
        "--budget",
        type=int,
        default=None,
        help=f"subset enumeration budget (default: {ENV_BUDGET} or {oracle.DEFAULT_BUDGET})",
    )
    add_output(p)

    p = sub.add_parser("bijection", help="weight-monotone bijection between intervals")
    p.add_argument("src_lo", type=int, help="source interval lower bound")
    p.add_argument("src_hi", type=int, help="source interval upper bound")
    p.add_argument("dst_lo", type=int, help="target interval lower bound")
    p.add_argument("dst_hi", type=int, help="target interval upper bound")
    add_output(p)

    p = sub.add_parser("hypercubic", help="hypercubic partition sizes of k")
    p.add_argument("--k", type=int, required=True, help="set size (>= 2)")
    add_output(p)

    p = sub.add_parser("counterexample", help="maximizers that are not hypercubic")
    p.add_argument("--qmax", type=int, required=True, help="largest q scanned")
    p.add_argument("--kmax", type=int, required=True, help="largest k scanned")
    add_output(p)

    return parser


def _cmd_fq(ns) -> _Report:
    if ns.q < 0:
        raise UsageError(f"--q must be >= 0, got {ns.q}")
    if ns.kmax < 1:
        raise UsageError(f"--kmax must be >= 1, got {ns.kmax}")
    table = recursion.build_table(ns.q, ns.kmax)
    rows = []
    for k in range(1, ns.kmax + 1):
        maxi = (
            sorted(table.maximizer_sets[(ns.q, k)]) if ns.q >= 1 and k >= 2 else []
        )
        hyper = sorted(recursion.hypercubic_partitions(k)) if k >= 2 else []
        rows.append(
            {
                "q": ns.q,
                "k": k,
                "F": table.values[ns.q][k],
                "maximizers": maxi,
                "hypercubic": hyper,
            }
        )
    header = ["q", "k", "F", "maximizers", "hypercubic"]
    csv_rows = [[r[h] for h in header] for r in rows]
    plain = ["q k F maximizers hypercubic"]
    plain += [" ".join(_plain_cell(r[h]) for h in header) for r in rows]
    return _Report(rows, header, csv_rows, plain)


def _cmd_count(ns) -> _Report:
    S = cube.load_vertex_set(ns.input, ns.dim, ns.input_format)
    count = cube.count_subcubes_bitparallel(S, ns.q)
    return _Report({"count": count}, ["count"], [[count]], [str(count)])


def _cmd_optimal(ns) -> _Report:
    if ns.q < 0 or ns.q > ns.dim:
        raise UsageError(f"--q must be in [0, {ns.dim}], got {ns.q}")
    segment = cube.initial_segment(ns.k, ns.dim)  # validates k against dim
    value = prefix_hq(ns.k, ns.q)
    if ns.emit_set:
        cube.save_vertex_set(segment, ns.emit_set, ns.input_format)
    return _Report(
        {"optimal_count": value}, ["optimal_count"], [[value]], [str(value)]
    )


def _cmd_oracle(ns) -> _Report:
    budget = ns.budget
    if budget is None:
        raw = os.environ.get(ENV_BUDGET)
        if raw is not None:
            try:
                budget = int(raw)
            except ValueError:
                raise UsageError(f"{ENV_BUDGET} must be an integer, got {raw!r}")
        else:
            budget = oracle.DEFAULT_BUDGET
    result = oracle.brute_force_mq(
        ns.dim, ns.k, ns.q, argmax_cap=ns.argmax_cap, budget=budget
    )
    formula = prefix_hq(ns.k, ns.q)
    argmax = [list(S) for S in result.argmax_examples]
    obj = {
        "n": result.n,
        "k": result.k,
        "q": result.q,
        "max_count": result.max_count,
        "formula_value": formula,
        "matches_formula": result.matches_formula,
        "argmax": argmax,
        "scanned": result.total_subsets_scanned,
    }
    header = [
        "n", "k", "q", "max_count", "formula_value", "matches_formula",
        "scanned", "argmax",
    ]
    scalars = [
        result.n, result.k, result.q, result.max_count, formula,
        result.matches_formula, result.total_subsets_scanned,
    ]
    csv_rows = [scalars + [members] for members in argmax] or [scalars + [[]]]
    plain = [
        f"n {result.n}",
        f"k {result.k}",
        f"q {result.q}",
        f"max_count {result.max_count}",
        f"formula_value {formula}",
        f"matches_formula {_cell(result.matches_formula)}",
        f"scanned {result.total_subsets_scanned}",
    ]
    plain += [f"argmax {_plain_cell(members)}" for members in argmax]
    return _Report(obj, header, csv_rows, plain)


def _cmd_bijection(ns) -> _Report:
    source = bij.Interval(ns.src_lo, ns.src_hi)
    target = bij.Interval(ns.dst_lo, ns.dst_hi)
    witness = bij.find_special_bijection(source, target)
    if witness is None:
        obj = {
            "found": False,
            "source": {"lo": source.lo, "hi": source.hi},
            "target": {"lo": target.lo, "hi": target.hi},
        }
        header = ["source_lo", "source_hi", "target_lo", "target_hi", "found"]
        rows = [[source.lo, source.hi, target.lo, target.hi, False]]
        plain = [
            f"source {source.lo} {source.hi}",
            f"target {target.lo} {target.hi}",
            "found false",
        ]
        return _Report(obj, header, rows, plain)
    obj = {
        "source": {"lo": witness.source.lo, "hi": witness.source.hi},
        "target": {"lo": witness.target.lo, "hi": witness.target.hi},
        "strict_required": witness.strict_required,
        "map": [[i, p] for i, p in witness.map],
    }
    header = [
        "source_lo", "source_hi", "target_lo", "target_hi",
        "strict_required", "i", "p",
    ]
    rows = [
        [witness.source.lo, witness.source.hi, witness.target.lo,
         witness.target.hi, witness.strict_required, i, p]
        for i, p in witness.map
    ]
    plain = [
        f"source {witness.source.lo} {witness.source.hi}",
        f"target {witness.target.lo} {witness.target.hi}",
        f"strict_required {_cell(witness.strict_required)}",
    ]
    plain += [f"{i} {p}" for i, p in witness.map]
    return _Report(obj, header, rows, plain)


def _cmd_hypercubic(ns) -> _Report:
    parts = sorted(recursion.hypercubic_partitions(ns.k))
    obj = {"k": ns.k, "hypercubic": parts}
    return _Report(
        obj,
        ["k", "hypercubic"],
        [[ns.k, parts]],
        [f"k {ns.k}", f"hypercubic {_plain_cell(parts)}"],
    )


def _cmd_counterexample(ns) -> _Report:
    records = recursion.find_onlyif_counterexamples(ns.qmax, ns.kmax)
    rows = [
        {
            "q": rec.q,
            "k": rec.k,
            "non_hypercubic_maximizers": list(rec.non_hypercubic_maximizers),
        }
        for rec in records
    ]
    header = ["q", "k", "non_hypercubic_maximizers"]
    csv_rows = [[r[h] for h in header] for r in rows]
    plain = ["q k non_hypercubic_maximizers"]
    plain += [" ".join(_plain_cell(r[h]) for h in header) for r in rows]
    return _Report(rows, header, csv_rows, plain)


_HANDLERS = {
    "fq": _cmd_fq,
    "count": _cmd_count,
    "optimal": _cmd_optimal,
    "oracle": _cmd_oracle,
    "bijection": _cmd_bijection,
    "hypercubic": _cmd_hypercubic,
    "counterexample": _cmd_counterexample,
}


def run(argv) -> int:
    """Parse argv, dispatch, and emit one report; returns the exit code.

    The report is written to stdout only after the command has fully
    succeeded, so error exits never leave partial output behind.
    """
    try:
        ns = _build_parser().parse_args(list(argv))
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # --help
        return int(exc.code or 0)
    try:
        report = _HANDLERS[ns.command](ns)
    except cube.VertexFormatError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except OSError as exc:
        print(f"input error: {exc}", file=sys.stderr)
        return 2
    except oracle.BudgetExceeded as exc:
        print(f"budget exceeded: {exc}", file=sys.stderr)
        return 3
    except (UsageError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    sys.stdout.write(_render(report, ns.output))
    return 0


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
