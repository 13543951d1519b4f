"""Command-line interface.

Exit codes: 0 success / valid, 1 invalid partition, 2 usage or parse error,
3 infeasible (no total dominating set), 4 budget exceeded.
"""

from __future__ import annotations

import argparse
import csv
import io
import sys
from dataclasses import dataclass
from pathlib import Path

from hypdomatic.closed_form import FormulaResult, Quantity, construct_partition, formula, reduction
from hypdomatic.domination import validate_partition
from hypdomatic.errors import BudgetExceeded, HypergraphError, Infeasible, NotApplicable, SearchFailed
from hypdomatic.formats import parse_hgf, parse_partition, write_hgf, write_partition
from hypdomatic.hypergraph import Complete, CompleteBipartite, FamilyDescriptor, Hypergraph
from hypdomatic.solver import SolveBudget, SolveResult, max_domatic

EXIT_OK, EXIT_INVALID, EXIT_USAGE, EXIT_INFEASIBLE, EXIT_BUDGET = 0, 1, 2, 3, 4

CROSSCHECK_FIELDS = [
    "family",
    "n",
    "x",
    "y",
    "r",
    "quantity",
    "formula_kind",
    "formula_value",
    "citation",
    "solver_value",
    "solver_optimal",
    "agreement",
]


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _family_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("family", choices=["complete", "bipartite"])
    p.add_argument("--n", type=int, help="vertex count (complete)")
    p.add_argument("--x", type=int, help="|X| (bipartite)")
    p.add_argument("--y", type=int, help="|Y| (bipartite)")
    p.add_argument("--r", type=int, required=True, help="uniformity")


def _budget_args(p: argparse.ArgumentParser) -> None:
    p.add_argument("--time-limit", type=float, default=None, help="seconds")
    p.add_argument("--node-limit", type=int, default=None)
    p.add_argument("--deterministic", action=argparse.BooleanOptionalAction, default=True)


def _build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="hypdomatic", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("gen", help="emit HGF for a family")
    _family_args(p)
    p.add_argument("--out")

    p = sub.add_parser("solve", help="exact (total) (edge-)domatic number of an HGF file")
    p.add_argument("input", help="HGF file, '-' for stdin")
    p.add_argument("--quantity", choices=[q.value for q in Quantity], required=True)
    p.add_argument("--out", help="write the witness partition here")
    _budget_args(p)

    p = sub.add_parser("formula", help="closed-form value for a family")
    _family_args(p)
    p.add_argument("--quantity", choices=[q.value for q in Quantity], required=True)

    p = sub.add_parser("construct", help="emit a witness partition for a family")
    _family_args(p)
    p.add_argument("--quantity", choices=[q.value for q in Quantity], required=True)
    p.add_argument("--rule", help="force a specific rule id (e.g. thm5-2)")
    p.add_argument("--out")
    _budget_args(p)

    p = sub.add_parser("verify", help="validate a partition file against an HGF file")
    p.add_argument("hypergraph")
    p.add_argument("partition")

    p = sub.add_parser("crosscheck", help="compare closed forms with the exact solver (TSV)")
    p.add_argument("--max-n", type=int, default=8)
    p.add_argument("--node-limit", type=int, default=200_000, help="per row with a closed form")
    p.add_argument("--probe-node-limit", type=int, default=20_000, help="per row without one")
    p.add_argument("--out")
    p.add_argument("--deterministic", action=argparse.BooleanOptionalAction, default=True)
    return parser


def _family(args) -> FamilyDescriptor:
    if args.family == "complete":
        if args.n is None:
            raise _UsageError("complete family needs --n")
        return Complete(args.n, args.r)
    if args.x is None or args.y is None:
        raise _UsageError("bipartite family needs --x and --y")
    return CompleteBipartite(args.x, args.y, args.r)


def _read(path: str) -> str:
    if path == "-":
        return sys.stdin.read()
    return Path(path).read_text()


def _emit(text: str, out: str | None, stdout) -> None:
    if out:
        Path(out).write_text(text)
    else:
        stdout.write(text)


def _budget(args) -> SolveBudget | None:
    if args.time_limit is None and args.node_limit is None:
        return None
    return SolveBudget(args.time_limit, args.node_limit)


def _solve(h: Hypergraph, q: Quantity, budget: SolveBudget | None) -> SolveResult:
    kind = "edge" if q.on_edges else "vertex"
    return max_domatic(reduction(h, q), q.total, budget, kind)


def _describe(res: SolveResult) -> str:
    return (
        f"value {res.value}\n"
        f"optimal {str(res.optimal).lower()}\n"
        f"upper_bound {res.upper_bound} {res.upper_bound_used}\n"
        f"gamma {res.gamma if res.gamma is not None else 'unknown'}\n"
        f"nodes {res.nodes_explored}\n"
    )


def cmd_gen(args, stdout) -> int:
    f = _family(args)
    _emit(write_hgf(f.hypergraph(), f.label()), args.out, stdout)
    return EXIT_OK


def cmd_solve(args, stdout) -> int:
    h = parse_hgf(_read(args.input))
    q = Quantity(args.quantity)
    try:
        res = _solve(h, q, _budget(args))
    except Infeasible as exc:
        stdout.write(f"infeasible: {exc}\n")
        return EXIT_INFEASIBLE
    except BudgetExceeded as exc:
        stdout.write(f"budget exceeded: {exc}\n")
        if exc.best is not None:
            stdout.write(_describe(exc.best))
            if args.out:
                Path(args.out).write_text(write_partition(exc.best.witness))
        return EXIT_BUDGET
    stdout.write(_describe(res))
    if args.out:
        Path(args.out).write_text(write_partition(res.witness))
    return EXIT_OK


def cmd_formula(args, stdout) -> int:
    stdout.write(f"{formula(_family(args), args.quantity)}\n")
    return EXIT_OK


def cmd_construct(args, stdout) -> int:
    try:
        part = construct_partition(_family(args), args.quantity, args.rule, _budget(args))
    except SearchFailed as exc:
        sys.stderr.write(f"construction failed: {exc}\n")
        return EXIT_BUDGET
    _emit(write_partition(part), args.out, stdout)
    return EXIT_OK


def cmd_verify(args, stdout) -> int:
    h = parse_hgf(_read(args.hypergraph))
    part = parse_partition(_read(args.partition))
    q = {("vertex", False): "d", ("vertex", True): "dt", ("edge", False): "ed", ("edge", True): "edt"}[
        (part.kind, part.total)
    ]
    report = validate_partition(reduction(h, q), part)
    if report.valid:
        stdout.write(f"valid: {len(part.classes)} classes\n")
        return EXIT_OK
    stdout.write("invalid\n")
    if report.missing:
        stdout.write(f"  missing items: {report.missing}\n")
    if report.repeated:
        stdout.write(f"  repeated items: {report.repeated}\n")
    if report.empty_classes:
        stdout.write(f"  empty classes: {report.empty_classes}\n")
    for fail in report.failures:
        stdout.write(f"  class {fail.class_index}: {fail.reason} (item {fail.witness})\n")
    return EXIT_INVALID


@dataclass
class CrosscheckRow:
    family: FamilyDescriptor
    quantity: Quantity
    predicted: FormulaResult
    solver_value: str
    solver_optimal: bool
    agreement: bool

    def as_dict(self) -> dict[str, str]:
        f = self.family
        is_complete = isinstance(f, Complete)
        return {
            "family": "complete" if is_complete else "bipartite",
            "n": str(f.n),
            "x": "" if is_complete else str(f.a),
            "y": "" if is_complete else str(f.b),
            "r": str(f.r),
            "quantity": self.quantity.value,
            "formula_kind": self.predicted.kind,
            "formula_value": "" if self.predicted.value is None else str(self.predicted.value),
            "citation": self.predicted.citation,
            "solver_value": self.solver_value,
            "solver_optimal": str(self.solver_optimal).lower(),
            "agreement": str(self.agreement).lower(),
        }


def crosscheck_families(max_n: int) -> list[FamilyDescriptor]:
    fams: list[FamilyDescriptor] = []
    for n in range(1, max_n + 1):
        fams.extend(Complete(n, r) for r in range(1, n + 1))
    for total in range(2, max_n + 1):
        for a in range(1, total // 2 + 1):
            fams.extend(CompleteBipartite(a, total - a, r) for r in range(2, total + 1))
    return fams


def crosscheck_row(f: FamilyDescriptor, q: Quantity, node_limit: int, probe_node_limit: int) -> CrosscheckRow:
    pred = formula(f, q)
    limit = probe_node_limit if pred.kind == "NotApplicable" else node_limit
    optimal = False
    try:
        res = _solve(f.hypergraph(), q, SolveBudget(node_limit=limit))
        value, optimal, shown = res.value, True, str(res.value)
    except Infeasible:
        value, optimal, shown = None, True, "INFEASIBLE"
    except BudgetExceeded as exc:
        value = exc.best.value if exc.best is not None else None
        shown = str(value) if value is not None else "SKIPPED"

    if pred.kind == "NotApplicable":
        agree = True
    elif pred.kind == "Exact":
        agree = optimal and value == pred.value
    else:
        # a validated lower-bound witness from the solver still bounds the optimum
        agree = value is not None and pred.value <= value
    return CrosscheckRow(f, q, pred, shown, optimal, agree)


def crosscheck(max_n: int, node_limit: int = 200_000, probe_node_limit: int = 20_000) -> list[CrosscheckRow]:
    return [
        crosscheck_row(f, q, node_limit, probe_node_limit)
        for f in crosscheck_families(max_n)
        for q in Quantity
    ]


def format_tsv(rows: list[CrosscheckRow]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=CROSSCHECK_FIELDS, delimiter="\t", lineterminator="\n")
    writer.writeheader()
    for row in rows:
        writer.writerow(row.as_dict())
    return buf.getvalue()


def cmd_crosscheck(args, stdout) -> int:
    rows = crosscheck(args.max_n, args.node_limit, args.probe_node_limit)
    _emit(format_tsv(rows), args.out, stdout)
    return EXIT_OK if all(r.agreement for r in rows) else EXIT_INVALID


COMMANDS = {
    "gen": cmd_gen,
    "solve": cmd_solve,
    "formula": cmd_formula,
    "construct": cmd_construct,
    "verify": cmd_verify,
    "crosscheck": cmd_crosscheck,
}


def run(argv: list[str] | None = None, stdout=None) -> int:
    stdout = stdout or sys.stdout
    try:
        args = _build_parser().parse_args(argv)
        return COMMANDS[args.command](args, stdout)
    except _UsageError as exc:
        sys.stderr.write(f"usage error: {exc}\n")
        return EXIT_USAGE
    except NotApplicable as exc:
        sys.stderr.write(f"not applicable: {exc}\n")
        return EXIT_USAGE
    except (HypergraphError, OSError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
