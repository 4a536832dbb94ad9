"""Command-line interface.

Four subcommands: `check` decides epistemic queries, `table` prints
constrained truth tables, `quantum` turns interval declarations into
axioms, and `demo` walks the built-in worked example end to end.

Exit codes: 0 for an affirmative verdict (valid, satisfiable, or plain
output), 1 for a negative verdict (invalid, unsatisfiable), 2 for usage,
parse, or input-file errors.  Identical invocations produce byte-identical
output; the engine's canonical enumeration order makes every reported
model reproducible.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import sys
from fractions import Fraction

from . import classical, epistemic
from .classical import ClassicalVerdict, ConstraintSet, TruthTable, is_tautology, truth_table
from .declarations import (
    Declarations,
    format_declarations,
    load_constraints,
    load_declarations,
    load_theory,
)
from .epistemic import (
    CheckResult,
    EpistemicModel,
    Theory,
    Verdict,
    is_satisfiable,
    is_valid,
)
from .errors import LogicError, ModalOperatorPresent
from .quantum import (
    GeneratedTheory,
    IntervalProposition,
    ObservableKind,
    PhysicsConfig,
    compatible,
    generate,
    merge,
    uncertainty_product,
)
from .syntax import Formula, modal_depth, parse, render

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_ERROR = 2

_ATOM_LIMIT_HELP = (
    "override the atom limit; modal search enumerates 2^(2^n) candidate "
    "cells over n atoms, so raise with care"
)


def _bit(b: bool) -> str:
    return "1" if b else "0"


def _model_lines(model: EpistemicModel, label: str) -> list[str]:
    lines = [f"{label}:", f"  atoms: {' '.join(model.atoms)}"]
    for i, world in enumerate(model.cell):
        bits = " ".join(_bit(b) for b in world.bits)
        tag = "  [designated]" if i == model.designated else ""
        lines.append(f"  world {i}: {bits}{tag}")
    return lines


def _model_json(model: EpistemicModel) -> dict:
    return {
        "atoms": list(model.atoms),
        "worlds": [[1 if b else 0 for b in world.bits] for world in model.cell],
        "designated": model.designated,
    }


def _check_json(result: CheckResult) -> dict:
    out: dict = {"verdict": result.verdict.name}
    if result.verdict is Verdict.INVALID:
        out["countermodel"] = _model_json(result.model)
    elif result.verdict is Verdict.SATISFIABLE:
        out["model"] = _model_json(result.model)
    return out


def _check_lines(result: CheckResult) -> list[str]:
    lines = [result.verdict.name]
    if result.verdict is Verdict.INVALID:
        lines.extend(_model_lines(result.model, "countermodel"))
    elif result.verdict is Verdict.SATISFIABLE:
        lines.extend(_model_lines(result.model, "model"))
    return lines


def _table_lines(table: TruthTable) -> list[str]:
    """`*` marks excluded rows; their formula cells render as `x`."""
    headers = [render(f) for f in table.formulas]
    atom_block = " ".join(table.atoms)
    lines = [("  " + atom_block + "  " + "  ".join(headers)).rstrip()]
    for row in table.rows:
        marker = "* " if row.excluded else "  "
        bits = " ".join(
            _bit(b).ljust(len(a)) for a, b in zip(table.atoms, row.valuation.bits)
        )
        if row.excluded:
            cells = ["x".ljust(len(h)) for h in headers]
        else:
            cells = [_bit(v).ljust(len(h)) for v, h in zip(row.values, headers)]
        lines.append((marker + bits + "  " + "  ".join(cells)).rstrip())
    return lines


def _table_csv(table: TruthTable) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(["excluded"] + list(table.atoms) + [render(f) for f in table.formulas])
    for row in table.rows:
        cells = ["x"] * len(table.formulas) if row.excluded else [_bit(v) for v in row.values]
        writer.writerow(
            ["*" if row.excluded else ""]
            + [_bit(b) for b in row.valuation.bits]
            + cells
        )
    return buf.getvalue()


def _table_json(table: TruthTable) -> dict:
    return {
        "atoms": list(table.atoms),
        "formulas": [render(f) for f in table.formulas],
        "rows": [
            {
                "valuation": [1 if b else 0 for b in row.valuation.bits],
                "excluded": row.excluded,
                "violated": [render(c) for c in row.violated],
                "values": None if row.excluded else [1 if v else 0 for v in row.values],
            }
            for row in table.rows
        ],
    }


def _axiom_lines(gen: GeneratedTheory) -> list[str]:
    if not gen.provenance:
        return ["no axioms generated"]
    return [
        f"{render(ax)}   [widths {pv.momentum.width} * {pv.position.width}"
        f" = {pv.product} < {pv.bound}]"
        for ax, pv in zip(gen.axioms.axioms, gen.provenance)
    ]


def _axioms_json(gen: GeneratedTheory) -> list[dict]:
    return [
        {
            "formula": render(ax),
            "momentum": pv.momentum.atom,
            "position": pv.position.atom,
            "widths": [str(pv.momentum.width), str(pv.position.width)],
            "product": str(pv.product),
            "bound": str(pv.bound),
        }
        for ax, pv in zip(gen.axioms.axioms, gen.provenance)
    ]


def _proposition_json(p: IntervalProposition) -> dict:
    return {
        "atom": p.atom,
        "kind": p.kind.value,
        "interval": [str(p.lo), str(p.hi)],
        "width": str(p.width),
    }


def _print(text: str) -> None:
    sys.stdout.write(text if text.endswith("\n") else text + "\n")


def _print_json(report: dict) -> None:
    sys.stdout.write(json.dumps(report, indent=2) + "\n")


def _resolve_limit(args: argparse.Namespace, default: int) -> int:
    return default if args.atom_limit is None else args.atom_limit


def _run_query(f: Formula, theory: Theory, mode: str, limit: int) -> CheckResult:
    if mode == "valid":
        return is_valid(f, theory, atom_limit=limit)
    return is_satisfiable(f, theory, atom_limit=limit)


def _cmd_check(args: argparse.Namespace) -> int:
    f = parse(args.formula)
    theory = load_theory(args.theory) if args.theory else Theory()
    limit = _resolve_limit(args, epistemic.DEFAULT_MODAL_ATOM_LIMIT)
    result = _run_query(f, theory, args.mode, limit)
    if args.format == "json":
        report = {
            "command": "check",
            "formula": render(f),
            "mode": args.mode,
            "theory": [render(a) for a in theory.axioms],
        }
        report.update(_check_json(result))
        _print_json(report)
    else:
        _print("\n".join(_check_lines(result)))
    return EXIT_OK if result.holds else EXIT_NEGATIVE


def _cmd_table(args: argparse.Namespace) -> int:
    formulas = [parse(text) for text in args.formulas]
    for f in formulas:
        if modal_depth(f) != 0:
            raise ModalOperatorPresent(
                f"formula contains the knowledge operator: {render(f)} "
                f"(truth tables are classical; use the check command)"
            )
    if args.constraints:
        constraints = load_constraints(args.constraints)
    elif args.quantum:
        decls = load_declarations(args.quantum)
        constraints = generate(decls.propositions, decls.config).constraints
    else:
        constraints = ConstraintSet()
    limit = _resolve_limit(args, classical.DEFAULT_ATOM_LIMIT)
    table = truth_table(formulas, constraints, atom_limit=limit)
    if args.format == "csv":
        sys.stdout.write(_table_csv(table))
    elif args.format == "json":
        report = {"command": "table"}
        report.update(_table_json(table))
        report["constraints"] = [render(c) for c in constraints]
        _print_json(report)
    else:
        _print("\n".join(_table_lines(table)))
    return EXIT_OK


def _cmd_quantum(args: argparse.Namespace) -> int:
    decls = load_declarations(args.declarations)
    gen = generate(decls.propositions, decls.config)
    exit_code = EXIT_OK
    check_result = None
    check_formula = None
    if args.check is not None:
        check_formula = parse(args.check)
        limit = _resolve_limit(args, epistemic.DEFAULT_MODAL_ATOM_LIMIT)
        check_result = _run_query(check_formula, gen.axioms, args.mode, limit)
        if not check_result.holds:
            exit_code = EXIT_NEGATIVE

    if args.format == "json":
        report = {
            "command": "quantum",
            "bound": str(decls.config.bound),
            "propositions": [_proposition_json(p) for p in decls.propositions],
            "axioms": _axioms_json(gen),
            "constraints": [render(c) for c in gen.constraints],
        }
        if check_result is not None:
            check_report = {"formula": render(check_formula), "mode": args.mode}
            check_report.update(_check_json(check_result))
            report["check"] = check_report
        _print_json(report)
        return exit_code

    lines: list[str] = []
    if args.echo:
        lines.extend(format_declarations(decls).splitlines())
    if args.list_axioms:
        lines.extend(_axiom_lines(gen))
    if check_result is not None:
        lines.extend(_check_lines(check_result))
    if not lines:
        lines.append(
            f"{len(decls.propositions)} propositions, {len(gen.axioms.axioms)} axioms, "
            f"{len(gen.constraints)} constraints, bound {decls.config.bound}"
        )
    _print("\n".join(lines))
    return exit_code


def _demo_inputs() -> tuple[Declarations, IntervalProposition]:
    p = IntervalProposition("p", ObservableKind.MOMENTUM, Fraction(0), Fraction(1, 6))
    q = IntervalProposition("q", ObservableKind.POSITION, Fraction(-1), Fraction(1))
    r = IntervalProposition("r", ObservableKind.POSITION, Fraction(1), Fraction(3))
    decls = Declarations((p, q, r), PhysicsConfig())
    s = merge(q, r, "s")
    return decls, s


def _product_line(m: IntervalProposition, x: IntervalProposition, label: str, bound: Fraction) -> str:
    product = uncertainty_product(m, x)
    rel = ">=" if product >= bound else "<"
    verdict = "compatible" if compatible(m, x, PhysicsConfig(bound)) else "incompatible"
    return f"{m.atom} with {label}: {m.width} * {x.width} = {product} {rel} {bound}: {verdict}"


def _cmd_demo(args: argparse.Namespace) -> int:
    decls, s = _demo_inputs()
    p, q, r = decls.propositions
    bound = decls.config.bound
    gen = generate(decls.propositions, decls.config)

    distributivity = parse("p & (q | r) <-> (p & q) | (p & r)")
    taut = is_tautology(distributivity)
    table = truth_table(
        (parse("p & (q | r)"), parse("(p & q) | (p & r)")), gen.constraints
    )
    joint = parse("K(p) & (K(q) | K(r))")
    joint_result = is_satisfiable(joint, gen.axioms)
    conj_law = parse("K(a & b) <-> K(a) & K(b)")
    conj_result = is_valid(conj_law, Theory())
    disj = parse("K(a | b) -> K(a) | K(b)")
    disj_result = is_valid(disj, Theory())
    merged_claim = parse("K(p & s) <-> K(p) & K(s)")
    merged_result = is_satisfiable(merged_claim, Theory())

    product_lines = [
        _product_line(p, s, f"the full position range [{s.lo}, {s.hi}]", bound),
        _product_line(p, q, q.atom, bound),
        _product_line(p, r, r.atom, bound),
    ]

    if args.format == "json":
        report = {
            "command": "demo",
            "propositions": [_proposition_json(x) for x in decls.propositions],
            "uncertainty": {
                "bound": str(bound),
                "products": product_lines,
            },
            "classical_distributivity": {
                "formula": render(distributivity),
                "verdict": "TAUTOLOGY" if taut.holds else "NOT A TAUTOLOGY",
            },
            "table": _table_json(table),
            "axioms": _axioms_json(gen),
            "joint_knowledge": {
                "formula": render(joint),
                "verdict": joint_result.verdict.name,
            },
            "k_distribution": {
                "conjunction_law": {
                    "formula": render(conj_law),
                    "verdict": conj_result.verdict.name,
                },
                "disjunction_distribution": {
                    "formula": render(disj),
                    "verdict": disj_result.verdict.name,
                    "countermodel": _model_json(disj_result.model),
                },
            },
            "merge": {
                "merged": _proposition_json(s),
                "formula": render(merged_claim),
                "verdict": merged_result.verdict.name,
                "model": _model_json(merged_result.model),
            },
        }
        _print_json(report)
        return EXIT_OK

    lines: list[str] = []
    lines.append("(1) interval propositions")
    for x in decls.propositions:
        lines.append(f"  {x.atom}: {x.kind.value} in [{x.lo}, {x.hi}]  (width {x.width})")
    lines.append("")
    lines.append(f"(2) uncertainty products, bound {bound}")
    lines.extend(f"  {line}" for line in product_lines)
    lines.append("")
    lines.append("(3) classical distributivity")
    lines.append(
        f"  {render(distributivity)}: "
        + ("TAUTOLOGY" if taut.holds else "NOT A TAUTOLOGY")
    )
    lines.append("")
    lines.append("(4) truth table under the physical constraints")
    lines.extend(_table_lines(table))
    lines.append("")
    lines.append("(5) generated axioms")
    lines.extend(f"  {line}" for line in _axiom_lines(gen))
    lines.append("")
    lines.append("(6) joint knowledge under the axioms")
    lines.append(f"  {render(joint)}: {joint_result.verdict.name}")
    lines.append("")
    lines.append("(7) how K distributes")
    lines.append(f"  {render(conj_law)}: {conj_result.verdict.name}")
    lines.append(f"  {render(disj)}: {disj_result.verdict.name}")
    lines.extend(f"  {line}" for line in _model_lines(disj_result.model, "countermodel"))
    lines.append("")
    lines.append(f"(8) coarse position s = merge({q.atom}, {r.atom})")
    lines.append(f"  {s.atom}: {s.kind.value} in [{s.lo}, {s.hi}]  (width {s.width})")
    lines.append(f"  {render(merged_claim)}: {merged_result.verdict.name}")
    lines.extend(f"  {line}" for line in _model_lines(merged_result.model, "model"))
    _print("\n".join(lines))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="klogic",
        description="Epistemic propositional logic for quantum experimental propositions.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", help="decide validity or satisfiability of a formula")
    p.add_argument("formula", help="formula to check")
    p.add_argument("--theory", metavar="PATH", help="global axioms, one formula per line")
    p.add_argument("--mode", choices=("valid", "sat"), default="valid")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--atom-limit", type=int, metavar="N", help=_ATOM_LIMIT_HELP)
    p.set_defaults(handler=_cmd_check)

    p = sub.add_parser("table", help="print a constrained truth table (K-free formulas)")
    p.add_argument("formulas", nargs="+", metavar="FORMULA")
    group = p.add_mutually_exclusive_group()
    group.add_argument("--constraints", metavar="PATH", help="K-free constraints, one per line")
    group.add_argument(
        "--quantum", metavar="PATH", help="declaration file; its generated constraints apply"
    )
    p.add_argument("--format", choices=("text", "csv", "json"), default="text")
    p.add_argument("--atom-limit", type=int, metavar="N", help=_ATOM_LIMIT_HELP)
    p.set_defaults(handler=_cmd_table)

    p = sub.add_parser("quantum", help="generate epistemic axioms from interval declarations")
    p.add_argument("declarations", metavar="DECL", help="declaration file")
    p.add_argument("--list-axioms", action="store_true", help="print each axiom with provenance")
    p.add_argument("--echo", action="store_true", help="print the declarations in canonical form")
    p.add_argument("--check", metavar="FORMULA", help="query under the generated axioms")
    p.add_argument("--mode", choices=("valid", "sat"), default="valid")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.add_argument("--atom-limit", type=int, metavar="N", help=_ATOM_LIMIT_HELP)
    p.set_defaults(handler=_cmd_quantum)

    p = sub.add_parser("demo", help="run the built-in worked example end to end")
    p.add_argument("--format", choices=("text", "json"), default="text")
    p.set_defaults(handler=_cmd_demo)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_ERROR if e.code not in (0, None) else EXIT_OK
    try:
        return args.handler(args)
    except LogicError as e:
        print(f"error: {e}", file=sys.stderr)
        return EXIT_ERROR
    except OSError as e:
        print(f"error: cannot read {e.filename}: {e.strerror}", file=sys.stderr)
        return EXIT_ERROR


def run() -> None:
    sys.exit(main())
