"""Command-line interface.

    abelcover <command> [file] [--point ID] [--table N] [--format text|json]
                        [--regenerate]

Commands: validate, glue-check, invariants, classify-point, index, local-eq,
tables.  All output is deterministic: identical inputs produce byte-identical
reports.  Exit status is 0 on success, 1 on a domain failure (an invalid
surface, a failed gluing, a regeneration mismatch), 2 on an input error.
The environment variable ABELCOVER_SEED is reserved and deliberately unused:
no code path depends on randomness.
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from typing import Any

from . import classifier
from .covers import slc_check
from .gluing import (
    GluingProblem,
    IncompleteInputError,
    UnsupportedGroupError,
    glue_check,
    incidence_sets,
    local_config_at_point,
    relevant_points,
)
from .covers import local_equations
from .invariants import INDETERMINATE, compute_report, global_cartier_index
from .schema import SchemaError, parse_document
from .surfaces import validate_surface
from .tables import TABLES, table_rows

OK, DOMAIN_FAIL, INPUT_ERROR = 0, 1, 2

COMMANDS = (
    "validate",
    "glue-check",
    "invariants",
    "classify-point",
    "index",
    "local-eq",
    "tables",
)


def _fraction_json(value: Fraction):
    if value.denominator == 1:
        return int(value)
    return [value.numerator, value.denominator]


def _load(path: str) -> GluingProblem:
    try:
        with open(path, "rb") as handle:
            text = handle.read()
    except OSError as exc:
        raise SchemaError("$", f"cannot read {path}: {exc.strerror}") from None
    return parse_document(text).problem


def _emit(args, command: str, status: int, results: dict[str, Any], text_lines: list[str]) -> int:
    if args.format == "json":
        payload = {
            "command": command,
            "status": "ok" if status == OK else "fail" if status == DOMAIN_FAIL else "error",
            "results": results,
        }
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)
    return status


def _cmd_validate(args) -> int:
    problem = _load(args.file)
    report = validate_surface(problem.surface)
    slc = slc_check(problem.surface, problem.building_map())
    findings = list(report.findings) + [
        f"slc violation on {v.component} at {v.locus}: multiplicity {v.multiplicity}"
        for v in slc.violations
    ]
    status = OK if not findings else DOMAIN_FAIL
    lines = ["valid"] if not findings else [f"invalid ({len(findings)} findings)"] + [
        f"  - {f}" for f in findings
    ]
    return _emit(args, "validate", status, {"findings": findings}, lines)


def _cmd_glue_check(args) -> int:
    problem = _load(args.file)
    result = glue_check(problem)
    sets = incidence_sets(problem)
    failures = [
        {"curve": f.curve, "point": f.point, "reason": f.reason} for f in result.failures
    ]
    diagnostics = [
        {"curve": c, "point": p, "note": n} for c, p, n in sets.diagnostics
    ] if result.ok else []
    lines = ["gluable"] if result.ok else ["not gluable"]
    for f in result.failures:
        lines.append(f"  - {f.curve or '-'} / {f.point or '-'}: {f.reason}")
    for d in diagnostics:
        lines.append(f"  note: {d['curve']} / {d['point']}: {d['note']}")
    return _emit(
        args,
        "glue-check",
        OK if result.ok else DOMAIN_FAIL,
        {"glueable": result.ok, "failures": failures, "diagnostics": diagnostics},
        lines,
    )


def _cmd_invariants(args) -> int:
    problem = _load(args.file)
    check = glue_check(problem)
    if not check.ok:
        lines = ["not gluable; no invariants computed"]
        failures = [
            {"curve": f.curve, "point": f.point, "reason": f.reason} for f in check.failures
        ]
        return _emit(args, "invariants", DOMAIN_FAIL, {"failures": failures}, lines)
    report = compute_report(problem)
    eigen = []
    for e in report.eigensheaves:
        eigen.append(
            {
                "character": list(e.chi.coeffs),
                "chi_F": e.chi_f,
                "chi_im_alpha": e.chi_im_alpha,
                "h": [v if v is not None else INDETERMINATE for v in e.h],
            }
        )
    results = {
        "K2": _fraction_json(report.k_square),
        "chi_OX": report.chi_ox,
        "eigensheaves": eigen,
        "relevant_points": [{"point": p, "weight": w} for p, w in report.relevant],
        "cartier": [{"point": p, "index": v} for p, v in report.cartier],
    }
    lines = [
        f"K^2  = {report.k_square}",
        f"chi(O_X) = {report.chi_ox}",
        "relevant points: "
        + (", ".join(f"{p} (weight {w})" for p, w in report.relevant) or "none"),
        "per-character Euler characteristics:",
    ]
    for e in report.eigensheaves:
        h = ",".join(str(v) if v is not None else "?" for v in e.h)
        lines.append(f"  chi{e.chi}: chi(F) = {e.chi_f}  h = ({h})")
    lines.append(
        "Cartier indices: "
        + ", ".join(f"{p}: {v}" for p, v in report.cartier)
    )
    return _emit(args, "invariants", OK, results, lines)


def _cmd_classify_point(args) -> int:
    problem = _load(args.file)
    if not args.point:
        raise SchemaError("--point", "classify-point needs --point ID")
    try:
        point = problem.surface.point(args.point)
    except KeyError as exc:
        raise SchemaError("--point", str(exc)) from None
    if point.c_singular:
        weight = problem.group.order // _cycle_inertia(problem, point)
        results = {
            "point": point.id,
            "kind": "cycle",
            "cycle_length": len(point.cycle),
            "fibre_size": weight,
            "cartier": global_cartier_index(problem, point.id),
        }
        lines = [
            f"{point.id}: cone over a cycle of {len(point.cycle)} rational curves",
            f"  fibre size [G:H] = {weight}, Cartier index {results['cartier']}",
        ]
        return _emit(args, "classify-point", OK, results, lines)
    cfg = local_config_at_point(problem, args.point)
    cls = classifier.classify(cfg)
    results = {
        "point": point.id,
        "row": cls.row.label,
        "table": cls.row.table,
        "order_H": cls.order_h,
        "iota": cls.iota,
        "chi_weight": cls.chi_weight,
        "singularity": cls.descriptor.singularity,
        "normalization": [list(x) for x in cls.normalization or ()],
        "canonical_code": list(cls.code.canonical),
    }
    lines = [
        f"{point.id}: table {cls.row.table} row {cls.row.label}"
        + (f" (descriptor {cls.descriptor.label})" if cls.descriptor is not cls.row else ""),
        f"  |H| = {cls.order_h}, iota = {cls.iota}, singularity = {cls.descriptor.singularity}",
    ]
    if cls.chi_weight is not None:
        lines.append(f"  chi contribution = {cls.chi_weight}")
    if cls.normalization:
        lines.append(
            "  normalization: "
            + " + ".join(f"{n}({label})" for n, label in cls.normalization)
        )
    return _emit(args, "classify-point", OK, results, lines)


def _cycle_inertia(problem: GluingProblem, point) -> int:
    from .gluing import point_inertia

    return point_inertia(problem, point.id).order


def _cmd_index(args) -> int:
    problem = _load(args.file)
    pids = [args.point] if args.point else [p.id for p in problem.surface.points]
    entries = []
    lines = []
    for pid in pids:
        try:
            problem.surface.point(pid)
        except KeyError as exc:
            raise SchemaError("--point", str(exc)) from None
        value = global_cartier_index(problem, pid)
        entries.append({"point": pid, "index": value})
        lines.append(f"{pid}: {value}")
    return _emit(args, "index", OK, {"cartier": entries}, lines)


def _cmd_local_eq(args) -> int:
    problem = _load(args.file)
    if not args.point:
        raise SchemaError("--point", "local-eq needs --point ID")
    try:
        point = problem.surface.point(args.point)
    except KeyError as exc:
        raise SchemaError("--point", str(exc)) from None
    results = []
    lines = []
    for comp, bd in problem.building:
        data = [
            (datum.curve, datum.pair)
            for datum in bd.branches
            if datum.curve in point.on
        ]
        if not data:
            continue
        system = local_equations(problem.group, data)
        rendered = system.render()
        results.append({"component": comp, "equations": rendered.splitlines()})
        lines.append(f"component {comp}:")
        lines.extend(f"  {line}" for line in rendered.splitlines())
    return _emit(args, "local-eq", OK, {"systems": results}, lines)


def _format_row(row) -> list[str]:
    cells = [
        row.label,
        str(row.order_h),
        " ".join(row.relations) or "none",
        "" if row.iota is None else str(row.iota),
        row.chi_col or "",
        ("same as " + row.same_as) if row.same_as else (row.singularity or ""),
        " + ".join(f"{n}({label})" for n, label in row.normalization or ()),
        row.curve_map or "",
        row.sr_type or "",
    ]
    return cells


def _cmd_tables(args) -> int:
    ids = [args.table] if args.table else sorted(TABLES)
    results = {}
    lines = []
    status = OK
    for tid in ids:
        if tid not in TABLES:
            raise SchemaError("--table", f"no table {tid}; valid ids are 1..9")
        rows = table_rows(tid)
        if args.regenerate:
            try:
                classifier.enumerate_table(tid)
                note = f"regenerated: {len(rows)} rows match"
            except classifier.RegenerationError as exc:
                note = f"REGENERATION FAILED: {exc}"
                status = DOMAIN_FAIL
        else:
            note = f"{len(rows)} rows (embedded)"
        header = ["row", "|H|", "relations", "iota", "chi", "singularity", "X~", "C-map", "Xsr"]
        table_cells = [header] + [_format_row(row) for row in rows]
        widths = [max(len(r[i]) for r in table_cells) for i in range(len(header))]
        lines.append(f"table {tid}: {note}")
        for cells in table_cells:
            lines.append("  " + "  ".join(c.ljust(w) for c, w in zip(cells, widths)).rstrip())
        results[str(tid)] = {
            "note": note,
            "rows": [
                {
                    "label": row.label,
                    "order_H": row.order_h,
                    "relations": list(row.relations),
                    "iota": row.iota,
                    "chi": row.chi_col,
                    "singularity": row.singularity,
                    "normalization": [list(x) for x in row.normalization or ()],
                    "curve_map": row.curve_map,
                    "sr_type": row.sr_type,
                    "same_as": row.same_as,
                }
                for row in rows
            ],
        }
    return _emit(args, "tables", status, results, lines)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="abelcover",
        description="Combinatorics of abelian covers of non-normal surfaces.",
    )
    parser.add_argument("command", choices=COMMANDS)
    parser.add_argument("file", nargs="?", help="input document (JSON)")
    parser.add_argument("--point", help="point id for point-local commands")
    parser.add_argument("--table", type=int, help="table id (1..9) for `tables`")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    parser.add_argument(
        "--regenerate",
        action="store_true",
        help="re-derive tables exhaustively and compare with the embedded rows",
    )
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    handlers = {
        "validate": _cmd_validate,
        "glue-check": _cmd_glue_check,
        "invariants": _cmd_invariants,
        "classify-point": _cmd_classify_point,
        "index": _cmd_index,
        "local-eq": _cmd_local_eq,
        "tables": _cmd_tables,
    }
    if args.command != "tables" and not args.file:
        print("error: $: this command needs an input file", file=sys.stderr)
        return INPUT_ERROR
    try:
        return handlers[args.command](args)
    except SchemaError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except (UnsupportedGroupError, IncompleteInputError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    except classifier.ClassificationGapError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return DOMAIN_FAIL


if __name__ == "__main__":
    sys.exit(main())
