"""Command-line front end.

Subcommands: catalog | table | verify | dispersion | susy | osp12.
Exit codes: 0 all checks pass, 1 verification failure, 2 usage or parse error.
Reports render as fixed-width text or JSON (schema "lleq.report.v1").
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import clifford, equations, osp12, susy
from .equations import LLESpec, LleError
from .parsing import ParseError, parse_operator
from .reporting import VerificationReport
from .words import Word, WordError

SCHEMA = "lleq.report.v1"

EXIT_OK = 0
EXIT_CHECK_FAILED = 1
EXIT_USAGE = 2


def _emit(payload: dict, fmt: str, text_lines) -> None:
    if fmt == "json":
        print(json.dumps({"schema": SCHEMA, **payload}, indent=2, sort_keys=True))
    else:
        for line in text_lines:
            print(line)


def _report_payload(reports) -> dict:
    return {"reports": [r.to_dict() for r in reports],
            "ok": all(r.ok for r in reports)}


def load_spec(source: str) -> LLESpec:
    """Resolve a catalog key or a JSON config file path into a specification.

    Config schema: {"name": ..., "time": "QII", "space": ["XYI", ...],
    "potential": [{"word": "XA", "fn": "f"}]}.
    """
    cat = equations.catalog()
    if source in cat:
        return cat[source]
    path = Path(source)
    if not path.is_file():
        raise LleError(f"unknown catalog key or missing file: {source}")
    data = json.loads(path.read_text())
    potential = tuple(
        (Word(p["word"]), parse_operator(p["fn"]))
        for p in data.get("potential", ()))
    return LLESpec(
        Word(data["time"]),
        tuple(Word(w) for w in data["space"]),
        potential_terms=potential,
        name=data.get("name", path.stem),
    )


def cmd_catalog(args) -> int:
    cat = equations.catalog()
    cliffords = clifford.named_sets()
    rows = []
    for key in equations.TABLE_ORDER:
        spec = cat[key]
        rows.append({
            "key": key,
            "size": f"{spec.n}x{spec.n}",
            "spacetime": f"(1+{spec.d})",
            "time": str(spec.time_word),
            "space": [str(w) for w in spec.space_words],
        })
    lines = ["equations:"]
    for r in rows:
        lines.append(f"  {r['key']:<6} {r['size']:<8} {r['spacetime']:<7} "
                     f"{r['time']} = " + " + ".join(f"{w}*d{i}" for i, w in
                                                    enumerate(r["space"], start=1)))
    lines.append("clifford sets:")
    cl_rows = []
    for name, s in cliffords.items():
        cl_rows.append({"name": name, "signature": str(s.signature),
                        "generators": [str(w) for w in s.generators]})
        lines.append(f"  {name:<13} {s.signature}  " + " ".join(map(str, s.generators)))
    _emit({"equations": rows, "clifford_sets": cl_rows}, args.format, lines)
    return EXIT_OK


def cmd_table(args, golden=None) -> int:
    golden = golden if golden is not None else equations.GOLDEN_TABLE
    rows = tuple(equations.generate_table())
    header = f"{'key':<6} {'size':<9} {'type':<5} {'spacetime':<10} components"
    lines = [header, "-" * len(header)]
    for key, size, kind, st, comp in rows:
        lines.append(f"{key:<6} {size:<9} {kind:<5} {st:<10} {comp}")
    mismatches = [
        {"computed": list(r), "golden": list(g)}
        for r, g in zip(rows, golden) if r != g
    ]
    if len(rows) != len(golden):
        mismatches.append({"computed": f"{len(rows)} rows",
                           "golden": f"{len(golden)} rows"})
    if mismatches:
        lines.append("GOLDEN MISMATCH:")
        for m in mismatches:
            lines.append(f"  computed {m['computed']!r} != golden {m['golden']!r}")
    _emit({"rows": [list(r) for r in rows], "mismatches": mismatches,
           "ok": not mismatches}, args.format, lines)
    return EXIT_OK if not mismatches else EXIT_CHECK_FAILED


def _clifford_report(name: str) -> VerificationReport:
    return clifford.verify_clifford(clifford.named_sets()[name])


def cmd_verify(args) -> int:
    if args.name in clifford.named_sets():
        report = _clifford_report(args.name)
        _emit(_report_payload([report]), args.format, report.lines())
        return EXIT_OK if report.ok else EXIT_CHECK_FAILED
    try:
        spec = load_spec(args.name)
    except (KeyError, WordError, LleError, ParseError, json.JSONDecodeError,
            OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    reports = []
    if spec.is_free():
        algebra = equations.algebra_report(spec)
        reports.append(algebra)
        reports.append(equations.verify_square_root(spec))
        reports.append(equations.dispersion_check(spec))
        if algebra.ok:
            sc = equations.classify(spec)
            reports.append(VerificationReport(
                f"classification of {spec.label()}",
                (_classification_check(sc),),
            ))
    else:
        reports.append(susy.verify_susy(spec.potential_terms[0][1])
                       if _is_standard_potential(spec)
                       else _nonstandard_potential_report(spec))
    text = []
    for r in reports:
        text.extend(r.lines())
    _emit(_report_payload(reports), args.format, text)
    return EXIT_OK if all(r.ok for r in reports) else EXIT_CHECK_FAILED


def _classification_check(sc):
    from .reporting import Check
    detail = (f"{sc.size_label} {sc.kind} {sc.spacetime_label} {sc.components_label}; "
              f"structure dim {sc.structure_dimension}")
    if sc.division.witnesses:
        detail += "; witnesses " + " ".join(sc.division.witness_names())
    return Check("spinor class", True, detail)


def _is_standard_potential(spec: LLESpec) -> bool:
    return (str(spec.time_word) == "QI"
            and tuple(map(str, spec.space_words)) == ("XY",)
            and len(spec.potential_terms) == 1
            and str(spec.potential_terms[0][0]) == "XA")


def _nonstandard_potential_report(spec: LLESpec) -> VerificationReport:
    from .reporting import Check
    d_op = equations.build_operator(spec)
    square = d_op @ d_op
    return VerificationReport(
        f"potential operator {spec.label()}",
        (Check("operator built", True, f"size {spec.n}, squared entries: "
                                       f"{square.render_entries(limit=8)}"),),
    )


def cmd_dispersion(args) -> int:
    try:
        spec = load_spec(args.name)
    except (KeyError, WordError, LleError, ParseError, json.JSONDecodeError,
            OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    report = equations.dispersion_check(spec)
    _emit(_report_payload([report]), args.format, report.lines())
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def cmd_susy(args) -> int:
    try:
        f = parse_operator(args.prepotential)
        v_plus, v_minus = susy.partner_potentials(f)
        comps = susy.derive_components(f)
        report = susy.verify_susy(f)
    except (ParseError, LleError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    lines = [
        f"prepotential f = {f.render()}",
        f"V+ = {v_plus.render()}",
        f"V- = {v_minus.render()}",
        "component equations:",
    ]
    lines.extend("  " + line for line in comps.lines())
    lines.extend(report.lines())
    payload = {
        "prepotential": f.render(),
        "v_plus": v_plus.render(),
        "v_minus": v_minus.render(),
        "components": list(comps.lines()),
        **_report_payload([report]),
    }
    _emit(payload, args.format, lines)
    return EXIT_OK if report.ok else EXIT_CHECK_FAILED


def cmd_osp12(args) -> int:
    gens = osp12.build_generators()
    grading = osp12.grading_report(gens)
    table, closure = osp12.verify_closure(gens)
    gen_lines = ["generators:"]
    for name in osp12.GENERATOR_ORDER:
        g = gens[name]
        gen_lines.append(f"  {name:<6} parity {g.parity:<5} weight {g.scaling_dim}")
    lines = gen_lines + list(grading.lines()) + list(closure.lines())
    payload = {
        "generators": [
            {"name": n, "parity": gens[n].parity,
             "scaling_dim": str(gens[n].scaling_dim)}
            for n in osp12.GENERATOR_ORDER
        ],
        "brackets": [
            {"bracket": e.bracket_text(), "kind": e.kind,
             "computed": e.expansion_text(),
             "expected": (osp12.render_combination(e.expected)
                          if e.expected is not None else "recorded"),
             "matches": e.matches}
            for e in table
        ],
        **_report_payload([grading, closure]),
    }
    _emit(payload, args.format, lines)
    return EXIT_OK if (grading.ok and closure.ok) else EXIT_CHECK_FAILED


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="lleq",
        description="Exact workbench for Levy-Leblond square-root operators")
    sub = parser.add_subparsers(dest="command", required=True)

    def add_format(p):
        p.add_argument("--format", choices=("table", "json"), default="table")

    p = sub.add_parser("catalog", help="list equations and Clifford sets")
    add_format(p)
    p.set_defaults(func=cmd_catalog)

    p = sub.add_parser("table", help="classification table, checked against golden rows")
    add_format(p)
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run all checks for a catalog key, Clifford set "
                                      "name, or JSON config file")
    p.add_argument("name")
    add_format(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("dispersion", help="sampled determinant dispersion check")
    p.add_argument("name")
    add_format(p)
    p.set_defaults(func=cmd_dispersion)

    p = sub.add_parser("susy", help="partner potentials and component equations")
    p.add_argument("--prepotential", default="f",
                   help="prepotential expression, e.g. \"g*x^-1\" (default: formal f)")
    add_format(p)
    p.set_defaults(func=cmd_susy)

    p = sub.add_parser("osp12", help="superconformal generators, grading and closure")
    p.add_argument("--check", action="store_true",
                   help="accepted for compatibility; checks always run")
    add_format(p)
    p.set_defaults(func=cmd_osp12)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
