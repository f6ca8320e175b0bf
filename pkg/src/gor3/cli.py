"""Command-line front end.

Every subcommand builds one structured report (a plain dict); --json prints
it verbatim, otherwise a human rendering of the same structure is shown.
Exit codes: 0 on success, 1 when an assertion-style check fails (reproduce,
verification mismatches), 2 on parse or usage errors.
"""

from __future__ import annotations

import argparse
import json
import sys

from .apolarity import (
    InverseForm,
    annihilator,
    directrix_form,
    macaulay_inverse,
    newton_dual,
    socle_newton_dual,
)
from .betti import betti_table, has_linear_resolution
from .cases import case_ids, random_quadrics, run_case
from .criteria import five_quadrics_certificate, is_equigen_linres, linres_matrix, spans_target
from .fields import FieldError, field_from_spec
from .ideals import (
    DatumViolationError,
    GradedIdeal,
    NotArtinianError,
    NotEquigeneratedError,
    check_reduction_two,
    pure_power_index,
    variable_lines,
    variable_power_ideal,
)
from .monomials import default_var_names, monomial_count
from .parsing import PolyParseError, parse_poly, parse_poly_list
from .pfaffians import SkewPolyMatrix, generic_power_model, maximal_pfaffians, pfaffian


class CliError(Exception):
    def __init__(self, message, code=2):
        super().__init__(message)
        self.code = code


def _read_source(text):
    if text.startswith("@"):
        try:
            with open(text[1:], "r", encoding="utf-8") as fh:
                return fh.read()
        except OSError as exc:
            raise CliError(f"cannot read {text[1:]!r}: {exc}")
    return text


def _split_items(text):
    return [part.strip() for part in text.replace("\n", ",").split(",")
            if part.strip()]


def _vars(args):
    if args.vars:
        return [v.strip() for v in args.vars.split(",") if v.strip()]
    return default_var_names(3)


def _field(args):
    try:
        return field_from_spec(args.field)
    except FieldError as exc:
        raise CliError(str(exc))


def _ideal_from_arg(text, names, field) -> GradedIdeal:
    items = _split_items(_read_source(text))
    if not items:
        raise CliError("empty generator list")
    gens = [parse_poly(s, names, field) for s in items]
    return GradedIdeal(len(names), gens, field)


def _ideal_report(I: GradedIdeal, include_socle=True):
    report = {
        "generators": [str(g) for g in I.generators],
        "minimal_profile": {str(k): v
                            for k, v in sorted(I.minimal_generator_profile().items())},
    }
    if I.truncated_at is not None:
        report["through_degree"] = I.truncated_at
        report["complete"] = False
        return report
    report["complete"] = True
    if include_socle:
        try:
            socle = I.socle_report()
        except NotArtinianError as exc:
            report["socle"] = {"error": str(exc)}
            return report
        report["hilbert_function"] = I.hilbert_series_table(socle.artinian_bound)
        report["socle"] = socle.as_dict()
        try:
            report["datum"] = I.virtual_datum().as_dict()
        except (NotEquigeneratedError, DatumViolationError) as exc:
            report["datum"] = {"error": str(exc)}
    return report


def _render(value, indent=0):
    pad = "  " * indent
    lines = []
    if isinstance(value, dict):
        for k, v in value.items():
            if isinstance(v, (dict, list)) and v:
                lines.append(f"{pad}{k}:")
                lines.extend(_render(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {v}")
    elif isinstance(value, list):
        for v in value:
            if isinstance(v, (dict, list)):
                lines.extend(_render(v, indent + 1))
            else:
                lines.append(f"{pad}- {v}")
    else:
        lines.append(f"{pad}{value}")
    return lines


def _emit(args, report) -> None:
    if args.json:
        print(json.dumps(report, indent=2))
    else:
        print("\n".join(_render(report)))


def _common(parser, seed=False):
    parser.add_argument("--field", default="q",
                        help="coefficient field: q or fp:<prime> (default q)")
    parser.add_argument("--vars", default=None,
                        help="comma-separated variable names (default x,y,z)")
    parser.add_argument("--json", action="store_true",
                        help="emit the report as JSON")
    parser.add_argument("--t-max", type=int, default=None, dest="t_max")
    if seed:
        parser.add_argument("--seed", type=int, default=0)


def cmd_colon(args):
    field = _field(args)
    names = _vars(args)
    base = _ideal_from_arg(args.ci, names, field)
    f = parse_poly(_read_source(args.f), names, field)
    result = base.colon(f, args.t_max)
    report = {"field": field.name, "base": [str(g) for g in base.generators],
              "form": str(f)}
    report.update(_ideal_report(result))
    _emit(args, report)
    return 0


def cmd_socle(args):
    field = _field(args)
    I = _ideal_from_arg(args.ideal, _vars(args), field)
    socle = I.socle_report()
    report = {
        "field": field.name,
        "generators": [str(g) for g in I.generators],
        "hilbert_function": I.hilbert_series_table(socle.artinian_bound),
        "socle": socle.as_dict(),
    }
    _emit(args, report)
    return 0


def cmd_betti(args):
    field = _field(args)
    I = _ideal_from_arg(args.ideal, _vars(args), field)
    table = betti_table(I, args.t_max)
    report = {
        "field": field.name,
        "betti": table.as_dict(),
    }
    eq = I.is_equigenerated()
    if eq is not None:
        report["equigenerated_degree"] = eq[0]
        report["linear_resolution"] = has_linear_resolution(I)
    if args.json:
        _emit(args, report)
    else:
        print("\n".join(_render(report)))
        print(table.staircase())
    return 0


def cmd_datum(args):
    field = _field(args)
    I = _ideal_from_arg(args.ideal, _vars(args), field)
    try:
        datum = I.virtual_datum()
    except (NotEquigeneratedError, DatumViolationError) as exc:
        _emit(args, {"field": field.name, "error": str(exc)})
        return 1
    _emit(args, {"field": field.name, "datum": datum.as_dict()})
    return 0


def _parse_matrix(text, names, field) -> SkewPolyMatrix:
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    rows = [[parse_poly(cell, names, field)
             for cell in ln.split(",")] for ln in lines]
    lengths = [len(r) for r in rows]
    n = len(names)
    if lengths == list(range(len(rows), 0, -1)):
        return SkewPolyMatrix.from_upper(n, rows, field)
    if len(set(lengths)) == 1 and lengths[0] == len(rows):
        return SkewPolyMatrix(rows)
    raise CliError("matrix text must be square (full rows) or a strictly "
                   "upper triangle (rows of decreasing length)")


def cmd_pfaffian(args):
    field = _field(args)
    names = _vars(args)
    A = _parse_matrix(_read_source(args.matrix), names, field)
    report = {"field": field.name, "size": A.r}
    if A.r % 2 == 0:
        report["pfaffian"] = str(pfaffian(A))
    else:
        pfs = maximal_pfaffians(A)
        report["maximal_pfaffians"] = [str(p) for p in pfs]
        gens = [p for p in pfs if not p.is_zero()]
        if gens:
            ideal = GradedIdeal(A.n, gens, field)
            report.update(_ideal_report(ideal))
    _emit(args, report)
    return 0


def cmd_model(args):
    field = _field(args)
    I = generic_power_model(args.r, args.dp, args.n, args.seed, field)
    report = {"field": field.name, "seed": args.seed,
              "r": args.r, "entry_degree": args.dp, "variables": args.n}
    report.update(_ideal_report(I))
    _emit(args, report)
    return 0


def cmd_inverse(args):
    field = _field(args)
    I = _ideal_from_arg(args.ideal, _vars(args), field)
    F = macaulay_inverse(I)
    _emit(args, {
        "field": field.name,
        "kind": "inverse-system element (divided powers)",
        "dual_degree": F.degree(),
        "generator": str(F),
    })
    return 0


def cmd_ann(args):
    field = _field(args)
    names = [v.upper() for v in _vars(args)]
    proxy = parse_poly(_read_source(args.dual), names, field)
    F = InverseForm(proxy.n, dict(proxy.terms), field)
    ideal = annihilator(F, args.t_max)
    report = {"field": field.name, "dual_form": str(F)}
    report.update(_ideal_report(ideal))
    _emit(args, report)
    return 0


def cmd_newton_dual(args):
    field = _field(args)
    names = _vars(args)
    f = parse_poly(_read_source(args.f), names, field)
    if args.socle_m is None:
        _emit(args, {"field": field.name, "dual": str(newton_dual(f))})
        return 0
    F = socle_newton_dual(f, args.socle_m)
    _emit(args, {
        "field": field.name,
        "kind": "inverse-system element (divided powers)",
        "directrix_exponent": args.socle_m,
        "dual": str(F),
    })
    return 0


def cmd_directrix(args):
    field = _field(args)
    I = _ideal_from_arg(args.ideal, _vars(args), field)
    f = directrix_form(I, args.m)
    colon = variable_power_ideal(I.n, args.m, field).colon(f)
    report = {
        "field": field.name,
        "m": args.m,
        "directrix": str(f),
        "degree": f.homogeneous_degree(),
        "colon_identity_verified": colon.equals(I),
    }
    _emit(args, report)
    return 0 if report["colon_identity_verified"] else 1


def cmd_linres_test(args):
    field = _field(args)
    f = parse_poly(_read_source(args.f), _vars(args), field)
    rep = is_equigen_linres(f, args.m)
    report = {"field": field.name, "form": str(f), "m": args.m}
    report.update(rep.as_dict())
    if field.characteristic != 0:
        report["warning"] = ("sum-of-powers guarantees hold in characteristic "
                             "0 only; this field has characteristic "
                             f"{field.characteristic}")
    matrix = linres_matrix(f, args.m, rep.s // 2) if rep.s % 2 == 0 else None
    if matrix is not None:
        report["matrix_shape"] = [matrix.rows, matrix.cols]
    _emit(args, report)
    return 0


def cmd_spans(args):
    field = _field(args)
    forms = parse_poly_list(_read_source(args.forms), _vars(args), field)
    rep = spans_target(forms, args.e)
    report = {"field": field.name, "e": args.e}
    report.update(rep.as_dict())
    _emit(args, report)
    return 0


def cmd_certify_quadrics(args):
    field = _field(args)
    if args.forms:
        quadrics = parse_poly_list(_read_source(args.forms), _vars(args), field)
    else:
        quadrics = random_quadrics(args.seed, field)
    rep = five_quadrics_certificate(quadrics)
    report = {
        "field": field.name,
        "seed": args.seed if not args.forms else None,
        "quadrics": [str(q) for q in quadrics],
    }
    report.update(rep.as_dict())
    if rep.verdict == "GORENSTEIN":
        report["socle_confirms"] = \
            GradedIdeal(3, quadrics, field).socle_report().is_gorenstein
    _emit(args, report)
    return 0


def cmd_gap(args):
    field = _field(args)
    names = _vars(args)
    I = _ideal_from_arg(args.ideal, names, field)
    if args.lines:
        lines = parse_poly_list(_read_source(args.lines), names, field)
    else:
        lines = variable_lines(I.n, field)
    m = pure_power_index(I, lines)
    socle = I.socle_report()
    report = {
        "field": field.name,
        "lines": [str(l) for l in lines],
        "socle_degree": socle.socle_degree,
        "pure_power_index": m,
        "gap": socle.socle_degree + 1 - m,
    }
    _emit(args, report)
    return 0


def cmd_power_check(args):
    field = _field(args)
    I = _ideal_from_arg(args.ideal, _vars(args), field)
    eq = I.is_equigenerated()
    if eq is None:
        raise CliError("power check needs an equigenerated ideal")
    d, _ = eq
    k = args.k
    t_max = args.t_max if args.t_max is not None else d * k + 2
    rows = []
    all_match = True
    for t in range(d * k, t_max + 1):
        dim = I.power_piece(k, t).dim
        full = monomial_count(I.n, t)
        rows.append({"t": t, "dim": dim, "max_ideal_power_dim": full,
                     "match": dim == full})
        all_match = all_match and dim == full
    rep = check_reduction_two(I, args.seed)
    report = {
        "field": field.name,
        "seed": args.seed,
        "k": k,
        "pieces": rows,
        "power_equals_max_ideal_power": all_match,
        "reduction": rep.as_dict(),
    }
    _emit(args, report)
    return 0


def cmd_reproduce(args):
    field = _field(args)
    ids = case_ids() if args.all else [args.case]
    if not args.all and args.case is None:
        raise CliError("give --case <id> or --all")
    if not args.json:
        print(f"field: {field.name}  seed: {args.seed}")
    failures = 0
    results = []
    for cid in ids:
        try:
            res = run_case(cid, field, args.seed)
        except KeyError as exc:
            raise CliError(str(exc))
        results.append(res)
        status = "SKIP" if res.skipped else ("PASS" if res.passed else "FAIL")
        if not res.passed:
            failures += 1
        if args.json:
            continue
        note = f" ({res.note})" if res.note else ""
        print(f"{status} {res.case_id}{note}")
        if status == "FAIL":
            for label, ok, detail in res.checks:
                if not ok:
                    print(f"     failed: {label} -- {detail}")
    if args.json:
        print(json.dumps({"field": field.name, "seed": args.seed,
                          "results": [r.as_dict() for r in results]}, indent=2))
    else:
        print(f"{len(results)} case(s), {failures} failure(s)")
    return 1 if failures else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="gor3",
        description="Exact computations with codimension-3 Gorenstein ideals: "
                    "colon constructions, Pfaffian models, inverse systems, "
                    "Betti tables and rank certificates.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("colon", help="colon ideal (I : f)")
    p.add_argument("--ci", required=True,
                   help="base ideal generators, comma separated (or @file)")
    p.add_argument("--f", required=True, help="the form to colon by")
    _common(p)
    p.set_defaults(func=cmd_colon)

    p = sub.add_parser("socle", help="socle decomposition and Hilbert data")
    p.add_argument("--ideal", required=True)
    _common(p)
    p.set_defaults(func=cmd_socle)

    p = sub.add_parser("betti", help="graded Betti table")
    p.add_argument("--ideal", required=True)
    _common(p)
    p.set_defaults(func=cmd_betti)

    p = sub.add_parser("datum", help="(d, r, d') of an equigenerated ideal")
    p.add_argument("--ideal", required=True)
    _common(p)
    p.set_defaults(func=cmd_datum)

    p = sub.add_parser("pfaffian",
                       help="Pfaffian / maximal Pfaffians of an alternating matrix")
    p.add_argument("--matrix", required=True,
                   help="rows of comma-separated polynomials (or @file); "
                        "a strictly upper triangle is accepted")
    _common(p)
    p.set_defaults(func=cmd_pfaffian)

    p = sub.add_parser("model", help="specialized pure-power alternating model")
    p.add_argument("--r", type=int, required=True, help="odd matrix size")
    p.add_argument("--dp", type=int, required=True, help="entry degree")
    p.add_argument("--n", type=int, default=3, help="target variable count")
    _common(p, seed=True)
    p.set_defaults(func=cmd_model)

    p = sub.add_parser("inverse", help="Macaulay inverse generator")
    p.add_argument("--ideal", required=True)
    _common(p)
    p.set_defaults(func=cmd_inverse)

    p = sub.add_parser("ann", help="annihilator ideal of a dual form")
    p.add_argument("--dual", required=True,
                   help="dual form in capitalized variables, e.g. X^2+Y^2+Z^2")
    _common(p)
    p.set_defaults(func=cmd_ann)

    p = sub.add_parser("newton-dual", help="Newton dual of a form")
    p.add_argument("--f", required=True)
    p.add_argument("--socle-m", type=int, default=None, dest="socle_m",
                   help="use the fixed directrix (m-1, ..., m-1)")
    _common(p)
    p.set_defaults(func=cmd_newton_dual)

    p = sub.add_parser("directrix",
                       help="directrix form of a Gorenstein ideal at exponent m")
    p.add_argument("--ideal", required=True)
    p.add_argument("--m", type=int, required=True)
    _common(p)
    p.set_defaults(func=cmd_directrix)

    p = sub.add_parser("linres-test",
                       help="equigenerated-with-linear-resolution rank test")
    p.add_argument("--f", required=True)
    p.add_argument("--m", type=int, required=True)
    _common(p)
    p.set_defaults(func=cmd_linres_test)

    p = sub.add_parser("spans", help="do degree-e multiples fill R_{d+e}?")
    p.add_argument("--forms", required=True)
    p.add_argument("--e", type=int, required=True)
    _common(p)
    p.set_defaults(func=cmd_spans)

    p = sub.add_parser("certify-quadrics",
                       help="open-set Gorenstein certificate for five quadrics")
    p.add_argument("--forms", default=None,
                   help="five quadrics, comma separated; omit for seeded random")
    _common(p, seed=True)
    p.set_defaults(func=cmd_certify_quadrics)

    p = sub.add_parser("gap", help="pure power index and gap")
    p.add_argument("--ideal", required=True)
    p.add_argument("--lines", default=None,
                   help="independent linear forms (default: the variables)")
    _common(p)
    p.set_defaults(func=cmd_gap)

    p = sub.add_parser("power-check",
                       help="compare (I^k)_t with the matching power of the "
                            "maximal ideal; seeded reduction-number check")
    p.add_argument("--ideal", required=True)
    p.add_argument("--k", type=int, default=2)
    _common(p, seed=True)
    p.set_defaults(func=cmd_power_check)

    p = sub.add_parser("reproduce", help="re-run registered worked examples")
    p.add_argument("--case", default=None, help="case id")
    p.add_argument("--all", action="store_true")
    _common(p, seed=True)
    p.set_defaults(func=cmd_reproduce)

    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if exc.code is not None else 2
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return exc.code
    except PolyParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return 2
    except (NotArtinianError, NotEquigeneratedError, DatumViolationError,
            FieldError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
