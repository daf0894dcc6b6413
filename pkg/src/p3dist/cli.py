"""Command-line interface: parse input documents, run the analyses, and
emit deterministic JSON reports.

Subcommands: analyze, analyze-vf, find-subfoliation, log-build, log-audit,
table1, verify-paper-examples. Input documents are JSON; `-` reads stdin.
Exit codes: 0 success, 1 validation error, 2 internal inconsistency.
Output is plain JSON with sorted keys (no color, so NO_COLOR is honored
trivially).
"""

from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction

from . import corpus, distribution, foliation, logarithmic
from .errors import InternalInconsistency, ParseError, ValidationError
from .exterior import ExtForm, VField
from .grammar import format_poly, parse_poly
from .groebner import leading_monomials_mod_p
from .linalg import compute_tF
from .logarithmic import LogType
from .poly import Poly, grevlex_key

SCHEMA_VERSION = 1

# primes tried for the modular consistency check, in rotation order
_CHECK_PRIMES = (32003, 31991, 31981, 31973, 31963)


def _read_text(path):
    if path == "-":
        return sys.stdin.read()
    with open(path, "r", encoding="utf-8") as fh:
        return fh.read()


def _poly_from_string(s):
    s = s.strip()
    return Poly.zero() if s == "0" else parse_poly(s)


def parse_input(text):
    """Parse an input document into an ExtForm, VField, or LogType."""
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"invalid JSON: {exc.msg}", exc.lineno, exc.colno)
    if not isinstance(doc, dict) or "kind" not in doc:
        raise ParseError("input document must be an object with a 'kind' field")
    kind = doc["kind"]
    if kind == "oneform":
        coeffs = doc.get("coeffs")
        if not isinstance(coeffs, list) or len(coeffs) != 4:
            raise ParseError("'coeffs' must be a list of 4 polynomial strings")
        return ExtForm.one_form(*(_poly_from_string(s) for s in coeffs))
    if kind == "vfield":
        comps = doc.get("components", doc.get("coeffs"))
        if not isinstance(comps, list) or len(comps) != 4:
            raise ParseError("'components' must be a list of 4 polynomial strings")
        return VField([_poly_from_string(s) for s in comps])
    if kind == "logtype":
        polys = doc.get("polys")
        weights = doc.get("lambdas", doc.get("weights"))
        if not isinstance(polys, list) or not isinstance(weights, list):
            raise ParseError("'logtype' needs 'polys' and 'lambdas' lists")
        try:
            weights = tuple(Fraction(str(w)) for w in weights)
        except (ValueError, ZeroDivisionError):
            raise ParseError("'lambdas' entries must be rational numbers")
        return LogType(
            polys=tuple(_poly_from_string(s) for s in polys), weights=weights
        )
    raise ParseError(f"unknown input kind {kind!r}")


# ---------------------------------------------------------------------------
# report serialization


def _ideal_doc(ideal):
    return sorted(format_poly(g) for g in ideal.gens)


def _chern_doc(c):
    return {"c1": c.c1, "c2": c.c2, "c3": c.c3}


def split_cell(split_type):
    """Render a split type (a, b) the way the summands are usually written."""
    if split_type is None:
        return "×"

    def o(n):
        return "O" if n == 0 else f"O({n})"

    a, b = split_type
    return f"{o(a)}⊕{o(b)}"


def dist_report_doc(report):
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "distribution",
        "degree": report.degree,
        "integrable": report.integrable,
        "regular": report.regular,
        "chern": _chern_doc(report.chern),
        "sing": {
            "degC": report.sing.degC,
            "pa": report.sing.pa,
            "lenU": report.sing.lenU,
            "sat_ideal": _ideal_doc(report.sing.sat_ideal),
        },
        "tF": report.tF,
        "h0_at_tF": report.h0_at_tF,
        "minimal_section": [
            format_poly(p) for p in report.minimal_section.components
        ],
        "stability": {
            "epsilon": report.stability.epsilon,
            "class": report.stability.klass,
            "order": report.stability.order,
            "max_order": report.stability.max_order_flag,
            "family": report.stability.family,
        },
        "split_type": list(report.split_type) if report.split_type else None,
        "notes": list(report.notes),
    }


def foliation_report_doc(report):
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "foliation-by-curves",
        "degree": report.degree,
        "chern": _chern_doc(report.chern),
        "sing": {
            "degC": report.sing.degC,
            "pa": report.sing.pa,
            "lenU": report.sing.lenU,
            "sat_ideal": _ideal_doc(report.sing.sat_ideal),
        },
        "degree1_case": report.degree1_case,
    }


def log_audit_doc(report):
    return {
        "schema_version": SCHEMA_VERSION,
        "kind": "log-audit",
        "degrees": list(report.degrees),
        "form_degree": report.form_degree,
        "integrable": report.integrable,
        "expected": {"degC": report.expected_degC, "lenU": report.expected_lenU},
        "actual": {"degC": report.actual_degC, "lenU": report.actual_lenU},
        "non_generic": report.non_generic,
        "distribution": dist_report_doc(report.dist_report),
    }


def _emit(doc):
    json.dump(doc, sys.stdout, sort_keys=True, indent=2, ensure_ascii=False)
    sys.stdout.write("\n")


# ---------------------------------------------------------------------------
# modular consistency check


def mod_p_check(ideal, prime):
    """Compare modular and rational leading-term ideals, rotating the prime
    on mismatch or coefficient blowup. Returns a small result document."""
    rational = tuple(
        sorted(ideal.groebner().leading_monomials(), key=grevlex_key)
    )
    primes = [prime] + [p for p in _CHECK_PRIMES if p != prime]
    rotations = 0
    last = primes[0]
    for p in primes:
        last = p
        try:
            modular = leading_monomials_mod_p(ideal, p)
        except ZeroDivisionError:
            rotations += 1
            continue
        if modular == rational:
            return {"prime": p, "agrees": True, "rotations": rotations}
        rotations += 1
    return {"prime": last, "agrees": False, "rotations": rotations}


# ---------------------------------------------------------------------------
# subcommands


def _cmd_analyze(args):
    omega = parse_input(_read_text(args.file))
    if not isinstance(omega, ExtForm):
        raise ParseError("analyze expects a 'oneform' input document")
    report = distribution.classify(omega)
    doc = dist_report_doc(report)
    if args.mod_p:
        doc["mod_p_check"] = mod_p_check(report.sing.sat_ideal, args.mod_p)
    _emit(doc)
    return 0


def _cmd_analyze_vf(args):
    v = parse_input(_read_text(args.file))
    if not isinstance(v, VField):
        raise ParseError("analyze-vf expects a 'vfield' input document")
    report = foliation.analyze(v)
    doc = foliation_report_doc(report)
    if args.mod_p:
        doc["mod_p_check"] = mod_p_check(report.sing.sat_ideal, args.mod_p)
    _emit(doc)
    return 0


def _cmd_find_subfoliation(args):
    omega = parse_input(_read_text(args.file))
    if not isinstance(omega, ExtForm):
        raise ParseError("find-subfoliation expects a 'oneform' input document")
    d = distribution.validate_oneform(omega)
    tF, section, sdim = compute_tF(omega, degree=d)
    _emit({
        "schema_version": SCHEMA_VERSION,
        "kind": "subfoliation",
        "degree": d,
        "tF": tF,
        "h0_at_tF": sdim.h0,
        "section": [format_poly(p) for p in section.components],
        "in_distribution": foliation.contraction_check(section, omega),
    })
    return 0


def _cmd_log_build(args):
    lt = parse_input(_read_text(args.file))
    if not isinstance(lt, LogType):
        raise ParseError("log-build expects a 'logtype' input document")
    omega = logarithmic.build_log_form(lt)
    _emit({
        "kind": "oneform",
        "coeffs": [format_poly(p) for p in omega.one_form_coeffs()],
    })
    return 0


def _cmd_log_audit(args):
    lt = parse_input(_read_text(args.file))
    if not isinstance(lt, LogType):
        raise ParseError("log-audit expects a 'logtype' input document")
    _emit(log_audit_doc(logarithmic.audit_log_form(lt)))
    return 0


def render_table1(d_max):
    """Rows of rendered split-type cells for 0 <= d <= d_max."""
    return [
        [split_cell(cell) for cell in row] for row in distribution.table1(d_max)
    ]


def _cmd_table1(args):
    rows = render_table1(args.dmax)
    _emit({
        "schema_version": SCHEMA_VERSION,
        "kind": "table1",
        "dmax": args.dmax,
        "tF_columns": list(range(args.dmax // 2 + 1)),
        "rows": [{"d": d, "cells": cells} for d, cells in enumerate(rows)],
    })
    return 0


def verify_examples():
    """Recompute the bundled reference examples and compare every pinned
    invariant. Returns (all_ok, checks)."""
    checks = []

    def check(name, ok):
        checks.append({"name": name, "ok": bool(ok)})

    r1 = distribution.classify(corpus.load_oneform("example1"))
    check("example1.degree", r1.degree == 3)
    check("example1.chern", r1.chern.as_tuple() == (-1, 1, 3))
    check("example1.curve", (r1.sing.degC, r1.sing.pa, r1.sing.lenU) == (10, 12, 3))
    check("example1.tF", r1.tF == 1)
    check("example1.stability",
          r1.stability.klass == "unstable" and r1.stability.order == 1
          and r1.stability.max_order_flag and r1.stability.family == 1)

    r2 = distribution.classify(corpus.load_oneform("example2"))
    check("example2.degree", r2.degree == 3)
    check("example2.chern", r2.chern.as_tuple() == (-1, 2, 6))
    check("example2.curve", (r2.sing.degC, r2.sing.pa, r2.sing.lenU) == (9, 10, 6))
    check("example2.tF", r2.tF == 1)
    check("example2.stability",
          r2.stability.klass == "unstable" and r2.stability.order == 1
          and r2.stability.max_order_flag and r2.stability.family == 2)

    rn = distribution.classify(corpus.load_oneform("nullcorrelation"))
    check("nullcorrelation.regular", rn.regular)
    check("nullcorrelation.chern", rn.chern.as_tuple() == (2, 2, 0))
    check("nullcorrelation.tF_h0", rn.tF == 1 and rn.h0_at_tF == 5)
    check("nullcorrelation.nonintegrable", not rn.integrable)
    check("nullcorrelation.stable", rn.stability.klass == "stable")

    for name, case in (
        ("four_points", "stable-points"),
        ("line_plus_points", "semistable-line"),
        ("double_line", "split-skew-or-double"),
    ):
        rep = foliation.analyze(corpus.load_vfield(name))
        check(f"vfield.{name}", rep.degree1_case == case)

    audit = logarithmic.audit_log_form(corpus.load_logtype("quadric_pencil"))
    check("logtype.quadric_pencil",
          audit.integrable and not audit.non_generic
          and audit.actual_degC == 4 and audit.actual_lenU == 4)

    return all(c["ok"] for c in checks), checks


def _cmd_verify(args):
    ok, checks = verify_examples()
    _emit({
        "schema_version": SCHEMA_VERSION,
        "kind": "verification",
        "all_ok": ok,
        "checks": checks,
    })
    return 0 if ok else 1


def build_parser():
    parser = argparse.ArgumentParser(
        prog="p3dist",
        description="Exact analysis of codimension-one distributions and "
        "foliations by curves on projective 3-space.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, func, with_file=True, with_modp=False):
        p = sub.add_parser(name)
        if with_file:
            p.add_argument("file", help="input JSON document, or - for stdin")
        if with_modp:
            p.add_argument("--mod-p", type=int, default=0, metavar="P",
                           help="cross-check Groebner leading terms mod P")
        p.set_defaults(func=func)
        return p

    add("analyze", _cmd_analyze, with_modp=True)
    add("analyze-vf", _cmd_analyze_vf, with_modp=True)
    add("find-subfoliation", _cmd_find_subfoliation)
    add("log-build", _cmd_log_build)
    add("log-audit", _cmd_log_audit)
    t1 = add("table1", _cmd_table1, with_file=False)
    t1.add_argument("--dmax", type=int, required=True)
    add("verify-paper-examples", _cmd_verify, with_file=False)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except ValidationError as exc:
        doc = {"error": type(exc).__name__, "message": str(exc)}
        if isinstance(exc, ParseError):
            doc["line"] = exc.line
            doc["col"] = exc.col
        json.dump(doc, sys.stderr, sort_keys=True)
        sys.stderr.write("\n")
        return 1
    except InternalInconsistency as exc:
        json.dump({"error": type(exc).__name__, "message": str(exc)}, sys.stderr,
                  sort_keys=True)
        sys.stderr.write("\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())
