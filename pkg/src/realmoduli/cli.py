"""Command-line front end.

Subcommands: classify, strata, bg, moduli, verify, atlas.  Documents go to stdout
as JSON, CSV or markdown.  Exit status: 0 success, 2 invalid input (a JSON error
object is printed), 1 oracle mismatch in ``verify``.
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import logging
import sys

from .atlas import atlas
from .dga import verify_bg
from .field import FieldSpec
from .gauge import (bg_cohomology, fixed_determinant_invariants, moduli_cohomology,
                    quaternionic_stack_report)
from .stratification import normal_bundle_orientability, strata_table
from .topology import (CurveKind, CurveTopology, QuaternionicBundleType, RealBundleType,
                       ValidationError, classify_gauge_case, enumerate_real_bundles, parse_w1,
                       quaternionic_violations, validate_curve)

log = logging.getLogger("realmoduli")

SUBCOMMANDS = ("classify", "strata", "bg", "moduli", "verify", "atlas")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="realmoduli", description=__doc__.splitlines()[0])
    p.add_argument("command", choices=SUBCOMMANDS)
    p.add_argument("--genus", required=True,
                   help="genus; for atlas a range such as 2, 2-4 or 2,3")
    p.add_argument("--curve-type", choices=["0", "I", "II"])
    p.add_argument("--circles", type=int)
    p.add_argument("--w1", help="Stiefel-Whitney bits, one 0/1 per fixed circle")
    p.add_argument("--rank", type=int, default=2)
    p.add_argument("--degree", type=int, required=True)
    p.add_argument("--char", type=int, default=0, dest="characteristic")
    p.add_argument("--truncate", type=int, default=8)
    p.add_argument("--max-codim", type=int, default=8)
    p.add_argument("--format", choices=["json", "csv", "markdown"], default="json")
    p.add_argument("--quaternionic", action="store_true")
    p.add_argument("--fixed-determinant", action="store_true",
                   help="moduli: report the T2-invariant part of the fixed-determinant space")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("-v", "--verbose", action="store_true")
    return p


def parse_genus_range(text: str) -> list[int]:
    out = []
    for part in filter(None, (s.strip() for s in text.split(","))):
        if "-" in part[1:]:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return out


def _curve(args) -> CurveTopology:
    if args.curve_type is None:
        raise ValidationError("--curve-type is required", ["curve_type"])
    kind = CurveKind.parse(args.curve_type)
    circles = args.circles if args.circles is not None else 0
    c = CurveTopology(int(args.genus), kind, circles)
    validate_curve(c)
    return c


def _bundle(args, c: CurveTopology) -> RealBundleType:
    if args.w1 is not None:
        w1 = parse_w1(args.w1)
        return RealBundleType(args.rank, args.degree, w1)
    choices = enumerate_real_bundles(c, args.rank, args.degree)
    if len(choices) == 1:
        return choices[0]
    raise ValidationError(
        "--w1 is required; valid choices: " + ", ".join(repr(b.w1_string) for b in choices),
        ["w1_ambiguous" if choices else "no_bundle_type"])


def _flatten(value):
    if isinstance(value, list):
        if all(isinstance(v, int) for v in value):
            return " ".join(str(v) for v in value)
        return json.dumps(value, ensure_ascii=False)
    if isinstance(value, dict):
        return json.dumps(value, ensure_ascii=False)
    if value is None:
        return ""
    return str(value)


def flatten_report(doc: dict) -> dict:
    series = doc.get("series") or {}
    pres = doc.get("presentation") or {}
    flat = {"subject": doc["subject"], "case": doc["case"], "genus": doc["genus"],
            "degree": doc["degree"], "series": series.get("coeffs"),
            "truncation": series.get("truncation"), "partial_up_to": doc["partial_up_to"],
            "presentation": pres.get("text")}
    for k, v in doc["flags"].items():
        flat[k] = v
    flat["real_dimension"] = doc.get("real_dimension")
    flat["statement"] = doc.get("statement")
    flat["citations"] = [c["anchor"] for c in doc["citations"]]
    return flat


def render_table(rows: list[dict], fmt: str) -> str:
    if not rows:
        return ""
    header = list(rows[0])
    for r in rows[1:]:
        for k in r:
            if k not in header:
                header.append(k)
    if fmt == "csv":
        buf = io.StringIO()
        w = csv.DictWriter(buf, fieldnames=header, lineterminator="\n")
        w.writeheader()
        for r in rows:
            w.writerow({k: _flatten(r.get(k)) for k in header})
        return buf.getvalue()
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    for r in rows:
        cells = [_flatten(r.get(k)).replace("|", "\\|") for k in header]
        lines.append("| " + " | ".join(cells) + " |")
    return "\n".join(lines) + "\n"


def emit(doc, rows: list[dict], fmt: str, out) -> None:
    if fmt == "json":
        out.write(json.dumps(doc, ensure_ascii=False, indent=2) + "\n")
    else:
        out.write(render_table(rows, fmt))


def cmd_classify(args):
    c = _curve(args)
    if args.quaternionic:
        errs = quaternionic_violations(c, args.rank, args.degree)
        row = {**c.to_json(), "rank": args.rank, "degree": args.degree,
               "quaternionic_valid": not errs, "violations": errs}
        return {"curve": c.to_json(), "quaternionic": [row]}, [row]
    rows = []
    for b in enumerate_real_bundles(c, args.rank, args.degree):
        row = {**c.to_json(), **b.to_json(), "case": None, "verdict": None}
        if c.fixed_circles:
            row["case"] = classify_gauge_case(c, b).value
        if b.rank == 2:
            row["verdict"] = normal_bundle_orientability(c, b).verdict.value
        rows.append(row)
    return {"curve": c.to_json(), "count": len(rows), "bundles": rows}, rows


def cmd_strata(args):
    c = _curve(args)
    b = _bundle(args, c)
    verdict = normal_bundle_orientability(c, b)
    rows = strata_table(c, b, args.max_codim)
    doc = {"curve": c.to_json(), "bundle": b.to_json(), "orientability": verdict.to_json(),
           "max_codim": args.max_codim, "strata": rows}
    return doc, rows


def cmd_bg(args, k):
    c = _curve(args)
    if args.quaternionic:
        rep = quaternionic_stack_report(c, QuaternionicBundleType(args.rank, args.degree))
    else:
        rep = bg_cohomology(c, _bundle(args, c), k, args.truncate)
    doc = rep.to_json()
    return doc, [flatten_report(doc)]


def cmd_moduli(args, k):
    c = _curve(args)
    b = _bundle(args, c)
    fn = fixed_determinant_invariants if args.fixed_determinant else moduli_cohomology
    doc = fn(c, b, k, args.truncate).to_json()
    return doc, [flatten_report(doc)]


def cmd_verify(args, k):
    c = _curve(args)
    b = _bundle(args, c)
    res = verify_bg(c, b, k, args.truncate, jobs=args.jobs)
    doc = {"curve": c.to_json(), "bundle": b.to_json(), "char": k.characteristic,
           **res.to_json()}
    rows = [{"degree": m, "oracle": o, "closed_form": e}
            for m, (o, e) in enumerate(zip(res.oracle_dims, res.closed_form_dims))]
    return doc, rows, res.passed


def cmd_atlas(args, k):
    rows = atlas(parse_genus_range(args.genus), args.degree, k, args.truncate, args.max_codim,
                 rank=args.rank, jobs=args.jobs)
    docs = [r.to_json() for r in rows]
    return docs, docs


def run_cli(argv=None, out=None) -> int:
    out = out or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING)
        k = FieldSpec(args.characteristic)
        if args.command != "atlas":
            try:
                args.genus = int(args.genus)
            except ValueError:
                raise ValidationError(f"--genus must be an integer, got {args.genus!r}", ["genus"])
        passed = True
        if args.command == "classify":
            doc, rows = cmd_classify(args)
        elif args.command == "strata":
            doc, rows = cmd_strata(args)
        elif args.command == "bg":
            doc, rows = cmd_bg(args, k)
        elif args.command == "moduli":
            doc, rows = cmd_moduli(args, k)
        elif args.command == "verify":
            doc, rows, passed = cmd_verify(args, k)
        else:
            doc, rows = cmd_atlas(args, k)
    except ValidationError as exc:
        out.write(json.dumps(exc.to_json(), ensure_ascii=False) + "\n")
        return 2
    except (UsageError, ValueError) as exc:
        out.write(json.dumps({"error": str(exc), "violations": ["usage"]}) + "\n")
        return 2
    emit(doc, rows, args.format, out)
    return 0 if passed else 1


def main() -> None:
    sys.exit(run_cli())


if __name__ == "__main__":
    main()
