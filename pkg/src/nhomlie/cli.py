"""Command line front end: ``nhomlie <command> <file> [options]``.

Exit status 0 means every check passed, 1 means a mathematical check failed
(or a hypothesis of the requested construction does not hold), 2 means a
usage or input error.  Reports go to stdout, diagnostics to stderr.
"""
from __future__ import annotations

import argparse
import json
import sys
from fractions import Fraction
from pathlib import Path

from nhomlie.algebra import Check, HomNLieAlgebra, _multiplicative_cached, validate
from nhomlie.cohomology import (
    adjoint_cohomology2,
    coboundary_transfer_check,
    induced_scalar_cocycle,
    one_cocycles_are_traces,
    scalar_cohomology2,
)
from nhomlie.derivations import (
    derivation_space,
    derivation_transfers,
    inner_derivations,
    trace_from_derivation,
)
from nhomlie.documents import (
    algebra_to_document,
    dumps,
    emit_algebra,
    parse_algebra,
    parse_cocycle,
    parse_lambda,
    parse_trace,
)
from nhomlie.errors import DimensionError, HomLieError, ParseError, PreconditionError
from nhomlie.extensions import central_extension, induced_extension_check
from nhomlie.induction import induce, solve_trace_space
from nhomlie.linalg import Matrix, Subspace, format_rational, unit_vector
from nhomlie.structure import SeriesReport, center, central_series, compare_structures, derived_series
from nhomlie.tensor import SkewTensor


# -- conversion to plain data ------------------------------------------------

def plain(obj):
    """JSON-ready form of report values; rationals become strings."""
    if isinstance(obj, bool) or obj is None or isinstance(obj, (int, str)):
        return obj
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if isinstance(obj, Subspace):
        return {"dim": obj.dim, "basis": [plain(v) for v in obj.basis]}
    if isinstance(obj, Check):
        return {"ok": obj.ok, "witness": plain(obj.witness)}
    if isinstance(obj, Matrix):
        return obj.to_lists()
    if isinstance(obj, SkewTensor):
        return {",".join(map(str, k)): plain(v) for k, v in obj.items()}
    if isinstance(obj, dict):
        return {str(k): plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [plain(v) for v in obj]
    return str(obj)


def _fmt_vec(v) -> str:
    return "(" + ", ".join(map(str, v)) + ")"


def render_text(data, indent: int = 0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(data, dict):
        for k, v in data.items():
            if isinstance(v, (dict, list)) and v and not _is_flat_vector(v):
                if isinstance(v, list) and all(_is_flat_vector(x) for x in v):
                    lines.append(f"{pad}{k}:")
                    lines.extend(f"{pad}  {_fmt_vec(x)}" for x in v)
                else:
                    lines.append(f"{pad}{k}:")
                    lines.append(render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar_text(v)}")
    elif isinstance(data, list):
        for item in data:
            if isinstance(item, list) and item and all(_is_flat_vector(x) for x in item):
                lines.append(f"{pad}-")
                lines.extend(f"{pad}  {_fmt_vec(x)}" for x in item)
            elif isinstance(item, (dict, list)) and item and not _is_flat_vector(item):
                lines.append(f"{pad}-")
                lines.append(render_text(item, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar_text(item)}")
    else:
        lines.append(pad + _scalar_text(data))
    return "\n".join(line for line in lines if line != "")


def _is_flat_vector(v) -> bool:
    return (isinstance(v, list) and bool(v)
            and all(isinstance(x, (str, int)) and not isinstance(x, bool) for x in v))


def _scalar_text(v) -> str:
    if isinstance(v, bool):
        return "yes" if v else "no"
    if v is None:
        return "-"
    if _is_flat_vector(v):
        return _fmt_vec(v)
    if isinstance(v, (list, dict)) and not v:
        return "none"
    return str(v)


# -- command bodies (each returns a report dict and an ok flag) -------------

def _subspace_report(S: Subspace) -> dict:
    return {"dim": S.dim, "basis": S.basis}


def validation_report(alg: HomNLieAlgebra) -> tuple[dict, bool]:
    rep = validate(alg)
    mult = None
    if alg.uniform_twist:
        mult = _multiplicative_cached(alg)
    report = {
        "algebra": alg.name or "-",
        "dimension": alg.dim,
        "arity": alg.arity,
        "hom_nambu": {"ok": not rep.defects, "defect_count": len(rep.defects),
                      "defects": [{"x": x, "y": y, "residual": r} for x, y, r in rep.defects[:20]]},
        "uniform_twist": alg.uniform_twist,
        "multiplicative": {"declared": alg.multiplicative_declared,
                           "holds": None if mult is None else mult.ok,
                           "witness": None if mult is None else mult.witness},
    }
    return report, rep.ok


def cmd_validate(alg, args):
    return validation_report(alg)


def cmd_traces(alg, args):
    S = solve_trace_space(alg, require_alpha_compatible=args.hom_compatible)
    return {"hom_compatible": args.hom_compatible, **_subspace_report(S)}, True


def _load_trace(args, alg):
    return parse_trace(args.trace, alg.dim)


def cmd_induce(alg, args):
    tau, alpha_n = _load_trace(args, alg)
    induced = induce(alg, tau, alpha_n)
    if args.out:
        Path(args.out).write_text(emit_algebra(induced))
        return {"theorem": induced.provenance, "arity": induced.arity, "out": args.out}, True
    return algebra_to_document(induced), True


def series_report(S: SeriesReport) -> dict:
    return {"type": S.kind,
            "terms": [{"r": r, **_subspace_report(t)} for r, t in enumerate(S.terms)],
            "stabilized": S.stabilized,
            "class": S.class_index}


def cmd_series(alg, args):
    fn = derived_series if args.type == "derived" else central_series
    return series_report(fn(alg, max_steps=args.max_steps)), True


def cmd_center(alg, args):
    return _subspace_report(center(alg)), True


def _cohomology_report(C, coeffs: str) -> dict:
    labels = ["phi(" + ",".join(map(str, k)) + ")" for k in C.keys]
    if coeffs == "adjoint":
        d = C.Z2.ambient_dim // max(len(C.keys), 1)
        labels = [f"{lab}_{c}" for lab in labels for c in range(1, d + 1)]
    out = {"coordinates": labels,
           "Z2": _subspace_report(C.Z2),
           "B2": None if C.B2 is None else _subspace_report(C.B2),
           "H2_dim": C.h2_dim}
    if C.note:
        out["note"] = C.note
    return out


def cmd_cohomology(alg, args):
    C = scalar_cohomology2(alg) if args.coeffs == "scalar" else adjoint_cohomology2(alg)
    return {"degree": args.degree, "coefficients": args.coeffs, **_cohomology_report(C, args.coeffs)}, True


def _maps(alg, S: Subspace) -> list:
    return [Matrix.unflatten(v, alg.dim, alg.dim) for v in S.basis]


def derivation_report(alg, k: int) -> tuple[dict, bool]:
    der = derivation_space(alg, k)
    inn = inner_derivations(alg, k)
    report = {"power": k,
              "Der": {"dim": der.dim, "basis": _maps(alg, der)},
              "Inn": {"dim": inn.space.dim, "basis": _maps(alg, inn.space),
                      "generators": [{"X": g.X, "reading": g.reading, "verified": g.verified}
                                     for g in inn.generators]}}
    return report, all(g.verified for g in inn.generators)


def cmd_derivations(alg, args):
    return derivation_report(alg, args.power)


def cmd_extend(alg, args):
    omega = parse_cocycle(args.cocycle, alg.dim, alg.arity)
    lam = parse_lambda(args.lam, alg.dim) if args.lam else None
    ext = central_extension(alg, omega, lam)
    report = {"dimension": ext.extended.dim, "hom_nambu": True,
              "alpha_c_multiplicative": ext.multiplicative}
    if args.out:
        Path(args.out).write_text(emit_algebra(ext.extended))
        report["out"] = args.out
    else:
        report["algebra"] = algebra_to_document(ext.extended)
    return report, True


def _section(fn):
    """Run one dossier section; a failing hypothesis is recorded as skipped."""
    try:
        return fn()
    except PreconditionError as exc:
        return {"skipped": str(exc)}, True


def _verdicts_ok(data) -> bool:
    if isinstance(data, dict):
        if "ok" in data and data["ok"] is False:
            return False
        return all(_verdicts_ok(v) for v in data.values())
    if isinstance(data, list):
        return all(_verdicts_ok(v) for v in data)
    return True


def _transfer_section(alg, tau, alpha_n) -> dict:
    out = {}
    out["one_cocycles_are_traces"] = one_cocycles_are_traces(alg, tau, alpha_n)
    units = [unit_vector(alg.dim, i) for i in range(1, alg.dim + 1)]
    bad = next((i + 1 for i, w in enumerate(units) if not coboundary_transfer_check(alg, tau, w, alpha_n)), None)
    out["coboundary_transfer"] = Check(bad is None, bad)
    C = scalar_cohomology2(alg)
    images = [induced_scalar_cocycle(alg, tau, SkewTensor.from_coordinates(alg.arity, alg.dim, v), alpha_n)
              for v in C.Z2.basis]
    out["induced_cocycles"] = {"ok": True, "images": images}
    der = []
    for k in (0, 1):
        for v in derivation_space(alg, k).basis:
            f = Matrix.unflatten(v, alg.dim, alg.dim)
            t = trace_from_derivation(alg, f, k, tau)
            r = derivation_transfers(alg, tau, f, k)
            der.append({"power": k, "map": f, "trace_of_composite": t,
                        "derivation_of_induced": r.direct.ok, "criterion_agrees": True})
    out["derivations"] = der
    out["extensions"] = [{"omega": v, "ok": induced_extension_check(alg, tau, v).ok} for v in C.Z2.basis]
    return out


def cmd_report(alg, args):
    report = {}
    report["validation"], ok = validation_report(alg)
    if not ok:
        return report, False
    report["traces"] = _subspace_report(solve_trace_space(alg))
    report["center"] = _subspace_report(center(alg))
    report["derived_series"] = series_report(derived_series(alg))
    report["central_series"] = series_report(central_series(alg))
    mult = alg.uniform_twist and _multiplicative_cached(alg).ok
    if mult:
        report["hom_compatible_traces"] = _subspace_report(solve_trace_space(alg, True))
        report["scalar_cohomology"], _ = _section(lambda: (_cohomology_report(scalar_cohomology2(alg), "scalar"), True))
        report["adjoint_cohomology"], _ = _section(lambda: (_cohomology_report(adjoint_cohomology2(alg), "adjoint"), True))
        report["derivations"] = [derivation_report(alg, k)[0] for k in (0, 1)]
    if args.trace:
        tau, alpha_n = _load_trace(args, alg)
        induced = induce(alg, tau, alpha_n)
        ind = {"theorem": induced.provenance, "algebra": algebra_to_document(induced)}
        if induced.multiplicative_declared:
            cmp = compare_structures(alg, tau, alpha_n)
            ind["comparison"] = {k: v for k, v in cmp.verdicts.items()}
            ind["unit_like"] = cmp.unit
            ind["transfers"], _ = _section(lambda: (_transfer_section(alg, tau, alpha_n), True))
        report["induced"] = ind
    data = plain(report)
    return report, _verdicts_ok(data)


COMMANDS = {
    "validate": cmd_validate,
    "traces": cmd_traces,
    "induce": cmd_induce,
    "series": cmd_series,
    "center": cmd_center,
    "cohomology": cmd_cohomology,
    "derivations": cmd_derivations,
    "extend": cmd_extend,
    "report": cmd_report,
}


def build_parser() -> argparse.ArgumentParser:
    fmt = argparse.ArgumentParser(add_help=False)
    fmt.add_argument("--format", choices=["text", "json"], default=argparse.SUPPRESS,
                     help="output format (default text)")
    parser = argparse.ArgumentParser(prog="nhomlie", parents=[fmt],
                                     description="Exact computations with n-Hom-Lie algebras.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text):
        p = sub.add_parser(name, parents=[fmt], help=help_text)
        p.add_argument("file", help="algebra document (JSON)")
        return p

    add("validate", "check the Hom-Nambu identity and declared multiplicativity")
    p = add("traces", "basis of the trace forms")
    p.add_argument("--hom-compatible", action="store_true", help="also require tau o alpha = tau")
    p = add("induce", "induced (n+1)-ary algebra")
    p.add_argument("--trace", required=True, help="trace document")
    p.add_argument("--out", help="write the induced algebra here")
    p = add("series", "derived or central descending series")
    p.add_argument("--type", choices=["derived", "central"], required=True)
    p.add_argument("--max-steps", type=int, default=None)
    add("center", "basis of the center")
    p = add("cohomology", "second cohomology")
    p.add_argument("--degree", type=int, choices=[2], default=2)
    p.add_argument("--coeffs", choices=["scalar", "adjoint"], default="scalar")
    p = add("derivations", "alpha^k-derivations and inner derivations")
    p.add_argument("--power", type=int, default=0)
    p = add("extend", "central extension by a scalar 2-cocycle")
    p.add_argument("--cocycle", required=True)
    p.add_argument("--lambda", dest="lam", help="lambda document (d+1 coefficients)")
    p.add_argument("--out")
    p = add("report", "full dossier, optionally comparing with the induced algebra")
    p.add_argument("--trace")
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    fmt = getattr(args, "format", "text")
    if getattr(args, "power", 0) < 0 or (getattr(args, "max_steps", None) or 0) < 0:
        parser.error("counts must be non-negative")
    try:
        alg = parse_algebra(args.file)
        report, ok = COMMANDS[args.command](alg, args)
    except (ParseError, DimensionError) as exc:
        print(f"nhomlie: error: {exc}", file=sys.stderr)
        return 2
    except HomLieError as exc:
        witness = getattr(exc, "witness", None)
        extra = "" if witness is None else f" (witness: {json.dumps(plain(witness))})"
        print(f"nhomlie: {args.command}: {exc}{extra}", file=sys.stderr)
        return 1
    data = plain(report)
    if fmt == "json":
        sys.stdout.write(dumps(data))
    else:
        sys.stdout.write(render_text(data) + "\n")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
