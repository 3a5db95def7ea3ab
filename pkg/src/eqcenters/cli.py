"""Command-line front end.

Exit codes: 0 success, 2 parse error, 3 validation error, 4 domain error,
5 internal invariant violation (also used when ``verify`` records failures).
"""
from __future__ import annotations

import argparse
import json
import sys

import numpy as np

from .centers import Centroid, HWeighted, TriangleClassical, TRIANGLE_KINDS, make_orbit_center
from .errors import GeometryError, InvariantViolation
from .geometry import Tolerance
from .harness import run_trials
from .io import ParseError, read_simplex_file
from .simplex import is_affinely_independent, is_equifacetal
from .symmetry import fixed_subspace, is_vertex_transitive, symmetry_group

EXIT_OK, EXIT_PARSE, EXIT_VALIDATION, EXIT_DOMAIN, EXIT_INTERNAL = 0, 2, 3, 4, 5


def _vec(x) -> list:
    return [float(v) for v in np.asarray(x).reshape(-1)]


def analyze(V, label, tol: Tolerance) -> dict:
    independent = is_affinely_independent(V, tol)
    report = {
        "label": label,
        "dimension": V.dim,
        "vertices": [_vec(v) for v in V.vertices],
        "affinely_independent": independent,
        "equifacetal": is_equifacetal(V, tol),
    }
    if independent:
        G = symmetry_group(V, tol)
        F = fixed_subspace(G, tol)
        report["symmetry"] = {
            "order": G.order,
            "permutations": G.permutations().tolist(),
            "vertex_transitive": is_vertex_transitive(G),
            "fixed_subspace": {
                "dim": F.dim,
                "base_point": _vec(F.base_point),
                "directions": [_vec(d) for d in F.directions],
            },
        }
    else:
        report["symmetry"] = {"skipped": "stabilizer infinite - skipped (affinely dependent simplex)"}
    return report


def centers_report(V, label, tol: Tolerance) -> dict:
    rows = []
    for Z in (Centroid(), HWeighted(), *(TriangleClassical(k) for k in TRIANGLE_KINDS)):
        try:
            rows.append({"center": Z.name, "value": _vec(Z.evaluate(V, tol))})
        except GeometryError as exc:
            rows.append({"center": Z.name, "error": type(exc).__name__, "reason": str(exc)})
    return {"label": label, "dimension": V.dim, "centers": rows}


def _render_text(obj, indent=0) -> str:
    pad = "  " * indent
    lines = []
    if isinstance(obj, dict):
        for k, v in obj.items():
            if isinstance(v, (dict, list)) and v and not _flat(v):
                lines.append(f"{pad}{k}:")
                lines.append(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}{k}: {_scalar(v)}")
    elif isinstance(obj, list):
        for v in obj:
            if isinstance(v, (dict, list)) and not _flat(v):
                lines.append(f"{pad}-")
                lines.append(_render_text(v, indent + 1))
            else:
                lines.append(f"{pad}- {_scalar(v)}")
    else:
        lines.append(pad + _scalar(obj))
    return "\n".join(lines)


def _flat(v) -> bool:
    return isinstance(v, list) and all(not isinstance(x, (dict, list)) for x in v)


def _scalar(v) -> str:
    if isinstance(v, list):
        return "[" + ", ".join(_scalar(x) for x in v) + "]"
    if isinstance(v, float):
        return format(v, ".12g")
    if v is None:
        return "-"
    return str(v)


def emit(report: dict, fmt: str, out=None) -> None:
    out = out or sys.stdout
    if fmt == "structured":
        out.write(json.dumps(report, indent=2, sort_keys=False) + "\n")
    else:
        out.write(_render_text(report) + "\n")


def _parse_anchor(text: str) -> np.ndarray:
    try:
        return np.array([float(x) for x in text.replace(",", " ").split()])
    except ValueError:
        raise ParseError(f"cannot parse anchor {text!r}") from None


def _parse_dims(text: str) -> list[int]:
    dims = []
    for part in text.split(","):
        part = part.strip()
        if "-" in part or ".." in part:
            lo, hi = part.replace("..", "-").split("-")
            dims.extend(range(int(lo), int(hi) + 1))
        elif part:
            dims.append(int(part))
    return dims


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol-abs", type=float, default=1e-9)
    common.add_argument("--tol-rel", type=float, default=1e-9)
    common.add_argument("--format", choices=("text", "structured"), default="text")

    parser = argparse.ArgumentParser(
        prog="eqcenters",
        description="Symmetry groups, fixed subspaces and equivariant centers of simplices.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("analyze", parents=[common], help="symmetry group, fixed subspace, equifacetality")
    p.add_argument("path", help="simplex file, or - for stdin")

    p = sub.add_parser("centers", parents=[common], help="evaluate the built-in centers")
    p.add_argument("path")

    p = sub.add_parser("verify", parents=[common], help="run the coincidence/certificate trials")
    p.add_argument("--dims", default="2-5", help="e.g. 2-5 or 2,3,4")
    p.add_argument("--count", type=int, default=100)
    p.add_argument("--seed", type=int, default=0)

    p = sub.add_parser("transport", parents=[common], help="orbit-transport center evaluated at a target")
    p.add_argument("base_path")
    p.add_argument("target_path")
    p.add_argument("--anchor", required=True, help="anchor point, e.g. '0,1'")
    return parser


def run(argv=None, out=None) -> int:
    args = build_parser().parse_args(argv)
    out = out or sys.stdout
    try:
        tol = Tolerance(args.tol_abs, args.tol_rel)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VALIDATION
    try:
        if args.command == "analyze":
            V, label = read_simplex_file(args.path)
            emit(analyze(V, label, tol), args.format, out)
        elif args.command == "centers":
            V, label = read_simplex_file(args.path)
            emit(centers_report(V, label, tol), args.format, out)
        elif args.command == "transport":
            base, _ = read_simplex_file(args.base_path)
            target, _ = read_simplex_file(args.target_path)
            anchor = _parse_anchor(args.anchor)
            Z = make_orbit_center(base, anchor, tol)
            value = Z.evaluate(target, tol)
            emit({"anchor": _vec(anchor), "value": _vec(value)}, args.format, out)
        elif args.command == "verify":
            try:
                dims = _parse_dims(args.dims)
            except ValueError:
                raise ParseError(f"cannot parse --dims {args.dims!r}") from None
            summary = run_trials(dims, args.count, args.seed, tol)
            emit(summary, args.format, out)
            if summary["total_failures"]:
                for f in summary["failures"][:20]:
                    print(f"FAIL {f['instance']}: {f['error']}: {f['detail']}", file=sys.stderr)
                return EXIT_INTERNAL
    except ParseError as exc:
        print(f"parse error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except InvariantViolation as exc:
        print(f"internal invariant violated: {exc}", file=sys.stderr)
        return EXIT_INTERNAL
    except GeometryError as exc:
        print(f"{type(exc).__name__}: {exc}", file=sys.stderr)
        return exc.exit_code
    return EXIT_OK


def main() -> None:
    sys.exit(run())
