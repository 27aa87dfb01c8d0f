"""Command-line interface.

Exit status: 0 inside / success, 1 outside, 2 usage or parse error,
3 numerical failure.  Complex numbers are written ``re+imi`` or
``modulus@turns`` where ``turns`` may be a fraction such as ``7/24``.
Output is plain text, so ``NO_COLOR`` needs no special handling.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import re
import sys
from fractions import Fraction

import numpy as np

from . import boundary as _boundary
from .arcs import arc_params, g_hat, ito_roots, reduced_ito_poly
from .boundary import NoSignChange, sample_boundary
from .farey import FareyPair, farey_pairs, farey_sequence, is_farey_pair, unit_root
from .poly import NonConvergence, Poly, all_roots
from .realize import NotInRegion, RealizationKind, realize_subdominant
from .region import MIN_ORDER_CAP, TOL_MEMBER, NotFoundBelowCap, OutsideUnitDisc, contains, min_order

EXIT_INSIDE = 0
EXIT_OUTSIDE = 1
EXIT_USAGE = 2
EXIT_NUMERIC = 3

CSV_HEADER = ["theta", "rho", "re", "im", "alpha", "q", "s", "type", "j0"]
SVG_SIZE = 1000
SVG_EXTENT = 1.1
_VALUE_FLAGS = ("--z", "--coeffs")


class UsageError(ValueError):
    pass


def parse_complex(text: str) -> complex:
    """Parse ``re+imi``, ``re``, ``imi`` or ``modulus@turns``."""
    s = text.strip().replace(" ", "")
    if "@" in s:
        mod, _, turns = s.partition("@")
        try:
            r = float(mod)
            f = Fraction(turns)
        except (ValueError, ZeroDivisionError) as exc:
            raise UsageError(f"cannot parse {text!r} as modulus@turns") from exc
        if r < 0:
            raise UsageError(f"modulus must be nonnegative in {text!r}")
        w = unit_root(f)
        return complex(r * w.real, r * w.imag)
    if not re.fullmatch(r"[0-9eE.+\-]*[ij]?", s) or not s:
        raise UsageError(f"cannot parse {text!r} as a complex number")
    try:
        z = complex(s.replace("i", "j"))
    except ValueError as exc:
        raise UsageError(f"cannot parse {text!r} as a complex number") from exc
    return z


def _fraction(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError) as exc:
        raise UsageError(f"cannot parse {text!r} as a fraction") from exc


def _fmt(x: float) -> str:
    return "%.17g" % x


def boundary_records(n: int, samples: int, tol: float) -> list[dict]:
    records = []
    for bp in sample_boundary(n, samples, tol=tol):
        p = bp.params
        records.append({
            "theta": bp.theta, "rho": bp.rho, "re": bp.value.real, "im": bp.value.imag,
            "alpha": bp.alpha, "q": p.q, "s": p.s, "type": str(p.arc_type), "j0": p.j0,
        })
    return records


def records_to_csv(records: list[dict]) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(CSV_HEADER)
    for r in records:
        w.writerow([
            _fmt(r["theta"]), _fmt(r["rho"]), _fmt(r["re"]), _fmt(r["im"]), _fmt(r["alpha"]),
            r["q"], r["s"], r["type"], r["j0"],
        ])
    return buf.getvalue()


def records_from_csv(text: str) -> list[dict]:
    rows = list(csv.DictReader(io.StringIO(text)))
    out = []
    for r in rows:
        out.append({
            "theta": float(r["theta"]), "rho": float(r["rho"]), "re": float(r["re"]),
            "im": float(r["im"]), "alpha": float(r["alpha"]), "q": int(r["q"]),
            "s": int(r["s"]), "type": r["type"], "j0": int(r["j0"]),
        })
    return out


def records_to_svg(records: list[dict], n: int) -> str:
    half = SVG_SIZE / 2
    scale = half / SVG_EXTENT

    def xy(re_, im_):
        return f"{half + scale * re_:.3f},{half - scale * im_:.3f}"

    pts = " L ".join(xy(r["re"], r["im"]) for r in records)
    return "\n".join([
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{SVG_SIZE}" height="{SVG_SIZE}" '
        f'viewBox="0 0 {SVG_SIZE} {SVG_SIZE}">',
        f"  <title>eigenvalue region of order {n}</title>",
        f'  <rect width="{SVG_SIZE}" height="{SVG_SIZE}" fill="white"/>',
        f'  <line x1="0" y1="{half}" x2="{SVG_SIZE}" y2="{half}" stroke="#bbbbbb" stroke-width="1"/>',
        f'  <line x1="{half}" y1="0" x2="{half}" y2="{SVG_SIZE}" stroke="#bbbbbb" stroke-width="1"/>',
        f'  <circle cx="{half}" cy="{half}" r="{scale:.3f}" fill="none" stroke="#888888" stroke-width="1.5"/>',
        f'  <path d="M {pts} Z" fill="#4a7fb5" fill-opacity="0.35" stroke="#1f4e79" stroke-width="1.5"/>',
        "</svg>",
        "",
    ])


def _emit(text: str, output: str | None) -> None:
    if output in (None, "-"):
        sys.stdout.write(text)
    else:
        with open(output, "w", encoding="utf-8") as fh:
            fh.write(text)


def cmd_farey(args) -> int:
    if args.n < 1:
        raise UsageError("n must be >= 1")
    for f in farey_sequence(args.n):
        print(f"{f.numerator}/{f.denominator}")
    return EXIT_INSIDE


def cmd_arcs(args) -> int:
    if args.n < 2:
        raise UsageError("n must be >= 2")
    print("left,right,p,q,r,s,d,delta,d1,s1,r1,j0,rhat,l0,y,type")
    for pair in farey_pairs(args.n):
        a = arc_params(pair)
        print(",".join(str(v) for v in (
            pair.left, pair.right, a.p, a.q, a.r, a.s, a.d, a.delta, a.d1, a.s1,
            a.r1, a.j0, a.rhat, a.l0, a.y, a.arc_type,
        )))
    return EXIT_INSIDE


def cmd_boundary(args) -> int:
    if args.n < 2:
        raise UsageError("n must be >= 2")
    if args.samples < 3:
        raise UsageError("samples must be >= 3")
    records = boundary_records(args.n, args.samples, args.tol)
    if args.format == "csv":
        text = records_to_csv(records)
    elif args.format == "json":
        text = json.dumps(records, indent=1) + "\n"
    else:
        text = records_to_svg(records, args.n)
    _emit(text, args.output)
    return EXIT_INSIDE


def cmd_member(args) -> int:
    z = parse_complex(args.z)
    try:
        v = contains(args.n, z, args.tol_member)
    except OutsideUnitDisc:
        print(f"outside |z|={_fmt(abs(z))} exceeds 1")
        return EXIT_OUTSIDE
    word = "inside" if v.inside else "outside"
    print(f"{word} boundary_modulus={_fmt(v.boundary_modulus)} margin={_fmt(v.margin)}")
    return EXIT_INSIDE if v.inside else EXIT_OUTSIDE


def cmd_minn(args) -> int:
    z = parse_complex(args.z)
    try:
        n = min_order(z, cap=args.cap, tol_member=args.tol_member)
    except (NotFoundBelowCap, OutsideUnitDisc) as exc:
        print(f"outside: {exc}")
        return EXIT_OUTSIDE
    print(n)
    return EXIT_INSIDE


def _cplx(z: complex) -> list[float]:
    return [float(z.real), float(z.imag)]


def cmd_realize(args) -> int:
    z = parse_complex(args.z)
    try:
        res = realize_subdominant(args.n, z, args.tol_member)
    except (NotInRegion, OutsideUnitDisc) as exc:
        print(json.dumps({"kind": "NotInRegion", "target": _cplx(z), "message": str(exc)}))
        return EXIT_OUTSIDE
    out = {
        "kind": res.kind.value,
        "n": args.n,
        "target": _cplx(res.target),
        "achieved": _cplx(res.achieved),
        "scale": res.scale,
        "alpha": res.alpha,
        "arc_type": str(res.params.arc_type) if res.params is not None else None,
    }
    if res.kind is RealizationKind.MATRIX:
        out["matrix"] = res.matrix.tolist()
    else:
        cert = res.certificate
        out["certificate"] = {
            "coefficients": [_cplx(c) for c in cert.poly.coeffs],
            "roots": [_cplx(r) for r in cert.roots.roots],
            "subdominance_ok": cert.subdominance_ok,
        }
    print(json.dumps(out, indent=1))
    return EXIT_INSIDE


def cmd_roots(args) -> int:
    if args.coeffs is not None:
        coeffs = [parse_complex(c) for c in args.coeffs.split(",")]
        poly = Poly(coeffs)
        if poly.degree < 1:
            raise UsageError("polynomial must have degree >= 1")
        roots = all_roots(poly, tol=args.tol).roots
    else:
        if args.n is None or args.pair is None or args.alpha is None:
            raise UsageError("roots needs --coeffs, or --n with --pair and --alpha")
        a, b = (_fraction(x) for x in args.pair)
        if not (a < b and is_farey_pair(a, b, args.n)):
            raise UsageError(f"({a}, {b}) is not a Farey pair of order {args.n}")
        if not 0.0 <= args.alpha <= 1.0:
            raise UsageError("alpha must lie in [0, 1]")
        params = arc_params(FareyPair(a, b, args.n))
        if args.j is None:
            roots = ito_roots(params, args.alpha).roots
            print(f"# f_alpha = {reduced_ito_poly(params, args.alpha)}")
        else:
            if params.q < 2 or not 0 <= args.j < params.delta:
                raise UsageError(f"j must lie in [0, {params.delta}) on an arc with q >= 2")
            roots = all_roots(g_hat(params, args.alpha, args.j), tol=args.tol).roots
    order = np.lexsort((np.angle(roots), -np.abs(roots)))
    print("re,im,modulus,argument")
    for z in roots[order]:
        print(f"{_fmt(z.real)},{_fmt(z.imag)},{_fmt(abs(z))},{_fmt(math.atan2(z.imag, z.real))}")
    return EXIT_INSIDE


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--tol", type=float, default=argparse.SUPPRESS,
                        help=f"boundary / root tolerance (default {_boundary.TOL_RHO:g})")
    common.add_argument("--tol-member", type=float, default=argparse.SUPPRESS,
                        help=f"membership tolerance (default {TOL_MEMBER:g})")
    common.add_argument("--cap", type=int, default=argparse.SUPPRESS,
                        help=f"largest order tried by minn (default {MIN_ORDER_CAP})")

    parser = argparse.ArgumentParser(
        prog="karpelevic",
        description="Eigenvalue regions of stochastic matrices.",
    )
    parser.add_argument("--tol", type=float, default=_boundary.TOL_RHO)
    parser.add_argument("--tol-member", type=float, default=TOL_MEMBER)
    parser.add_argument("--cap", type=int, default=MIN_ORDER_CAP)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("farey", parents=[common], help="Farey sequence of order n")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_farey)

    p = sub.add_parser("arcs", parents=[common], help="arc parameters for every Farey pair")
    p.add_argument("n", type=int)
    p.set_defaults(func=cmd_arcs)

    p = sub.add_parser("boundary", parents=[common], help="sample the boundary")
    p.add_argument("n", type=int)
    p.add_argument("--samples", "-m", type=int, default=720)
    p.add_argument("--format", "-f", choices=("csv", "json", "svg"), default="csv")
    p.add_argument("--output", "-o", default=None, help="file to write (default stdout)")
    p.set_defaults(func=cmd_boundary)

    p = sub.add_parser("member", parents=[common], help="membership test")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--z", required=True)
    p.set_defaults(func=cmd_member)

    p = sub.add_parser("minn", parents=[common], help="smallest order containing z")
    p.add_argument("--z", required=True)
    p.set_defaults(func=cmd_minn)

    p = sub.add_parser("realize", parents=[common], help="matrix or certificate realising z")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--z", required=True)
    p.set_defaults(func=cmd_realize)

    p = sub.add_parser("roots", parents=[common], help="roots of a polynomial or an arc polynomial")
    p.add_argument("--coeffs", help="comma-separated coefficients, constant term first")
    p.add_argument("--n", type=int)
    p.add_argument("--pair", nargs=2, metavar=("LEFT", "RIGHT"))
    p.add_argument("--alpha", type=float)
    p.add_argument("--j", type=int, help="roots of the j-th reduced factor instead of f_alpha")
    p.set_defaults(func=cmd_roots)
    return parser


def _glue_values(argv: list[str]) -> list[str]:
    """Attach values such as ``-0.5+0.1i`` to their flag so argparse does not read them as options."""
    out, i = [], 0
    while i < len(argv):
        tok = argv[i]
        if tok in _VALUE_FLAGS and i + 1 < len(argv) and argv[i + 1].startswith("-"):
            out.append(f"{tok}={argv[i + 1]}")
            i += 2
        else:
            out.append(tok)
            i += 1
    return out


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    args = parser.parse_args(_glue_values(argv))
    try:
        return args.func(args)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (NoSignChange, NonConvergence, ArithmeticError) as exc:
        print(f"{parser.prog}: numerical failure: {exc}", file=sys.stderr)
        return EXIT_NUMERIC


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())
