"""
Command line interface.

Exit codes: 0 success, 2 invalid input or oracle cap exceeded, 3 polynomial
outside the family, 4 verification failure.
"""
from __future__ import annotations

import argparse
import json
import math
import sys

from . import golden
from .core import (Weights, algebra_coxeter_poly, chi_cyclo, chi_factored, chi_poly,
                   cy_dimension)
from .errors import CapExceeded, CoxeterKitError, InvalidWeights, OutOfFamily
from .exactpoly import CycloExponents, IntPoly
from .oracle import charpoly_exact, coxeter_matrix, determinant, fiber_cap, fiber_multiplicities, matrix_cap
from .recovery import MultiplicityTable, canonical_multiset, recover
from .spectral import (algebra_periodicity_order, eigenvalue_one_obstruction, gcd_graph,
                       is_self_reciprocal, periodicity_order, top_multiplicity_positive)

EXIT_OK, EXIT_INPUT, EXIT_FAMILY, EXIT_MISMATCH = 0, 2, 3, 4


class UsageError(Exception):
    pass


def _keyed(table) -> dict[str, int]:
    return {str(k): int(v) for k, v in table.items()}


def _phi_notation(table) -> str:
    return str(CycloExponents(dict(table)))


def _weights(values) -> Weights:
    try:
        return Weights(values)
    except InvalidWeights as exc:
        raise UsageError(str(exc)) from None


def cmd_chi(args) -> tuple[dict, str, int]:
    w = _weights(args.weights)
    target = w + [2] if args.algebra and w.s % 2 == 0 else w
    result: dict = {"form": args.form, "weights": list(target.values)}
    if args.form == "poly":
        poly = algebra_coxeter_poly(w) if args.algebra else chi_poly(w)
        result["poly"] = poly.to_json()
        text = str(poly)
    elif args.form == "factored":
        fr = chi_factored(target)
        result["factored"] = _keyed(fr.table)
        text = " ".join(f"(X^{n}-1)^{e}" for n, e in fr.table.items())
    else:
        cyc = chi_cyclo(target)
        result["cyclo"] = _keyed(cyc.table)
        text = str(cyc)
    return result, text, EXIT_OK


def cmd_recover(args) -> tuple[dict, str, int]:
    if args.from_weights:
        if args.coeffs:
            raise UsageError("give either coefficients or --from-weights, not both")
        f = chi_poly(_weights(args.from_weights))
    elif args.coeffs:
        f = IntPoly(args.coeffs)
        if f.is_zero():
            raise UsageError("the zero polynomial is not a Coxeter polynomial")
    else:
        raise UsageError("no polynomial given")
    try:
        r = recover(f)
    except OutOfFamily as exc:
        result = {"poly": f.to_json(), "error": type(exc).__name__, "message": str(exc)}
        return result, f"not a Coxeter polynomial of this family: {exc}", EXIT_FAMILY
    multiset = canonical_multiset(r)
    result = {
        "poly": f.to_json(),
        "multiplicities": _keyed(r.table.table),
        "modulus": r.n,
        "signed_k": _keyed(r.signed_k),
        "counts": _keyed(r.counts),
        "two_parity": r.two_parity,
        "s_parity": r.s_parity,
        "multiset": list(multiset.values),
    }
    text = "\n".join([
        f"factorisation: {_phi_notation(r.table.table)}",
        f"working modulus n = {r.n}",
        f"s is {'odd' if r.s_parity else 'even'}, number of 2s is {'odd' if r.two_parity else 'even'}",
        f"multiset: {multiset}",
    ])
    return result, text, EXIT_OK


def _guarded(fn, w):
    try:
        return fn(w)
    except CoxeterKitError as exc:
        return {"error": type(exc).__name__, "message": str(exc)}


def cmd_spectrum(args) -> tuple[dict, str, int]:
    w = _weights(args.weights)
    cyc = chi_cyclo(w)
    obstruction = _guarded(eigenvalue_one_obstruction, w)
    result = {
        "weights": list(w.values),
        "lcm": w.lcm,
        "degree": w.degree,
        "order": _guarded(periodicity_order, w),
        "algebra_order": _guarded(algebra_periodicity_order, w),
        "top_multiplicity_positive": _guarded(top_multiplicity_positive, w),
        "multiplicities": _keyed(cyc.table),
        "m_1": cyc[1],
        "one_eigenvalue": obstruction if isinstance(obstruction, dict) else obstruction is None,
        "condition": obstruction,
        "gcd_graph": gcd_graph(w).to_json(),
        "self_reciprocal": is_self_reciprocal(w),
        "gcd_witness": math.gcd(w.s, *w.values),
        "cy": cy_dimension(w).to_json(),
    }
    cy = cy_dimension(w)

    def show(v):
        return v["message"] if isinstance(v, dict) else v

    lines = [
        f"weights {w}, degree {w.degree}",
        f"factorisation: {cyc}",
        f"periodicity order: {show(result['order'])}",
        f"algebra periodicity order: {show(result['algebra_order'])}",
        f"1 is an eigenvalue: {show(result['one_eigenvalue'])} (m_1 = {cyc[1]})",
        f"self-reciprocal: {result['self_reciprocal']} (gcd(s, weights) = {result['gcd_witness']})",
        f"Calabi-Yau dimension: {cy.numerator}/{cy.denominator} = {cy.reduced}",
    ]
    if isinstance(obstruction, str):
        lines[4] += f", obstruction ({obstruction})"
    return result, "\n".join(lines), EXIT_OK


def _check_caps(w: Weights, oracle: str) -> None:
    if oracle in ("fiber", "both") and w.degree > fiber_cap():
        raise CapExceeded(f"{w.degree} exponent tuples exceed the fiber cap {fiber_cap()}")
    if oracle in ("matrix", "both") and w.degree > matrix_cap():
        raise CapExceeded(f"matrix dimension {w.degree} exceeds the cap {matrix_cap()}")


def cmd_verify(args) -> tuple[dict, str, int]:
    w = _weights(args.weights)
    _check_caps(w, args.oracle)
    poly = chi_poly(w)
    cyc = chi_cyclo(w)
    checks = {"cyclo_expands_to_poly": cyc.to_poly() == poly}
    if args.oracle in ("fiber", "both"):
        fib = fiber_multiplicities(w)
        checks["fiber_matches_cyclo"] = fib == MultiplicityTable.from_cyclo(cyc)
    if args.oracle in ("matrix", "both"):
        m = coxeter_matrix(w)
        checks["charpoly_matches_poly"] = charpoly_exact(m) == poly
        sign = -1 if (w.s - 1) % 2 else 1
        checks["algebra_charpoly_matches"] = charpoly_exact(m.scale(sign)) == algebra_coxeter_poly(w)
        checks["determinant_sign"] = determinant(m) == (-1) ** (w.degree * w.s)
    ok = all(checks.values())
    result = {"weights": list(w.values), "oracle": args.oracle, "checks": checks, "ok": ok}
    text = "\n".join(f"{'PASS' if v else 'FAIL'}  {k}" for k, v in checks.items())
    return result, text, EXIT_OK if ok else EXIT_MISMATCH


def cmd_paper_tables(args) -> tuple[dict, str, int]:
    report = golden.diff_all()
    ok = all(r["ok"] for r in report)
    lines = []
    for r in report:
        w = "[" + ",".join(map(str, r["weights"])) + "]"
        lines.append(f"{'PASS' if r['ok'] else 'FAIL'}  {r['section']:<16} {w}")
        for field, d in r["mismatches"].items():
            lines.append(f"      {field}: expected {d['expected']}, got {d['got']}")
    return {"tables": report, "ok": ok}, "\n".join(lines), EXIT_OK if ok else EXIT_MISMATCH


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--json", action="store_true", default=argparse.SUPPRESS,
                        help="emit a JSON record instead of text")
    common.add_argument("--quiet", action="store_true", default=argparse.SUPPRESS,
                        help="print nothing; report through the exit code only")

    parser = argparse.ArgumentParser(
        prog="coxeterkit",
        description="Coxeter polynomials of tensor products of type A path algebras.",
    )
    parser.add_argument("--json", action="store_true", default=False)
    parser.add_argument("--quiet", action="store_true", default=False)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("chi", parents=[common], help="Coxeter polynomial of a weight multiset")
    p.add_argument("weights", nargs="+", type=int)
    p.add_argument("--form", choices=["poly", "factored", "cyclo"], default="poly")
    p.add_argument("--algebra", action="store_true",
                   help="use the sign convention of the tensor product algebra")
    p.set_defaults(func=cmd_chi)

    p = sub.add_parser("recover", parents=[common], help="recover the weights from a polynomial")
    p.add_argument("coeffs", nargs="*", type=int, help="coefficients, lowest degree first")
    p.add_argument("--from-weights", nargs="+", type=int, metavar="W")
    p.set_defaults(func=cmd_recover)

    p = sub.add_parser("spectrum", parents=[common], help="spectral properties")
    p.add_argument("weights", nargs="+", type=int)
    p.set_defaults(func=cmd_spectrum)

    p = sub.add_parser("verify", parents=[common], help="cross-check against brute-force oracles")
    p.add_argument("weights", nargs="+", type=int)
    p.add_argument("--oracle", choices=["fiber", "matrix", "both"], default="both")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("paper-tables", parents=[common], help="regenerate the reference tables")
    p.set_defaults(func=cmd_paper_tables)
    return parser


def render_json(record: dict) -> str:
    return json.dumps(record, sort_keys=True, indent=2)


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    echo = {k: v for k, v in vars(args).items() if k not in ("func", "json", "quiet", "command")}
    try:
        result, text, code = args.func(args)
    except (UsageError, CapExceeded) as exc:
        if not args.quiet:
            print(f"coxeterkit {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    if not args.quiet:
        if args.json:
            print(render_json({"command": args.command, "input": echo, "result": result}))
        else:
            print(text)
    return code


if __name__ == "__main__":
    sys.exit(main())
