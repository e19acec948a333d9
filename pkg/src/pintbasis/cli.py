"""Command-line front end.

Commands:
  classify  -f POLY -p P                  factorization case of a quartic
  polygon   -f POLY -p P [--phi POLY] [--svg PATH] [--json]
  basis     -f POLY -p P [--method auto|generic|quartic|order2] [--json]
  factor    -f POLY -p P [--json]         decomposition type (e, f pairs)
  verify    -f POLY -p P [--json]         construction vs saturation oracle
  verify    --corpus N [--seed S] [-p P]  reproducible random corpus check
  oracle    -f POLY -p P [--json]         saturation only

Exit codes: 0 ok, 1 verification mismatch, 2 bad input or precondition.
"""

import argparse
import json
import sys

from .arith import check_prime
from .errors import NotRegularError, PintbasisError
from .factor import DEFAULT_SEED, is_irreducible, is_irreducible_quartic
from .intpoly import IntPoly, parse_poly
from .newton import (
    newton_polygon,
    phi_expand,
    polygon_to_json,
    polygon_to_svg,
    principal_part,
)
from .oracle import disc_identity_check, is_ring_closed, saturate
from .basis import decomposition_type, p_integral_basis_regular
from .quartic import classify, quartic_p_integral_basis


def _parse_f(args):
    f = parse_poly(args.f)
    if not f.monic or f.degree < 2:
        raise PintbasisError("f must be monic of degree >= 2")
    return f


def _quartic_coeffs(f):
    if f.degree != 4 or f[3] != 0:
        return None
    return f[2], f[1], f[0]


def cmd_classify(args, out):
    f = _parse_f(args)
    abc = _quartic_coeffs(f)
    if abc is None:
        raise PintbasisError("classify expects a quartic x^4+ax^2+bx+c")
    case = classify(*abc, args.p)
    out(case.value)
    return 0


def cmd_polygon(args, out):
    f = _parse_f(args)
    if args.phi:
        phis = [parse_poly(args.phi)]
    else:
        from .factor import factor_mod_p

        phis = [phi for phi, _ in factor_mod_p(f, args.p, args.seed)]
    payload = []
    for i, phi in enumerate(phis):
        polygon = newton_polygon(phi_expand(f, phi), args.p)
        principal = principal_part(polygon)
        payload.append({"phi": phi.render("x"), "polygon": polygon_to_json(polygon),
                        "principal": polygon_to_json(principal)})
        if args.svg:
            path = args.svg if len(phis) == 1 else f"{args.svg}.{i}.svg"
            with open(path, "w") as fh:
                fh.write(polygon_to_svg(polygon))
    if args.json:
        out(json.dumps(payload if len(payload) > 1 else payload[0], indent=2))
    else:
        for entry in payload:
            out(f"phi = {entry['phi']}")
            for side in entry["principal"]["sides"]:
                out(
                    f"  side slope {side['slope']}  length {side['length']}  "
                    f"degree {side['degree']}  ramification {side['ramification']}"
                )
            if not entry["principal"]["sides"]:
                out("  principal polygon is empty")
    return 0


def _compute_basis(f, p, method, seed):
    abc = _quartic_coeffs(f)
    if method == "quartic" or method == "order2":
        if abc is None:
            raise PintbasisError(f"--method {method} expects a quartic x^4+ax^2+bx+c")
        basis = quartic_p_integral_basis(*abc, p, seed)
        if method == "order2" and not basis.meta.get("order2"):
            raise PintbasisError("input does not route through a second-order polygon")
        return basis, basis.meta.get("case", "quartic")
    if method == "generic":
        return p_integral_basis_regular(f, p, seed=seed), "generic"
    # auto: prefer the generic p-regular path, fall back to the quartic
    # pipeline (which covers the order-2 cases internally)
    try:
        basis = p_integral_basis_regular(f, p, seed=seed)
        return basis, "generic"
    except NotRegularError:
        if abc is None:
            raise
        basis = quartic_p_integral_basis(*abc, p, seed)
        path = "quartic+order2" if basis.meta.get("order2") else "quartic"
        return basis, path


def cmd_basis(args, out):
    f = _parse_f(args)
    basis, path = _compute_basis(f, args.p, args.method, args.seed)
    if args.json:
        try:
            dec = decomposition_type(f, args.p, seed=args.seed)
        except PintbasisError:
            dec = None
        payload = basis.to_json(dec)
        payload["path"] = path
        out(json.dumps(payload, indent=2))
    else:
        out(basis.render())
        out(f"index valuation: {basis.index_valuation}   (path: {path}"
            + (f", rows: {','.join(basis.meta['rows'])}" if basis.meta.get("rows") else "")
            + ")")
    return 0


def cmd_factor(args, out):
    f = _parse_f(args)
    dec = decomposition_type(f, args.p, seed=args.seed)
    if args.json:
        out(json.dumps({
            "complete": dec.complete,
            "entries": [
                {"phi": e.phi.render("x"), "slope": str(e.slope),
                 "residual_factor": repr(e.residual_factor),
                 "multiplicity": e.multiplicity, "e": e.e, "f": e.f}
                for e in dec.entries
            ]}, indent=2))
    else:
        for e in dec.entries:
            ef = f"e={e.e} f={e.f}" if e.e else "e,f unknown (multiple residual factor)"
            out(f"phi={e.phi.render('x')}  slope {e.slope}  "
                f"residual factor {e.residual_factor!r}^{e.multiplicity}  {ef}")
        out("complete" if dec.complete else "incomplete")
    return 0


def _verify_one(f, p, seed, out, label=""):
    basis, path = _compute_basis(f, p, "auto", seed)
    oracle = saturate(f, p)
    ok = basis.elements == oracle.elements
    checks = {
        "construction == oracle": ok,
        "disc identity": disc_identity_check(f, p, basis),
        "ring closed": is_ring_closed(f, basis, p),
        "oracle disc identity": disc_identity_check(f, p, oracle),
    }
    dec = decomposition_type(f, p, seed=seed)
    if dec.complete:
        checks["sum e*f = deg f"] = sum(e.e * e.f for e in dec.entries) == f.degree
    good = all(checks.values())
    status = "ok" if good else "MISMATCH"
    out(f"{label}verify {f.render()} at p={p}: {status} "
        f"(path {path}, ind={basis.index_valuation})")
    if not good:
        for name, val in checks.items():
            if not val:
                out(f"  FAILED: {name}")
        out(f"  constructed: {basis.render()}")
        out(f"  oracle:      {oracle.render()}")
    return good


def cmd_verify(args, out):
    if args.corpus:
        import random

        rng = random.Random(args.seed)
        bad = 0
        done = 0
        while done < args.corpus:
            a, b, c = (rng.randint(-200, 200) for _ in range(3))
            p = args.p or rng.choice([2, 3, 5, 7, 13])
            if not is_irreducible_quartic(a, b, c):
                continue
            f = IntPoly.monic_quartic(a, b, c)
            if f.discriminant() % p:
                continue
            done += 1
            if not _verify_one(f, p, args.seed, out, label=f"[{done}] "):
                bad += 1
        out(f"corpus: {done - bad}/{done} ok")
        return 1 if bad else 0
    f = _parse_f(args)
    if f.degree == 4 and f[3] == 0:
        if not is_irreducible_quartic(f[2], f[1], f[0]):
            raise PintbasisError("f is reducible over Q")
    elif is_irreducible(f) is False:
        raise PintbasisError("f is reducible over Q")
    return 0 if _verify_one(f, args.p, args.seed, out) else 1


def cmd_oracle(args, out):
    f = _parse_f(args)
    basis = saturate(f, args.p)
    if args.json:
        out(json.dumps(basis.to_json(), indent=2))
    else:
        out(basis.render())
        out(f"index valuation: {basis.index_valuation}")
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="pintbasis",
        description="p-integral bases of number fields via Newton polygons",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(sp, need_f=True, need_p=True):
        if need_f:
            sp.add_argument("-f", required=need_f, help="monic integer polynomial, e.g. 'x^4+2x^2-4x+2'")
        if need_p:
            sp.add_argument("-p", type=int, required=need_p, help="prime")
        sp.add_argument("--seed", type=int, default=DEFAULT_SEED,
                        help="seed for the randomized finite-field splitting")
        sp.add_argument("--json", action="store_true")

    sp = sub.add_parser("classify", help="factorization case of a quartic mod p")
    common(sp)
    sp.set_defaults(func=cmd_classify)

    sp = sub.add_parser("polygon", help="Newton polygon data (text/JSON/SVG)")
    common(sp)
    sp.add_argument("--phi", help="monic lift to use (default: all factors of f mod p)")
    sp.add_argument("--svg", help="write an SVG rendering to this path")
    sp.set_defaults(func=cmd_polygon)

    sp = sub.add_parser("basis", help="p-integral basis")
    common(sp)
    sp.add_argument("--method", choices=["auto", "generic", "quartic", "order2"],
                    default="auto")
    sp.set_defaults(func=cmd_basis)

    sp = sub.add_parser("factor", help="decomposition type of p (e, f invariants)")
    common(sp)
    sp.set_defaults(func=cmd_factor)

    sp = sub.add_parser("verify", help="construction vs the saturation oracle")
    sp.add_argument("-f", help="polynomial (omit with --corpus)")
    sp.add_argument("-p", type=int, help="prime (with --corpus: fix the prime)")
    sp.add_argument("--corpus", type=int, default=0,
                    help="verify N pseudorandom irreducible quartics")
    sp.add_argument("--seed", type=int, default=DEFAULT_SEED)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_verify)

    sp = sub.add_parser("oracle", help="brute-force saturation basis")
    common(sp)
    sp.set_defaults(func=cmd_oracle)
    return parser


def main(argv=None, stdout=None):
    stdout = stdout if stdout is not None else sys.stdout

    def out(line):
        print(line, file=stdout)

    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    if args.command == "verify" and not args.corpus and not args.f:
        out("verify needs -f POLY or --corpus N")
        return 2
    if args.command == "verify" and not args.corpus and args.p is None:
        out("verify needs -p P")
        return 2
    try:
        if getattr(args, "p", None) is not None:
            check_prime(args.p)
        return args.func(args, out)
    except PintbasisError as exc:
        out(f"error: {exc}")
        return 2
    except ValueError as exc:
        out(f"error: {exc}")
        return 2


if __name__ == "__main__":
    sys.exit(main())
