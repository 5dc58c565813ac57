"""Command line front end.  Every subcommand prints one JSON document.

Exit status 0 on success, 1 on malformed input, 2 when the input is well
formed but violates a mathematical precondition.
"""
import argparse
import json
import sys
from decimal import Decimal, localcontext
from fractions import Fraction

from . import diophantine, fano_rank1, generators, polytope, simplex_bounds, sylvester, toric
from .exact import INF, as_fraction, format_rational


class MalformedInput(Exception):
    pass


class DomainError(Exception):
    def __init__(self, code, message, data=None):
        super().__init__(message)
        self.code = code
        self.data = data or {}


# -- input ---------------------------------------------------------------------

def _load(args, required=True):
    if args.file and args.json:
        raise MalformedInput("pass either --file or --json, not both")
    try:
        if args.file:
            with open(args.file) as fh:
                return json.load(fh)
        if args.json:
            return json.loads(args.json)
    except (OSError, json.JSONDecodeError) as exc:
        raise MalformedInput(f"cannot read JSON input: {exc}") from None
    if required:
        raise MalformedInput("this subcommand needs --file or --json")
    return None


def _rational(value):
    try:
        return as_fraction(value)
    except (TypeError, ValueError, ZeroDivisionError) as exc:
        raise MalformedInput(f"not an exact rational: {value!r} ({exc})") from None


def _rationals(values):
    if not isinstance(values, list):
        raise MalformedInput(f"expected a list, got {values!r}")
    return tuple(_rational(v) for v in values)


def _csv_rationals(text):
    return tuple(_rational(t) for t in text.split(",") if t.strip())


def _read_polytope(data):
    if not isinstance(data, dict):
        raise MalformedInput("a polytope is a JSON object")
    try:
        if data.get("vertices"):
            return polytope.Polytope.from_vertices([_rationals(v) for v in data["vertices"]])
        if data.get("halfspaces"):
            hs = [polytope.HalfSpace.canonical(h["normal"], _rational(h["offset"]))
                  for h in data["halfspaces"]]
            return polytope.Polytope.from_halfspaces(hs, data.get("dim"))
    except (KeyError, TypeError) as exc:
        raise MalformedInput(f"bad polytope description: {exc}") from None
    raise MalformedInput("a polytope needs 'vertices' or 'halfspaces'")


def _write_polytope(poly):
    out = {"dim": poly.dim,
           "vertices": [[format_rational(x) for x in v] for v in poly.vertices]}
    if poly.facets:
        out["halfspaces"] = [{"normal": list(h.normal), "offset": format_rational(h.offset)}
                             for h in poly.facets]
    return out


def _read_pair(data):
    if not isinstance(data, dict) or "rays" not in data or "a" not in data:
        raise MalformedInput("a toric pair needs 'rays' and 'a'")
    try:
        rays = [[int(x) for x in e] for e in data["rays"]]
    except (TypeError, ValueError):
        raise MalformedInput("rays must be integer vectors") from None
    return toric.ToricLogPair.from_dict({**data, "rays": rays, "a": list(_rationals(data["a"]))})


def _read_divisor(data, key="l"):
    if data.get(key) is None:
        return None
    return _rationals(data[key])


# -- output --------------------------------------------------------------------

def _approx(value, digits=20):
    if value is INF:
        return "inf"
    frac = as_fraction(value)
    with localcontext() as ctx:
        ctx.prec = digits
        return str(Decimal(frac.numerator) / Decimal(frac.denominator))


def _add_approx(out):
    approx = {}
    for key, value in out.items():
        if isinstance(value, str):
            try:
                approx[key] = _approx(INF if value == "inf" else as_fraction(value))
            except (ValueError, ZeroDivisionError):
                continue
    out["approx"] = approx
    return out


def _emit(out, stream):
    stream.write(json.dumps(out, sort_keys=True, indent=2) + "\n")


# -- subcommands ---------------------------------------------------------------

def cmd_sylvester(args):
    p, q = args.p, args.q
    report = sylvester.identity_checks(p, q)
    return {"p": p, "q": q, "u": str(sylvester.u(p, q)),
            "terms": [str(t) for t in sylvester.sylvester_terms(p, q)],
            "identities": "pass" if report.passed else "fail",
            "checks": report.as_dict()}


def _polytope_and_point(args):
    data = _load(args)
    poly = _read_polytope(data)
    point = _rationals(data["point"]) if data.get("point") is not None else (Fraction(0),) * poly.dim
    return data, poly, point


def cmd_gamma_point(args):
    _, poly, point = _polytope_and_point(args)
    g = polytope.gamma_point(point, poly)
    out = {"gamma": format_rational(g), "point": [format_rational(x) for x in point]}
    if g > 0:
        out["asymmetry"] = format_rational(1 / g - 1)
    return out


def cmd_dual(args):
    data = _load(args)
    return _write_polytope(polytope.dual(_read_polytope(data)))


def cmd_width(args):
    data = _load(args)
    poly = _read_polytope(data)
    if data.get("direction") is None:
        raise MalformedInput("width needs a 'direction'")
    return {"width": format_rational(polytope.width(poly, _rationals(data["direction"])))}


def cmd_lattice_points(args):
    data = _load(args)
    poly = _read_polytope(data)
    mode = data.get("mode", "closed")
    if mode not in ("closed", "interior"):
        raise MalformedInput("mode must be 'closed' or 'interior'")
    pts = polytope.lattice_points(poly, mode)
    return {"mode": mode, "count": len(pts), "points": [list(p) for p in pts]}


def cmd_volume(args):
    poly = _read_polytope(_load(args))
    return {"normalizedVolume": format_rational(polytope.normalized_volume(poly))}


def cmd_lhn_solve(args):
    if args.x is None or args.c is None or args.q is None:
        raise MalformedInput("lhn-solve needs --q, --c and --x")
    x, c = _csv_rationals(args.x), _csv_rationals(args.c)
    try:
        sol = diophantine.solve_lhn(x, c, args.q)
    except diophantine.ExtremalInstanceError as exc:
        raise DomainError("extremal-instance", str(exc), {"x": [format_rational(v) for v in x]})
    except diophantine.HypothesisError as exc:
        raise DomainError("hypothesis", str(exc))
    return sol.as_dict()


def cmd_simplex_verify(args):
    data = _load(args)
    if args.q is None:
        raise MalformedInput("simplex-verify needs --q")
    verts = data.get("vertices") if isinstance(data, dict) else data
    if not verts:
        raise MalformedInput("simplex-verify needs 'vertices'")
    fractional = any(_rational(x).denominator != 1 for v in verts for x in v)
    if fractional:
        return simplex_bounds.verify_bl([_rationals(v) for v in verts], args.q).as_dict()
    return simplex_bounds.verify_ss([[int(x) for x in v] for v in verts], args.q).as_dict()


def cmd_census(args):
    return simplex_bounds.enumerate_and_verify(args.d or 2, args.radius or 4, args.q or 1).as_dict()


def _random_pairs(args, count):
    rng = generators.rng_from(args.seed)
    out = []
    for _ in range(count):
        d = rng.randint(1, args.d or 2)
        pair = generators.random_toric_pair(rng, d)
        out.append((pair, generators.random_divisor(rng, pair)))
    return out


def cmd_toric_alpha(args):
    data = _load(args)
    pair = _read_pair(data)
    l = _read_divisor(data)
    out = {"pair": pair.as_dict()}
    per_ray = toric.alpha_per_ray(pair, l)
    out["alpha"] = format_rational(min(per_ray, default=INF))
    out["perRay"] = [format_rational(v) for v in per_ray]
    out["widths"] = [format_rational(toric.width_at(pair, l, i)) for i in range(len(pair.rays))]
    out["fixedMults"] = [format_rational(toric.fixed_mult_at(pair, l, i))
                         for i in range(len(pair.rays))]
    if data.get("lct") is not None:
        out["lct"] = format_rational(toric.lct_invariant(pair, _rationals(data["lct"])))
    if data.get("system") is not None:
        system = toric.FiniteLinearSystem(toric.InvariantDivisor(l or pair.a),
                                          tuple(_rationals(m) for m in data["system"]))
        g, rays = toric.gamma_finite_system(pair, system)
        out["systemGamma"] = format_rational(g)
        out["systemPerRay"] = [format_rational(v) for v in rays]
    return out


def cmd_toric_mld(args):
    pair = _read_pair(_load(args))
    return {"pair": pair.as_dict(), "mld": format_rational(toric.mld(pair)),
            "gammaAnticanonical": format_rational(toric.gamma_anticanonical(pair)),
            "momentPolytope": _write_polytope(toric.moment_polytope(pair))}


def _pair_checks(pair, l, q):
    out = {"pair": pair.as_dict()}
    if l is not None:
        out["l"] = [format_rational(v) for v in l]
    target = l if l is not None else pair.a
    try:
        out["corollaryG0"] = toric.corollary_g0_check(pair, target).as_dict()
    except simplex_bounds.PreconditionError as exc:
        out["corollaryG0"] = {"skipped": str(exc)}
    try:
        out["slInequality"] = toric.sl_inequality_check(pair, target).as_dict()
    except simplex_bounds.PreconditionError as exc:
        out["slInequality"] = {"skipped": str(exc)}
    m = toric.mld(pair)
    if q is None:
        q = 1 if m == 0 else -(-m.denominator // m.numerator)
    if m > 0:
        out["gbAndVb"] = toric.gb_vb_checks(pair, q).as_dict()
    passed = all(v.get("passed", True) for k, v in out.items() if isinstance(v, dict) and k != "pair")
    out["passed"] = passed
    return out


def cmd_toric_check(args):
    data = _load(args, required=args.seed is None)
    if data is None:
        reports = [_pair_checks(p, l, None) for p, l in _random_pairs(args, args.count)]
        return {"seed": args.seed, "count": len(reports),
                "passed": all(r["passed"] for r in reports), "reports": reports}
    return _pair_checks(_read_pair(data), _read_divisor(data), args.q)


def cmd_product_check(args):
    data = _load(args, required=args.seed is None)
    if data is None:
        items = _random_pairs(args, 2 * args.count)
        checks = [toric.product_alpha_check(p1, l1, p2, l2).as_dict()
                  for (p1, l1), (p2, l2) in zip(items[::2], items[1::2])]
        return {"seed": args.seed, "count": len(checks),
                "passed": all(c["passed"] for c in checks), "checks": checks}
    try:
        first, second = data["first"], data["second"]
    except (KeyError, TypeError):
        raise MalformedInput("product-check needs 'first' and 'second' pairs") from None
    p1, p2 = _read_pair(first), _read_pair(second)
    return toric.product_alpha_check(p1, _read_divisor(first), p2, _read_divisor(second)).as_dict()


def cmd_rank1_analyze(args):
    data = _load(args)
    if not isinstance(data, dict) or "x" not in data or "a" not in data:
        raise MalformedInput("rank-one data needs 'x' and 'a'")
    f = fano_rank1.RankOneFano(x=_rationals(data["x"]), a=_rationals(data["a"]))
    eps = _rational(args.epsilon) if args.epsilon is not None else None
    return fano_rank1.analyze(f, eps)


def cmd_rank1_extremal(args):
    d, q = args.d or 2, args.q or 1
    f = fano_rank1.extremal_example(d, q)
    alpha, r = fano_rank1.alpha_and_cartier(f)
    pair = fano_rank1.to_toric_pair(f)
    return {"d": d, "q": q, "x": [format_rational(v) for v in f.x],
            "a": [format_rational(v) for v in f.a], "rays": [list(e) for e in pair.rays],
            "alpha": format_rational(alpha), "mld": format_rational(fano_rank1.mld_scan(f)),
            "cartierIndex": r,
            "volumeQScaled": format_rational(fano_rank1.volume_q_scaled(f, q))}


def cmd_fano_census(args):
    eps = _rational(args.epsilon) if args.epsilon is not None else Fraction(1)
    census = toric.fano_finiteness_census(args.d or 2, eps, args.radius or 1)
    return census.as_dict()


COMMANDS = {
    "sylvester": cmd_sylvester,
    "gamma-point": cmd_gamma_point,
    "dual": cmd_dual,
    "width": cmd_width,
    "lattice-points": cmd_lattice_points,
    "volume": cmd_volume,
    "lhn-solve": cmd_lhn_solve,
    "simplex-verify": cmd_simplex_verify,
    "census": cmd_census,
    "toric-alpha": cmd_toric_alpha,
    "toric-mld": cmd_toric_mld,
    "toric-check": cmd_toric_check,
    "product-check": cmd_product_check,
    "rank1-analyze": cmd_rank1_analyze,
    "rank1-extremal": cmd_rank1_extremal,
    "fano-census": cmd_fano_census,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise MalformedInput(message)


def build_parser():
    parser = _Parser(prog="toric-alpha", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name in COMMANDS:
        p = sub.add_parser(name)
        p.add_argument("--file")
        p.add_argument("--json")
        p.add_argument("--p", type=int, default=None)
        p.add_argument("--q", type=int, default=None)
        p.add_argument("--d", type=int, default=None)
        p.add_argument("--epsilon")
        p.add_argument("--radius", type=int, default=None)
        p.add_argument("--seed", type=int, default=None)
        p.add_argument("--count", type=int, default=10)
        p.add_argument("--x")
        p.add_argument("--c")
        p.add_argument("--approx", action="store_true")
    return parser


def run(argv=None, stdout=None):
    stdout = stdout or sys.stdout
    try:
        args = build_parser().parse_args(argv)
        if args.command == "sylvester" and (args.p is None or args.q is None):
            raise MalformedInput("sylvester needs --p and --q")
        out = COMMANDS[args.command](args)
    except MalformedInput as exc:
        _emit({"code": "malformed-input", "message": str(exc), "data": {}}, stdout)
        return 1
    except DomainError as exc:
        _emit({"code": exc.code, "message": str(exc), "data": exc.data}, stdout)
        return 2
    except simplex_bounds.PreconditionError as exc:
        _emit({"code": "precondition", "message": str(exc), "data": exc.data}, stdout)
        return 2
    except (ValueError, ArithmeticError) as exc:
        _emit({"code": type(exc).__name__, "message": str(exc), "data": {}}, stdout)
        return 2
    if args.approx:
        out = _add_approx(out)
    _emit(out, stdout)
    return 0


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
