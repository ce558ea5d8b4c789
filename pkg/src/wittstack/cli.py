"""``wittstack`` command line.

Exit status: 0 on success, 1 on a domain error (bad mathematical input),
2 on a usage error (bad flags, unreadable or malformed spec files).
"""
from __future__ import annotations

import argparse
import json
import sys
from dataclasses import replace
from fractions import Fraction

from . import __version__
from .asw import asw_reduce, is_admissible, jumps_from_pole_orders, local_witt
from .base.laurent import laurent_expand
from .base.parse import parse_ratfunc, split_components
from .base.poly import Place
from .config import get_config, set_config
from .cover import CoverSpec, analyze_cover, quotient_report
from .errors import ParseError, WittstackError
from .filtration import Filtration, lower_to_upper, phi_from_filtration, upper_to_lower
from .garuti import boundary, boundary_closed_form, pull_psi
from .stacky import (StackyCurveData, canonical_divisor, canring_generators, fmt_q, genus,
                     hilbert_table, log_canonical_divisor)
from .witt import WittVector, frobenius, verschiebung, witt_add, witt_mul, witt_neg, wp

CURVE_SCHEMA = """curve spec JSON:
  {"p": int, "coarse_genus": int,
   "points": [{"label": str,
               "place": {"finite": int} | "infinity",
               "filtration": {"orders": [int...], "r": int}
                           | {"upper_jumps": [int...], "r": int}
                           | {"tame": int}}],
   "log_points": [str...]}"""


class UsageError(Exception):
    pass


def _ints(text: str) -> list[int]:
    try:
        return [int(v) for v in split_components(text)]
    except ValueError:
        raise UsageError(f"expected comma-separated integers, got {text!r}") from None


def _rats(text: str) -> list[Fraction]:
    try:
        return [Fraction(v.strip()) for v in split_components(text)]
    except ValueError:
        raise UsageError(f"expected comma-separated rationals, got {text!r}") from None


def _emit(args, table_lines, obj):
    if args.format == "json":
        print(json.dumps(obj, indent=2, sort_keys=False))
    else:
        for line in table_lines:
            print(line)


def _precision(args) -> int:
    return args.precision if args.precision is not None else get_config().default_precision


# witt ---------------------------------------------------------------------

def _parse_vector(text: str, p: int, n: int, prec: int) -> WittVector:
    parts = split_components(text)
    if len(parts) != n:
        raise UsageError(f"expected {n} components, got {len(parts)} in {text!r}")
    try:
        return WittVector(p, [int(v) for v in parts])
    except ValueError:
        pass
    zero = Place.finite(0)
    return local_witt(p, [laurent_expand(parse_ratfunc(v, p, var="t"), zero, prec) for v in parts])


def _comp_json(c):
    return c.value if hasattr(c, "value") else str(c)


def cmd_witt_eval(args):
    x = _parse_vector(args.lhs, args.p, args.n, _precision(args))
    binary = args.op in ("add", "mul")
    if binary and args.rhs is None:
        raise UsageError(f"--op {args.op} needs --rhs")
    if binary:
        y = _parse_vector(args.rhs, args.p, args.n, _precision(args))
        res = witt_add(x, y) if args.op == "add" else witt_mul(x, y)
    else:
        res = {"neg": witt_neg, "frob": frobenius, "versch": verschiebung, "wp": wp}[args.op](x)
    _emit(args, [f"{args.op}: {res}"],
          {"p": args.p, "n": args.n, "op": args.op, "result": [_comp_json(c) for c in res]})


# asw ----------------------------------------------------------------------

def _local_from_args(args):
    comps = split_components(args.components)
    if len(comps) != args.n:
        raise UsageError(f"expected {args.n} components, got {len(comps)}")
    prec = _precision(args)
    zero = Place.finite(0)
    return local_witt(args.p, [laurent_expand(parse_ratfunc(c, args.p, var="t"), zero, prec)
                               for c in comps])


def _asw_payload(args):
    red = asw_reduce(_local_from_args(args))
    ups = jumps_from_pole_orders(red.pole_orders, args.p)
    return red, ups, {
        "reduced_components": [str(c) for c in red.witt.components],
        "pole_orders": red.pole_orders,
        "upper_jumps": ups,
    }


def cmd_asw_jumps(args):
    _, ups, obj = _asw_payload(args)
    _emit(args, [f"upper_jumps = {', '.join(map(str, ups))}"], obj)


def cmd_asw_reduce(args):
    red, ups, obj = _asw_payload(args)
    obj["steps"] = red.steps
    lines = [f"reduced_components = {red.witt}",
             f"pole_orders = {', '.join(map(str, red.pole_orders))}",
             f"upper_jumps = {', '.join(map(str, ups))}"]
    lines += [f"  {s}" for s in red.steps]
    _emit(args, lines, obj)


def cmd_asw_admissible(args):
    u = _ints(args.jumps)
    ok = is_admissible(u, args.p)
    _emit(args, [f"admissible = {'yes' if ok else 'no'}"],
          {"p": args.p, "jumps": u, "admissible": ok})


# ram ----------------------------------------------------------------------

def cmd_ram_convert(args):
    seq = _rats(args.jumps)
    fn = lower_to_upper if args.direction == "up" else upper_to_lower
    out = fn(seq, args.r, args.p)
    key = "upper_jumps" if args.direction == "up" else "lower_jumps"
    _emit(args, [f"{key} = {', '.join(fmt_q(v) for v in out)}"],
          {"direction": args.direction, "input": [fmt_q(v) for v in seq],
           key: [fmt_q(v) for v in out]})


def cmd_ram_phi(args):
    f = Filtration(_ints(args.orders), args.r, args.p)
    phi = phi_from_filtration(f)
    lines = [f"orders = {', '.join(map(str, f.orders))}",
             f"lower_jumps = {', '.join(map(str, f.lower_jumps))}",
             f"upper_jumps = {', '.join(fmt_q(u) for u in f.upper_jumps())}"]
    lines += [f"  from {fmt_q(b)}: slope {fmt_q(s)}" for b, s in zip(phi.breakpoints, phi.slopes)]
    _emit(args, lines, {
        "orders": list(f.orders),
        "lower_jumps": f.lower_jumps,
        "upper_jumps": [fmt_q(u) for u in f.upper_jumps()],
        "phi": {"breakpoints": [fmt_q(b) for b in phi.breakpoints],
                "slopes": [fmt_q(s) for s in phi.slopes],
                "value0": fmt_q(phi.value0)},
    })


# garuti -------------------------------------------------------------------

def cmd_garuti_boundary(args):
    b = boundary_closed_form(args.n, args.p) if args.closed_form else boundary(args.n, args.p)
    if args.psi:
        b = pull_psi(b, args.p)
    _emit(args, [str(b)], b.to_json() | {"text": str(b)})


# stacky -------------------------------------------------------------------

def _load_curve(path) -> StackyCurveData:
    try:
        with open(path, encoding="utf-8") as fh:
            obj = json.load(fh)
    except (OSError, json.JSONDecodeError) as exc:
        raise UsageError(f"cannot read curve spec {path}: {exc}\n{CURVE_SCHEMA}") from None
    if not isinstance(obj, dict) or "p" not in obj:
        raise UsageError(f"{path} is not a curve spec\n{CURVE_SCHEMA}")
    return StackyCurveData.from_json(obj)


def cmd_stacky(args):
    c = _load_curve(args.spec)
    what = args.what
    if what == "canonical":
        K = log_canonical_divisor(c) if args.log else canonical_divisor(c)
        _emit(args, [str(K)], K.to_json() | {"text": str(K)})
    elif what == "genus":
        g = genus(c)
        _emit(args, [fmt_q(g)], {"genus": fmt_q(g)})
    elif what == "hilbert":
        tab = hilbert_table(c, args.max_degree, log=args.log)
        _emit(args, [f"{n}\t{v}" for n, v in enumerate(tab)], {"hilbert": tab})
    else:
        gens = canring_generators(c, args.max_degree, log=args.log)
        _emit(args, [f"degree {d}: {k}" for d, k in gens.items()] or ["none"],
              {"generators": {str(d): k for d, k in gens.items()}})


# cover --------------------------------------------------------------------

def _cover_spec(args) -> CoverSpec:
    comps = split_components(args.components)
    return CoverSpec(args.p, args.n, tuple(parse_ratfunc(c, args.p) for c in comps),
                     args.precision)


def _branch_json(b):
    return {"place": b.place.to_json(), "upper_jumps": b.upper_jumps,
            "lower_jumps": b.filtration.lower_jumps, "stab_order": b.filtration.stab_order,
            "filtration": b.filtration.to_json()}


def cmd_cover_analyze(args):
    an = analyze_cover(_cover_spec(args))
    lines = []
    for pt, b in zip(an.curve.points, an.branch):
        lines.append(f"{pt.label}: upper_jumps = {', '.join(map(str, b.upper_jumps))}; "
                     f"lower_jumps = {', '.join(map(str, b.filtration.lower_jumps))}; "
                     f"stab = {b.filtration.stab_order}")
    lines += [f"note: {s}" for s in an.notes]
    _emit(args, lines, {"branch": [_branch_json(b) for b in an.branch],
                        "curve": an.curve.to_json(), "notes": an.notes})


def cmd_cover_report(args):
    rep = quotient_report(_cover_spec(args), args.max_degree)
    lines = [f"K = {rep['K']}", f"deg K = {fmt_q(rep['degree'])}", f"genus = {fmt_q(rep['genus'])}",
             f"hilbert = {', '.join(map(str, rep['hilbert']))}"]
    cmp = rep["comparison"]
    obj = {"K": rep["K"].to_json(), "degree": fmt_q(rep["degree"]), "genus": fmt_q(rep["genus"]),
           "hilbert": rep["hilbert"], "notes": rep["notes"], "comparison": None}
    if cmp is not None:
        obj["comparison"] = {k: (fmt_q(v) if isinstance(v, Fraction) else v) for k, v in cmp.items()}
        lines.append(f"reference lower jumps {cmp['reference_lower_jumps']} vs derived "
                     f"{cmp['derived_lower_jumps']}: {'agree' if cmp['agree'] else 'disagree'}")
        lines.append(f"reference genus {fmt_q(cmp['reference_genus'])} vs derived {fmt_q(cmp['derived_genus'])}")
    lines += [f"note: {s}" for s in rep["notes"]]
    _emit(args, lines, obj)


def cmd_selftest(args):
    from .selftest import run_all
    results = run_all()
    bad = [r.number for r in results if not r.passed]
    print(f"{len(results) - len(bad)}/{len(results)} criteria passed"
          + (f"; failing: {', '.join(map(str, bad))}" if bad else ""))
    return 1 if bad else 0


# parser -------------------------------------------------------------------

def _common() -> argparse.ArgumentParser:
    # SUPPRESS lets the flags appear before or after the subcommand
    c = argparse.ArgumentParser(add_help=False)
    c.add_argument("--max-p", type=int, default=argparse.SUPPRESS)
    c.add_argument("--max-n", type=int, default=argparse.SUPPRESS)
    c.add_argument("--precision", type=int, default=argparse.SUPPRESS)
    c.add_argument("--format", choices=("table", "json"), default=argparse.SUPPRESS)
    return c


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    ap = argparse.ArgumentParser(prog="wittstack", parents=[common],
                                 description="Witt vectors, ramification and stacky curves.",
                                 epilog=CURVE_SCHEMA,
                                 formatter_class=argparse.RawDescriptionHelpFormatter)
    ap.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = ap.add_subparsers(dest="group", required=True)

    def group(name, help):
        g = sub.add_parser(name, help=help, parents=[common])
        return g.add_subparsers(dest="cmd", required=True)

    def leaf(g, name, fn, help):
        q = g.add_parser(name, help=help, parents=[common])
        q.set_defaults(func=fn)
        return q

    w = group("witt", "Witt vector arithmetic")
    q = leaf(w, "eval", cmd_witt_eval, "evaluate a Witt operation")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--op", choices=("add", "mul", "neg", "frob", "versch", "wp"), required=True)
    q.add_argument("--lhs", required=True)
    q.add_argument("--rhs")

    a = group("asw", "Artin-Schreier-Witt reduction and jumps")
    for name, fn in (("jumps", cmd_asw_jumps), ("reduce", cmd_asw_reduce)):
        q = leaf(a, name, fn, f"{name} of a local Witt vector over F_p((t))")
        q.add_argument("--p", type=int, required=True)
        q.add_argument("--n", type=int, required=True)
        q.add_argument("--components", required=True)
    q = leaf(a, "admissible", cmd_asw_admissible, "test an upper jump sequence")
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--jumps", required=True)

    r = group("ram", "ramification filtrations")
    q = leaf(r, "convert", cmd_ram_convert, "Herbrand translation of jumps")
    q.add_argument("--direction", choices=("up", "down"), required=True)
    q.add_argument("--jumps", required=True)
    q.add_argument("--r", type=int, default=1)
    q.add_argument("--p", type=int, required=True)
    q = leaf(r, "phi", cmd_ram_phi, "Herbrand function of a filtration")
    q.add_argument("--orders", required=True)
    q.add_argument("--r", type=int)
    q.add_argument("--p", type=int, default=0)

    g = group("garuti", "boundary divisors on the compactified Witt tower")
    q = leaf(g, "boundary", cmd_garuti_boundary, "boundary divisor B_n")
    q.add_argument("--n", type=int, required=True)
    q.add_argument("--p", type=int, required=True)
    q.add_argument("--closed-form", action="store_true")
    q.add_argument("--psi", action="store_true", help="print the pullback along Psi")

    s = group("stacky", "stacky curves from a JSON spec")
    for name in ("canonical", "genus", "hilbert", "generators"):
        q = leaf(s, name, cmd_stacky, f"{name} of a stacky curve")
        q.set_defaults(what=name)
        q.add_argument("spec")
        q.add_argument("--max-degree", type=int, default=12)
        q.add_argument("--log", action="store_true")

    c = group("cover", "Z/p^n-covers of P^1")
    for name, fn in (("analyze", cmd_cover_analyze), ("report", cmd_cover_report)):
        q = leaf(c, name, fn, f"{name} a cover given by rational functions in x")
        q.add_argument("--p", type=int, required=True)
        q.add_argument("--n", type=int, required=True)
        q.add_argument("--components", required=True)
        q.add_argument("--max-degree", type=int, default=10)

    q = sub.add_parser("selftest", help="run the oracle suite", parents=[common])
    q.set_defaults(func=cmd_selftest)
    return ap


def run(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    for key, val in (("format", get_config().output_format), ("precision", None),
                     ("max_p", None), ("max_n", None)):
        if not hasattr(args, key):
            setattr(args, key, val)
    old = get_config()
    try:
        cfg = old
        if args.max_p is not None:
            cfg = replace(cfg, max_p=args.max_p)
        if args.max_n is not None:
            cfg = replace(cfg, max_n=args.max_n)
        set_config(replace(cfg, output_format=args.format))
        return args.func(args) or 0
    except (UsageError, ParseError) as exc:
        print(f"wittstack: usage error: {exc}", file=sys.stderr)
        return 2
    except WittstackError as exc:
        print(f"wittstack: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    except (ValueError, ZeroDivisionError, ArithmeticError) as exc:
        print(f"wittstack: {type(exc).__name__}: {exc}", file=sys.stderr)
        return 1
    finally:
        set_config(old)


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
