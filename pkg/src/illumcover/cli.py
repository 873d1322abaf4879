"""Command-line interface.

Exit codes: 0 success, 1 negative verdict (failed verification or selftest),
2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from pathlib import Path

from . import covering
from .covering import EpsSpec
from .field import FieldElement, ParseError, SurdElement, format_rational
from .geometry import ConvexPolygon, GeometryError, circumball, contact_set, neg
from .shapes import (
    Disc,
    certificate_from_doc,
    certificate_to_doc,
    encode_scalar,
    loads,
    shape_from_doc,
)
from .svg import render_svg

REPORT_VERSION = "1"


class UsageError(Exception):
    pass


def _read_text(arg: str) -> str:
    if arg == "-":
        return sys.stdin.read()
    if arg.lstrip().startswith("{"):
        return arg
    try:
        return Path(arg).read_text()
    except OSError as exc:
        raise UsageError(f"cannot read {arg}: {exc.strerror}") from None


def _load_shape(arg: str):
    return shape_from_doc(loads(_read_text(arg)))


def _polygon(body) -> ConvexPolygon:
    if not isinstance(body, ConvexPolygon):
        raise UsageError("this command needs a polygon shape")
    return body


def _human(x) -> str:
    if isinstance(x, (FieldElement, SurdElement)):
        if isinstance(x, FieldElement) and x.is_rational():
            return format_rational(x.coeffs[0])
        return f"~{float(x):.6g}"
    return format_rational(x)


def _hpt(p) -> str:
    return "(" + ", ".join(_human(c) for c in p) + ")"


def _jpt(p) -> list:
    return [encode_scalar(c) for c in p]


# ---------------------------------------------------------------- commands


def cmd_circumball(args):
    K = _polygon(_load_shape(args.shape))
    ball = circumball(K)
    contacts = contact_set(K, ball)
    report = {
        "center": _jpt(ball.center),
        "radius_sq": encode_scalar(ball.radius_sq),
        "contacts": [_jpt(v) for v in contacts],
    }
    text = [
        f"center     {_hpt(ball.center)}",
        f"radius^2   {_human(ball.radius_sq)}",
        "contacts   " + " ".join(_hpt(v) for v in contacts),
    ]
    return 0, report, text


def cmd_numbers(args):
    K = _polygon(_load_shape(args.shape))
    i, idirs = covering.number_i(K)
    c, cdirs = covering.number_c(K)
    tb = covering.number_t_bounds(K)
    report = {
        "i": i,
        "c": c,
        "t": [tb.lo, tb.hi],
        "i_directions": [_jpt(d) for d in idirs],
        "c_directions": [_jpt(d) for d in cdirs],
        "t_cover": [_jpt(t) for t in tb.certificate],
    }
    text = [f"i = {i}", f"c = {c}", f"t in [{tb.lo}, {tb.hi}]"]
    return 0, report, text


def _quantified(body, eps: EpsSpec, mode: str, budget: int):
    if isinstance(body, Disc):
        e = eps.value * body.radius if eps.kind == "circumradius" else eps.value
        return covering.disc_quantified(body.radius, e, mode)
    return covering.quantified_count(_polygon(body), eps, mode, budget=budget)


def _parse_eps(text: str) -> EpsSpec:
    try:
        return EpsSpec.parse(text)
    except (ValueError, ZeroDivisionError, GeometryError) as exc:
        raise UsageError(f"bad --eps {text!r}: {exc}") from None


def cmd_quantified(args):
    body = _load_shape(args.shape)
    eps = _parse_eps(args.eps)
    result = _quantified(body, eps, args.mode, args.budget)
    report = {"verdict": result.verdict, "eps": str(eps), "mode": args.mode}
    text = [repr(result)]
    if result.is_finite:
        report["m"] = result.m
        report["translations"] = [_jpt(t) for t in result.certificate]
        text.append("translations " + " ".join(_hpt(t) for t in result.certificate))
    elif result.is_infinite:
        report["witness"] = _jpt(result.witness)
        text.append(f"witness {_hpt(result.witness)}")
    else:
        report["lower_bound"] = result.lower_bound
        report["budget_exhausted"] = True
    if args.cert:
        doc = certificate_to_doc(body, eps, args.mode, result)
        Path(args.cert).write_text(json.dumps(doc, indent=2) + "\n")
        report["certificate"] = args.cert
        text.append(f"certificate written to {args.cert}")
    return 0, report, text


def cmd_finiteness(args):
    K = _polygon(_load_shape(args.shape))
    cert = covering.finite_at_circumradius(K)
    report = {
        "verdict": cert.verdict,
        "center": _jpt(cert.center),
        "radius_sq": encode_scalar(cert.radius_sq),
        "contacts": [_jpt(v) for v in cert.contact_vertices],
    }
    text = [f"finite at R: {str(cert.verdict).lower()}", "contacts " + " ".join(_hpt(v) for v in cert.contact_vertices)]
    if cert.gap_witness is not None:
        g = cert.gap_witness.floats()
        report["gap_direction"] = list(g)
        text.append(f"uncovered direction ~({g[0]:.6g}, {g[1]:.6g})")
    return 0, report, text


def cmd_verify(args):
    doc = loads(_read_text(args.certificate))
    body, eps, mode, result = certificate_from_doc(doc)
    if isinstance(body, Disc):
        e = eps.value * body.radius if eps.kind == "circumradius" else eps.value
        ok = body.center == (0, 0) and covering.verify_disc(body.radius, e, mode, result)
    else:
        ok = covering.verify_count(_polygon(body), eps, mode, result)
    report = {"verified": ok, "verdict": result.verdict}
    return (0 if ok else 1), report, [f"{'verified' if ok else 'REJECTED'}: {result!r}"]


def cmd_svg(args):
    K = _polygon(_load_shape(args.shape))
    translations = []
    title = args.title or ""
    if args.eps:
        result = covering.quantified_count(K, _parse_eps(args.eps), args.mode, budget=args.budget)
        if result.is_finite:
            translations = [neg(t) for t in result.certificate]
    svg = render_svg(K, translations, title)
    Path(args.out).write_text(svg)
    return 0, {"out": args.out, "translates": len(translations)}, [f"wrote {args.out}"]


def _selftest_checks(seed=None):
    from fractions import Fraction

    from .geometry import make_polygon
    from .oracle import DEFAULT_SEED, NoCounterexample, SampleConfig, sample_cover_check
    from .shapes import regular_ngon

    sq = make_polygon([(Fraction(-1), Fraction(-1)), (Fraction(1), Fraction(-1)),
                       (Fraction(1), Fraction(1)), (Fraction(-1), Fraction(1))])
    tri = make_polygon([(Fraction(0), Fraction(0)), (Fraction(4), Fraction(0)), (Fraction(0), Fraction(3))])
    hexagon = regular_ngon(6)
    R = EpsSpec.circumradius(1)
    yield "square i=2, c=4", covering.number_i(sq)[0] == 2 and covering.number_c(sq)[0] == 4
    yield "triangle infinite at R", not covering.finite_at_circumradius(tri).verdict
    res = covering.quantified_count(hexagon, R, "closed")
    yield "hexagon Finite(3) at R", res.is_finite and res.m == 3 and covering.verify_count(hexagon, R, "closed", res)
    cfg = SampleConfig(seed=DEFAULT_SEED if seed is None else seed, mc_samples=20_000)
    back = [neg(t) for t in res.certificate]
    yield "sampling oracle agrees on the hexagon cover", sample_cover_check(hexagon, back, "closed", cfg) is NoCounterexample
    yield "disc 3 at eps=1", covering.disc_quantified(1, 1).m == 3


def cmd_selftest(args):
    results = list(_selftest_checks(args.seed))
    ok = all(r for _, r in results)
    text = [f"{'PASS' if r else 'FAIL'} {name}" for name, r in results]
    return (0 if ok else 1), {"checks": {n: r for n, r in results}, "ok": ok}, text


# ---------------------------------------------------------------- entry point


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="illumcover", description="Illumination and covering numbers of convex bodies.")
    p.add_argument("--json", action="store_true", help="print a machine-readable JSON report")
    p.add_argument("--seed", type=int, default=None, help="seed for sampling subpaths")
    sub = p.add_subparsers(dest="command", required=True)

    def shape_cmd(name, func, help_):
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("shape", help="shape JSON file, '-' for stdin, or inline JSON")
        sp.set_defaults(func=func)
        return sp

    shape_cmd("circumball", cmd_circumball, "smallest enclosing circle and contact vertices")
    shape_cmd("numbers", cmd_numbers, "classical numbers i, c and bounds on t")
    q = shape_cmd("quantified", cmd_quantified, "quantified number at step length eps")
    q.add_argument("--eps", required=True, help='"p/q", "R" or "p/q*R"')
    q.add_argument("--mode", choices=["closed", "open"], default="closed")
    q.add_argument("--budget", type=int, default=covering.DEFAULT_BUDGET)
    q.add_argument("--cert", help="write the certificate JSON here")
    shape_cmd("finiteness", cmd_finiteness, "is the closed number finite at eps = R")
    v = sub.add_parser("verify", help="re-verify a certificate")
    v.add_argument("certificate")
    v.set_defaults(func=cmd_verify)
    s = shape_cmd("svg", cmd_svg, "draw the body, circumcircle and covering translates")
    s.add_argument("--out", required=True)
    s.add_argument("--eps")
    s.add_argument("--mode", choices=["closed", "open"], default="closed")
    s.add_argument("--budget", type=int, default=covering.DEFAULT_BUDGET)
    s.add_argument("--title")
    t = sub.add_parser("selftest", help="run a few known cases")
    t.set_defaults(func=cmd_selftest)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        code, report, text = args.func(args)
    except (UsageError, ParseError, GeometryError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    if args.json:
        report = {"report_version": REPORT_VERSION, "command": args.command, **report}
        print(json.dumps(report, indent=2))
    else:
        print("\n".join(text))
    return code


if __name__ == "__main__":
    sys.exit(main())
