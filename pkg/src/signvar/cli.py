"""Command-line front end: ``signvar <verb> ...``.

Exit status is 0 on success, 1 when a verification suite finds a
counterexample (or a theorem-backed bound comes out inconsistent), and 2 for
usage and input errors.
"""

import argparse
import json
import math
import sys
from pathlib import Path

from signvar import kernels
from signvar.counting import (
    Interval,
    budan_fourier,
    count_closedopen,
    count_halfopen,
    descartes_bound,
    descartes_bound_negative,
)
from signvar.errors import InvariantViolation, ParseError, SignvarError
from signvar.isolation import isolate, refine
from signvar.oracle import sturm_chain, sturm_count, zero_count
from signvar.parsing import format_expr, parse_polynomial, parse_rational, parse_sequence
from signvar.signs import sign_sequence, variation_count, variations_at
from signvar.verify import DEFAULT_SUITES, SUITES, check_sign_lemmas, run_case, run_suite


class UsageError(Exception):
    pass


def _rational_arg(text):
    try:
        return parse_rational(text)
    except ParseError as exc:
        raise argparse.ArgumentTypeError(str(exc)) from None


def _endpoint_arg(text):
    t = text.strip().lower()
    if t in ("inf", "+inf", "oo"):
        return math.inf
    if t in ("-inf", "-oo"):
        return -math.inf
    return _rational_arg(text)


def _add_poly_source(p, required=True):
    p.add_argument("poly", nargs="?", help="polynomial in expression form, e.g. 'x^2 - 3x + 2'")
    p.add_argument("--dense", metavar="COEFFS", help="ascending-degree coefficients, e.g. '2 -3 1'")
    p.add_argument("--file", metavar="PATH", help="UTF-8 file holding one polynomial (dense or expression form)")
    p.set_defaults(_poly_required=required)


def _load_poly(args):
    sources = [s for s in (args.poly, args.dense, args.file) if s is not None]
    if len(sources) != 1:
        if not sources and not args._poly_required:
            return None
        raise UsageError("give exactly one polynomial source: POLY, --dense or --file")
    if args.poly is not None:
        f = parse_polynomial(args.poly, "expr")
    elif args.dense is not None:
        f = parse_polynomial(args.dense, "dense")
    else:
        text = Path(args.file).read_text(encoding="utf-8").strip()
        f = parse_polynomial(text, "auto")
    if f.is_zero():
        raise UsageError("the zero polynomial is not allowed here")
    return f


def _q(v):
    if v == math.inf:
        return "inf"
    if v == -math.inf:
        return "-inf"
    return str(v)


def _count_json(res):
    return {"bound": res.bound, "exact": res.exact, "defect": res.defect}


def _count_text(res, what):
    if res.is_exact:
        return f"bound={res.bound}, exact={res.exact}, defect={res.defect} ({what})"
    return f"bound={res.bound}, {what} <= {res.bound} (defect even, not determined)"


def _emit(args, payload, lines):
    if args.output == "json":
        print(json.dumps(payload, indent=2, sort_keys=True))
    else:
        for line in lines:
            print(line)


def cmd_variations(args):
    if args.seq is not None:
        if any(s is not None for s in (args.poly, args.dense, args.file)):
            raise UsageError("--seq cannot be combined with a polynomial")
        seq = parse_sequence(args.seq)
        signs = sign_sequence(seq)
        v = variation_count(seq)
        _emit(
            args,
            {"command": "variations", "signs": list(signs), "V": v},
            [f"V={v}", "signs: " + " ".join(str(s) for s in signs)],
        )
        return 0
    f = _load_poly(args)
    lam = args.at
    n = args.n if args.n is not None else f.degree
    v = variations_at(f, lam, n)
    _emit(
        args,
        {"command": "variations", "polynomial": format_expr(f), "at": str(lam), "n": n, "V": v},
        [f"V={v}  (derivative sequence of order {n} at {lam})"],
    )
    return 0


def cmd_descartes(args):
    f = _load_poly(args)
    pos = descartes_bound(f)
    neg = descartes_bound_negative(f)
    if pos.is_exact:
        line = f"V={pos.bound}, positive roots = {pos.exact} (exact, defect 0)"
    else:
        line = f"V={pos.bound}, positive roots ≤ {pos.bound} (defect even)"
    if neg.is_exact:
        nline = f"V(f(-x))={neg.bound}, negative roots = {neg.exact} (exact, defect 0)"
    else:
        nline = f"V(f(-x))={neg.bound}, negative roots ≤ {neg.bound} (defect even)"
    payload = {"command": "descartes", "polynomial": format_expr(f), **_count_json(pos)}
    payload["negative"] = _count_json(neg)
    _emit(args, payload, [line, nline])
    return 0


def cmd_budan_fourier(args):
    f = _load_poly(args)
    res = budan_fourier(f, args.lo, args.hi)
    _emit(
        args,
        {"command": "budan-fourier", "polynomial": format_expr(f), "lo": str(args.lo), "hi": str(args.hi), **_count_json(res)},
        [f"V_f({args.lo}) - V_f({args.hi}): " + _count_text(res, f"roots in ({args.lo}, {args.hi})")],
    )
    return 0


def cmd_count(args):
    f = _load_poly(args)
    if args.kind == "halfopen":
        res = count_halfopen(f, args.lo, args.hi)
        label = f"({args.lo}, {args.hi}]"
    else:
        res = count_closedopen(f, args.lo, args.hi)
        label = f"[{args.lo}, {args.hi})"
    payload = {"command": "count", "polynomial": format_expr(f), "interval": label, **_count_json(res)}
    lines = [_count_text(res, f"roots in {label}")]
    if args.oracle:
        iv = Interval.left_open(args.lo, args.hi) if args.kind == "halfopen" else Interval.right_open(args.lo, args.hi)
        z = zero_count(f, iv, strict=False)
        payload["oracle"] = z
        lines.append(f"sturm (with multiplicity): {z}")
    _emit(args, payload, lines)
    return 0


def cmd_isolate(args):
    f = _load_poly(args)
    rep = isolate(f)
    certified = None
    if not args.no_certify:
        certified = all(sturm_count(f, iv) == 1 for iv, _ in rep.isolating)
        if not certified:
            raise InvariantViolation("an isolating interval failed its Sturm certificate")
    lines = []
    for kind, value, m in rep.entries():
        if kind == "exact":
            lines.append(f"exact {value} mult={m}")
        else:
            lines.append(f"interval ({value.lo}, {value.hi}) mult={m}")
    summary = (
        f"summary: {rep.distinct} distinct real roots, {rep.total_multiplicity} with multiplicity "
        f"({len(rep.exact_roots)} exact, {len(rep.isolating)} intervals)"
    )
    if certified:
        summary += ", sturm-certified"
    lines.append(summary)
    payload = {
        "command": "isolate",
        "polynomial": format_expr(f),
        "roots": [{"value": str(r), "multiplicity": m} for r, m in rep.exact_roots],
        "intervals": [{"lo": str(iv.lo), "hi": str(iv.hi), "multiplicity": m} for iv, m in rep.isolating],
        "distinct": rep.distinct,
        "total_multiplicity": rep.total_multiplicity,
        "certified": certified,
        "stats": vars(rep.stats),
    }
    _emit(args, payload, lines)
    return 0


def cmd_refine(args):
    f = _load_poly(args)
    iv = refine(f, Interval.open(args.lo, args.hi), args.width)
    if iv.is_point:
        line = f"exact {iv.lo}"
    else:
        line = f"interval ({iv.lo}, {iv.hi}) width={iv.width}"
    _emit(
        args,
        {"command": "refine", "polynomial": format_expr(f), "lo": str(iv.lo), "hi": str(iv.hi), "exact": iv.is_point},
        [line],
    )
    return 0


def cmd_sturm(args):
    f = _load_poly(args)
    chain = sturm_chain(f)
    lines = [f"p{i}: {format_expr(p)}" for i, p in enumerate(chain)]
    payload = {"command": "sturm", "polynomial": format_expr(f), "chain": [format_expr(p) for p in chain]}
    iv = Interval.open(args.lo, args.hi)
    distinct = sturm_count(f, iv)
    weighted = zero_count(f, iv)
    lines.append(f"roots in {iv}: {distinct} distinct, {weighted} with multiplicity")
    payload.update({"lo": _q(iv.lo), "hi": _q(iv.hi), "distinct": distinct, "with_multiplicity": weighted})
    _emit(args, payload, lines)
    return 0


def cmd_verify(args):
    suites = args.suite or list(DEFAULT_SUITES)
    if args.replay is not None:
        if len(suites) != 1:
            raise UsageError("--replay needs exactly one --suite")
        try:
            run_case(suites[0], args.seed, args.replay, args.max_degree)
        except (AssertionError, SignvarError, ArithmeticError, ValueError) as exc:
            print(f"{suites[0]} case {args.replay} (seed {args.seed}): FAIL {exc}")
            return 1
        print(f"{suites[0]} case {args.replay} (seed {args.seed}): pass")
        return 0
    failed = False
    payload = {"command": "verify", "seed": args.seed, "suites": []}
    lines = []
    if args.lemmas:
        seqs, splits, fails = check_sign_lemmas(8)
        failed |= bool(fails)
        lines.append(
            f"sign-lemmas: {'PASS' if not fails else 'FAIL'} {seqs} sequences, {splits} splits, {len(fails)} failures"
        )
        payload["suites"].append({"name": "sign-lemmas", "cases": seqs, "failures": fails[:20]})
    for name in suites:
        res = run_suite(name, args.seed, args.cases, args.max_degree)
        failed |= not res.passed
        status = "PASS" if res.passed else "FAIL"
        line = f"{name}: {status} {res.cases - len(res.failures)}/{res.cases} passed"
        if args.timing:
            line += f" ({res.elapsed:.2f}s)"
        lines.append(line)
        for fl in res.failures[:10]:
            lines.append(f"  case {fl.index}: {fl.message}")
            lines.append(f"    replay: signvar verify --suite {name} --seed {args.seed} --replay {fl.index}")
        payload["suites"].append(
            {
                "name": name,
                "cases": res.cases,
                "passed": res.cases - len(res.failures),
                "failures": [{"index": fl.index, "message": fl.message} for fl in res.failures],
                "notes": res.notes,
            }
        )
    payload["ok"] = not failed
    _emit(args, payload, lines)
    return 1 if failed else 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="signvar",
        description="Exact sign-variation counts, Descartes and Budan-Fourier bounds, and real-root isolation.",
    )
    parser.add_argument("--output", choices=("text", "json"), default="text", help="report format")
    parser.add_argument("--version", action="version", version=f"signvar 0.1.0 ({kernels.BACKEND} kernels)")
    # --output is accepted before or after the verb
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=("text", "json"), default=argparse.SUPPRESS, help="report format")
    sub = parser.add_subparsers(dest="verb", required=True)

    p = sub.add_parser("variations", parents=[common], help="sign variations of a sequence or of a derivative sequence")
    _add_poly_source(p, required=False)
    p.add_argument("--seq", help="sequence of rationals, e.g. '1 -1 0 1 -1'")
    p.add_argument("--at", type=_rational_arg, default=parse_rational("0"), help="point lambda (default 0)")
    p.add_argument("--n", type=int, help="derivative order (default: degree)")
    p.set_defaults(func=cmd_variations)

    p = sub.add_parser("descartes", parents=[common], help="Descartes bounds for positive and negative roots")
    _add_poly_source(p)
    p.set_defaults(func=cmd_descartes)

    p = sub.add_parser("budan-fourier", parents=[common], help="Budan-Fourier bound for roots in (lo, hi)")
    _add_poly_source(p)
    p.add_argument("--lo", type=_rational_arg, required=True)
    p.add_argument("--hi", type=_rational_arg, required=True)
    p.set_defaults(func=cmd_budan_fourier)

    p = sub.add_parser("count", parents=[common], help="variation count for roots in (lo, hi] or [lo, hi)")
    _add_poly_source(p)
    p.add_argument("--lo", type=_rational_arg, required=True)
    p.add_argument("--hi", type=_rational_arg, required=True)
    p.add_argument("--kind", choices=("halfopen", "closedopen"), default="halfopen",
                   help="halfopen = (lo, hi], closedopen = [lo, hi)")
    p.add_argument("--oracle", action="store_true", help="also print the Sturm count")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("isolate", parents=[common], help="isolate all real roots")
    _add_poly_source(p)
    p.add_argument("--no-certify", action="store_true", help="skip the Sturm check of each interval")
    p.set_defaults(func=cmd_isolate)

    p = sub.add_parser("refine", parents=[common], help="narrow an isolating interval (lo, hi)")
    _add_poly_source(p)
    p.add_argument("--lo", type=_rational_arg, required=True)
    p.add_argument("--hi", type=_rational_arg, required=True)
    p.add_argument("--width", type=_rational_arg, required=True, help="target width, e.g. 1/1000000")
    p.set_defaults(func=cmd_refine)

    p = sub.add_parser("sturm", parents=[common], help="Sturm chain and root count")
    _add_poly_source(p)
    p.add_argument("--lo", type=_endpoint_arg, default=-math.inf)
    p.add_argument("--hi", type=_endpoint_arg, default=math.inf)
    p.set_defaults(func=cmd_sturm)

    p = sub.add_parser("verify", parents=[common], help="run the randomized verification suites")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--cases", type=int, default=1000)
    p.add_argument("--max-degree", type=int, default=12)
    p.add_argument("--suite", action="append", choices=sorted(SUITES), help="repeatable; default: %s" % ", ".join(DEFAULT_SUITES))
    p.add_argument("--lemmas", action="store_true", help="also run the exhaustive sign-sequence checks")
    p.add_argument("--timing", action="store_true", help="append wall-clock time per suite")
    p.add_argument("--replay", type=int, metavar="INDEX", help="rerun one case of a single suite")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InvariantViolation as exc:
        print(f"signvar: invariant violated: {exc}", file=sys.stderr)
        return 1
    except (UsageError, ParseError, SignvarError, ValueError, OSError) as exc:
        print(f"signvar: error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
