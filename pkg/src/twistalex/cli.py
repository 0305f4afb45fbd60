"""
Command line interface.

Exit codes: 0 success, 1 a verification check failed, 2 parse or usage
error, 3 invalid representation, 4 twisted Alexander polynomial undefined,
5 a hypothesis of the limit fails (vanishing block, pole at t0).
"""

import argparse
import csv
import io as _stdio
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor

from . import io
from .asymptotics import convergence_table
from .fpgroup import AbelianizationError, PresentationError
from .rep import RepresentationError, metabelian_rep
from .tap import TapUndefined, TorsionUndefined, tap_higher, torsion_from_result, twisted_alexander
from .twobridge import (LIN_ABELIANIZATION, TwoBridgeParams, block_product, block_tap,
                        closed_form_limit, closed_form_torsion_limit,
                        closed_form_torsion_limit_gcd, limit_polynomial, lin_presentation,
                        metabelian_data, verification_suite)

EXIT_OK, EXIT_CHECK, EXIT_PARSE, EXIT_REP, EXIT_TAP, EXIT_HYPOTHESIS = 0, 1, 2, 3, 4, 5
WORKERS_ENV = "TWISTALEX_WORKERS"


class CliError(Exception):
    def __init__(self, code, message, output=""):
        super().__init__(message)
        self.code = code
        self.output = output


def fmt(x):
    """12 significant digits, with -0 folded to 0."""
    s = format(x, ".12g")
    return "0" if s == "-0" else s


def rounded(x):
    return float(fmt(x))


def worker_count():
    raw = os.environ.get(WORKERS_ENV)
    if raw:
        try:
            return max(1, int(raw))
        except ValueError:
            raise CliError(EXIT_PARSE, "%s must be an integer, got %r" % (WORKERS_ENV, raw))
    return os.cpu_count() or 1


def ordered_map(fn, items):
    """map() over a process pool when useful; results keep the input order."""
    items = list(items)
    workers = min(worker_count(), len(items))
    if workers <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        return list(pool.map(fn, items))


def _ratfn_text(f):
    return str(f)


def _write_csv(rows, header):
    buf = _stdio.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    w.writerows(rows)
    return buf.getvalue()


# -- tap ------------------------------------------------------------------

def cmd_tap(args):
    try:
        pres = io.load_presentation(args.presentation)
        rho = io.load_representation(args.representation)
    except OSError as exc:
        raise CliError(EXIT_PARSE, str(exc))
    except io.FormatError as exc:
        raise CliError(EXIT_PARSE, str(exc))
    dim = args.dim or rho.dim
    try:
        if dim == rho.dim and args.strategy == "direct":
            result = twisted_alexander(pres, rho, column=args.column)
        elif rho.dim == 2:
            result = tap_higher(pres, rho, n=dim, strategy=args.strategy, column=args.column)
        else:
            raise CliError(EXIT_PARSE, "--dim %d needs a 2-dimensional representation" % dim)
    except (PresentationError, AbelianizationError) as exc:
        raise CliError(EXIT_TAP, str(exc))
    if args.format == "json":
        return io.dumps(io.tap_result_to_json(result)) + "\n"
    return ("column: %s\ndim: %d\nnumerator: %s\ndenominator: %s\nvalue: %s\n"
            % (result.column, result.dim, result.numerator_raw, result.denominator_raw,
               _ratfn_text(result.value)))


# -- twobridge ------------------------------------------------------------

def _params(args):
    try:
        return TwoBridgeParams.parse(args.m, args.n, args.sign)
    except ValueError as exc:
        raise CliError(EXIT_PARSE, str(exc))


def _indices(params, i):
    if i is None:
        return list(params.index_range())
    if i not in params.index_range():
        raise CliError(EXIT_PARSE, "--i must lie in 1..%d for %s"
                       % (params.index_range()[-1], params.name()))
    return [i]


def _header(params):
    return {"format": io.FORMAT_VERSION, "knot": params.name(), "m": params.m, "n": params.n,
            "sign": "plus" if params.sign > 0 else "minus", "modulus": params.modulus}


def _ratfn_json(f):
    return {"numerator": io.laurent_to_json(f.numerator),
            "denominator": io.laurent_to_json(f.denominator)}


def _tb_tap(task):
    params, i, dim, strategy = task
    pres = lin_presentation(params)
    rho = metabelian_rep(pres, metabelian_data(params, i))
    return tap_higher(pres, rho, LIN_ABELIANIZATION, n=dim, strategy=strategy)


def _tb_limit(task):
    params, i = task
    return block_product(params, i), closed_form_limit(params, i)


def _tb_torsion(task):
    params, i = task
    q = params.q_index(i)
    blocks = []
    for j in range(1, q + 1):
        try:
            blocks.append(torsion_from_result(block_tap(params, i, j)))
        except TorsionUndefined as exc:
            raise TorsionUndefined("%s, i=%d, block j=%d: %s" % (params.name(), i, j, exc))
    limit = math.fsum(math.log(b.modulus) for b in blocks) / (2 * q)
    return blocks, limit


def _tb_verify(task):
    params, i = task
    return verification_suite(params, None if i is None else [i])


def cmd_twobridge(args):
    params = _params(args)
    indices = _indices(params, args.i)
    if args.emit_presentation:
        with open(args.emit_presentation, "w", encoding="utf-8") as fh:
            fh.write(io.render_presentation(lin_presentation(params)))
    if args.emit_rep:
        _emit_reps(params, indices, args.emit_rep)
    what = args.what
    if what == "tap":
        if args.dim < 2:
            raise CliError(EXIT_PARSE, "--dim must be at least 2")
        if args.strategy == "blocks" and args.dim % 2:
            raise CliError(EXIT_PARSE, "the blocks strategy needs an even --dim")
        results = ordered_map(_tb_tap, [(params, i, args.dim, args.strategy) for i in indices])
        return _render_tap(params, indices, args, results)
    if what == "limit":
        results = ordered_map(_tb_limit, [(params, i) for i in indices])
        return _render_limit(params, indices, args, results)
    if what == "torsion":
        try:
            results = ordered_map(_tb_torsion, [(params, i) for i in indices])
        except TorsionUndefined as exc:
            raise CliError(EXIT_HYPOTHESIS, "limit hypothesis fails: %s" % exc)
        return _render_torsion(params, indices, args, results)
    checks = _tb_verify((params, args.i))
    out = _render_verify(params, args, checks)
    if not all(ok for _, ok in checks):
        raise CliError(EXIT_CHECK, "verification failed for %s" % params.name(), out)
    return out


def _emit_reps(params, indices, path):
    if len(indices) > 1 and "{i}" not in path:
        raise CliError(EXIT_PARSE, "--emit-rep needs '{i}' in the path when --i is omitted")
    pres = lin_presentation(params)
    for i in indices:
        rho = metabelian_rep(pres, metabelian_data(params, i))
        with open(path.replace("{i}", str(i)), "w", encoding="utf-8") as fh:
            fh.write(io.dumps(io.representation_to_json(rho, pres.generators)) + "\n")


def _render_tap(params, indices, args, results):
    if args.format == "json":
        doc = dict(_header(params), dim=args.dim, strategy=args.strategy, results=[
            dict(io.tap_result_to_json(r), i=i) for i, r in zip(indices, results)])
        return io.dumps(doc) + "\n"
    if args.format == "csv":
        return _write_csv([[i, r.dim, r.column, str(r.numerator_raw), str(r.denominator_raw),
                            _ratfn_text(r.value)] for i, r in zip(indices, results)],
                          ["i", "dim", "column", "numerator", "denominator", "value"])
    lines = []
    for i, r in zip(indices, results):
        lines.append("%s i=%d dim=%d column=%s: %s"
                     % (params.name(), i, r.dim, r.column, _ratfn_text(r.value)))
    return "\n".join(lines) + "\n"


def _render_limit(params, indices, args, results):
    rows = []
    for i, (product, closed) in zip(indices, results):
        rows.append((i, closed.period, product, closed.product, product == closed.product))
    if args.format == "json":
        doc = dict(_header(params), results=[
            {"i": i, "period": p, "product": _ratfn_json(prod),
             "closed_form": {"period": p, "product": _ratfn_json(cf)}, "match": match}
            for i, p, prod, cf, match in rows])
        return io.dumps(doc) + "\n"
    if args.format == "csv":
        return _write_csv([[i, p, str(prod), str(cf), str(match).lower()]
                           for i, p, prod, cf, match in rows],
                          ["i", "period", "product", "closed_form", "match"])
    lines = []
    for i, p, prod, cf, match in rows:
        lines.append("%s i=%d: period %d" % (params.name(), i, p))
        lines.append("  product     = %s" % prod)
        lines.append("  closed form = (%s)*(t^2 + 1)^%d = %s  [%s]"
                     % (limit_polynomial(params), p - 2, cf, "match" if match else "MISMATCH"))
        lines.append("  limit(t)    = (1/%d) log(product(t))" % (2 * p))
    return "\n".join(lines) + "\n"


def _render_torsion(params, indices, args, results):
    rows = []
    for i, (blocks, limit) in zip(indices, results):
        rows.append((i, params.q_index(i), blocks, limit,
                     closed_form_torsion_limit(params, i), closed_form_torsion_limit_gcd(params, i)))
    if args.format == "json":
        doc = dict(_header(params), results=[
            {"i": i, "period": q, "limit": rounded(lim), "closed_form": rounded(cf),
             "gcd_form": rounded(gf),
             "blocks": [{"j": j, "exact": io.cyclotomic_to_json(b.exact),
                         "modulus": rounded(b.modulus), "up_to_sign": b.up_to_sign}
                        for j, b in enumerate(blocks, start=1)]}
            for i, q, blocks, lim, cf, gf in rows])
        return io.dumps(doc) + "\n"
    if args.format == "csv":
        return _write_csv([[i, q, fmt(lim), fmt(cf), fmt(gf)] for i, q, _, lim, cf, gf in rows],
                          ["i", "period", "limit", "closed_form", "gcd_form"])
    lines = []
    for i, q, blocks, lim, cf, gf in rows:
        lines.append("%s i=%d: period %d" % (params.name(), i, q))
        for j, b in enumerate(blocks, start=1):
            lines.append("  Delta_psi_%d(1) = +-(%s)  |.| = %s" % (j, b.exact, fmt(b.modulus)))
        lines.append("  limit       = %s" % fmt(lim))
        lines.append("  closed form = (1/%d) log(%d/2) + (1/2) log 2 = %s"
                     % (q, 2 * params.mn - params.sign, fmt(cf)))
        g = math.gcd(params.modulus, i)
        lines.append("  gcd form    = (%d/%d) log(%d/2) + (1/2) log 2 = %s"
                     % (g, params.modulus, 2 * params.mn - params.sign, fmt(gf)))
    return "\n".join(lines) + "\n"


def _render_verify(params, args, checks):
    if args.format == "json":
        doc = dict(_header(params), checks=[{"check": k, "passed": ok} for k, ok in checks],
                   passed=all(ok for _, ok in checks))
        return io.dumps(doc) + "\n"
    if args.format == "csv":
        return _write_csv([[k, "pass" if ok else "fail"] for k, ok in checks], ["check", "status"])
    return "".join("%s %s: %s\n" % (params.name(), k, "PASS" if ok else "FAIL") for k, ok in checks)


# -- converge -------------------------------------------------------------

def cmd_converge(args):
    params = _params(args)
    i = _indices(params, args.i if args.i is not None else 1)[0]
    if args.nmax < 1:
        raise CliError(EXIT_PARSE, "--nmax must be at least 1")
    pres = lin_presentation(params)
    try:
        rows = convergence_table(pres, metabelian_data(params, i), LIN_ABELIANIZATION,
                                 args.nmax, args.t)
    except ZeroDivisionError as exc:
        raise CliError(EXIT_HYPOTHESIS, str(exc))
    return _write_csv([[r.N, fmt(r.finite_value), fmt(r.limit_value), fmt(r.gap)] for r in rows],
                      ["N", "finite", "limit", "gap"])


# -- entry point ----------------------------------------------------------

def build_parser():
    parser = argparse.ArgumentParser(
        prog="twistalex",
        description="Exact twisted Alexander polynomials and Reidemeister torsion.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("tap", help="twisted Alexander polynomial from files")
    p.add_argument("presentation")
    p.add_argument("representation")
    p.add_argument("--dim", type=int, help="use the symmetric power of this dimension")
    p.add_argument("--strategy", choices=("direct", "blocks"), default="direct")
    p.add_argument("--column", help="generator whose column is removed")
    p.add_argument("--format", choices=("json", "text"), default="text")
    p.set_defaults(func=cmd_tap)

    def knot_args(p):
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--sign", choices=("plus", "minus"), default="plus")
        p.add_argument("--i", type=int, help="metabelian class index (default: all)")

    p = sub.add_parser("twobridge", help="the J(2m, +-2n) family")
    knot_args(p)
    p.add_argument("--dim", type=int, default=2, help="2N for --what tap")
    p.add_argument("--strategy", choices=("direct", "blocks"), default="blocks")
    p.add_argument("--what", choices=("tap", "limit", "torsion", "verify"), default="tap")
    p.add_argument("--format", choices=("json", "csv", "text"), default="text")
    p.add_argument("--emit-rep", metavar="PATH",
                   help="write the metabelian representation(s) as JSON; '{i}' expands to i")
    p.add_argument("--emit-presentation", metavar="PATH", help="write the Lin presentation")
    p.set_defaults(func=cmd_twobridge)

    p = sub.add_parser("converge", help="finite-N values against the limit, as CSV")
    knot_args(p)
    p.add_argument("--nmax", type=int, default=30)
    p.add_argument("--t", type=float, default=1.0)
    p.add_argument("--format", choices=("csv",), default="csv")
    p.set_defaults(func=cmd_converge)
    return parser


def main(argv=None):
    args = build_parser().parse_args(argv)
    try:
        out = args.func(args)
    except CliError as exc:
        sys.stdout.write(exc.output)
        print("twistalex: %s" % exc, file=sys.stderr)
        return exc.code
    except RepresentationError as exc:
        print("twistalex: invalid representation: %s" % exc, file=sys.stderr)
        return EXIT_REP
    except TapUndefined as exc:
        print("twistalex: twisted Alexander polynomial undefined: %s" % exc, file=sys.stderr)
        return EXIT_TAP
    sys.stdout.write(out)
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
