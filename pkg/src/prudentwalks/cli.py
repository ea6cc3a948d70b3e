"""Command-line interface.

Subcommands: count, series, closedform, asym, sample, render, verify.
All machine output is JSON; walks render to SVG or ASCII.  Runs with the
same arguments and seed are byte-identical.

Exit codes: 0 success, 1 verification mismatch, 2 invalid arguments,
3 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import random
import sys

from prudentwalks import asymptotics, closedforms, funceq, render, verify
from prudentwalks.sampler import (
    DEFAULT_MAX_ENTRIES,
    ResourceBudgetError,
    UniformSampler,
    kinetic_sample,
)
from prudentwalks.series import SeriesError
from prudentwalks.walks import (
    SquareWalk,
    TriWalk,
    WalkClass,
    enumerate_counts,
    walk_from_json,
)

EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_BAD_ARGS = 2
EXIT_BUDGET = 3

CLASS_NAMES = {
    "1-sided": WalkClass.ONE_SIDED,
    "2-sided": WalkClass.TWO_SIDED,
    "3-sided": WalkClass.THREE_SIDED,
    "4-sided": WalkClass.PRUDENT4,
    "prudent": WalkClass.PRUDENT4,
    "triangular": WalkClass.TRIANGULAR,
}


class CliError(Exception):
    def __init__(self, message, code=EXIT_BAD_ARGS):
        super().__init__(message)
        self.code = code


def _walk_class(name):
    try:
        return CLASS_NAMES[name]
    except KeyError:
        raise CliError("unknown walk class %r" % name) from None


def _emit(args, text):
    if getattr(args, "out", None):
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _emit_json(args, obj):
    _emit(args, json.dumps(obj, indent=2, sort_keys=True) + "\n")


def cmd_count(args):
    wc = _walk_class(args.walk_class)
    if args.n_max < 0 or args.n_max > 20:
        raise CliError("--n-max must be in 0..20 (exhaustive search)")
    counts = enumerate_counts(wc, args.n_max)
    _emit_json(args, {"class": wc.value, "route": "oracle", "counts": counts})


def _series_cpoly(wc, order, refined=None):
    if refined == "sum":
        if wc is not WalkClass.TWO_SIDED:
            raise CliError("--refined applies to the 2-sided class only")
        return funceq.solve_2sided_refined_sum(order)[1]
    if refined == "diagonal":
        if wc is not WalkClass.TWO_SIDED:
            raise CliError("--refined applies to the 2-sided class only")
        return funceq.solve_2sided_diagonal(order)[1]
    if wc is WalkClass.ONE_SIDED:
        return None
    if wc is WalkClass.TWO_SIDED:
        return funceq.iterate_2sided(order)[1]
    if wc is WalkClass.THREE_SIDED:
        return funceq.iterate_3sided(order)[2]
    if wc is WalkClass.PRUDENT4:
        return funceq.iterate_4sided(order)[1]
    return funceq.iterate_triangular(order)[1]


def cmd_series(args):
    wc = _walk_class(args.walk_class)
    if args.order < 0 or args.order > 400:
        raise CliError("--order out of range")
    if wc is WalkClass.PRUDENT4 and args.order > 80:
        raise CliError("4-sided iteration beyond order 80 exceeds the time budget")
    p = _series_cpoly(wc, args.order, args.refined)
    if p is None:
        counts = funceq.iterate_1sided(args.order).integer_coeffs()
        out = {"class": wc.value, "route": "iteration", "counts": counts}
    else:
        out = {
            "class": wc.value,
            "route": "iteration",
            "counts": p.specialize_ones().integer_coeffs(),
        }
        if args.refined:
            out["refined"] = args.refined
        if args.full:
            out["series"] = p.to_json()
    _emit_json(args, out)


def cmd_closedform(args):
    wc = _walk_class(args.walk_class)
    if args.order < 0 or args.order > 400:
        raise CliError("--order out of range")
    if wc is WalkClass.PRUDENT4:
        raise CliError(
            "no closed form exists for general prudent walks (open problem)"
        )
    series = None
    if wc is WalkClass.ONE_SIDED:
        from prudentwalks.series import TSeries, ts_inv

        series = TSeries.from_terms(args.order, {0: 1, 1: 1}) * ts_inv(
            TSeries.from_terms(args.order, {0: 1, 1: -2, 2: -1})
        )
    elif wc is WalkClass.TWO_SIDED:
        series = closedforms.two_sided_closed(args.order)[2]
    elif wc is WalkClass.THREE_SIDED:
        series = closedforms.three_sided_length_series(args.order)[1]
    else:
        series = closedforms.triangular_closed(args.order)[2]
    out = {
        "class": wc.value,
        "route": "closed-form",
        "counts": series.integer_coeffs(),
    }
    if args.full:
        out["series"] = series.to_json()
    _emit_json(args, out)


def cmd_asym(args):
    wc = _walk_class(args.walk_class)
    coeffs = None
    if args.growth_order:
        if wc is WalkClass.PRUDENT4:
            raise CliError("no growth series target for general prudent walks")
        coeffs = {
            WalkClass.ONE_SIDED: lambda n: funceq.iterate_1sided(n).integer_coeffs(),
            WalkClass.TWO_SIDED: lambda n: closedforms.two_sided_closed(n)[2].integer_coeffs(),
            WalkClass.THREE_SIDED: lambda n: closedforms.three_sided_length_series(n)[1].integer_coeffs(),
            WalkClass.TRIANGULAR: lambda n: closedforms.triangular_closed(n)[2].integer_coeffs(),
        }[wc](args.growth_order)
    consts = asymptotics.constants(wc, coeffs=coeffs)
    out = {
        "class": wc.value,
        "constants": [c.to_json() for _, c in sorted(consts.items())],
    }
    if coeffs is not None:
        mu_hat, diag = asymptotics.growth_estimate(coeffs)
        out["growth_estimate"] = {
            "mu_hat": mu_hat,
            "n_coeffs": diag["n_coeffs"],
            "raw_ratio_last": diag["raw_ratio_last"],
            "stages": diag["stages"],
        }
    _emit_json(args, out)


def cmd_sample(args):
    wc = _walk_class(args.walk_class)
    if args.length < 0:
        raise CliError("--length must be >= 0")
    if args.count < 1:
        raise CliError("--count must be >= 1")
    rng = random.Random(args.seed)
    if args.kinetic:
        if wc is not WalkClass.PRUDENT4:
            raise CliError("the kinetic sampler generates 4-sided prudent walks")
        walks = [kinetic_sample(args.length, rng) for _ in range(args.count)]
    else:
        sampler = UniformSampler(wc, args.length, max_entries=args.max_entries)
        walks = [sampler.sample(rng) for _ in range(args.count)]
    if args.format == "steps":
        _emit(args, "".join(w.to_text() + "\n" for w in walks))
    elif args.format == "json":
        _emit_json(
            args,
            {
                "class": wc.value,
                "length": args.length,
                "seed": args.seed,
                "kinetic": bool(args.kinetic),
                "walks": [w.to_json() for w in walks],
            },
        )
    else:  # svg
        if args.count == 1:
            _emit(args, render.render_svg(walks[0], box=args.box))
        else:
            if not args.out:
                raise CliError("--format svg with --count > 1 needs --out PREFIX")
            for idx, w in enumerate(walks):
                path = "%s-%04d.svg" % (args.out, idx)
                with open(path, "w") as fh:
                    fh.write(render.render_svg(w, box=args.box))


def _load_walk(args):
    if args.steps is not None:
        text = args.steps
    elif args.walk_file is not None:
        with open(args.walk_file) as fh:
            text = fh.read().strip()
    else:
        text = sys.stdin.read().strip()
    if text.startswith("{"):
        return walk_from_json(json.loads(text))
    if args.lattice == "tri":
        return TriWalk.from_text(text)
    return SquareWalk.from_text(text)


def cmd_render(args):
    try:
        walk = _load_walk(args)
    except (ValueError, KeyError) as exc:
        raise CliError("cannot parse walk: %s" % exc) from exc
    if args.format == "ascii":
        if isinstance(walk, TriWalk):
            raise CliError("ASCII rendering covers the square lattice only")
        _emit(args, render.render_ascii(walk))
    else:
        _emit(args, render.render_svg(walk, box=args.box))


def cmd_verify(args):
    classes = None
    if args.classes:
        classes = [_walk_class(name) for name in args.classes.split(",")]
    report = verify.run_verify(
        max_n_oracle=args.max_n,
        series_order=args.order,
        classes=classes,
        tri_box_k=args.box_k,
    )
    _emit_json(args, report)
    if not report["agree"]:
        raise CliError("cross-check mismatch", code=EXIT_MISMATCH)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="prudent",
        description="Exact enumeration, series and uniform sampling of prudent walks.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    classes = sorted(CLASS_NAMES)

    p = sub.add_parser("count", help="brute-force exhaustive counts")
    p.add_argument("--class", dest="walk_class", choices=classes, required=True)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--out")
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("series", help="functional-equation iteration")
    p.add_argument("--class", dest="walk_class", choices=classes, required=True)
    p.add_argument("--order", type=int, default=40)
    p.add_argument("--refined", choices=("sum", "diagonal"))
    p.add_argument("--full", action="store_true", help="include the full catalytic series as JSON")
    p.add_argument("--out")
    p.set_defaults(func=cmd_series)

    p = sub.add_parser("closedform", help="closed-form expansion")
    p.add_argument("--class", dest="walk_class", choices=classes, required=True)
    p.add_argument("--order", type=int, default=40)
    p.add_argument("--full", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_closedform)

    p = sub.add_parser("asym", help="asymptotic constants report")
    p.add_argument("--class", dest="walk_class", choices=classes, required=True)
    p.add_argument(
        "--growth-order",
        type=int,
        default=0,
        help="also estimate mu from this many closed-form coefficients",
    )
    p.add_argument("--out")
    p.set_defaults(func=cmd_asym)

    p = sub.add_parser("sample", help="uniform (or kinetic) random walks")
    p.add_argument("--class", dest="walk_class", choices=classes, required=True)
    p.add_argument("--length", type=int, required=True)
    p.add_argument("--count", type=int, default=1)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--format", choices=("steps", "json", "svg"), default="steps")
    p.add_argument("--kinetic", action="store_true")
    p.add_argument("--box", action="store_true", help="draw the box outline (svg)")
    p.add_argument("--max-entries", type=int, default=DEFAULT_MAX_ENTRIES)
    p.add_argument("--out")
    p.set_defaults(func=cmd_sample)

    p = sub.add_parser("render", help="render a walk to SVG or ASCII")
    p.add_argument("--steps", help="walk text, e.g. NESW or 012345")
    p.add_argument("--walk-file", help="file holding walk text or JSON")
    p.add_argument("--lattice", choices=("square", "tri"), default="square")
    p.add_argument("--format", choices=("svg", "ascii"), default="svg")
    p.add_argument("--box", action="store_true")
    p.add_argument("--out")
    p.set_defaults(func=cmd_render)

    p = sub.add_parser("verify", help="cross-check all counting routes")
    p.add_argument("--max-n", type=int, default=12, help="exhaustive-search length cap")
    p.add_argument("--order", type=int, default=60, help="series truncation order")
    p.add_argument("--classes", help="comma-separated subset of classes")
    p.add_argument("--box-k", type=int, default=4)
    p.add_argument("--out")
    p.set_defaults(func=cmd_verify)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except CliError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return exc.code
    except ResourceBudgetError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_BUDGET
    except SeriesError as exc:
        print("error: %s" % exc, file=sys.stderr)
        return EXIT_BAD_ARGS
    return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
