"""Command-line front end: gen-mask, smooth, edges, compare, sweep."""
import argparse
import json
import os
import sys
import warnings

import numpy as np

from . import fileio
from .errors import WeibullEdgesError
from .masks import DEFAULT_CENTER, build_grid, half_width_for, normalize_smoothing, resolve_center, sample_mask, weibull_gradient_pair
from .metrics import compare_edge_maps
from .pipeline import (
    BORDER_POLICIES,
    DETECTORS,
    NORMS,
    Detector,
    EdgeOptions,
    ThresholdRule,
    detect_edges,
    magnitude_to_image,
    resolve_threshold,
    smooth,
)
from .weibull import WeibullParams

DEFAULTS_NOTE = (
    "Defaults alpha=1, beta=2, 3x3 grid centred at (2^-1/2, 2^-1/2) with spacing 0.5 "
    "reproduce the published alpha=1, beta=2 gradient masks."
)


class UsageError(WeibullEdgesError):
    pass


def _float_list(text):
    try:
        return [float(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated numbers, got {text!r}") from None


def _shared(p):
    p.add_argument("--alpha", type=float, default=1.0, help="Weibull alpha (default: 1.0)")
    p.add_argument("--beta", type=float, default=2.0, help="Weibull beta (default: 2.0)")
    p.add_argument("--size", type=int, default=3, help="odd mask size (default: 3)")
    p.add_argument("--spacing", type=float, default=0.5, help="grid increment (default: 0.5)")
    p.add_argument("--spacing-y", type=float, default=None, help="separate y increment (default: same as --spacing)")
    p.add_argument("--center", type=float, nargs=2, default=list(DEFAULT_CENTER), metavar=("CX", "CY"),
                   help="grid center (default: 0.70710678 0.70710678)")
    p.add_argument("--center-at-mode", action="store_true", help="center the grid at the density mode instead")
    p.add_argument("--border", choices=sorted(BORDER_POLICIES), default="replicate", help="border policy (default: replicate)")
    p.add_argument("--norm", choices=NORMS, default="l2", help="gradient magnitude norm (default: l2)")
    p.add_argument("--threshold", default="p90", help="p<percentile> or absolute:<value> (default: p90)")
    p.add_argument("--detector", choices=DETECTORS, default="weibull", help="gradient operator (default: weibull)")
    p.add_argument("--sigma", type=float, default=1.0, help="gaussian detector sigma (default: 1.0)")
    p.add_argument("--workers", type=int, default=1, help="threads for convolution (default: 1)")
    p.add_argument("--out", help="output path")


def build_parser():
    parser = argparse.ArgumentParser(prog="weibull-edges", description=__doc__, epilog=DEFAULTS_NOTE)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("gen-mask", help="build Weibull masks and print them", epilog=DEFAULTS_NOTE)
    _shared(p)
    p.add_argument("--kind", choices=("smooth", "grad"), default="grad")
    p.add_argument("--raw", action="store_true", help="emit the sampled masks before normalization")

    p = sub.add_parser("smooth", help="smooth a PGM with a Weibull smoothing mask", epilog=DEFAULTS_NOTE)
    _shared(p)
    p.add_argument("input")

    p = sub.add_parser("edges", help="detect edges in a PGM", epilog=DEFAULTS_NOTE)
    _shared(p)
    p.add_argument("input")
    p.add_argument("--save-magnitude", metavar="PATH", help="also write the rescaled magnitude plane")
    p.add_argument("--pre-smooth", action="store_true", help="apply the Weibull smoothing mask first")
    p.add_argument("--variant", choices=("P5", "P2"), default="P5")

    p = sub.add_parser("compare", help="compare a candidate edge map against a reference")
    p.add_argument("candidate")
    p.add_argument("reference")
    p.add_argument("--out", help="write the metrics JSON here")

    p = sub.add_parser("sweep", help="run the Weibull detector over alpha/beta lists", epilog=DEFAULTS_NOTE)
    _shared(p)
    p.add_argument("input")
    p.add_argument("--alphas", type=_float_list, required=True)
    p.add_argument("--betas", type=_float_list, required=True)
    p.add_argument("--pre-smooth", action="store_true")
    return parser


def _params(args, alpha=None, beta=None):
    return WeibullParams(args.alpha if alpha is None else alpha, args.beta if beta is None else beta)


def _spacing(args):
    return args.spacing if args.spacing_y is None else (args.spacing, args.spacing_y)


def _validate(args):
    """Check flag values before touching any file."""
    if args.size < 3 or args.size % 2 == 0:
        raise UsageError("size must be odd and >= 3")
    if args.workers < 1:
        raise UsageError("workers must be >= 1")
    rule = ThresholdRule.parse(args.threshold)
    params = _params(args)
    center = resolve_center(params, args.center, args.center_at_mode)
    with warnings.catch_warnings():
        warnings.simplefilter("ignore")
        build_grid(half_width_for(args.size), _spacing(args), center)
    return params, rule, center


def _detector(args, params, center):
    return Detector(args.detector, params, half_width_for(args.size), _spacing(args), center, args.sigma)


def _smoothing_kernel(args, params, center):
    grid = build_grid(half_width_for(args.size), _spacing(args), center)
    return normalize_smoothing(sample_mask("smoothing", params, grid))


def _format_matrix(name, kernel):
    rows = "\n".join("  " + " ".join(f"{v:9.4f}" for v in row) for row in kernel.coefficients)
    state = "normalized" if kernel.normalized else "raw"
    return f"{name} ({kernel.kind}, {state}, {kernel.size}x{kernel.size})\n{rows}"


def cmd_gen_mask(args):
    params, _, center = _validate(args)
    hw = half_width_for(args.size)
    if args.kind == "smooth":
        grid = build_grid(hw, _spacing(args), center)
        raw = sample_mask("smoothing", params, grid)
        kernels = {"smooth": raw if args.raw else normalize_smoothing(raw)}
    else:
        mx, my = weibull_gradient_pair(params, hw, _spacing(args), center, raw=args.raw)
        kernels = {"mx": mx, "my": my}
    outputs = {}
    suffix = "_raw" if args.raw else ""
    for name, kernel in kernels.items():
        print(_format_matrix(name, kernel))
        if args.out:
            outputs[os.path.join(args.out, f"{name}{suffix}.txt")] = fileio.write_kernel_text(kernel)
    if outputs:
        os.makedirs(args.out, exist_ok=True)
        for path, data in outputs.items():
            fileio.atomic_write(path, data)
    return 0


def cmd_smooth(args):
    params, _, center = _validate(args)
    if not args.out:
        raise UsageError("--out is required")
    kernel = _smoothing_kernel(args, params, center)
    image = fileio.load_pgm(args.input)
    fileio.atomic_write(args.out, fileio.write_pgm(smooth(image, kernel, args.border, args.workers)))
    return 0


def run_edges(image, args, params, rule, center):
    """Pipeline used by `edges` and `sweep`; returns (edges, field, report)."""
    pre = _smoothing_kernel(args, params, center) if args.pre_smooth else None
    detector = _detector(args, params, center)
    options = EdgeOptions(pre, args.border, args.norm, rule, args.workers)
    edges, grad = detect_edges(image, detector, options)
    report = {
        "detector": detector.name,
        "params": _detector_params(detector),
        "border": args.border,
        "norm": args.norm,
        "pre_smooth": bool(args.pre_smooth),
        "threshold_rule": str(rule),
        "threshold": resolve_threshold(grad.magnitude, rule),
        "edge_density": float(edges.mean()),
    }
    return edges, grad, report


def _detector_params(d):
    if d.name == "weibull":
        sx, sy = (d.spacing, d.spacing) if np.ndim(d.spacing) == 0 else d.spacing
        return {"alpha": d.params.alpha, "beta": d.params.beta, "size": 2 * d.half_width + 1,
                "spacing": [sx, sy], "center": list(d.center)}
    if d.name == "gaussian":
        return {"sigma": d.sigma, "size": 2 * d.half_width + 1}
    return {}


def cmd_edges(args):
    params, rule, center = _validate(args)
    if not args.out:
        raise UsageError("--out is required")
    image = fileio.load_pgm(args.input)
    edges, grad, report = run_edges(image, args, params, rule, center)
    outputs = {args.out: fileio.write_pgm(edges, args.variant)}
    if args.save_magnitude:
        outputs[args.save_magnitude] = fileio.write_pgm(magnitude_to_image(grad.magnitude), args.variant)
    for path, data in outputs.items():
        fileio.atomic_write(path, data)
    report["input"] = args.input
    report["output"] = args.out
    print(json.dumps(report, sort_keys=True))
    return 0


def cmd_compare(args):
    cand = fileio.image_to_edges(fileio.load_pgm(args.candidate))
    ref = fileio.image_to_edges(fileio.load_pgm(args.reference))
    text = json.dumps(compare_edge_maps(cand, ref).to_dict(), sort_keys=True)
    if args.out:
        fileio.atomic_write(args.out, (text + "\n").encode())
    print(text)
    return 0


def _cell_name(alpha, beta):
    return f"edges_a{alpha:g}_b{beta:g}.pgm"


def cmd_sweep(args):
    _, rule, _ = _validate(args)
    if not args.alphas or not args.betas:
        raise UsageError("--alphas and --betas must be nonempty")
    if not args.out:
        raise UsageError("--out (directory) is required")
    if args.detector != "weibull":
        raise UsageError("sweep runs the weibull detector only")
    image = fileio.load_pgm(args.input)
    os.makedirs(args.out, exist_ok=True)
    cells = []
    for alpha in args.alphas:
        for beta in args.betas:
            cell = {"alpha": alpha, "beta": beta}
            try:
                params = WeibullParams(alpha, beta)
                center = resolve_center(params, args.center, args.center_at_mode)
                edges, _, report = run_edges(image, args, params, rule, center)
            except WeibullEdgesError as exc:
                cell["error"] = str(exc)
                cells.append(cell)
                continue
            name = _cell_name(alpha, beta)
            fileio.atomic_write(os.path.join(args.out, name), fileio.write_pgm(edges))
            cell.update(file=name, threshold=report["threshold"], edge_density=report["edge_density"])
            cells.append(cell)
    summary = {"input": args.input, "threshold_rule": str(rule), "cells": cells}
    text = json.dumps(summary, indent=2, sort_keys=True)
    fileio.atomic_write(os.path.join(args.out, "summary.json"), (text + "\n").encode())
    print(text)
    return 0


COMMANDS = {"gen-mask": cmd_gen_mask, "smooth": cmd_smooth, "edges": cmd_edges, "compare": cmd_compare, "sweep": cmd_sweep}


def _show_warning(message, category, filename, lineno, file=None, line=None):
    print(f"warning: {message}", file=sys.stderr)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    previous = warnings.showwarning
    warnings.showwarning = _show_warning
    try:
        return COMMANDS[args.command](args)
    except (WeibullEdgesError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    finally:
        warnings.showwarning = previous


if __name__ == "__main__":
    sys.exit(main())
