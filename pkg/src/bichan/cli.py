"""Command-line front end: analyze, verify, curves, polarize.

Exit-code contract: 0 ok, 1 property violation, 2 input error, 3 self-check
failure, 4 resource cap exceeded.  All numeric output is printed with 12
significant digits so files round-trip through external tools.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys

from .bounds import channel_bound_set, evaluate_bound_set
from .capacity import capacity_golden
from .channel import Channel, bhattacharyya, mutual_information, validate
from .harness import SAMPLERS, TrialConfig, run_verification
from .polar import AlphabetCapError, conservation_residual, polarize

SANDWICH_TOL = 1e-7

EXIT_OK = 0
EXIT_VIOLATION = 1
EXIT_INPUT = 2
EXIT_SELF_CHECK = 3
EXIT_CAP = 4


class InputError(Exception):
    pass


def _fmt(x: float) -> str:
    return f"{x:.12g}"


def _reject_constant(token: str):
    raise InputError(f"non-finite number {token!r} in channel file")


def load_channel(path: str) -> Channel:
    """Parse a channel JSON file {"outputs": N, "p": [...], "q": [...]}.

    Rejects NaN/Inf, length mismatches, and any probability-vector
    invariant violation.
    """
    try:
        with open(path, encoding="utf-8") as fh:
            data = json.load(fh, parse_constant=_reject_constant)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InputError(f"{path}: expected a JSON object")
    for key in ("outputs", "p", "q"):
        if key not in data:
            raise InputError(f"{path}: missing key {key!r}")
    n = data["outputs"]
    p, q = data["p"], data["q"]
    if not isinstance(n, int) or n < 1:
        raise InputError(f"{path}: 'outputs' must be a positive integer")
    for name, vec in (("p", p), ("q", q)):
        if not isinstance(vec, list) or len(vec) != n:
            raise InputError(f"{path}: '{name}' must be a list of {n} numbers")
        if not all(isinstance(v, (int, float)) and math.isfinite(v) for v in vec):
            raise InputError(f"{path}: '{name}' contains a non-finite entry")
    w = Channel(p, q)
    violations = validate(w)
    if violations:
        raise InputError(f"{path}: " + "; ".join(violations))
    return w


def cmd_analyze(args) -> int:
    w = load_channel(args.channel)
    z = min(bhattacharyya(w), 1.0)
    sym = mutual_information(w, 0.5, "bits")
    cap = capacity_golden(w, tol_alpha=1e-12)
    bounds = channel_bound_set(w)
    lower_margin = cap.capacity - bounds.gen_lower
    upper_margin = bounds.gen_upper - cap.capacity

    fields = [
        ("n_outputs", str(w.n_outputs)),
        ("z", _fmt(z)),
        ("sym_capacity_bits", _fmt(sym)),
        ("capacity_bits", _fmt(cap.capacity)),
        ("alpha_star", _fmt(cap.alpha_star)),
        ("arikan_lower", _fmt(bounds.arikan_lower)),
        ("gen_lower", _fmt(bounds.gen_lower)),
        ("gen_upper", _fmt(bounds.gen_upper)),
        ("arikan_upper", _fmt(bounds.arikan_upper)),
        ("lower_margin", _fmt(lower_margin)),
        ("upper_margin", _fmt(upper_margin)),
    ]
    for name, value in fields:
        print(f"{name} = {value}")
    if args.json:
        payload = {name: (w.n_outputs if name == "n_outputs" else float(value))
                   for name, value in fields}
        with open(args.json, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2, sort_keys=True)
            fh.write("\n")
    if lower_margin < -SANDWICH_TOL or upper_margin < -SANDWICH_TOL:
        print("self-check FAILED: capacity escaped the bound sandwich", file=sys.stderr)
        return EXIT_SELF_CHECK
    return EXIT_OK


def cmd_verify(args) -> int:
    sizes = tuple(int(s) for s in args.sizes.split(","))
    cfg = TrialConfig(
        seed=args.seed, trials=args.trials, output_sizes=sizes, sampler=args.sampler
    )
    report = run_verification(cfg)
    if args.report:
        with open(args.report, "w", encoding="utf-8") as fh:
            fh.write(report.to_json())
            fh.write("\n")
    print(f"trials = {cfg.trials}")
    print(f"violations = {len(report.violations)}")
    print(f"worst_lower_margin = {_fmt(report.worst_lower_margin)}")
    print(f"worst_upper_margin = {_fmt(report.worst_upper_margin)}")
    if report.violations:
        for v in report.violations[:20]:
            print(
                f"violation: trial {v['trial']} {v['property']} margin {_fmt(v['margin'])}",
                file=sys.stderr,
            )
        return EXIT_VIOLATION
    return EXIT_OK


def cmd_curves(args) -> int:
    if not 0.0 < args.step <= 0.1:
        raise InputError(f"step {args.step} outside (0, 0.1]")
    n = int(round(1.0 / args.step))
    lines = ["z,arikan_lower,gen_lower,gen_upper,arikan_upper"]
    for k in range(n + 1):
        z = min(k * args.step, 1.0)
        if k == n:
            z = 1.0
        b = evaluate_bound_set(z)
        lines.append(
            ",".join(
                _fmt(v)
                for v in (b.z, b.arikan_lower, b.gen_lower, b.gen_upper, b.arikan_upper)
            )
        )
    _write_text(args.out, "\n".join(lines) + "\n")
    return EXIT_OK


def cmd_polarize(args) -> int:
    w = load_channel(args.channel)
    try:
        nodes = polarize(w, args.depth)
    except AlphabetCapError as exc:
        print(f"alphabet cap exceeded at depth {args.depth}: {exc}", file=sys.stderr)
        return EXIT_CAP
    lines = ["path,n_outputs,z,sym_capacity_bits,gen_lower,gen_upper"]
    for node in nodes:
        lines.append(
            ",".join(
                [
                    node.path,
                    str(node.channel.n_outputs),
                    _fmt(node.z),
                    _fmt(node.sym_capacity),
                    _fmt(node.bounds.gen_lower),
                    _fmt(node.bounds.gen_upper),
                ]
            )
        )
    _write_text(args.out, "\n".join(lines) + "\n")
    residual = conservation_residual(w, nodes)
    print(f"conservation_residual_bits = {_fmt(residual)}")
    return EXIT_OK if residual <= 1e-8 else EXIT_VIOLATION


def _write_text(path: str | None, text: str):
    if path is None:
        sys.stdout.write(text)
        return
    try:
        with open(path, "w", encoding="utf-8") as fh:
            fh.write(text)
    except OSError as exc:
        raise InputError(f"cannot write {path}: {exc}") from exc


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="bichan",
        description="Capacity and Bhattacharyya-parameter analysis of "
        "binary-input discrete memoryless channels",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    pa = sub.add_parser("analyze", help="analyze one channel file")
    pa.add_argument("channel", help="channel JSON file")
    pa.add_argument("--json", metavar="PATH", help="also write machine-readable JSON")
    pa.set_defaults(func=cmd_analyze)

    pv = sub.add_parser("verify", help="run the randomized bound verification")
    pv.add_argument("--seed", type=int, default=42)
    pv.add_argument("--trials", type=int, default=100_000)
    pv.add_argument("--sizes", default="2,3,4,8,16", help="comma-separated output sizes")
    pv.add_argument("--sampler", choices=SAMPLERS, default="dirichlet_uniform")
    pv.add_argument("--report", metavar="PATH", help="write the JSON batch report")
    pv.set_defaults(func=cmd_verify)

    pc = sub.add_parser("curves", help="emit the bound-comparison curve table")
    pc.add_argument("--step", type=float, default=0.001)
    pc.add_argument("--out", metavar="PATH", help="CSV output path (default stdout)")
    pc.set_defaults(func=cmd_curves)

    pp = sub.add_parser("polarize", help="recursively transform a channel")
    pp.add_argument("channel", help="channel JSON file")
    pp.add_argument("--depth", type=int, default=2)
    pp.add_argument("--out", metavar="PATH", help="CSV output path (default stdout)")
    pp.set_defaults(func=cmd_polarize)

    return parser


def main(argv=None) -> int:
    # BICHAN_THREADS caps internal parallelism; the implementation default
    # is a single worker, so the variable is accepted and bounds-checked
    # but cannot change any output
    threads = os.environ.get("BICHAN_THREADS")
    if threads is not None:
        try:
            if int(threads) < 1:
                raise ValueError
        except ValueError:
            print(f"invalid BICHAN_THREADS={threads!r}", file=sys.stderr)
            return EXIT_INPUT

    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
