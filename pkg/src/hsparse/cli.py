"""Command-line interface.

Every subcommand prints a machine-readable run report (one key=value per
line) to stdout.  Exit codes: 0 success, 1 verification failure, 2 input
error.  The HSPARSE_SEED environment variable supplies the default seed.
"""

from __future__ import annotations

import argparse
import csv
import os
import sys
from fractions import Fraction

from . import hgio
from .coreset import coreset_finder, verify_coreset
from .core import DirectedHypergraph, UndirectedHypergraph
from .dh import SparsifyConfig, dh_sparsify
from .instances import (
    LowerBoundParams,
    gen_lower_bound,
    gen_random_directed,
    gen_random_undirected,
)
from .spanner import spanner_bundle
from .uh import UhConfig, ft_uh_sparsify, rank_bucket_sparsify, uh_sparsify
from .verify import exhaustive_cut_check, spectral_probe


class InputError(Exception):
    pass


def _default_seed() -> int:
    raw = os.environ.get("HSPARSE_SEED", "0")
    try:
        return int(raw)
    except ValueError:
        raise InputError(f"HSPARSE_SEED must be an integer, got {raw!r}") from None


def _report(pairs) -> None:
    for key, value in pairs:
        print(f"{key}={value}")


def _load(path):
    try:
        return hgio.load(path)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc}") from None
    except hgio.ParseError as exc:
        raise InputError(str(exc)) from None


def _parse_eps(text: str) -> Fraction:
    try:
        return Fraction(text)
    except (ValueError, ZeroDivisionError):
        raise InputError(f"bad eps value {text!r}") from None


def _check_kind(H, args) -> None:
    if getattr(args, "directed", False) and not isinstance(H, DirectedHypergraph):
        raise InputError("--directed given but the input file is undirected")
    if getattr(args, "undirected", False) and not isinstance(H, UndirectedHypergraph):
        raise InputError("--undirected given but the input file is directed")


def _report_trace(report, kind: str):
    rows = [("kind", kind), ("m_star", report.m_star), ("T", report.T),
            ("iterations", report.i_end)]
    for i, rec in enumerate(report.iterations):
        rows.append((f"iter{i}.m_before", rec.m_before))
        rows.append((f"iter{i}.eps_i", rec.eps_i))
        rows.append((f"iter{i}.lambda_i", rec.lambda_i))
        rows.append((f"iter{i}.kept", rec.coreset_size))
        rows.append((f"iter{i}.sampled", rec.sampled_count))
    return rows


# ---------------------------------------------------------------------------
# Subcommands


def cmd_gen(args) -> int:
    if args.family == "lower-bound":
        params = LowerBoundParams(args.n, _parse_eps(args.eps))
        H = gen_lower_bound(params)
        extra = [("eps", str(params.eps)), ("q", params.q)]
    elif args.family == "random-directed":
        H = gen_random_directed(args.n, args.m, args.rank,
                                (args.wmin, args.wmax), args.seed)
        extra = [("seed", args.seed)]
    else:
        H = gen_random_undirected(args.n, args.m, args.rank,
                                  (args.wmin, args.wmax), args.seed)
        extra = [("seed", args.seed)]
    hgio.dump(H, args.output)
    _report([("family", args.family), ("n", H.n), ("m", H.m),
             ("output", args.output), *extra])
    return 0


def cmd_sparsify(args) -> int:
    H = _load(args.input)
    _check_kind(H, args)
    eps = float(_parse_eps(args.eps))
    if isinstance(H, DirectedHypergraph):
        if args.bucket or args.fault_k:
            raise InputError("--bucket and --fault-k apply to undirected inputs only")
        config = SparsifyConfig(mode=args.mode, lambda_override=args.lam, seed=args.seed)
        out, report = dh_sparsify(H, eps, config)
        rows = _report_trace(report, "directed")
    else:
        config = UhConfig(mode=args.mode, lambda_override=args.lam, seed=args.seed,
                          fault_k=args.fault_k)
        if args.bucket:
            out, reports = rank_bucket_sparsify(H, eps, config)
            rows = [("kind", "undirected-bucketed"), ("buckets", len(reports))]
            for i in sorted(reports):
                rows.append((f"bucket{i}.iterations", reports[i].i_end))
        elif args.fault_k:
            out, report = ft_uh_sparsify(H, eps, args.fault_k, config)
            rows = _report_trace(report, "undirected-ft")
        else:
            out, report = uh_sparsify(H, eps, config)
            rows = _report_trace(report, "undirected")
    hgio.dump(out, args.output)
    _report([("m_in", H.m), ("m_out", out.m), ("eps", eps),
             ("mode", args.mode), ("seed", args.seed), *rows,
             ("output", args.output)])
    return 0


def cmd_coreset(args) -> int:
    H = _load(args.input)
    if not isinstance(H, DirectedHypergraph):
        raise InputError("coreset applies to directed hypergraphs")
    coreset = coreset_finder(H, args.lam)
    check = verify_coreset(H, coreset)
    rows = [("m", H.m), ("lambda", args.lam), ("selected", len(coreset.selected)),
            ("cells", len(coreset.partition)), ("valid", check.ok)]
    if args.output:
        sub = DirectedHypergraph(
            H.n, tuple(H.arcs[i] for i in sorted(coreset.selected))
        )
        hgio.dump(sub, args.output)
        rows.append(("output", args.output))
    _report(rows)
    return 0 if check.ok else 1


def cmd_spanner(args) -> int:
    H = _load(args.input)
    if not isinstance(H, UndirectedHypergraph):
        raise InputError("spanner applies to undirected hypergraphs")
    bundle = spanner_bundle(H, args.layers, k=args.stretch)
    kept = sorted(bundle.union())
    rows = [("m", H.m), ("layers", len(bundle.layers)),
            ("achieved_stretch", bundle.stretch), ("kept", len(kept))]
    for i, layer in enumerate(bundle.layers):
        rows.append((f"layer{i}.size", len(layer)))
    if args.output:
        sub = UndirectedHypergraph(H.n, tuple(H.edges[i] for i in kept))
        hgio.dump(sub, args.output)
        rows.append(("output", args.output))
    _report(rows)
    return 0


def cmd_verify(args) -> int:
    H = _load(args.input)
    H_tilde = _load(args.sparsifier)
    if type(H) is not type(H_tilde):
        raise InputError("input and sparsifier must be the same kind")
    if H.n != H_tilde.n:
        raise InputError("input and sparsifier have different vertex counts")
    eps = float(_parse_eps(args.eps))
    rows = [("eps", eps)]
    ok = True
    if args.exhaustive:
        if not isinstance(H, DirectedHypergraph):
            raise InputError("--exhaustive applies to directed hypergraphs")
        cut = exhaustive_cut_check(H, H_tilde, eps)
        rows += [("exhaustive.ok", cut.ok)]
        if not cut.ok:
            rows += [("exhaustive.worst_x", "".join(map(str, cut.worst_x))),
                     ("exhaustive.gap", cut.worst_ratio_gap)]
            ok = False
    if args.probes:
        probe = spectral_probe(H, H_tilde, args.probes, seed=args.seed)
        rows += [("probes", args.probes), ("max_over", probe.max_over),
                 ("max_under", probe.max_under), ("max_error", probe.max_error),
                 ("degenerate", probe.degenerate)]
        if probe.max_error > eps:
            ok = False
    rows.append(("ok", ok))
    _report(rows)
    return 0 if ok else 1


def cmd_stats(args) -> int:
    from .plots import plot_trace

    H = _load(args.input)
    eps = float(_parse_eps(args.eps))
    if isinstance(H, DirectedHypergraph):
        config = SparsifyConfig(mode=args.mode, lambda_override=args.lam, seed=args.seed)
        out, report = dh_sparsify(H, eps, config)
        kind = "directed"
    else:
        config = UhConfig(mode=args.mode, lambda_override=args.lam, seed=args.seed)
        out, report = uh_sparsify(H, eps, config)
        kind = "undirected"

    csv_path = args.prefix + ".csv"
    with open(csv_path, "w", newline="") as fh:
        writer = csv.writer(fh)
        writer.writerow(["iteration", "m_before", "eps_i", "lambda_i",
                         "kept", "sampled", "m_after"])
        for i, rec in enumerate(report.iterations):
            writer.writerow([i, rec.m_before, rec.eps_i, rec.lambda_i,
                             rec.coreset_size, rec.sampled_count, rec.m_after])
    fig_path = args.prefix + ".png"
    plot_trace(report, fig_path, title=f"{kind} sparsification, eps={eps}")
    _report([("m_in", H.m), ("m_out", out.m), *_report_trace(report, kind),
             ("trace_csv", csv_path), ("figure", fig_path)])
    return 0


# ---------------------------------------------------------------------------
# Argument parsing


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hsparse", description="Spectral hypergraph sparsification toolkit."
    )
    sub = parser.add_subparsers(dest="command", required=True)
    seed = _default_seed()

    p = sub.add_parser("gen", help="generate instances")
    p.add_argument("family", choices=["lower-bound", "random-directed",
                                      "random-undirected"])
    p.add_argument("-o", "--output", required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--m", type=int, default=100)
    p.add_argument("--eps", default="1/16", help="exact rational, e.g. 1/16")
    p.add_argument("--rank", type=int, default=4)
    p.add_argument("--wmin", type=float, default=1.0)
    p.add_argument("--wmax", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=seed)
    p.set_defaults(func=cmd_gen)

    p = sub.add_parser("sparsify", help="run the sparsifier")
    p.add_argument("input")
    p.add_argument("-o", "--output", required=True)
    kind = p.add_mutually_exclusive_group()
    kind.add_argument("--directed", action="store_true")
    kind.add_argument("--undirected", action="store_true")
    p.add_argument("--eps", default="1/2")
    p.add_argument("--mode", choices=["theory", "practical"], default="practical")
    p.add_argument("--lambda", dest="lam", type=int, default=None)
    p.add_argument("--seed", type=int, default=seed)
    p.add_argument("--fault-k", type=int, default=0)
    p.add_argument("--bucket", action="store_true",
                   help="rank-bucketed undirected sparsification")
    p.set_defaults(func=cmd_sparsify)

    p = sub.add_parser("coreset", help="build and check a coreset")
    p.add_argument("input")
    p.add_argument("--lambda", dest="lam", type=int, required=True)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_coreset)

    p = sub.add_parser("spanner", help="build a hyperspanner bundle")
    p.add_argument("input")
    p.add_argument("--stretch", type=float, default=None)
    p.add_argument("--layers", type=int, default=1)
    p.add_argument("-o", "--output", default=None)
    p.set_defaults(func=cmd_spanner)

    p = sub.add_parser("verify", help="check a sparsifier against its input")
    p.add_argument("input")
    p.add_argument("sparsifier")
    p.add_argument("--eps", default="1/2")
    p.add_argument("--probes", type=int, default=1000)
    p.add_argument("--exhaustive", action="store_true")
    p.add_argument("--seed", type=int, default=seed)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("stats", help="sparsify and emit trace CSV + figure")
    p.add_argument("input")
    p.add_argument("--prefix", required=True,
                   help="output path prefix for .csv and .png")
    p.add_argument("--eps", default="1/2")
    p.add_argument("--mode", choices=["theory", "practical"], default="practical")
    p.add_argument("--lambda", dest="lam", type=int, default=None)
    p.add_argument("--seed", type=int, default=seed)
    p.set_defaults(func=cmd_stats)

    return parser


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    try:
        return args.func(args)
    except (InputError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())
