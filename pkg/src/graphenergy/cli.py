"""Command-line front end: ``predict``, ``energy``, ``esd``, ``sweep``, ``selftest``.

stdout carries data only; diagnostics go to stderr.  Exit codes: 0 success,
1 selftest failure, 2 usage or config error, 3 weight-domain failure.
"""

from __future__ import annotations

import argparse
import logging
import math
import sys
from pathlib import Path

import numpy as np

from . import output
from .experiments import TOLERANCE_NOTE, ExperimentConfig, run_sweep, run_trial
from .graph import Graph, Seed, make_named, read_edgelist, sample_gnp
from .predict import CLOSED_FORM, GENERAL, argmax_p, has_closed_form, predict_energy
from .quadrature import adaptive_simpson
from .semicircle import SemicircleLaw, ks_distance
from .spectral import eigenvalues_symmetric, energy, ky_fan_check, trace_moment, walk_moment
from .weights import (
    CATALOG_IDS,
    WeightDomainError,
    build_weighted_adjacency,
    center_scale,
    center_value,
    get_spec,
)

log = logging.getLogger("graphenergy")

EXIT_OK, EXIT_FAIL, EXIT_USAGE, EXIT_DOMAIN = 0, 1, 2, 3


class UsageError(Exception):
    pass


def _probability(text: str) -> float:
    try:
        p = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a number: {text!r}") from None
    if not 0.0 < p < 1.0:
        raise argparse.ArgumentTypeError(f"must lie in (0, 1), got {text}")
    return p


def _order(text: str) -> int:
    try:
        n = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if n < 2:
        raise argparse.ArgumentTypeError(f"must be at least 2, got {text}")
    return n


def _seed(text: str) -> int:
    try:
        s = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if not 0 <= s < 2**64:
        raise argparse.ArgumentTypeError("must be a 64-bit unsigned integer")
    return s


def _list_of(conv):
    def parse(text: str):
        items = [t.strip() for t in text.split(",") if t.strip()]
        if not items:
            raise argparse.ArgumentTypeError("empty list")
        return [conv(t) for t in items]
    return parse


def _common(p: argparse.ArgumentParser, fmt_default="csv"):
    p.add_argument("--format", choices=("csv", "json"), default=fmt_default)
    p.add_argument("--out", type=Path, help="write to PATH instead of stdout")


def _trial_flags(p: argparse.ArgumentParser):
    p.add_argument("--n", type=_order)
    p.add_argument("--p", type=_probability, required=True)
    p.add_argument("--index", required=True, help=", ".join(CATALOG_IDS))
    p.add_argument("--alpha", type=float)
    p.add_argument("--seed", type=_seed, default=0)
    p.add_argument("--trial", type=int, default=0)
    p.add_argument("--graph", type=Path, help="edge-list file to use instead of sampling")
    p.add_argument("--method", choices=("householder", "lapack"), default="householder")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="graphenergy", description=__doc__.splitlines()[0])
    parser.add_argument("-v", "--verbose", action="store_true")
    sub = parser.add_subparsers(dest="command", required=True)

    pp = sub.add_parser("predict", help="closed-form energy predictions")
    pp.add_argument("--index", required=True, help=", ".join(CATALOG_IDS))
    pp.add_argument("--alpha", type=float)
    pp.add_argument("--n", type=_order)
    pp.add_argument("--p", type=_probability)
    pp.add_argument("--argmax-p", action="store_true", help="report the maximizing p instead")
    _common(pp)

    pe = sub.add_parser("energy", help="energy of one sampled weighted graph")
    _trial_flags(pe)
    pe.add_argument("--no-ks", action="store_true")
    pe.add_argument("--esd-out", type=Path, help="dump sorted scaled eigenvalues of n^-1/2 At")
    _common(pe, "json")

    pd = sub.add_parser("esd", help="ESD of n^-1/2 At against the semicircle law")
    _trial_flags(pd)
    _common(pd)

    ps = sub.add_parser("sweep", help="Monte Carlo sweep")
    ps.add_argument("--config", type=Path)
    ps.add_argument("--n", type=_list_of(_order))
    ps.add_argument("--p", type=_list_of(_probability))
    ps.add_argument("--index", type=_list_of(str))
    ps.add_argument("--alpha", type=float)
    ps.add_argument("--trials", type=int)
    ps.add_argument("--seed", type=_seed)
    ps.add_argument("--moments", type=_list_of(int))
    ps.add_argument("--no-ks", action="store_true")
    ps.add_argument("--parallelism", type=int)
    ps.add_argument("--method", choices=("householder", "lapack"))
    _common(ps)

    sub.add_parser("selftest", help="run the built-in oracle checks")
    return parser


def _spec_or_usage(parser, index, alpha):
    try:
        return get_spec(index, alpha)
    except ValueError as exc:
        parser.error(f"argument --index: {exc}")


def _emit(text: str, out: Path | None):
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text)


def cmd_predict(args, parser) -> int:
    spec = _spec_or_usage(parser, args.index, args.alpha)
    if args.argmax_p:
        res = argmax_p(spec, args.n or 10**6)
        row = {"index": res.index_id, "alpha": res.alpha, "p_star": res.p_star,
               "trend": res.trend, "closed_form": res.closed_form, "source": res.source}
        text = (output.to_csv([row], output.ARGMAX_COLUMNS) if args.format == "csv"
                else output.to_json(row))
        _emit(text, args.out)
        return EXIT_OK
    if args.n is None or args.p is None:
        parser.error("argument --n/--p: both are required unless --argmax-p is given")
    try:
        t3 = predict_energy(spec, args.n, args.p, GENERAL)
    except WeightDomainError as exc:
        log.error("%s", exc)
        return EXIT_DOMAIN
    row = {"index": spec.id, "alpha": spec.alpha, "n": args.n, "p": args.p,
           "predicted_t3": t3.predicted_energy, "predicted_cor": None, "paper_displayed": None,
           "leading_exponent": t3.leading_exponent}
    if has_closed_form(spec):
        cor = predict_energy(spec, args.n, args.p, CLOSED_FORM)
        row["predicted_cor"] = cor.predicted_energy
        row["paper_displayed"] = cor.paper_displayed
    text = (output.to_csv([row], output.PREDICT_COLUMNS) if args.format == "csv"
            else output.to_json(row))
    _emit(text, args.out)
    return EXIT_OK


def _load_graph(args, parser) -> tuple[Graph, int]:
    if args.graph is not None:
        try:
            g = read_edgelist(args.graph)
        except (OSError, ValueError) as exc:
            parser.error(f"argument --graph: {exc}")
        return g, g.n
    if args.n is None:
        parser.error("argument --n: required unless --graph is given")
    return sample_gnp(args.n, args.p, Seed(args.seed, args.trial)), args.n


def cmd_energy(args, parser) -> int:
    spec = _spec_or_usage(parser, args.index, args.alpha)
    g, n = _load_graph(args, parser)
    rec = run_trial(n, args.p, spec, Seed(args.seed, args.trial), compute_ks=not args.no_ks,
                    method=args.method, graph=g)
    if not rec.ok:
        log.error("%s", rec.reason)
        return EXIT_DOMAIN
    row = output.record_row(rec)
    text = (output.to_csv([row], output.record_columns()) if args.format == "csv"
            else output.to_json(row))
    if args.esd_out is not None:
        a = build_weighted_adjacency(g, spec)
        at = center_scale(a, center_value(spec, n, args.p), args.p)
        ev = eigenvalues_symmetric(at, args.method).eigenvalues / math.sqrt(n)
        args.esd_out.write_text("".join(f"{x:.17g}\n" for x in ev))
    _emit(text, args.out)
    return EXIT_OK


def cmd_esd(args, parser) -> int:
    spec = _spec_or_usage(parser, args.index, args.alpha)
    g, n = _load_graph(args, parser)
    try:
        a = build_weighted_adjacency(g, spec)
        fc = center_value(spec, n, args.p)
    except WeightDomainError as exc:
        log.error("%s", exc)
        return EXIT_DOMAIN
    s = eigenvalues_symmetric(center_scale(a, fc, args.p), args.method)
    scale = 1.0 / math.sqrt(n)
    law = SemicircleLaw.from_p(args.p)
    x = s.eigenvalues * scale
    esd_vals = np.searchsorted(x, x, side="right") / n
    cdf = law.cdf(x)
    if args.format == "csv":
        rows = [{"x": float(a_), "esd": float(b_), "semicircle_cdf": float(c_)}
                for a_, b_, c_ in zip(x, esd_vals, cdf)]
        text = output.to_csv(rows, output.ESD_COLUMNS)
    else:
        text = output.to_json({"index": spec.id, "alpha": spec.alpha, "n": n, "p": args.p,
                               "sigma": law.sigma, "ks": ks_distance(s, scale, law),
                               "eigenvalues": [float(v) for v in x]})
    _emit(text, args.out)
    return EXIT_OK


_CONFIG_KEYS = {"n", "p", "index", "alpha", "trials", "seed", "moments", "ks", "parallelism",
                "method"}


def parse_config(text: str) -> dict:
    """Parse the flat ``key=value`` sweep config; list values are comma-separated.

    Blank lines and ``#`` comments are ignored.  Raises :class:`UsageError`
    naming the offending line and field.
    """
    out: dict = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        key, sep, value = (s.strip() for s in line.partition("="))
        if not sep or not key:
            raise UsageError(f"config line {lineno}: expected key=value, got {raw.strip()!r}")
        if key not in _CONFIG_KEYS:
            raise UsageError(f"config line {lineno}: unknown field {key!r}")
        if key in out:
            raise UsageError(f"config line {lineno}: duplicate field {key!r}")
        items = [v.strip() for v in value.split(",") if v.strip()]
        if not items:
            raise UsageError(f"config line {lineno}: field {key!r} has no value")
        try:
            if key == "n":
                out[key] = [_order(v) for v in items]
            elif key == "p":
                out[key] = [_probability(v) for v in items]
            elif key == "index":
                out[key] = items
            elif key == "moments":
                out[key] = [int(v) for v in items]
            elif key == "alpha":
                out[key] = float(value)
            elif key in ("trials", "parallelism"):
                out[key] = int(value)
            elif key == "seed":
                out[key] = _seed(value)
            elif key == "ks":
                if value.lower() not in ("true", "false", "1", "0", "yes", "no"):
                    raise ValueError(f"expected a boolean, got {value!r}")
                out[key] = value.lower() in ("true", "1", "yes")
            elif key == "method":
                if value not in ("householder", "lapack"):
                    raise ValueError(f"unknown method {value!r}")
                out[key] = value
        except (ValueError, argparse.ArgumentTypeError) as exc:
            raise UsageError(f"config line {lineno}: field {key!r}: {exc}") from None
    return out


def _sweep_config(args) -> ExperimentConfig:
    values: dict = {}
    if args.config is not None:
        try:
            values = parse_config(args.config.read_text())
        except OSError as exc:
            raise UsageError(f"cannot read config: {exc}") from None
    flags = {"n": args.n, "p": args.p, "index": args.index, "alpha": args.alpha,
             "trials": args.trials, "seed": args.seed, "moments": args.moments,
             "parallelism": args.parallelism, "method": args.method}
    values.update({k: v for k, v in flags.items() if v is not None})
    if args.no_ks:
        values["ks"] = False
    missing = [k for k in ("n", "p", "index") if k not in values]
    if missing:
        raise UsageError(f"sweep needs field(s) {', '.join(missing)} (config or flags)")
    try:
        return ExperimentConfig(
            n_values=values["n"], p_values=values["p"], index_ids=values["index"],
            trials=values.get("trials", 1), master_seed=values.get("seed", 0),
            alpha=values.get("alpha"), moment_orders=values.get("moments", (2, 4)),
            compute_ks=values.get("ks", True), parallelism=values.get("parallelism", 1),
            method=values.get("method", "householder"),
        )
    except ValueError as exc:
        raise UsageError(f"invalid sweep configuration: {exc}") from None


def render_sweep(result, fmt: str) -> str:
    orders = result.config.moment_orders
    records = [output.record_row(r, orders) for r in result.records]
    summary = [output.summary_row(s) for s in result.summary]
    if fmt == "csv":
        return (output.to_csv(records, output.record_columns(orders)) + "\n"
                + output.to_csv(summary, output.SUMMARY_COLUMNS))
    meta = {"note": TOLERANCE_NOTE, "failure_fraction": result.failure_fraction,
            "master_seed": result.config.master_seed}
    return output.to_json({"metadata": meta, "records": records, "summary": summary})


def cmd_sweep(args, parser) -> int:
    try:
        cfg = _sweep_config(args)
    except UsageError as exc:
        print(f"graphenergy sweep: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    result = run_sweep(cfg)
    _emit(render_sweep(result, args.format), args.out)
    return EXIT_OK if result.ok else EXIT_DOMAIN


def selftest_checks():
    """Yield ``(name, passed, detail)`` for the quick oracle suite."""
    rng = np.random.default_rng(20240601)

    worst = 0.0
    for kind, n in (("complete", 4), ("path", 5), ("cycle", 5)):
        g = make_named(kind, n)
        for idx in ("unit", "randic", "zagreb_m1"):
            spec = get_spec(idx)
            fc = center_value(spec, n, 0.4)
            at = center_scale(build_weighted_adjacency(g, spec), fc, 0.4)
            s = eigenvalues_symmetric(at)
            for k in range(1, 5):
                worst = max(worst, abs(walk_moment(g, spec, fc, 0.4, k) - trace_moment(s, k)))
    yield "walk_moment == trace_moment", worst <= 1e-9, f"max abs diff {worst:.3g}"

    ok = True
    for _ in range(20):
        x = rng.standard_normal((30, 30))
        y = rng.standard_normal((30, 30))
        ok &= ky_fan_check(x + x.T, y + y.T).holds
    z = np.zeros((5, 5))
    ok &= ky_fan_check(z, z).holds
    yield "Ky Fan inequality", bool(ok), "20 random pairs + zero fixture"

    law = SemicircleLaw(0.5)
    lo, hi = law.support
    mass = adaptive_simpson(law.density, lo, hi, 1e-10)
    yield "semicircle normalization", abs(mass - 1.0) <= 1e-8, f"mass {mass:.12f}"
    q = adaptive_simpson(law.density, lo, 0.5, 1e-10)
    yield "semicircle cdf vs quadrature", abs(q - law.cdf(0.5)) <= 1e-8, f"diff {abs(q - law.cdf(0.5)):.3g}"
    m1 = adaptive_simpson(lambda x: abs(x) * law.density(x), lo, hi, 1e-10)
    yield "abs first moment", abs(m1 - law.abs_first_moment()) <= 1e-8, f"{m1:.10f}"

    worst = 0.0
    for n in (3, 10, 50):
        ev = eigenvalues_symmetric(make_named("complete", n).adjacency()).eigenvalues
        expect = np.array([-1.0] * (n - 1) + [n - 1.0])
        worst = max(worst, float(np.max(np.abs(ev - expect))))
    yield "K_n spectrum", worst <= 1e-9, f"max abs err {worst:.3g}"

    ev = energy(eigenvalues_symmetric(build_weighted_adjacency(make_named("path", 3), get_spec("randic"))))
    yield "P_3 Randic energy", abs(ev - 2.0) <= 1e-12, f"{ev:.15f}"


def cmd_selftest(args, parser) -> int:
    failed = 0
    for name, passed, detail in selftest_checks():
        failed += not passed
        print(f"{'PASS' if passed else 'FAIL'}  {name}  ({detail})")
    return EXIT_OK if failed == 0 else EXIT_FAIL


_COMMANDS = {"predict": cmd_predict, "energy": cmd_energy, "esd": cmd_esd,
             "sweep": cmd_sweep, "selftest": cmd_selftest}


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING,
                        stream=sys.stderr, format="%(levelname)s %(name)s: %(message)s")
    return _COMMANDS[args.command](args, parser)


if __name__ == "__main__":
    sys.exit(main())
