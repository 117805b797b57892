"""Command-line front end: sample, attack, verify, complexity.

Every subcommand prints a single machine-readable document (JSON by
default, CSV on request) to stdout or ``--out``.  Exit codes follow one
contract throughout: 0 means the attack identified its target or all
checks passed, 2 means the defense held or a check failed (argparse also
uses 2 for usage errors, with a diagnostic on stderr).

JSON field names are stable and covered by a golden-file test; floats are
rendered with Python's shortest round-trip representation.
"""

from __future__ import annotations

import argparse
import json
import sys

from . import attack as attack_mod
from . import dist, stats
from .sampler import GaussianStream, get_method, method_names
from .urand import MAX_PRECISION, BitSource

EXIT_OK = 0
EXIT_FAIL = 2

__all__ = ["main", "build_parser"]


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="divsamp",
        description="Floating-point-aware noise sampling, attacks, and verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add_common(sp: argparse.ArgumentParser, default_method: str) -> None:
        sp.add_argument("--method", default=default_method, help="sampler method name")
        sp.add_argument("--p", type=int, default=MAX_PRECISION, help="uniform grid precision")
        sp.add_argument(
            "--n", type=int, default=None, help="divisibility order, where the method has one"
        )
        sp.add_argument(
            "--seed", type=int, default=None, help="deterministic seed; omit for secure mode"
        )
        sp.add_argument("--format", choices=("json", "csv"), default="json")
        sp.add_argument("--out", default=None, help="write the report here instead of stdout")

    sp = sub.add_parser("sample", help="draw noise samples")
    add_common(sp, "naive-laplace")
    sp.add_argument("--count", type=int, default=10, help="number of draws")
    sp.add_argument(
        "--epsilon",
        type=float,
        default=None,
        help="privacy budget; Laplace noise is scaled by b = 1/epsilon",
    )

    sp = sub.add_parser("attack", help="run a candidate-elimination attack")
    add_common(sp, "naive-laplace")
    sp.add_argument(
        "--attack",
        dest="attack_kind",
        choices=("mironov", "gaussian-pair"),
        default="mironov",
    )
    sp.add_argument(
        "--candidates",
        default="0.0,1.0",
        help="comma-separated candidate values for the hidden target",
    )
    sp.add_argument(
        "--target",
        type=float,
        default=None,
        help="hidden value the simulated oracle protects (default: first candidate)",
    )
    sp.add_argument("--window", type=int, default=None, help="grid neighbourhood half-width")
    sp.add_argument("--max-queries", type=int, default=100)
    sp.add_argument(
        "--epsilon",
        type=float,
        default=None,
        help="privacy budget; Laplace noise is scaled by b = 1/epsilon",
    )

    sp = sub.add_parser("verify", help="test a sampler's distribution")
    add_common(sp, "naive-laplace")
    sp.add_argument("--count", type=int, default=100_000, help="number of draws")
    sp.add_argument(
        "--against",
        choices=("laplace", "gaussian"),
        default=None,
        help="reference family (default: the method's own family)",
    )
    sp.add_argument(
        "--epsilon",
        type=float,
        default=None,
        help="privacy budget; Laplace noise is scaled by b = 1/epsilon",
    )

    sp = sub.add_parser("complexity", help="search-cost model for single-output inversion")
    sp.add_argument("--p", type=int, default=MAX_PRECISION)
    sp.add_argument("--count", type=int, default=200, help="draws for the empirical mean")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument(
        "--theoretical-only",
        action="store_true",
        help="skip the brute-force measurement (required for p > 20)",
    )
    sp.add_argument("--window", type=int, default=attack_mod.DEFAULT_WINDOW)
    sp.add_argument("--format", choices=("json", "csv"), default="json")
    sp.add_argument("--out", default=None)
    return parser


def _fail(parser: argparse.ArgumentParser, message: str) -> None:
    parser.error(message)  # exits with code 2


def _resolve_method(parser, args):
    try:
        return get_method(args.method, args.n)
    except ValueError as exc:
        _fail(parser, str(exc))


def _noise_scale(parser, args, method) -> float:
    if args.epsilon is None:
        return 1.0
    if args.epsilon <= 0:
        _fail(parser, f"epsilon must be positive, got {args.epsilon}")
    if method.family != "laplace":
        _fail(parser, "epsilon scaling applies to Laplace-family methods only")
    return 1.0 / args.epsilon


def _emit(args, payload: dict, csv_rows: tuple[list[str], list[list]] | None) -> None:
    if args.format == "json":
        text = json.dumps(payload, indent=2) + "\n"
    else:
        header, rows = csv_rows
        meta = " ".join(
            f"{k}={'' if v is None else v}"
            for k, v in payload.items()
            if not isinstance(v, (list, dict))
        )
        lines = [f"# {meta}", ",".join(header)]
        for row in rows:
            lines.append(",".join("" if v is None else repr(v) if isinstance(v, float) else str(v) for v in row))
        text = "\n".join(lines) + "\n"
    if args.out:
        with open(args.out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _run_sample(parser, args) -> int:
    if args.count < 1:
        _fail(parser, f"count must be positive, got {args.count}")
    method = _resolve_method(parser, args)
    scale = _noise_scale(parser, args, method)
    src = BitSource(args.seed)
    drawer = method.make_drawer(src, args.p)
    values = [scale * drawer() for _ in range(args.count)]
    payload = {
        "command": "sample",
        "method": method.name,
        "family": method.family,
        "hardening": method.hardening,
        "uniforms_per_draw": method.uniforms_per_draw,
        "p": args.p,
        "seed": args.seed,
        "epsilon": args.epsilon,
        "scale": scale,
        "count": args.count,
        "values": values,
    }
    rows = [[i, v] for i, v in enumerate(values)]
    _emit(args, payload, (["index", "value"], rows))
    return EXIT_OK


def _parse_candidates(parser, text: str) -> list[float]:
    try:
        cands = [float(tok) for tok in text.split(",") if tok.strip() != ""]
    except ValueError:
        _fail(parser, f"could not parse candidate list {text!r}")
    if not cands:
        _fail(parser, "candidate list is empty")
    return cands


def _run_attack(parser, args) -> int:
    method = _resolve_method(parser, args)
    scale = _noise_scale(parser, args, method)
    candidates = _parse_candidates(parser, args.candidates)
    target = candidates[0] if args.target is None else args.target
    src = BitSource(args.seed)

    if args.attack_kind == "mironov":
        if method.family != "laplace":
            _fail(parser, "the Mironov attack applies to Laplace-family noise")
        w = attack_mod.DEFAULT_WINDOW if args.window is None else args.window
        drawer = method.make_drawer(src, args.p)
        oracle = attack_mod.QueryOracle(target, lambda: scale * drawer())
        outcome = attack_mod.mironov_attack(
            oracle, candidates, p=args.p, w=w, max_queries=args.max_queries, scale=scale
        )
    else:
        if method.family != "gaussian":
            _fail(parser, "the pair attack applies to Gaussian-family noise")
        w = attack_mod.DEFAULT_PAIR_WINDOW if args.window is None else args.window
        stream = None
        if method.name == "box-muller":
            stream = GaussianStream(src, args.p)
            drawer = stream.next
        else:
            drawer = method.make_drawer(src, args.p)
        oracle = attack_mod.QueryOracle(target, lambda: scale * drawer(), stream=stream)
        outcome = attack_mod.gaussian_pair_attack(
            oracle, candidates, p=args.p, w=w, max_queries=args.max_queries, scale=scale
        )

    payload = {
        "command": "attack",
        "attack": args.attack_kind,
        "method": method.name,
        "p": args.p,
        "window": w,
        "max_queries": args.max_queries,
        "seed": args.seed,
        "scale": scale,
        "candidates": candidates,
        "target": target,
        "status": outcome.status,
        "identified": outcome.value,
        "queries_used": outcome.queries_used,
        "trace": [
            {"query": list(q) if isinstance(q, tuple) else q, "eliminated": elim}
            for q, elim in outcome.trace
        ],
    }
    rows = [
        [i, q if not isinstance(q, tuple) else ";".join(repr(v) for v in q),
         ";".join(repr(c) for c in elim)]
        for i, (q, elim) in enumerate(outcome.trace)
    ]
    _emit(args, payload, (["round", "query", "eliminated"], rows))
    return EXIT_OK if outcome.status == "identified" else EXIT_FAIL


def _run_verify(parser, args) -> int:
    if args.count < 4:
        _fail(parser, f"verification needs at least 4 draws, got {args.count}")
    method = _resolve_method(parser, args)
    scale = _noise_scale(parser, args, method)
    reference = args.against or method.family
    src = BitSource(args.seed)
    drawer = method.make_drawer(src, args.p)
    values = [scale * drawer() for _ in range(args.count)]

    if reference == "laplace":
        cdf = lambda x: dist.laplace_cdf(x / scale)  # noqa: E731
        ref_variance = 2.0 * scale * scale
    else:
        cdf = dist.gaussian_cdf
        ref_variance = 1.0
    stat = stats.ks_statistic(values, cdf)
    critical = float(stats.ks_critical_value(args.count, 0.01))
    summary = stats.moments(values)
    ks_pass = stat < critical
    var_pass = abs(summary.variance - ref_variance) <= 0.03 * ref_variance

    payload = {
        "command": "verify",
        "method": method.name,
        "p": args.p,
        "seed": args.seed,
        "epsilon": args.epsilon,
        "scale": scale,
        "count": args.count,
        "reference": reference,
        "checks": [
            {
                "name": "ks",
                "statistic": stat,
                "critical_value": critical,
                "alpha": 0.01,
                "pass": ks_pass,
            },
            {
                "name": "variance",
                "estimate": summary.variance,
                "expected": ref_variance,
                "tolerance": 0.03,
                "pass": var_pass,
            },
        ],
        "moments": {
            "mean": summary.mean,
            "variance": summary.variance,
            "skewness": summary.skewness,
            "excess_kurtosis": summary.excess_kurtosis,
        },
        "pass": ks_pass and var_pass,
    }
    rows = [
        ["ks", stat, critical, ks_pass],
        ["variance", summary.variance, ref_variance, var_pass],
    ]
    _emit(args, payload, (["check", "value", "reference", "pass"], rows))
    return EXIT_OK if payload["pass"] else EXIT_FAIL


def _run_complexity(parser, args) -> int:
    try:
        theoretical = attack_mod.expected_checks(args.p)
    except ValueError as exc:
        _fail(parser, str(exc))
    payload = {
        "command": "complexity",
        "p": args.p,
        "seed": args.seed,
        "theoretical_checks": theoretical,
    }
    rows = [["theoretical_checks", theoretical]]
    if args.theoretical_only:
        payload["empirical_mean_checks"] = None
        payload["ratio"] = None
        _emit(args, payload, (["quantity", "value"], rows))
        return EXIT_OK
    if args.p > attack_mod.BRUTE_FORCE_MAX_PRECISION:
        _fail(
            parser,
            f"empirical measurement is limited to p <= {attack_mod.BRUTE_FORCE_MAX_PRECISION}; "
            f"use --theoretical-only for p = {args.p}",
        )
    if args.count < 1:
        _fail(parser, f"count must be positive, got {args.count}")
    src = BitSource(args.seed)
    stream = GaussianStream(src, args.p)
    total = 0
    for _ in range(args.count):
        n1 = stream.next()  # cosine-branch output
        stream.next()  # discard the sine half; inversion targets the cosine branch
        total += attack_mod.brute_force_single_gaussian(n1, args.p, args.window).checks
    empirical = total / args.count
    payload["count"] = args.count
    payload["empirical_mean_checks"] = empirical
    payload["ratio"] = empirical / theoretical
    rows.append(["empirical_mean_checks", empirical])
    rows.append(["ratio", payload["ratio"]])
    _emit(args, payload, (["quantity", "value"], rows))
    return EXIT_OK


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    if not 1 <= args.p <= MAX_PRECISION:
        _fail(parser, f"precision must be in [1, {MAX_PRECISION}], got {args.p}")
    if getattr(args, "n", None) is not None and args.n < 1:
        _fail(parser, f"divisibility must be a positive integer, got {args.n}")
    if getattr(args, "window", None) is not None and args.window < 0:
        _fail(parser, f"window must be non-negative, got {args.window}")
    if args.command == "sample":
        return _run_sample(parser, args)
    if args.command == "attack":
        return _run_attack(parser, args)
    if args.command == "verify":
        return _run_verify(parser, args)
    return _run_complexity(parser, args)


if __name__ == "__main__":
    raise SystemExit(main())
