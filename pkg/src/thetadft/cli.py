"""Command-line front end: run identity, q-series and spectral checks and report.

Exit status is 0 when every executed check passes, 2 when any check FAILs or
is DEGENERATE, and 1 on usage or internal errors.
"""

from __future__ import annotations

import argparse
import json
import math
import os
import sys
from dataclasses import asdict, dataclass, field

import numpy as np

from . import __version__
from .dft import dft_matrix, eigen_residual, matveev_vector, multiplicities, numerical_multiplicities
from .identities import lookup, registry, verify, SKIPPED
from .numerics import SampleRegion, sample_points
from .qidentities import (
    check_odd_square_identity,
    check_rogers_ramanujan,
    check_square_identity,
    check_triangular_identity,
    check_triple_product,
    rr_substitution_trace,
)

COMMANDS = ("verify", "qcheck", "spectral", "all")
SEED_ENV = "THETADFT_SEED"
EXIT_OK, EXIT_ERROR, EXIT_FAIL = 0, 1, 2
OK_VERDICTS = {"PASS", SKIPPED}


@dataclass
class RunConfig:
    command: str = "all"
    identity_filter: tuple[str, ...] | None = None
    samples: int = 50
    tol: float = 1e-9
    seed: int = 42
    nu: int = 1
    q_order: int = 100
    z_halfwidth: int = 10
    im_tau_min: float = 0.8
    im_tau_max: float = 2.0
    re_tau_halfwidth: float = 0.5
    x_box_halfwidth: float = 0.5
    n: tuple[int, ...] = tuple(range(2, 9))
    output_path: str | None = field(default=None, compare=False)
    format: str = "text"

    def region(self) -> SampleRegion:
        return SampleRegion(self.im_tau_min, self.im_tau_max, self.re_tau_halfwidth, self.x_box_halfwidth, self.seed)

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise ValueError(f"unknown command {self.command!r}")
        if self.samples < 1:
            raise ValueError("--samples must be >= 1")
        if not (math.isfinite(self.tol) and self.tol > 0):
            raise ValueError("--tol must be a positive finite number")
        if self.nu < 1:
            raise ValueError("--nu must be >= 1")
        if self.q_order < 32:
            raise ValueError("--q-order must be >= 32 (the odd-square check needs it)")
        if self.z_halfwidth < 1:
            raise ValueError("--z-halfwidth must be >= 1")
        if any(k < 2 for k in self.n):
            raise ValueError("--n values must be >= 2")
        if self.format not in ("text", "json"):
            raise ValueError("--format must be text or json")
        self.region()
        for name in self.identity_filter or ():
            lookup(name)


def _num(v):
    """JSON-safe float: non-finite values become strings."""
    v = float(v)
    return v if math.isfinite(v) else repr(v)


def _cx(z) -> list:
    return [_num(z.real), _num(z.imag)]


def _frac(v):
    return int(v) if v.denominator == 1 else f"{v.numerator}/{v.denominator}"


# -- suites ----------------------------------------------------------------


def run_verify(cfg: RunConfig) -> list[dict]:
    defs = registry() if cfg.identity_filter is None else [lookup(n) for n in cfg.identity_filter]
    region = cfg.region()
    out = []
    for d in defs:
        if cfg.nu > 1 and not d.nu_applicable:
            out.append({"name": d.name, "verdict": SKIPPED, "metrics": {"nu": cfg.nu}, "witnesses": []})
            continue
        rep = verify(d, region, cfg.samples, cfg.tol, cfg.nu)
        witnesses = [
            {
                "x": _cx(s.x),
                "tau": _cx(s.tau),
                "abs_residual": _num(s.abs_residual),
                "rel_residual": _num(s.residual),
                **({"error": s.error} if s.error else {}),
            }
            for s in rep.per_sample
        ]
        metrics = {
            "samples": rep.sample_count,
            "max_abs_residual": _num(rep.max_abs_residual),
            "max_rel_residual": _num(rep.max_rel_residual),
            "tol": rep.tolerance,
            "nu": rep.nu,
        }
        out.append({"name": d.name, "verdict": rep.verdict, "metrics": metrics, "witnesses": witnesses})
    return out


def _q_entry(res, extra=None) -> dict:
    mm = res.first_mismatch
    witnesses = []
    if mm is not None:
        witnesses.append({"e_q": _frac(mm.e_q), "e_z": mm.e_z, "lhs": mm.lhs, "rhs": mm.rhs})
    metrics = {"q_order": res.q_order, "D": res.D}
    if res.z_window is not None:
        metrics["z_window"] = list(res.z_window)
        metrics["window_complete"] = res.window_complete
    metrics.update(extra or {})
    return {"name": res.name, "verdict": res.verdict, "metrics": metrics, "witnesses": witnesses}


def run_qcheck(cfg: RunConfig) -> list[dict]:
    N, w = cfg.q_order, (-cfg.z_halfwidth, cfg.z_halfwidth)
    rr = check_rogers_ramanujan(N, w)
    trace = rr_substitution_trace(N, w)
    rr_entry = _q_entry(
        rr,
        {
            "trace_verdict": trace.verdict,
            "trace_checks": {name: cmp.equal for name, cmp in trace.checks},
        },
    )
    # the two derivations must agree, including the first mismatch
    if trace.verdict != rr.verdict or trace.first_mismatch != rr.first_mismatch:
        rr_entry["verdict"] = "FAIL"
    return [
        _q_entry(check_triple_product(N, w)),
        rr_entry,
        _q_entry(check_square_identity(N)),
        _q_entry(check_odd_square_identity(N)),
        _q_entry(check_triangular_identity(N)),
    ]


def run_spectral(cfg: RunConfig) -> list[dict]:
    points = sample_points(cfg.region(), cfg.samples)
    out = []
    for n in cfg.n:
        analytic = multiplicities(n)
        counted = numerical_multiplicities(n)
        # eigenvalues with multiplicity 0 must give the zero vector; record its size
        zero = {}
        for k in range(4):
            if analytic.for_k(k) == 0:
                sizes = [np.max(np.abs(matveev_vector(n, k, x, tau, cfg.nu).components)) for x, tau in points]
                zero[str(k)] = _num(max(sizes))
        ok = analytic == counted and all(v <= cfg.tol for v in zero.values())
        out.append(
            {
                "name": f"MULT n={n}",
                "verdict": "PASS" if ok else "FAIL",
                "metrics": {
                    "analytic": list(analytic.as_tuple()),
                    "numerical": list(counted.as_tuple()),
                    "zero_vector_max_abs": zero,
                },
                "witnesses": [],
            }
        )
        A = dft_matrix(n)
        for k in range(4):
            if analytic.for_k(k) == 0:
                continue
            worst, where = 0.0, None
            for x, tau in points:
                r = eigen_residual(A, matveev_vector(n, k, x, tau, cfg.nu))
                if r > worst or where is None:
                    worst, where = max(worst, r), (x, tau)
            out.append(
                {
                    "name": f"EIGEN n={n} k={k}",
                    "verdict": "PASS" if worst <= cfg.tol else "FAIL",
                    "metrics": {"max_residual": _num(worst), "samples": len(points), "nu": cfg.nu, "tol": cfg.tol},
                    "witnesses": [{"x": _cx(where[0]), "tau": _cx(where[1].value)}] if worst > cfg.tol else [],
                }
            )
    return out


def run(cfg: RunConfig) -> tuple[int, dict]:
    """Execute ``cfg`` and return ``(exit status, report)``."""
    cfg.validate()
    results: list[dict] = []
    if cfg.command in ("verify", "all"):
        results += run_verify(cfg)
    if cfg.command in ("qcheck", "all"):
        results += run_qcheck(cfg)
    if cfg.command in ("spectral", "all"):
        results += run_spectral(cfg)
    config = asdict(cfg)
    config.pop("output_path")
    config["n"] = list(cfg.n)
    if cfg.identity_filter is not None:
        config["identity_filter"] = list(cfg.identity_filter)
    report = {"version": __version__, "config": config, "results": results}
    status = EXIT_OK if all(r["verdict"] in OK_VERDICTS for r in results) else EXIT_FAIL
    return status, report


# -- rendering --------------------------------------------------------------


def render_json(report: dict) -> str:
    return json.dumps(report, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def _headline(r: dict) -> str:
    m = r["metrics"]
    for key in ("max_rel_residual", "max_residual"):
        if key in m:
            v = m[key]
            return f"{key}={v:.3e}" if isinstance(v, float) else f"{key}={v}"
    if "analytic" in m:
        return "multiplicities=" + ",".join(map(str, m["analytic"]))
    if "q_order" in m:
        return f"q_order={m['q_order']}"
    return ""


def render_text(report: dict) -> str:
    lines = []
    width = max((len(r["name"]) for r in report["results"]), default=0)
    for r in report["results"]:
        lines.append(f"{r['name']:<{width}}  {r['verdict']:<10} {_headline(r)}".rstrip())
    bad = [r for r in report["results"] if r["verdict"] not in OK_VERDICTS]
    counts = {}
    for r in report["results"]:
        counts[r["verdict"]] = counts.get(r["verdict"], 0) + 1
    lines.append("")
    lines.append("summary: " + ", ".join(f"{k}={v}" for k, v in sorted(counts.items())))
    for r in bad:
        if r["witnesses"] and "e_q" in r["witnesses"][0]:
            w = r["witnesses"][0]
            lines.append(f"  {r['name']}: first mismatch at q^{w['e_q']} z^{w['e_z']}: lhs={w['lhs']} rhs={w['rhs']}")
        else:
            lines.append(f"  {r['name']}: {r['verdict']} ({_headline(r)})")
    return "\n".join(lines) + "\n"


# -- argument parsing -------------------------------------------------------


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 on usage errors; 2 is reserved for FAIL verdicts
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_ERROR, f"{self.prog}: error: {message}\n")


def _default_seed() -> int:
    raw = os.environ.get(SEED_ENV)
    if raw is None:
        return 42
    try:
        return int(raw)
    except ValueError:
        raise SystemExit(f"{SEED_ENV} must be an integer, got {raw!r}")


def _size_list(text: str) -> tuple[int, ...]:
    """``4``, ``2,3,5`` or ``2-8``."""
    out = []
    for part in text.split(","):
        if "-" in part:
            lo, hi = part.split("-", 1)
            out.extend(range(int(lo), int(hi) + 1))
        else:
            out.append(int(part))
    return tuple(out)


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--samples", type=int, default=50, help="sample points per identity (default 50)")
    common.add_argument("--tol", type=float, default=1e-9, help="relative residual tolerance (default 1e-9)")
    common.add_argument("--seed", type=int, default=None, help=f"sampling seed (default ${SEED_ENV} or 42)")
    common.add_argument("--nu", type=int, default=1, help="theta exponent parameter (default 1)")
    common.add_argument("--q-order", type=int, default=100, help="q-series truncation order (default 100)")
    common.add_argument("--z-halfwidth", type=int, default=10, help="z window half-width (default 10)")
    common.add_argument("--identity", action="append", default=None, help="restrict verify to this identity (repeatable)")
    common.add_argument("--n", type=_size_list, default=tuple(range(2, 9)), help="DFT sizes, e.g. 4 or 2-8 (default 2-8)")
    common.add_argument("--im-tau-min", type=float, default=0.8)
    common.add_argument("--im-tau-max", type=float, default=2.0)
    common.add_argument("--re-tau-halfwidth", type=float, default=0.5)
    common.add_argument("--x-box-halfwidth", type=float, default=0.5)
    common.add_argument("--output", default=None, help="write the report here instead of stdout")
    common.add_argument("--format", choices=("text", "json"), default="text")

    parser = _Parser(prog="thetadft", description="Verify theta-function identities, q-series identities and DFT eigenvectors.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    for name, help_text in (
        ("verify", "sample-based checks of the theta identity suite"),
        ("qcheck", "exact q-series checks"),
        ("spectral", "DFT multiplicities and theta eigenvector residuals"),
        ("all", "everything above"),
    ):
        sub.add_parser(name, parents=[common], help=help_text)
    return parser


def config_from_args(args: argparse.Namespace) -> RunConfig:
    return RunConfig(
        command=args.command,
        identity_filter=tuple(args.identity) if args.identity else None,
        samples=args.samples,
        tol=args.tol,
        seed=_default_seed() if args.seed is None else args.seed,
        nu=args.nu,
        q_order=args.q_order,
        z_halfwidth=args.z_halfwidth,
        im_tau_min=args.im_tau_min,
        im_tau_max=args.im_tau_max,
        re_tau_halfwidth=args.re_tau_halfwidth,
        x_box_halfwidth=args.x_box_halfwidth,
        n=args.n,
        output_path=args.output,
        format=args.format,
    )


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    cfg = config_from_args(args)
    try:
        status, report = run(cfg)
    except (KeyError, ValueError) as exc:
        msg = exc.args[0] if isinstance(exc, KeyError) and exc.args else exc
        print(f"thetadft: error: {msg}", file=sys.stderr)
        return EXIT_ERROR
    text = render_json(report) if cfg.format == "json" else render_text(report)
    if cfg.output_path:
        try:
            with open(cfg.output_path, "w", encoding="utf-8") as fh:
                fh.write(text)
        except OSError as exc:
            print(f"thetadft: error: cannot write {cfg.output_path}: {exc.strerror}", file=sys.stderr)
            return EXIT_ERROR
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
