"""Command-line harness running the verification suites and emitting reports.

Usage:
    rp2quant all --seed 1 --format json --out report.json
    rp2quant heisenberg --grid-n 2048 --tol ccr-residual=1e-9

Exit codes: 0 all checks passed, 1 at least one failure, 2 configuration
error.  Fixed (seed, config) reproduces every residual bit-for-bit; wall
times are the only volatile report fields.
"""

import argparse
import csv
import io
import json
import sys
import time
from dataclasses import asdict, dataclass

from . import __version__
from .checks import SUITES, SuiteConfig, check_rng, checks_for_suite
from .errors import ConfigError

FORMATS = ("text", "json", "csv")


@dataclass(frozen=True)
class CheckResult:
    name: str
    suite: str
    residual: float
    tolerance: float
    passed: bool
    wall_time_ms: float
    paper_anchor: str


def run_suite(suite: str, cfg: SuiteConfig) -> list[CheckResult]:
    """Execute every check of the suite with per-check seeded RNG streams."""
    results = []
    for check in checks_for_suite(suite):
        tol = float(cfg.tol_overrides.get(check.name, check.tolerance))
        rng = check_rng(cfg.rng_seed, check.name)
        t0 = time.perf_counter()
        residual = float(check.fn(rng, cfg))
        dt = (time.perf_counter() - t0) * 1e3
        results.append(
            CheckResult(
                name=check.name,
                suite=check.suite,
                residual=residual,
                tolerance=tol,
                passed=residual <= tol,
                wall_time_ms=dt,
                paper_anchor=check.anchor,
            )
        )
    return results


def render_report(results: list[CheckResult], fmt: str, cfg: SuiteConfig) -> str:
    if fmt == "json":
        payload = {
            "version": __version__,
            "seed": cfg.rng_seed,
            "config": {
                "lmax": cfg.lmax,
                "grid_n": cfg.grid_n,
                "radial_nodes": cfg.radial_nodes,
                "samples": cfg.samples,
                "tol_overrides": dict(sorted(cfg.tol_overrides.items())),
            },
            "checks": [asdict(r) for r in results],
            "summary": {
                "passed": sum(r.passed for r in results),
                "failed": sum(not r.passed for r in results),
                "total": len(results),
                "total_ms": sum(r.wall_time_ms for r in results),
            },
        }
        return json.dumps(payload, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        buf = io.StringIO()
        writer = csv.writer(buf)
        writer.writerow(
            ["name", "suite", "residual", "tolerance", "passed",
             "wall_time_ms", "paper_anchor"]
        )
        for r in results:
            writer.writerow(
                [r.name, r.suite, f"{r.residual:.17g}", f"{r.tolerance:.17g}",
                 r.passed, f"{r.wall_time_ms:.3f}", r.paper_anchor]
            )
        return buf.getvalue()
    lines = []
    width = max((len(r.name) for r in results), default=10)
    for r in results:
        mark = "PASS" if r.passed else "FAIL"
        lines.append(
            f"[{mark}] {r.name:<{width}}  residual {r.residual:11.4e}  "
            f"tol {r.tolerance:8.1e}  {r.wall_time_ms:9.2f} ms"
        )
    passed = sum(r.passed for r in results)
    lines.append(f"{passed}/{len(results)} checks passed")
    return "\n".join(lines) + "\n"


def emit_report(results: list[CheckResult], fmt: str, path, cfg: SuiteConfig) -> None:
    """Write the rendered report to a file path, or stdout when path is None."""
    text = render_report(results, fmt, cfg)
    if path is None:
        sys.stdout.write(text)
    else:
        with open(path, "w") as fh:
            fh.write(text)


def _parse_tol(items) -> dict:
    overrides = {}
    for item in items or []:
        if "=" not in item:
            raise ConfigError(f"--tol expects name=value, got {item!r}")
        name, value = item.split("=", 1)
        try:
            overrides[name.strip()] = float(value)
        except ValueError as exc:
            raise ConfigError(f"bad tolerance value in {item!r}") from exc
    return overrides


def _read_config_file(path) -> dict:
    """key=value per line; '#' comments; tol.NAME=VALUE for overrides."""
    values: dict = {"tol_overrides": {}}
    with open(path) as fh:
        for raw in fh:
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise ConfigError(f"bad config line {raw!r}")
            key, value = (s.strip() for s in line.split("=", 1))
            if key.startswith("tol."):
                values["tol_overrides"][key[4:]] = float(value)
            elif key in ("lmax", "grid_n", "radial_nodes", "samples", "seed"):
                values[key] = int(value)
            elif key in ("format", "out"):
                values[key] = value
            else:
                raise ConfigError(f"unknown config key {key!r}")
    return values


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rp2quant",
        description="Run the numerical verification suites and emit a report.",
    )
    parser.add_argument("suite", choices=SUITES + ("all",))
    parser.add_argument("--lmax", type=int, default=None)
    parser.add_argument("--grid-n", type=int, default=None)
    parser.add_argument("--radial-nodes", type=int, default=None)
    parser.add_argument("--samples", type=int, default=None)
    parser.add_argument("--seed", type=int, default=None)
    parser.add_argument(
        "--tol", action="append", metavar="NAME=VALUE",
        help="override one check tolerance (repeatable)",
    )
    parser.add_argument("--format", choices=FORMATS, default=None)
    parser.add_argument("--out", default=None, help="report file (default stdout)")
    parser.add_argument("--config", default=None, help="key=value config file")
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        file_values = _read_config_file(args.config) if args.config else {}
        tol = dict(file_values.get("tol_overrides", {}))
        tol.update(_parse_tol(args.tol))

        def pick(flag, key, default):
            if flag is not None:
                return flag
            return file_values.get(key, default)

        cfg = SuiteConfig(
            lmax=pick(args.lmax, "lmax", 8),
            grid_n=pick(args.grid_n, "grid_n", 1024),
            radial_nodes=pick(args.radial_nodes, "radial_nodes", 64),
            samples=pick(args.samples, "samples", 200),
            rng_seed=pick(args.seed, "seed", 0),
            tol_overrides=tol,
        )
        fmt = pick(args.format, "format", "text")
        if fmt not in FORMATS:
            raise ConfigError(f"unknown format {fmt!r}")
        out = pick(args.out, "out", None)
        known = {c.name for c in checks_for_suite("all")}
        unknown = set(tol) - known
        if unknown:
            raise ConfigError(f"tolerance overrides for unknown checks: {sorted(unknown)}")
        results = run_suite(args.suite, cfg)
    except (ConfigError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    emit_report(results, fmt, out, cfg)
    return 0 if all(r.passed for r in results) else 1


if __name__ == "__main__":
    sys.exit(main())
