"""Command-line front end.

Runs build_partition -> domain_window -> generate_itineraries ->
batch_solve and writes the report as JSON or CSV. Exit status is 0 on
full success, 2 if any itinerary failed and 1 on a configuration error.

Example::

    tractorbit --family exp --lambda 1,0 --radius 1 --period 1 --window 1
"""
from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass
from pathlib import Path

from . import function_model as fm
from .enumerator import BatchReport, batch_solve, generate_itineraries
from .errors import TractorbitError
from .function_model import Family, FunctionSpec
from .partition import R_MIN, PartitionSpec, build_partition, domain_window
from .render import render_diagnostic
from .solver import DEFAULT_MAX_ITER, DEFAULT_TOL

CSV_COLUMNS = ["itinerary", "period", "re(w)", "im(w)", "re(mult)", "im(mult)", "|mult|", "residual", "iterations"]


class ConfigError(Exception):
    pass


@dataclass
class JobConfig:
    family: str = "exp"
    lam: complex = 1.0 + 0j
    pole: complex = 0j
    R: float | None = None
    delta_angle: float = math.pi
    period: int = 1
    window: int = 2
    minimal_only: bool = False
    tol: float = DEFAULT_TOL
    max_iter: int = DEFAULT_MAX_ITER
    output_format: str = "json"
    image_path: str | None = None
    workers: int = 1

    def validate(self) -> None:
        try:
            Family(self.family)
        except ValueError:
            raise ConfigError(f"unknown family {self.family!r}; choose from exp, sin, expoverlinear") from None
        if self.period < 1:
            raise ConfigError("period must be ≥ 1")
        if self.window < 1:
            raise ConfigError("window must be ≥ 1")
        if not self.tol >= 1e-14:
            raise ConfigError("tol must be ≥ 1e-14")
        if self.max_iter < 1:
            raise ConfigError("max-iter must be ≥ 1")
        if self.R is not None and not (self.R > 0 and math.isfinite(self.R)):
            raise ConfigError("radius must be a positive number")
        if not math.isfinite(self.delta_angle):
            raise ConfigError("delta-angle must be finite")
        if self.output_format not in ("json", "csv"):
            raise ConfigError("format must be json or csv")
        if self.workers < 1:
            raise ConfigError("workers must be ≥ 1")

    def function_spec(self) -> FunctionSpec:
        try:
            return FunctionSpec(Family(self.family), lam=self.lam, pole=self.pole)
        except ValueError as exc:
            raise ConfigError(str(exc)) from None

    def radius(self, spec: FunctionSpec) -> float:
        if self.R is not None:
            return self.R
        return max(R_MIN, 2.0 * fm.singular_radius(spec))


def _cplx(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}


def parse_complex(text: str) -> complex:
    """'re,im' or a single real number."""
    parts = [p.strip() for p in str(text).split(",")]
    try:
        if len(parts) == 1:
            return complex(float(parts[0]), 0.0)
        if len(parts) == 2:
            return complex(float(parts[0]), float(parts[1]))
    except ValueError:
        pass
    raise ConfigError(f"cannot parse complex value {text!r}; expected re,im")


def report_to_dict(config: JobConfig, part: PartitionSpec, report: BatchReport) -> dict:
    cfg = asdict(config)
    cfg["lam"] = _cplx(config.lam)
    cfg["pole"] = _cplx(config.pole)
    cfg["R"] = part.R
    components = []
    for c in part.components:
        entry = {"kind": c.kind.value}
        if c.kind is fm.ComponentKind.POLE_COMPONENT:
            entry.update(pole=_cplx(c.pole), order=c.order)
        components.append(entry)
    return {
        "config": cfg,
        "partition": {
            "R": part.R,
            "delta_angle": part.delta_angle,
            "domains_used": [str(d) for d in report.window],
            "components": components,
            "tracts": [
                {"index": t.index, "base_point": _cplx(t.base_point), "description": t.description}
                for t in part.tracts
            ],
        },
        "results": [
            {
                "itinerary": [str(d) for d in r.itinerary],
                "period": r.period,
                "point": _cplx(r.point),
                "orbit": [_cplx(z) for z in r.orbit],
                "multiplier": _cplx(r.multiplier),
                "multiplier_modulus": r.multiplier_modulus,
                "residual": r.residual,
                "iterations": r.iterations,
                "step_ratios": list(r.step_ratios),
            }
            for r in report.results
        ],
        "failures": [
            {"itinerary": [str(d) for d in f.itinerary], "error": f.error, "message": f.message}
            for f in report.failures
        ],
        "stats": {
            "min_pairwise_distance": None if math.isinf(report.min_pairwise_distance) else report.min_pairwise_distance,
            "minimal_count": report.minimal_count,
            "solved": len(report.results),
            "failed": len(report.failures),
        },
    }


def report_to_csv(report: BatchReport) -> str:
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in report.results:
        writer.writerow([
            str(r.itinerary),
            r.period,
            *(f"{x:.17g}" for x in (r.point.real, r.point.imag, r.multiplier.real, r.multiplier.imag,
                                     r.multiplier_modulus, r.residual)),
            r.iterations,
        ])
    return buf.getvalue()


def execute(config: JobConfig) -> tuple[PartitionSpec, BatchReport]:
    """The pipeline without serialization; raises ConfigError on bad setups."""
    config.validate()
    spec = config.function_spec()
    try:
        part = build_partition(spec, config.radius(spec), config.delta_angle)
        window = domain_window(part, config.window)
    except TractorbitError as exc:
        raise ConfigError(f"{type(exc).__name__}: {exc}") from None
    itineraries = generate_itineraries(window, config.period, config.minimal_only)
    report = batch_solve(part, itineraries, tol=config.tol, max_iter=config.max_iter,
                         workers=config.workers, window=window)
    return part, report


def run(config: JobConfig) -> tuple[int, str]:
    """Execute a job; returns (exit status, serialized report or error message)."""
    try:
        part, report = execute(config)
    except ConfigError as exc:
        return 1, f"error: {exc}"
    if config.output_format == "csv":
        text = report_to_csv(report)
    else:
        text = json.dumps(report_to_dict(config, part, report), indent=2, allow_nan=False) + "\n"
    if config.image_path:
        render_diagnostic(part, report.results, config.image_path)
    return (2 if report.failures else 0), text


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise ConfigError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tractorbit", description="Repelling periodic points with prescribed itineraries.")
    p.add_argument("--config", help="JSON file with option values; command-line flags override it")
    p.add_argument("--family", choices=[f.value for f in Family])
    p.add_argument("--lambda", dest="lam", help="re,im")
    p.add_argument("--pole", help="re,im")
    p.add_argument("--radius", type=float)
    p.add_argument("--delta-angle", type=float)
    p.add_argument("--period", type=int)
    p.add_argument("--window", type=int)
    p.add_argument("--minimal-only", action="store_true", default=None)
    p.add_argument("--tol", type=float)
    p.add_argument("--max-iter", type=int)
    p.add_argument("--format", dest="output_format", choices=["json", "csv"])
    p.add_argument("--image", dest="image_path")
    p.add_argument("--out")
    p.add_argument("--workers", type=int)
    return p


_FILE_KEYS = {
    "family": "family", "lambda": "lam", "lam": "lam", "pole": "pole", "radius": "R", "R": "R",
    "delta_angle": "delta_angle", "period": "period", "window": "window", "minimal_only": "minimal_only",
    "tol": "tol", "max_iter": "max_iter", "format": "output_format", "output_format": "output_format",
    "image": "image_path", "image_path": "image_path", "workers": "workers",
}


def _complex_value(v) -> complex:
    if isinstance(v, dict):
        return complex(float(v["re"]), float(v.get("im", 0.0)))
    if isinstance(v, (list, tuple)):
        return complex(float(v[0]), float(v[1]))
    if isinstance(v, (int, float)):
        return complex(v)
    return parse_complex(v)


def config_from_args(argv=None) -> tuple[JobConfig, str | None]:
    args = build_parser().parse_args(argv)
    values: dict = {}
    if args.config:
        try:
            raw = json.loads(Path(args.config).read_text())
        except (OSError, json.JSONDecodeError) as exc:
            raise ConfigError(f"cannot read config file: {exc}") from None
        for key, v in raw.items():
            name = _FILE_KEYS.get(key.replace("-", "_"))
            if name is None:
                raise ConfigError(f"unknown config key {key!r}")
            values[name] = v
    flags = {
        "family": args.family, "lam": args.lam, "pole": args.pole, "R": args.radius,
        "delta_angle": args.delta_angle, "period": args.period, "window": args.window,
        "minimal_only": args.minimal_only, "tol": args.tol, "max_iter": args.max_iter,
        "output_format": args.output_format, "image_path": args.image_path, "workers": args.workers,
    }
    values.update({k: v for k, v in flags.items() if v is not None})
    if "family" not in values:
        raise ConfigError("--family is required (exp, sin or expoverlinear)")
    try:
        for key in ("lam", "pole"):
            if key in values:
                values[key] = _complex_value(values[key])
        for key in ("R", "delta_angle", "tol"):
            if key in values:
                values[key] = float(values[key])
        for key in ("period", "window", "max_iter", "workers"):
            if key in values:
                values[key] = int(values[key])
    except (TypeError, ValueError, KeyError) as exc:
        raise ConfigError(f"bad config value: {exc}") from None
    return JobConfig(**values), args.out


def main(argv=None) -> int:
    try:
        config, out = config_from_args(argv)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    status, text = run(config)
    if status == 1:
        print(text, file=sys.stderr)
        return status
    if out:
        try:
            Path(out).write_text(text)
        except OSError as exc:
            print(f"error: cannot write {out}: {exc}", file=sys.stderr)
            return 1
    else:
        sys.stdout.write(text)
    return status


if __name__ == "__main__":
    sys.exit(main())
