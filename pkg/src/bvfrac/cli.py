"""Command-line front end: ``bvfrac {variation, boxdim, fracint, corpus}``.

Reports are JSON with a top-level ``"schema": 1``; the data payload carries no
timestamps so identical configurations give byte-identical output.  All
numbers come from the library; this module only parses, dispatches and
formats.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
from dataclasses import asdict, dataclass, field
from pathlib import Path
from typing import Optional

import numpy as np

from . import __version__
from .boxdim import dimension_estimate, estimate_holder
from .fracint import (
    FracParams,
    QuadratureScheme,
    bv_preservation_check,
    frac_integral,
    monotone_image_check,
    separable_reduction_check,
    sup_bound_check,
)
from .gridfn import CORPUS, SENSES, GridFunction, Rect, grid_to_csv, read_grid, sample_corpus, write_grid
from .variation import variation, variation_profile

SCHEMA = 1
COMMANDS = ("variation", "boxdim", "fracint", "corpus")
CHECKS = ("sup-bound", "monotone", "bv-preservation", "separable")
_SENSE_NAMES = {s.lower(): s for s in SENSES}


class UsageError(ValueError):
    pass


@dataclass
class RunConfig:
    command: str
    corpus: Optional[str] = None
    params: dict = field(default_factory=dict)
    input: Optional[str] = None
    m: Optional[int] = None
    n: Optional[int] = None
    rect: tuple = (0.0, 1.0, 0.0, 1.0)
    levels: list = field(default_factory=lambda: [3, 4, 5, 6, 7, 8])
    base: int = 2
    senses: list = field(default_factory=lambda: list(SENSES))
    profile: bool = False
    alpha: Optional[float] = None
    beta: Optional[float] = None
    check: Optional[str] = None
    resolutions: list = field(default_factory=lambda: [64, 128, 256])
    refinement: int = 1
    output: Optional[str] = None
    format: str = "json"
    plot: Optional[str] = None

    def validate(self) -> None:
        if self.command not in COMMANDS:
            raise UsageError(f"unknown command {self.command!r}")
        if self.command != "corpus" or self.corpus is not None:
            if (self.corpus is None) == (self.input is None) and self.command != "corpus":
                raise UsageError("give exactly one of --corpus or --input")
        if self.corpus is not None and self.corpus not in CORPUS:
            raise UsageError(f"unknown corpus id {self.corpus!r}; known: {', '.join(sorted(CORPUS))}")
        if not self.levels or any(b <= a for a, b in zip(self.levels, self.levels[1:])):
            raise UsageError("level schedule must be nonempty and strictly increasing")
        if self.command == "variation" and not self.senses:
            raise UsageError("--senses must name at least one sense")
        if self.command == "fracint":
            if self.alpha is None or self.beta is None:
                raise UsageError("fracint needs --alpha and --beta")
            if not (self.alpha > 0 and self.beta > 0):
                raise UsageError("--alpha and --beta must be positive")
        if self.check is not None and self.check not in CHECKS:
            raise UsageError(f"unknown check {self.check!r}")
        if self.base < 2:
            raise UsageError("--base must be at least 2")
        if self.format not in ("json", "csv"):
            raise UsageError(f"unknown format {self.format!r}")
        for v in (self.m, self.n):
            if v is not None and v < 1:
                raise UsageError("--m and --n must be positive")


# ---------------------------------------------------------------------------
# parsing


def _levels(text: str) -> list[int]:
    text = text.strip()
    try:
        if ".." in text:
            lo, hi = text.split("..", 1)
            return list(range(int(lo), int(hi) + 1))
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad level schedule {text!r}; use 3..8 or 3,4,5") from None


def _ints(text: str) -> list[int]:
    try:
        return [int(t) for t in text.split(",") if t.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _senses(text: str) -> list[str]:
    out = []
    for t in text.split(","):
        key = t.strip().lower().replace("é", "e").replace("á", "a")
        if not key:
            continue
        if key not in _SENSE_NAMES:
            raise argparse.ArgumentTypeError(f"unknown sense {t!r}; choose from {', '.join(_SENSE_NAMES)}")
        out.append(_SENSE_NAMES[key])
    return out


def _param(text: str) -> tuple[str, float]:
    key, sep, val = text.partition("=")
    if not sep:
        raise argparse.ArgumentTypeError(f"parameter must look like name=value, got {text!r}")
    try:
        return key.strip(), float(val)
    except ValueError:
        raise argparse.ArgumentTypeError(f"parameter value {val!r} is not a number") from None


def _rect(text: str) -> tuple:
    try:
        vals = tuple(float(t) for t in text.split(","))
    except ValueError:
        raise argparse.ArgumentTypeError(f"--rect expects a,b,c,d, got {text!r}") from None
    if len(vals) != 4:
        raise argparse.ArgumentTypeError("--rect expects four numbers a,b,c,d")
    return vals


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="bvfrac", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=f"bvfrac {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p, default_m=None):
        src = p.add_mutually_exclusive_group()
        src.add_argument("--corpus", help="corpus identifier")
        src.add_argument("--input", help="grid file (.json or .csv)")
        p.add_argument("--param", action="append", type=_param, default=[], metavar="NAME=VALUE")
        p.add_argument("--m", type=int, default=default_m, help="cells along x")
        p.add_argument("--n", type=int, help="cells along y (default: m)")
        p.add_argument("--rect", type=_rect, default=(0.0, 1.0, 0.0, 1.0), metavar="A,B,C,D")
        p.add_argument("--output", "-o", help="write the report here instead of stdout")
        p.add_argument("--format", choices=("json", "csv"), default="json")

    p = sub.add_parser("variation", help="variation functionals")
    common(p)
    p.add_argument("--senses", type=_senses, default=list(SENSES))
    p.add_argument("--profile", action="store_true", help="add refinement-trend diagnoses")

    p = sub.add_parser("boxdim", help="graph box-dimension estimate")
    common(p)
    sched = p.add_mutually_exclusive_group()
    sched.add_argument("--levels", type=_levels, default=[3, 4, 5, 6, 7, 8], help="e.g. 3..8")
    sched.add_argument("--schedule", type=_levels, dest="levels", help="explicit levels, e.g. 3,5,7")
    p.add_argument("--base", type=int, default=2, help="cell side (b-a)/base^k; 3 suits λ=3 sums")
    p.add_argument("--plot", help="also write the two-column log-log CSV here")

    p = sub.add_parser("fracint", help="mixed Riemann-Liouville fractional integral")
    common(p)
    p.add_argument("--alpha", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--check", choices=CHECKS)
    p.add_argument("--resolutions", type=_ints, default=[64, 128, 256])
    p.add_argument("--refinement", type=int, default=1)

    p = sub.add_parser("corpus", help="list corpus entries or sample one to a grid file")
    common(p)
    return parser


def config_from_args(ns: argparse.Namespace) -> RunConfig:
    cfg = RunConfig(command=ns.command)
    for name in ("corpus", "input", "m", "n", "rect", "output", "format"):
        setattr(cfg, name, getattr(ns, name))
    cfg.params = dict(ns.param)
    for name in ("levels", "base", "senses", "profile", "alpha", "beta", "check", "resolutions", "refinement", "plot"):
        if hasattr(ns, name) and getattr(ns, name) is not None:
            setattr(cfg, name, getattr(ns, name))
    return cfg


# ---------------------------------------------------------------------------
# running


def _grid(cfg: RunConfig, default_m: int) -> GridFunction:
    if cfg.input is not None:
        return read_grid(cfg.input)
    m = cfg.m or default_m
    return sample_corpus(cfg.corpus, m, cfg.n or m, Rect(*cfg.rect), cfg.params)


def _json_safe(obj):
    if isinstance(obj, float):
        return obj if math.isfinite(obj) else repr(obj)
    if isinstance(obj, dict):
        return {str(k): _json_safe(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_json_safe(v) for v in obj]
    if isinstance(obj, np.generic):
        return _json_safe(obj.item())
    return obj


def _report(cfg: RunConfig, result) -> str:
    doc = {
        "schema": SCHEMA,
        "meta": {"tool": "bvfrac", "version": __version__},
        "config": asdict(cfg),
        "result": result,
    }
    return json.dumps(_json_safe(doc), sort_keys=True, indent=2, allow_nan=False) + "\n"


def _rows_csv(header, rows) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(header)
    for row in rows:
        w.writerow([repr(v) if isinstance(v, float) else v for v in row])
    return buf.getvalue()


def _run_variation(cfg: RunConfig) -> tuple[dict, str]:
    g = _grid(cfg, 64)
    out = {}
    for sense in cfg.senses:
        entry = variation(g, sense).to_dict()
        if cfg.profile:
            entry["diagnosis"] = variation_profile(g, sense).to_dict()
        out[sense] = entry
    rows = [(s, out[s]["value"], out[s]["exactness"]) for s in cfg.senses]
    return {"grid": {"m": g.m, "n": g.n}, "variations": out}, _rows_csv(["sense", "value", "exactness"], rows)


def _run_boxdim(cfg: RunConfig) -> tuple[dict, str]:
    levels = cfg.levels
    g = _grid(cfg, cfg.base ** max(levels))
    est = dimension_estimate(g, schedule=levels, base=cfg.base)
    hold = estimate_holder(g, levels, cfg.base)
    result = est.to_dict()
    result["holder"] = {"s_hat": hold.s_hat, "dim_upper": hold.dim_upper}
    result["grid"] = {"m": g.m, "n": g.n}
    if cfg.plot:
        Path(cfg.plot).write_text(est.to_csv())
    return result, est.to_csv()


def _run_fracint(cfg: RunConfig) -> tuple[dict, str]:
    p = FracParams(cfg.alpha, cfg.beta)
    q = QuadratureScheme(refinement=cfg.refinement)
    if cfg.check == "separable":
        if cfg.corpus is None:
            raise UsageError("the separable check samples a corpus function along y = c")
        f = CORPUS[cfg.corpus]
        params = f.resolve(cfg.params)
        g1d = lambda x: np.asarray(f.func(x, np.zeros_like(np.asarray(x, dtype=float)), params), dtype=float)
        rep = separable_reduction_check(g1d, cfg.alpha, cfg.resolutions, rect=Rect(*cfg.rect))
        d = rep.to_dict()
        return d, _rows_csv(["resolution", "discrepancy"], zip(rep.resolutions, rep.discrepancies))
    default_m = max(cfg.resolutions) if cfg.check == "bv-preservation" else 64
    g = _grid(cfg, default_m)
    if cfg.check is None:
        out = frac_integral(g, p, q)
        return {"grid": out.to_dict()}, grid_to_csv(out)
    if cfg.check == "sup-bound":
        d = sup_bound_check(g, p, q).to_dict()
    elif cfg.check == "monotone":
        d = monotone_image_check(g, p, q=q).to_dict()
    else:
        d = bv_preservation_check(g, p, cfg.resolutions).to_dict()
    return d, _rows_csv(["field", "value"], sorted((k, v) for k, v in d.items() if not isinstance(v, (list, dict))))


def _run_corpus(cfg: RunConfig) -> tuple[dict, str]:
    if cfg.corpus is None:
        entries = {
            cid: {
                "parameters": dict(e.parameters),
                "expected": dict(e.expected),
                "continuous": e.continuous,
                "monotone": e.monotone,
                "description": e.description,
            }
            for cid, e in sorted(CORPUS.items())
        }
        rows = [(cid, e["description"]) for cid, e in entries.items()]
        return {"corpus": entries}, _rows_csv(["id", "description"], rows)
    g = _grid(cfg, 64)
    return {"grid": g.to_dict()}, grid_to_csv(g)


_RUNNERS = {
    "variation": _run_variation,
    "boxdim": _run_boxdim,
    "fracint": _run_fracint,
    "corpus": _run_corpus,
}


def run(cfg: RunConfig, stdout=None, stderr=None) -> int:
    """Execute one configuration; 0 on success, 1 on computation error, 2 on bad config."""
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    try:
        cfg.validate()
    except UsageError as exc:
        print(f"bvfrac: usage error: {exc}", file=stderr)
        return 2
    try:
        result, csv_text = _RUNNERS[cfg.command](cfg)
    except UsageError as exc:
        print(f"bvfrac: usage error: {exc}", file=stderr)
        return 2
    except (ValueError, ArithmeticError, OSError, RuntimeError) as exc:
        print(f"bvfrac: error: {exc}", file=stderr)
        return 1
    text = _report(cfg, result) if cfg.format == "json" else csv_text
    if cfg.output:
        Path(cfg.output).write_text(text)
    else:
        stdout.write(text)
    return 0


def main(argv=None) -> int:
    parser = build_parser()
    try:
        ns = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return run(config_from_args(ns))


if __name__ == "__main__":
    raise SystemExit(main())
