"""Log-log regression and the bounded/unbounded decision rule for refinement series."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field

import numpy as np

BOUNDED = "bounded"
UNBOUNDED = "unbounded"
INCONCLUSIVE = "inconclusive"


@dataclass(frozen=True)
class LineFit:
    slope: float
    intercept: float
    r2: float


def fit_line(x, y) -> LineFit:
    """Ordinary least squares ``y ~ slope*x + intercept`` with the coefficient of determination."""
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    if x.size != y.size or x.size < 2:
        raise ValueError("need at least two points of matching length")
    xm, ym = x.mean(), y.mean()
    dx, dy = x - xm, y - ym
    sxx = float(dx @ dx)
    if sxx == 0.0:
        raise ValueError("abscissae are all equal")
    slope = float(dx @ dy) / sxx
    intercept = float(ym - slope * xm)
    ss_tot = float(dy @ dy)
    resid = y - (slope * x + intercept)
    ss_res = float(resid @ resid)
    r2 = 1.0 if ss_tot == 0.0 else max(0.0, 1.0 - ss_res / ss_tot)
    return LineFit(slope, intercept, r2)


@dataclass(frozen=True)
class Thresholds:
    """Decision policy for a refinement series ``S(r)``.

    ``bounded_below`` and ``unbounded_above`` bracket the log-log slope.  In
    between, a series whose per-doubling increment does not shrink to less
    than ``log_growth_ratio`` of its early value is diverging at least
    logarithmically and is called unbounded.
    """

    bounded_below: float = 0.1
    unbounded_above: float = 0.25
    log_growth_ratio: float = 0.5
    zero_tol: float = 1e-12


DEFAULT_THRESHOLDS = Thresholds()


@dataclass(frozen=True)
class BoundednessDiagnosis:
    """Refinement series with its fitted log-log growth slope and verdict."""

    sums: list[tuple[float, float]]
    slope: float
    verdict: str
    rule: str
    thresholds: Thresholds = field(default=DEFAULT_THRESHOLDS)

    def to_dict(self) -> dict:
        d = asdict(self)
        d["sums"] = [list(p) for p in self.sums]
        return d

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)


def _increment_rate(levels: np.ndarray, s: np.ndarray) -> float:
    return fit_line(levels, s).slope


def diagnose(resolutions, sums, thresholds: Thresholds = DEFAULT_THRESHOLDS) -> BoundednessDiagnosis:
    """Classify a series ``S(r)`` observed at increasing resolutions ``r``.

    At least three levels are required.  A series that is identically zero
    (within ``zero_tol``) is bounded with slope 0.
    """
    r = np.asarray(resolutions, dtype=float)
    s = np.asarray(sums, dtype=float)
    if r.size != s.size:
        raise ValueError("resolutions and sums differ in length")
    if r.size < 3:
        raise ValueError(f"need at least 3 refinement levels, got {r.size}")
    if np.any(np.diff(r) <= 0):
        raise ValueError("resolutions must be strictly increasing")
    if np.any(s < 0):
        raise ValueError("refinement sums must be nonnegative")
    pairs = [(float(a), float(b)) for a, b in zip(r, s)]
    scale = max(1.0, float(s.max()))
    if s.max() <= thresholds.zero_tol * scale:
        return BoundednessDiagnosis(pairs, 0.0, BOUNDED, "zero series", thresholds)
    pos = s > thresholds.zero_tol * scale
    if pos.sum() < 2:
        # a single nonzero level carries no trend
        return BoundednessDiagnosis(pairs, float("nan"), INCONCLUSIVE, "too few nonzero levels", thresholds)
    slope = fit_line(np.log(r[pos]), np.log(s[pos])).slope
    if slope < thresholds.bounded_below:
        return BoundednessDiagnosis(pairs, slope, BOUNDED, "slope below bounded threshold", thresholds)
    if slope > thresholds.unbounded_above:
        return BoundednessDiagnosis(pairs, slope, UNBOUNDED, "slope above unbounded threshold", thresholds)
    levels = np.log2(r)
    half = r.size // 2
    if half >= 2:
        early = _increment_rate(levels[: r.size - half], s[: r.size - half])
        late = _increment_rate(levels[-half:], s[-half:])
        if early > 0 and late >= thresholds.log_growth_ratio * early:
            return BoundednessDiagnosis(
                pairs, slope, UNBOUNDED, "non-decaying increments (logarithmic growth)", thresholds
            )
    return BoundednessDiagnosis(pairs, slope, INCONCLUSIVE, "slope in the undecided band", thresholds)
