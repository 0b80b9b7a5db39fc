"""Box-counting dimension of function graphs from per-cell maximum ranges.

Above each ``δ x δ`` cell ``A`` the graph meets between ``R[A]/δ`` and
``2 + R[A]/δ`` stacked ``δ``-cubes, where ``R[A]`` is the range (max - min) of
the function over the closed cell.  Summing over the cells brackets the cube
count; the count used for regression is ``Σ (1 + ceil(R[A]/δ))``, which
lies inside that bracket.

Only the sandwich ``dim_H <= lower box <= upper box`` is used here; Hausdorff
dimension is never computed.
"""

from __future__ import annotations

import csv
import io
import json
import math
from dataclasses import asdict, dataclass
from typing import Sequence

import numpy as np

from ._cells import block_ranges, finest_extrema
from .gridfn import GridFunction
from .trend import fit_line

LOW_CONFIDENCE_R2 = 0.98
_ALIGN_TOL = 1e-9
# guards ceil() against R/δ landing a few ulps above an integer
_CEIL_GUARD = 1e-9


class AlignmentError(ValueError):
    """A δ-cell does not line up with the sampling lattice."""


@dataclass(frozen=True)
class RangeValue:
    cell: tuple[int, int]  # lower-left node (i, j)
    span: tuple[int, int]  # cell extent in lattice steps (x, y)
    range: float


@dataclass(frozen=True)
class BoxCountRecord:
    delta: float
    m: int
    n: int
    sum_range: float
    N_lower: float
    N_upper: float
    N_direct: float


@dataclass(frozen=True)
class DimensionEstimate:
    records: list[BoxCountRecord]
    slope: float
    intercept: float
    r2: float

    @property
    def low_confidence(self) -> bool:
        return self.r2 < LOW_CONFIDENCE_R2

    def to_dict(self) -> dict:
        return {
            "slope": self.slope,
            "intercept": self.intercept,
            "r2": self.r2,
            "low_confidence": self.low_confidence,
            "records": [asdict(r) for r in self.records],
            "theory": "dim_H <= lower box dim <= upper box dim; dim_H >= 2 for continuous f",
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), sort_keys=True)

    def to_csv(self) -> str:
        """Two columns ``log(1/δ), log N`` (natural logs) for plotting."""
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["log_inv_delta", "log_N"])
        for r in self.records:
            w.writerow([repr(math.log(1.0 / r.delta)), repr(math.log(r.N_direct))])
        return buf.getvalue()


@dataclass(frozen=True)
class HolderEstimate:
    s_hat: float
    dim_upper: float
    slope_raw: float


def _steps(length: float, h: float, what: str) -> int:
    ratio = length / h
    k = round(ratio)
    if k < 1 or abs(ratio - k) > _ALIGN_TOL * max(1.0, ratio):
        raise AlignmentError(f"{what} {length!r} is not a multiple of the sample spacing {h!r}")
    return int(k)


def max_range(g: GridFunction, cell) -> RangeValue:
    """Range of the samples over a closed, lattice-aligned cell ``((x0, x1), (y0, y1))``."""
    (x0, x1), (y0, y1) = cell
    r = g.rect
    if not (r.a <= x0 < x1 <= r.b and r.c <= y0 < y1 <= r.d):
        raise AlignmentError(f"cell {cell} is not inside the rectangle")
    i0 = _steps(x0 - r.a, g.hx, "cell offset") if x0 > r.a else 0
    j0 = _steps(y0 - r.c, g.hy, "cell offset") if y0 > r.c else 0
    sx = _steps(x1 - x0, g.hx, "cell width")
    sy = _steps(y1 - y0, g.hy, "cell height")
    block = g.z[j0 : j0 + sy + 1, i0 : i0 + sx + 1]
    return RangeValue((i0, j0), (sx, sy), float(block.max() - block.min()))


def _count(ranges: np.ndarray, delta: float) -> tuple[float, float, float, float]:
    m_cells = ranges.shape[1]
    n_cells = ranges.shape[0]
    total = float(ranges.sum())
    lower = total / delta
    upper = 2.0 * m_cells * n_cells + lower
    direct = float((1.0 + np.ceil(ranges / delta - _CEIL_GUARD)).sum())
    # the bracket holds by construction; a failure here is a bug
    if not (lower <= direct * (1 + 1e-12) and direct <= upper * (1 + 1e-12)):
        raise AssertionError(f"cube count {direct} escaped [{lower}, {upper}] at delta={delta}")
    return total, lower, upper, direct


def box_count(g: GridFunction, delta: float, extrema=None) -> BoxCountRecord:
    """Cube-count bracket and direct count at cell side ``delta``.

    Cells are anchored at ``(a, c)``; a trailing row or column that overhangs
    the rectangle is clipped, which keeps ``m, n`` within the admissible
    ``L/δ <= m <= 1 + L/δ``.
    """
    r = g.rect
    if not 0 < delta < min(r.width, r.height):
        raise ValueError(f"delta={delta} must lie in (0, {min(r.width, r.height)})")
    sx = _steps(delta, g.hx, "delta")
    sy = _steps(delta, g.hy, "delta")
    ranges = block_ranges(g.z, sx, sy, extrema)
    total, lower, upper, direct = _count(ranges, delta)
    return BoxCountRecord(delta, ranges.shape[1], ranges.shape[0], total, lower, upper, direct)


def _levels(k_min: int, k_max: int) -> list[int]:
    if k_max - k_min < 2:
        raise ValueError(f"need at least 3 dyadic levels, got {k_min}..{k_max}")
    if k_min < 1:
        raise ValueError("k_min must be at least 1")
    return list(range(k_min, k_max + 1))


def dimension_estimate(
    g: GridFunction,
    k_min: int = 3,
    k_max: int = 8,
    *,
    schedule: Sequence[int] | None = None,
    base: int = 2,
) -> DimensionEstimate:
    """Least-squares slope of ``log N_direct`` against ``log(1/δ)``, ``δ_k = (b-a)/base^k``.

    ``schedule`` replaces the contiguous ``k_min..k_max`` run with an explicit,
    strictly increasing list of levels.  ``base=3`` aligns the cells with a
    ``3^k`` lattice, e.g. for Weierstrass sums with ``λ = 3``.
    """
    if base < 2:
        raise ValueError(f"base must be an integer >= 2, got {base}")
    if schedule is None:
        levels = _levels(k_min, k_max)
    else:
        levels = [int(k) for k in schedule]
        if len(levels) < 3 or any(b <= a for a, b in zip(levels, levels[1:])) or levels[0] < 1:
            raise ValueError(f"schedule must hold >= 3 strictly increasing levels >= 1, got {schedule}")
        k_max = levels[-1]
    if g.m < base**k_max:
        raise ValueError(f"resolution m={g.m} too coarse for level {k_max} (needs >= {base**k_max})")
    extrema = finest_extrema(g.z)
    records = [box_count(g, g.rect.width / base**k, extrema) for k in levels]
    # log2 keeps powers of two exact, so N = 4^k fits a slope of exactly 2
    x = [math.log2(1.0 / rec.delta) for rec in records]
    y = [math.log2(rec.N_direct) for rec in records]
    fit = fit_line(x, y)
    return DimensionEstimate(records, fit.slope, fit.intercept * math.log(2.0), fit.r2)


def curve_dimension_estimate(values, a: float, b: float, k_min: int = 3, k_max: int = 8) -> DimensionEstimate:
    """Graph dimension of a univariate sampled function: the one-row case of the surface count."""
    v = np.asarray(values, dtype=float)
    if v.ndim != 1 or v.size < 2:
        raise ValueError("expected a 1-D array of at least two samples")
    levels = _levels(k_min, k_max)
    m = v.size - 1
    if m < 2**k_max:
        raise ValueError(f"resolution {m} too coarse for level {k_max}")
    h = (b - a) / m
    z = v[None, :]
    hi = np.maximum(z[:, :-1], z[:, 1:])
    lo = np.minimum(z[:, :-1], z[:, 1:])
    records = []
    for k in levels:
        delta = (b - a) / 2**k
        sx = _steps(delta, h, "delta")
        ranges = block_ranges(z, sx, 1, (hi, lo))
        total, lower, _, direct = _count(ranges, delta)
        upper = 2.0 * ranges.size + lower
        records.append(BoxCountRecord(delta, ranges.size, 1, total, lower, upper, direct))
    fit = fit_line([math.log2(1.0 / r.delta) for r in records], [math.log2(r.N_direct) for r in records])
    return DimensionEstimate(records, fit.slope, fit.intercept * math.log(2.0), fit.r2)


def holder_dim_bounds(s: float) -> tuple[float, float]:
    """Graph box-dimension bounds ``(upper, lower) = (3 - s, 3 - s)`` for Hölder exponent ``s``.

    The upper bound needs ``|f(p) - f(q)| <= c|p - q|^s``; the lower bound needs
    the reverse inequality to be attained at every scale.
    """
    if not 0.0 <= s <= 1.0:
        raise ValueError(f"Hölder exponent must lie in [0, 1], got {s}")
    return 3.0 - s, 3.0 - s


def estimate_holder(g: GridFunction, levels: Sequence[int] = range(3, 9), base: int = 2) -> HolderEstimate:
    """Fit the mean cell range against ``δ`` on a log-log scale.

    All-zero ranges (a constant) yield ``s_hat = 1`` by convention.
    """
    levels = sorted(levels)
    if len(levels) < 3:
        raise ValueError("need at least 3 dyadic levels")
    extrema = finest_extrema(g.z)
    xs, ys = [], []
    for k in levels:
        delta = g.rect.width / base**k
        ranges = block_ranges(g.z, _steps(delta, g.hx, "delta"), _steps(delta, g.hy, "delta"), extrema)
        mean = float(ranges.mean())
        if mean > 0:
            xs.append(math.log(delta))
            ys.append(math.log(mean))
    if len(xs) < 2:
        return HolderEstimate(1.0, 2.0, float("nan"))
    raw = fit_line(xs, ys).slope
    s_hat = min(1.0, max(0.0, raw))
    return HolderEstimate(s_hat, 3.0 - s_hat, raw)
