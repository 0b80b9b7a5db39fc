"""Bivariate variation functionals on sampled grids.

Every functional here is evaluated on the sampling lattice (or on nets drawn
from it).  The true suprema run over all partitions of the rectangle, so
boundedness is judged from how a functional behaves as the lattice is
refined; see :func:`variation_profile`, :func:`hahn_profile` and
:func:`hardy_report`.

Conventions: ``z[j, i] = f(x_i, y_j)``; ``Δ10`` differences along x, ``Δ01``
along y, ``Δ11`` is the four-corner mixed difference of a cell.
"""

from __future__ import annotations

import math
import os
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field
from typing import Optional, Sequence, Union

import numpy as np

from ._cells import block_ranges, finest_extrema
from .gridfn import SENSES, GridFunction
from .trend import (
    BOUNDED,
    DEFAULT_THRESHOLDS,
    INCONCLUSIVE,
    UNBOUNDED,
    BoundednessDiagnosis,
    Thresholds,
    diagnose,
)

EXACT = "exact-on-grid"
LOWER_BOUND = "lower-bound"
HEURISTIC = "heuristic"

FRECHET_EXACT_LIMIT = 20


class GridSizeError(ValueError):
    """The requested exact computation is too large for this grid."""


# ---------------------------------------------------------------------------
# types


@dataclass(frozen=True)
class Net:
    """Sub-net of the sampling lattice given by node indices along each axis."""

    xs: tuple[int, ...]
    ys: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "xs", tuple(int(i) for i in self.xs))
        object.__setattr__(self, "ys", tuple(int(j) for j in self.ys))
        for name, idx in (("xs", self.xs), ("ys", self.ys)):
            if len(idx) < 2 or idx[0] != 0 or any(b <= a for a, b in zip(idx, idx[1:])):
                raise ValueError(f"net {name} must start at 0 and increase strictly: {idx}")

    @classmethod
    def full(cls, g: GridFunction) -> "Net":
        return cls(tuple(range(g.m + 1)), tuple(range(g.n + 1)))

    def check(self, g: GridFunction) -> None:
        if self.xs[-1] != g.m or self.ys[-1] != g.n:
            raise ValueError(
                f"net must end at node ({g.m}, {g.n}), ends at ({self.xs[-1]}, {self.ys[-1]})"
            )

    def to_dict(self) -> dict:
        return {"xs": list(self.xs), "ys": list(self.ys)}


@dataclass(frozen=True)
class SignVector:
    eps: tuple[int, ...]
    eps_bar: tuple[int, ...]

    def __post_init__(self) -> None:
        for v in self.eps + self.eps_bar:
            if v not in (1, -1):
                raise ValueError(f"sign entries must be +1 or -1, got {v}")

    def to_dict(self) -> dict:
        return {"eps": list(self.eps), "eps_bar": list(self.eps_bar)}


@dataclass(frozen=True)
class MonotonePath:
    pts: tuple[tuple[int, int], ...]

    def __post_init__(self) -> None:
        pts = self.pts
        if not pts or pts[0] != (0, 0):
            raise ValueError("monotone path must start at (0, 0)")
        for (i0, j0), (i1, j1) in zip(pts, pts[1:]):
            if i1 < i0 or j1 < j0:
                raise ValueError(f"path steps backwards from {(i0, j0)} to {(i1, j1)}")

    def total(self, g: GridFunction) -> float:
        s = 0.0
        for (i0, j0), (i1, j1) in zip(self.pts, self.pts[1:]):
            s += abs(g.z[j1, i1] - g.z[j0, i0])
        return s

    def to_dict(self) -> dict:
        return {"pts": [list(p) for p in self.pts]}


Witness = Union[Net, SignVector, MonotonePath, None]


@dataclass(frozen=True)
class VariationResult:
    sense: str
    value: float
    exactness: str
    witness: Witness = None

    def __post_init__(self) -> None:
        if self.sense not in SENSES:
            raise ValueError(f"unknown variation sense {self.sense!r}")
        if not self.value >= 0:
            raise ValueError(f"variation must be nonnegative, got {self.value}")

    def to_dict(self) -> dict:
        finite = math.isfinite(self.value)
        return {
            "sense": self.sense,
            "value": self.value if finite else None,
            "infinite": not finite,
            "exactness": self.exactness,
            "witness": None if self.witness is None else self.witness.to_dict(),
        }


@dataclass(frozen=True, eq=False)
class SectionVariation:
    """``phi[i]`` is the total variation of the sampled section through grid line ``i``.

    ``axis="x"``: sections ``y -> f(x_i, y)`` (the function φ);
    ``axis="y"``: sections ``x -> f(x, y_j)`` (the function μ).
    """

    axis: str
    phi: np.ndarray

    def to_dict(self) -> dict:
        return {"axis": self.axis, "phi": [float(v) for v in self.phi]}


@dataclass(frozen=True)
class TonelliVariation:
    int_phi: float
    int_mu: float
    phi: SectionVariation = field(repr=False)
    mu: SectionVariation = field(repr=False)

    @property
    def value(self) -> float:
        return self.int_phi + self.int_mu

    def to_result(self) -> VariationResult:
        return VariationResult("Tonelli", self.value, HEURISTIC)


@dataclass(frozen=True)
class HardyReport:
    vitali: VariationResult
    x_sections: SectionVariation
    y_sections: SectionVariation
    verdict: str
    vitali_trend: Optional[BoundednessDiagnosis] = None
    x_section_trend: Optional[BoundednessDiagnosis] = None
    y_section_trend: Optional[BoundednessDiagnosis] = None

    @property
    def value(self) -> float:
        return self.vitali.value + float(self.x_sections.phi.min()) + float(self.y_sections.phi.min())

    def to_result(self) -> VariationResult:
        return VariationResult("Hardy", self.value, EXACT)

    def to_dict(self) -> dict:
        def trend(t):
            return None if t is None else t.to_dict()

        return {
            "vitali": self.vitali.to_dict(),
            "min_x_section": float(self.x_sections.phi.min()),
            "min_y_section": float(self.y_sections.phi.min()),
            "verdict": self.verdict,
            "vitali_trend": trend(self.vitali_trend),
            "x_section_trend": trend(self.x_section_trend),
            "y_section_trend": trend(self.y_section_trend),
        }


@dataclass(frozen=True, eq=False)
class BimonotoneDecomposition:
    """``f = f1 - f2`` with both parts nondecreasing in x and in y."""

    f1: GridFunction
    f2: GridFunction


@dataclass(frozen=True)
class BimonotoneCheck:
    ok: bool
    violation: Optional[str] = None

    def __bool__(self) -> bool:
        return self.ok


# ---------------------------------------------------------------------------
# difference operators


def delta_ops(g: GridFunction, net: Net, cell: tuple[int, int]) -> tuple[float, float, float]:
    """``(Δ10, Δ01, Δ11)`` of ``f`` at the lower-left corner of net cell ``(p, q)``."""
    net.check(g)
    p, q = cell
    if not (0 <= p < len(net.xs) - 1 and 0 <= q < len(net.ys) - 1):
        raise IndexError(f"cell {cell} outside net of {len(net.xs) - 1}x{len(net.ys) - 1} cells")
    i0, i1 = net.xs[p], net.xs[p + 1]
    j0, j1 = net.ys[q], net.ys[q + 1]
    z = g.z
    d10 = z[j0, i1] - z[j0, i0]
    d01 = z[j1, i0] - z[j0, i0]
    d11 = z[j1, i1] - z[j0, i1] - z[j1, i0] + z[j0, i0]
    return float(d10), float(d01), float(d11)


def mixed_differences(g: GridFunction) -> np.ndarray:
    """``Δ11`` of every finest cell, shape ``(n, m)``."""
    z = g.z
    return z[1:, 1:] - z[:-1, 1:] - z[1:, :-1] + z[:-1, :-1]


# ---------------------------------------------------------------------------
# Vitali and Fréchet


def vitali_variation(g: GridFunction) -> VariationResult:
    """Sum of ``|Δ11|`` over the finest cells.

    Merging cells can only shrink the sum (triangle inequality), so this is the
    maximum over every net drawn from the lattice.
    """
    return VariationResult("Vitali", float(np.abs(mixed_differences(g)).sum()), EXACT, Net.full(g))


def _sgn(v: np.ndarray) -> np.ndarray:
    return np.where(v >= 0, 1, -1)


def _frechet_value(a: np.ndarray, eps: np.ndarray) -> float:
    return float(np.abs(a @ eps).sum())


def _signs_for(a: np.ndarray, eps: np.ndarray) -> SignVector:
    eps_bar = _sgn(a @ eps)
    return SignVector(tuple(int(e) for e in eps), tuple(int(e) for e in eps_bar))


def _enumerate_chunk(mat: np.ndarray, start: int, stop: int) -> tuple[float, int]:
    k = mat.shape[1]
    t = np.arange(start, stop, dtype=np.int64)
    bits = (t[:, None] >> np.arange(k - 1, dtype=np.int64)[None, :]) & 1
    e = np.ones((t.size, k))
    e[:, 1:] = 1 - 2 * bits
    vals = np.abs(e @ mat.T).sum(axis=1)
    best = int(np.argmax(vals))
    return float(vals[best]), start + best


def _local_search(a: np.ndarray, eps: np.ndarray) -> np.ndarray:
    """Alternate the two sign updates to a fixpoint, then try single x-sign flips; repeat."""
    for _ in range(10 * (a.shape[0] + a.shape[1]) + 10):
        eps_bar = _sgn(a @ eps).astype(float)
        new = _sgn(a.T @ eps_bar).astype(float)
        if not np.array_equal(new, eps):
            eps = new
            continue
        v = a @ eps
        current = np.abs(v).sum()
        flipped = np.abs(v[:, None] - 2.0 * a * eps[None, :]).sum(axis=0)
        i = int(np.argmax(flipped))
        if flipped[i] <= current * (1 + 1e-12):
            break
        eps = eps.copy()
        eps[i] = -eps[i]
    return eps


def _worker_count(workers: Optional[int]) -> int:
    if workers is not None:
        return max(1, int(workers))
    env = os.environ.get("BVF_THREADS")
    return max(1, int(env)) if env else 1


def frechet_variation(
    g: GridFunction,
    mode: str = "exact",
    *,
    seed: int = 0,
    starts: int = 8,
    workers: Optional[int] = None,
) -> VariationResult:
    """Max of ``Σ ε_i ε̄_j Δ11_ij`` over sign vectors on the finest lattice.

    For fixed ``ε`` the best ``ε̄`` is the sign of each row sum, so the exact
    mode enumerates ``2^(k-1)`` sign vectors along the shorter axis (``k``
    cells; a global sign flip changes nothing).  The heuristic mode alternates
    the two sign updates to a fixpoint from ``starts`` random starts and
    returns a lower bound.
    """
    a = mixed_differences(g)  # rows: y-cells, columns: x-cells
    if mode == "exact":
        k = min(g.m, g.n)
        if k > FRECHET_EXACT_LIMIT:
            raise GridSizeError(
                f"exact Fréchet enumeration needs min(m, n) <= {FRECHET_EXACT_LIMIT}, "
                f"grid has {g.m}x{g.n}; use mode='heuristic'"
            )
        transpose = g.n < g.m
        mat = a.T if transpose else a
        total = 1 << (k - 1)
        chunk = 1 << 14
        bounds = [(s, min(total, s + chunk)) for s in range(0, total, chunk)]
        nw = _worker_count(workers)
        if nw > 1 and len(bounds) > 1:
            with ThreadPoolExecutor(nw) as pool:
                found = list(pool.map(lambda b: _enumerate_chunk(mat, *b), bounds))
        else:
            found = [_enumerate_chunk(mat, *b) for b in bounds]
        best_val = max(v for v, _ in found)
        best_t = min(t for v, t in found if v == best_val)
        e = np.ones(k)
        e[1:] = 1 - 2 * ((best_t >> np.arange(k - 1)) & 1)
        if transpose:
            eps_bar = e.astype(int)
            eps = _sgn(a.T @ eps_bar)
            witness = SignVector(tuple(int(v) for v in eps), tuple(int(v) for v in eps_bar))
        else:
            witness = _signs_for(a, e.astype(int))
        value = _frechet_value(a, np.array(witness.eps, dtype=float))
        return VariationResult("Frechet", value, EXACT, witness)
    if mode != "heuristic":
        raise ValueError(f"unknown Fréchet mode {mode!r}")
    rng = np.random.default_rng(seed)
    best_val, best_eps = -1.0, None
    for _ in range(starts):
        eps = _local_search(a, rng.choice([-1.0, 1.0], size=g.m))
        val = _frechet_value(a, eps)
        if val > best_val:
            best_val, best_eps = val, eps
    witness = _signs_for(a, best_eps.astype(int))
    return VariationResult("Frechet", best_val, LOWER_BOUND, witness)


# ---------------------------------------------------------------------------
# Arzelà


def _arzela_table(z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """DP table ``V[j, i]`` of best monotone staircase sums ending at node ``(i, j)``.

    Also returns a boolean table that is True where the optimum arrives from
    the x-predecessor (preferred on ties).  Anti-diagonals are independent,
    so each is one vectorized step.
    """
    n1, m1 = z.shape
    n, m = n1 - 1, m1 - 1
    hx = np.abs(np.diff(z, axis=1))  # (n+1, m): step (i-1, j) -> (i, j) costs hx[j, i-1]
    hy = np.abs(np.diff(z, axis=0))  # (n, m+1): step (i, j-1) -> (i, j) costs hy[j-1, i]
    V = np.zeros_like(z, dtype=float)
    from_x = np.zeros(z.shape, dtype=bool)
    for d in range(1, m + n + 1):
        i = np.arange(max(0, d - n), min(m, d) + 1)
        j = d - i
        cx = np.full(i.size, -np.inf)
        cy = np.full(i.size, -np.inf)
        ok = i >= 1
        cx[ok] = V[j[ok], i[ok] - 1] + hx[j[ok], i[ok] - 1]
        ok = j >= 1
        cy[ok] = V[j[ok] - 1, i[ok]] + hy[j[ok] - 1, i[ok]]
        take_x = cx >= cy
        V[j, i] = np.where(take_x, cx, cy)
        from_x[j, i] = take_x
    return V, from_x


def arzela_variation(g: GridFunction) -> VariationResult:
    """Max of ``Σ |f(P_{k+1}) - f(P_k)|`` over coordinatewise nondecreasing node chains.

    Inserting intermediate nodes never lowers the sum, so it suffices to
    search unit-step staircases from ``(0, 0)`` to ``(m, n)``.
    """
    V, from_x = _arzela_table(g.z)
    i, j = g.m, g.n
    pts = [(i, j)]
    while (i, j) != (0, 0):
        if from_x[j, i]:
            i -= 1
        else:
            j -= 1
        pts.append((i, j))
    return VariationResult("Arzela", float(V[g.n, g.m]), EXACT, MonotonePath(tuple(reversed(pts))))


# ---------------------------------------------------------------------------
# sections and Tonelli


def section_variations(g: GridFunction, axis: str) -> SectionVariation:
    if axis == "x":
        phi = np.abs(np.diff(g.z, axis=0)).sum(axis=0)
    elif axis == "y":
        phi = np.abs(np.diff(g.z, axis=1)).sum(axis=1)
    else:
        raise ValueError(f"axis must be 'x' or 'y', got {axis!r}")
    return SectionVariation(axis, phi)


def section_variation(g: GridFunction, axis: str, index: int) -> float:
    """Total variation of one sampled section.

    ``axis="x"``: the section ``y -> f(x_index, y)``; ``axis="y"``: the section
    ``x -> f(x, y_index)``.
    """
    limit = g.m if axis == "x" else g.n
    if axis not in ("x", "y"):
        raise ValueError(f"axis must be 'x' or 'y', got {axis!r}")
    if not 0 <= index <= limit:
        raise IndexError(f"section index {index} outside 0..{limit}")
    line = g.z[:, index] if axis == "x" else g.z[index, :]
    return float(np.abs(np.diff(line)).sum())


def _trapezoid(vals: np.ndarray, h: float) -> float:
    return float(h * (vals.sum() - 0.5 * (vals[0] + vals[-1])))


def tonelli_variation(g: GridFunction) -> TonelliVariation:
    phi = section_variations(g, "x")
    mu = section_variations(g, "y")
    return TonelliVariation(_trapezoid(phi.phi, g.hx), _trapezoid(mu.phi, g.hy), phi, mu)


# ---------------------------------------------------------------------------
# Hahn / Pierpont


def hahn_sum(g: GridFunction, k: int) -> float:
    """``Σ ω_r / k`` over the ``k x k`` congruent closed cells."""
    if k < 1 or g.m % k or g.n % k:
        raise ValueError(f"k={k} does not divide the grid resolution {g.m}x{g.n}")
    omega = block_ranges(g.z, g.m // k, g.n // k)
    return float(omega.sum() / k)


def hahn_profile(
    g: GridFunction, ks: Sequence[int], thresholds: Thresholds = DEFAULT_THRESHOLDS
) -> BoundednessDiagnosis:
    """Trend of the Hahn sums over ``ks``; the Pierpont verdict is the same."""
    ks = sorted(set(int(k) for k in ks))
    usable = [k for k in ks if k >= 1 and g.m % k == 0 and g.n % k == 0]
    if len(usable) != len(ks):
        bad = sorted(set(ks) - set(usable))
        raise ValueError(f"k values {bad} do not divide the grid resolution {g.m}x{g.n}")
    if len(usable) < 3:
        raise ValueError(f"need at least 3 usable k values, got {usable}")
    extrema = finest_extrema(g.z)
    sums = [float(block_ranges(g.z, g.m // k, g.n // k, extrema).sum() / k) for k in usable]
    return diagnose(usable, sums, thresholds)


# ---------------------------------------------------------------------------
# refinement trends


def dyadic_levels(g: GridFunction, min_cells: int = 4) -> list[int]:
    """Coarsening factors ``2^r`` available on ``g``, finest (factor 1) last."""
    factors = []
    f = 1
    while g.m % f == 0 and g.n % f == 0 and min(g.m, g.n) // f >= min_cells:
        factors.append(f)
        f *= 2
    return factors[::-1]


def _level_value(g: GridFunction, sense: str) -> float:
    if sense == "Vitali":
        return vitali_variation(g).value
    if sense == "Frechet":
        mode = "exact" if min(g.m, g.n) <= 12 else "heuristic"
        return frechet_variation(g, mode).value
    if sense == "Arzela":
        return arzela_variation(g).value
    if sense == "Tonelli":
        return tonelli_variation(g).value
    raise ValueError(f"no refinement series for sense {sense!r}")


def variation_profile(
    g: GridFunction,
    sense: str,
    *,
    min_cells: int = 4,
    thresholds: Thresholds = DEFAULT_THRESHOLDS,
) -> BoundednessDiagnosis:
    """Boundedness diagnosis for ``sense`` from dyadic coarsenings of ``g``.

    Hahn and Pierpont use the congruent ``k x k`` nets; Hardy combines the
    Vitali and section trends (see :func:`hardy_report`).
    """
    if sense in ("Hahn", "Pierpont"):
        k_max = math.gcd(g.m, g.n)
        ks = [2**r for r in range(1, k_max.bit_length()) if k_max % 2**r == 0]
        return hahn_profile(g, ks, thresholds)
    if sense == "Hardy":
        rep = hardy_report(g, min_cells=min_cells, thresholds=thresholds)
        trends = [rep.vitali_trend, rep.x_section_trend, rep.y_section_trend]
        worst = max(trends, key=lambda t: t.slope if math.isfinite(t.slope) else -1.0)
        return BoundednessDiagnosis(worst.sums, worst.slope, rep.verdict, "Hardy: " + worst.rule, thresholds)
    factors = dyadic_levels(g, min_cells)
    if len(factors) < 3:
        raise ValueError(f"grid {g.m}x{g.n} offers fewer than 3 dyadic levels >= {min_cells} cells")
    res, sums = [], []
    for f in factors:
        gc = g.coarsen(f)
        res.append(gc.m)
        sums.append(_level_value(gc, sense))
    return diagnose(res, sums, thresholds)


def hardy_report(
    g: GridFunction, *, min_cells: int = 4, thresholds: Thresholds = DEFAULT_THRESHOLDS
) -> HardyReport:
    """Vitali sum, section variations and a Hardy boundedness verdict.

    The verdict is bounded when the Vitali trend is bounded and the smallest
    section variation along each axis stays bounded under refinement.
    """
    vit = vitali_variation(g)
    xs = section_variations(g, "x")
    ys = section_variations(g, "y")
    factors = dyadic_levels(g, min_cells)
    if len(factors) < 3:
        zero = vit.value == 0 and xs.phi.min() == 0 and ys.phi.min() == 0
        return HardyReport(vit, xs, ys, BOUNDED if zero else INCONCLUSIVE)
    res, sv, sx, sy = [], [], [], []
    for f in factors:
        gc = g.coarsen(f)
        res.append(gc.m)
        sv.append(vitali_variation(gc).value)
        sx.append(float(section_variations(gc, "x").phi.min()))
        sy.append(float(section_variations(gc, "y").phi.min()))
    tv, tx, ty = (diagnose(res, s, thresholds) for s in (sv, sx, sy))
    verdicts = {tv.verdict, tx.verdict, ty.verdict}
    if UNBOUNDED in verdicts:
        verdict = UNBOUNDED
    elif verdicts == {BOUNDED}:
        verdict = BOUNDED
    else:
        verdict = INCONCLUSIVE
    return HardyReport(vit, xs, ys, verdict, tv, tx, ty)


def variation(g: GridFunction, sense: str, *, frechet_mode: str = "auto") -> VariationResult:
    """Single-grid value of any of the seven senses."""
    if sense == "Vitali":
        return vitali_variation(g)
    if sense == "Frechet":
        if frechet_mode == "auto":
            frechet_mode = "exact" if min(g.m, g.n) <= FRECHET_EXACT_LIMIT else "heuristic"
        return frechet_variation(g, frechet_mode)
    if sense == "Hardy":
        return hardy_report(g).to_result()
    if sense == "Arzela":
        return arzela_variation(g)
    if sense in ("Hahn", "Pierpont"):
        return VariationResult(sense, hahn_sum(g, math.gcd(g.m, g.n)), HEURISTIC)
    if sense == "Tonelli":
        return tonelli_variation(g).to_result()
    raise ValueError(f"unknown variation sense {sense!r}; expected one of {SENSES}")


# ---------------------------------------------------------------------------
# bimonotone decomposition


def bimonotone_decompose(g: GridFunction) -> BimonotoneDecomposition:
    """Write ``g = f1 - f2`` with ``f1, f2`` nondecreasing in x and in y.

    ``f1`` is the Arzelà variation over ``[a, x] x [c, y]`` (the DP table), and
    ``f2 = f1 - g``; extending an optimal staircase by one step shows both are
    monotone.  Both are then shifted so that ``f2(a, c) = 0`` when
    ``g(a, c) >= 0`` and ``f1(a, c) = 0`` otherwise.
    """
    V, _ = _arzela_table(g.z)
    g00 = float(g.z[0, 0])
    shift = g00 if g00 >= 0 else 0.0
    return BimonotoneDecomposition(g.with_values(V + shift), g.with_values(V - g.z + shift))


def _first_negative(d: np.ndarray, tol: float):
    bad = np.argwhere(d < -tol)
    if bad.size == 0:
        return None
    j, i = (int(t) for t in bad[0])
    return i, j, float(d[j, i])


def verify_bimonotone(d: BimonotoneDecomposition, g: GridFunction, tol: float = 1e-12) -> BimonotoneCheck:
    """Check ``f = f1 - f2``, monotonicity of both parts and the corner normalization."""
    if not (d.f1.same_lattice(g) and d.f2.same_lattice(g)):
        raise ValueError("decomposition and function live on different grids")
    err = np.abs(d.f1.z - d.f2.z - g.z)
    if err.max() > tol:
        j, i = np.unravel_index(int(np.argmax(err)), err.shape)
        return BimonotoneCheck(False, f"f1 - f2 != f at node ({i}, {j}), error {err[j, i]:.3e}")
    for name, part in (("f1", d.f1), ("f2", d.f2)):
        for op, diff in (("Δ10", np.diff(part.z, axis=1)), ("Δ01", np.diff(part.z, axis=0))):
            hit = _first_negative(diff, tol)
            if hit is not None:
                i, j, v = hit
                return BimonotoneCheck(False, f"{op} {name} = {v:.3e} < 0 at node ({i}, {j})")
    g00, a1, a2 = float(g.z[0, 0]), float(d.f1.z[0, 0]), float(d.f2.z[0, 0])
    if g00 >= 0:
        if not (a1 >= -tol and abs(a2) <= tol):
            return BimonotoneCheck(False, f"f(a,c) >= 0 needs f1(a,c) >= 0, f2(a,c) = 0; got {a1}, {a2}")
    elif not (abs(a1) <= tol and a2 > 0):
        return BimonotoneCheck(False, f"f(a,c) < 0 needs f1(a,c) = 0, f2(a,c) > 0; got {a1}, {a2}")
    return BimonotoneCheck(True)
