"""Grid-sampled bivariate functions, the example corpus and grid persistence.

A :class:`GridFunction` holds the samples ``f(x_i, y_j)`` of a function on a
uniform ``(m+1) x (n+1)`` node lattice over a rectangle.  Internally the
samples live in a 2-D array ``z`` indexed ``z[j, i]`` (row ``j`` is the line
``y = y_j``), so ``z.ravel()`` is exactly the row-major ``values`` layout used
by the file formats.
"""

from __future__ import annotations

import csv
import io
import json
import math
import numbers
from dataclasses import dataclass, field
from pathlib import Path
from typing import Callable, Mapping

import numpy as np

__all__ = [
    "Rect",
    "GridFunction",
    "CorpusEntry",
    "CORPUS",
    "GridFormatError",
    "SampleError",
    "CorpusError",
    "corpus_eval",
    "corpus_function",
    "sample",
    "sample_corpus",
    "weierstrass_1d",
    "write_grid",
    "read_grid",
]


class GridFormatError(ValueError):
    """A grid file is malformed or violates a grid invariant."""


class SampleError(RuntimeError):
    """Evaluating a function at a grid node failed."""

    def __init__(self, message: str, x: float, y: float):
        super().__init__(message)
        self.x = x
        self.y = y


class CorpusError(ValueError):
    """Unknown corpus identifier or inadmissible corpus parameter."""


@dataclass(frozen=True)
class Rect:
    a: float
    b: float
    c: float
    d: float

    def __post_init__(self) -> None:
        for name in ("a", "b", "c", "d"):
            v = getattr(self, name)
            if not math.isfinite(v):
                raise ValueError(f"rectangle bound {name}={v!r} is not finite")
        if not (self.a < self.b and self.c < self.d):
            raise ValueError(
                f"degenerate rectangle [{self.a}, {self.b}] x [{self.c}, {self.d}]"
            )

    @classmethod
    def unit(cls) -> "Rect":
        return cls(0.0, 1.0, 0.0, 1.0)

    @property
    def width(self) -> float:
        return self.b - self.a

    @property
    def height(self) -> float:
        return self.d - self.c

    def to_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "c": self.c, "d": self.d}


@dataclass(frozen=True, eq=False)
class GridFunction:
    """Samples of ``f`` on the uniform nodes ``x_i = a + i(b-a)/m``, ``y_j = c + j(d-c)/n``."""

    rect: Rect
    m: int
    n: int
    z: np.ndarray = field(repr=False)

    def __post_init__(self) -> None:
        if int(self.m) != self.m or int(self.n) != self.n or self.m < 1 or self.n < 1:
            raise ValueError(f"cell counts must be positive integers, got m={self.m}, n={self.n}")
        z = np.array(self.z, dtype=float)
        if z.ndim == 1:
            if z.size != (self.m + 1) * (self.n + 1):
                raise ValueError(
                    f"expected {(self.m + 1) * (self.n + 1)} values, got {z.size}"
                )
            z = z.reshape(self.n + 1, self.m + 1)
        if z.shape != (self.n + 1, self.m + 1):
            raise ValueError(f"sample array has shape {z.shape}, expected {(self.n + 1, self.m + 1)}")
        bad = np.flatnonzero(~np.isfinite(z))
        if bad.size:
            k = int(bad[0])
            raise ValueError(f"non-finite sample {z.flat[k]!r} at value index {k}")
        z.setflags(write=False)
        object.__setattr__(self, "m", int(self.m))
        object.__setattr__(self, "n", int(self.n))
        object.__setattr__(self, "z", z)

    @property
    def values(self) -> np.ndarray:
        """Row-major samples, ``values[j*(m+1) + i] = f(x_i, y_j)``."""
        return self.z.ravel()

    @property
    def xs(self) -> np.ndarray:
        return self.rect.a + np.arange(self.m + 1) * (self.rect.width / self.m)

    @property
    def ys(self) -> np.ndarray:
        return self.rect.c + np.arange(self.n + 1) * (self.rect.height / self.n)

    @property
    def hx(self) -> float:
        return self.rect.width / self.m

    @property
    def hy(self) -> float:
        return self.rect.height / self.n

    def __getitem__(self, ij: tuple[int, int]) -> float:
        i, j = ij
        return float(self.z[j, i])

    def with_values(self, z) -> "GridFunction":
        """Same lattice, new samples."""
        return GridFunction(self.rect, self.m, self.n, z)

    def coarsen(self, factor: int) -> "GridFunction":
        """Keep every ``factor``-th node in both directions."""
        if factor < 1 or self.m % factor or self.n % factor:
            raise ValueError(f"factor {factor} does not divide grid {self.m}x{self.n}")
        return GridFunction(self.rect, self.m // factor, self.n // factor, self.z[::factor, ::factor])

    def same_lattice(self, other: "GridFunction") -> bool:
        return self.rect == other.rect and self.m == other.m and self.n == other.n

    def to_dict(self) -> dict:
        return {
            "rect": self.rect.to_dict(),
            "m": self.m,
            "n": self.n,
            "values": [float(v) for v in self.values],
        }


# ---------------------------------------------------------------------------
# sampling


def sample(func: Callable, rect: Rect, m: int, n: int) -> GridFunction:
    """Evaluate ``func`` on the ``(m+1) x (n+1)`` lattice.

    ``func`` is first called once with broadcastable arrays ``x`` of shape
    ``(1, m+1)`` and ``y`` of shape ``(n+1, 1)``.  If that call raises or
    returns something of the wrong shape, the function is evaluated node by
    node so that a failure can be reported with the offending coordinates.
    """
    if m < 1 or n < 1:
        raise ValueError(f"cell counts must be positive, got m={m}, n={n}")
    proto = GridFunction(rect, m, n, np.zeros((n + 1, m + 1)))
    xs, ys = proto.xs, proto.ys
    try:
        with np.errstate(all="ignore"):
            z = np.asarray(func(xs[None, :], ys[:, None]), dtype=float)
        z = np.broadcast_to(z, (n + 1, m + 1))
    except Exception:
        z = None
    if z is None:
        z = np.empty((n + 1, m + 1))
        for j, y in enumerate(ys):
            for i, x in enumerate(xs):
                try:
                    z[j, i] = float(func(float(x), float(y)))
                except Exception as exc:
                    raise SampleError(
                        f"evaluation failed at node (i={i}, j={j}), (x={x!r}, y={y!r}): {exc}",
                        float(x),
                        float(y),
                    ) from exc
    bad = np.argwhere(~np.isfinite(z))
    if bad.size:
        j, i = (int(t) for t in bad[0])
        raise SampleError(
            f"non-finite value {z[j, i]!r} at node (i={i}, j={j}), (x={xs[i]!r}, y={ys[j]!r})",
            float(xs[i]),
            float(ys[j]),
        )
    return GridFunction(rect, m, n, z)


# ---------------------------------------------------------------------------
# corpus


def weierstrass_1d(s: float, lam: float, K: int, x):
    """Partial Weierstrass sum ``sum_{k<=K} lam**((s-2)k) * sin(lam**k * x)``.

    Works elementwise on arrays.  For ``1 < s < 2`` the graph of the limit
    function has box dimension ``s``.
    """
    if not 1.0 < s < 2.0:
        raise CorpusError(f"Weierstrass exponent s must lie in (1, 2), got {s}")
    if not lam > 1.0:
        raise CorpusError(f"Weierstrass base lam must exceed 1, got {lam}")
    if int(K) != K or K < 0:
        raise CorpusError(f"term count K must be a nonnegative integer, got {K}")
    x = np.asarray(x, dtype=float)
    out = np.zeros_like(x)
    for k in range(int(K) + 1):
        freq = lam**k
        out = out + lam ** ((s - 2.0) * k) * np.sin(freq * x)
    return out if out.ndim else float(out)


def _on_antidiagonal(x, y):
    if isinstance(x, numbers.Rational) and isinstance(y, numbers.Rational):
        return x + y == 1
    x = np.asarray(x, dtype=float)
    y = np.asarray(y, dtype=float)
    scale = np.maximum(1.0, np.abs(x) + np.abs(y))
    return np.abs(x + y - 1.0) <= 4 * np.finfo(float).eps * scale


def _plane_indicator(x, y, p):
    return np.where(_on_antidiagonal(x, y), 1.0, 0.0)


def _step_below_diagonal(x, y, p):
    if isinstance(x, numbers.Rational) and isinstance(y, numbers.Rational):
        return 0.0 if x < y else 1.0
    return np.where(np.asarray(x) < np.asarray(y), 0.0, 1.0)


def _xsin_inv(x, y, p):
    x = np.asarray(x, dtype=float)
    safe = np.where(x == 0.0, 1.0, x)
    return np.broadcast_to(np.where(x == 0.0, 0.0, x * np.sin(1.0 / safe)), np.broadcast(x, y).shape)


def _weierstrass_cylinder(x, y, p):
    w = weierstrass_1d(p["s"], p["lam"], int(p["K"]), y)
    return p["slope"] * np.asarray(x, dtype=float) + w


def _check_weierstrass(p):
    # raises CorpusError on bad parameters
    weierstrass_1d(p["s"], p["lam"], int(p["K"]), 0.0)


B, U, Q = "bounded", "unbounded", "unknown"
# Classifications of the two discontinuous examples beyond what is classically
# stated: the jump set is a segment, so only O(1/D) cells of side D see a jump
# (Hahn/Pierpont bounded); for the step, alternating row signs pick up every
# diagonal Δ11 (Fréchet unbounded).
SENSES = ("Vitali", "Frechet", "Hardy", "Arzela", "Hahn", "Pierpont", "Tonelli")


def _all(v):
    return {s: v for s in SENSES}


@dataclass(frozen=True)
class CorpusEntry:
    """A named test function with default parameters and its known BV classification.

    ``expected`` maps each variation sense to ``bounded``, ``unbounded`` or
    ``unknown``.  ``continuous`` and ``monotone`` (``Δ10, Δ01 >= 0``) drive
    which theorem checks apply.
    """

    identifier: str
    func: Callable = field(repr=False)
    parameters: Mapping[str, float] = field(default_factory=dict)
    expected: Mapping[str, str] = field(default_factory=dict)
    continuous: bool = True
    monotone: bool = False
    description: str = ""
    validate: Callable | None = field(default=None, repr=False)

    def resolve(self, params: Mapping[str, float] | None = None) -> dict:
        merged = dict(self.parameters)
        for key, val in (params or {}).items():
            if key not in merged:
                raise CorpusError(f"{self.identifier} has no parameter {key!r}")
            merged[key] = float(val)
        if self.validate is not None:
            self.validate(merged)
        return merged


CORPUS: dict[str, CorpusEntry] = {
    e.identifier: e
    for e in [
        CorpusEntry(
            "constant",
            lambda x, y, p: np.full(np.broadcast(x, y).shape, p["value"]),
            {"value": 1.0},
            _all(B),
            monotone=True,
            description="f = value",
        ),
        CorpusEntry(
            "ones",
            lambda x, y, p: np.ones(np.broadcast(x, y).shape),
            {},
            _all(B),
            monotone=True,
            description="f = 1",
        ),
        CorpusEntry(
            "plane",
            lambda x, y, p: np.asarray(x, dtype=float) + np.asarray(y, dtype=float),
            {},
            _all(B),
            monotone=True,
            description="f = x + y",
        ),
        CorpusEntry(
            "product",
            lambda x, y, p: np.asarray(x, dtype=float) * np.asarray(y, dtype=float),
            {},
            _all(B),
            monotone=True,
            description="f = x y",
        ),
        CorpusEntry(
            "linear",
            lambda x, y, p: p["p"] * np.asarray(x, dtype=float) + p["q"] * np.asarray(y, dtype=float),
            {"p": 1.0, "q": 0.0},
            _all(B),
            description="f = p x + q y",
        ),
        CorpusEntry(
            "plane_indicator",
            _plane_indicator,
            {},
            {
                "Vitali": U,
                "Frechet": U,
                "Hardy": U,
                "Arzela": B,
                "Hahn": B,
                "Pierpont": B,
                "Tonelli": B,
            },
            continuous=False,
            description="f = 1 on x + y = 1, else 0",
        ),
        CorpusEntry(
            "step_below_diagonal",
            _step_below_diagonal,
            {},
            {
                "Vitali": U,
                "Frechet": U,
                "Hardy": U,
                "Arzela": U,
                "Hahn": B,
                "Pierpont": B,
                "Tonelli": B,
            },
            continuous=False,
            description="f = 0 for x < y, else 1",
        ),
        CorpusEntry(
            "xsin_inv",
            _xsin_inv,
            {},
            {
                "Vitali": B,
                "Frechet": B,
                "Hardy": U,
                "Arzela": U,
                "Hahn": U,
                "Pierpont": U,
                "Tonelli": U,
            },
            description="f = x sin(1/x), f(0, y) = 0",
        ),
        CorpusEntry(
            "weierstrass_cylinder",
            _weierstrass_cylinder,
            {"s": 1.5, "lam": 3.0, "K": 20.0, "slope": 1.0},
            {
                "Vitali": B,
                "Frechet": B,
                "Hardy": U,
                "Arzela": U,
                "Hahn": U,
                "Pierpont": U,
                "Tonelli": U,
            },
            description="f = slope*x + W_s(y), W_s a partial Weierstrass sum",
            validate=_check_weierstrass,
        ),
    ]
}

# The indicator of Q x Q is deliberately absent: every lattice node is
# rational, so any sampling of it is the constant 1.


def _entry(identifier: str) -> CorpusEntry:
    try:
        return CORPUS[identifier]
    except KeyError:
        raise CorpusError(
            f"unknown corpus identifier {identifier!r}; known: {', '.join(sorted(CORPUS))}"
        ) from None


def corpus_function(identifier: str, params: Mapping[str, float] | None = None) -> Callable:
    """Vectorized ``(x, y) -> f(x, y)`` for a corpus entry with resolved parameters."""
    entry = _entry(identifier)
    p = entry.resolve(params)
    return lambda x, y: entry.func(x, y, p)


def corpus_eval(identifier: str, params: Mapping[str, float] | None, x, y) -> float:
    """Exact pointwise value of a corpus function.

    Rational inputs (``int``, ``Fraction``) are compared exactly where the
    function has a discontinuity set.
    """
    entry = _entry(identifier)
    p = entry.resolve(params)
    return float(np.asarray(entry.func(x, y, p)))


def sample_corpus(
    identifier: str,
    m: int,
    n: int | None = None,
    rect: Rect | None = None,
    params: Mapping[str, float] | None = None,
) -> GridFunction:
    return sample(corpus_function(identifier, params), rect or Rect.unit(), m, m if n is None else n)


# ---------------------------------------------------------------------------
# persistence


def _validated(rect_d, m, n, values, where: str) -> GridFunction:
    try:
        rect = Rect(*(float(rect_d[k]) for k in ("a", "b", "c", "d")))
    except (KeyError, TypeError) as exc:
        raise GridFormatError(f"{where}: malformed rect: {exc}") from None
    except ValueError as exc:
        raise GridFormatError(f"{where}: {exc}") from None
    for name, v in (("m", m), ("n", n)):
        if isinstance(v, bool) or not isinstance(v, numbers.Integral) or v < 1:
            raise GridFormatError(f"{where}: {name} must be a positive integer, got {v!r}")
    expected = (m + 1) * (n + 1)
    if len(values) != expected:
        raise GridFormatError(
            f"{where}: length mismatch, expected (m+1)(n+1) = {expected} values, got {len(values)}"
        )
    arr = np.empty(expected)
    for k, v in enumerate(values):
        if isinstance(v, bool) or not isinstance(v, numbers.Real):
            raise GridFormatError(f"{where}: non-numeric token {v!r} at value index {k}")
        if not math.isfinite(v):
            raise GridFormatError(f"{where}: non-finite value {v!r} at value index {k}")
        arr[k] = v
    return GridFunction(rect, int(m), int(n), arr)


def _fmt_of(path: Path, fmt: str | None) -> str:
    fmt = fmt or path.suffix.lstrip(".").lower() or "json"
    if fmt not in ("json", "csv"):
        raise GridFormatError(f"unsupported grid format {fmt!r}")
    return fmt


def grid_to_csv(g: GridFunction) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(["a", "b", "c", "d", "m", "n"])
    r = g.rect
    w.writerow([repr(r.a), repr(r.b), repr(r.c), repr(r.d), g.m, g.n])
    for row in g.z:
        w.writerow([repr(float(v)) for v in row])
    return buf.getvalue()


def write_grid(g: GridFunction, path, fmt: str | None = None) -> None:
    """Write ``g`` as JSON or CSV (chosen by ``fmt`` or the file suffix)."""
    path = Path(path)
    if _fmt_of(path, fmt) == "json":
        path.write_text(json.dumps(g.to_dict()) + "\n")
    else:
        path.write_text(grid_to_csv(g))


def _parse_csv(text: str, where: str) -> GridFunction:
    rows = [r for r in csv.reader(io.StringIO(text)) if r]
    if len(rows) < 2 or [h.strip() for h in rows[0]] != ["a", "b", "c", "d", "m", "n"]:
        raise GridFormatError(f"{where}: expected header 'a,b,c,d,m,n' followed by its values")
    head = rows[1]
    if len(head) != 6:
        raise GridFormatError(f"{where}: header values line must have 6 fields")
    try:
        a, b, c, d = (float(t) for t in head[:4])
        m, n = int(head[4]), int(head[5])
    except ValueError as exc:
        raise GridFormatError(f"{where}: bad header value: {exc}") from None
    body = rows[2:]
    values: list = []
    for j, row in enumerate(body):
        if len(row) != m + 1 and j < n + 1:
            raise GridFormatError(
                f"{where}: row {j} has {len(row)} values, expected m+1 = {m + 1}"
            )
        for t in row:
            k = len(values)
            try:
                values.append(float(t))
            except ValueError:
                raise GridFormatError(
                    f"{where}: non-numeric token {t.strip()!r} at value index {k} (row {j})"
                ) from None
    return _validated({"a": a, "b": b, "c": c, "d": d}, m, n, values, where)


def read_grid(path, fmt: str | None = None) -> GridFunction:
    """Read a grid written by :func:`write_grid`, validating every invariant."""
    path = Path(path)
    fmt = _fmt_of(path, fmt)
    text = path.read_text()
    where = str(path)
    if fmt == "csv":
        return _parse_csv(text, where)
    try:
        doc = json.loads(text)
    except json.JSONDecodeError as exc:
        raise GridFormatError(f"{where}: invalid JSON: {exc}") from None
    if not isinstance(doc, dict) or not {"rect", "m", "n", "values"} <= doc.keys():
        raise GridFormatError(f"{where}: expected keys rect, m, n, values")
    if not isinstance(doc["values"], list):
        raise GridFormatError(f"{where}: values must be a list")
    if not isinstance(doc["rect"], dict):
        raise GridFormatError(f"{where}: rect must be an object")
    return _validated(doc["rect"], doc["m"], doc["n"], doc["values"], where)
