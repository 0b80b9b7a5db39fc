"""Closed-cell maxima and minima over block partitions of the sampling lattice."""

from __future__ import annotations

import numpy as np


def finest_extrema(z: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Max and min over the four corners of every finest cell, shape ``(n, m)``."""
    c = (z[:-1, :-1], z[1:, :-1], z[:-1, 1:], z[1:, 1:])
    hi = np.maximum(np.maximum(c[0], c[1]), np.maximum(c[2], c[3]))
    lo = np.minimum(np.minimum(c[0], c[1]), np.minimum(c[2], c[3]))
    return hi, lo


def block_ranges(z: np.ndarray, sx: int, sy: int, extrema=None) -> np.ndarray:
    """``max - min`` of ``z`` over closed blocks spanning ``sx`` x ``sy`` finest cells.

    A closed block is the union of its closed finest cells, so block extrema are
    extrema of finest-cell extrema.  A trailing partial block (when ``sx`` or
    ``sy`` does not divide the cell count) is clipped to the lattice.
    """
    hi, lo = extrema if extrema is not None else finest_extrema(z)
    n, m = hi.shape
    if sx < 1 or sy < 1:
        raise ValueError("block size must be positive")
    if m % sx == 0 and n % sy == 0:
        bh = hi.reshape(n // sy, sy, m // sx, sx).max(axis=(1, 3))
        bl = lo.reshape(n // sy, sy, m // sx, sx).min(axis=(1, 3))
    else:
        ix = np.arange(0, m, sx)
        iy = np.arange(0, n, sy)
        bh = np.maximum.reduceat(np.maximum.reduceat(hi, ix, axis=1), iy, axis=0)
        bl = np.minimum.reduceat(np.minimum.reduceat(lo, ix, axis=1), iy, axis=0)
    return bh - bl
