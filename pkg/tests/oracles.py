"""Slow, obviously-correct reference implementations used only by the tests."""

import itertools
import math

import mpmath
import numpy as np


def random_int_grid(rng, m, n, lo=-5, hi=5):
    # integer values keep every sum exact, so "equal" can mean ==
    return rng.integers(lo, hi + 1, size=(n + 1, m + 1)).astype(float)


def arzela_brute(z):
    """Max of Σ|f(p_k+1) - f(p_k)| over every chain p_0 < p_1 < ... in the product order."""
    n1, m1 = z.shape
    nodes = [(i, j) for j in range(n1) for i in range(m1)]
    best = 0.0

    def extend(p, acc):
        nonlocal best
        best = max(best, acc)
        for q in nodes:
            if q != p and q[0] >= p[0] and q[1] >= p[1]:
                extend(q, acc + abs(z[q[1], q[0]] - z[p[1], p[0]]))

    for p in nodes:
        extend(p, 0.0)
    return best


def _subnets(count):
    idx = range(count)
    for size in range(2, count + 1):
        yield from itertools.combinations(idx, size)


def net_deltas(z, xs, ys):
    """Mixed differences of z restricted to the node lists xs, ys (rows: y)."""
    sub = z[np.ix_(ys, xs)]
    return sub[1:, 1:] - sub[1:, :-1] - sub[:-1, 1:] + sub[:-1, :-1]


def vitali_brute(z):
    n1, m1 = z.shape
    best = 0.0
    for xs in _subnets(m1):
        for ys in _subnets(n1):
            best = max(best, float(np.abs(net_deltas(z, list(xs), list(ys))).sum()))
    return best


def frechet_brute(z):
    """Max over every sub-net and both sign vectors of |Σ ε_i ε̄_j Δ11|."""
    n1, m1 = z.shape
    best = 0.0
    for xs in _subnets(m1):
        for ys in _subnets(n1):
            d = net_deltas(z, list(xs), list(ys))
            for e in itertools.product((-1, 1), repeat=d.shape[1]):
                for eb in itertools.product((-1, 1), repeat=d.shape[0]):
                    best = max(best, abs(float(np.array(eb) @ d @ np.array(e))))
    return best


def weierstrass_mp(s, lam, K, x, dps=40):
    with mpmath.workdps(dps):
        x = mpmath.mpf(x)
        lam = mpmath.mpf(lam)
        return float(mpmath.fsum(lam ** ((s - 2) * k) * mpmath.sin(lam**k * x) for k in range(K + 1)))


def gamma_mp(x, dps=40):
    with mpmath.workdps(dps):
        return float(mpmath.gamma(x))


def max_range_brute(z, i0, i1, j0, j1):
    block = [z[j, i] for j in range(j0, j1 + 1) for i in range(i0, i1 + 1)]
    return max(block) - min(block)


def box_count_brute(z, s):
    """Σ(1 + ceil(R/δ)) with δ = s lattice steps on a unit square, cell by cell."""
    n, m = z.shape[0] - 1, z.shape[1] - 1
    delta = s / m
    total = 0
    for j0 in range(0, n, s):
        for i0 in range(0, m, s):
            r = max_range_brute(z, i0, min(i0 + s, m), j0, min(j0 + s, n))
            total += 1 + math.ceil(r / delta - 1e-9)
    return total
