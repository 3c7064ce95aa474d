"""Threshold color processes and the dyadic paint-box.

A threshold process colors site i with 1 exactly when X_i >= h, where
X_i = sqrt(r) W + sqrt(1-r) U_i for i.i.d. standard normals (Gaussian case)
or X_i = a W + b U_i for i.i.d. standard symmetric alpha-stable variables
with b = (1 - a^alpha)^(1/alpha) (stable case).  Conditionally on the shared
factor W the colors are i.i.d., so the process is a mixture of product laws;
the Gaussian mixing variable has the explicit distribution function computed
here.  At r = 1/2 and h = 0 the mixing variable is uniform on [0,1], which is
also the mixing law of the infinite dyadic paint-box (1/2, 1/4, 1/8, ...).
"""

from __future__ import annotations

import math
from fractions import Fraction

import numpy as np
from scipy.special import ndtr, ndtri

from .paintbox import PaintBox
from .rng import blocks, stream


def dyadic_paintbox(k):
    """The truncated dyadic paint-box (1/2, 1/4, ..., 2^-k).

    The truncation approximates the mixing law of the infinite dyadic
    paint-box to within 2^-k in Kolmogorov distance: the neglected boxes
    carry total mass 2^-k, so each mixing atom moves by at most 2^-k.
    """
    if k < 1:
        raise ValueError("k must be at least 1")
    return PaintBox(tuple(Fraction(1, 2**i) for i in range(1, k + 1)))


def gaussian_xi_cdf(r, h, t):
    """Distribution function at t of the Gaussian threshold mixing variable.

    The mixing variable is P(X_i >= h | W) = Phibar((h - sqrt(r) W)/sqrt(1-r)).
    For r = 0 it is the constant Phibar(h) and the result is the step
    function; for 0 < r < 1 the closed form below is exact to floating
    precision (absolute error well under 1e-12).
    """
    r, h, t = float(r), float(h), float(t)
    if not 0.0 <= r < 1.0:
        raise ValueError("r must lie in [0,1)")
    if not 0.0 < t < 1.0:
        raise ValueError("t must lie in (0,1)")
    if r == 0.0:
        return 1.0 if t >= ndtr(-h) else 0.0
    return float(ndtr((h - math.sqrt(1.0 - r) * ndtri(1.0 - t)) / math.sqrt(r)))


def gaussian_xi_sampler(r, h, count, seed):
    """Seeded draws of the Gaussian threshold mixing variable."""
    r, h = float(r), float(h)
    if not 0.0 <= r < 1.0:
        raise ValueError("r must lie in [0,1)")
    parts = []
    for index, size in blocks(count):
        w = stream(seed, index).standard_normal(size)
        parts.append(ndtr(-(h - math.sqrt(r) * w) / math.sqrt(1.0 - r)))
    return np.concatenate(parts) if parts else np.empty(0)


def gaussian_threshold_sampler(r, h, n, count, seed):
    """Seeded samples of the Gaussian threshold color process on n sites.

    Returns a (count, n) array of 0/1 colors, 1 where
    sqrt(r) W + sqrt(1-r) U_i >= h.  Deterministic given the seed.
    """
    r, h = float(r), float(h)
    if not 0.0 <= r < 1.0:
        raise ValueError("r must lie in [0,1)")
    if n < 1:
        raise ValueError("n must be positive")
    rows = []
    for index, size in blocks(count):
        rng = stream(seed, index)
        w = rng.standard_normal((size, 1))
        u = rng.standard_normal((size, n))
        x = math.sqrt(r) * w + math.sqrt(1.0 - r) * u
        rows.append((x >= h).astype(np.uint8))
    return np.concatenate(rows, axis=0) if rows else np.empty((0, n), dtype=np.uint8)


def _stable_standard(rng, shape, alpha):
    """Standard symmetric alpha-stable draws (characteristic function
    e^{-|t|^alpha}) by the Chambers-Mallows-Stuck transform."""
    theta = rng.uniform(-np.pi / 2, np.pi / 2, shape)
    if alpha == 1.0:
        return np.tan(theta)
    e = rng.exponential(1.0, shape)
    x = np.sin(alpha * theta) / np.cos(theta) ** (1.0 / alpha)
    return x * (np.cos((1.0 - alpha) * theta) / e) ** ((1.0 - alpha) / alpha)


def stable_threshold_sampler(alpha, a, h, n, count, seed):
    """Seeded samples of the symmetric-stable threshold color process.

    Returns a (count, n) array of 0/1 colors, 1 where a W + b U_i >= h with
    b = (1 - a^alpha)^(1/alpha); the coordinates are then again standard
    alpha-stable.  alpha = 2 gives normals with variance 2, so the zero-
    threshold process at a = sqrt(1/2) matches the Gaussian case r = 1/2.
    """
    alpha, a, h = float(alpha), float(a), float(h)
    if not 0.0 < alpha <= 2.0:
        raise ValueError("alpha must lie in (0,2]")
    if not 0.0 < a < 1.0:
        raise ValueError("a must lie in (0,1)")
    if n < 1:
        raise ValueError("n must be positive")
    b = (1.0 - a**alpha) ** (1.0 / alpha)
    rows = []
    for index, size in blocks(count):
        rng = stream(seed, index)
        w = _stable_standard(rng, (size, 1), alpha)
        u = _stable_standard(rng, (size, n), alpha)
        rows.append((a * w + b * u >= h).astype(np.uint8))
    return np.concatenate(rows, axis=0) if rows else np.empty((0, n), dtype=np.uint8)
