"""Independent brute-force checks used by the test-suite and ``verify``.

None of these share code paths with the closed forms they check.
"""

from __future__ import annotations

import math
from typing import Callable

import numpy as np
from scipy.integrate import quad
from scipy.optimize import minimize_scalar


def blade_sign_by_reduction(I, J) -> tuple[int, tuple[int, ...]]:
    """Reduce the word e_I e_J by adjacent swaps (-1 each) and cancellations e_i e_i = -1."""
    word = list(I) + list(J)
    sign = 1
    changed = True
    while changed:
        changed = False
        for p in range(len(word) - 1):
            if word[p] == word[p + 1]:
                del word[p : p + 2]
                sign = -sign
                changed = True
                break
            if word[p] > word[p + 1]:
                word[p], word[p + 1] = word[p + 1], word[p]
                sign = -sign
                changed = True
                break
    return sign, tuple(word)


def spheroid_area_quadrature(a: float) -> float:
    """2 pi int_0^pi sin t sqrt(cos^2 t + a^2 sin^2 t) dt."""
    val, _ = quad(
        lambda t: math.sin(t) * math.sqrt(math.cos(t) ** 2 + a * a * math.sin(t) ** 2),
        0.0,
        math.pi,
        epsabs=1e-14,
        epsrel=1e-13,
        limit=200,
    )
    return 2 * math.pi * val


def _fundamental_form_curvature(a: float, t: float) -> float:
    # X(t, p) = (sin t cos p, sin t sin p, a cos t), evaluated at p = 0
    xt = np.array([math.cos(t), 0.0, -a * math.sin(t)])
    xp = np.array([0.0, math.sin(t), 0.0])
    xtt = np.array([-math.sin(t), 0.0, -a * math.cos(t)])
    xtp = np.array([0.0, math.cos(t), 0.0])
    xpp = np.array([-math.sin(t), 0.0, 0.0])
    normal = np.cross(xt, xp)
    normal /= np.linalg.norm(normal)
    E, F, G = xt @ xt, xt @ xp, xp @ xp
    L, M, N = xtt @ normal, xtp @ normal, xpp @ normal
    return float((L * N - M * M) / (E * G - F * F))


def sampled_curvature_min(a: float, samples: int = 2001) -> float:
    """Minimum Gaussian curvature from the fundamental forms, grid plus bounded refinement."""
    ts = np.linspace(1e-6, math.pi / 2, samples)
    ks = np.array([_fundamental_form_curvature(a, t) for t in ts])
    j = int(np.argmin(ks))
    lo, hi = ts[max(j - 1, 0)], ts[min(j + 1, samples - 1)]
    res = minimize_scalar(
        lambda t: _fundamental_form_curvature(a, t),
        bounds=(lo, hi),
        method="bounded",
        options={"xatol": 1e-12},
    )
    return float(min(ks[j], res.fun))


def _golden_max_1d(f: Callable[[float], float], lo: float, hi: float) -> float:
    # two-point bracket: scipy expands it downhill before the golden-section search
    res = minimize_scalar(lambda x: -f(x), bracket=(lo, hi), method="golden", tol=1e-12)
    return float(res.x)


def grid_golden_maximize_2d(
    f: Callable[[float, float], float],
    box: tuple[float, float] = (-5.0, 5.0),
    points: int = 201,
    sweeps: int = 50,
) -> tuple[float, float, float]:
    """Maximize f on a square: coarse grid, then coordinate-wise golden-section sweeps.

    ``f`` must accept numpy arrays (the grid is evaluated in one call).
    """
    grid = np.linspace(box[0], box[1], points)
    X, Y = np.meshgrid(grid, grid, indexing="ij")
    vals = np.asarray(f(X, Y))
    i, j = np.unravel_index(int(np.argmax(vals)), vals.shape)
    x, y = float(grid[i]), float(grid[j])
    step = (box[1] - box[0]) / (points - 1)
    for _ in range(sweeps):
        x_new = _golden_max_1d(lambda s: f(s, y), x - 2 * step, x + 2 * step)
        y_new = _golden_max_1d(lambda s: f(x_new, s), y - 2 * step, y + 2 * step)
        moved = max(abs(x_new - x), abs(y_new - y))
        x, y = x_new, y_new
        if moved < 1e-12:
            break
    return x, y, f(x, y)


def grid_golden_maximize_1d(
    f: Callable[[float], float], box: tuple[float, float], points: int = 2001
) -> tuple[float, float]:
    grid = np.linspace(box[0], box[1], points)
    vals = np.asarray(f(grid))
    j = int(np.argmax(vals))
    step = (box[1] - box[0]) / (points - 1)
    x = _golden_max_1d(f, grid[j] - 2 * step, grid[j] + 2 * step)
    return x, f(x)


def dense_min(f: Callable[[float], float], lo: float, hi: float, samples: int = 4001) -> float:
    """Minimum over a uniform grid including both endpoints."""
    xs = np.linspace(lo, hi, samples)
    return float(min(f(x) for x in xs))
