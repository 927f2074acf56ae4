"""Hermitian 4-manifolds N^3 x S^1 built over the ellipsoid
x^2 + y^2 + z^2 / a^2 = 1.

The circle bundle N^3 is not constructed; only the scalar data it produces
(area, minimal Gaussian curvature, quantized torsion length, and the
resulting bounds) are evaluated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from scipy.optimize import brentq

from .bounds import BoundInputs, dim4_bound, dim4_s_deformed

#: below this |a - 1| the area is evaluated from its Taylor series
SERIES_RADIUS = 1e-6

DEFAULT_K = 3


def _check_a(a: float) -> None:
    if not a > 0:
        raise ValueError(f"the ellipsoid parameter must be positive, got {a}")


def _arctan_ratio(u: float) -> float:
    """arctan(sqrt u) / sqrt u, continued analytically to u < 0 (artanh)."""
    if u > 0:
        r = math.sqrt(u)
        return math.atan(r) / r
    r = math.sqrt(-u)
    return math.atanh(r) / r


def ellipsoid_volume(a: float) -> float:
    """Area of the spheroid with unit equator and polar semi-axis a.

    For a > 1 this is 2 pi + 2 pi a^2 arcsin(sqrt(a^2 - 1) / a) / sqrt(a^2 - 1);
    with u = a^2 - 1 both that and the a < 1 (artanh) form equal
    2 pi + 2 pi a^2 arctan(sqrt u) / sqrt u.
    """
    _check_a(a)
    if abs(a - 1) < SERIES_RADIUS:
        u = (a - 1) * (a + 1)
        return 2 * math.pi + 2 * math.pi * a * a * (1 - u / 3 + u * u / 5 - u**3 / 7)
    return 2 * math.pi + 2 * math.pi * a * a * _arctan_ratio(a * a - 1)


def gauss_curvature(a: float, t: float) -> float:
    """K(t) = a^2 / (sin^2 t + a^2 cos^2 t)^2, t = 0 on the equator."""
    _check_a(a)
    return a * a / (math.sin(t) ** 2 + a * a * math.cos(t) ** 2) ** 2


def gauss_curvature_min(a: float) -> float:
    """1 / a^2 for a >= 1 (attained on the equator), a^2 for a < 1 (at the poles)."""
    _check_a(a)
    return 1 / (a * a) if a >= 1 else a * a


def torsion_length(a: float, k: int) -> float:
    """|T| = k pi / vol, from the integrality of the bundle's Chern class."""
    return k * math.pi / ellipsoid_volume(a)


def is_admissible(a: float, k: int) -> bool:
    return k >= 1 and torsion_length(a, k) ** 2 < gauss_curvature_min(a)


def admissible_torsions(a: float) -> list[tuple[int, float]]:
    """All (k, |T|) with |T|^2 < G_min."""
    _check_a(a)
    vol = ellipsoid_volume(a)
    g_min = gauss_curvature_min(a)
    # |T| grows linearly in k, so the admissible k form an initial segment
    k_max = math.floor(math.sqrt(g_min) * vol / math.pi) + 1
    return [(k, k * math.pi / vol) for k in range(1, k_max + 1) if (k * math.pi / vol) ** 2 < g_min]


@dataclass(frozen=True)
class HopfCurvePoint:
    a: float
    k: int
    vol: float
    g_min: float
    t_norm: float
    c: float
    beta_univ: float
    beta_s: float

    @property
    def scal_min(self) -> float:
        return 2 * self.g_min - 2 * self.t_norm**2

    @property
    def admissible(self) -> bool:
        return self.t_norm**2 < self.g_min


def hopf_point(a: float, k: int = DEFAULT_K) -> HopfCurvePoint:
    """Curve values without the admissibility requirement (curves are evaluated by continuity)."""
    vol = ellipsoid_volume(a)
    g_min = gauss_curvature_min(a)
    t = k * math.pi / vol
    t2 = t * t
    gap = max(g_min - t2, 0.0)
    return HopfCurvePoint(
        a=a,
        k=k,
        vol=vol,
        g_min=g_min,
        t_norm=t,
        c=2 * g_min / t2 - 2,
        beta_univ=0.5 * g_min - 0.625 * t2,
        beta_s=(math.sqrt(12 * gap) - t) ** 2 / 16,
    )


def hopf_curves(a: float, k: int = DEFAULT_K) -> HopfCurvePoint:
    """Universal and deformed bounds for the (a, k) member of the family.

    Raises ``ValueError`` for inadmissible pairs.  On 1/6 <= c <= 3/2 the
    deformed bound is cross-checked against the general dimension-4 theorem.
    """
    _check_a(a)
    p = hopf_point(a, k)
    if not p.admissible:
        raise ValueError(f"(a={a}, k={k}) violates |T|^2 < G_min")
    inp = BoundInputs(scal_min=p.scal_min, t_norm_sq=p.t_norm**2)
    if abs(dim4_s_deformed(inp) - p.beta_s) > 1e-12 * max(1.0, p.beta_s):
        raise ArithmeticError("deformed bound disagrees with the dimension-4 formula")
    if 1 / 6 <= p.c <= 1.5:
        theorem = dim4_bound(inp)
        if abs(theorem - p.beta_s) > 1e-12 * max(1.0, p.beta_s):
            raise ArithmeticError("deformed bound disagrees with the dimension-4 theorem")
    return p


def hopf_limits(k: int = DEFAULT_K, h: float = 1e-7) -> dict[str, float]:
    """One-sided limits a -> 1+ of c, beta_univ and beta_s.

    Richardson extrapolation 2 f(1 + h) - f(1 + 2h) removes the linear term.
    """
    near = hopf_point(1 + h, k)
    far = hopf_point(1 + 2 * h, k)
    return {
        name: 2 * getattr(near, name) - getattr(far, name)
        for name in ("c", "beta_univ", "beta_s")
    }


def beta_univ_root(k: int = DEFAULT_K, lo: float = 1.0 + 1e-9, hi: float = 50.0) -> float:
    """The a > 1 where the universal bound changes sign."""
    return brentq(lambda a: hopf_point(a, k).beta_univ, lo, hi, xtol=1e-14)


def c_crossing(level: float = 1.5, k: int = DEFAULT_K, lo: float = 1.0 + 1e-9, hi: float = 2.0) -> float:
    """The a > 1 where c(a) crosses ``level``."""
    return brentq(lambda a: hopf_point(a, k).c - level, lo, hi, xtol=1e-14)
