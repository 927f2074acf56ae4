"""Closed-form lower bounds for the first eigenvalue of the square of the
Dirac operator D^g + T/4 with parallel torsion T.

Dimension 4 bounds depend on Scal^g_min and |T|^2 through the ratio
c = Scal^g_min / |T|^2; the 5-dimensional Sasakian bounds only on Scal^g_min
(|T|^2 = 8 there).  Where no bound follows, functions return a ``NoBound``
instance rather than a number.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable, Sequence

#: breakpoint of the 5-dimensional theorem, 4 (9 + 4 sqrt 5) ~ 71.78
DIM5_BREAKPOINT = 4.0 * (9.0 + 4.0 * math.sqrt(5.0))


@dataclass(frozen=True)
class NoBound:
    """Outcome when no lower bound can be concluded."""

    reason: str = ""

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class BoundInputs:
    scal_min: float
    t_norm_sq: float

    def __post_init__(self):
        if self.t_norm_sq < 0:
            raise ValueError("|T|^2 must be nonnegative")

    @classmethod
    def from_ratio(cls, c: float, t_norm_sq: float = 1.0) -> BoundInputs:
        return cls(scal_min=c * t_norm_sq, t_norm_sq=t_norm_sq)

    @property
    def t_norm(self) -> float:
        return math.sqrt(self.t_norm_sq)

    @property
    def c(self) -> float:
        if self.t_norm_sq == 0:
            raise ZeroDivisionError("the ratio c is undefined for vanishing torsion")
        return self.scal_min / self.t_norm_sq

    @property
    def scal_nabla(self) -> float:
        """Scalar curvature of the torsion connection, Scal^g - 3/2 |T|^2."""
        return self.scal_min - 1.5 * self.t_norm_sq


@dataclass(frozen=True)
class Branch:
    label: str
    lo: float
    hi: float
    evaluate: Callable[[float], float]

    def contains(self, x: float) -> bool:
        return self.lo <= x <= self.hi


class PiecewiseBound:
    """Closed-form function of one variable assembled from adjacent branches.

    Branches must tile [lo, hi] in order; outside the covered domain the
    result is ``NoBound``.  At a shared breakpoint the right branch is used.
    """

    def __init__(self, branches: Sequence[Branch], below: str = "", above: str = ""):
        for left, right in zip(branches, branches[1:]):
            if left.hi != right.lo:
                raise ValueError(f"branches {left.label!r} and {right.label!r} do not meet")
        self.branches = tuple(branches)
        self._below = below
        self._above = above

    @property
    def breakpoints(self) -> list[float]:
        return [b.lo for b in self.branches] + [self.branches[-1].hi]

    def branch(self, x: float) -> Branch | None:
        for b in reversed(self.branches):
            if b.contains(x):
                return b
        return None

    def __call__(self, x: float) -> float | NoBound:
        b = self.branch(x)
        if b is None:
            return NoBound(self._below if x < self.breakpoints[0] else self._above)
        return b.evaluate(x)

    def label(self, x: float) -> str:
        b = self.branch(x)
        return b.label if b is not None else "none"

    def jumps(self) -> list[float]:
        """|left - right| at each interior breakpoint."""
        return [
            abs(left.evaluate(left.hi) - right.evaluate(right.lo))
            for left, right in zip(self.branches, self.branches[1:])
        ]


def friedrich_bound(n: int, scal_min: float) -> float:
    """Riemannian bound n Scal^g_min / (4 (n - 1)), for comparison curves."""
    return n * scal_min / (4.0 * (n - 1))


# ---------------------------------------------------------------- dimension 4


def dim4_universal(inp: BoundInputs) -> float:
    """(Scal^g_min - |T|^2 / 2) / 4; negative values are useless but returned."""
    return 0.25 * (inp.scal_min - 0.5 * inp.t_norm_sq)


def _require_torsion(inp: BoundInputs) -> None:
    if inp.t_norm_sq <= 0:
        raise ValueError("this estimate needs nonzero torsion")


def dim4_rough(a0: float, a1: float, y: float, sign: int, inp: BoundInputs) -> float:
    """Deformed estimate for S = a0 + a1 T on the (sign |T|)-eigenspace.

    ``y`` is <D psi, psi> / |psi|^2 for the eigenspinor psi.
    """
    _require_torsion(inp)
    if sign not in (1, -1):
        raise ValueError("sign must be +1 or -1")
    t = inp.t_norm
    return (
        -(a0 + sign * a1 * t) * (2 * y + t)
        - 4 * a0**2
        - 3 * a1**2 * inp.t_norm_sq
        - sign * 6 * a0 * a1 * t
        + inp.scal_min / 4
        - inp.t_norm_sq / 8
    )


def dim4_optimize(y: float, inp: BoundInputs, sign: int = 1) -> tuple[float, float, float]:
    """Stationary point (a0, a1) of ``dim4_rough`` and the resulting bound.

    The rough estimate is a concave quadratic in (a0, a1); its maximum sits at
    a0 = 0, a1 = -sign (2y + |T|) / (6 |T|), independent of the sign in value.
    """
    _require_torsion(inp)
    t = inp.t_norm
    a1 = -sign * (2 * y + t) / (6 * t)
    bound = (2 * y + t) ** 2 / 12 + inp.scal_min / 4 - inp.t_norm_sq / 8
    return 0.0, a1, bound


def inner_min_over_y(lam: float, t_norm: float) -> float:
    """min of (2y + |T|)^2 over |y| <= sqrt(lam)."""
    if lam < 0:
        raise ValueError("lambda must be nonnegative")
    if lam >= t_norm**2 / 4:
        return 0.0
    return (t_norm - 2 * math.sqrt(lam)) ** 2


def dim4_sqrt_lambda_floor(inp: BoundInputs) -> float:
    """Larger root in sqrt(lam) of 2 lam + sqrt(lam) |T| + |T|^2/8 - 3/4 Scal = 0."""
    _require_torsion(inp)
    return (math.sqrt(6 * max(inp.scal_min, 0.0)) - inp.t_norm) / 4


def _dim4_s_deformed_normalized(c: float) -> float:
    return (math.sqrt(6 * c) - 1) ** 2 / 16


def _dim4_universal_normalized(c: float) -> float:
    return (c - 0.5) / 4


#: dimension-4 bound divided by |T|^2, as a function of c
DIM4_PIECES = PiecewiseBound(
    [
        Branch("s_deformed", 1.0 / 6.0, 1.5, _dim4_s_deformed_normalized),
        Branch("universal", 1.5, math.inf, _dim4_universal_normalized),
    ],
    below="c < 1/6: no lower bound can be given",
)


def dim4_s_deformed(inp: BoundInputs) -> float:
    """|T|^2 (sqrt(6c) - 1)^2 / 16 evaluated regardless of its range of validity."""
    _require_torsion(inp)
    return inp.t_norm_sq * _dim4_s_deformed_normalized(max(inp.c, 0.0))


def dim4_bound(inp: BoundInputs) -> float | NoBound:
    """Best lower bound in dimension 4, chosen by the ratio c.

    Vanishing torsion falls back to the Riemannian value Scal^g_min / 3.
    """
    if inp.t_norm_sq == 0:
        return friedrich_bound(4, inp.scal_min)
    value = DIM4_PIECES(inp.c)
    if isinstance(value, NoBound):
        return value
    return inp.t_norm_sq * value


def agi_comparator(inp: BoundInputs) -> float | NoBound:
    """|T|^2 (2c - 3) / 4, the Hermitian-surface estimate, valid for c >= 3/2."""
    _require_torsion(inp)
    if inp.c < 1.5:
        return NoBound("needs positive conformal scalar curvature, c >= 3/2")
    return inp.t_norm_sq * (2 * inp.c - 3) / 4


# ------------------------------------------------------- Sasakian dimension 5


def _require_dim5_domain(scal_min: float) -> None:
    if scal_min <= -4:
        raise ValueError("the Sasakian estimates need Scal^g_min > -4")


def dim5_sigma0_bound(scal_min: float) -> float:
    """Bound on the kernel of T: max(5/16 Scal^g_min, 1 + Scal^g_min / 4)."""
    _require_dim5_domain(scal_min)
    return max(friedrich_bound(5, scal_min), 1 + scal_min / 4)


def dim5_sigma0_rough(a: float, y: float, scal_min: float) -> float:
    """Deformed estimate on the kernel of T for S = a (T^2 - 8)."""
    return 16 * a * y - 64 * a**2 + 1 + scal_min / 4


def dim5_sigma4_rough(x: float, y: float, scal_min: float) -> float:
    """Deformed estimate on the +4 eigenspace, S acting there by x = 2 a1 + 8 a2."""
    return -(x**2) - 4 * x - 2 * x * y - 3 + scal_min / 4


def dim5_sigma4_optimal_x(y: float) -> float:
    return -2.0 - y


def dim5_sigma4_refined(y: float, scal_min: float) -> float:
    """1 + 4y + y^2 + Scal^g_min / 4, the maximum of ``dim5_sigma4_rough`` over x."""
    return 1 + 4 * y + y * y + scal_min / 4


def dim5_universal(scal_min: float) -> float:
    """-3 + Scal^g_min / 4."""
    return -3 + scal_min / 4


def dim5_limiting_value(scal: float) -> float:
    """(1 + Scal / 4)^2 / 16, attained on eta-Einstein Sasakian manifolds."""
    return (1 + scal / 4) ** 2 / 16


DIM5_PIECES = PiecewiseBound(
    [
        Branch("s_deformed", -4.0, DIM5_BREAKPOINT, dim5_limiting_value),
        Branch("riemannian", DIM5_BREAKPOINT, math.inf, lambda s: friedrich_bound(5, s)),
    ],
    below="Scal^g_min <= -4",
)


def dim5_bound(scal_min: float) -> float:
    _require_dim5_domain(scal_min)
    return DIM5_PIECES(scal_min)
