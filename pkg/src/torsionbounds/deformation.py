"""Polynomial deformations S = P(T) of the spinor connection.

Only the pointwise algebra is computed here: which polynomials keep a torsion
eigenspace invariant, and the anticommutator sum
sum_i |(e_i S + S e_i) psi|^2 that enters the deformed Schroedinger-Lichnerowicz
formula.  Nothing involving derivatives of spinors is represented.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

import numpy as np

from .clifford import TOL_ALG, SpinorRep


@dataclass(frozen=True)
class DeformPolynomial:
    """P(t) = a0 + a1 t + a2 t^2."""

    a0: float = 0.0
    a1: float = 0.0
    a2: float = 0.0

    def __post_init__(self):
        if not all(np.isfinite([self.a0, self.a1, self.a2])):
            raise ValueError("polynomial coefficients must be finite")

    @classmethod
    def sigma0_family(cls, a: float) -> DeformPolynomial:
        """a (T^2 - 8): keeps the kernel of the Sasakian torsion invariant."""
        return cls(-8.0 * a, 0.0, a)

    @classmethod
    def sigma4_family(cls, a1: float, a2: float) -> DeformPolynomial:
        """(-2 a1 - 8 a2) + a1 T + a2 T^2: keeps the +4 eigenspace invariant."""
        return cls(-2.0 * a1 - 8.0 * a2, a1, a2)

    def shifted(self, delta: float) -> DeformPolynomial:
        return DeformPolynomial(self.a0 + delta, self.a1, self.a2)

    def __call__(self, t: float) -> float:
        return self.a0 + self.a1 * t + self.a2 * t * t

    def of(self, t_op: np.ndarray) -> np.ndarray:
        """P applied to an endomorphism."""
        eye = np.eye(t_op.shape[0], dtype=complex)
        return self.a0 * eye + self.a1 * t_op + self.a2 * (t_op @ t_op)


def admissible(
    P: DeformPolynomial, mu0: float, reachable: Iterable[float], tol: float = TOL_ALG
) -> bool:
    """Whether the P(T)-deformed connection preserves the mu0-eigenspace.

    Requires (P(mu0) + P(mu)) (mu - mu0) = 0 for every reachable mu.
    """
    p0 = P(mu0)
    for mu in reachable:
        pm = P(mu)
        lhs = (p0 + pm) * (mu - mu0)
        scale = (1.0 + abs(p0) + abs(pm)) * max(1.0, abs(mu - mu0))
        if abs(lhs) > tol * scale:
            return False
    return True


def scalar_action(P: DeformPolynomial, mu0: float) -> float:
    """The scalar by which P(T) acts on the mu0-eigenspace."""
    return P(mu0)


def anticommutator_energy(S: np.ndarray, rep: SpinorRep, psi: np.ndarray) -> float:
    """sum_i |(gamma_i S + S gamma_i) psi|^2 / |psi|^2."""
    psi = np.asarray(psi, dtype=complex)
    norm_sq = float(np.vdot(psi, psi).real)
    if norm_sq <= 0.0:
        raise ValueError("spinor must be nonzero")
    total = 0.0
    for g in rep.gammas:
        v = (g @ S + S @ g) @ psi
        total += float(np.vdot(v, v).real)
    return total / norm_sq


def symmetrized_product(S: np.ndarray, t_op: np.ndarray) -> np.ndarray:
    """(T S + S T) / 2."""
    if S.shape != t_op.shape:
        raise ValueError(f"dimension mismatch: {S.shape} vs {t_op.shape}")
    return 0.5 * (t_op @ S + S @ t_op)


def anticommutator_skewness(
    S: np.ndarray, gamma: np.ndarray, phi: np.ndarray, psi: np.ndarray
) -> complex:
    """<(X S + S X) phi, psi> + <phi, (X S + S X) psi>; vanishes for symmetric S."""
    A = gamma @ S + S @ gamma
    return complex(np.vdot(A @ phi, psi) + np.vdot(phi, A @ psi))


def eigenspace_spinor(projector: np.ndarray) -> np.ndarray:
    """A fixed spinor in the range of a projector: its column of largest norm."""
    norms = np.linalg.norm(projector, axis=0)
    j = int(np.argmax(norms))
    if norms[j] <= 1e-6:
        raise ValueError("projector is (numerically) zero")
    return projector[:, j]


# closed forms for the anticommutator sum in the cases worked out by hand


def dim4_energy_closed_form(a0: float, a1: float, t_norm: float, sign: int) -> float:
    """n = 4, S = a0 + a1 T, psi in the (sign * |T|)-eigenspace."""
    return 4.0 * (3.0 * (a0 + sign * a1 * t_norm) ** 2 + a0**2)


def sigma0_energy_closed_form(a: float) -> float:
    """Sasakian n = 5, S = a (T^2 - 8), psi in the kernel of T.

    Only gamma_5 preserves the kernel and there (e_5 S + S e_5) = -16 a e_5,
    so the sum is 16^2 a^2; the resulting estimate 16 a y - 64 a^2 + ... relies
    on exactly this value.
    """
    return 16.0**2 * a**2


def sigma4_energy_closed_form(a1: float, a2: float) -> float:
    """Sasakian n = 5, S = (-2 a1 - 8 a2) + a1 T + a2 T^2, psi with T psi = 4 psi."""
    return 16.0 * (a1 + 4.0 * a2) ** 2
