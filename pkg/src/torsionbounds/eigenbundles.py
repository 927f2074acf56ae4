"""Splitting of the spinor module into eigenspaces of a torsion 3-form."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .clifford import TOL_ALG, IdentityViolation, SpinorRep, build_spinor_rep, represent
from .forms import AltForm, torsion_norm_sq, wedge

#: eigenvalues closer than this (relative to the spectral scale) are merged
TOL_CLUSTER = 1e-8


@dataclass(frozen=True, eq=False)
class Eigenbundle:
    mu: float
    projector: np.ndarray
    multiplicity: int


@dataclass(frozen=True, eq=False)
class EigenbundleSplitting:
    """Eigenvalues (descending) with orthogonal projectors onto their eigenspaces."""

    entries: tuple[Eigenbundle, ...]

    @property
    def eigenvalues(self) -> list[float]:
        return [e.mu for e in self.entries]

    @property
    def multiplicities(self) -> list[int]:
        return [e.multiplicity for e in self.entries]

    @property
    def dim(self) -> int:
        return sum(self.multiplicities)

    def find(self, mu: float, tol: float = TOL_CLUSTER) -> Eigenbundle:
        scale = max(1.0, max(abs(m) for m in self.eigenvalues))
        for e in self.entries:
            if abs(e.mu - mu) <= tol * scale:
                return e
        raise KeyError(f"{mu} is not an eigenvalue of the splitting {self.eigenvalues}")

    def projector(self, mu: float) -> np.ndarray:
        return self.find(mu).projector

    def reconstruct(self) -> np.ndarray:
        return sum(e.mu * e.projector for e in self.entries)


def split_endomorphism(op: np.ndarray, tol: float = TOL_CLUSTER) -> EigenbundleSplitting:
    """Eigen-splitting of a Hermitian operator with clustering of repeated eigenvalues."""
    op = np.asarray(op, dtype=complex)
    scale = max(1.0, float(np.max(np.abs(op))))
    if np.max(np.abs(op - op.conj().T)) > TOL_ALG * scale:
        raise IdentityViolation("operator is not Hermitian")
    vals, vecs = np.linalg.eigh(op)
    spread = max(1.0, float(np.max(np.abs(vals))))
    groups: list[list[int]] = [[0]]
    for i in range(1, len(vals)):
        if vals[i] - vals[groups[-1][-1]] <= tol * spread:
            groups[-1].append(i)
        else:
            groups.append([i])
    entries = []
    for g in reversed(groups):
        v = vecs[:, g]
        entries.append(Eigenbundle(float(np.mean(vals[g])), v @ v.conj().T, len(g)))
    return EigenbundleSplitting(tuple(entries))


def split_spinors(T: AltForm, rep: SpinorRep, tol: float = TOL_CLUSTER) -> EigenbundleSplitting:
    """Split the spinor module under the action of the 3-form T."""
    if T.k != 3:
        raise ValueError(f"expected a 3-form, got degree {T.k}")
    return split_endomorphism(represent(T.to_clifford(), rep), tol)


def reachable_eigenvalues(
    mu0: float, splitting: EigenbundleSplitting, rep: SpinorRep, tol: float = TOL_CLUSTER
) -> frozenset[float]:
    """Eigenvalues mu whose eigenspace meets some gamma_i applied to the mu0-eigenspace."""
    p0 = splitting.projector(mu0)
    found = set()
    for e in splitting.entries:
        if any(np.linalg.norm(e.projector @ g @ p0) > tol for g in rep.gammas):
            found.add(e.mu)
    return frozenset(found)


@dataclass(frozen=True, eq=False)
class SasakiFrameData:
    T: AltForm
    eta_index: int
    norm_sq: float


def sasaki_torsion(rep: SpinorRep | None = None) -> SasakiFrameData:
    """Torsion eta ^ d eta of a 5-dimensional Sasakian structure in an adapted frame.

    eta = e5 and d eta = 2 (e12 + e34), so T = 2 e125 + 2 e345.  Raises
    ``IdentityViolation`` unless T^3 = 16 T and the spectrum is {4, 0, 0, -4}.
    """
    rep = rep or build_spinor_rep(5)
    eta = AltForm(5, 1, {(5,): 1.0})
    d_eta = AltForm(5, 2, {(1, 2): 2.0, (3, 4): 2.0})
    T = wedge(eta, d_eta)
    t_op = represent(T.to_clifford(), rep)
    if np.max(np.abs(t_op @ t_op @ t_op - 16.0 * t_op)) > TOL_ALG * 64:
        raise IdentityViolation("T^3 != 16 T")
    spectrum = np.sort(np.linalg.eigvalsh(t_op))
    if np.max(np.abs(spectrum - np.array([-4.0, 0.0, 0.0, 4.0]))) > TOL_ALG * 4:
        raise IdentityViolation(f"unexpected spectrum {spectrum}")
    return SasakiFrameData(T=T, eta_index=5, norm_sq=torsion_norm_sq(T))
