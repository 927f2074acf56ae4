"""Eigenvalue estimates for Dirac operators with parallel skew-symmetric torsion."""

from .bounds import NoBound, dim4_bound, dim5_bound
from .clifford import CliffordElement, build_spinor_rep, clifford_multiply, represent
from .forms import AltForm, sigma_t, square_decompose, torsion_norm_sq
from .hopf import hopf_curves
from .verify import run_verify

__all__ = [
    "AltForm",
    "CliffordElement",
    "NoBound",
    "build_spinor_rep",
    "clifford_multiply",
    "dim4_bound",
    "dim5_bound",
    "hopf_curves",
    "represent",
    "run_verify",
    "sigma_t",
    "square_decompose",
    "torsion_norm_sq",
]
