"""Alternating forms on R^n and the algebraic identities of torsion 3-forms.

A form is a mapping from strictly increasing index tuples to coefficients.
The blade e_{i1} ^ ... ^ e_{ik} is identified with the Clifford product
e_{i1} ... e_{ik} (coefficient 1, no combinatorial factor).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import combinations, permutations
from typing import Mapping

import numpy as np

from .clifford import (
    TOL_ALG,
    CliffordElement,
    IdentityViolation,
    SpinorRep,
    _check_dim,
    clifford_multiply,
    grade_project,
    represent,
)


def _perm_sign(seq) -> int:
    sign = 1
    for a in range(len(seq)):
        for b in range(a + 1, len(seq)):
            if seq[a] > seq[b]:
                sign = -sign
    return sign


@dataclass(frozen=True, eq=False)
class AltForm:
    n: int
    k: int
    coeffs: Mapping[tuple[int, ...], float]

    def __post_init__(self):
        _check_dim(self.n)
        if not 0 <= self.k <= self.n:
            raise ValueError(f"degree {self.k} outside 0..{self.n}")
        clean = {}
        for idx, v in self.coeffs.items():
            idx = tuple(idx)
            if len(idx) != self.k:
                raise ValueError(f"multi-index {idx} does not have degree {self.k}")
            if any(a >= b for a, b in zip(idx, idx[1:])):
                raise ValueError(f"multi-index {idx} is not strictly increasing")
            if idx and not (1 <= idx[0] and idx[-1] <= self.n):
                raise ValueError(f"multi-index {idx} outside 1..{self.n}")
            if v != 0:
                clean[idx] = float(v)
        object.__setattr__(self, "coeffs", clean)

    @classmethod
    def from_terms(cls, n: int, terms: Mapping[tuple[int, ...], float]) -> AltForm:
        """Build a form from possibly unordered multi-indices (sorted with sign)."""
        degrees = {len(t) for t in terms}
        if len(degrees) > 1:
            raise ValueError("terms of mixed degree")
        k = degrees.pop() if degrees else 0
        out: dict[tuple[int, ...], float] = {}
        for idx, v in terms.items():
            if len(set(idx)) != len(idx):
                continue
            key = tuple(sorted(idx))
            out[key] = out.get(key, 0.0) + _perm_sign(idx) * v
        return cls(n, k, out)

    @classmethod
    def zero(cls, n: int, k: int) -> AltForm:
        return cls(n, k, {})

    def __getitem__(self, idx: tuple[int, ...]) -> float:
        return self.coeffs.get(tuple(idx), 0.0)

    def __add__(self, other: AltForm) -> AltForm:
        if (other.n, other.k) != (self.n, self.k):
            raise ValueError("forms of different dimension or degree")
        out = dict(self.coeffs)
        for idx, v in other.coeffs.items():
            out[idx] = out.get(idx, 0.0) + v
        return AltForm(self.n, self.k, out)

    def __mul__(self, scalar: float) -> AltForm:
        return AltForm(self.n, self.k, {i: scalar * v for i, v in self.coeffs.items()})

    __rmul__ = __mul__

    def __neg__(self) -> AltForm:
        return self * -1.0

    def __sub__(self, other: AltForm) -> AltForm:
        return self + (-other)

    def max_abs(self) -> float:
        return max((abs(v) for v in self.coeffs.values()), default=0.0)

    def allclose(self, other: AltForm, tol: float = TOL_ALG) -> bool:
        scale = max(1.0, self.max_abs(), other.max_abs())
        return (self - other).max_abs() <= tol * scale

    def to_clifford(self) -> CliffordElement:
        c = np.zeros(1 << self.n)
        for idx, v in self.coeffs.items():
            c[sum(1 << (i - 1) for i in idx)] = v
        return CliffordElement(self.n, c)

    def __repr__(self) -> str:
        body = " + ".join(f"{v:g}*e{''.join(map(str, i))}" for i, v in self.coeffs.items())
        return f"AltForm(n={self.n}, k={self.k}, {body or '0'})"


def from_clifford(x: CliffordElement, k: int) -> AltForm:
    """Degree-k part of a Clifford element read back as a k-form."""
    return AltForm(x.n, k, {i: v for i, v in grade_project(x, k).to_dict().items()})


def random_form(n: int, k: int, rng: np.random.Generator) -> AltForm:
    idx = list(combinations(range(1, n + 1), k))
    vals = rng.standard_normal(len(idx))
    return AltForm(n, k, dict(zip(idx, vals)))


def contract(form: AltForm, i: int) -> AltForm:
    """Interior product e_i -| form."""
    if form.k < 1:
        raise ValueError("cannot contract a 0-form")
    if not 1 <= i <= form.n:
        raise ValueError(f"index {i} outside 1..{form.n}")
    out = {}
    for idx, v in form.coeffs.items():
        if i in idx:
            p = idx.index(i)
            out[idx[:p] + idx[p + 1:]] = (-1) ** p * v
    return AltForm(form.n, form.k - 1, out)


def wedge(alpha: AltForm, beta: AltForm) -> AltForm:
    if alpha.n != beta.n:
        raise ValueError("forms on different dimensions")
    k = alpha.k + beta.k
    if k > alpha.n:
        raise ValueError(f"degree {k} exceeds dimension {alpha.n}")
    out: dict[tuple[int, ...], float] = {}
    for I, a in alpha.coeffs.items():
        for J, b in beta.coeffs.items():
            if set(I) & set(J):
                continue
            sign = -1 if sum(1 for x in I for y in J if x > y) % 2 else 1
            K = tuple(sorted(I + J))
            out[K] = out.get(K, 0.0) + sign * a * b
    return AltForm(alpha.n, k, out)


def _require_three_form(T: AltForm) -> None:
    if T.k != 3:
        raise ValueError(f"expected a 3-form, got degree {T.k}")


@lru_cache(maxsize=None)
def _signed_perms(k: int) -> tuple[np.ndarray, np.ndarray]:
    perms = list(permutations(range(k)))
    return np.array(perms, dtype=np.intp), np.array([_perm_sign(p) for p in perms], dtype=float)


def _dense(T: AltForm) -> np.ndarray:
    """Fully antisymmetric coefficient tensor of a form (0-based axes)."""
    full = np.zeros((T.n,) * T.k)
    if not T.coeffs:
        return full
    idx = np.array(list(T.coeffs), dtype=np.intp) - 1
    vals = np.array(list(T.coeffs.values()))
    perms, signs = _signed_perms(T.k)
    for p, sgn in zip(perms, signs):
        full[tuple(idx[:, p].T)] = sgn * vals
    return full


def sigma_t(T: AltForm) -> AltForm:
    """sigma_T = 1/2 sum_k (e_k -| T) ^ (e_k -| T).

    Evaluated on increasing quadruples as
    sum_m T_mij T_mkl - T_mik T_mjl + T_mil T_mjk.
    """
    _require_three_form(T)
    if T.n < 4:
        raise ValueError("there are no 4-forms in dimension 3")
    t = _dense(T)
    full = (
        np.einsum("mij,mkl->ijkl", t, t)
        - np.einsum("mik,mjl->ijkl", t, t)
        + np.einsum("mil,mjk->ijkl", t, t)
    )
    quads = combinations(range(T.n), 4)
    return AltForm(T.n, 4, {tuple(i + 1 for i in q): full[q] for q in quads})


def torsion_norm_sq(T: AltForm) -> float:
    """||T||^2 as the sum of squared coefficients over increasing triples."""
    _require_three_form(T)
    return float(sum(v * v for v in T.coeffs.values()))


def torsion_norm_sq_ordered(T: AltForm) -> float:
    """Cross-check: (1/6) sum_{i,j} ||T(e_i, e_j)||^2 over ordered index pairs."""
    _require_three_form(T)
    return float(np.sum(_dense(T) ** 2) / 6.0)


@dataclass(frozen=True)
class TorsionSquareParts:
    degree0: float
    degree4: AltForm | None
    residual_norm: float


def square_decompose(T: AltForm, check: bool = True) -> TorsionSquareParts:
    """Grade the Clifford square of a 3-form.

    With ``check`` the decomposition identities are enforced: the degree-0 part
    equals ||T||^2, the degree-4 part equals -2 sigma_T, and every other grade
    vanishes.  For n = 3, 4 the square must be the scalar ||T||^2.
    """
    _require_three_form(T)
    x = T.to_clifford()
    sq = clifford_multiply(x, x)
    degree0 = float(sq.coeffs[0])
    degree4 = from_clifford(sq, 4) if T.n >= 4 else None
    residual = 0.0
    for k in range(T.n + 1):
        if k in (0, 4):
            continue
        residual = max(residual, grade_project(sq, k).max_abs())
    parts = TorsionSquareParts(degree0, degree4, residual)
    if check:
        _check_square(T, parts)
    return parts


def _check_square(T: AltForm, parts: TorsionSquareParts) -> None:
    norm_sq = torsion_norm_sq(T)
    scale = max(1.0, norm_sq)
    if parts.residual_norm > TOL_ALG * scale:
        raise IdentityViolation(f"odd-grade or grade-2/6 residual {parts.residual_norm:.3e}")
    if abs(parts.degree0 - norm_sq) > TOL_ALG * scale:
        raise IdentityViolation(f"scalar part {parts.degree0} != ||T||^2 = {norm_sq}")
    if parts.degree4 is not None:
        expected = -2.0 * sigma_t(T) if T.n >= 5 else AltForm.zero(T.n, 4)
        if (parts.degree4 - expected).max_abs() > TOL_ALG * scale:
            raise IdentityViolation("degree-4 part differs from -2 sigma_T")


def parallel_dt_endomorphism(T: AltForm, rep: SpinorRep, check: bool = True) -> np.ndarray:
    """Spinor action of dT = 2 sigma_T for parallel torsion.

    With ``check`` the result is compared against ||T||^2 Id - T^2.
    """
    _require_three_form(T)
    if rep.n != T.n:
        raise ValueError(f"dimension mismatch: form n={T.n}, representation n={rep.n}")
    if T.n >= 4:
        dt = represent((2.0 * sigma_t(T)).to_clifford(), rep)
    else:
        dt = np.zeros((rep.dim_spinor, rep.dim_spinor), dtype=complex)
    if check:
        t_op = represent(T.to_clifford(), rep)
        norm_sq = torsion_norm_sq(T)
        expected = norm_sq * rep.identity() - t_op @ t_op
        err = float(np.max(np.abs(dt - expected)))
        if err > TOL_ALG * max(1.0, norm_sq):
            raise IdentityViolation(f"2 sigma_T != ||T||^2 - T^2 (max deviation {err:.3e})")
    return dt
