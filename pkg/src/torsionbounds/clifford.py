"""Real Clifford algebra Cl(n) with e_i e_j + e_j e_i = -2 delta_ij, and its
complex spinor representation.

Elements are stored as dense coefficient vectors of length 2**n.  The blade
e_I for I = {i_1 < ... < i_k} sits at position ``sum(1 << (i - 1) for i in I)``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from itertools import combinations
from typing import Iterable, Mapping

import numpy as np

MIN_DIM = 3
MAX_DIM = 8

#: relative tolerance for every exact-algebra identity
TOL_ALG = 1e-10


class IdentityViolation(ArithmeticError):
    """An algebraic identity that must hold exactly failed beyond tolerance."""


def _check_dim(n: int) -> None:
    if not MIN_DIM <= n <= MAX_DIM:
        raise ValueError(f"dimension must be in [{MIN_DIM}, {MAX_DIM}], got {n}")


def _mask(indices: Iterable[int], n: int) -> int:
    m = 0
    for i in indices:
        if not 1 <= i <= n:
            raise ValueError(f"index {i} outside 1..{n}")
        m |= 1 << (i - 1)
    return m


def _indices(mask: int) -> tuple[int, ...]:
    out = []
    i = 1
    while mask:
        if mask & 1:
            out.append(i)
        mask >>= 1
        i += 1
    return tuple(out)


def blade_product(I: Iterable[int], J: Iterable[int], n: int) -> tuple[int, tuple[int, ...]]:
    """Product of basis blades, ``e_I * e_J = sign * e_K``.

    K is the symmetric difference of I and J.  The sign collects one factor
    -1 per transposition needed to sort the concatenated word and one per
    index common to both blades (e_i e_i = -1).
    """
    I = tuple(sorted(set(I)))
    J = tuple(sorted(set(J)))
    _mask(I, n)
    _mask(J, n)
    swaps = sum(1 for j in J for i in I if i > j)
    common = len(set(I) & set(J))
    sign = -1 if (swaps + common) % 2 else 1
    return sign, tuple(sorted(set(I) ^ set(J)))


@lru_cache(maxsize=None)
def _product_tables(n: int) -> tuple[np.ndarray, np.ndarray]:
    size = 1 << n
    signs = np.empty((size, size), dtype=np.float64)
    targets = np.empty((size, size), dtype=np.intp)
    blades = [_indices(m) for m in range(size)]
    for a, I in enumerate(blades):
        for b, J in enumerate(blades):
            s, K = blade_product(I, J, n)
            signs[a, b] = s
            targets[a, b] = _mask(K, n)
    signs.flags.writeable = False
    targets.flags.writeable = False
    return signs, targets


@lru_cache(maxsize=None)
def _grades(n: int) -> np.ndarray:
    g = np.array([bin(m).count("1") for m in range(1 << n)])
    g.flags.writeable = False
    return g


def clear_caches() -> None:
    """Drop the cached multiplication tables and representations."""
    _product_tables.cache_clear()
    build_spinor_rep.cache_clear()


@dataclass(frozen=True, eq=False)
class CliffordElement:
    n: int
    coeffs: np.ndarray

    def __post_init__(self):
        _check_dim(self.n)
        c = np.array(self.coeffs, dtype=np.float64)
        if c.shape != (1 << self.n,):
            raise ValueError(f"expected {1 << self.n} coefficients, got shape {c.shape}")
        c.flags.writeable = False
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def zero(cls, n: int) -> CliffordElement:
        return cls(n, np.zeros(1 << n))

    @classmethod
    def scalar(cls, n: int, value: float = 1.0) -> CliffordElement:
        c = np.zeros(1 << n)
        c[0] = value
        return cls(n, c)

    @classmethod
    def blade(cls, n: int, indices: Iterable[int], coef: float = 1.0) -> CliffordElement:
        """``coef * e_{i_1} ... e_{i_k}`` for indices in any order (reordered with sign)."""
        idx = list(indices)
        if len(set(idx)) != len(idx):
            # repeated factors: multiply out
            out = cls.scalar(n, coef)
            for i in idx:
                out = out * cls.blade(n, [i])
            return out
        perm_sign = 1
        for a in range(len(idx)):
            for b in range(a + 1, len(idx)):
                if idx[a] > idx[b]:
                    perm_sign = -perm_sign
        c = np.zeros(1 << n)
        c[_mask(idx, n)] = perm_sign * coef
        return cls(n, c)

    @classmethod
    def from_dict(cls, n: int, terms: Mapping[tuple[int, ...], float]) -> CliffordElement:
        out = cls.zero(n)
        for idx, coef in terms.items():
            out = out + cls.blade(n, idx, coef)
        return out

    def __getitem__(self, indices: Iterable[int]) -> float:
        return float(self.coeffs[_mask(tuple(sorted(indices)), self.n)])

    def to_dict(self, tol: float = 0.0) -> dict[tuple[int, ...], float]:
        return {_indices(m): float(v) for m, v in enumerate(self.coeffs) if abs(v) > tol}

    def _same_dim(self, other: CliffordElement) -> None:
        if other.n != self.n:
            raise ValueError(f"dimension mismatch: {self.n} vs {other.n}")

    def __add__(self, other: CliffordElement) -> CliffordElement:
        self._same_dim(other)
        return CliffordElement(self.n, self.coeffs + other.coeffs)

    def __sub__(self, other: CliffordElement) -> CliffordElement:
        self._same_dim(other)
        return CliffordElement(self.n, self.coeffs - other.coeffs)

    def __neg__(self) -> CliffordElement:
        return CliffordElement(self.n, -self.coeffs)

    def __mul__(self, other):
        if isinstance(other, CliffordElement):
            return clifford_multiply(self, other)
        return CliffordElement(self.n, self.coeffs * float(other))

    def __rmul__(self, other):
        return CliffordElement(self.n, self.coeffs * float(other))

    def grade(self, k: int) -> CliffordElement:
        return grade_project(self, k)

    def max_abs(self) -> float:
        return float(np.max(np.abs(self.coeffs)))

    def allclose(self, other: CliffordElement, tol: float = TOL_ALG) -> bool:
        self._same_dim(other)
        scale = max(1.0, self.max_abs(), other.max_abs())
        return bool(np.max(np.abs(self.coeffs - other.coeffs)) <= tol * scale)

    def __repr__(self) -> str:
        terms = self.to_dict()
        if not terms:
            return f"CliffordElement(n={self.n}, 0)"
        body = " + ".join(
            f"{v:g}*e{''.join(map(str, k))}" if k else f"{v:g}" for k, v in terms.items()
        )
        return f"CliffordElement(n={self.n}, {body})"


def clifford_multiply(x: CliffordElement, y: CliffordElement) -> CliffordElement:
    if x.n != y.n:
        raise ValueError(f"dimension mismatch: {x.n} vs {y.n}")
    signs, targets = _product_tables(x.n)
    weights = signs * np.outer(x.coeffs, y.coeffs)
    out = np.bincount(targets.ravel(), weights=weights.ravel(), minlength=1 << x.n)
    return CliffordElement(x.n, out)


def grade_project(x: CliffordElement, k: int) -> CliffordElement:
    if not 0 <= k <= x.n:
        raise ValueError(f"grade {k} outside 0..{x.n}")
    return CliffordElement(x.n, np.where(_grades(x.n) == k, x.coeffs, 0.0))


def random_element(n: int, rng: np.random.Generator, grade: int | None = None) -> CliffordElement:
    c = rng.standard_normal(1 << n)
    if grade is not None:
        c = np.where(_grades(n) == grade, c, 0.0)
    return CliffordElement(n, c)


_PAULI = (
    np.array([[0, 1], [1, 0]], dtype=complex),
    np.array([[0, -1j], [1j, 0]], dtype=complex),
    np.array([[1, 0], [0, -1]], dtype=complex),
)


def _kron_all(factors: list[np.ndarray]) -> np.ndarray:
    out = np.eye(1, dtype=complex)
    for f in factors:
        out = np.kron(out, f)
    return out


@dataclass(frozen=True, eq=False)
class SpinorRep:
    """Gamma operators realizing Cl(n) on C^(2^(n//2)).

    Every gamma is skew-Hermitian and squares to -Id.  For odd n the product
    gamma_1 ... gamma_n acts as ``volume_scalar`` (otherwise ``None``).
    """

    n: int
    dim_spinor: int
    gammas: np.ndarray
    volume_scalar: complex | None = None
    branch: int = field(default=1)

    @cached_property
    def blade_operators(self) -> np.ndarray:
        """Stack of 2**n operators, entry m representing the blade with mask m."""
        d = self.dim_spinor
        ops = np.empty((1 << self.n, d, d), dtype=complex)
        ops[0] = np.eye(d)
        for m in range(1, 1 << self.n):
            low = m & -m
            i = low.bit_length() - 1
            # e_I = e_i * e_{I \ i} with i the smallest index
            ops[m] = self.gammas[i] @ ops[m ^ low]
        ops.flags.writeable = False
        return ops

    def identity(self) -> np.ndarray:
        return np.eye(self.dim_spinor, dtype=complex)


@lru_cache(maxsize=None)
def build_spinor_rep(n: int, branch: int = 1) -> SpinorRep:
    """Deterministic tensor-product construction of the spinor representation.

    Hermitian generators Gamma squaring to +1 are built from Pauli matrices
    (sigma_3 strings followed by sigma_1 or sigma_2); gamma_j = i Gamma_j.  For
    odd n the last generator is the normalized product of the others.
    ``branch=-1`` returns the second irreducible representation (all gammas
    negated), which only differs for odd n.
    """
    _check_dim(n)
    if branch not in (1, -1):
        raise ValueError("branch must be +1 or -1")
    m = n // 2
    eye2 = np.eye(2, dtype=complex)
    hermitian = []
    for k in range(m):
        for p in (_PAULI[0], _PAULI[1]):
            hermitian.append(_kron_all([_PAULI[2]] * k + [p] + [eye2] * (m - k - 1)))
    if n % 2:
        hermitian.append(_kron_all([_PAULI[2]] * m))
    gammas = branch * 1j * np.array(hermitian)
    gammas.flags.writeable = False

    volume = None
    if n % 2:
        prod = np.eye(1 << m, dtype=complex)
        for g in gammas:
            prod = prod @ g
        volume = complex(prod[0, 0])
        if not np.allclose(prod, volume * np.eye(1 << m), atol=TOL_ALG):
            raise IdentityViolation("volume element is not scalar")
    return SpinorRep(n=n, dim_spinor=1 << m, gammas=gammas, volume_scalar=volume, branch=branch)


def represent(x: CliffordElement, rep: SpinorRep) -> np.ndarray:
    """Spinor endomorphism of a Clifford element (an algebra homomorphism)."""
    if x.n != rep.n:
        raise ValueError(f"dimension mismatch: element n={x.n}, representation n={rep.n}")
    return np.tensordot(x.coeffs.astype(complex), rep.blade_operators, axes=1)


def blade_masks(n: int, k: int) -> list[tuple[int, ...]]:
    """All strictly increasing k-tuples from 1..n."""
    return list(combinations(range(1, n + 1), k))
