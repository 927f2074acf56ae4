"""Randomized and exact checks of every algebraic identity and bound, collected
into a JSON-serializable report."""

from __future__ import annotations

import json
import math
from dataclasses import asdict, dataclass, field

import numpy as np

from . import bounds as B
from . import hopf as H
from .clifford import (
    TOL_ALG,
    build_spinor_rep,
    clifford_multiply,
    random_element,
    represent,
)
from .deformation import (
    DeformPolynomial,
    admissible,
    anticommutator_energy,
    anticommutator_skewness,
    dim4_energy_closed_form,
    eigenspace_spinor,
    sigma0_energy_closed_form,
    sigma4_energy_closed_form,
)
from .eigenbundles import reachable_eigenvalues, sasaki_torsion, split_spinors
from .forms import (
    AltForm,
    parallel_dt_endomorphism,
    random_form,
    sigma_t,
    square_decompose,
    torsion_norm_sq,
)
from .oracles import grid_golden_maximize_2d, sampled_curvature_min, spheroid_area_quadrature


@dataclass
class CheckResult:
    name: str
    anchor: str
    passed: bool
    max_residual: float
    samples: int


@dataclass
class VerificationReport:
    seed: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, name: str, anchor: str, residual: float, tol: float, samples: int) -> None:
        residual = float(residual)
        self.checks.append(CheckResult(name, anchor, bool(residual <= tol), residual, samples))

    def to_json(self) -> str:
        payload = {
            "passed": self.passed,
            "seed": self.seed,
            "checks": [asdict(c) for c in self.checks],
        }
        return json.dumps(payload, indent=2) + "\n"


def _max_rel(a, b) -> float:
    a = np.asarray(a)
    b = np.asarray(b)
    return float(np.max(np.abs(a - b)) / max(1.0, float(np.max(np.abs(b)))))


def _check_clifford(report, rng, dims, samples, tol):
    for n in dims:
        rep = build_spinor_rep(n)
        worst = 0.0
        for _ in range(samples):
            x = random_element(n, rng)
            y = random_element(n, rng)
            lhs = represent(clifford_multiply(x, y), rep)
            worst = max(worst, _max_rel(lhs, represent(x, rep) @ represent(y, rep)))
        report.add(f"clifford_homomorphism[n={n}]", "rho(xy) = rho(x) rho(y)", worst, tol, samples)

        eye = rep.identity()
        worst = 0.0
        for i, gi in enumerate(rep.gammas):
            worst = max(worst, _max_rel(gi.conj().T, -gi))
            for j, gj in enumerate(rep.gammas):
                worst = max(worst, _max_rel(gi @ gj + gj @ gi, -2.0 * (i == j) * eye))
        report.add(f"gamma_relations[n={n}]", "g_i g_j + g_j g_i = -2 delta_ij", worst, tol, n * n)


def _check_three_forms(report, rng, dims, samples, tol):
    for n in dims:
        rep = build_spinor_rep(n)
        worst_sq = 0.0
        worst_dt = 0.0
        for _ in range(samples):
            T = random_form(n, 3, rng)
            norm_sq = torsion_norm_sq(T)
            scale = max(1.0, norm_sq)
            parts = square_decompose(T, check=False)
            r = max(parts.residual_norm, abs(parts.degree0 - norm_sq)) / scale
            if n >= 5:
                r = max(r, (parts.degree4 + 2.0 * sigma_t(T)).max_abs() / scale)
            else:
                t_op = represent(T.to_clifford(), rep)
                r = max(r, float(np.max(np.abs(t_op @ t_op - norm_sq * rep.identity()))) / scale)
                if parts.degree4 is not None:
                    r = max(r, parts.degree4.max_abs() / scale)
            worst_sq = max(worst_sq, r)

            t_op = represent(T.to_clifford(), rep)
            dt = parallel_dt_endomorphism(T, rep, check=False)
            expected = norm_sq * rep.identity() - t_op @ t_op
            worst_dt = max(worst_dt, float(np.max(np.abs(dt - expected))) / scale)
        report.add(
            f"three_form_square[n={n}]", "T^2 = |T|^2 - 2 sigma_T, no degree 2 or 6", worst_sq, tol, samples
        )
        report.add(f"parallel_torsion_dT[n={n}]", "2 sigma_T = |T|^2 - T^2", worst_dt, tol, samples)


def _check_sasaki(report, rng, samples, tol):
    rep = build_spinor_rep(5)
    data = sasaki_torsion(rep)
    t_op = represent(data.T.to_clifford(), rep)
    spec = np.sort(np.linalg.eigvalsh(t_op))
    r = max(
        float(np.max(np.abs(spec - np.array([-4.0, 0.0, 0.0, 4.0])))),
        float(np.max(np.abs(t_op @ t_op @ t_op - 16 * t_op))) / 64,
        abs(data.norm_sq - 8.0),
    )
    split = split_spinors(data.T, rep)
    reach = sorted(reachable_eigenvalues(4.0, split, rep))
    if len(reach) != 2:
        r = math.inf
    else:
        r = max(r, abs(reach[0]) + abs(reach[1] - 4.0))
    report.add("sasaki_torsion", "spectrum {4,0,0,-4}, T^3 = 16 T, reach(4) = {0,4}", r, tol, 1)

    # anticommutator sums against their closed forms
    worst = 0.0
    rep4 = build_spinor_rep(4)
    for _ in range(samples):
        c = rng.uniform(0.2, 3.0) * rng.choice([-1.0, 1.0])
        T4 = AltForm(4, 3, {(1, 2, 3): c})
        t4 = represent(T4.to_clifford(), rep4)
        s4 = split_spinors(T4, rep4)
        a0, a1 = rng.standard_normal(2)
        S = DeformPolynomial(a0, a1).of(t4)
        for sign in (1, -1):
            psi = eigenspace_spinor(s4.projector(sign * abs(c)))
            got = anticommutator_energy(S, rep4, psi)
            want = dim4_energy_closed_form(a0, a1, abs(c), sign)
            worst = max(worst, abs(got - want) / max(1.0, abs(want)))

        a = rng.standard_normal()
        S = DeformPolynomial.sigma0_family(a).of(t_op)
        want = sigma0_energy_closed_form(a)
        for col in split.projector(0.0).T:
            if np.linalg.norm(col) > 1e-6:
                got = anticommutator_energy(S, rep, col)
                worst = max(worst, abs(got - want) / max(1.0, abs(want)))

        a1, a2 = rng.standard_normal(2)
        S = DeformPolynomial.sigma4_family(a1, a2).of(t_op)
        got = anticommutator_energy(S, rep, eigenspace_spinor(split.projector(4.0)))
        want = sigma4_energy_closed_form(a1, a2)
        worst = max(worst, abs(got - want) / max(1.0, abs(want)))
    report.add("anticommutator_closed_forms", "sum_i |(e_i S + S e_i) psi|^2", worst, 1e-9, 3 * samples)

    worst = 0.0
    for _ in range(samples):
        m = rng.standard_normal((4, 4)) + 1j * rng.standard_normal((4, 4))
        S = m + m.conj().T
        phi = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        psi = rng.standard_normal(4) + 1j * rng.standard_normal(4)
        for g in rep.gammas:
            worst = max(worst, abs(anticommutator_skewness(S, g, phi, psi)) / max(1.0, np.abs(S).max()))
    report.add("anticommutator_skew", "<A phi, psi> + <phi, A psi> = 0", worst, tol, samples)

    ok = (
        admissible(DeformPolynomial.sigma0_family(0.7), 0.0, [-4.0, 0.0, 4.0])
        and admissible(DeformPolynomial.sigma4_family(0.3, -1.1), 4.0, [0.0, 4.0])
        and not admissible(DeformPolynomial.sigma0_family(0.7).shifted(1e-3), 0.0, [-4.0, 0.0, 4.0])
        and not admissible(DeformPolynomial.sigma4_family(0.3, -1.1).shifted(1e-3), 4.0, [0.0, 4.0])
    )
    report.add("admissible_polynomials", "(P(mu0) + P(mu)) (mu - mu0) = 0", 0.0 if ok else 1.0, 0.0, 4)


def _check_bounds(report, rng, optimizer_samples):
    worst = 0.0
    for _ in range(optimizer_samples):
        t = rng.uniform(0.5, 3.0)
        inp = B.BoundInputs(rng.uniform(0.0, 10.0), t * t)
        y = rng.uniform(-3.0, 3.0)
        sign = int(rng.choice([1, -1]))
        _, _, brute = grid_golden_maximize_2d(lambda a0, a1: B.dim4_rough(a0, a1, y, sign, inp))
        worst = max(worst, abs(brute - B.dim4_optimize(y, inp, sign)[2]))
    report.add("dim4_optimizer_vs_brute_force", "a0 = 0, a1 = -+(2y+|T|)/6|T|", worst, 1e-6, optimizer_samples)

    edge = B.BoundInputs.from_ratio(1.5)
    r = max(
        abs(B.dim4_s_deformed(edge) - 0.25),
        abs(B.dim4_universal(edge) - 0.25),
        abs(B.dim4_bound(B.BoundInputs.from_ratio(1 / 6))),
    )
    r = r if isinstance(B.dim4_bound(B.BoundInputs.from_ratio(0.1)), B.NoBound) else math.inf
    report.add("dim4_theorem_branches", "branches meet at c = 3/2; none below 1/6", r, 1e-12, 3)

    s = B.DIM5_BREAKPOINT
    r = max(B.DIM5_PIECES.jumps()[0], abs(B.dim5_bound(s) - (45 + 20 * math.sqrt(5)) / 4))
    r = max(r, abs(B.dim5_bound(28.0) - 4.0))
    grid = np.linspace(-4.0, 200.0, 20001)[1:]
    gap = min(B.dim5_bound(x) - B.dim5_universal(x) for x in grid)
    r = max(r, max(0.0, -gap - 1e-12))
    report.add("dim5_theorem", "continuity at 4(9+4 sqrt 5), dominates -3 + s/4", r, 1e-12, len(grid))


def _check_hopf(report, rng, samples, k):
    lim = H.hopf_limits(k)
    r = max(
        abs(lim["beta_univ"] - 19 / 128),
        abs(lim["beta_s"] - (93 / 256 - 3 * math.sqrt(21) / 64)),
        abs(lim["c"] - 14 / 9),
    )
    report.add("hopf_limits", "a -> 1+: 19/128, 93/256 - 3 sqrt21/64, 14/9", r, 1e-9, 2)

    ks = [kk for kk, _ in H.admissible_torsions(2.0)]
    root = H.beta_univ_root(k)
    ok = ks == [1, 2, 3] and 2.32 < root < 2.34
    report.add("hopf_admissible_and_root", "k in {1,2,3} at a = 2; beta_univ root", 0.0 if ok else 1.0, 0.0, 2)

    worst = 0.0
    for a in rng.uniform(0.2, 5.0, size=samples):
        worst = max(worst, abs(H.ellipsoid_volume(a) - spheroid_area_quadrature(a)))
        worst = max(worst, abs(H.gauss_curvature_min(a) - sampled_curvature_min(a)))
    report.add("ellipsoid_oracles", "area quadrature, fundamental-form curvature", worst, 1e-8, samples)


def run_verify(
    seed: int = 0,
    samples: int = 200,
    dims=range(3, 9),
    tol: float = TOL_ALG,
    k: int = H.DEFAULT_K,
    optimizer_samples: int = 20,
) -> VerificationReport:
    rng = np.random.default_rng(seed)
    report = VerificationReport(seed=seed)
    dims = list(dims)
    _check_clifford(report, rng, dims, samples, tol)
    _check_three_forms(report, rng, dims, samples, tol)
    _check_sasaki(report, rng, samples, tol)
    _check_bounds(report, rng, optimizer_samples)
    _check_hopf(report, rng, min(samples, 50), k)
    return report


__all__ = ["CheckResult", "VerificationReport", "run_verify"]
