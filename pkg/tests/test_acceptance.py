"""Acceptance criteria, one test each.  Every test prints a single
``PASS``/``FAIL`` line (outside pytest's capture) before asserting."""

import math

import numpy as np
import pytest

from torsionbounds import bounds as B
from torsionbounds import hopf as H
from torsionbounds.cli import main
from torsionbounds.clifford import TOL_ALG, build_spinor_rep, represent
from torsionbounds.deformation import DeformPolynomial, admissible, anticommutator_energy
from torsionbounds.eigenbundles import reachable_eigenvalues, sasaki_torsion, split_spinors
from torsionbounds.forms import (
    AltForm,
    parallel_dt_endomorphism,
    random_form,
    sigma_t,
    square_decompose,
    torsion_norm_sq,
)
from torsionbounds.oracles import grid_golden_maximize_2d, sampled_curvature_min, spheroid_area_quadrature

SEED = 20240601


@pytest.fixture
def verdict(capsys):
    def report(number: int, ok: bool, detail: str) -> None:
        with capsys.disabled():
            print(f"\n[criterion {number:2d}] {'PASS' if ok else 'FAIL'}  {detail}")
        assert ok, detail

    return report


def test_criterion_01_three_form_square(verdict):
    rng = np.random.default_rng(SEED)
    resid = rel0 = rel4 = low = 0.0
    for n in (5, 6, 7, 8):
        for _ in range(1000):
            T = random_form(n, 3, rng)
            parts = square_decompose(T, check=False)
            norm_sq = torsion_norm_sq(T)
            resid = max(resid, parts.residual_norm)
            rel0 = max(rel0, abs(parts.degree0 - norm_sq) / norm_sq)
            want = -2.0 * sigma_t(T)
            rel4 = max(rel4, (parts.degree4 - want).max_abs() / max(want.max_abs(), 1e-300))
    for n in (3, 4):
        rep = build_spinor_rep(n)
        for _ in range(1000):
            T = random_form(n, 3, rng)
            t_op = represent(T.to_clifford(), rep)
            low = max(low, float(np.max(np.abs(t_op @ t_op - torsion_norm_sq(T) * rep.identity()))))
    ok = resid < 1e-10 and rel0 < 1e-9 and rel4 < 1e-9 and low < 1e-10
    verdict(1, ok, f"grade 2/6 residual {resid:.1e}, rel deg0 {rel0:.1e}, rel deg4 {rel4:.1e}, n<=4 {low:.1e}")


def test_criterion_02_parallel_torsion_identity(verdict):
    rng = np.random.default_rng(SEED + 1)
    worst = 0.0
    for n in range(3, 9):
        rep = build_spinor_rep(n)
        for _ in range(1000):
            T = random_form(n, 3, rng)
            t_op = represent(T.to_clifford(), rep)
            dt = parallel_dt_endomorphism(T, rep, check=False)
            expected = torsion_norm_sq(T) * rep.identity() - t_op @ t_op
            worst = max(worst, float(np.max(np.abs(dt - expected))))
    verdict(2, worst < 1e-10, f"max |2 sigma_T - (|T|^2 - T^2)| = {worst:.1e} over 6000 forms")


def test_criterion_03_sasaki_algebra(verdict):
    rep = build_spinor_rep(5)
    data = sasaki_torsion(rep)
    T = AltForm(5, 3, {(1, 2, 5): 2.0, (3, 4, 5): 2.0})
    t_op = represent(T.to_clifford(), rep)
    spec = np.sort(np.linalg.eigvalsh(t_op))[::-1]
    spec_err = float(np.max(np.abs(spec - [4.0, 0.0, 0.0, -4.0])))
    cube_err = float(np.max(np.abs(t_op @ t_op @ t_op - 16 * t_op)))
    reach = reachable_eigenvalues(4.0, split_spinors(T, rep), rep)
    reach_ok = sorted(round(m, 9) + 0.0 for m in reach) == [0.0, 4.0]
    ok = (
        data.T.allclose(T)
        and spec_err < 1e-10
        and cube_err < 1e-10
        and torsion_norm_sq(T) == 8.0
        and reach_ok
    )
    verdict(3, ok, f"spectrum err {spec_err:.1e}, T^3-16T {cube_err:.1e}, |T|^2 = {torsion_norm_sq(T)}, reach(4) = {sorted(reach)}")


def test_criterion_04_anticommutator_closed_forms(verdict):
    """The three formulas exactly as stated, against direct operator computation."""
    rng = np.random.default_rng(SEED + 3)

    rep4 = build_spinor_rep(4)
    worst4 = 0.0
    for _ in range(500):
        t = rng.uniform(0.1, 3.0)
        a0, a1 = rng.uniform(-3, 3, 2)
        T = AltForm(4, 3, {(1, 2, 3): t})
        t_op = represent(T.to_clifford(), rep4)
        split = split_spinors(T, rep4)
        S = DeformPolynomial(a0, a1).of(t_op)
        for sign in (1, -1):
            psi = split.projector(sign * t)[:, np.argmax(np.linalg.norm(split.projector(sign * t), axis=0))]
            got = anticommutator_energy(S, rep4, psi)
            want = 4 * (3 * (a0 + sign * a1 * t) ** 2 + a0**2)
            worst4 = max(worst4, abs(got - want) / abs(want))

    rep5 = build_spinor_rep(5)
    T5 = sasaki_torsion(rep5).T
    t5 = represent(T5.to_clifford(), rep5)
    split5 = split_spinors(T5, rep5)
    kernel = split5.projector(0.0)
    psi0 = kernel[:, np.argmax(np.linalg.norm(kernel, axis=0))]
    top = split5.projector(4.0)
    psi4 = top[:, np.argmax(np.linalg.norm(top, axis=0))]
    worst0 = worst_4 = 0.0
    ratio = []
    for _ in range(500):
        a = rng.uniform(-3, 3)
        got = anticommutator_energy(DeformPolynomial.sigma0_family(a).of(t5), rep5, psi0)
        want = 512 * a**2
        worst0 = max(worst0, abs(got - want) / abs(want))
        ratio.append(got / want)

        a1, a2 = rng.uniform(-3, 3, 2)
        got = anticommutator_energy(DeformPolynomial.sigma4_family(a1, a2).of(t5), rep5, psi4)
        want = 16 * (a1 + 4 * a2) ** 2
        worst_4 = max(worst_4, abs(got - want) / abs(want))

    ok = worst4 < 1e-9 and worst0 < 1e-9 and worst_4 < 1e-9
    verdict(
        4,
        ok,
        f"dim4 rel err {worst4:.1e}; Sigma0 (512 a^2) rel err {worst0:.1e}, direct/stated = {np.mean(ratio):.6f}; "
        f"Sigma4 rel err {worst_4:.1e}",
    )


def test_criterion_05_admissibility(verdict):
    rng = np.random.default_rng(SEED + 4)
    reach0, reach4 = [-4.0, 0.0, 4.0], [0.0, 4.0]
    ok = True
    for _ in range(200):
        a, a1, a2 = rng.uniform(-2, 2, 3)
        P0 = DeformPolynomial.sigma0_family(a)
        P4 = DeformPolynomial.sigma4_family(a1, a2)
        ok &= admissible(P0, 0.0, reach0) and admissible(P4, 4.0, reach4)
        for delta in (1e-3, -1e-3):
            ok &= not admissible(P0.shifted(delta), 0.0, reach0)
            ok &= not admissible(P4.shifted(delta), 4.0, reach4)
        # sharpness: an offset well below tau_alg is accepted, one well above is not
        ok &= admissible(P0.shifted(1e-2 * TOL_ALG), 0.0, reach0)
        ok &= admissible(P4.shifted(1e-2 * TOL_ALG), 4.0, reach4)
        ok &= not admissible(P0.shifted(1e3 * TOL_ALG), 0.0, reach0)
        ok &= not admissible(P4.shifted(1e3 * TOL_ALG), 4.0, reach4)
    verdict(5, bool(ok), "families admissible, offsets 1e-3 and 1e-7 rejected, 1e-12 accepted (200 draws)")


def test_criterion_06_dim4_theorem(verdict):
    at = B.BoundInputs.from_ratio(1.5)
    diff = abs(B.dim4_s_deformed(at) - B.dim4_universal(at))
    val = B.dim4_bound(at)
    low = B.dim4_bound(B.BoundInputs.from_ratio(1 / 6))
    none = all(isinstance(B.dim4_bound(B.BoundInputs.from_ratio(c)), B.NoBound) for c in (0.0, 0.05, 0.1, 0.1666))

    rng = np.random.default_rng(SEED + 5)
    worst = 0.0
    for _ in range(100):
        t = rng.uniform(0.3, 3.0)
        inp = B.BoundInputs(rng.uniform(0.0, 10.0), t * t)
        y = rng.uniform(-3.0, 3.0)
        sign = int(rng.choice([1, -1]))
        _, _, brute = grid_golden_maximize_2d(lambda a0, a1: B.dim4_rough(a0, a1, y, sign, inp))
        worst = max(worst, abs(brute - B.dim4_optimize(y, inp, sign)[2]))

    ok = diff < 1e-12 and abs(val - 0.25) < 1e-12 and abs(low) < 1e-12 and none and worst < 1e-6
    verdict(6, ok, f"branch diff at 3/2 {diff:.1e}, bound(1/6) = {low:.1e}, NoBound below 1/6: {none}, optimizer vs brute {worst:.1e}")


def test_criterion_07_dim5_theorem(verdict):
    bp = 4 * (9 + 4 * math.sqrt(5))
    left = B.dim5_limiting_value(bp)
    right = B.friedrich_bound(5, bp)
    common = (45 + 20 * math.sqrt(5)) / 4
    at28 = B.dim5_bound(28.0)
    grid = np.linspace(-4.0, 200.0, 204001)[1:]
    gap = min(B.dim5_bound(s) - B.dim5_universal(s) for s in grid)
    ok = (
        abs(left - right) < 1e-12
        and abs(B.dim5_bound(bp) - common) < 1e-12
        and abs(at28 - 4.0) < 1e-12
        and gap >= 0.0
    )
    verdict(7, ok, f"branch gap {abs(left - right):.1e}, value {B.dim5_bound(bp):.12f}, bound(28) = {at28}, min(bound - univ) = {gap:.1e}")


def test_criterion_08_hopf_values(verdict):
    h = 1e-7
    assert abs(h) < H.SERIES_RADIUS and 2 * h < H.SERIES_RADIUS
    lim = H.hopf_limits(3, h)
    raw = H.hopf_point(1 + h, 3)
    e_univ = abs(lim["beta_univ"] - 19 / 128)
    e_s = abs(lim["beta_s"] - (93 / 256 - 3 * math.sqrt(21) / 64))
    e_c = abs(lim["c"] - 14 / 9)
    ks = [k for k, _ in H.admissible_torsions(2.0)]
    root = H.beta_univ_root(3)
    dominance = True
    for a in np.linspace(1.0, 10.0, 4001)[1:]:
        p = H.hopf_curves(a, 3)
        dominance &= math.isfinite(p.beta_univ) and p.beta_s > p.beta_univ and p.beta_s > 0
    ok = max(e_univ, e_s, e_c) < 1e-9 and ks == [1, 2, 3] and 2.32 < root < 2.34 and dominance
    verdict(
        8,
        bool(ok),
        f"limit errors {e_univ:.1e}, {e_s:.1e}, {e_c:.1e} (single-point at 1+1e-7: {abs(raw.beta_univ - 19 / 128):.1e}); "
        f"k = {ks}; root {root:.5f}; beta_S > beta_univ, beta_S > 0 on (1, 10]: {dominance}",
    )


def test_criterion_09_volume_curvature_oracles(verdict):
    rng = np.random.default_rng(SEED + 8)
    avals = rng.uniform(0.2, 5.0, 50)
    e_vol = max(abs(H.ellipsoid_volume(a) - spheroid_area_quadrature(a)) for a in avals)
    e_g = max(abs(H.gauss_curvature_min(a) - sampled_curvature_min(a)) for a in avals)
    verdict(9, e_vol < 1e-8 and e_g < 1e-8, f"area vs quadrature {e_vol:.1e}, G_min vs fundamental forms {e_g:.1e}")


def test_criterion_10_determinism(verdict, tmp_path):
    commands = [
        ["verify", "--seed", "11"],
        ["bounds4", "--seed", "11"],
        ["bounds5", "--seed", "11"],
        ["hopf", "--seed", "11"],
        ["spectrum", "--seed", "11"],
        ["bounds4", "--format", "json"],
    ]
    same = []
    for i, argv in enumerate(commands):
        outs = []
        for rep in range(2):
            path = tmp_path / f"{i}_{rep}"
            assert main([*argv, "--out", str(path)]) == 0
            outs.append(path.read_bytes())
        same.append(outs[0] == outs[1])
    verdict(10, all(same), f"byte-identical reruns: {dict(zip((' '.join(c) for c in commands), same))}")
