import math

import numpy as np
import pytest

from torsionbounds import hopf as H
from torsionbounds.bounds import BoundInputs, dim4_bound
from torsionbounds.oracles import sampled_curvature_min, spheroid_area_quadrature


def test_volume_examples():
    assert H.ellipsoid_volume(1.0) == pytest.approx(4 * math.pi, rel=1e-15)
    assert H.ellipsoid_volume(2.0) == pytest.approx(2 * math.pi * (1 + 4 * (math.pi / 3) / math.sqrt(3)))
    with pytest.raises(ValueError):
        H.ellipsoid_volume(0.0)


def test_volume_arcsin_form():
    for a in (1.3, 2.0, 7.0):
        r = math.sqrt(a * a - 1)
        want = 2 * math.pi + 2 * math.pi * a * a * math.asin(r / a) / r
        assert H.ellipsoid_volume(a) == pytest.approx(want, rel=1e-14)


@pytest.mark.parametrize("a", [0.2, 0.5, 0.9, 1.1, 2.0, 4.9])
def test_volume_quadrature(a):
    assert abs(H.ellipsoid_volume(a) - spheroid_area_quadrature(a)) < 1e-8


def test_volume_continuous_at_one():
    for eps in (1e-6, 1e-5, 1e-4):
        left, right = H.ellipsoid_volume(1 - eps), H.ellipsoid_volume(1 + eps)
        assert abs(left - right) < 4 * eps * 4 * math.pi
    for edge in (1 - H.SERIES_RADIUS, 1 + H.SERIES_RADIUS):
        below = H.ellipsoid_volume(np.nextafter(edge, 0))
        above = H.ellipsoid_volume(np.nextafter(edge, 2))
        assert abs(below - above) < 1e-8


def test_volume_increasing():
    vals = [H.ellipsoid_volume(a) for a in np.geomspace(0.05, 20, 2000)]
    assert np.all(np.diff(vals) > 0)


def test_curvature():
    assert H.gauss_curvature_min(2.0) == 0.25
    assert H.gauss_curvature_min(1.0) == 1.0
    assert H.gauss_curvature_min(0.5) == 0.25
    for a in (0.3, 0.8, 1.7, 3.0):
        assert abs(H.gauss_curvature_min(a) - sampled_curvature_min(a)) < 1e-8
        ts = np.linspace(0, math.pi / 2, 101)
        assert min(H.gauss_curvature(a, t) for t in ts) == pytest.approx(H.gauss_curvature_min(a))


def test_admissible_torsions():
    ks = H.admissible_torsions(2.0)
    assert [k for k, _ in ks] == [1, 2, 3]
    t4 = H.torsion_length(2.0, 4)
    assert t4**2 == pytest.approx(0.342, abs=1e-3)
    assert not H.is_admissible(2.0, 4)
    near = H.admissible_torsions(1 + 1e-9)
    assert [k for k, _ in near] == [1, 2, 3]
    for k, t in near:
        assert t == pytest.approx(k / 4, rel=1e-8)
    # for large a, |T|^2 / G_min tends to (k / pi)^2
    for a in (0.1, 0.5, 10.0, 50.0):
        ks = [k for k, _ in H.admissible_torsions(a)]
        assert ks == [k for k in range(1, 100) if H.is_admissible(a, k)]
    assert [k for k, _ in H.admissible_torsions(1e4)] == [1, 2, 3]


def test_curve_point_relations():
    p = H.hopf_curves(1.5)
    assert p.t_norm == pytest.approx(3 * math.pi / p.vol)
    assert p.c == pytest.approx(2 * p.g_min / p.t_norm**2 - 2)
    assert p.scal_min / p.t_norm**2 == pytest.approx(p.c)


def test_inadmissible_pair_rejected():
    with pytest.raises(ValueError):
        H.hopf_curves(2.0, 4)
    assert not H.hopf_point(2.0, 4).admissible


def test_limits():
    lim = H.hopf_limits()
    assert lim["beta_univ"] == pytest.approx(19 / 128, abs=1e-9)
    assert lim["beta_s"] == pytest.approx(93 / 256 - 3 * math.sqrt(21) / 64, abs=1e-9)
    assert lim["c"] == pytest.approx(14 / 9, abs=1e-9)


def test_row_near_one():
    p = H.hopf_curves(1.0001)
    assert p.beta_univ == pytest.approx(19 / 128, abs=1e-4)
    assert p.beta_s == pytest.approx(0.14847, abs=1e-4)


def test_beta_univ_sign_change():
    root = H.beta_univ_root()
    assert 2.32 < root < 2.34
    p = H.hopf_curves(2.5)
    assert p.beta_univ < 0 < p.beta_s


def test_beta_s_dominates():
    for a in np.linspace(1 + 1e-6, 10, 2000):
        p = H.hopf_curves(a)
        assert p.beta_s > 0
        assert p.beta_s >= p.beta_univ
        # the difference is |T|^2 (sqrt c - sqrt(3/2))^2 / 8, zero only at c = 3/2
        gap = p.t_norm**2 * (math.sqrt(p.c) - math.sqrt(1.5)) ** 2 / 8
        assert p.beta_s - p.beta_univ == pytest.approx(gap, abs=1e-12)


def test_c_range():
    assert H.hopf_point(1.015).c > 1.5
    assert H.hopf_point(1.025).c < 1.5
    assert 1.02 < H.c_crossing() < 1.03
    for a in np.linspace(1.025, 50, 2000):
        c = H.hopf_point(a).c
        assert 1 / 6 < c < 1.5
    assert 1 / 6 < H.hopf_point(5.0).c < 1.5


def test_matches_dimension_four_theorem():
    for a in (1.1, 2.0, 5.0):
        p = H.hopf_curves(a)
        assert dim4_bound(BoundInputs(p.scal_min, p.t_norm**2)) == pytest.approx(p.beta_s, rel=1e-12)
