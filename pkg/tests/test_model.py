"""Domain types, potential split, turning points, binding classification."""

import numpy as np
import pytest

from diraclinear import (
    BindingClass,
    Particle,
    PotentialMix,
    QuantumNumbers,
    RadialGrid,
    TurningPoints,
    classify_binding,
    count_nodes,
    potentials,
    turning_points,
)


def test_potentials_equal_mix():
    v, s = potentials(PotentialMix(0.2, 0.5), 1.0)
    assert v == pytest.approx(0.1, abs=1e-15)
    assert s == pytest.approx(0.1, abs=1e-15)


def test_potentials_origin_and_pure_vector():
    assert potentials(PotentialMix(0.7, 0.3), 0.0) == (0.0, 0.0)
    v, s = potentials(PotentialMix(0.2, 0.0), 2.0)
    assert v == pytest.approx(0.4, abs=1e-15)
    assert s == 0.0


def test_potentials_sum_is_total_slope():
    rng = np.random.default_rng(7)
    for _ in range(50):
        lam = rng.uniform(0.01, 5.0)
        s = rng.uniform(0.0, 1.0)
        r = rng.uniform(0.0, 50.0)
        v, sc = potentials(PotentialMix(lam, s), r)
        assert v + sc == pytest.approx(lam * r, rel=1e-15)


def test_potentials_negative_radius_rejected():
    with pytest.raises(ValueError):
        potentials(PotentialMix(0.2, 0.5), -0.1)


def test_turning_points_pure_vector():
    tp = turning_points(1.0, 1.5828, PotentialMix(0.2, 0.0))
    assert tp.r1 == pytest.approx(2.914, abs=1e-12)
    assert tp.r2 == pytest.approx(12.914, abs=1e-12)
    assert tp.r3 == pytest.approx(12.914, abs=1e-12)


def test_turning_points_equal_mix_has_no_continuum_edge():
    tp = turning_points(1.0, 1.5828, PotentialMix(0.2, 0.5))
    assert tp.r1 == pytest.approx(2.914, abs=1e-12)
    assert tp.r2 is None and tp.r3 is None


def test_turning_points_mixed():
    tp = turning_points(1.0, 1.5828, PotentialMix(0.2, 0.4))
    assert tp.r3 == pytest.approx(2.5828 / 0.04, rel=1e-12)


def test_turning_points_require_binding_energy():
    with pytest.raises(ValueError):
        turning_points(1.0, 1.0, PotentialMix(0.2, 0.0))
    with pytest.raises(ValueError):
        turning_points(1.0, 0.5, PotentialMix(0.2, 0.0))


def test_r1_independent_of_scalar_fraction():
    for s in (0.0, 0.2, 0.5, 0.8, 1.0):
        tp = turning_points(1.3, 2.1, PotentialMix(0.37, s))
        assert tp.r1 == pytest.approx((2.1 - 1.3) / 0.37, rel=1e-15)


def test_geometry_identities_randomized():
    rng = np.random.default_rng(11)
    for _ in range(100):
        m = rng.uniform(0.3, 3.0)
        lam = rng.uniform(0.05, 1.0)
        e = m * rng.uniform(1.05, 3.0)
        s = rng.uniform(0.0, 0.499)
        tp = turning_points(m, e, PotentialMix(lam, s))
        assert tp.r2 - tp.r1 == pytest.approx(2.0 * m / lam, rel=5e-13)
        assert tp.r3 / tp.r2 == pytest.approx(1.0 / (1.0 - 2.0 * s), rel=5e-13)


def test_classify_binding():
    assert classify_binding(PotentialMix(0.2, 0.5)) is BindingClass.STRICTLY_BOUND
    assert classify_binding(PotentialMix(0.2, 0.0)) is BindingClass.QUASI_BOUND
    assert classify_binding(PotentialMix(0.2, 1.0)) is BindingClass.STRICTLY_BOUND
    assert classify_binding(PotentialMix(0.2, 0.4999)) is BindingClass.QUASI_BOUND


def test_type_validation():
    with pytest.raises(ValueError):
        Particle(0.0)
    with pytest.raises(ValueError):
        PotentialMix(-0.2, 0.5)
    with pytest.raises(ValueError):
        PotentialMix(0.2, 1.2)
    with pytest.raises(ValueError):
        QuantumNumbers(0)
    with pytest.raises(ValueError):
        TurningPoints(r1=2.0, r2=1.0, r3=3.0)
    with pytest.raises(ValueError):
        RadialGrid(r_min=0.0, r_max=10.0, n=1000)
    with pytest.raises(ValueError):
        RadialGrid(r_min=1e-5, r_max=10.0, n=50)


def test_quantum_numbers_derived():
    ground = QuantumNumbers(-1)
    assert ground.j == 0.5 and ground.l == 0
    assert QuantumNumbers(1).j == 0.5 and QuantumNumbers(1).l == 1
    assert QuantumNumbers(-2).j == 1.5 and QuantumNumbers(-2).l == 1


def test_radial_grid_points():
    grid = RadialGrid(r_min=1e-4, r_max=10.0, n=100)
    r = grid.radii()
    assert len(r) == 101
    assert r[0] == 1e-4 and r[-1] == 10.0
    assert grid.h == pytest.approx((10.0 - 1e-4) / 100)


def test_count_nodes():
    assert count_nodes(np.array([0.0, 1.0, 2.0, 1.0, 0.5, 0.1])) == 0
    assert count_nodes(np.array([0.0, 1.0, -1.0, 1.0, 0.0])) == 2
    assert count_nodes(np.array([0.0, 1.0, 0.0, 1.0, 0.0])) == 0
    assert count_nodes(np.array([0.0, 1.0, np.nan, np.nan, np.nan])) == 0
