"""RK4 shooting solver: integration, eigenvalue search, quasi-bound estimate."""

import numpy as np
import pytest

from diraclinear import (
    BracketError,
    PotentialMix,
    RadialGrid,
    ScanError,
    equal_mix_energy,
    equal_mix_wavefunction,
    estimate_quasibound_energy,
    find_bound_state,
    integrate_radial,
    suggest_bracket,
)

M = 1.0
LAM = 0.2
E1 = equal_mix_energy(M, LAM, 1)
EQUAL = PotentialMix(LAM, 0.5)
VECTOR = PotentialMix(LAM, 0.0)
SCALAR = PotentialMix(LAM, 1.0)
GRID = RadialGrid(r_min=25e-6, r_max=25.0, n=20000)


def test_integrate_matches_airy_form():
    grid = RadialGrid(r_min=12e-6, r_max=12.0, n=6000)
    sol = integrate_radial(M, EQUAL, -1, E1, grid)
    ana = equal_mix_wavefunction(M, LAM, E1, sol.r)
    ipk = int(np.argmax(np.abs(ana.u)))
    scale = sol.u[ipk] / ana.u[ipk]
    dev = np.max(np.abs(sol.u - scale * ana.u)) / np.max(np.abs(scale * ana.u))
    assert dev < 1e-4


def test_integrate_pure_vector_oscillates_past_continuum_edge():
    grid = RadialGrid(r_min=30e-6, r_max=30.0, n=24000)
    sol = integrate_radial(M, VECTOR, -1, 1.5828, grid)
    r2 = (1.5828 + M) / LAM
    tail = np.sign(sol.u[sol.r > r2])
    tail = tail[tail != 0]
    assert np.count_nonzero(tail[1:] * tail[:-1] < 0) >= 3


def test_launch_powers_by_channel():
    # near the origin the leading component scales like r^|k|
    grid = RadialGrid(r_min=0.01, r_max=5.0, n=10000)
    for k, component, power in ((-1, "u", 1), (-2, "u", 2), (1, "v", 1), (2, "v", 2)):
        sol = integrate_radial(M, EQUAL, k, 1.5, grid)
        lead = getattr(sol, component)
        i = 400  # r grows 20x from r_min
        ratio = lead[i] / lead[0]
        assert ratio == pytest.approx((sol.r[i] / sol.r[0]) ** power, rel=0.05)


def test_integrate_validates_inputs():
    with pytest.raises(ValueError):
        integrate_radial(M, EQUAL, 0, 1.5, GRID)
    with pytest.raises(ValueError):
        integrate_radial(M, EQUAL, -1, float("nan"), GRID)


def test_integrate_reports_divergence_as_data():
    # stiff slope: the growing tail overflows well before r_max
    mix = PotentialMix(4.0, 1.0)
    sol = integrate_radial(M, mix, -1, 2.0, GRID)
    assert sol.diverged
    assert sol.divergence_sign in (-1, 1)
    assert len(sol.u) == GRID.n + 1
    assert np.isnan(sol.u[-1])
    assert np.isfinite(sol.node_count)


def test_find_bound_state_equal_mix():
    sol = find_bound_state(M, EQUAL, -1, (1.1, 2.5), GRID)
    assert abs(sol.E - 1.5828) < 2e-3
    assert sol.node_count == 0
    assert abs(sol.u[-1]) <= 1e-3 * np.max(np.abs(sol.u))
    assert np.trapezoid(sol.u**2 + sol.v**2, sol.r) == pytest.approx(1.0, rel=1e-10)


def test_find_bound_state_matches_analytic_wavefunction():
    sol = find_bound_state(M, EQUAL, -1, (1.1, 2.5), GRID)
    ana = equal_mix_wavefunction(M, LAM, E1, sol.r)
    peak = np.max(np.abs(ana.u))
    assert np.max(np.abs(sol.u - ana.u)) / peak < 1e-4
    assert np.max(np.abs(sol.v - ana.v)) / peak < 1e-4


def test_find_bound_state_pure_scalar():
    bracket = suggest_bracket(M, SCALAR, -1, GRID)
    sol = find_bound_state(M, SCALAR, -1, bracket, GRID)
    assert M < sol.E < M + 3.0
    assert sol.node_count == 0
    # the raw shot at the converged energy satisfies the second-order
    # pure-scalar equation under finite differencing
    raw = integrate_radial(M, SCALAR, -1, sol.E, GRID)
    r, u, h, e = raw.r, raw.u, GRID.h, raw.E
    upp = (u[2:] - 2 * u[1:-1] + u[:-2]) / h**2
    up = (u[2:] - u[:-2]) / (2 * h)
    rm, um = r[1:-1], u[1:-1]
    res = ((e + M + LAM * rm) * upp - LAM * up + LAM * um / rm
           + (e + M + LAM * rm) ** 2 * (e - M - LAM * rm) * um)
    win = (rm > 0.05) & (rm < 12.0)
    peak = np.max(np.abs(u[np.isfinite(u)]))
    assert np.max(np.abs(res[win])) <= 1e-4 * peak


def test_find_bound_state_scalar_tail_is_gaussian():
    # log-derivative of the tail approaches -lambda*r once E >> m; with
    # lam = 4.5 the next-order m/(lambda r) correction sits inside 5%
    lam = 4.5
    mix = PotentialMix(lam, 1.0)
    sol = find_bound_state(M, mix, -1, suggest_bracket(M, mix, -1, GRID), GRID)
    r1 = (sol.E - M) / lam
    seg = (sol.r >= 2 * r1) & (sol.r <= 3 * r1)
    r, u = sol.r[seg], sol.u[seg]
    dln = np.gradient(np.log(u), r)
    assert np.max(np.abs(dln / (-lam * r) - 1.0)) < 0.05


def test_scalar_tail_gaussian_at_reference_slope():
    # at lam = 0.2 the m/(lambda*r) correction is still sizable inside the
    # grid, but the slope is Gaussian-dominated: it tracks -lambda*r within
    # a bounded factor and doubles when r doubles
    sol = find_bound_state(M, SCALAR, -1, suggest_bracket(M, SCALAR, -1, GRID), GRID)

    def mean_slope(a, b):
        seg = (sol.r >= a) & (sol.r <= b)
        return np.mean(np.gradient(np.log(sol.u[seg]), sol.r[seg]))

    ratio_4 = mean_slope(3.9, 4.1) / (-LAM * 4.0)
    ratio_8 = mean_slope(7.9, 8.1) / (-LAM * 8.0)
    assert 1.0 < ratio_8 < ratio_4 + 0.1 < 1.45
    assert mean_slope(7.9, 8.1) / mean_slope(3.9, 4.1) == pytest.approx(2.0, rel=0.15)


def test_find_bound_state_rejects_quasibound_mix():
    with pytest.raises(ValueError, match="estimate_quasibound_energy"):
        find_bound_state(M, VECTOR, -1, (1.1, 2.5), GRID)


def test_find_bound_state_bracket_without_eigenvalue():
    with pytest.raises(BracketError):
        find_bound_state(M, EQUAL, -1, (1.05, 1.2), GRID)


def test_find_bound_state_multi_level_bracket_targets_nodes():
    e2 = equal_mix_energy(M, LAM, 2)
    wide = (1.1, 2.2)  # holds both the ground and first excited level
    ground = find_bound_state(M, EQUAL, -1, wide, GRID)
    assert abs(ground.E - E1) < 2e-3
    excited = find_bound_state(M, EQUAL, -1, wide, GRID, nodes=1)
    assert abs(excited.E - e2) < 2e-3
    assert excited.node_count == 1


def test_fourth_order_convergence():
    # halving the step cuts the deviation from the Airy form by >= 12
    def max_dev(n):
        grid = RadialGrid(r_min=8e-6, r_max=8.0, n=n)
        sol = integrate_radial(M, EQUAL, -1, E1, grid)
        ana = equal_mix_wavefunction(M, LAM, E1, sol.r)
        mask = sol.r > 0.5
        scale = (np.dot(sol.u[mask], ana.u[mask])
                 / np.dot(ana.u[mask], ana.u[mask]))
        return np.max(np.abs(sol.u[mask] - scale * ana.u[mask]))

    assert max_dev(200) / max_dev(400) >= 12.0
    assert max_dev(400) / max_dev(800) >= 12.0


def test_bound_tail_never_oscillates():
    for s in (0.5, 0.75, 1.0):
        mix = PotentialMix(LAM, s)
        sol = find_bound_state(M, mix, -1, suggest_bracket(M, mix, -1, GRID), GRID)
        r1 = (sol.E - M) / LAM
        tail = np.sign(sol.u[sol.r > r1 + 1.0 / np.sqrt(LAM)])
        tail = tail[tail != 0]
        assert np.count_nonzero(tail[1:] * tail[:-1] < 0) == 0


def test_mixed_potential_oscillates_past_lifted_continuum():
    mix = PotentialMix(LAM, 0.25)
    e = 1.5828
    r3 = (e + M) / ((1 - 2 * mix.s) * LAM)
    grid = RadialGrid(r_min=42e-6, r_max=42.0, n=30000)
    sol = integrate_radial(M, mix, -1, e, grid)
    tail = np.sign(sol.u[sol.r > r3])
    tail = tail[tail != 0]
    assert np.count_nonzero(tail[1:] * tail[:-1] < 0) >= 1


def test_eigenvalue_invariant_under_larger_domain():
    e_25 = find_bound_state(M, EQUAL, -1, (1.1, 2.5), GRID).E
    wide = RadialGrid(r_min=25e-6, r_max=50.0, n=40000)
    e_50 = find_bound_state(M, EQUAL, -1, (1.1, 2.5), wide).E
    assert abs(e_25 - e_50) < 1e-6


def test_eigenvalue_matches_analytic_on_reference_grid():
    sol = find_bound_state(M, EQUAL, -1, (1.1, 2.5), GRID)
    assert abs(sol.E - E1) / E1 < 2e-3


def test_quasibound_estimate_continuity_at_half():
    near = PotentialMix(LAM, 0.5 - 1e-6)
    est = estimate_quasibound_energy(M, near, -1, GRID)
    assert abs(est - E1) < 0.01


def test_quasibound_estimate_pure_vector_range():
    # the level must sit above m but below the barrier-top scale m + lam*r2
    est = estimate_quasibound_energy(M, VECTOR, -1, GRID)
    assert M < est < 3.583


def test_quasibound_truncation_sensitivity_is_small():
    lo = estimate_quasibound_energy(M, VECTOR, -1, GRID, midpoint_scale=0.9)
    hi = estimate_quasibound_energy(M, VECTOR, -1, GRID, midpoint_scale=1.1)
    assert abs(hi - lo) < 5e-3


def test_quasibound_rejects_bound_mix():
    with pytest.raises(ValueError, match="find_bound_state"):
        estimate_quasibound_energy(M, EQUAL, -1, GRID)


def test_scan_error_when_no_transition():
    with pytest.raises(ScanError):
        suggest_bracket(M, EQUAL, -1, GRID, nodes=40)
