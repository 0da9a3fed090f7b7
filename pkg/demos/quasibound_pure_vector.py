#! /usr/bin/env python3
"""Anatomy of a pure-vector quasi-bound state.

For a 100% vector linear potential nothing is truly bound: the outward
solution decays through the barrier between r1 and r2 and then starts
oscillating again where the lifted negative-energy continuum reaches the
state energy.  This script estimates the quasi-bound level, integrates
through all three regions, and compares the wavefunction near the barrier
edges with the local Bessel-function profiles.
"""

import numpy as np

import diraclinear as dl

m, lam = 1.0, 0.2
mix = dl.PotentialMix(lam, 0.0)

# =============================================================================
# The level itself comes from a truncated-domain Dirichlet condition at the
# barrier midpoint; moving the truncation by 10% barely shifts it, which is
# the error bar the method quotes.

hint = dl.RadialGrid(r_min=25e-6, r_max=25.0, n=20000)
E = dl.estimate_quasibound_energy(m, mix, -1, hint)
spread = abs(dl.estimate_quasibound_energy(m, mix, -1, hint, midpoint_scale=1.1)
             - dl.estimate_quasibound_energy(m, mix, -1, hint, midpoint_scale=0.9))
print(f"quasi-bound level: E = {E:.5f} +/- {spread:.1e} GeV")
assert E > m

tp = dl.turning_points(m, E, mix)
print(f"allowed region r < {tp.r1:.3f}; forbidden up to r2 = {tp.r2:.3f}")

# =============================================================================
# Integrate straight through the barrier.  Inside r1 the state looks bound;
# between r1 and r2 it decays; past r2 it oscillates among the lifted
# negative-energy states.

grid = dl.RadialGrid(r_min=30e-6, r_max=30.0, n=24000)
sol = dl.integrate_radial(m, mix, -1, E, grid)

tail_signs = np.sign(sol.u[sol.r > tp.r2])
tail_signs = tail_signs[tail_signs != 0]
flips = int(np.count_nonzero(tail_signs[1:] * tail_signs[:-1] < 0))
print(f"sign changes beyond r2: {flips}")
assert flips >= 3

# Inside the barrier the envelope decays until the admixture seeded by the
# finite precision of the level estimate takes over and regrows toward r2;
# the deepest point bounds the suppression actually resolved by the shot.
barrier = (sol.r > tp.r1) & (sol.r < tp.r2)
deepest = np.min(np.abs(sol.u[barrier])) / np.max(np.abs(sol.u[sol.r < tp.r1]))
print(f"deepest resolved barrier suppression of |u|: {deepest:.1e}")
assert deepest < 0.05

# =============================================================================
# Near the continuum edge the equation linearizes in the barrier coordinate
# x = E + m - lambda r (x = 0 at r2, x = 2m at r1) and the solution is
# A*J0(2 sqrt(-x/(E+m))) outside / A*I0(2 sqrt(x/(E+m))) inside: continuous
# at the edge since J0(0) = I0(0) = 1, oscillatory on the free side, and
# monotone into the barrier.  The form is local -- valid only for small |x|
# -- so compare shapes in a narrow window around r2.

window = np.abs(sol.r - tp.r2) < 0.1
r_win = sol.r[window]
u_win = sol.u[window]
amp = u_win[np.argmin(np.abs(r_win - tp.r2))]
profile = dl.vector_profile_continuum_edge(E, m, amp, dl.x_of_r(m, E, lam, r_win))
dev = np.max(np.abs(profile - u_win)) / np.abs(amp)
print(f"local J0/I0 profile vs numerical u within |r - r2| < 0.1: "
      f"max deviation {dev:.1%} of the edge value")
assert dev < 0.03

# At the classical turning point the local solution is an I0/K0 mix in the
# same coordinate; a dominant I0 falls off toward larger r, matching the
# decaying numerical solution there.
tp_profile = dl.vector_profile_turning_point(
    E, m, dl.LocalProfileCoefficients(B=1.0, C=0.05), np.linspace(1.8, 2.2, 5))
assert np.all(np.diff(tp_profile) > 0)  # grows with x, i.e. decays with r

print("OK: barrier anatomy matches the local profiles.")
