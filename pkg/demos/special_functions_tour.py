#! /usr/bin/env python3
"""The special functions the solver is built on, and how far to trust them.

Everything here is evaluated from Maclaurin series and asymptotic
expansions inside the package (no scipy.special at runtime); scipy is
used below only as an independent yardstick.
"""

import numpy as np
from scipy import special as sp

import diraclinear as dl

# =============================================================================
# Airy Ai: the equal-mix eigenfunctions.  Its negative zeros quantize the
# spectrum, the first one at -2.33811.

print("Airy zeros:", [round(dl.airy_ai_zero(i), 5) for i in range(1, 6)])
assert abs(dl.airy_ai_zero(1) + 2.33811) < 1e-4

x = np.linspace(-10.0, 10.0, 2001)
err = np.max(np.abs(dl.airy_ai(x) - sp.airy(x)[0]))
print(f"Ai worst absolute error on [-10, 10]: {err:.2e}")
assert err < 1e-10

# Ai solves u'' = x u; check the residual with plain finite differences.
h = 1e-4
g = np.linspace(-5.0, 5.0, 201)
resid = np.abs((dl.airy_ai(g + h) - 2 * dl.airy_ai(g) + dl.airy_ai(g - h)) / h**2
               - g * dl.airy_ai(g))
print(f"ODE residual (central differences): {resid.max():.2e}")
assert resid.max() < 1e-7

# =============================================================================
# Bessel J0/I0/K0: the local profiles at the barrier edges.  J0 and I0 meet
# at the continuum edge with J0(0) = I0(0) = 1; K0 blows up at zero and is
# only defined for positive arguments.

assert dl.bessel_j0(0.0) == 1.0 and dl.bessel_i0(0.0) == 1.0
print(f"first J0 zero sits near 2.404826: |J0| = {abs(dl.bessel_j0(2.404826)):.1e}")

xs = np.linspace(1e-3, 20.0, 2001)
for name, mine, ref in (("J0", dl.bessel_j0, sp.j0),
                        ("I0", dl.bessel_i0, sp.i0),
                        ("K0", dl.bessel_k0, sp.k0)):
    got, want = mine(xs), ref(xs)
    rel = np.max(np.abs(got - want) / np.maximum(np.abs(want), 1e-300))
    print(f"{name} worst relative error on (0, 20]: {rel:.2e}")

try:
    dl.bessel_k0(0.0)
except ValueError as exc:
    print(f"K0(0) correctly rejected: {exc}")

# =============================================================================
# Each function switches from its series to an asymptotic expansion at a
# documented point; the two branches agree there to well below 1e-9.

from diraclinear import specfun

j_here = specfun._j0_series(np.array([specfun.J0_SWITCH]))[0]
j_there = specfun._j0_asym(np.array([specfun.J0_SWITCH]))[0]
print(f"J0 branch agreement at x = {specfun.J0_SWITCH}: {abs(j_here - j_there):.1e}")

print("OK: special functions verified against scipy.")
