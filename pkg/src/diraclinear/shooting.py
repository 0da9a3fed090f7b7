"""Shooting-method solver for the coupled radial Dirac system.

Outward RK4 integration from a series launch at small radius; bound-state
eigenvalues for scalar fraction s >= 1/2 by bisection on the behavior of
the outward tail (node-count targeted, so brackets holding several levels
still converge to the requested one); and a truncated-domain Dirichlet
estimator for the quasi-bound levels that exist below s = 1/2.

The raw outward shot of a bound state always ends in an exponentially
growing admixture seeded by roundoff; find_bound_state therefore rebuilds
the tail by a stabilized inward integration before returning, and reports
the reconstructed, normalized eigenstate.
"""

from __future__ import annotations

import math

import numpy as np

from ._kernels import rk4_path
from .errors import BracketError, ScanError
from .model import PotentialMix, RadialGrid, RadialSolution, count_nodes, turning_points


def _launch_values(m, mix, k, E, r_min):
    """Series behavior at the regular singular point: the leading component
    goes like r^|k| and the other follows from the leading-order relation."""
    kk = abs(k)
    p0 = E + m - (1.0 - 2.0 * mix.s) * mix.lam * r_min
    q0 = E - m - mix.lam * r_min
    if k < 0:
        u0 = r_min ** kk
        v0 = -q0 * r_min ** (kk + 1) / (2 * kk + 1)
    else:
        v0 = r_min ** kk
        u0 = p0 * r_min ** (kk + 1) / (2 * kk + 1)
    return u0, v0


def _validate_k(k):
    if not isinstance(k, (int, np.integer)) or isinstance(k, bool):
        raise ValueError("k must be a nonzero integer")
    if k == 0:
        raise ValueError("k must be a nonzero integer")


def integrate_radial(m: float, mix: PotentialMix, k: int, E: float,
                     grid: RadialGrid) -> RadialSolution:
    """Single outward RK4 shot at energy E on the given uniform grid.

    Returns the raw (unnormalized) solution.  A growing tail that leaves
    the representable range is not an error: the solution is marked
    diverged, entries past the overflow point are NaN, and divergence_sign
    records the sign of u there for use by eigenvalue bisections.
    """
    _validate_k(k)
    if not np.isfinite(E):
        raise ValueError("E must be finite")
    u0, v0 = _launch_values(m, mix, k, E, grid.r_min)
    u, v, stop, sign = rk4_path(m, mix.lam, mix.s, int(k), E,
                                grid.r_min, grid.h, grid.n, u0, v0)
    return RadialSolution(
        r=grid.radii(), u=u, v=v, E=E, node_count=count_nodes(u),
        diverged=stop < grid.n, divergence_sign=int(sign), grid=grid,
    )


def _tail_nodes(m, mix, k, E, grid):
    sol = integrate_radial(m, mix, k, E, grid)
    return sol.node_count


def _reconstruct_tail(sol: RadialSolution, m, mix, k):
    """Replace the contaminated outer part of a bound-state shot.

    Beyond the point where the outward solution stops decaying, integrate
    inward (where the physical tail is the growing direction, hence
    stable) and splice, matching amplitude at a radius where the outward
    solution is still clean.  The inward start is capped so the backward
    amplification stays representable; beyond the cap the true tail is
    below 1e-217 of the splice value and is set to zero.
    """
    r, u, v = sol.r, sol.u.copy(), sol.v.copy()
    n = len(r) - 1
    stop = n
    if sol.diverged:
        stop = int(np.max(np.nonzero(np.isfinite(u))[0]))
    w = np.abs(u[:stop + 1]) + np.abs(v[:stop + 1])
    # the physical lobe lives in the classically allowed region r < r1; the
    # raw shot may be orders of magnitude larger in its contaminated tail
    r1 = (sol.E - m) / mix.lam
    allowed = np.nonzero(r[:stop + 1] <= r1)[0]
    ipk = int(allowed[np.argmax(w[allowed])]) if len(allowed) else int(np.argmax(w))
    if ipk >= stop - 2:
        return sol
    imin = ipk + int(np.argmin(w[ipk:]))
    regrew = sol.diverged or (w[imin] > 0 and np.max(w[imin:]) > 10.0 * w[imin])
    if not regrew or imin <= ipk:
        return sol

    # splice where the outward shot is still two decades above its minimum,
    # i.e. growing-mode contamination is at the 1e-4 level
    clean = np.nonzero(w[ipk:imin + 1] >= 100.0 * w[imin])[0]
    isplice = ipk + (int(clean[-1]) if len(clean) else 0)
    if isplice <= ipk:
        isplice = ipk + 1

    # cap the inward start: local growth exponent sqrt(-P*Q) integrated
    # from the splice must stay well inside the representable range
    lam, s = mix.lam, mix.s
    rr = r[isplice:]
    p = sol.E + m - (1.0 - 2.0 * s) * lam * rr
    q = sol.E - m - lam * rr
    kap = np.sqrt(np.maximum(-p * q, 0.0))
    efolds = np.concatenate(([0.0], np.cumsum(
        0.5 * (kap[1:] + kap[:-1]) * np.diff(rr))))
    iend = isplice + int(np.searchsorted(efolds, 500.0))
    iend = min(max(iend, isplice + 8), n)

    h = r[1] - r[0]
    nsteps = iend - isplice
    ub, vb, stop_b, _ = rk4_path(m, lam, s, int(k), sol.E,
                                 r[iend], -h, nsteps, 1e-30, -1e-30)
    if stop_b < nsteps:  # backward pass failed; keep the raw solution
        return sol
    u_in = ub[::-1]
    v_in = vb[::-1]
    if u_in[0] == 0.0:
        return sol
    factor = u[isplice] / u_in[0]
    u[isplice:iend + 1] = u_in * factor
    v[isplice:iend + 1] = v_in * factor
    if iend < n:
        u[iend + 1:] = 0.0
        v[iend + 1:] = 0.0
    return RadialSolution(r=r, u=u, v=v, E=sol.E, node_count=count_nodes(u),
                          grid=sol.grid)


def _normalized(sol: RadialSolution) -> RadialSolution:
    norm = math.sqrt(np.trapezoid(sol.u ** 2 + sol.v ** 2, sol.r))
    flip = -1.0 if sol.u[np.argmax(np.abs(sol.u))] < 0 else 1.0
    sol.u *= flip / norm
    sol.v *= flip / norm
    return sol


def find_bound_state(m: float, mix: PotentialMix, k: int, bracket,
                     grid: RadialGrid, nodes: int | None = None) -> RadialSolution:
    """Bound-state eigensolution for s >= 1/2 by bisection on the outward tail.

    The bracket must contain the target eigenvalue; when it holds several,
    `nodes` (interior node count, ground state = 0) picks one, defaulting
    to the lowest eigenvalue above the left endpoint.  Bisection runs to
    |dE| <= 1e-8; the returned solution has its spurious growing tail
    replaced by a stabilized inward integration, is normalized to
    trapezoid(u^2 + v^2) = 1, and is oriented with a positive main lobe.
    """
    if mix.s < 0.5:
        raise ValueError(
            "s < 0.5 gives only quasi-bound states; use estimate_quasibound_energy")
    _validate_k(k)
    lo, hi = float(bracket[0]), float(bracket[1])
    if not (0.0 < lo < hi):
        raise ValueError("bracket must satisfy 0 < lo < hi")

    n_lo = _tail_nodes(m, mix, k, lo, grid)
    n_hi = _tail_nodes(m, mix, k, hi, grid)
    if n_lo == n_hi:
        raise BracketError(
            f"no eigenvalue in bracket ({lo}, {hi}): tail shape is identical "
            f"at both endpoints (node count {n_lo})")
    if nodes is None:
        nodes = n_lo
    if not (n_lo <= nodes < n_hi):
        raise BracketError(
            f"bracket ({lo}, {hi}) spans node counts {n_lo}..{n_hi}, which "
            f"does not straddle a {nodes}-node eigenvalue")

    while hi - lo > 1e-8:
        mid = 0.5 * (lo + hi)
        if _tail_nodes(m, mix, k, mid, grid) > nodes:
            hi = mid
        else:
            lo = mid
    e = 0.5 * (lo + hi)
    sol = integrate_radial(m, mix, k, e, grid)
    return _normalized(_reconstruct_tail(sol, m, mix, k))


def suggest_bracket(m: float, mix: PotentialMix, k: int, grid: RadialGrid,
                    nodes: int = 0, steps: int = 64):
    """Scan (m, m + 10*sqrt(lambda)) for a bracket around the eigenvalue
    whose interior node count is `nodes`.  Raises ScanError when the window
    contains no such transition."""
    width = 10.0 * math.sqrt(mix.lam)
    energies = m + width * np.arange(1, steps + 1) / steps
    prev_e = m + width / (4.0 * steps)
    prev_n = _tail_nodes(m, mix, k, prev_e, grid)
    for e in energies:
        cur = _tail_nodes(m, mix, k, float(e), grid)
        if prev_n <= nodes < cur:
            return prev_e, float(e)
        prev_e, prev_n = float(e), cur
    raise ScanError(
        f"no {nodes}-node eigenvalue transition in (m, m + 10*sqrt(lambda)) "
        f"= ({m}, {m + width})")


def estimate_quasibound_energy(m: float, mix: PotentialMix, k: int,
                               grid_hint: RadialGrid,
                               midpoint_scale: float = 1.0) -> float:
    """Quasi-bound level estimate for s < 1/2 from a truncated domain.

    The outward solution is integrated to a Dirichlet point in the
    classically forbidden region -- the midpoint between r1 and the lifted
    continuum edge, capped at a dozen decay lengths past r1 so the scheme
    stays meaningful as s -> 1/2 where the geometric midpoint runs away --
    and the lowest E > m with u(r_mid) = 0 is found by scan plus bisection.
    This is an estimate; re-solving with midpoint_scale 0.9 and 1.1 gives
    its truncation-sensitivity spread.  n and r_min are taken from
    grid_hint; the outer radius is the Dirichlet point itself.
    """
    if mix.s >= 0.5:
        raise ValueError("s >= 0.5 is strictly bound; use find_bound_state")
    _validate_k(k)
    if not (0.5 <= midpoint_scale <= 1.5):
        raise ValueError("midpoint_scale outside [0.5, 1.5] leaves the barrier")

    def dirichlet_radius(e):
        tp = turning_points(m, e, mix)
        cap = tp.r1 + 10.0 / (mix.lam * (m + e)) ** (1.0 / 3.0)
        return midpoint_scale * min(0.5 * (tp.r1 + tp.r3), cap)

    def endpoint_u(e, r_mid):
        r_min = min(grid_hint.r_min, 1e-6 * r_mid)
        grid = RadialGrid(r_min=r_min, r_max=r_mid, n=grid_hint.n)
        sol = integrate_radial(m, mix, k, e, grid)
        if sol.diverged:
            return math.inf * sol.divergence_sign
        return float(sol.u[-1])

    width = 10.0 * math.sqrt(mix.lam)
    steps = 96
    prev_e = m + width / (2.0 * steps)
    prev_f = endpoint_u(prev_e, dirichlet_radius(prev_e))
    bracket = None
    for i in range(1, steps + 1):
        e = m + width * i / steps
        f = endpoint_u(e, dirichlet_radius(e))
        if prev_f == 0.0:
            return prev_e
        if prev_f * f < 0:
            bracket = (prev_e, e)
            break
        prev_e, prev_f = e, f
    if bracket is None:
        raise ScanError(
            f"no Dirichlet sign change in the scan window "
            f"({m}, {m + width}); no quasi-bound level found")

    lo, hi = bracket
    r_mid = dirichlet_radius(0.5 * (lo + hi))
    f_lo = endpoint_u(lo, r_mid)
    while hi - lo > 1e-11 * m:
        mid = 0.5 * (lo + hi)
        f_mid = endpoint_u(mid, r_mid)
        if f_mid == 0.0:
            return mid
        if f_lo * f_mid < 0:
            hi = mid
        else:
            lo, f_lo = mid, f_mid
    return 0.5 * (lo + hi)
