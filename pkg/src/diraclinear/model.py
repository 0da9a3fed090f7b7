"""Domain types for the one-body linear-potential Dirac problem.

Natural units (hbar = c = 1) throughout: masses and energies in GeV, the
linear slope lambda in GeV^2.  The potential is split into a Lorentz
vector part V(r) = (1-s)*lambda*r and a Lorentz scalar part
S(r) = s*lambda*r, with scalar fraction 0 <= s <= 1.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field

import numpy as np


class BindingClass(enum.Enum):
    """Whether a state is truly bound or can decay by Klein tunneling."""

    STRICTLY_BOUND = "StrictlyBound"
    QUASI_BOUND = "QuasiBound"


@dataclass(frozen=True)
class Particle:
    """A fermion of mass m > 0 (GeV)."""

    m: float

    def __post_init__(self):
        if not (self.m > 0):
            raise ValueError(f"mass must be positive, got {self.m}")


@dataclass(frozen=True)
class PotentialMix:
    """Linear potential of slope lam > 0 (GeV^2) with scalar fraction s in [0, 1]."""

    lam: float
    s: float

    def __post_init__(self):
        if not (self.lam > 0):
            raise ValueError(f"slope lam must be positive, got {self.lam}")
        if not (0.0 <= self.s <= 1.0):
            raise ValueError(f"scalar fraction s must lie in [0, 1], got {self.s}")


@dataclass(frozen=True)
class QuantumNumbers:
    """Dirac quantum number k != 0; k = -1 is the ground channel (j=1/2, l=0)."""

    k: int

    def __post_init__(self):
        if not isinstance(self.k, (int, np.integer)) or isinstance(self.k, bool):
            raise ValueError("k must be an integer")
        if self.k == 0:
            raise ValueError("k = 0 is not a valid Dirac quantum number")

    @property
    def j(self) -> float:
        return abs(self.k) - 0.5

    @property
    def l(self) -> int:
        return self.k if self.k > 0 else -self.k - 1


@dataclass(frozen=True)
class TurningPoints:
    """Radii bounding the allowed/forbidden/lifted-continuum regions.

    r1 is the classical turning point; r2 and r3 (present only for s < 1/2)
    mark where the lifted negative-energy continuum reaches the state energy:
    r2 for the full slope, r3 for the net continuum shift (1-2s)*lambda*r.
    """

    r1: float
    r2: float | None = None
    r3: float | None = None

    def __post_init__(self):
        if not (self.r1 > 0):
            raise ValueError("r1 must be positive")
        if (self.r2 is None) != (self.r3 is None):
            raise ValueError("r2 and r3 must be present or absent together")
        if self.r2 is not None and not (self.r1 < self.r2 <= self.r3):
            raise ValueError("turning points must satisfy r1 < r2 <= r3")


@dataclass(frozen=True)
class RadialGrid:
    """Uniform radial grid of n steps on [r_min, r_max]."""

    r_min: float
    r_max: float
    n: int

    def __post_init__(self):
        if not (0.0 < self.r_min < self.r_max):
            raise ValueError("grid requires 0 < r_min < r_max")
        if self.n < 100:
            raise ValueError("grid requires n >= 100 steps")

    @property
    def h(self) -> float:
        return (self.r_max - self.r_min) / self.n

    def radii(self) -> np.ndarray:
        return np.linspace(self.r_min, self.r_max, self.n + 1)


@dataclass
class RadialSolution:
    """Reduced radial wavefunctions u = r*f, v = r*g on a grid, with energy.

    node_count is the number of strict sign changes of u away from the
    endpoints.  A diverged flag marks outward integrations whose growing
    tail overflowed before reaching r_max (tail entries are NaN beyond the
    divergence point); divergence_sign records the sign of u there, which
    is the datum an eigenvalue bisection needs.
    """

    r: np.ndarray
    u: np.ndarray
    v: np.ndarray
    E: float
    node_count: int
    diverged: bool = False
    divergence_sign: int = 0
    grid: RadialGrid | None = field(default=None, repr=False)


def count_nodes(u: np.ndarray) -> int:
    """Strict sign changes of u over its interior (endpoints excluded)."""
    interior = u[1:-1]
    interior = interior[np.isfinite(interior)]
    s = np.sign(interior)
    s = s[s != 0]
    return int(np.count_nonzero(s[1:] * s[:-1] < 0))


def potentials(mix: PotentialMix, r):
    """Vector and scalar parts (V, S) of the linear potential at radius r >= 0.

    V + S = lambda*r exactly for any scalar fraction.
    """
    arr = np.asarray(r, dtype=float)
    if np.any(arr < 0):
        raise ValueError("radius must be nonnegative")
    v = (1.0 - mix.s) * mix.lam * arr
    s = mix.s * mix.lam * arr
    if arr.ndim == 0:
        return float(v), float(s)
    return v, s


def turning_points(m: float, E: float, mix: PotentialMix) -> TurningPoints:
    """Region geometry for a positive-energy state of mass m and energy E > m.

    r1 = (E-m)/lambda always; r2 = (E+m)/lambda and
    r3 = (E+m)/((1-2s)*lambda) exist only while the net continuum shift
    rises (s < 1/2).  For s >= 1/2 the negative-energy continuum is never
    lifted to E and r2, r3 are absent.
    """
    if not (m > 0):
        raise ValueError("mass must be positive")
    if not (E > m):
        raise ValueError(f"turning points require E > m (got E={E}, m={m})")
    r1 = (E - m) / mix.lam
    if mix.s >= 0.5:
        return TurningPoints(r1=r1)
    r2 = (E + m) / mix.lam
    r3 = (E + m) / ((1.0 - 2.0 * mix.s) * mix.lam)
    return TurningPoints(r1=r1, r2=r2, r3=r3)


def classify_binding(mix: PotentialMix) -> BindingClass:
    """StrictlyBound for scalar fraction s >= 1/2, else QuasiBound."""
    if mix.s >= 0.5:
        return BindingClass.STRICTLY_BOUND
    return BindingClass.QUASI_BOUND
