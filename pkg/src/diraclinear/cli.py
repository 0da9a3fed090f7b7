"""Command-line front end: eigenvalue solves, wavefunction profiles,
tunneling-lifetime reports, and parameter sweeps.

Reports are line-oriented ``name: value`` pairs; tabular output is CSV
with ``#``-prefixed comment lines, a header row, and full-precision
decimal floats.  Energies are in GeV, radii in GeV^-1 (natural units),
and the linear slope lambda in GeV^2.  A key=value config file can seed
any run; explicit flags override file values.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass, fields, replace

import numpy as np

from .analytic import equal_mix_energy
from .errors import BracketError, ConsistencyError, ScanError
from .model import (
    BindingClass,
    Particle,
    PotentialMix,
    QuantumNumbers,
    RadialGrid,
    classify_binding,
    potentials,
    turning_points,
)
from .shooting import (
    estimate_quasibound_energy,
    find_bound_state,
    integrate_radial,
    suggest_bracket,
)
from .tunneling import gamma_mixed, gamma_pure_vector, lifetime_ratio


class UsageError(ValueError):
    """Bad flags or config entries; maps to exit code 2."""


@dataclass(frozen=True)
class RunConfig:
    """Effective run parameters after merging defaults, config file, flags."""

    m: float = 1.0
    lam: float = 0.2
    s: float = 0.5
    k: int = -1
    zero_index: int = 1
    r_max: float = 25.0
    n: int = 20000
    out: str | None = None
    energy: float | None = None

    def validate(self) -> "RunConfig":
        Particle(self.m)
        PotentialMix(self.lam, self.s)
        QuantumNumbers(self.k)
        if self.zero_index < 1:
            raise UsageError("zero_index must be >= 1")
        self.grid()  # validates r_max and n
        return self

    def mix(self) -> PotentialMix:
        return PotentialMix(self.lam, self.s)

    def grid(self) -> RadialGrid:
        return RadialGrid(r_min=1e-6 * self.r_max, r_max=self.r_max, n=self.n)


_CONFIG_KEYS = {
    "m": ("m", float),
    "lambda": ("lam", float),
    "s": ("s", float),
    "k": ("k", int),
    "zero_index": ("zero_index", int),
    "rmax": ("r_max", float),
    "n": ("n", int),
    "out": ("out", str),
    "energy": ("energy", float),
}


def read_config(path: str) -> dict:
    """Parse a key=value config file; '#' starts a comment."""
    values = {}
    with open(path, "r", encoding="utf-8") as fh:
        for lineno, raw in enumerate(fh, 1):
            line = raw.split("#", 1)[0].strip()
            if not line:
                continue
            if "=" not in line:
                raise UsageError(f"{path}:{lineno}: expected key=value, got {raw.strip()!r}")
            key, _, val = line.partition("=")
            key = key.strip()
            if key not in _CONFIG_KEYS:
                raise UsageError(f"{path}:{lineno}: unknown config key {key!r}")
            attr, cast = _CONFIG_KEYS[key]
            try:
                values[attr] = cast(val.strip())
            except ValueError as exc:
                raise UsageError(f"{path}:{lineno}: bad value for {key!r}: {exc}") from exc
    return values


def dump_config(cfg: RunConfig) -> str:
    lines = ["# dirac-linear run configuration"]
    by_attr = {attr: key for key, (attr, _) in _CONFIG_KEYS.items()}
    for f in fields(cfg):
        val = getattr(cfg, f.name)
        if val is None:
            continue
        lines.append(f"{by_attr[f.name]}={val}")
    return "\n".join(lines) + "\n"


def _fmt(x) -> str:
    if x is None:
        return ""
    if isinstance(x, BindingClass):
        return x.value
    if isinstance(x, (float, np.floating)):
        return repr(float(x))
    return str(x)


def _write_csv(path, comment_fields, header, rows):
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("# " + " ".join(f"{k}={_fmt(v)}" for k, v in comment_fields) + "\n")
            fh.write(",".join(header) + "\n")
            for row in rows:
                fh.write(",".join(_fmt(c) for c in row) + "\n")
    except OSError as exc:
        raise UsageError(f"cannot write {path}: {exc}") from exc


def _report(pairs):
    for name, value in pairs:
        print(f"{name}: {_fmt(value)}")


def _quasibound_with_spread(cfg: RunConfig):
    mix, grid = cfg.mix(), cfg.grid()
    e = estimate_quasibound_energy(cfg.m, mix, cfg.k, grid)
    lo = estimate_quasibound_energy(cfg.m, mix, cfg.k, grid, midpoint_scale=0.9)
    hi = estimate_quasibound_energy(cfg.m, mix, cfg.k, grid, midpoint_scale=1.1)
    return e, abs(hi - lo)


def _solve_bound(cfg: RunConfig):
    bracket = suggest_bracket(cfg.m, cfg.mix(), cfg.k, cfg.grid())
    return find_bound_state(cfg.m, cfg.mix(), cfg.k, bracket, cfg.grid())


def _profile_rows(cfg: RunConfig, sol):
    mix = cfg.mix()
    v_pot, s_pot = potentials(mix, sol.r)
    return zip(sol.r, sol.u, sol.v, v_pot, s_pot)


def cmd_solve(cfg: RunConfig) -> int:
    binding = classify_binding(cfg.mix())
    pairs = [("binding", binding)]
    sol = None
    if cfg.s == 0.5:
        e_analytic = equal_mix_energy(cfg.m, cfg.lam, cfg.zero_index)
        sol = _solve_bound(cfg)
        pairs += [("analytic_energy_gev", e_analytic),
                  ("shooting_energy_gev", sol.E),
                  ("difference_gev", abs(sol.E - e_analytic))]
        e_used = sol.E
    elif cfg.s > 0.5:
        sol = _solve_bound(cfg)
        pairs += [("shooting_energy_gev", sol.E)]
        e_used = sol.E
    else:
        e_used, spread = _quasibound_with_spread(cfg)
        pairs += [("quasibound_energy_gev", e_used),
                  ("truncation_spread_gev", spread)]
    tp = turning_points(cfg.m, e_used, cfg.mix())
    pairs += [("r1", tp.r1)]
    if tp.r2 is not None:
        pairs += [("r2", tp.r2), ("r3", tp.r3)]
    _report(pairs)
    if cfg.out:
        if sol is None:
            sol = integrate_radial(cfg.m, cfg.mix(), cfg.k, e_used, cfg.grid())
        _write_csv(cfg.out, _comment_fields(cfg, sol.E),
                   ["r", "u", "v", "V", "S"], _profile_rows(cfg, sol))
    return 0


def _comment_fields(cfg: RunConfig, energy):
    return [("m", cfg.m), ("lambda", cfg.lam), ("s", cfg.s), ("k", cfg.k),
            ("E", energy)]


def cmd_profile(cfg: RunConfig) -> int:
    if not cfg.out:
        raise UsageError("profile requires --out <path> for the CSV")
    if cfg.s >= 0.5:
        sol = _solve_bound(cfg)
    else:
        e = estimate_quasibound_energy(cfg.m, cfg.mix(), cfg.k, cfg.grid())
        sol = integrate_radial(cfg.m, cfg.mix(), cfg.k, e, cfg.grid())
    _write_csv(cfg.out, _comment_fields(cfg, sol.E),
               ["r", "u", "v", "V", "S"], _profile_rows(cfg, sol))
    print(f"wrote {cfg.out} ({cfg.n + 1} rows), E = {sol.E!r} GeV")
    return 0


def cmd_lifetime(cfg: RunConfig) -> int:
    if cfg.s >= 0.5:
        raise ValueError("state is strictly bound (s >= 0.5); no tunneling")
    if cfg.energy is not None:
        if not (cfg.energy > cfg.m):
            raise UsageError("--energy must exceed the mass m")
        e, source, spread = cfg.energy, "user", None
    else:
        e, spread = _quasibound_with_spread(cfg)
        source = "estimated"
    rep = gamma_mixed(cfg.m, cfg.mix(), e)
    pairs = [("binding", classify_binding(cfg.mix())),
             ("energy_gev", e),
             ("energy_source", source)]
    if spread is not None:
        pairs.append(("truncation_spread_gev", spread))
    pairs += [("gamma", rep.gamma),
              ("tau_over_tau0", rep.tau_ratio),
              ("r1", rep.r1), ("r2", rep.r2), ("r3", rep.r3)]
    _report(pairs)
    return 0


def cmd_sweep(cfg: RunConfig, param: str, lo: float, hi: float, steps: int) -> int:
    if not cfg.out:
        raise UsageError("sweep requires --out <path> for the CSV")
    if steps < 2:
        raise UsageError("sweep needs at least 2 steps")
    attr = {"s": "s", "lambda": "lam", "m": "m"}[param]
    rows = []
    for value in np.linspace(lo, hi, steps):
        row_cfg = replace(cfg, **{attr: float(value)})
        try:
            row_cfg.validate()
        except ValueError as exc:
            raise UsageError(f"sweep value {param}={value} out of domain: {exc}") from exc
        mix = row_cfg.mix()
        binding = classify_binding(mix)
        if binding is BindingClass.STRICTLY_BOUND:
            e = find_bound_state(
                row_cfg.m, mix, row_cfg.k,
                suggest_bracket(row_cfg.m, mix, row_cfg.k, row_cfg.grid()),
                row_cfg.grid()).E
            gamma = tau = r2 = r3 = None
            r1 = turning_points(row_cfg.m, e, mix).r1
        else:
            e = estimate_quasibound_energy(row_cfg.m, mix, row_cfg.k, row_cfg.grid())
            rep = gamma_mixed(row_cfg.m, mix, e)
            gamma, tau, r1, r2, r3 = rep.gamma, rep.tau_ratio, rep.r1, rep.r2, rep.r3
        rows.append([param, float(value), e, gamma, tau, r1, r2, r3, binding])
    _write_csv(cfg.out, _comment_fields(cfg, None)[:4] + [("param", param)],
               ["param", "value", "E", "gamma", "tau_ratio", "r1", "r2", "r3", "binding"],
               rows)
    print(f"wrote {cfg.out} ({steps} rows)")
    return 0


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--config", metavar="PATH", help="key=value config file")
    common.add_argument("--m", type=float, help="fermion mass in GeV (default 1.0)")
    common.add_argument("--lambda", dest="lam", type=float,
                        help="linear slope in GeV^2 (default 0.2)")
    common.add_argument("--s", type=float, help="scalar fraction in [0, 1] (default 0.5)")
    common.add_argument("--k", type=int, help="Dirac quantum number (default -1)")
    common.add_argument("--zero-index", dest="zero_index", type=int,
                        help="Airy zero index for equal-mix states (default 1)")
    common.add_argument("--rmax", dest="r_max", type=float,
                        help="outer grid radius in GeV^-1 (default 25)")
    common.add_argument("--n", type=int, help="number of grid steps (default 20000)")
    common.add_argument("--out", metavar="PATH", help="CSV output path")
    common.add_argument("--dump-config", action="store_true",
                        help="print the effective configuration and exit")

    parser = argparse.ArgumentParser(
        prog="dirac-linear",
        description="One-body radial Dirac equation with a linear confining "
                    "potential of arbitrary Lorentz vector/scalar mix "
                    "(natural units; energies in GeV).")
    sub = parser.add_subparsers(dest="command", required=True)
    sub.add_parser("solve", parents=[common],
                   help="eigenvalue report (analytic and/or shooting)")
    sub.add_parser("profile", parents=[common],
                   help="write the radial wavefunction profile as CSV")
    life = sub.add_parser("lifetime", parents=[common],
                          help="Gamow barrier integral and lifetime ratio")
    life.add_argument("--energy", type=float,
                      help="evaluate the barrier at this energy instead of "
                           "the quasi-bound estimate")
    sweep = sub.add_parser("sweep", parents=[common],
                           help="sweep s, lambda, or m and tabulate")
    sweep.add_argument("--param", required=True, choices=["s", "lambda", "m"])
    sweep.add_argument("--range", nargs=2, type=float, required=True,
                       metavar=("LO", "HI"))
    sweep.add_argument("--steps", type=int, default=25,
                       help="number of rows (default 25)")
    return parser


def make_config(args) -> RunConfig:
    values = {}
    if args.config:
        try:
            values.update(read_config(args.config))
        except OSError as exc:
            raise UsageError(f"cannot read config: {exc}") from exc
    for attr in ("m", "lam", "s", "k", "zero_index", "r_max", "n", "out", "energy"):
        flag = getattr(args, attr, None)
        if flag is not None:
            values[attr] = flag
    try:
        return RunConfig(**values).validate()
    except ValueError as exc:
        raise UsageError(str(exc)) from exc


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        cfg = make_config(args)
        if args.dump_config:
            text = dump_config(cfg)
            if cfg.out:
                with open(cfg.out, "w", encoding="utf-8") as fh:
                    fh.write(text)
            else:
                sys.stdout.write(text)
            return 0
        if args.command == "solve":
            return cmd_solve(cfg)
        if args.command == "profile":
            return cmd_profile(cfg)
        if args.command == "lifetime":
            return cmd_lifetime(cfg)
        if args.command == "sweep":
            lo, hi = args.range
            return cmd_sweep(cfg, args.param, lo, hi, args.steps)
        raise UsageError(f"unknown command {args.command!r}")
    except UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    except (ValueError, ScanError, BracketError, ConsistencyError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


def entry() -> None:
    sys.exit(main())


if __name__ == "__main__":
    entry()
