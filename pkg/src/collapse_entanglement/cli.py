"""Sweep front end.

Runs negativity over a grid of (m*Omega, q_r) points and writes a CSV that
reproduces the published degradation curves: negativity of the Alice/outgoing
and Alice/infalling channels against the mass-frequency product for a family
of q_r values.  Output is deterministic and byte-stable regardless of how the
grid points are scheduled (results are sorted after gathering).

Exit codes: 0 all points converged, 2 some points non-converged, 1 usage or
configuration error.
"""

from __future__ import annotations

import argparse
import math
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, replace

import numpy as np

from .bogoliubov import (
    CollapseGeometry,
    alpha,
    alpha_modulus_sq_closed_form,
    beta_gamma_delta,
)
from .entanglement import ConvergencePolicy, converged_negativity
from .state import SQRT_HALF, ModeSplit

CSV_HEADER = "m_omega,q_r,channel,negativity,n_max_used,tail_bound,converged"
BOGO_HEADER = (
    "omega,capital_omega,abs_alpha,arg_alpha,"
    "residual_beta,residual_gamma,residual_delta,residual_alpha_modulus"
)

DEFAULT_M_OMEGA_SPEC = "0.005:2:60:log"
DEFAULT_Q_R = (1.0, 0.9, 0.8, SQRT_HALF)
CHANNELS = ("A-out", "A-hor")

# Default diagnostic grid: m = 1, so omega carries m*omega directly.
BOGO_DEFAULT_M_OMEGA = (0.01, 0.1, 0.5, 1.0, 2.0)
BOGO_DEFAULT_RATIOS = (0.5, 1.0, 2.0)


class ConfigError(ValueError):
    pass


@dataclass(frozen=True)
class SweepConfig:
    m_omega_grid: tuple[float, ...]
    q_r_values: tuple[float, ...]
    channels: tuple[str, ...]
    rel_tol: float = 1e-8
    abs_tol: float = 1e-10
    tail_tol: float = 1e-10
    n_max_cap: int = 512
    output_path: str = "sweep.csv"
    bogo_path: str | None = None
    jobs: int = 1

    def policy(self) -> ConvergencePolicy:
        return ConvergencePolicy(
            rel_tol=self.rel_tol,
            abs_tol=self.abs_tol,
            tail_tol=self.tail_tol,
            n_max_cap=self.n_max_cap,
        )


@dataclass(frozen=True)
class SweepRow:
    m_omega: float
    q_r: float
    channel: str
    negativity: float
    n_max_used: int
    tail_bound: float
    converged: bool


@dataclass(frozen=True)
class SweepResult:
    rows: tuple[SweepRow, ...]

    @property
    def all_converged(self) -> bool:
        return all(r.converged for r in self.rows)


def _parse_float(text: str, where: str) -> float:
    try:
        return float(text)
    except ValueError:
        raise ConfigError(f"malformed number {text!r} in {where}") from None


def parse_m_omega_spec(spec: str) -> tuple[float, ...]:
    """Grid spec: single value, comma list, or min:max:count[:log|:linear]."""
    spec = spec.strip()
    if ":" in spec:
        parts = spec.split(":")
        if len(parts) not in (3, 4):
            raise ConfigError(f"range spec {spec!r} must be min:max:count[:log]")
        lo = _parse_float(parts[0], f"range spec {spec!r} (min)")
        hi = _parse_float(parts[1], f"range spec {spec!r} (max)")
        try:
            count = int(parts[2])
        except ValueError:
            raise ConfigError(f"malformed count {parts[2]!r} in range spec {spec!r}") from None
        if count < 1:
            raise ConfigError(f"range count must be >= 1, got {count}")
        spacing = parts[3] if len(parts) == 4 else "linear"
        if spacing == "log":
            if lo <= 0 or hi <= 0:
                raise ConfigError("log spacing requires positive endpoints")
            grid = np.geomspace(lo, hi, count)
        elif spacing == "linear":
            grid = np.linspace(lo, hi, count)
        else:
            raise ConfigError(f"unknown spacing {spacing!r} (expected 'log' or 'linear')")
        values = tuple(float(v) for v in grid)
    else:
        values = tuple(
            _parse_float(p, f"m_omega list, item {i + 1}") for i, p in enumerate(spec.split(","))
        )
    for v in values:
        if v < 0 or not math.isfinite(v):
            raise ConfigError(f"m_omega values must be finite and >= 0, got {v}")
    return values


def _parse_q_r_list(spec: str) -> tuple[float, ...]:
    values = tuple(_parse_float(p, f"q_r list, item {i + 1}") for i, p in enumerate(spec.split(",")))
    for v in values:
        if not (SQRT_HALF - 1e-12 <= v <= 1.0 + 1e-12):
            raise ConfigError(
                f"q_r={v} outside the allowed range [2^(-1/2), 1] "
                f"(mode-superposition weight constraint)"
            )
    return values


def _parse_channels(spec: str) -> tuple[str, ...]:
    if spec == "both":
        return CHANNELS
    if spec in CHANNELS:
        return (spec,)
    raise ConfigError(f"channel must be one of A-out, A-hor, both; got {spec!r}")


_CONFIG_KEYS = {
    "m_omega",
    "q_r",
    "channel",
    "rel_tol",
    "abs_tol",
    "tail_tol",
    "n_max_cap",
    "out",
    "bogo_diagnostics",
    "jobs",
}


def _read_config_file(path: str) -> dict[str, str]:
    values: dict[str, str] = {}
    try:
        lines = open(path, encoding="utf-8").read().splitlines()
    except OSError as exc:
        raise ConfigError(f"cannot read config file {path}: {exc}") from None
    for lineno, raw in enumerate(lines, start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        if "=" not in line:
            raise ConfigError(f"{path}:{lineno}: expected 'key = value', got {raw!r}")
        key, _, value = line.partition("=")
        key = key.strip()
        if key not in _CONFIG_KEYS:
            raise ConfigError(f"{path}:{lineno}: unknown key {key!r}")
        values[key] = value.strip()
    return values


def _build_argparser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(
        prog="negativity-sweep",
        description="Negativity of Alice/outgoing and Alice/infalling mode "
        "entanglement across a forming horizon, swept over m*Omega and q_r.",
    )
    p.add_argument("--m-omega", help="value, comma list, or min:max:count[:log]")
    p.add_argument("--q-r", help="comma list of q_r values in [2^(-1/2), 1]")
    p.add_argument("--channel", help="A-out, A-hor, or both")
    p.add_argument("--rel-tol", type=float)
    p.add_argument("--abs-tol", type=float)
    p.add_argument("--tail-tol", type=float)
    p.add_argument("--n-max-cap", type=int)
    p.add_argument("--out", help="sweep CSV output path")
    p.add_argument("--bogo-diagnostics", help="also write Bogoliubov identity CSV here")
    p.add_argument("--config", help="flat key = value config file")
    p.add_argument("--jobs", type=int, help="parallel workers over grid points (default 1)")
    return p


def parse_config(argv: list[str] | None = None) -> SweepConfig:
    """CLI flags override config-file values; both override defaults."""
    ns = _build_argparser().parse_args(argv)
    file_vals = _read_config_file(ns.config) if ns.config else {}

    def pick(flag_value, file_key: str):
        if flag_value is not None:
            return flag_value
        return file_vals.get(file_key)

    m_omega_spec = pick(ns.m_omega, "m_omega") or DEFAULT_M_OMEGA_SPEC
    q_r_spec = pick(ns.q_r, "q_r")
    channel_spec = pick(ns.channel, "channel") or "both"

    cfg = SweepConfig(
        m_omega_grid=parse_m_omega_spec(str(m_omega_spec)),
        q_r_values=_parse_q_r_list(str(q_r_spec)) if q_r_spec else DEFAULT_Q_R,
        channels=_parse_channels(str(channel_spec)),
    )
    for attr, flag_value, file_key, conv in (
        ("rel_tol", ns.rel_tol, "rel_tol", float),
        ("abs_tol", ns.abs_tol, "abs_tol", float),
        ("tail_tol", ns.tail_tol, "tail_tol", float),
        ("n_max_cap", ns.n_max_cap, "n_max_cap", int),
        ("out", ns.out, "out", str),
        ("bogo_diagnostics", ns.bogo_diagnostics, "bogo_diagnostics", str),
        ("jobs", ns.jobs, "jobs", int),
    ):
        value = pick(flag_value, file_key)
        if value is None:
            continue
        try:
            value = conv(value)
        except ValueError:
            raise ConfigError(f"malformed value {value!r} for {file_key}") from None
        if attr == "out":
            cfg = replace(cfg, output_path=value)
        elif attr == "bogo_diagnostics":
            cfg = replace(cfg, bogo_path=value)
        else:
            cfg = replace(cfg, **{attr: value})
    for name in ("rel_tol", "abs_tol", "tail_tol"):
        if getattr(cfg, name) <= 0:
            raise ConfigError(f"{name} must be > 0, got {getattr(cfg, name)}")
    if cfg.n_max_cap < 1:
        raise ConfigError(f"n_max_cap must be >= 1, got {cfg.n_max_cap}")
    if not cfg.m_omega_grid or not cfg.q_r_values:
        raise ConfigError("grids must be non-empty")
    return cfg


def _compute_point(args: tuple[float, float, str, ConvergencePolicy]) -> SweepRow:
    m_omega, q_r, channel, policy = args
    res = converged_negativity(m_omega, ModeSplit.from_q_r(q_r), channel, policy)
    return SweepRow(
        m_omega=m_omega,
        q_r=q_r,
        channel=channel,
        negativity=res.value,
        n_max_used=res.n_max_used,
        tail_bound=res.tail_bound,
        converged=res.converged,
    )


def run_sweep(cfg: SweepConfig) -> SweepResult:
    """Evaluate every grid point; rows sorted by (channel, q_r, m_omega)."""
    policy = cfg.policy()
    points = [
        (m_omega, q_r, channel, policy)
        for channel in cfg.channels
        for q_r in cfg.q_r_values
        for m_omega in cfg.m_omega_grid
    ]
    if cfg.jobs > 1:
        with ProcessPoolExecutor(max_workers=cfg.jobs) as pool:
            rows = list(pool.map(_compute_point, points, chunksize=1))
    else:
        rows = [_compute_point(p) for p in points]
    rows.sort(key=lambda r: (r.channel, r.q_r, r.m_omega))
    return SweepResult(rows=tuple(rows))


def _fmt(x: float) -> str:
    return format(float(x), ".17g")


def emit_csv(res: SweepResult, path: str) -> None:
    """Deterministic, newline-terminated CSV with 17-significant-digit floats."""
    lines = [CSV_HEADER]
    for r in res.rows:
        lines.append(
            f"{_fmt(r.m_omega)},{_fmt(r.q_r)},{r.channel},{_fmt(r.negativity)},"
            f"{r.n_max_used},{_fmt(r.tail_bound)},{'true' if r.converged else 'false'}"
        )
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        raise IOError(f"cannot write sweep CSV to {path}: {exc}") from None


def default_bogo_grid(geom: CollapseGeometry) -> tuple[tuple[float, float], ...]:
    return tuple(
        (m_omega / geom.m, ratio * m_omega / geom.m)
        for m_omega in BOGO_DEFAULT_M_OMEGA
        for ratio in BOGO_DEFAULT_RATIOS
    )


def emit_bogo_diagnostics(
    geom: CollapseGeometry,
    grid: tuple[tuple[float, float], ...],
    path: str,
) -> None:
    """CSV of |alpha|, arg alpha, and identity residuals over (omega, Omega)."""
    import cmath

    lines = [BOGO_HEADER]
    for omega, capital_omega in grid:
        a = alpha(omega, capital_omega, geom)
        b, g, d = beta_gamma_delta(omega, capital_omega, geom)
        tanh_r = math.exp(-4.0 * math.pi * geom.m * omega)
        phase = cmath.exp(-2j * capital_omega * geom.v_h)
        res_beta = abs(b + tanh_r * phase * a)
        res_gamma = abs(g - phase * a)
        res_delta = abs(d + tanh_r * a.conjugate())
        res_mod = abs(abs(a) ** 2 / alpha_modulus_sq_closed_form(omega, capital_omega, geom.m) - 1.0)
        lines.append(
            f"{_fmt(omega)},{_fmt(capital_omega)},{_fmt(abs(a))},{_fmt(cmath.phase(a))},"
            f"{_fmt(res_beta)},{_fmt(res_gamma)},{_fmt(res_delta)},{_fmt(res_mod)}"
        )
    try:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write("\n".join(lines) + "\n")
    except OSError as exc:
        raise IOError(f"cannot write diagnostics CSV to {path}: {exc}") from None


def main(argv: list[str] | None = None) -> int:
    try:
        cfg = parse_config(argv)
    except ConfigError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except SystemExit as exc:  # argparse usage errors
        return 0 if exc.code in (0, None) else 1
    result = run_sweep(cfg)
    emit_csv(result, cfg.output_path)
    if cfg.bogo_path is not None:
        geom = CollapseGeometry(m=1.0, v_h=0.0)
        emit_bogo_diagnostics(geom, default_bogo_grid(geom), cfg.bogo_path)
    n_bad = sum(not r.converged for r in result.rows)
    if n_bad:
        print(
            f"warning: {n_bad} of {len(result.rows)} grid points did not converge "
            f"within n_max_cap={cfg.n_max_cap}; rows flagged converged=false",
            file=sys.stderr,
        )
        return 2
    return 0


def entry_point() -> None:
    raise SystemExit(main())


if __name__ == "__main__":
    raise SystemExit(main())
