"""Collapse-state builders.

The dimensionless product m*Omega (black-hole mass times probed out-mode
frequency, geometric units) fixes a two-mode squeezing angle via
tanh(r) = exp(-4*pi*m*Omega).  Everything downstream (the expansion of the
initially maximally entangled state on the out/hor Fock basis, the reduced
density matrices, the thermal reduction of the vacuum) is built from that
single parameter plus the mode-superposition weight q_R.

All amplitudes are real in this basis, so density matrices are stored as
real symmetric arrays.  Truncation error is carried as an explicit analytic
tail bound (closed-form series remainder) instead of renormalizing, so the
norm/trace deficit of every object is a first-class, testable quantity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .fock import BasisIndex, Truncation, flat_index

SQRT_HALF = 2.0 ** -0.5


class SingularLimitError(ValueError):
    """Raised when m*Omega = 0 (infinite squeezing) reaches a numeric path.

    At m*Omega = 0 the squeezed series does not converge at any finite
    truncation; callers must use the analytic limit (negativity 0) instead.
    """


@dataclass(frozen=True)
class SqueezingParams:
    """Squeezing angle r with cached hyperbolics, tanh(r) = exp(-4*pi*m_omega)."""

    m_omega: float
    r: float
    tanh_r: float
    cosh_r: float

    @property
    def is_singular(self) -> bool:
        return not math.isfinite(self.r)

    def require_regular(self) -> None:
        if self.is_singular:
            raise SingularLimitError(
                "m*Omega = 0 is the singular limit (tanh r = 1); use the "
                "analytic limit (negativity 0) instead of a truncated series"
            )


@dataclass(frozen=True)
class ModeSplit:
    """Superposition weights of the two past-mode families, q_r^2 + q_l^2 = 1."""

    q_r: float
    q_l: float

    @classmethod
    def from_q_r(cls, q_r: float) -> "ModeSplit":
        if not (SQRT_HALF - 1e-12 <= q_r <= 1.0 + 1e-12):
            raise ValueError(
                f"q_r={q_r} outside the allowed range [2^(-1/2), 1]"
            )
        q_r = min(max(q_r, SQRT_HALF), 1.0)
        return cls(q_r=q_r, q_l=math.sqrt(max(0.0, 1.0 - q_r * q_r)))


@dataclass(frozen=True)
class TripartiteAmplitudes:
    """Real amplitudes of the entangled state on the truncated tripartite basis.

    Only patterns (alice=0, n, n), (1, n+1, n) and (1, n, n+1) are populated.
    tail_bound is the exact norm deficit 1 - <psi|psi> of the truncation.
    """

    trunc: Truncation
    amps: np.ndarray
    tail_bound: float


@dataclass(frozen=True)
class DensityMatrix:
    """Real symmetric reduced density matrix on Alice x mode, plus trace deficit."""

    trunc: Truncation
    entries: np.ndarray
    which_mode: str
    tail_bound: float

    @property
    def trace(self) -> float:
        return float(np.trace(self.entries))


def squeezing_parameter(m_omega: float) -> SqueezingParams:
    """Squeezing parameters for a given dimensionless mass*frequency product.

    m_omega = 0 yields a distinguished singular-limit value: tanh r = 1,
    r = inf.  Only limit-aware callers may consume it.
    """
    if not (isinstance(m_omega, (int, float)) and math.isfinite(m_omega)):
        raise ValueError(f"m_omega must be finite, got {m_omega!r}")
    if m_omega < 0:
        raise ValueError(f"m_omega must be >= 0, got {m_omega}")
    tanh_r = math.exp(-4.0 * math.pi * m_omega)
    if m_omega == 0:
        return SqueezingParams(m_omega=0.0, r=math.inf, tanh_r=1.0, cosh_r=math.inf)
    r = math.atanh(tanh_r)
    cosh_r = 1.0 / math.sqrt(1.0 - tanh_r * tanh_r)
    return SqueezingParams(m_omega=float(m_omega), r=r, tanh_r=tanh_r, cosh_r=cosh_r)


def squeezed_vacuum_amplitudes(s: SqueezingParams, t: Truncation) -> np.ndarray:
    """Schmidt coefficients tanh^n(r)/cosh(r) of the in-vacuum, n = 0..n_max."""
    s.require_regular()
    powers = s.tanh_r ** np.arange(t.levels)
    return powers / s.cosh_r


def _series_tail(tanh_r: float, n_max: int) -> float:
    """Norm deficit of the truncated state expansion, in closed form.

    Ground series remainder:  sum_{n>n_max} T^{2n} / (2 C^2) = T^{2(n_max+1)} / 2.
    Excited series remainder: sum_{n>=n_max} (n+1) T^{2n} / (2 C^4)
                            = T^{2 n_max} (n_max (1 - T^2) + 1) / 2.
    """
    t2 = tanh_r * tanh_r
    ground = 0.5 * t2 ** (n_max + 1)
    excited = 0.5 * (t2 ** n_max) * (n_max * (1.0 - t2) + 1.0)
    return ground + excited


def psi_amplitudes(s: SqueezingParams, q: ModeSplit, t: Truncation) -> TripartiteAmplitudes:
    """Expand the maximally entangled initial state on the out/hor basis.

    amp(0, n, n)   = tanh^n r / (sqrt(2) cosh r)
    amp(1, n+1, n) = q_r sqrt(n+1) tanh^n r / (sqrt(2) cosh^2 r)
    amp(1, n, n+1) = q_l sqrt(n+1) tanh^n r / (sqrt(2) cosh^2 r)
    """
    s.require_regular()
    n_max = t.n_max
    amps = np.zeros(t.dimension("tripartite"))
    powers = s.tanh_r ** np.arange(n_max + 1)
    ground = SQRT_HALF * powers / s.cosh_r
    excited = SQRT_HALF * np.sqrt(np.arange(1, n_max + 1)) * powers[:-1] / s.cosh_r**2
    for n in range(n_max + 1):
        amps[flat_index(BasisIndex(0, n, n), t)] = ground[n]
    for n in range(n_max):
        amps[flat_index(BasisIndex(1, n + 1, n), t)] = q.q_r * excited[n]
        amps[flat_index(BasisIndex(1, n, n + 1), t)] = q.q_l * excited[n]
    return TripartiteAmplitudes(trunc=t, amps=amps, tail_bound=_series_tail(s.tanh_r, n_max))


def _extract_series(psi: TripartiteAmplitudes) -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """Pull the three nonzero amplitude families back out of the flat vector."""
    t = psi.trunc
    n_max = t.n_max
    a0 = np.array([psi.amps[flat_index(BasisIndex(0, n, n), t)] for n in range(n_max + 1)])
    ar = np.array([psi.amps[flat_index(BasisIndex(1, n + 1, n), t)] for n in range(n_max)])
    al = np.array([psi.amps[flat_index(BasisIndex(1, n, n + 1), t)] for n in range(n_max)])
    return a0, ar, al


def reduce_to_a_out(psi: TripartiteAmplitudes, s: SqueezingParams, q: ModeSplit) -> DensityMatrix:
    """Trace the infalling mode out of |psi><psi| (Alice x out reduced state)."""
    return _reduce(psi, keep="out")


def reduce_to_a_hor(psi: TripartiteAmplitudes, s: SqueezingParams, q: ModeSplit) -> DensityMatrix:
    """Trace the outgoing mode out of |psi><psi| (Alice x hor reduced state)."""
    return _reduce(psi, keep="hor")


def _reduce(psi: TripartiteAmplitudes, keep: str) -> DensityMatrix:
    """Closed-form partial trace exploiting the sparse amplitude pattern.

    Keeping `out`: the traced index is the hor occupation; amplitude pairs
    sharing it produce O(n_max) nonzero matrix entries.  Keeping `hor` swaps
    the roles of the two excited series.
    """
    t = psi.trunc
    n_max = t.n_max
    levels = t.levels
    a0, ar, al = _extract_series(psi)
    if keep == "hor":
        ar, al = al, ar
    m = np.zeros((2 * levels, 2 * levels))

    def bi(alice: int, n: int) -> int:
        return alice * levels + n

    for n in range(n_max + 1):
        m[bi(0, n), bi(0, n)] = a0[n] * a0[n]
    for k in range(1, n_max + 1):
        m[bi(1, k), bi(1, k)] += ar[k - 1] * ar[k - 1]
    for k in range(n_max):
        m[bi(1, k), bi(1, k)] += al[k] * al[k]
    for n in range(n_max - 1):
        v = al[n] * ar[n + 1]
        m[bi(1, n), bi(1, n + 2)] = v
        m[bi(1, n + 2), bi(1, n)] = v
    for n in range(n_max):
        v = a0[n] * ar[n]
        m[bi(0, n), bi(1, n + 1)] = v
        m[bi(1, n + 1), bi(0, n)] = v
        v = a0[n + 1] * al[n]
        m[bi(0, n + 1), bi(1, n)] = v
        m[bi(1, n), bi(0, n + 1)] = v
    which = "out" if keep == "out" else "hor"
    return DensityMatrix(trunc=t, entries=m, which_mode=which, tail_bound=psi.tail_bound)


def thermal_reduction(s: SqueezingParams, t: Truncation) -> DensityMatrix:
    """Single-mode thermal state seen at future infinity: diag (tanh^2 r)^n / cosh^2 r."""
    s.require_regular()
    t2 = s.tanh_r * s.tanh_r
    diag = (t2 ** np.arange(t.levels)) / s.cosh_r**2
    return DensityMatrix(
        trunc=t,
        entries=np.diag(diag),
        which_mode="out",
        tail_bound=t2 ** t.levels,
    )


def thermal_mean_occupation_exact(m_omega: float) -> float:
    """Planck occupation 1/(exp(8 pi m_omega) - 1) of the untruncated thermal state."""
    if m_omega <= 0:
        raise ValueError(f"m_omega must be > 0, got {m_omega}")
    return 1.0 / math.expm1(8.0 * math.pi * m_omega)


def thermal_mean_occupation_tail(m_omega: float, n_max: int) -> float:
    """Closed-form deficit of the truncated thermal mean occupation.

    sum_{n>n_max} n (1-x) x^n  with  x = tanh^2 r = exp(-8 pi m_omega).
    """
    x = math.exp(-8.0 * math.pi * m_omega)
    n1 = n_max + 1
    return (x**n1) * (n1 - n_max * x) / (1.0 - x)


def hawking_temperature(m: float) -> float:
    """Horizon temperature 1/(8 pi m), geometric units."""
    if not (m > 0 and math.isfinite(m)):
        raise ValueError(f"mass must be positive and finite, got {m}")
    return 1.0 / (8.0 * math.pi * m)
