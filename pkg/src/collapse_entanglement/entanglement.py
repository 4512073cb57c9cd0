"""Negativity of the reduced states.

Negativity = sum of |negative eigenvalues| of the density matrix partially
transposed on Alice's two-level index.  In the row-major Alice-outermost
layout the partial transpose is a swap of the two off-diagonal half-blocks.

Eigenvalues below -1e-12 (absolute) count as genuinely negative; dense
spectra of near-separable states otherwise produce spurious ~1e-15
negativities.  The floor is absolute, not relative, because the negativity
itself vanishes in the small-mass limit.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .fock import Truncation
from .state import (
    DensityMatrix,
    ModeSplit,
    SqueezingParams,
    psi_amplitudes,
    reduce_to_a_hor,
    reduce_to_a_out,
    squeezing_parameter,
)

EIG_FLOOR = 1e-12


@dataclass(frozen=True)
class NegativityResult:
    value: float
    n_max_used: int
    tail_bound: float
    converged: bool
    ladder: tuple = field(default_factory=tuple)


@dataclass(frozen=True)
class ConvergencePolicy:
    """Truncation-doubling policy: stop when the last two rungs agree."""

    start_n_max: int = 8
    rel_tol: float = 1e-8
    abs_tol: float = 1e-10
    tail_tol: float = 1e-10
    n_max_cap: int = 512


def partial_transpose_alice(matrix: np.ndarray) -> np.ndarray:
    """Transpose on the two-level (outermost) index only.

    Output[(a, n), (a', n')] = input[(a', n), (a, n')]: the two off-diagonal
    half-blocks trade places.  Involution; preserves the trace.
    """
    matrix = np.asarray(matrix)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] % 2:
        raise ValueError(f"expected a square matrix of even dimension, got shape {matrix.shape}")
    half = matrix.shape[0] // 2
    out = matrix.copy()
    out[:half, half:] = matrix[half:, :half]
    out[half:, :half] = matrix[:half, half:]
    return out


def symmetric_eigenvalues(matrix: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    """Full ascending spectrum of a real symmetric matrix (LAPACK eigh)."""
    matrix = np.asarray(matrix, dtype=float)
    if not np.all(np.isfinite(matrix)):
        raise ValueError("matrix has non-finite entries")
    asym = np.max(np.abs(matrix - matrix.T)) if matrix.size else 0.0
    if asym > max(tol, 1e-12):
        raise ValueError(f"matrix asymmetry {asym:.3e} exceeds tolerance")
    return np.linalg.eigvalsh(matrix)


def negativity(rho: DensityMatrix, eig_floor: float = EIG_FLOOR) -> NegativityResult:
    """Sum of |negative eigenvalues| of the Alice partial transpose of rho."""
    evs = symmetric_eigenvalues(partial_transpose_alice(rho.entries))
    value = float(-np.sum(evs[evs < -eig_floor])) + 0.0  # avoid -0.0
    return NegativityResult(
        value=value,
        n_max_used=rho.trunc.n_max,
        tail_bound=rho.tail_bound,
        converged=True,
    )


def negativity_blockwise_qr1(
    s: SqueezingParams, t: Truncation, eig_floor: float = EIG_FLOOR
) -> NegativityResult:
    """Fast path at q_r = 1, linear in n_max.

    With q_l = 0 the partially transposed Alice x out matrix couples only the
    pairs {|0, n+1>, |1, n>}; the remaining states |0,0> and |1, n_max> are
    decoupled with non-negative diagonals.  Block data, T = tanh r, C = cosh r:

        d1 = T^{2(n+1)} / (2 C^2)        (|0, n+1> diagonal)
        d2 = n T^{2(n-1)} / (2 C^4)      (|1, n> diagonal, 0 at n = 0)
        c  = sqrt(n+1) T^{2n} / (2 C^3)  (coupling)

    Each 2x2 block contributes its lower eigenvalue when d1 d2 < c^2, which
    always holds here since d1 d2 / c^2 = n / (n+1).
    """
    s.require_regular()
    tt = s.tanh_r
    c2 = s.cosh_r * s.cosh_r
    total = 0.0
    for n in range(t.n_max):
        d1 = tt ** (2 * (n + 1)) / (2.0 * c2)
        d2 = n * tt ** (2 * (n - 1)) / (2.0 * c2 * c2) if n > 0 else 0.0
        c = math.sqrt(n + 1) * tt ** (2 * n) / (2.0 * c2 * s.cosh_r)
        lo = 0.5 * (d1 + d2 - math.hypot(d1 - d2, 2.0 * c))
        if lo < -eig_floor:
            total -= lo
    from .state import _series_tail

    return NegativityResult(
        value=total,
        n_max_used=t.n_max,
        tail_bound=_series_tail(s.tanh_r, t.n_max),
        converged=True,
    )


def _single_negativity(
    s: SqueezingParams, q: ModeSplit, which: str, t: Truncation
) -> NegativityResult:
    psi = psi_amplitudes(s, q, t)
    if which == "A-out":
        rho = reduce_to_a_out(psi, s, q)
    elif which == "A-hor":
        rho = reduce_to_a_hor(psi, s, q)
    else:
        raise ValueError(f"unknown channel {which!r}")
    return negativity(rho)


def converged_negativity(
    m_omega: float,
    q: ModeSplit,
    which: str = "A-out",
    policy: ConvergencePolicy = ConvergencePolicy(),
) -> NegativityResult:
    """Negativity at adaptively chosen truncation.

    Doubles n_max until the last two rungs agree within rel_tol*value +
    abs_tol and the analytic tail bound drops below tail_tol.  m_omega = 0
    short-circuits to the analytic singular limit (negativity 0).  Exceeding
    the cap returns a non-converged result with its ladder, never raises.
    """
    if not (isinstance(m_omega, (int, float)) and math.isfinite(m_omega) and m_omega >= 0):
        raise ValueError(f"m_omega must be a finite non-negative real, got {m_omega!r}")
    if m_omega == 0:
        return NegativityResult(value=0.0, n_max_used=0, tail_bound=0.0, converged=True)
    s = squeezing_parameter(m_omega)
    ladder: list[tuple[int, float, float]] = []
    prev: float | None = None
    n = policy.start_n_max
    while True:
        n = min(n, policy.n_max_cap)
        res = _single_negativity(s, q, which, Truncation(n))
        ladder.append((n, res.value, res.tail_bound))
        if (
            prev is not None
            and abs(res.value - prev) < policy.rel_tol * abs(res.value) + policy.abs_tol
            and res.tail_bound < policy.tail_tol
        ):
            return NegativityResult(
                value=res.value,
                n_max_used=n,
                tail_bound=res.tail_bound,
                converged=True,
                ladder=tuple(ladder),
            )
        prev = res.value
        if n >= policy.n_max_cap:
            return NegativityResult(
                value=res.value,
                n_max_used=n,
                tail_bound=res.tail_bound,
                converged=False,
                ladder=tuple(ladder),
            )
        n *= 2
