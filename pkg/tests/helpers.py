"""Independent oracles used across the test suite.

Everything here is deliberately written without reusing the library's
reduction or negativity code paths: brute-force partial traces over explicit
indices, ladder-operator state construction, and hand-derived closed forms.
"""

from __future__ import annotations

import math

import numpy as np

from collapse_entanglement.fock import BasisIndex, Truncation, flat_index
from collapse_entanglement.state import ModeSplit, SqueezingParams, TripartiteAmplitudes


def make_squeezing(tanh_r: float) -> SqueezingParams:
    """SqueezingParams directly from tanh(r), bypassing the m_omega relation."""
    if not 0.0 <= tanh_r < 1.0:
        raise ValueError("tanh_r must be in [0, 1)")
    m_omega = math.inf if tanh_r == 0.0 else -math.log(tanh_r) / (4.0 * math.pi)
    return SqueezingParams(
        m_omega=m_omega,
        r=math.atanh(tanh_r),
        tanh_r=tanh_r,
        cosh_r=1.0 / math.sqrt(1.0 - tanh_r * tanh_r),
    )


def mode_split(q_r: float) -> ModeSplit:
    """ModeSplit without the range restriction (test-only swap constructions)."""
    return ModeSplit(q_r=q_r, q_l=math.sqrt(max(0.0, 1.0 - q_r * q_r)))


def brute_force_reduction(psi: TripartiteAmplitudes, keep: str) -> np.ndarray:
    """Partial trace of |psi><psi| by explicit index summation."""
    t = psi.trunc
    levels = t.levels
    dim = 2 * levels
    rho = np.zeros((dim, dim))
    for a in range(2):
        for k in range(levels):
            for b in range(2):
                for kp in range(levels):
                    acc = 0.0
                    for m in range(levels):
                        if keep == "out":
                            i = flat_index(BasisIndex(a, k, m), t)
                            j = flat_index(BasisIndex(b, kp, m), t)
                        else:
                            i = flat_index(BasisIndex(a, m, k), t)
                            j = flat_index(BasisIndex(b, m, kp), t)
                        acc += psi.amps[i] * psi.amps[j]
                    rho[a * levels + k, b * levels + kp] = acc
    return rho


def closed_form_rho_out(s: SqueezingParams, q: ModeSplit, n_max: int) -> np.ndarray:
    """Alice x out reduced matrix built term-by-term from its closed-form sums.

    Sum limits are chosen so that every term's traced-out occupation and both
    out occupations fit inside the truncation, which makes the result equal to
    the partial trace of the truncated state (not of the infinite one).

    Note the q_r interference term carries T^{2n} (both factors come from the
    hor = n pairing), while the q_l interference term carries T^{2n+1}.
    """
    t_r, c_r = s.tanh_r, s.cosh_r
    levels = n_max + 1
    rho = np.zeros((2 * levels, 2 * levels))

    def at(a: int, n: int) -> int:
        return a * levels + n

    for n in range(n_max + 1):
        rho[at(0, n), at(0, n)] += t_r ** (2 * n) / (2 * c_r**2)
    for n in range(n_max):
        w = (n + 1) * t_r ** (2 * n) / (2 * c_r**4)
        rho[at(1, n + 1), at(1, n + 1)] += q.q_r**2 * w
        rho[at(1, n), at(1, n)] += q.q_l**2 * w
    for n in range(n_max - 1):
        w = math.sqrt((n + 1) * (n + 2)) * t_r ** (2 * n + 1) / (2 * c_r**4) * q.q_r * q.q_l
        rho[at(1, n), at(1, n + 2)] += w
        rho[at(1, n + 2), at(1, n)] += w
    for n in range(n_max):
        w_r = q.q_r * math.sqrt(n + 1) * t_r ** (2 * n) / (2 * c_r**3)
        rho[at(0, n), at(1, n + 1)] += w_r
        rho[at(1, n + 1), at(0, n)] += w_r
        w_l = q.q_l * math.sqrt(n + 1) * t_r ** (2 * n + 1) / (2 * c_r**3)
        rho[at(0, n + 1), at(1, n)] += w_l
        rho[at(1, n), at(0, n + 1)] += w_l
    return rho


def closed_form_rho_out_pt(s: SqueezingParams, q: ModeSplit, n_max: int) -> np.ndarray:
    """Alice partial transpose of the closed form, built independently.

    Same terms as :func:`closed_form_rho_out` with the Alice bra/ket labels of
    the interference terms exchanged.
    """
    t_r, c_r = s.tanh_r, s.cosh_r
    levels = n_max + 1
    rho = np.zeros((2 * levels, 2 * levels))

    def at(a: int, n: int) -> int:
        return a * levels + n

    for n in range(n_max + 1):
        rho[at(0, n), at(0, n)] += t_r ** (2 * n) / (2 * c_r**2)
    for n in range(n_max):
        w = (n + 1) * t_r ** (2 * n) / (2 * c_r**4)
        rho[at(1, n + 1), at(1, n + 1)] += q.q_r**2 * w
        rho[at(1, n), at(1, n)] += q.q_l**2 * w
    for n in range(n_max - 1):
        w = math.sqrt((n + 1) * (n + 2)) * t_r ** (2 * n + 1) / (2 * c_r**4) * q.q_r * q.q_l
        rho[at(1, n), at(1, n + 2)] += w
        rho[at(1, n + 2), at(1, n)] += w
    for n in range(n_max):
        w_r = q.q_r * math.sqrt(n + 1) * t_r ** (2 * n) / (2 * c_r**3)
        rho[at(1, n), at(0, n + 1)] += w_r
        rho[at(0, n + 1), at(1, n)] += w_r
        w_l = q.q_l * math.sqrt(n + 1) * t_r ** (2 * n + 1) / (2 * c_r**3)
        rho[at(1, n + 1), at(0, n)] += w_l
        rho[at(0, n), at(1, n + 1)] += w_l
    return rho


def operator_oracle_negativity(m_omega: float, q_r: float, channel: str, n_max: int = 80) -> float:
    """Negativity from a ladder-operator construction of the full state.

    Builds the squeezed vacuum and the excitation C^dagger |0> with explicit
    creation/annihilation matrices, traces the complementary mode, partially
    transposes via axis permutation, and diagonalizes.  Shares no code with
    the library's state or entanglement modules.
    """
    t_r = math.exp(-4.0 * math.pi * m_omega)
    c_r = 1.0 / math.sqrt(1.0 - t_r * t_r)
    q_l = math.sqrt(1.0 - q_r * q_r)
    levels = n_max + 1
    a = np.diag(np.sqrt(np.arange(1, levels)), 1)
    ad = a.T
    eye = np.eye(levels)
    vac = np.zeros((levels, levels))
    for n in range(levels):
        vac[n, n] = t_r**n / c_r  # indexed (out, hor)
    vac = vac.reshape(-1)
    a_out = np.kron(a, eye)
    a_hor = np.kron(eye, a)
    create_r = c_r * np.kron(ad, eye) - (t_r * c_r) * a_hor
    create_l = c_r * np.kron(eye, ad) - (t_r * c_r) * a_out
    one = (q_r * create_r + q_l * create_l) @ vac
    psi = np.stack([vac.reshape(levels, levels), one.reshape(levels, levels)]) / math.sqrt(2.0)
    if channel == "A-out":
        rho = np.einsum("aoh,bph->aobp", psi, psi)
    elif channel == "A-hor":
        rho = np.einsum("aoh,boq->ahbq", psi, psi)
    else:
        raise ValueError(channel)
    pt = np.transpose(rho, (2, 1, 0, 3)).reshape(2 * levels, 2 * levels)
    evs = np.linalg.eigvalsh(pt)
    return float(-evs[evs < -1e-12].sum()) + 0.0


def analytic_r0_negativity(q_r: float) -> float:
    """Hand-derived negativity of the unsqueezed (r = 0) Alice-out state."""
    q_l_sq = 1.0 - q_r * q_r
    return (math.sqrt(q_l_sq**2 + 4.0 * q_r**2) - q_l_sq) / 4.0
