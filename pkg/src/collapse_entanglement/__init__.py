"""Entanglement degradation of field modes across a forming black-hole horizon.

Library layout:

  fock          -- truncated Fock-basis indexing
  state         -- squeezing parameter, state expansion, reduced/thermal matrices
  entanglement  -- partial transpose, negativity, adaptive truncation
  bogoliubov    -- closed-form mode-overlap coefficients and identity checks
  cli           -- negativity sweep command (``negativity-sweep``)
"""

from .bogoliubov import CollapseGeometry, alpha, beta_gamma_delta, rl_mode_coefficient
from .entanglement import (
    ConvergencePolicy,
    NegativityResult,
    converged_negativity,
    negativity,
    negativity_blockwise_qr1,
    partial_transpose_alice,
)
from .fock import BasisIndex, Truncation, flat_index, unflatten
from .state import (
    DensityMatrix,
    ModeSplit,
    SingularLimitError,
    SqueezingParams,
    TripartiteAmplitudes,
    hawking_temperature,
    psi_amplitudes,
    reduce_to_a_hor,
    reduce_to_a_out,
    squeezed_vacuum_amplitudes,
    squeezing_parameter,
    thermal_reduction,
)

__all__ = [
    "BasisIndex",
    "CollapseGeometry",
    "ConvergencePolicy",
    "DensityMatrix",
    "ModeSplit",
    "NegativityResult",
    "SingularLimitError",
    "SqueezingParams",
    "TripartiteAmplitudes",
    "Truncation",
    "alpha",
    "beta_gamma_delta",
    "converged_negativity",
    "flat_index",
    "hawking_temperature",
    "negativity",
    "negativity_blockwise_qr1",
    "partial_transpose_alice",
    "psi_amplitudes",
    "reduce_to_a_hor",
    "reduce_to_a_out",
    "rl_mode_coefficient",
    "squeezed_vacuum_amplitudes",
    "squeezing_parameter",
    "thermal_reduction",
    "unflatten",
]
