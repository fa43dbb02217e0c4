"""Circulant matrices over generalized Tribonacci and Tribonacci-Lucas numbers."""

from .circulant import (
    CirculantMatrix,
    Spectrum,
    build_g_circulant,
    build_s_circulant,
    circ,
    det_oracle_exact,
    det_oracle_spectral,
    dft_eigenvalues,
    spectral_norm_oracle,
)
from .closed_forms import (
    DetFactors,
    det_factors_g,
    det_factors_s,
    det_g_closed,
    det_s_closed,
    eig_g_closed,
    eig_s_closed,
    norm_g_closed,
    norm_s_closed,
    special_norm_identity,
)
from .recurrence import RecurrenceParams, SequencePreset, gen_g, gen_s, resolve_preset
from .roots import CharRoots, binet_g, binet_s, solve_characteristic

__version__ = "0.1.0"
