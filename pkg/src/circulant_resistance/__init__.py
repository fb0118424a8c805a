"""Effective resistance, Kirchhoff index and random-walk statistics on circulant graphs."""

from .circulant import (
    CirculantSpec,
    DenseLaplacian,
    EigenvalueTable,
    build_circulant,
    dense_laplacian,
    eigenvalues,
)
from .closed_form import (
    UNREACHABLE,
    ResistanceProfile,
    c2_resistance,
    c12_kirchhoff,
    c12_profile,
    c12_resistance,
    cycle_resistance,
    identity_suite,
)
from .errors import (
    BadPower,
    CirculantError,
    Disconnected,
    InvalidJump,
    Singular,
    StepCapExceeded,
    TooLarge,
    TooSmall,
    UnsupportedN,
)
from .exact import fib, lucas
from .oracle import equivalence_sweep, foster_audit, resistance_solve
from .report import Check, VerificationReport
from .spectral import eigentime_mfpt, resistance_spectral, trig_power_sum
from .walk import McEstimate, WalkStats, commute, fpt_closed, fpt_general, mfpt, simulate_fpt

__version__ = "0.1.0"

__all__ = [
    "BadPower", "Check", "CirculantError", "CirculantSpec", "DenseLaplacian", "Disconnected",
    "EigenvalueTable", "InvalidJump", "McEstimate", "ResistanceProfile", "Singular",
    "StepCapExceeded", "TooLarge", "TooSmall", "UNREACHABLE", "UnsupportedN",
    "VerificationReport", "WalkStats", "build_circulant", "c2_resistance", "c12_kirchhoff",
    "c12_profile", "c12_resistance", "commute", "cycle_resistance", "dense_laplacian",
    "eigentime_mfpt", "eigenvalues", "equivalence_sweep", "fib", "foster_audit", "fpt_closed",
    "fpt_general", "identity_suite", "lucas", "mfpt", "resistance_solve", "resistance_spectral",
    "simulate_fpt", "trig_power_sum",
]
