"""Polarization-optics simulator for three-time Leggett-Garg tests.

The pieces, in beam order: build a coherency matrix for the input light
(:mod:`lgpol.polarization`), drive it through wave plates and
projectors (:mod:`lgpol.elements`), form the three two-time correlations
and the K statistic (:mod:`lgpol.lgi`), add intensity noise and repeat
(:mod:`lgpol.noise`), and sweep the second plate angle to CSV
(:mod:`lgpol.sweep`, :mod:`lgpol.cli`).
"""

from .elements import (
    EvolutionConfig,
    evolution_unitary,
    half_wave_plate,
    linear_polarizer,
    linear_retarder,
    projector,
    quarter_wave_plate,
)
from .errors import (
    ConfigError,
    DegenerateSampleError,
    UnphysicalStateError,
    ZeroIntensityError,
)
from .lgi import (
    OUTCOMES,
    CorrelationTriple,
    InitialStateSpec,
    IntensityTable,
    KStat,
    correlation,
    correlation_triple,
    initial_state,
    intensities_c21,
    intensities_c31,
    intensities_c32,
    k_analytic,
    k_statistic,
    rotated_observable,
)
from .noise import (
    NoiseConfig,
    TrialStats,
    perturb_intensity,
    point_rng,
    repeat_trials,
    simulate_run,
)
from .polarization import (
    apply_element,
    compose,
    coherency_from_stokes,
    degree_of_polarization,
    hermitian_eigenvalues,
    intensity,
    is_physical,
    jones_to_coherency,
    jones_vector,
    linear_jones,
    stokes_from_coherency,
)
from .sweep import CSV_HEADER, SweepConfig, SweepRow, emit_csv, read_csv, run_sweep

__version__ = "0.1.0"

__all__ = [
    "CSV_HEADER",
    "ConfigError",
    "CorrelationTriple",
    "DegenerateSampleError",
    "EvolutionConfig",
    "InitialStateSpec",
    "IntensityTable",
    "KStat",
    "NoiseConfig",
    "OUTCOMES",
    "SweepConfig",
    "SweepRow",
    "TrialStats",
    "UnphysicalStateError",
    "ZeroIntensityError",
    "apply_element",
    "coherency_from_stokes",
    "compose",
    "correlation",
    "correlation_triple",
    "degree_of_polarization",
    "emit_csv",
    "evolution_unitary",
    "half_wave_plate",
    "hermitian_eigenvalues",
    "initial_state",
    "intensities_c21",
    "intensities_c31",
    "intensities_c32",
    "intensity",
    "is_physical",
    "jones_to_coherency",
    "jones_vector",
    "k_analytic",
    "k_statistic",
    "linear_jones",
    "linear_polarizer",
    "linear_retarder",
    "perturb_intensity",
    "point_rng",
    "projector",
    "quarter_wave_plate",
    "read_csv",
    "repeat_trials",
    "rotated_observable",
    "run_sweep",
    "simulate_run",
    "stokes_from_coherency",
    "__version__",
]
