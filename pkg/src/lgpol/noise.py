"""Intensity-fluctuation noise and Monte Carlo trial statistics.

A simulated run perturbs each of the twelve detector intensities behind
one K value (three tables, four entries each) independently:

    noisy = max(v * (1 + sigma_rel * g1) + detector_floor * g2, 0)

with g1, g2 fresh standard-normal draws.  Two draws are consumed per
entry even when a gain is zero, so runs with different noise settings
but the same seed walk the same random stream.  Entries are perturbed
in a fixed order (tables 21, 32, 31; within a table, earlier-time
outcome +1 then -1, later-time outcome +1 then -1 inside each) to keep
runs reproducible.

Sweeps draw one independent generator per data point by spawning child
seed sequences: ``point_rng(seed, index)`` gives the stream for point
``index``, and inserting or removing points never shifts the streams of
the others.
"""

import math
import statistics
from dataclasses import dataclass

import numpy as np

from .elements import EvolutionConfig, evolution_unitary
from .errors import DegenerateSampleError
from .lgi import (
    OUTCOMES,
    IntensityTable,
    KStat,
    correlation,
    intensities_c21,
    intensities_c31,
    intensities_c32,
)

#: Whole-run redraws allowed before a degenerate sample is a hard error.
_MAX_RESAMPLE = 100


@dataclass(frozen=True)
class NoiseConfig:
    """Noise settings for simulated runs.

    ``sigma_rel`` is the relative intensity fluctuation (0.02 means 2%
    of each entry), ``detector_floor`` an absolute additive jitter, and
    ``seed`` the base seed for the random stream.  ``partial_sigma_scale``
    widens sigma_rel for partially polarized inputs, which fluctuate
    more in practice; apply it with :meth:`for_state`.
    """

    sigma_rel: float = 0.02
    seed: int = 0
    detector_floor: float = 0.0
    partial_sigma_scale: float = 2.0

    def __post_init__(self):
        if not math.isfinite(self.sigma_rel) or self.sigma_rel < 0.0:
            raise ValueError(f"sigma_rel must be finite and >= 0, got {self.sigma_rel}")
        if not math.isfinite(self.detector_floor) or self.detector_floor < 0.0:
            raise ValueError(
                f"detector_floor must be finite and >= 0, got {self.detector_floor}"
            )
        if not math.isfinite(self.partial_sigma_scale) or self.partial_sigma_scale < 1.0:
            raise ValueError(
                f"partial_sigma_scale must be finite and >= 1, got {self.partial_sigma_scale}"
            )
        if not isinstance(self.seed, (int, np.integer)) or isinstance(self.seed, bool):
            raise ValueError(f"seed must be an integer, got {self.seed!r}")
        if not 0 <= int(self.seed) < 2**64:
            raise ValueError(f"seed must be in [0, 2**64), got {self.seed}")

    def for_state(self, kind: str) -> "NoiseConfig":
        """Copy of this config with sigma_rel scaled for the given state kind."""
        if kind != "partial" or self.partial_sigma_scale == 1.0:
            return self
        return NoiseConfig(
            sigma_rel=self.sigma_rel * self.partial_sigma_scale,
            seed=self.seed,
            detector_floor=self.detector_floor,
            partial_sigma_scale=self.partial_sigma_scale,
        )


@dataclass(frozen=True)
class TrialStats:
    """Summary of a batch of repeated simulated runs at one setting.

    ``std_k`` is the sample standard deviation of the K values (the
    run-to-run spread an experiment would quote as its error bar);
    ``stderr_k`` estimates the uncertainty of ``mean_k`` itself.
    ``n_degenerate`` counts runs that needed at least one redraw because
    a sampled table summed to zero.
    """

    mean_k: float
    std_k: float
    samples: tuple
    n_trials: int
    n_degenerate: int = 0

    @property
    def stderr_k(self) -> float:
        return self.std_k / math.sqrt(self.n_trials)


def point_rng(seed: int, index: int) -> np.random.Generator:
    """Independent generator for data point ``index`` under base ``seed``."""
    return np.random.Generator(
        np.random.PCG64(np.random.SeedSequence(seed, spawn_key=(index,)))
    )


def perturb_intensity(value: float, noise: NoiseConfig, rng: np.random.Generator) -> float:
    """One noisy reading of a detector intensity, clamped at zero.

    Always consumes exactly two standard-normal draws; see the module
    docstring for why.
    """
    g1 = rng.standard_normal()
    g2 = rng.standard_normal()
    noisy = value * (1.0 + noise.sigma_rel * g1) + noise.detector_floor * g2
    return max(noisy, 0.0)


def _noiseless_tables(rho, cfg: EvolutionConfig):
    u = evolution_unitary(cfg)
    return (intensities_c21(rho, u), intensities_c32(rho, u), intensities_c31(rho, u))


def _perturbed_table(table: IntensityTable, noise: NoiseConfig, rng) -> IntensityTable:
    vals = {}
    for n in OUTCOMES:
        for m in OUTCOMES:
            vals[(m, n)] = perturb_intensity(table.values[(m, n)], noise, rng)
    return IntensityTable(values=vals, pair_label=table.pair_label)


def _noisy_k(tables, noise: NoiseConfig, rng, on_degenerate: str):
    # One complete run: perturb all twelve entries, then form K.  A table
    # can clamp to all zeros under heavy noise; redraw the whole run so
    # the surviving sample stays unbiased, up to _MAX_RESAMPLE attempts.
    degenerate = False
    for _ in range(_MAX_RESAMPLE):
        noisy = [_perturbed_table(t, noise, rng) for t in tables]
        if all(t.total() > 0.0 for t in noisy):
            c21, c32, c31 = (correlation(t) for t in noisy)
            return c21 + c32 - c31, degenerate
        if on_degenerate == "raise":
            raise DegenerateSampleError(
                f"sampled intensity table {next(t.pair_label for t in noisy if t.total() <= 0.0)}"
                " summed to zero"
            )
        degenerate = True
    raise DegenerateSampleError(
        f"no usable sample after {_MAX_RESAMPLE} redraws; noise level drowns the signal"
    )


def simulate_run(
    rho,
    cfg: EvolutionConfig,
    noise: NoiseConfig,
    rng: np.random.Generator | None = None,
    on_degenerate: str = "resample",
) -> KStat:
    """One noisy measurement of K for state ``rho`` under evolution ``cfg``.

    ``rng`` defaults to a fresh generator from ``noise.seed``; pass one in
    to draw several runs from a single stream.  ``on_degenerate`` is
    "resample" (redraw a run whose table summed to zero) or "raise".
    """
    if on_degenerate not in ("resample", "raise"):
        raise ValueError(f"on_degenerate must be 'resample' or 'raise', got {on_degenerate!r}")
    if rng is None:
        rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(noise.seed)))
    tables = _noiseless_tables(rho, cfg)
    k, _ = _noisy_k(tables, noise, rng, on_degenerate)
    return KStat.from_value(k)


def repeat_trials(
    rho,
    cfg: EvolutionConfig,
    noise: NoiseConfig,
    n_trials: int = 5,
    rng: np.random.Generator | None = None,
    on_degenerate: str = "resample",
) -> TrialStats:
    """Statistics of ``n_trials`` independent noisy runs at one setting.

    All runs share one random stream, so a batch is reproducible from
    (seed, n_trials) alone.  With ``sigma_rel`` and ``detector_floor``
    both zero every run returns the same K and ``std_k`` is exactly 0.
    """
    if n_trials < 1:
        raise ValueError(f"n_trials must be >= 1, got {n_trials}")
    if on_degenerate not in ("resample", "raise"):
        raise ValueError(f"on_degenerate must be 'resample' or 'raise', got {on_degenerate!r}")
    if rng is None:
        rng = np.random.Generator(np.random.PCG64(np.random.SeedSequence(noise.seed)))
    tables = _noiseless_tables(rho, cfg)
    ks = []
    n_degenerate = 0
    for _ in range(n_trials):
        k, degenerate = _noisy_k(tables, noise, rng, on_degenerate)
        ks.append(k)
        n_degenerate += int(degenerate)
    if all(k == ks[0] for k in ks):
        # Zero-noise runs are bit-identical; report a clean zero spread
        # instead of the ulp-level residue a variance formula can leave.
        mean, std = ks[0], 0.0
    else:
        mean = statistics.fmean(ks)
        std = statistics.stdev(ks) if len(ks) > 1 else 0.0
    return TrialStats(
        mean_k=mean,
        std_k=std,
        samples=tuple(ks),
        n_trials=n_trials,
        n_degenerate=n_degenerate,
    )
