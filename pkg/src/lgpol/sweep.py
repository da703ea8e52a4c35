"""Sweep of the K statistic over the second plate angle, with CSV output.

A sweep fixes the first plate and the initial state, steps the second
plate across a grid, and records at every point the closed-form K, the
full-pipeline K, and noisy-run statistics.  Each grid point gets its own
random stream (see :func:`lgpol.noise.point_rng`), so editing the grid
never changes the noise at the points that stay.
"""

import csv
import math
from dataclasses import dataclass, field

import numpy as np

from .elements import EvolutionConfig
from .errors import ConfigError
from .lgi import InitialStateSpec, KStat, initial_state, k_analytic, k_statistic
from .noise import NoiseConfig, point_rng, repeat_trials

#: Exact header line of the sweep CSV.
CSV_HEADER = "theta1_deg,theta2_deg,k_theory,k_pipeline,k_noisy_mean,k_noisy_std,violation"


@dataclass(frozen=True)
class SweepRow:
    """One grid point of a sweep: angles, K three ways, violation flag.

    ``violation`` tests the closed-form K against the macrorealist
    bound, so it depends on the two angles only, never on the state,
    the noise level or the seed.
    """

    theta1_deg: float
    theta2_deg: float
    k_theory: float
    k_pipeline: float
    k_noisy_mean: float
    k_noisy_std: float
    violation: bool


@dataclass(frozen=True)
class SweepConfig:
    """Grid, state and noise settings for one sweep.

    Defaults cover the second plate from 0 to 180 degrees in 5-degree
    steps with the diagonal input state, 2% intensity noise and five
    repeats per point.
    """

    theta1: float = 0.0
    theta2_start: float = 0.0
    theta2_end: float = 180.0
    steps: int = 37
    state: InitialStateSpec = field(default_factory=InitialStateSpec.diagonal)
    noise: NoiseConfig = field(default_factory=NoiseConfig)
    trials: int = 5
    output_path: str = "sweep.csv"

    def __post_init__(self):
        for name in ("theta1", "theta2_start", "theta2_end"):
            v = getattr(self, name)
            if not isinstance(v, (int, float)) or not math.isfinite(v):
                raise ConfigError(f"{name} must be a finite number, got {v!r}")
        if not isinstance(self.steps, int) or isinstance(self.steps, bool) or self.steps < 2:
            raise ConfigError(f"steps must be an integer >= 2, got {self.steps!r}")
        if not self.theta2_end > self.theta2_start:
            raise ConfigError(
                f"theta2_end must exceed theta2_start, got {self.theta2_start!r}"
                f" .. {self.theta2_end!r}"
            )
        if not isinstance(self.trials, int) or isinstance(self.trials, bool) or self.trials < 1:
            raise ConfigError(f"trials must be a positive integer, got {self.trials!r}")
        if not isinstance(self.state, InitialStateSpec):
            raise ConfigError(f"state must be an InitialStateSpec, got {self.state!r}")
        if not isinstance(self.noise, NoiseConfig):
            raise ConfigError(f"noise must be a NoiseConfig, got {self.noise!r}")
        if not self.output_path:
            raise ConfigError("output_path must be a non-empty path")

    def grid(self) -> np.ndarray:
        """Second-plate angles of the sweep, endpoints included."""
        return np.linspace(self.theta2_start, self.theta2_end, self.steps)


def run_sweep(cfg: SweepConfig) -> list[SweepRow]:
    """Evaluate every grid point of ``cfg`` and return the rows in order."""
    rho = initial_state(cfg.state)
    noise = cfg.noise.for_state(cfg.state.kind)
    rows = []
    for i, theta2 in enumerate(cfg.grid()):
        evo = EvolutionConfig(theta1=cfg.theta1, theta2=float(theta2))
        k_theory = k_analytic(evo)
        trials = repeat_trials(
            rho, evo, noise, n_trials=cfg.trials, rng=point_rng(noise.seed, i)
        )
        rows.append(
            SweepRow(
                theta1_deg=cfg.theta1,
                theta2_deg=float(theta2),
                k_theory=k_theory,
                k_pipeline=k_statistic(rho, evo).k,
                k_noisy_mean=trials.mean_k,
                k_noisy_std=trials.std_k,
                violation=KStat.from_value(k_theory).violated,
            )
        )
    return rows


def _fmt(x: float) -> str:
    # 12 significant digits: enough that writing a parsed file back
    # reproduces it byte for byte.
    return format(x, ".12g")


def emit_csv(rows, path) -> None:
    """Write sweep rows to ``path`` in the fixed seven-column layout."""
    with open(path, "w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(CSV_HEADER.split(","))
        for row in rows:
            writer.writerow(
                [
                    _fmt(row.theta1_deg),
                    _fmt(row.theta2_deg),
                    _fmt(row.k_theory),
                    _fmt(row.k_pipeline),
                    _fmt(row.k_noisy_mean),
                    _fmt(row.k_noisy_std),
                    "true" if row.violation else "false",
                ]
            )


def read_csv(path) -> list[SweepRow]:
    """Parse a sweep CSV back into rows; the inverse of :func:`emit_csv`."""
    with open(path, "r", encoding="utf-8", newline="") as fh:
        reader = csv.reader(fh)
        header = next(reader, None)
        if header != CSV_HEADER.split(","):
            raise ConfigError(f"unexpected CSV header {header!r}")
        rows = []
        for record in reader:
            if len(record) != 7:
                raise ConfigError(f"expected 7 columns, got {len(record)}: {record!r}")
            if record[6] not in ("true", "false"):
                raise ConfigError(f"violation column must be true/false, got {record[6]!r}")
            rows.append(
                SweepRow(
                    theta1_deg=float(record[0]),
                    theta2_deg=float(record[1]),
                    k_theory=float(record[2]),
                    k_pipeline=float(record[3]),
                    k_noisy_mean=float(record[4]),
                    k_noisy_std=float(record[5]),
                    violation=record[6] == "true",
                )
            )
    return rows
