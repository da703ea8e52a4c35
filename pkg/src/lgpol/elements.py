"""Jones matrices of the optical elements used in the experiment.

All fast-axis and transmission-axis angles are measured from the
horizontal in degrees; retardances are in radians.  Wave plates are
modeled without their overall phase factor: every observable computed
downstream is a trace of a conjugation, so global phases cancel, and
the real reflection form makes ``half_wave_plate(t) @ half_wave_plate(t)``
exactly the identity.
"""

import math
from dataclasses import dataclass

import numpy as np

_P_H = np.array([[1.0, 0.0], [0.0, 0.0]], dtype=complex)
_P_V = np.array([[0.0, 0.0], [0.0, 1.0]], dtype=complex)


def _check_finite(name: str, value: float) -> float:
    value = float(value)
    if not math.isfinite(value):
        raise ValueError(f"{name} must be finite, got {value}")
    return value


def _rotation(theta_rad: float) -> np.ndarray:
    c, s = math.cos(theta_rad), math.sin(theta_rad)
    return np.array([[c, -s], [s, c]], dtype=complex)


def linear_retarder(theta: float, delta: float) -> np.ndarray:
    """General linear retarder.

    Parameters
    ----------
    theta : float
        Fast-axis angle in degrees.
    delta : float
        Retardance in radians (phase of the slow axis relative to the
        fast axis).

    Returns R(theta) @ diag(1, exp(1j*delta)) @ R(-theta); unitary.
    """
    t = math.radians(_check_finite("theta", theta))
    d = _check_finite("delta", delta)
    r = _rotation(t)
    return r @ np.diag([1.0, np.exp(1j * d)]) @ r.conj().T


def half_wave_plate(theta: float) -> np.ndarray:
    """Half-wave plate with fast axis at ``theta`` degrees.

    Real reflection form [[cos 2t, sin 2t], [sin 2t, -cos 2t]]; involutive.
    """
    t2 = 2.0 * math.radians(_check_finite("theta", theta))
    c, s = math.cos(t2), math.sin(t2)
    return np.array([[c, s], [s, -c]], dtype=complex)


def quarter_wave_plate(theta: float) -> np.ndarray:
    """Quarter-wave plate with fast axis at ``theta`` degrees."""
    return linear_retarder(theta, math.pi / 2.0)


def linear_polarizer(theta: float) -> np.ndarray:
    """Ideal linear polarizer transmitting at ``theta`` degrees.

    Rank-1 projector [[c^2, s c], [s c, s^2]]; idempotent and Hermitian.
    """
    t = math.radians(_check_finite("theta", theta))
    c, s = math.cos(t), math.sin(t)
    return np.array([[c * c, s * c], [s * c, s * s]], dtype=complex)


def projector(outcome: int) -> np.ndarray:
    """Polarizing-beamsplitter projector for ``outcome``.

    +1 selects horizontal polarization, -1 vertical, the two realizations
    of the dichotomic observable measured at each time step.
    """
    if outcome == +1:
        return _P_H.copy()
    if outcome == -1:
        return _P_V.copy()
    raise ValueError(f"measurement outcome must be +1 or -1, got {outcome!r}")


@dataclass(frozen=True)
class EvolutionConfig:
    """Fast-axis angles, in degrees, of the two half-wave plates that
    implement one unitary time step.  Semantics are periodic in 180
    degrees (a plate's fast axis is a line, not a direction)."""

    theta1: float
    theta2: float

    def __post_init__(self):
        object.__setattr__(self, "theta1", _check_finite("theta1", self.theta1))
        object.__setattr__(self, "theta2", _check_finite("theta2", self.theta2))


def evolution_unitary(cfg: EvolutionConfig) -> np.ndarray:
    """Jones matrix of one evolution step.

    The beam meets the theta1 plate first, so in matrix order the step is
    ``half_wave_plate(theta2) @ half_wave_plate(theta1)``: a rotation by
    2*(theta2 - theta1).
    """
    return half_wave_plate(cfg.theta2) @ half_wave_plate(cfg.theta1)
