"""Random-input generators shared by the test modules."""

import numpy as np


def random_jones(rng):
    """Random complex Jones vector, not normalized."""
    return rng.standard_normal(2) + 1j * rng.standard_normal(2)


def random_unitary(rng):
    """Haar-random 2x2 unitary via QR with phase-fixed diagonal."""
    z = rng.standard_normal((2, 2)) + 1j * rng.standard_normal((2, 2))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))


def random_state(rng, rank=None):
    """Random physical coherency matrix with random overall intensity.

    ``rank`` 1 gives a pure state, 2 a full-rank mixture; None picks at
    random (mixtures more often).
    """
    if rank is None:
        rank = 1 if rng.random() < 0.3 else 2
    u = random_unitary(rng)
    w = rng.uniform(0.05, 2.0, size=2)
    if rank == 1:
        w[1] = 0.0
    rho = (u * w) @ u.conj().T
    return 0.5 * (rho + rho.conj().T)


def random_stokes(rng):
    """Random physical Stokes vector (point in the Poincare ball)."""
    s0 = rng.uniform(0.1, 3.0)
    direction = rng.standard_normal(3)
    direction /= np.linalg.norm(direction)
    radius = s0 * rng.uniform(0.0, 1.0)
    return np.concatenate(([s0], radius * direction))
