"""Polarization calculus on 2x2 complex matrices.

States and operators are plain numpy arrays:

* a Jones vector, complex shape ``(2,)``, holds the x and y field
  amplitudes of a fully polarized beam; its squared norm is the beam
  intensity;
* an optical element is a 2x2 complex Jones matrix acting on column
  Jones vectors, so a beam that passes element ``a`` and then element
  ``b`` comes out as ``b @ a @ v`` (matrix order is the reverse of beam
  order);
* a coherency matrix, 2x2 Hermitian positive semidefinite, describes
  light of any degree of polarization, with ``rho[0, 0] = <Ex Ex*>``
  and ``rho[0, 1] = <Ex Ey*>``.  Its trace is the intensity, and an
  element ``j`` maps it to ``j @ rho @ j.conj().T``;
* a Stokes vector, real shape ``(4,)``, parametrizes the same state via
  ``rho = 0.5 * [[s0 + s1, s2 + 1j*s3], [s2 - 1j*s3, s0 - s1]]``.

Angles on public interfaces are in degrees throughout the package.
"""

import math

import numpy as np

from .errors import UnphysicalStateError, ZeroIntensityError

# Absolute tolerance for Hermiticity/positivity predicates; generous
# headroom over double-precision arithmetic on 2x2 matrices.
PHYSICALITY_TOL = 1e-9

# Traces below this count as zero intensity (avoids silent 0/0).
ZERO_INTENSITY = 1e-15


def jones_vector(ex, ey) -> np.ndarray:
    """Jones vector with complex field amplitudes ``ex`` and ``ey``."""
    v = np.array([ex, ey], dtype=complex)
    if not np.isfinite(v).all():
        raise ValueError("Jones vector components must be finite")
    return v


def linear_jones(angle: float) -> np.ndarray:
    """Unit Jones vector of linear polarization at ``angle`` degrees."""
    a = math.radians(angle)
    return np.array([math.cos(a), math.sin(a)], dtype=complex)


def _as_vector(v) -> np.ndarray:
    a = np.asarray(v, dtype=complex)
    if a.shape != (2,):
        raise ValueError(f"Jones vector must have shape (2,), got {a.shape}")
    if not np.isfinite(a).all():
        raise ValueError("Jones vector components must be finite")
    return a


def _as_matrix(m, what: str = "matrix") -> np.ndarray:
    a = np.asarray(m, dtype=complex)
    if a.shape != (2, 2):
        raise ValueError(f"{what} must be 2x2, got shape {a.shape}")
    if not np.isfinite(a).all():
        raise ValueError(f"{what} entries must be finite")
    return a


def jones_to_coherency(v) -> np.ndarray:
    """Coherency matrix of the pure state ``v``: the outer product v v†."""
    a = _as_vector(v)
    return np.outer(a, a.conj())


def coherency_from_stokes(s, tol: float = PHYSICALITY_TOL) -> np.ndarray:
    """Coherency matrix for Stokes parameters ``(s0, s1, s2, s3)``.

    Raises UnphysicalStateError if s0 < 0 or the polarized part exceeds
    the total intensity (degree of polarization above 1) beyond ``tol``.
    """
    arr = np.asarray(s, dtype=float)
    if arr.shape != (4,):
        raise ValueError(f"Stokes vector must have shape (4,), got {arr.shape}")
    if not np.isfinite(arr).all():
        raise ValueError("Stokes components must be finite")
    s0, s1, s2, s3 = arr
    if s0 < 0:
        raise UnphysicalStateError(f"s0 must be nonnegative, got {s0}")
    if s1 * s1 + s2 * s2 + s3 * s3 > s0 * s0 * (1.0 + tol):
        raise UnphysicalStateError("degree of polarization exceeds 1")
    return 0.5 * np.array(
        [[s0 + s1, s2 + 1j * s3], [s2 - 1j * s3, s0 - s1]], dtype=complex
    )


def stokes_from_coherency(rho, tol: float = PHYSICALITY_TOL) -> np.ndarray:
    """Stokes parameters of ``rho``; exact inverse of coherency_from_stokes."""
    r = _as_matrix(rho, "coherency matrix")
    if _hermitian_defect(r) > tol:
        raise UnphysicalStateError("coherency matrix is not Hermitian")
    return np.array(
        [
            (r[0, 0] + r[1, 1]).real,
            (r[0, 0] - r[1, 1]).real,
            (r[0, 1] + r[1, 0]).real,
            (r[0, 1] - r[1, 0]).imag,
        ]
    )


def _hermitian_defect(m: np.ndarray) -> float:
    return max(
        abs(m[0, 1] - m[1, 0].conjugate()),
        abs(m[0, 0].imag),
        abs(m[1, 1].imag),
    )


def hermitian_eigenvalues(m) -> tuple[float, float]:
    """Eigenvalues (low, high) of a 2x2 Hermitian matrix, in closed form.

    Uses mean +/- radius with radius = hypot((a - d)/2, |b|); exact and
    much cheaper than an iterative solver.
    """
    a = _as_matrix(m, "Hermitian matrix")
    mid = 0.5 * (a[0, 0].real + a[1, 1].real)
    radius = math.hypot(0.5 * (a[0, 0].real - a[1, 1].real), abs(a[0, 1]))
    return mid - radius, mid + radius


def is_physical(rho, tol: float = PHYSICALITY_TOL) -> bool:
    """True iff ``rho`` is Hermitian within ``tol`` and both eigenvalues >= -tol."""
    r = np.asarray(rho, dtype=complex)
    if r.shape != (2, 2) or not np.isfinite(r).all():
        return False
    if _hermitian_defect(r) > tol:
        return False
    low, _ = hermitian_eigenvalues(r)
    return low >= -tol


def intensity(rho) -> float:
    """Beam intensity: the real part of the trace of ``rho``."""
    r = _as_matrix(rho, "coherency matrix")
    return float((r[0, 0] + r[1, 1]).real)


def degree_of_polarization(rho) -> float:
    """Degree of polarization sqrt(s1^2 + s2^2 + s3^2) / s0, clamped to [0, 1].

    Raises ZeroIntensityError for (near-)zero-trace states, where the
    ratio is undefined.
    """
    s0, s1, s2, s3 = stokes_from_coherency(rho)
    if s0 < ZERO_INTENSITY:
        raise ZeroIntensityError("degree of polarization undefined at zero intensity")
    return min(math.sqrt(s1 * s1 + s2 * s2 + s3 * s3) / s0, 1.0)


def apply_element(j, rho) -> np.ndarray:
    """State after the element ``j``: j @ rho @ j†, re-Hermitized.

    Explicit symmetrization keeps the output exactly Hermitian so the
    closed-form eigenvalue predicates stay reliable after long element
    chains.
    """
    jm = _as_matrix(j, "Jones matrix")
    r = _as_matrix(rho, "coherency matrix")
    out = jm @ r @ jm.conj().T
    return 0.5 * (out + out.conj().T)


def compose(*elements) -> np.ndarray:
    """Product of Jones matrices in application order.

    ``compose(b, a)`` returns ``b @ a``: the rightmost argument is the
    element the beam meets first.
    """
    out = np.eye(2, dtype=complex)
    for e in elements:
        out = out @ _as_matrix(e, "Jones matrix")
    return out
