"""Three-time Leggett-Garg pipeline for polarized light.

One experiment measures the dichotomic polarization observable (+1
horizontal, -1 vertical) at two of three times t1 < t2 < t3, with the
same two-plate unitary driving each time step.  Each measured pair
(i, j) yields four detector intensities I_ij(m, n), the fraction of
light giving outcome n at the earlier time and m at the later one.  The
correlation of a pair is

    C_ij = sum(m * n * I_ij(m, n)) / sum(I_ij(m, n))

and the macrorealist bound is on K = C21 + C32 - C31 <= 1.  For this
evolution K has the closed form 2*cos(4*d) - cos(8*d) with
d = theta1 - theta2 in degrees, independent of the initial state.
"""

import math
from dataclasses import dataclass, field

import numpy as np

from .elements import EvolutionConfig, evolution_unitary, linear_polarizer, projector
from .errors import UnphysicalStateError, ZeroIntensityError
from .polarization import (
    ZERO_INTENSITY,
    _as_matrix,
    intensity,
    is_physical,
    jones_to_coherency,
    linear_jones,
)

#: Measurement outcomes in table order (horizontal first).
OUTCOMES = (+1, -1)

#: Entries this far below zero are treated as roundoff and clamped.
NEGATIVE_INTENSITY_TOL = 1e-12

#: Guard band on the violation flag: K must exceed 1 by more than this.
#: Protects boundary angles, where roundoff leaves K within ~1e-15 of 1.
VIOLATION_ATOL = 1e-9


@dataclass(frozen=True)
class IntensityTable:
    """The four detector intensities of one correlation measurement.

    ``values`` maps (m, n) to the intensity recorded for outcome n at the
    earlier time and m at the later time; ``pair_label`` names the
    correlation it feeds ("21", "32" or "31").  Tiny negative entries
    (roundoff) are clamped to zero; genuinely negative ones are rejected.
    """

    values: dict
    pair_label: str

    def __post_init__(self):
        expected = {(m, n) for m in OUTCOMES for n in OUTCOMES}
        if set(self.values) != expected:
            raise ValueError(
                f"intensity table needs exactly the four (m, n) keys {sorted(expected)}"
            )
        cleaned = {}
        for key, raw in self.values.items():
            v = float(raw)
            if v < -NEGATIVE_INTENSITY_TOL:
                raise ValueError(f"intensity for {key} is negative: {v}")
            cleaned[key] = max(v, 0.0)
        object.__setattr__(self, "values", cleaned)

    def total(self) -> float:
        return sum(self.values.values())


@dataclass(frozen=True)
class CorrelationTriple:
    """The three two-time correlations entering the K statistic."""

    c21: float
    c32: float
    c31: float

    def k(self) -> float:
        return self.c21 + self.c32 - self.c31


@dataclass(frozen=True)
class KStat:
    """A value of K = C21 + C32 - C31 and whether it breaks the bound K <= 1."""

    k: float
    violated: bool

    @classmethod
    def from_value(cls, k: float) -> "KStat":
        return cls(k=float(k), violated=bool(k > 1.0 + VIOLATION_ATOL))


@dataclass(frozen=True)
class InitialStateSpec:
    """Recipe for an initial polarization state.

    ``kind`` is one of "linear", "diagonal", "unpolarized", "partial" or
    "custom"; the remaining fields only matter for the kinds that use
    them.  Build instances through the classmethods.
    """

    kind: str
    angle: float = 0.0
    dop: float = 1.0
    basis_angle: float = 0.0
    matrix: np.ndarray | None = field(default=None, repr=False)

    @classmethod
    def linear(cls, angle: float) -> "InitialStateSpec":
        """Pure linear polarization at ``angle`` degrees."""
        return cls(kind="linear", angle=float(angle))

    @classmethod
    def diagonal(cls) -> "InitialStateSpec":
        """Pure linear polarization at 45 degrees."""
        return cls(kind="diagonal", angle=45.0)

    @classmethod
    def unpolarized(cls) -> "InitialStateSpec":
        return cls(kind="unpolarized", dop=0.0)

    @classmethod
    def partially_polarized(cls, dop: float, basis_angle: float = 0.0) -> "InitialStateSpec":
        """Mixture of two orthogonal linear polarizations.

        The component at ``basis_angle`` gets weight (1 + dop)/2 and its
        orthogonal complement (1 - dop)/2, giving degree of polarization
        ``dop`` exactly.
        """
        dop = float(dop)
        if not 0.0 <= dop <= 1.0:
            raise ValueError("dop must be in [0,1]")
        return cls(kind="partial", dop=dop, basis_angle=float(basis_angle))

    @classmethod
    def custom(cls, matrix) -> "InitialStateSpec":
        m = np.array(matrix, dtype=complex)
        if not is_physical(m):
            raise UnphysicalStateError("custom state matrix is not physical")
        return cls(kind="custom", matrix=m)


def initial_state(spec: InitialStateSpec) -> np.ndarray:
    """Coherency matrix for ``spec``, normalized to unit trace."""
    if spec.kind in ("linear", "diagonal"):
        return jones_to_coherency(linear_jones(spec.angle))
    if spec.kind == "unpolarized":
        return 0.5 * np.eye(2, dtype=complex)
    if spec.kind == "partial":
        a = 0.5 * (1.0 + spec.dop)
        major = jones_to_coherency(linear_jones(spec.basis_angle))
        minor = jones_to_coherency(linear_jones(spec.basis_angle + 90.0))
        return a * major + (1.0 - a) * minor
    if spec.kind == "custom":
        if not is_physical(spec.matrix):
            raise UnphysicalStateError("custom state matrix is not physical")
        tr = intensity(spec.matrix)
        if tr < ZERO_INTENSITY:
            raise ZeroIntensityError("custom state has zero intensity")
        return np.asarray(spec.matrix, dtype=complex) / tr
    raise ValueError(f"unknown state kind {spec.kind!r}")


def _measured_table(label: str, start: np.ndarray, step: np.ndarray) -> IntensityTable:
    # Tr(P(m) step P(n) start P(n) step† P(m)) for the four outcome pairs
    vals = {}
    for n in OUTCOMES:
        pn = projector(n)
        branch = pn @ start @ pn
        for m in OUTCOMES:
            op = projector(m) @ step
            vals[(m, n)] = float(np.trace(op @ branch @ op.conj().T).real)
    return IntensityTable(values=vals, pair_label=label)


def intensities_c21(rho, u) -> IntensityTable:
    """Intensities for the (t2, t1) pair: project, evolve once, project."""
    return _measured_table("21", _as_matrix(rho, "coherency matrix"), _as_matrix(u, "unitary"))


def intensities_c32(rho, u) -> IntensityTable:
    """Intensities for the (t3, t2) pair: evolve once, project, evolve, project."""
    um = _as_matrix(u, "unitary")
    evolved = um @ _as_matrix(rho, "coherency matrix") @ um.conj().T
    return _measured_table("32", evolved, um)


def intensities_c31(rho, u) -> IntensityTable:
    """Intensities for the (t3, t1) pair: project, evolve twice, project."""
    um = _as_matrix(u, "unitary")
    return _measured_table("31", _as_matrix(rho, "coherency matrix"), um @ um)


def correlation(table: IntensityTable) -> float:
    """Outcome correlation of one intensity table, in [-1, 1].

    Invariant under uniform rescaling of the entries; undefined (and an
    error) when the table carries no intensity at all.
    """
    total = table.total()
    if total <= 0.0:
        raise ZeroIntensityError(
            f"correlation undefined: intensity table {table.pair_label} sums to zero"
        )
    signed = sum(m * n * v for (m, n), v in table.values.items())
    return signed / total


def correlation_triple(rho, u) -> CorrelationTriple:
    """All three correlations for initial state ``rho`` and step unitary ``u``."""
    return CorrelationTriple(
        c21=correlation(intensities_c21(rho, u)),
        c32=correlation(intensities_c32(rho, u)),
        c31=correlation(intensities_c31(rho, u)),
    )


def k_statistic(rho, cfg: EvolutionConfig) -> KStat:
    """K for initial state ``rho`` under the two-plate evolution ``cfg``.

    Runs the full measurement pipeline: three intensity tables, three
    correlations, K = C21 + C32 - C31.
    """
    triple = correlation_triple(rho, evolution_unitary(cfg))
    return KStat.from_value(triple.k())


def k_analytic(cfg: EvolutionConfig) -> float:
    """Closed-form K = 2*cos(4*(t1 - t2)) - cos(8*(t1 - t2)), angles in degrees.

    Depends only on the plate-angle difference and on no property of the
    initial state; the pipeline reproduces it for every physical state.
    """
    d = math.radians(4.0 * (cfg.theta1 - cfg.theta2))
    return 2.0 * math.cos(d) - math.cos(2.0 * d)


def rotated_observable(theta: float) -> tuple[np.ndarray, np.ndarray]:
    """Projector pair (P+, P-) of the linear-basis dichotomic observable
    at ``theta`` degrees.

    theta = 0 recovers the horizontal/vertical pair; P+ + P- is the
    identity for every angle.  Elliptical bases can be built by
    conjugating with retarders.
    """
    return linear_polarizer(theta), linear_polarizer(theta + 90.0)
