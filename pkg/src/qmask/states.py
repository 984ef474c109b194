"""Qubit and two-qubit state families used by the masking analysis."""
from __future__ import annotations

import numpy as np

from .linalg import as_matrix

__all__ = [
    "InvalidStateError",
    "ket",
    "projector",
    "density_matrix",
    "is_density_matrix",
    "bloch_to_pure",
    "walgate_orthogonal_pair",
    "canonical_orthogonal_pair",
    "nonorthogonal_pair",
    "canonical_nonorthogonal_pair",
    "mix",
    "masked_mixture_orthogonal",
    "masked_mixture_nonorthogonal",
]

NORM_TOL = 1e-10
HERMITIAN_TOL = 1e-10
TRACE_TOL = 1e-10
EIG_FLOOR = -1e-9
_ANGLE_SLACK = 1e-12


class InvalidStateError(ValueError):
    pass


def _check_range(name: str, value: float, lo: float, hi: float) -> float:
    value = float(value)
    if not np.isfinite(value) or value < lo - _ANGLE_SLACK or value > hi + _ANGLE_SLACK:
        raise ValueError(f"{name}={value!r} outside [{lo}, {hi}]")
    return value


def ket(amplitudes, dim: int | None = None) -> np.ndarray:
    """Validate a normalized state vector and return it as a complex array."""
    psi = np.asarray(amplitudes, dtype=complex).reshape(-1)
    if dim is not None and psi.shape[0] != dim:
        raise InvalidStateError(f"expected {dim} amplitudes, got {psi.shape[0]}")
    if not np.all(np.isfinite(psi)):
        raise InvalidStateError("amplitudes must be finite")
    norm = np.linalg.norm(psi)
    if abs(norm - 1.0) > NORM_TOL:
        raise InvalidStateError(f"state is not normalized (norm {norm:.12g})")
    return psi


def projector(psi) -> np.ndarray:
    psi = ket(psi)
    return np.outer(psi, psi.conj())


def is_density_matrix(rho) -> bool:
    try:
        density_matrix(rho)
    except (InvalidStateError, ValueError):
        return False
    return True


def density_matrix(rho) -> np.ndarray:
    """Validate a 2x2 or 4x4 density matrix.

    Checks Hermiticity and unit trace to 1e-10 and that no eigenvalue lies
    below -1e-9. A 1-D input is treated as a ket and turned into its projector.
    """
    arr = np.asarray(rho, dtype=complex)
    if arr.ndim == 1:
        return projector(arr)
    m = as_matrix(arr)
    if m.shape not in ((2, 2), (4, 4)):
        raise InvalidStateError(f"density matrix must be 2x2 or 4x4, got {m.shape}")
    if np.max(np.abs(m - m.conj().T)) > HERMITIAN_TOL:
        raise InvalidStateError("density matrix is not Hermitian")
    tr = np.trace(m)
    if abs(tr - 1.0) > TRACE_TOL:
        raise InvalidStateError(f"density matrix trace is {tr.real:.12g}, expected 1")
    if np.linalg.eigvalsh(m).min() < EIG_FLOOR:
        raise InvalidStateError("density matrix has a negative eigenvalue")
    return m


def bloch_to_pure(polar: float, azimuth: float = 0.0) -> np.ndarray:
    """Single-qubit state ``cos(x/2)|0> + e^{iy} sin(x/2)|1>``."""
    x = _check_range("polar", polar, 0.0, np.pi)
    y = _check_range("azimuth", azimuth, 0.0, 2 * np.pi)
    return np.array([np.cos(x / 2), np.exp(1j * y) * np.sin(x / 2)], dtype=complex)


def _qubit(angle: float) -> np.ndarray:
    return np.array([np.cos(angle / 2), np.sin(angle / 2)], dtype=complex)


def _qubit_flipped(angle: float) -> np.ndarray:
    return np.array([np.sin(angle / 2), np.cos(angle / 2)], dtype=complex)


_E0 = np.array([1, 0], dtype=complex)
_E1 = np.array([0, 1], dtype=complex)


def walgate_orthogonal_pair(
    theta: float, theta_prime: float, alpha1: float, alpha2: float
) -> tuple[np.ndarray, np.ndarray]:
    """Two orthogonal two-qubit states in Walgate form with real Bloch vectors.

    Party 1 carries the computational basis; party 2 carries
    ``eta0 = (cos(theta'/2), sin(theta'/2))`` on ``|0>`` and
    ``eta1 = (cos(theta/2), sin(theta/2))`` on ``|1>``, together with their
    orthogonal partners for the second state.
    """
    theta = _check_range("theta", theta, 0.0, 2 * np.pi)
    theta_prime = _check_range("theta_prime", theta_prime, 0.0, 2 * np.pi)
    alpha1 = _check_range("alpha1", alpha1, 0.0, 1.0)
    alpha2 = _check_range("alpha2", alpha2, 0.0, 1.0)
    c0, s0 = np.cos(theta_prime / 2), np.sin(theta_prime / 2)
    c1, s1 = np.cos(theta / 2), np.sin(theta / 2)
    a1, b1 = np.sqrt(alpha1), np.sqrt(1.0 - alpha1)
    a2, b2 = np.sqrt(alpha2), np.sqrt(1.0 - alpha2)
    chi1 = np.array([a1 * c0, a1 * s0, b1 * c1, b1 * s1], dtype=complex)
    chi2 = np.array([a2 * s0, -a2 * c0, b2 * s1, -b2 * c1], dtype=complex)
    return chi1, chi2


def canonical_orthogonal_pair(theta: float) -> tuple[np.ndarray, np.ndarray]:
    """The maximally entangled pair that satisfies the masking condition."""
    theta = _check_range("theta", theta, 0.0, np.pi)
    return walgate_orthogonal_pair(theta, theta + np.pi, 0.5, 0.5)


def nonorthogonal_pair(theta: float, theta_prime: float, t0: float) -> tuple[np.ndarray, np.ndarray]:
    """Equal-overlap pair ``sqrt(t0)|0 tau0> + sqrt(1-t0)|1 tau1>`` and its ``nu`` twin.

    ``tau0 = (cos, sin)(theta/2)``, ``tau1 = (sin, cos)(theta/2)`` and the
    ``nu`` vectors use ``theta_prime`` the same way, which makes
    ``<tau0|nu0> = <tau1|nu1>`` hold for every angle pair.
    """
    theta = float(theta)
    theta_prime = float(theta_prime)
    t0 = _check_range("t0", t0, 0.0, 1.0)
    a, b = np.sqrt(t0), np.sqrt(1.0 - t0)
    sigma1 = a * np.kron(_E0, _qubit(theta)) + b * np.kron(_E1, _qubit_flipped(theta))
    sigma2 = a * np.kron(_E0, _qubit(theta_prime)) + b * np.kron(_E1, _qubit_flipped(theta_prime))
    return sigma1, sigma2


def canonical_nonorthogonal_pair(theta: float) -> tuple[np.ndarray, np.ndarray]:
    r"""Masked non-orthogonal pair ``(|0 tau0> + |1 tau1>)/\sqrt2`` and ``(|0 tau1> + |1 tau0>)/\sqrt2``.

    Obtained from :func:`nonorthogonal_pair` at ``t0 = 1/2`` and
    ``theta' = pi - theta``. The overlap of the two states is ``sin(theta)``,
    so they coincide at ``theta = pi/2``.
    """
    theta = _check_range("theta", theta, 0.0, np.pi / 2)
    return nonorthogonal_pair(theta, np.pi - theta, 0.5)


def mix(a, b, p: float) -> np.ndarray:
    """Convex combination ``p a + (1 - p) b`` of two density matrices (or kets)."""
    p = _check_range("p", p, 0.0, 1.0)
    a = density_matrix(a)
    b = density_matrix(b)
    if a.shape != b.shape:
        raise InvalidStateError(f"dimension mismatch: {a.shape} vs {b.shape}")
    return p * a + (1.0 - p) * b


def masked_mixture_orthogonal(p: float, theta: float) -> np.ndarray:
    chi1, chi2 = canonical_orthogonal_pair(theta)
    return mix(chi1, chi2, p)


def masked_mixture_nonorthogonal(p: float, theta: float) -> np.ndarray:
    sigma1, sigma2 = canonical_nonorthogonal_pair(theta)
    return mix(sigma1, sigma2, p)
