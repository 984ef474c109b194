"""Small dense complex linear algebra for qubit and two-qubit operators.

Matrices are plain ``numpy.ndarray`` objects of dtype ``complex128``. The
two-qubit basis is ordered ``|00>, |01>, |10>, |11>`` with party 1 in the
left slot, so ``kron(a, b)`` puts ``a`` on party 1.
"""
from __future__ import annotations

from typing import NamedTuple

import numpy as np

__all__ = [
    "DimensionError",
    "NotHermitianError",
    "ConvergenceError",
    "EigenSystem",
    "as_matrix",
    "matmul",
    "dagger",
    "kron",
    "partial_trace",
    "partial_transpose",
    "hermitian_eigensystem",
    "psd_sqrt",
    "I2",
    "SX",
    "SY",
    "SZ",
]

I2 = np.eye(2, dtype=complex)
SX = np.array([[0, 1], [1, 0]], dtype=complex)
SY = np.array([[0, -1j], [1j, 0]], dtype=complex)
SZ = np.array([[1, 0], [0, -1]], dtype=complex)

JACOBI_MAX_SWEEPS = 100
JACOBI_OFF_TOL = 1e-12
CLAMP_TOL = 1e-9


class DimensionError(ValueError):
    pass


class NotHermitianError(ValueError):
    pass


class ConvergenceError(RuntimeError):
    pass


class EigenSystem(NamedTuple):
    """Ascending eigenvalues with eigenvectors stored as matching columns."""

    eigenvalues: np.ndarray
    eigenvectors: np.ndarray


def as_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a finite 2-D complex array."""
    m = np.asarray(a, dtype=complex)
    if m.ndim != 2 or m.size == 0:
        raise DimensionError(f"expected a non-empty 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise ValueError("matrix has non-finite entries")
    return m


def matmul(a, b) -> np.ndarray:
    a, b = as_matrix(a), as_matrix(b)
    if a.shape[1] != b.shape[0]:
        raise DimensionError(f"cannot multiply {a.shape} by {b.shape}")
    return a @ b


def dagger(a) -> np.ndarray:
    return as_matrix(a).conj().T


def kron(a, b) -> np.ndarray:
    return np.kron(as_matrix(a), as_matrix(b))


def _check_two_qubit(rho) -> np.ndarray:
    m = as_matrix(rho)
    if m.shape != (4, 4):
        raise DimensionError(f"expected a 4x4 two-qubit operator, got {m.shape}")
    return m


def _check_party(party: int) -> None:
    if party not in (1, 2):
        raise ValueError(f"party must be 1 or 2, got {party!r}")


def partial_trace(rho, party: int) -> np.ndarray:
    """Trace out ``party`` (1 or 2) of a 4x4 operator, leaving the other qubit."""
    m = _check_two_qubit(rho)
    _check_party(party)
    t = m.reshape(2, 2, 2, 2)  # indices (i1, i2, j1, j2)
    if party == 1:
        return np.einsum("abad->bd", t)
    return np.einsum("abcb->ac", t)


def partial_transpose(rho, party: int) -> np.ndarray:
    """Transpose only the indices of ``party`` in a 4x4 operator."""
    m = _check_two_qubit(rho)
    _check_party(party)
    t = m.reshape(2, 2, 2, 2)
    if party == 1:
        t = t.transpose(2, 1, 0, 3)
    else:
        t = t.transpose(0, 3, 2, 1)
    return t.reshape(4, 4).copy()


def _max_antihermitian(m: np.ndarray) -> float:
    return float(np.max(np.abs(m - m.conj().T)))


def _off_norm(a: np.ndarray) -> float:
    return float(np.linalg.norm(a - np.diag(np.diag(a))))


def hermitian_eigensystem(h, tol: float = 1e-10) -> EigenSystem:
    """Diagonalize a Hermitian matrix with cyclic complex Jacobi rotations.

    Each ``(p, q)`` pivot is first made real by a diagonal phase on column
    ``q`` and then annihilated with the classical real rotation. Sweeps stop
    once the off-diagonal Frobenius norm drops below ``JACOBI_OFF_TOL``.

    Raises
    ------
    NotHermitianError
        If ``max |h - h^dagger| > tol``.
    ConvergenceError
        If ``JACOBI_MAX_SWEEPS`` sweeps do not reach the threshold.
    """
    a = as_matrix(h)
    n = a.shape[0]
    if a.shape[1] != n:
        raise DimensionError(f"expected a square matrix, got {a.shape}")
    if _max_antihermitian(a) > tol:
        raise NotHermitianError("matrix is not Hermitian within tolerance")

    a = 0.5 * (a + a.conj().T)
    v = np.eye(n, dtype=complex)
    for _ in range(JACOBI_MAX_SWEEPS):
        off = _off_norm(a)
        if off < JACOBI_OFF_TOL:
            break
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                b = abs(apq)
                if b < 1e-300:
                    continue
                phase = apq / b
                app, aqq = a[p, p].real, a[q, q].real
                tau = (aqq - app) / (2.0 * b)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.hypot(1.0, tau))
                c = 1.0 / np.hypot(1.0, t)
                s = t * c
                # J = D R with D = diag(.., 1, .., conj(phase), ..), R the real rotation
                jpp, jqp = c, -s * np.conj(phase)
                jpq, jqq = s, c * np.conj(phase)
                ap = a[:, p].copy()
                aq = a[:, q].copy()
                a[:, p] = ap * jpp + aq * jqp
                a[:, q] = ap * jpq + aq * jqq
                rp = a[p, :].copy()
                rq = a[q, :].copy()
                a[p, :] = np.conj(jpp) * rp + np.conj(jqp) * rq
                a[q, :] = np.conj(jpq) * rp + np.conj(jqq) * rq
                a[p, q] = 0.0
                a[q, p] = 0.0
                vp = v[:, p].copy()
                vq = v[:, q].copy()
                v[:, p] = vp * jpp + vq * jqp
                v[:, q] = vp * jpq + vq * jqq
    else:
        off = _off_norm(a)
        if off >= JACOBI_OFF_TOL:
            raise ConvergenceError(
                f"Jacobi did not converge in {JACOBI_MAX_SWEEPS} sweeps (off-norm {off:.3e})"
            )

    w = np.diag(a).real.copy()
    order = np.argsort(w, kind="stable")
    return EigenSystem(w[order], v[:, order])


def psd_sqrt(rho, tol: float = CLAMP_TOL) -> np.ndarray:
    """Hermitian square root of a positive semidefinite matrix.

    Eigenvalues in ``[-tol, 0)`` are clamped to zero; anything lower raises.
    """
    w, v = hermitian_eigensystem(rho)
    if w[0] < -tol:
        raise ValueError(f"matrix is not positive semidefinite (eigenvalue {w[0]:.3e})")
    root = np.sqrt(np.clip(w, 0.0, None))
    out = (v * root) @ v.conj().T
    return 0.5 * (out + out.conj().T)
