"""Entropies and two-qubit entanglement quantifiers, all in base 2."""
from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import (
    CLAMP_TOL,
    SY,
    hermitian_eigensystem,
    partial_trace,
    partial_transpose,
    psd_sqrt,
)
from .states import InvalidStateError, density_matrix, ket

__all__ = [
    "PPT_TOL",
    "EntanglementReport",
    "binary_entropy",
    "eof_from_concurrence",
    "von_neumann_entropy",
    "local_entropies",
    "entropic_gap",
    "spin_flip",
    "concurrence",
    "entanglement_of_formation",
    "negativity",
    "partial_transpose_det",
    "is_ppt",
    "pure_concurrence",
    "pure_entanglement_entropy",
    "entanglement_report",
    "concurrence_batch",
    "eof_batch",
]

PPT_TOL = 1e-9
_YY = np.kron(SY, SY)


def binary_entropy(x):
    """``h(x) = -x log2 x - (1-x) log2(1-x)`` with ``0 log 0 = 0``; accepts arrays."""
    x = np.clip(np.asarray(x, dtype=float), 0.0, 1.0)
    out = np.zeros_like(x)
    inner = (x > 0.0) & (x < 1.0)
    xi = x[inner]
    out[inner] = -xi * np.log2(xi) - (1.0 - xi) * np.log2(1.0 - xi)
    return out if out.ndim else float(out)


def eof_from_concurrence(c):
    """Wootters' map from concurrence to entanglement of formation (ebits)."""
    c = np.clip(np.asarray(c, dtype=float), 0.0, 1.0)
    return binary_entropy(0.5 * (1.0 + np.sqrt(1.0 - c * c)))


def _entropy_from_eigenvalues(w: np.ndarray) -> float:
    w = np.clip(np.asarray(w, dtype=float), 0.0, None)
    w = w[w > 0.0]
    return float(max(0.0, -np.sum(w * np.log2(w))))


def von_neumann_entropy(rho) -> float:
    rho = density_matrix(rho)
    w, _ = hermitian_eigensystem(rho)
    return _entropy_from_eigenvalues(w)


def local_entropies(rho) -> tuple[float, float]:
    """Entropies of the party-1 and party-2 marginals of a two-qubit state."""
    rho = density_matrix(rho)
    s1 = von_neumann_entropy(partial_trace(rho, 2))
    s2 = von_neumann_entropy(partial_trace(rho, 1))
    return s1, s2


def entropic_gap(rho) -> float:
    """``S(rho) - S(Tr_1 rho)``; a negative value certifies entanglement."""
    rho = density_matrix(rho)
    return von_neumann_entropy(rho) - von_neumann_entropy(partial_trace(rho, 1))


def spin_flip(rho) -> np.ndarray:
    return _YY @ np.conj(rho) @ _YY


def concurrence(rho) -> float:
    """Wootters concurrence ``max(0, l1 - l2 - l3 - l4)``.

    The ``l_i`` are the square roots of the eigenvalues of the Hermitian
    matrix ``sqrt(rho) rho~ sqrt(rho)``. That matrix equals ``A A^dagger``
    with ``A = sqrt(rho) YY sqrt(rho)^*``, so the ``l_i`` are the singular
    values of ``A``; they are read off as the non-negative eigenvalues of the
    Hermitian dilation ``[[0, A], [A^dagger, 0]]``, which avoids a second
    square root and keeps their absolute error at round-off level.
    """
    rho = density_matrix(rho)
    if rho.shape != (4, 4):
        raise InvalidStateError("concurrence is defined for two-qubit states")
    root = psd_sqrt(rho)
    a = root @ _YY @ np.conj(root)
    dilation = np.block([[np.zeros((4, 4)), a], [a.conj().T, np.zeros((4, 4))]])
    w, _ = hermitian_eigensystem(dilation, tol=1e-9)
    lam = np.clip(w[4:], 0.0, None)[::-1]
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))


def entanglement_of_formation(rho) -> float:
    return float(eof_from_concurrence(concurrence(rho)))


def negativity(rho) -> float:
    """Sum of the magnitudes of negative eigenvalues of ``rho^{T_2}``."""
    rho = density_matrix(rho)
    w, _ = hermitian_eigensystem(partial_transpose(rho, 2))
    return float(np.sum(np.clip(-w, 0.0, None)))


def partial_transpose_det(rho) -> float:
    rho = density_matrix(rho)
    w, _ = hermitian_eigensystem(partial_transpose(rho, 2))
    return float(np.prod(w))


def is_ppt(rho, tol: float = PPT_TOL) -> bool:
    return negativity(rho) <= tol


def pure_concurrence(psi) -> float:
    a, b, c, d = ket(psi, 4)
    return float(min(1.0, 2.0 * abs(a * d - b * c)))


def pure_entanglement_entropy(psi) -> float:
    """Entropy of the reduced state of a pure two-qubit state (ebits)."""
    psi = ket(psi, 4)
    return von_neumann_entropy(partial_trace(np.outer(psi, psi.conj()), 1))


@dataclass(frozen=True)
class EntanglementReport:
    entropy_global: float
    entropy_local_1: float
    entropy_local_2: float
    delta_s: float
    concurrence: float
    eof: float
    negativity: float
    ppt: bool


def entanglement_report(rho, tol: float = PPT_TOL) -> EntanglementReport:
    rho = density_matrix(rho)
    s = von_neumann_entropy(rho)
    s1, s2 = local_entropies(rho)
    c = concurrence(rho)
    neg = negativity(rho)
    return EntanglementReport(
        entropy_global=s,
        entropy_local_1=s1,
        entropy_local_2=s2,
        delta_s=s - s1,
        concurrence=c,
        eof=float(eof_from_concurrence(c)),
        negativity=neg,
        ppt=neg <= tol,
    )


# Vectorised LAPACK path for the optimizer's inner loop. Cross-checked against
# the Jacobi route above in the test suite.


def _batch_psd_sqrt(rhos: np.ndarray) -> np.ndarray:
    w, v = np.linalg.eigh(rhos)
    if np.any(w < -CLAMP_TOL):
        raise ValueError("batch contains a non-PSD matrix")
    root = np.sqrt(np.clip(w, 0.0, None))
    return (v * root[..., None, :]) @ np.conj(np.swapaxes(v, -1, -2))


def concurrence_batch(rhos) -> np.ndarray:
    """Concurrence of a stack of 4x4 density matrices, shape ``(..., 4, 4)``."""
    rhos = np.asarray(rhos, dtype=complex)
    root = _batch_psd_sqrt(rhos)
    a = root @ _YY @ np.conj(root)
    lam = np.linalg.svd(a, compute_uv=False)
    return np.clip(lam[..., 0] - lam[..., 1] - lam[..., 2] - lam[..., 3], 0.0, None)


def eof_batch(rhos) -> np.ndarray:
    return np.asarray(eof_from_concurrence(concurrence_batch(rhos)), dtype=float)
