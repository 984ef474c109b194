"""Masking residuals, Cartan-parametrised maskers and phase unitaries."""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .linalg import as_matrix, partial_trace
from .states import InvalidStateError, density_matrix, ket, mix

__all__ = [
    "UNITARY_TOL",
    "MaskerParams",
    "MaskingVerdict",
    "MaskingPreconditionError",
    "NotUnitaryError",
    "masking_residual",
    "pure_masking_residual",
    "masking_verdict",
    "is_unitary",
    "apply_masker",
    "mask_pure",
    "euler_zyz",
    "cartan_core",
    "cartan_unitary",
    "phase_unitary",
    "canonical_orthogonal_masker",
    "verify_convex_masking",
    "ZERO_ANCILLA",
]

UNITARY_TOL = 1e-10
CONVEX_TOL = 1e-10
ZERO_ANCILLA = np.array([[1, 0], [0, 0]], dtype=complex)

_SQ = 1 / np.sqrt(2)
# Bell basis; columns diagonalise XX, YY, ZZ simultaneously.
_BELL = np.array(
    [
        [_SQ, _SQ, 0, 0],
        [0, 0, _SQ, _SQ],
        [0, 0, _SQ, -_SQ],
        [_SQ, -_SQ, 0, 0],
    ],
    dtype=complex,
)
# eigenvalues of (XX, YY, ZZ) on Phi+, Phi-, Psi+, Psi-
_BELL_SIGNS = np.array(
    [
        [1, -1, 1],
        [-1, 1, 1],
        [1, 1, -1],
        [-1, -1, -1],
    ],
    dtype=float,
)


class NotUnitaryError(ValueError):
    pass


class MaskingPreconditionError(ValueError):
    """The supplied unitary does not mask the two pure inputs."""


@dataclass(frozen=True)
class MaskerParams:
    """Nine real parameters of ``U = U_d(alpha) (V_A (x) V_B)``.

    ``euler_a`` and ``euler_b`` are Z-Y-Z Euler triples for the local
    unitaries applied before the entangling core.
    """

    alpha_x: float = 0.0
    alpha_y: float = 0.0
    alpha_z: float = 0.0
    euler_a: tuple[float, float, float] = (0.0, 0.0, 0.0)
    euler_b: tuple[float, float, float] = (0.0, 0.0, 0.0)

    def __post_init__(self):
        object.__setattr__(self, "euler_a", tuple(float(v) for v in self.euler_a))
        object.__setattr__(self, "euler_b", tuple(float(v) for v in self.euler_b))
        if len(self.euler_a) != 3 or len(self.euler_b) != 3:
            raise ValueError("Euler triples need exactly three angles")
        if not np.all(np.isfinite(self.to_vector())):
            raise ValueError("masker parameters must be finite")

    def to_vector(self) -> np.ndarray:
        return np.array(
            [self.alpha_x, self.alpha_y, self.alpha_z, *self.euler_a, *self.euler_b],
            dtype=float,
        )

    @classmethod
    def from_vector(cls, x) -> "MaskerParams":
        x = [float(v) for v in np.asarray(x, dtype=float).reshape(9)]
        return cls(x[0], x[1], x[2], tuple(x[3:6]), tuple(x[6:9]))

    def canonical(self) -> "MaskerParams":
        """Reduce each Cartan coefficient into ``[0, pi/2)``.

        Shifting ``alpha_k`` by ``pi/2`` multiplies ``U`` by the local
        operator ``-i sigma_k (x) sigma_k`` on the output side, so the reduced
        masker produces the same residuals and entanglement values.
        """
        a = np.mod([self.alpha_x, self.alpha_y, self.alpha_z], np.pi / 2)
        return MaskerParams(*map(float, a), self.euler_a, self.euler_b)

    def as_dict(self) -> dict:
        return {
            "alpha_x": self.alpha_x,
            "alpha_y": self.alpha_y,
            "alpha_z": self.alpha_z,
            "euler_a": list(self.euler_a),
            "euler_b": list(self.euler_b),
        }


@dataclass(frozen=True)
class MaskingVerdict:
    residual: float
    tolerance: float
    masked: bool = field(init=False)

    def __post_init__(self):
        object.__setattr__(self, "masked", bool(self.residual <= self.tolerance))


def _reduced_pair(rho: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    return partial_trace(rho, 1), partial_trace(rho, 2)


def masking_residual(lambda1, lambda2) -> float:
    """``||Tr_1 L1 - Tr_1 L2||_F^2 + ||Tr_2 L1 - Tr_2 L2||_F^2``."""
    l1 = density_matrix(lambda1)
    l2 = density_matrix(lambda2)
    if l1.shape != (4, 4) or l2.shape != (4, 4):
        raise InvalidStateError("masking residual needs two-qubit states")
    a1, a2 = _reduced_pair(l1)
    b1, b2 = _reduced_pair(l2)
    return float(np.sum(np.abs(a1 - b1) ** 2) + np.sum(np.abs(a2 - b2) ** 2))


def pure_masking_residual(psi1, psi2) -> float:
    """Masking residual of two pure two-qubit states, from their amplitudes.

    Reshaping a ket into the 2x2 coefficient matrix ``M`` gives the marginals
    as ``M M^dagger`` and ``M^T M^*`` without building projectors.
    """
    m1 = ket(psi1, 4).reshape(2, 2)
    m2 = ket(psi2, 4).reshape(2, 2)
    d_first = m1 @ m1.conj().T - m2 @ m2.conj().T
    d_second = m1.T @ m1.conj() - m2.T @ m2.conj()
    return float(np.sum(np.abs(d_first) ** 2) + np.sum(np.abs(d_second) ** 2))


def masking_verdict(lambda1, lambda2, tolerance: float = 1e-10) -> MaskingVerdict:
    return MaskingVerdict(masking_residual(lambda1, lambda2), tolerance)


def is_unitary(u, tol: float = UNITARY_TOL) -> bool:
    u = as_matrix(u)
    if u.shape[0] != u.shape[1]:
        return False
    return float(np.linalg.norm(u.conj().T @ u - np.eye(u.shape[0]))) <= tol


def _check_unitary(u) -> np.ndarray:
    u = as_matrix(u)
    if u.shape != (4, 4):
        raise NotUnitaryError(f"masker must be 4x4, got {u.shape}")
    if not is_unitary(u):
        raise NotUnitaryError("masker is not unitary")
    return u


def apply_masker(u, state, ancilla=ZERO_ANCILLA) -> np.ndarray:
    """``U (state (x) ancilla) U^dagger`` for single-qubit ``state`` and ``ancilla``."""
    u = _check_unitary(u)
    state = density_matrix(state)
    ancilla = density_matrix(ancilla)
    if state.shape != (2, 2) or ancilla.shape != (2, 2):
        raise InvalidStateError("input and ancilla must be single-qubit states")
    out = u @ np.kron(state, ancilla) @ u.conj().T
    return 0.5 * (out + out.conj().T)


def mask_pure(u, psi, ancilla_ket=(1.0, 0.0)) -> np.ndarray:
    """Masked ket ``U (psi (x) a)`` for single-qubit pure inputs."""
    return as_matrix(u) @ np.kron(ket(psi, 2), ket(ancilla_ket, 2))


def euler_zyz(a: float, b: float, c: float) -> np.ndarray:
    """``Rz(a) Ry(b) Rz(c)`` with ``Rz(t) = diag(e^{-it/2}, e^{it/2})``."""
    rz = lambda t: np.array([[np.exp(-0.5j * t), 0], [0, np.exp(0.5j * t)]])  # noqa: E731
    cb, sb = np.cos(b / 2), np.sin(b / 2)
    ry = np.array([[cb, -sb], [sb, cb]], dtype=complex)
    return rz(a) @ ry @ rz(c)


def cartan_core(alpha_x: float, alpha_y: float, alpha_z: float) -> np.ndarray:
    """``exp(-i (ax XX + ay YY + az ZZ))`` evaluated in the Bell basis."""
    phases = np.exp(-1j * (_BELL_SIGNS @ np.array([alpha_x, alpha_y, alpha_z], dtype=float)))
    return (_BELL * phases) @ _BELL.conj().T


def cartan_unitary(params: MaskerParams) -> np.ndarray:
    local = np.kron(euler_zyz(*params.euler_a), euler_zyz(*params.euler_b))
    return cartan_core(params.alpha_x, params.alpha_y, params.alpha_z) @ local


def phase_unitary(y: float) -> np.ndarray:
    """``I (x) diag(1, e^{iy})``: a phase on the second party only."""
    y = float(y)
    if not np.isfinite(y) or y < 0 or y > 2 * np.pi + 1e-12:
        raise ValueError(f"phase y={y!r} outside [0, 2pi]")
    return np.diag([1.0, np.exp(1j * y), 1.0, np.exp(1j * y)]).astype(complex)


def canonical_orthogonal_masker() -> np.ndarray:
    """Unitary sending ``|00>, |10>`` to the theta=0 canonical masked pair.

    Columns (inputs ``|00>, |01>, |10>, |11>``) are ``(|01>+|10>)/sqrt2``,
    ``(|01>-|10>)/sqrt2``, ``(|00>-|11>)/sqrt2`` and ``(|00>+|11>)/sqrt2``.
    """
    s = _SQ
    return np.array(
        [
            [0, 0, s, s],
            [s, s, 0, 0],
            [s, -s, 0, 0],
            [0, 0, -s, s],
        ],
        dtype=complex,
    )


def _pure_masked(u, psi, ancilla) -> np.ndarray:
    return apply_masker(u, np.outer(psi, np.conj(psi)), ancilla)


def verify_convex_masking(u, psi1, psi2, ancilla=ZERO_ANCILLA, p_grid=None, tol: float = CONVEX_TOL) -> bool:
    """Check that a masker of two pure inputs also masks all their mixtures.

    Raises :class:`MaskingPreconditionError` when ``u`` does not mask the
    pure inputs; otherwise returns whether both marginals of every masked
    mixture equal the common pure-state marginals entrywise within ``tol``.
    """
    u = _check_unitary(u)
    psi1 = ket(psi1, 2)
    psi2 = ket(psi2, 2)
    if p_grid is None:
        p_grid = np.linspace(0.0, 1.0, 11)
    out1 = _pure_masked(u, psi1, ancilla)
    out2 = _pure_masked(u, psi2, ancilla)
    residual = masking_residual(out1, out2)
    if residual > tol:
        raise MaskingPreconditionError(f"unitary does not mask the inputs (residual {residual:.3e})")
    ref_first, ref_second = _reduced_pair(out1)
    for p in p_grid:
        sigma = mix(psi1, psi2, float(p))
        out = apply_masker(u, sigma, ancilla)
        first, second = _reduced_pair(out)
        if np.max(np.abs(first - ref_first)) > tol or np.max(np.abs(second - ref_second)) > tol:
            return False
    return True
