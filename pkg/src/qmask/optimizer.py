"""Multi-start search over two-qubit unitary maskers, plus brute-force grid oracles.

Each restart runs a Nelder-Mead simplex over the nine :class:`MaskerParams`
coordinates. Restart ``k`` draws its starting point from
``numpy.random.default_rng([seed, k])``, so results do not depend on the
order in which restarts execute.
"""
from __future__ import annotations

from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field

import numpy as np
from scipy.optimize import minimize

from .entanglement import entanglement_of_formation, eof_batch
from .masking import (
    MaskerParams,
    MaskingPreconditionError,
    cartan_unitary,
    pure_masking_residual,
)
from .states import ket, nonorthogonal_pair, walgate_orthogonal_pair

__all__ = [
    "OptimizerConfig",
    "OptimizationResult",
    "IdenticalInputsError",
    "find_masker",
    "min_entanglement_masker",
    "entanglement_scan",
    "masked_pair",
    "lemma2_grid_oracle",
    "lemma3_grid_oracle",
]

NM_XATOL = 1e-10
NM_FATOL = 1e-12
ORACLE_TOL = 1e-6


class IdenticalInputsError(ValueError):
    pass


def _default_p_grid() -> tuple[float, ...]:
    return tuple(float(p) for p in np.linspace(0.0, 1.0, 21))


@dataclass(frozen=True)
class OptimizerConfig:
    restarts: int = 64
    max_iterations: int = 2000
    seed: int = 0
    masking_tolerance: float = 1e-8
    penalty_weight: float = 1e4
    simplex_scale: float = 0.3
    p_grid: tuple[float, ...] = field(default_factory=_default_p_grid)

    def __post_init__(self):
        object.__setattr__(self, "p_grid", tuple(float(p) for p in self.p_grid))
        if self.restarts < 1:
            raise ValueError("restarts must be positive")
        if self.max_iterations < 1:
            raise ValueError("max_iterations must be positive")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.masking_tolerance <= 0:
            raise ValueError("masking_tolerance must be positive")
        if self.penalty_weight <= 0 or self.simplex_scale <= 0:
            raise ValueError("penalty_weight and simplex_scale must be positive")
        grid = np.asarray(self.p_grid)
        if grid.size == 0 or np.any(grid < 0) or np.any(grid > 1) or np.any(np.diff(grid) < 0):
            raise ValueError("p_grid must be a non-empty sorted sequence in [0, 1]")

    def as_dict(self) -> dict:
        d = asdict(self)
        d["p_grid"] = list(self.p_grid)
        return d


@dataclass(frozen=True)
class OptimizationResult:
    params: MaskerParams
    residual: float
    eof_by_p: tuple[tuple[float, float], ...]
    min_eof: float
    argmin_p: float
    converged: bool
    restart_index: int
    objective: float
    iterations: int

    def as_dict(self) -> dict:
        return {
            "params": self.params.as_dict(),
            "residual": self.residual,
            "eof_by_p": [list(row) for row in self.eof_by_p],
            "min_eof": self.min_eof,
            "argmin_p": self.argmin_p,
            "converged": self.converged,
            "restart_index": self.restart_index,
            "objective": self.objective,
            "iterations": self.iterations,
        }


def masked_pair(x, psi1: np.ndarray, psi2: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Masked kets ``U(x)(psi (x) |0>)`` for a parameter vector ``x``."""
    u = cartan_unitary(MaskerParams.from_vector(x))
    # U (psi (x) |0>) only touches columns 0 and 2 of U
    cols = u[:, [0, 2]]
    return cols @ psi1, cols @ psi2


def _residual_objective(x, psi1, psi2) -> float:
    a, b = masked_pair(x, psi1, psi2)
    return pure_masking_residual(a, b)


def _family(a: np.ndarray, b: np.ndarray, p_grid: np.ndarray) -> np.ndarray:
    pa = np.outer(a, a.conj())
    pb = np.outer(b, b.conj())
    return p_grid[:, None, None] * pa + (1.0 - p_grid)[:, None, None] * pb


def _penalty_objective(x, psi1, psi2, p_grid, weight) -> float:
    a, b = masked_pair(x, psi1, psi2)
    return weight * pure_masking_residual(a, b) + float(np.sum(eof_batch(_family(a, b, p_grid))))


def _run_restart(task) -> tuple[int, np.ndarray, float, int]:
    kind, k, psi1, psi2, cfg = task
    rng = np.random.default_rng([cfg.seed, k])
    x0 = rng.uniform(0.0, 2 * np.pi, 9)
    simplex = np.vstack([x0, x0 + cfg.simplex_scale * np.eye(9)])
    if kind == "residual":
        fun, args = _residual_objective, (psi1, psi2)
    else:
        fun, args = _penalty_objective, (psi1, psi2, np.asarray(cfg.p_grid), cfg.penalty_weight)
    res = minimize(
        fun,
        x0,
        args=args,
        method="Nelder-Mead",
        options={
            "initial_simplex": simplex,
            "maxiter": cfg.max_iterations,
            "maxfev": 10 * cfg.max_iterations,
            "xatol": NM_XATOL,
            "fatol": NM_FATOL,
        },
    )
    return k, np.asarray(res.x, dtype=float), float(res.fun), int(res.nit)


def _check_inputs(input1, input2) -> tuple[np.ndarray, np.ndarray]:
    psi1 = ket(input1, 2)
    psi2 = ket(input2, 2)
    if abs(np.vdot(psi1, psi2)) ** 2 > 1.0 - 1e-12:
        raise IdenticalInputsError("inputs are the same state; there is nothing to mask")
    return psi1, psi2


def _eof_curve(x, psi1, psi2, p_grid) -> tuple[tuple[float, float], ...]:
    a, b = masked_pair(x, psi1, psi2)
    pa = np.outer(a, a.conj())
    pb = np.outer(b, b.conj())
    out = []
    for p in p_grid:
        rho = p * pa + (1.0 - p) * pb
        out.append((float(p), entanglement_of_formation(0.5 * (rho + rho.conj().T))))
    return tuple(out)


def _search(kind: str, input1, input2, config: OptimizerConfig, workers: int) -> OptimizationResult:
    psi1, psi2 = _check_inputs(input1, input2)
    tasks = [(kind, k, psi1, psi2, config) for k in range(config.restarts)]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            runs = list(pool.map(_run_restart, tasks))
    else:
        runs = [_run_restart(t) for t in tasks]
    # min objective, ties to the lowest restart index
    k, x, fun, nit = min(runs, key=lambda r: (r[2], r[0]))
    residual = _residual_objective(x, psi1, psi2)
    curve = _eof_curve(x, psi1, psi2, config.p_grid)
    i_min = min(range(len(curve)), key=lambda i: (curve[i][1], i))
    return OptimizationResult(
        params=MaskerParams.from_vector(x),
        residual=residual,
        eof_by_p=curve,
        min_eof=curve[i_min][1],
        argmin_p=curve[i_min][0],
        converged=residual <= config.masking_tolerance,
        restart_index=k,
        objective=fun,
        iterations=nit,
    )


def find_masker(input1, input2, config: OptimizerConfig | None = None, workers: int = 1) -> OptimizationResult:
    """Best-of-restarts unitary minimising the masking residual of two qubit kets.

    A result with ``converged=False`` is returned, not raised, when no
    restart reaches ``config.masking_tolerance``.
    """
    return _search("residual", input1, input2, config or OptimizerConfig(), workers)


def min_entanglement_masker(
    input1, input2, config: OptimizerConfig | None = None, workers: int = 1
) -> OptimizationResult:
    """Masker minimising ``weight * residual + sum_p E_F(eps'(p))`` over ``config.p_grid``."""
    return _search("penalty", input1, input2, config or OptimizerConfig(), workers)


def entanglement_scan(params: MaskerParams, input1, input2, p_grid, tol: float = 1e-8):
    """E_F of the masked mixtures ``U(p psi1 + (1-p) psi2 (x) |0><0|)U^dagger``."""
    psi1, psi2 = _check_inputs(input1, input2)
    x = params.to_vector()
    residual = _residual_objective(x, psi1, psi2)
    if residual > tol:
        raise MaskingPreconditionError(f"parameters do not mask the inputs (residual {residual:.3e})")
    return list(_eof_curve(x, psi1, psi2, [float(p) for p in p_grid]))


def lemma2_grid_oracle(theta: float, steps: int):
    """Exhaustive ``(alpha1, alpha2, theta')`` grid for the orthogonal Walgate pair.

    Returns every grid point whose masking residual is at most 1e-6, as
    ``(alpha1, alpha2, theta_prime, residual)`` tuples.
    """
    if steps < 3:
        raise ValueError("steps must be at least 3")
    alphas = np.linspace(0.0, 1.0, steps)
    primes = np.linspace(0.0, 2 * np.pi, steps)
    hits = []
    for a1 in alphas:
        for a2 in alphas:
            for tp in primes:
                chi1, chi2 = walgate_orthogonal_pair(theta, tp, a1, a2)
                r = pure_masking_residual(chi1, chi2)
                if r <= ORACLE_TOL:
                    hits.append((float(a1), float(a2), float(tp), r))
    return hits


def lemma3_grid_oracle(theta: float, steps: int):
    """Grid over ``(t0, theta')`` for the equal-overlap pair, ``t1 = 1 - t0``.

    Points where the two states coincide up to phase mask trivially and are
    skipped. Returns ``(t0, theta_prime, residual)`` tuples.
    """
    if steps < 3:
        raise ValueError("steps must be at least 3")
    hits = []
    for t0 in np.linspace(0.0, 1.0, steps):
        for tp in np.linspace(0.0, 2 * np.pi, steps):
            s1, s2 = nonorthogonal_pair(theta, tp, t0)
            if abs(np.vdot(s1, s2)) ** 2 > 1.0 - 1e-9:
                continue
            r = pure_masking_residual(s1, s2)
            if r <= ORACLE_TOL:
                hits.append((float(t0), float(tp), r))
    return hits
