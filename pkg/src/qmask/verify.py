"""Numerical verification suites for the masking results.

Every suite returns a :class:`SuiteReport`. Each check records the worst
measured value next to its tolerance so that a failing run shows how far off
it was.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .entanglement import (
    concurrence,
    entropic_gap,
    eof_from_concurrence,
    negativity,
    partial_transpose_det,
    pure_entanglement_entropy,
    von_neumann_entropy,
)
from .linalg import partial_trace
from .masking import (
    apply_masker,
    canonical_orthogonal_masker,
    masking_residual,
    phase_unitary,
    pure_masking_residual,
    verify_convex_masking,
)
from .optimizer import lemma2_grid_oracle, lemma3_grid_oracle
from .states import (
    canonical_nonorthogonal_pair,
    canonical_orthogonal_pair,
    masked_mixture_nonorthogonal,
    masked_mixture_orthogonal,
    mix,
)

__all__ = ["Check", "SuiteReport", "SUITES", "run_suite", "theorem1_entropy"]


@dataclass(frozen=True)
class Check:
    description: str
    passed: bool
    measured: float
    tolerance: float


@dataclass
class SuiteReport:
    suite: str
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def add(self, description: str, passed: bool, measured: float, tolerance: float) -> None:
        self.checks.append(Check(description, bool(passed), float(measured), float(tolerance)))

    def format(self) -> str:
        lines = [f"suite {self.suite}: {'PASS' if self.passed else 'FAIL'}"]
        for c in self.checks:
            mark = "PASS" if c.passed else "FAIL"
            lines.append(f"  [{mark}] {c.description} (measured {c.measured:.3e}, tolerance {c.tolerance:.1e})")
        return "\n".join(lines)


def theorem1_entropy(p: float) -> float:
    """Closed-form global entropy of the masked orthogonal mixture, piecewise in p."""

    def xlog(x: float) -> float:
        return 0.0 if x <= 0.0 else x * np.log2(x)

    big = 0.5 * (1.0 + abs(1.0 - 2.0 * p))
    small = p if p <= 0.5 else 1.0 - p
    return -xlog(small) - xlog(big)


def _eof_closed_form(p: float) -> float:
    return float(eof_from_concurrence(abs(2.0 * p - 1.0)))


def _within_cell(points, centre, cell) -> float:
    """Largest per-axis distance, in cells, from ``centre`` over ``points``."""
    worst = 0.0
    for pt in points:
        worst = max(worst, max(abs(a - b) / c for a, b, c in zip(pt, centre, cell)))
    return worst


THETAS_3 = (0.0, np.pi / 4, np.pi / 2)


def suite_lemma1() -> SuiteReport:
    rep = SuiteReport("lemma1")
    u = canonical_orthogonal_masker()
    zero, one = np.array([1, 0]), np.array([0, 1])
    grid = np.linspace(0.0, 1.0, 11)
    rep.add("canonical masker masks all mixtures of |0>,|1> (11-point grid)",
            verify_convex_masking(u, zero, one, p_grid=grid), 0.0, 1e-10)
    worst = 0.0
    for p in grid:
        out = apply_masker(u, mix(zero, one, p))
        for party in (1, 2):
            worst = max(worst, np.max(np.abs(partial_trace(out, party) - np.eye(2) / 2)))
    rep.add("both marginals equal I/2 entrywise", worst <= 1e-10, worst, 1e-10)
    rep.add("endpoint grid {0, 1}", verify_convex_masking(u, zero, one, p_grid=[0.0, 1.0]), 0.0, 1e-10)
    return rep


def suite_lemma2(steps: int = 41) -> SuiteReport:
    rep = SuiteReport("lemma2")
    cell = (1.0 / (steps - 1), 1.0 / (steps - 1), 2 * np.pi / (steps - 1))
    for theta in THETAS_3:
        hits = lemma2_grid_oracle(theta, steps)
        dist = _within_cell([h[:3] for h in hits], (0.5, 0.5, theta + np.pi), cell) if hits else np.inf
        rep.add(f"theta={theta:.4f}: {len(hits)} survivor(s), all within one cell of (1/2, 1/2, theta+pi)",
                bool(hits) and dist <= 1.0, dist, 1.0)
    worst = 0.0
    for theta in np.linspace(0.0, np.pi, 13):
        for psi in canonical_orthogonal_pair(theta):
            worst = max(worst, abs(pure_entanglement_entropy(psi) - 1.0))
    rep.add("canonical masked pair is maximally entangled", worst <= 1e-9, worst, 1e-9)
    return rep


def suite_lemma3(steps: int = 61) -> SuiteReport:
    rep = SuiteReport("lemma3")
    cell = (1.0 / (steps - 1), 2 * np.pi / (steps - 1))
    for theta in (np.pi / 6, np.pi / 3):
        hits = lemma3_grid_oracle(theta, steps)
        dist = _within_cell([h[:2] for h in hits], (0.5, np.pi - theta), cell) if hits else np.inf
        rep.add(f"theta={theta:.4f}: {len(hits)} survivor(s), all within one cell of (1/2, pi-theta)",
                bool(hits) and dist <= 1.0, dist, 1.0)
        s1, s2 = canonical_nonorthogonal_pair(theta)
        e1, e2 = pure_entanglement_entropy(s1), pure_entanglement_entropy(s2)
        rep.add(f"theta={theta:.4f}: masked pair equally entangled", abs(e1 - e2) <= 1e-10, abs(e1 - e2), 1e-10)
        target = float(eof_from_concurrence(abs(np.cos(theta))))
        err = max(abs(e1 - target), abs(e2 - target))
        rep.add(f"theta={theta:.4f}: entanglement equals E_F at concurrence |cos theta|", err <= 1e-9, err, 1e-9)
    return rep


def suite_thm1() -> SuiteReport:
    rep = SuiteReport("thm1")
    ps = np.linspace(0.0, 1.0, 101)
    local_err = formula_err = eof_err = 0.0
    gap_min = np.inf
    gap_half = 0.0
    for theta in THETAS_3:
        for p in ps:
            rho = masked_mixture_orthogonal(p, theta)
            s = von_neumann_entropy(rho)
            s1 = von_neumann_entropy(partial_trace(rho, 1))
            local_err = max(local_err, abs(s1 - 1.0))
            formula_err = max(formula_err, abs(s - theorem1_entropy(p)))
            eof_err = max(eof_err, abs(float(eof_from_concurrence(concurrence(rho))) - _eof_closed_form(p)))
            if abs(p - 0.5) >= 0.05 - 1e-12:
                gap_min = min(gap_min, s1 - s)
            elif abs(p - 0.5) < 1e-12:
                gap_half = max(gap_half, abs(s1 - s))
    rep.add("local entropy is 1 bit", local_err <= 1e-9, local_err, 1e-9)
    rep.add("global entropy matches the piecewise closed form", formula_err <= 1e-9, formula_err, 1e-9)
    rep.add("S(rho_1) - S(rho) >= 1e-3 for |p - 1/2| >= 0.05", gap_min >= 1e-3, gap_min, 1e-3)
    rep.add("S(rho_1) = S(rho) at p = 1/2", gap_half <= 1e-9, gap_half, 1e-9)

    neg_half = max(negativity(masked_mixture_orthogonal(0.5, t)) for t in np.linspace(0, np.pi, 21))
    rep.add("negativity vanishes at p = 1/2 (21 thetas)", neg_half <= 1e-9, neg_half, 1e-9)
    neg_off = min(
        negativity(masked_mixture_orthogonal(p, t))
        for p in ps
        if abs(p - 0.5) >= 0.05 - 1e-12
        for t in THETAS_3
    )
    rep.add("negativity > 1e-4 for |p - 1/2| >= 0.05", neg_off > 1e-4, neg_off, 1e-4)

    rep.add("E_F matches h((1 + sqrt(1 - (2p-1)^2))/2)", eof_err <= 1e-9, eof_err, 1e-9)
    ends = max(abs(float(eof_from_concurrence(concurrence(masked_mixture_orthogonal(p, 0.3)))) - 1.0) for p in (0.0, 1.0))
    rep.add("E_F = 1 ebit at p in {0, 1}", ends <= 1e-9, ends, 1e-9)
    return rep


def suite_thm2(steps: int = 51) -> SuiteReport:
    rep = SuiteReport("thm2")
    ps = np.linspace(0.0, 1.0, steps)
    thetas = np.linspace(0.0, np.pi / 2, steps)
    max_gap = -np.inf
    off_region = -np.inf
    for p in ps:
        for theta in thetas:
            d = entropic_gap(masked_mixture_nonorthogonal(p, theta))
            max_gap = max(max_gap, d)
            if abs(p - 0.5) >= 0.05 - 1e-12 and theta <= np.pi / 2 - 0.05:
                off_region = max(off_region, d)
    rep.add("delta S <= 1e-9 on the whole grid", max_gap <= 1e-9, max_gap, 1e-9)
    rep.add("delta S < 0 for |p - 1/2| >= 0.05, theta <= pi/2 - 0.05", off_region < 0.0, off_region, 0.0)
    rep.add("delta S < -1e-3 for |p - 1/2| >= 0.05, theta <= pi/2 - 0.05", off_region < -1e-3, off_region, -1e-3)
    det_half = max(abs(partial_transpose_det(masked_mixture_nonorthogonal(0.5, t))) for t in thetas)
    rep.add("det of partial transpose vanishes at p = 1/2", det_half <= 1e-10, det_half, 1e-10)
    neg_half = max(negativity(masked_mixture_nonorthogonal(0.5, t)) for t in thetas)
    rep.add("negativity vanishes at p = 1/2", neg_half <= 1e-9, neg_half, 1e-9)
    return rep


def suite_appendix(pairs: int = 20, seed: int = 2024) -> SuiteReport:
    """Second-party phase unitaries leave residuals and entanglement untouched."""
    rep = SuiteReport("appendix")
    rng = np.random.default_rng(seed)
    worst = dict.fromkeys(("residual", "S(rho)", "S(rho_1)", "concurrence", "negativity"), 0.0)
    masker = canonical_orthogonal_masker()
    zero, one = np.array([1, 0]), np.array([0, 1])
    for _ in range(pairs):
        theta = rng.uniform(0.0, np.pi)
        y = rng.uniform(0.0, 2 * np.pi)
        p = rng.uniform(0.0, 1.0)
        uy = phase_unitary(y)
        # canonical masked pair at theta, then the phase
        chi1, chi2 = canonical_orthogonal_pair(theta)
        worst["residual"] = max(
            worst["residual"],
            abs(pure_masking_residual(uy @ chi1, uy @ chi2) - pure_masking_residual(chi1, chi2)),
        )
        rho = masked_mixture_orthogonal(p, theta)
        rho_y = uy @ rho @ uy.conj().T
        # canonical masker followed by the phase, acting on mixtures of |0>, |1>
        sigma = mix(zero, one, p)
        out = apply_masker(masker, sigma)
        out_y = apply_masker(uy @ masker, sigma)
        worst["residual"] = max(
            worst["residual"],
            abs(
                masking_residual(apply_masker(uy @ masker, np.outer(zero, zero)), apply_masker(uy @ masker, np.outer(one, one)))
                - masking_residual(apply_masker(masker, np.outer(zero, zero)), apply_masker(masker, np.outer(one, one)))
            ),
        )
        for a, b in ((rho, rho_y), (out, out_y)):
            worst["S(rho)"] = max(worst["S(rho)"], abs(von_neumann_entropy(a) - von_neumann_entropy(b)))
            worst["S(rho_1)"] = max(
                worst["S(rho_1)"],
                abs(von_neumann_entropy(partial_trace(a, 1)) - von_neumann_entropy(partial_trace(b, 1))),
            )
            worst["concurrence"] = max(worst["concurrence"], abs(concurrence(a) - concurrence(b)))
            worst["negativity"] = max(worst["negativity"], abs(negativity(a) - negativity(b)))
    for name, value in worst.items():
        rep.add(f"{name} unchanged by the second-party phase ({pairs} random (theta, y))", value <= 1e-10, value, 1e-10)
    return rep


SUITES = {
    "lemma1": suite_lemma1,
    "lemma2": suite_lemma2,
    "lemma3": suite_lemma3,
    "thm1": suite_thm1,
    "thm2": suite_thm2,
    "appendix": suite_appendix,
}


def run_suite(name: str) -> list[SuiteReport]:
    if name == "all":
        return [fn() for fn in SUITES.values()]
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; expected one of {sorted(SUITES)} or 'all'")
    return [SUITES[name]()]
