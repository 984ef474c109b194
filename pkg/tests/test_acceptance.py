"""Exit criteria for the masking toolkit, one test per criterion.

Each test appends a PASS/FAIL line that is printed in the terminal summary.
"""
import numpy as np
import pytest

from qmask.entanglement import (
    concurrence,
    entanglement_of_formation,
    entanglement_report,
    entropic_gap,
    eof_from_concurrence,
    negativity,
    partial_transpose_det,
    pure_entanglement_entropy,
    von_neumann_entropy,
)
from qmask.linalg import hermitian_eigensystem, kron, partial_trace, partial_transpose
from qmask.masking import (
    apply_masker,
    canonical_orthogonal_masker,
    masking_residual,
    phase_unitary,
    pure_masking_residual,
    verify_convex_masking,
)
from qmask.optimizer import (
    OptimizerConfig,
    find_masker,
    lemma2_grid_oracle,
    lemma3_grid_oracle,
    masked_pair,
    min_entanglement_masker,
)
from qmask.states import (
    canonical_nonorthogonal_pair,
    canonical_orthogonal_pair,
    masked_mixture_nonorthogonal,
    masked_mixture_orthogonal,
    mix,
)
from qmask.verify import theorem1_entropy

from conftest import ACCEPTANCE_LINES, random_density, random_ket, random_unitary

ZERO, ONE = np.array([1.0, 0.0]), np.array([0.0, 1.0])
THETAS = (0.0, np.pi / 4, np.pi / 2)
P101 = np.linspace(0.0, 1.0, 101)
YY = np.kron(np.array([[0, -1j], [1j, 0]]), np.array([[0, -1j], [1j, 0]]))


def report(n: int, text: str, ok: bool, measured) -> None:
    ACCEPTANCE_LINES.append(f"[{'PASS' if ok else 'FAIL'}] criterion {n:2d}: {text} (measured {measured})")
    assert ok, f"criterion {n}: {text} (measured {measured})"


def closed_form_eof(p: float) -> float:
    return float(eof_from_concurrence(abs(2 * p - 1)))


def off_half(p: float, margin: float = 0.05) -> bool:
    return abs(p - 0.5) >= margin - 1e-12


def test_c01_orthogonal_mixture_entropies():
    local_err = formula_err = 0.0
    gap_off = np.inf
    gap_half = 0.0
    for theta in THETAS:
        for p in P101:
            rho = masked_mixture_orthogonal(p, theta)
            s = von_neumann_entropy(rho)
            s1 = von_neumann_entropy(partial_trace(rho, 1))
            local_err = max(local_err, abs(s1 - 1.0))
            formula_err = max(formula_err, abs(s - theorem1_entropy(p)))
            if off_half(p):
                gap_off = min(gap_off, s1 - s)
            if abs(p - 0.5) < 1e-12:
                gap_half = max(gap_half, abs(s1 - s))
    ok = local_err <= 1e-9 and formula_err <= 1e-9 and gap_off >= 1e-3 and gap_half <= 1e-9
    report(1, "local entropy 1 bit, piecewise S(rho), equality only at p=1/2", ok,
           f"local {local_err:.1e}, formula {formula_err:.1e}, min gap {gap_off:.2e}, gap@1/2 {gap_half:.1e}")


def test_c02_orthogonal_mixture_separability():
    neg_half = max(negativity(masked_mixture_orthogonal(0.5, t)) for t in np.linspace(0, np.pi, 21))
    neg_off = min(negativity(masked_mixture_orthogonal(p, t)) for p in P101 if off_half(p) for t in THETAS)
    ok = neg_half <= 1e-9 and neg_off > 1e-4
    report(2, "negativity 0 at p=1/2 (21 thetas), > 1e-4 off p=1/2", ok,
           f"max@1/2 {neg_half:.1e}, min off {neg_off:.2e}")


def _wootters_oracle(rho):
    r = rho @ YY @ rho.conj() @ YY
    lam = np.sort(np.sqrt(np.abs(np.linalg.eigvals(r).real)))[::-1]
    return max(0.0, lam[0] - lam[1] - lam[2] - lam[3])


def test_c03_orthogonal_mixture_eof():
    # closed form C = |2p-1| pre-validated with the non-Hermitian Wootters route
    oracle_err = max(
        abs(_wootters_oracle(masked_mixture_orthogonal(p, t)) - abs(2 * p - 1))
        for p in np.linspace(0, 1, 21) for t in np.linspace(0, np.pi, 21)
    )
    err = 0.0
    zeros = []
    for theta in THETAS:
        for p in P101:
            e = entanglement_of_formation(masked_mixture_orthogonal(p, theta))
            err = max(err, abs(e - closed_form_eof(p)))
            if e <= 1e-9:
                zeros.append(round(float(p), 12))
    ends = max(abs(entanglement_of_formation(masked_mixture_orthogonal(p, t)) - 1.0) for p in (0.0, 1.0) for t in THETAS)
    ok = oracle_err <= 1e-6 and err <= 1e-9 and ends <= 1e-9 and set(zeros) == {0.5}
    report(3, "E_F closed form, endpoints 1 ebit, zero only at p=1/2", ok,
           f"oracle {oracle_err:.1e}, err {err:.1e}, endpoints {ends:.1e}, zeros at {sorted(set(zeros))}")


def _max_cells(points, centre, cell):
    return max(max(abs(a - b) / c for a, b, c in zip(pt, centre, cell)) for pt in points)


def test_c04_orthogonal_masker_uniqueness():
    steps = 41
    cell = (1 / (steps - 1), 1 / (steps - 1), 2 * np.pi / (steps - 1))
    worst = 0.0
    counts = []
    for theta in THETAS:
        hits = lemma2_grid_oracle(theta, steps)
        counts.append(len(hits))
        worst = max(worst, _max_cells([h[:3] for h in hits], (0.5, 0.5, theta + np.pi), cell) if hits else np.inf)
    report(4, "41^3 grid survivors within one cell of (1/2, 1/2, theta+pi)", all(counts) and worst <= 1.0,
           f"survivors {counts}, worst distance {worst:.2f} cells")


def test_c05_nonorthogonal_masker():
    steps = 61
    cell = (1 / (steps - 1), 2 * np.pi / (steps - 1))
    worst = 0.0
    counts = []
    eq_err = val_err = 0.0
    for theta in (np.pi / 6, np.pi / 3):
        hits = lemma3_grid_oracle(theta, steps)
        counts.append(len(hits))
        worst = max(worst, _max_cells([h[:2] for h in hits], (0.5, np.pi - theta), cell) if hits else np.inf)
        s1, s2 = canonical_nonorthogonal_pair(theta)
        e1, e2 = pure_entanglement_entropy(s1), pure_entanglement_entropy(s2)
        target = float(eof_from_concurrence(abs(np.cos(theta))))
        eq_err = max(eq_err, abs(e1 - e2))
        val_err = max(val_err, abs(e1 - target), abs(e2 - target))
    ok = all(counts) and worst <= 1.0 and eq_err <= 1e-10 and val_err <= 1e-9
    report(5, "61^2 grid survivors near (1/2, pi-theta); equal entanglement = E_F(|cos theta|)", ok,
           f"survivors {counts}, worst {worst:.2f} cells, equality {eq_err:.1e}, value {val_err:.1e}")


def test_c06_nonorthogonal_entropic_gap():
    ps = np.linspace(0, 1, 51)
    thetas = np.linspace(0, np.pi / 2, 51)
    max_gap = -np.inf
    off_region = -np.inf
    for p in ps:
        for theta in thetas:
            d = entropic_gap(masked_mixture_nonorthogonal(p, theta))
            max_gap = max(max_gap, d)
            if off_half(p) and theta <= np.pi / 2 - 0.05:
                off_region = max(off_region, d)
    det_half = max(abs(partial_transpose_det(masked_mixture_nonorthogonal(0.5, t))) for t in thetas)
    neg_half = max(negativity(masked_mixture_nonorthogonal(0.5, t)) for t in thetas)
    ok = max_gap <= 1e-9 and off_region < -1e-3 and det_half <= 1e-10 and neg_half <= 1e-9
    report(6, "delta S <= 1e-9, < -1e-3 off p=1/2 and theta<=pi/2-0.05; det and negativity 0 at p=1/2", ok,
           f"max dS {max_gap:.1e}, max dS off-region {off_region:.3e}, det {det_half:.1e}, neg {neg_half:.1e}")


def test_c07_convex_masking():
    u = canonical_orthogonal_masker()
    grid = np.linspace(0, 1, 11)
    passed = verify_convex_masking(u, ZERO, ONE, p_grid=grid)
    worst = 0.0
    for p in grid:
        out = apply_masker(u, mix(ZERO, ONE, p))
        for party in (1, 2):
            worst = max(worst, float(np.max(np.abs(partial_trace(out, party) - np.eye(2) / 2))))
    report(7, "canonical masker masks all 11 mixtures, marginals I/2", passed and worst <= 1e-10, f"{worst:.1e}")


CONFIG = OptimizerConfig(seed=7, restarts=64)


@pytest.fixture(scope="module")
def orthogonal_search():
    return find_masker(ZERO, ONE, CONFIG), min_entanglement_masker(ZERO, ONE, CONFIG)


@pytest.fixture(scope="module")
def nonorthogonal_search():
    psi = np.array([np.cos(np.pi / 8), np.sin(np.pi / 8)])
    return psi, find_masker(ZERO, psi, CONFIG), min_entanglement_masker(ZERO, psi, CONFIG)


def _zero_structure(result):
    others = [e for p, e in result.eof_by_p if p != 0.5]
    return result.argmin_p == 0.5 and result.min_eof <= 1e-6 and min(others) >= 1e-3, min(others)


def test_c08_orthogonal_optimization(orthogonal_search):
    feasible, best = orthogonal_search
    a, b = masked_pair(feasible.params.to_vector(), ZERO, ONE)
    ent_err = max(abs(pure_entanglement_entropy(a) - 1), abs(pure_entanglement_entropy(b) - 1))
    structure, min_other = _zero_structure(best)
    ok = feasible.converged and feasible.residual <= 1e-8 and ent_err <= 1e-6 and best.converged and structure
    report(8, "orthogonal inputs: masker found, masked pure states 1 ebit, E_F zero only at p=1/2", ok,
           f"residual {feasible.residual:.1e}, ebit err {ent_err:.1e}, min_eof {best.min_eof:.1e} "
           f"at p={best.argmin_p}, min elsewhere {min_other:.2e}")


def test_c09_nonorthogonal_optimization(nonorthogonal_search):
    psi, feasible, best = nonorthogonal_search
    structure, min_other = _zero_structure(best)
    ok = feasible.converged and best.converged and structure
    report(9, "non-orthogonal inputs, E_F zero only at p=1/2", ok,
           f"residual {feasible.residual:.1e}/{best.residual:.1e}, min_eof {best.min_eof:.1e} "
           f"at p={best.argmin_p}, min elsewhere {min_other:.2e}")


def test_c10_phase_invariance():
    rng = np.random.default_rng(2024)
    masker = canonical_orthogonal_masker()
    worst = 0.0
    for _ in range(20):
        theta, y, p = rng.uniform(0, np.pi), rng.uniform(0, 2 * np.pi), rng.uniform()
        uy = phase_unitary(y)
        chi1, chi2 = canonical_orthogonal_pair(theta)
        worst = max(worst, abs(pure_masking_residual(uy @ chi1, uy @ chi2) - pure_masking_residual(chi1, chi2)))
        m0 = [apply_masker(masker, np.diag(d)) for d in ([1, 0], [0, 1])]
        m1 = [apply_masker(uy @ masker, np.diag(d)) for d in ([1, 0], [0, 1])]
        worst = max(worst, abs(masking_residual(*m1) - masking_residual(*m0)))
        rho = masked_mixture_orthogonal(p, theta)
        pairs = [
            (rho, uy @ rho @ uy.conj().T),
            (apply_masker(masker, mix(ZERO, ONE, p)), apply_masker(uy @ masker, mix(ZERO, ONE, p))),
        ]
        for a, b in pairs:
            for f in (von_neumann_entropy, lambda r: von_neumann_entropy(partial_trace(r, 1)), concurrence, negativity):
                worst = max(worst, abs(f(a) - f(b)))
    report(10, "phase unitaries change no residual, entropy, concurrence or negativity", worst <= 1e-10, f"{worst:.1e}")


def test_c11_property_suites():
    rng = np.random.default_rng(11)
    # linalg identities
    recon = ptrace = 0.0
    for _ in range(100):
        x = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        h = x + x.conj().T
        w, v = hermitian_eigensystem(h)
        recon = max(recon, float(np.linalg.norm((v * w) @ v.conj().T - h)))
        a = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        b = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
        ptrace = max(ptrace, float(np.max(np.abs(partial_trace(kron(a, b), 2) - a * np.trace(b)))))
        rho = random_density(rng)
        ptrace = max(ptrace, abs(np.trace(partial_transpose(rho, 2)) - np.trace(rho)))
    # local-unitary invariance
    lu = 0.0
    names = ("entropy_global", "entropy_local_1", "entropy_local_2", "delta_s", "concurrence", "eof", "negativity")
    for _ in range(100):
        rho = random_density(rng, rank=int(rng.integers(1, 5)))
        u = np.kron(random_unitary(rng, 2), random_unitary(rng, 2))
        r1, r2 = entanglement_report(rho), entanglement_report(u @ rho @ u.conj().T)
        lu = max(lu, max(abs(getattr(r1, n) - getattr(r2, n)) for n in names))
    # pure-state E_F equals entanglement entropy
    pure = 0.0
    for _ in range(100):
        psi = random_ket(rng)
        pure = max(pure, abs(entanglement_of_formation(np.outer(psi, psi.conj())) - pure_entanglement_entropy(psi)))
    # optimizer determinism
    cfg = OptimizerConfig(seed=7, restarts=3)
    same = find_masker(ZERO, ONE, cfg) == find_masker(ZERO, ONE, cfg)
    ok = recon <= 1e-9 and ptrace <= 1e-12 and lu <= 1e-9 and pure <= 1e-9 and same
    report(11, "linalg identities, LU invariance, pure E_F = entropy, deterministic optimizer", ok,
           f"recon {recon:.1e}, ptrace {ptrace:.1e}, LU {lu:.1e}, pure {pure:.1e}, deterministic {same}")
