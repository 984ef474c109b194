# %% [markdown]
# # Searching for maskers numerically
# Multi-start Nelder-Mead over a nine-parameter two-qubit unitary. The second
# search also minimises the entanglement of the masked mixtures.

# %%
import numpy as np

from qmask.optimizer import OptimizerConfig, find_masker, min_entanglement_masker

config = OptimizerConfig(restarts=8, seed=7)
zero = np.array([1.0, 0.0])
psi = np.array([np.cos(np.pi / 8), np.sin(np.pi / 8)])

# %%
feasible = find_masker(zero, psi, config)
print("residual:", feasible.residual, "converged:", feasible.converged)

# %%
best = min_entanglement_masker(zero, psi, config)
for p, e in best.eof_by_p:
    print(f"p={p:.2f}  E_F={e:.4f}")
print("minimum at p =", best.argmin_p)
