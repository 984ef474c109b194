# %% [markdown]
# # Non-orthogonal inputs
# A grid search over (t0, theta') recovers the masking pair, and the entropic
# gap S(rho) - S(rho_1) of the masked mixture is never positive.

# %%
import numpy as np

from qmask.entanglement import entropic_gap, partial_transpose_det
from qmask.optimizer import lemma3_grid_oracle
from qmask.states import masked_mixture_nonorthogonal

theta = np.pi / 6
print("survivors (t0, theta', residual):", lemma3_grid_oracle(theta, 61))
print("expected theta' =", np.pi - theta)

# %%
for p in (0.1, 0.3, 0.5, 0.7, 0.9):
    rho = masked_mixture_nonorthogonal(p, theta)
    print(f"p={p:.1f}  dS={entropic_gap(rho):+.5f}  det(PT)={partial_transpose_det(rho):+.2e}")
