# %% [markdown]
# # Masking mixtures of orthogonal states
# The canonical masker hides every mixture of |0> and |1>: both marginals stay I/2.
# The masked mixture is separable only at p = 1/2.

# %%
import numpy as np

from qmask.entanglement import entanglement_of_formation, negativity, von_neumann_entropy
from qmask.linalg import partial_trace
from qmask.masking import canonical_orthogonal_masker, verify_convex_masking
from qmask.states import masked_mixture_orthogonal

u = canonical_orthogonal_masker()
print("masks all mixtures:", verify_convex_masking(u, [1, 0], [0, 1]))

# %%
theta = np.pi / 4
print(f"{'p':>5} {'S':>7} {'S_1':>7} {'E_F':>7} {'neg':>7}")
for p in np.linspace(0, 1, 11):
    rho = masked_mixture_orthogonal(p, theta)
    s1 = von_neumann_entropy(partial_trace(rho, 1))
    print(f"{p:5.2f} {von_neumann_entropy(rho):7.4f} {s1:7.4f} "
          f"{entanglement_of_formation(rho):7.4f} {negativity(rho):7.4f}")
