# %% [markdown]
# # Entanglement measures along a Werner family
# rho(w) = w |Phi+><Phi+| + (1 - w) I/4 becomes entangled above w = 1/3.

# %%
import numpy as np

from qmask.entanglement import entanglement_report

bell = np.array([1, 0, 0, 1]) / np.sqrt(2)
phi = np.outer(bell, bell)

# %%
print(f"{'w':>5} {'C':>8} {'E_F':>8} {'neg':>8} {'dS':>8} ppt")
for w in np.linspace(0, 1, 11):
    r = entanglement_report(w * phi + (1 - w) * np.eye(4) / 4)
    print(f"{w:5.2f} {r.concurrence:8.4f} {r.eof:8.4f} {r.negativity:8.4f} {r.delta_s:8.4f} {r.ppt}")
