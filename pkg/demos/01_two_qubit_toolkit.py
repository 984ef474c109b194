# %% [markdown]
# # Two-qubit toolkit
# Partial traces, partial transposes and the Jacobi eigensolver on a Bell state.

# %%
import numpy as np

from qmask.linalg import hermitian_eigensystem, partial_trace, partial_transpose

bell = np.array([1, 0, 0, 1]) / np.sqrt(2)
rho = np.outer(bell, bell.conj())

# %%
# Both marginals of a Bell state are maximally mixed.
print(partial_trace(rho, 1).real)
print(partial_trace(rho, 2).real)

# %%
# The partial transpose has a negative eigenvalue, so the state is entangled.
w, _ = hermitian_eigensystem(partial_transpose(rho, 2))
print("PT eigenvalues:", np.round(w, 12))
