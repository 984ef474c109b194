"""Numerical toolkit for masking mixtures of two single-qubit states.

Builds the masked two-qubit state families, quantifies their entanglement,
checks the partial-trace masking conditions and searches Cartan-parametrised
unitaries for minimum-entanglement maskers.
"""

__version__ = "0.1.0"

from .entanglement import (  # noqa: E402
    EntanglementReport,
    concurrence,
    entanglement_of_formation,
    entanglement_report,
    entropic_gap,
    negativity,
    pure_entanglement_entropy,
    von_neumann_entropy,
)
from .masking import (  # noqa: E402
    MaskerParams,
    apply_masker,
    canonical_orthogonal_masker,
    cartan_unitary,
    masking_residual,
    phase_unitary,
    verify_convex_masking,
)
from .optimizer import (  # noqa: E402
    OptimizationResult,
    OptimizerConfig,
    entanglement_scan,
    find_masker,
    lemma2_grid_oracle,
    lemma3_grid_oracle,
    min_entanglement_masker,
)
from .states import (  # noqa: E402
    bloch_to_pure,
    canonical_nonorthogonal_pair,
    canonical_orthogonal_pair,
    masked_mixture_nonorthogonal,
    masked_mixture_orthogonal,
    mix,
    walgate_orthogonal_pair,
)
