"""Concurrence and negativity monogamy of symmetric W-class qubit states."""

from .densmat import (
    PureStateVector,
    closed_form_rho1,
    closed_form_rho2,
    hermitian_eigenvalues,
    partial_trace,
    partial_transpose,
    product_eigenvalues,
    spin_flip,
    trace_norm,
)
from .symstate import (
    DegeneracyConfig,
    Spinor,
    SymmetricState,
    WClassParams,
    canonicalize_ab,
    dicke_state,
    dnk_state,
    enumerate_slocc_configs,
    majorana_state,
    make_spinor,
    partition_count,
    to_full_vector,
    wclass_state,
)
from .tangle import (
    MeasureSet,
    TangleReport,
    closed_form_pairwise_concurrence,
    concurrence_1_rest,
    concurrence_2q,
    concurrence_tangle,
    negativity_1_rest,
    negativity_2q,
    negativity_tangle,
    tangle_report,
    wstate_negativity_tangle_closed,
)

__version__ = "0.1.0"
