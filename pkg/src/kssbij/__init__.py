"""Crystal combinatorics for type A: rectangular tableaux, the combinatorial
R-matrix with energy, box-ball time evolutions, rigged configurations, and the
KSS correspondence computed both by box removal and from energy functions."""

from kssbij.evolution import (
    EnergyMatrix,
    LocalEnergyDistribution,
    Path,
    carrier_pass,
    carrier_sweep,
    column_prefix,
    energy_matrix,
    local_energy_distribution,
    time_evolution,
    total_energy,
)
from kssbij.kernels import BACKEND
from kssbij.kss import (
    RemovalTrace,
    linearized_image,
    SolitonGroup,
    compute_rigging,
    default_order,
    extract_groups,
    phi_energy,
    phi_inverse,
    phi_inverse_trace,
    quantum_space_of,
    removal_order_equivalence,
    remove_row,
)
from kssbij.rigged import (
    RiggedConfiguration,
    RowRef,
    corigging,
    is_singular,
    q_l,
    vacancy,
    validate,
)
from kssbij.rmatrix import (
    AffineElement,
    TensorPair,
    apply_R,
    apply_affine_R,
    energy_H,
    product_tableau,
)
from kssbij.tableaux import (
    Cell,
    Tableau,
    empty_tableau,
    enumerate_kr,
    highest_element,
    insert,
    insert_word,
    inverse_insert,
    is_corner,
    row_word,
)

__version__ = "0.1.0"

__all__ = [
    "AffineElement",
    "BACKEND",
    "Cell",
    "EnergyMatrix",
    "LocalEnergyDistribution",
    "Path",
    "RemovalTrace",
    "RiggedConfiguration",
    "RowRef",
    "SolitonGroup",
    "Tableau",
    "TensorPair",
    "apply_R",
    "apply_affine_R",
    "carrier_pass",
    "carrier_sweep",
    "column_prefix",
    "compute_rigging",
    "corigging",
    "default_order",
    "empty_tableau",
    "energy_H",
    "energy_matrix",
    "enumerate_kr",
    "extract_groups",
    "highest_element",
    "insert",
    "insert_word",
    "inverse_insert",
    "is_corner",
    "is_singular",
    "linearized_image",
    "local_energy_distribution",
    "phi_energy",
    "phi_inverse",
    "phi_inverse_trace",
    "product_tableau",
    "q_l",
    "quantum_space_of",
    "removal_order_equivalence",
    "remove_row",
    "row_word",
    "time_evolution",
    "total_energy",
    "vacancy",
    "validate",
    "__version__",
]
