"""Tripartite Bell-type inequalities for coherence and skew information.

Four functionals over two dichotomic settings per party: a product
correlator combination and three built from the l1 norm of coherence,
the relative entropy of coherence, and Wigner-Yanase skew information.
Product states obey bounds 2, 14, 6 and 6 respectively; suitable
entangled states violate the latter three.
"""

from .linalg import (
    DimensionMismatchError,
    HermEigen,
    NoConvergenceError,
    NotHermitianError,
    NotPSDError,
    adjoint,
    commutator,
    herm_eig,
    kron,
    psd_sqrt,
)
from .states import (
    DensityMatrix,
    Ket,
    Observable,
    ParameterOutOfRangeError,
    ProductBasis,
    bloch_observable,
    collective_observable,
    computational_kets,
    eigenbasis,
    ghz_class_pure,
    ghz_state,
    pauli,
    product_basis,
    product_state,
    pure_density,
    random_single_qubit_state,
    w_class_pure,
    w_state,
    werner_mix,
)
from .measures import (
    dephase,
    l1_coherence,
    relative_entropy_coherence,
    skew_information,
    variance,
    von_neumann_entropy,
)
from .bell import (
    BellReport,
    BellSettings,
    Family,
    FamilyCurve,
    FunctionalKind,
    NoSignChangeError,
    NotMonotoneError,
    bell_l1,
    bell_rel_ent,
    bell_skew,
    evaluate,
    evaluate_family,
    example1_settings,
    example2_settings,
    mabk,
    make_report,
    optimize_settings,
    product_bound,
    random_settings,
    settings_from_angles,
    threshold_bisect,
)

__version__ = "0.1.0"

__all__ = [
    "BellReport",
    "BellSettings",
    "DensityMatrix",
    "DimensionMismatchError",
    "Family",
    "FamilyCurve",
    "FunctionalKind",
    "HermEigen",
    "Ket",
    "NoConvergenceError",
    "NoSignChangeError",
    "NotHermitianError",
    "NotMonotoneError",
    "NotPSDError",
    "Observable",
    "ParameterOutOfRangeError",
    "ProductBasis",
    "adjoint",
    "bell_l1",
    "bell_rel_ent",
    "bell_skew",
    "bloch_observable",
    "collective_observable",
    "commutator",
    "computational_kets",
    "dephase",
    "eigenbasis",
    "evaluate",
    "evaluate_family",
    "example1_settings",
    "example2_settings",
    "ghz_class_pure",
    "ghz_state",
    "herm_eig",
    "kron",
    "l1_coherence",
    "mabk",
    "make_report",
    "optimize_settings",
    "pauli",
    "product_basis",
    "product_bound",
    "product_state",
    "psd_sqrt",
    "pure_density",
    "random_settings",
    "random_single_qubit_state",
    "relative_entropy_coherence",
    "settings_from_angles",
    "skew_information",
    "threshold_bisect",
    "variance",
    "von_neumann_entropy",
    "w_class_pure",
    "w_state",
    "werner_mix",
    "__version__",
]
