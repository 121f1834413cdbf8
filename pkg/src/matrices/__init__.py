"""Exact integer matrices: Coxeter, translation and defect computations."""
from .coxeter import (
    CoxeterMatrices,
    coxeter,
    coxeter_combinatorial,
    injective_dims,
    inverse_coxeter_combinatorial,
    path_counts,
    projective_dims,
    slice_quiver,
)
from .defect import (
    DefectData,
    DefectSigns,
    defect,
    defect_signs,
    injective_decomposition,
    tau_coxeter_residual,
)
from .intmatrix import (
    IntMatrix,
    format_matrix,
    from_columns,
    from_rows,
    identity,
    matrix_power,
    unit_vector,
)
from .translation import (
    Direction,
    IdentityCheck,
    NegativeUnitWitness,
    check_no_negative_unit,
    cotranslation_matrix,
    displayed_matrix,
    family_identities,
    family_matrix,
    family_slice,
    parse_family,
    translation_matrix,
)

__all__ = [
    "CoxeterMatrices",
    "DefectData",
    "DefectSigns",
    "Direction",
    "IdentityCheck",
    "IntMatrix",
    "NegativeUnitWitness",
    "check_no_negative_unit",
    "cotranslation_matrix",
    "coxeter",
    "coxeter_combinatorial",
    "defect",
    "defect_signs",
    "displayed_matrix",
    "family_identities",
    "family_matrix",
    "family_slice",
    "format_matrix",
    "from_columns",
    "from_rows",
    "identity",
    "injective_decomposition",
    "injective_dims",
    "inverse_coxeter_combinatorial",
    "matrix_power",
    "parse_family",
    "path_counts",
    "projective_dims",
    "slice_quiver",
    "tau_coxeter_residual",
    "translation_matrix",
    "unit_vector",
]
