"""Exact Fock-style representations of one parabose and one parafermi mode
with relative commutation between them.

The carrier space is a truncated ladder of weight cells indexed by the
bose level m and the fermi level n.  Every coefficient is a Gaussian
rational, so all checks performed here are exact: a relation either holds
on the nose or its residual is reported verbatim.

The pieces:

    fock            basis vectors, truncation parameters, gradings
    operators       ladder operator actions, words, compiled matrices
    relations       the defining relation catalog and its verifier
    realization     2x2 graded matrix algebras transported onto operators
    decomposition   invariant components under chosen operator sets
    orthobasis      adjoint-transport inner product, Gram data, CSCO
    cli             the `parafock` command
"""

from .errors import (
    ConfigError,
    DimensionZero,
    GramDegenerate,
    ParafockError,
    SpecInvalid,
    TruncationOverflow,
    TruncationTooSmall,
    UnknownElement,
)
from .fock import (
    BasisVector,
    FockParams,
    Kind,
    Vector,
    Z2Scheme,
    canonicalize,
    enumerate_basis,
    grade_z2,
    grade_z2z2,
    subspace_dimension,
)
from .operators import (
    B_MINUS,
    B_MINUS_SQ,
    B_PLUS,
    B_PLUS_SQ,
    DerivedOp,
    F_MINUS,
    F_PLUS,
    Generator,
    N_B,
    N_F,
    N_S,
    OperatorExpr,
    OperatorMatrix,
    Q_MINUS,
    Q_PLUS,
    R_MINUS,
    R_PLUS,
    anticommutator,
    apply_derived_closed_form,
    apply_expr,
    apply_generator,
    commutator,
    compile_expr,
    format_expr,
    grade_of_expr,
    theta,
)
from .relations import (
    Relation,
    RelationReport,
    catalog,
    defining_relation_names,
    support_strongly_connected,
    verify_relation,
    verify_suite,
)
from .realization import (
    Parity,
    RealizedElement,
    SuperAlgebraSpec,
    SuperMatrix2,
    act,
    builtin_spec,
    check_bracket_preservation,
    gl11_spec,
    realize,
    validate_spec,
)
from .decomposition import (
    GeneratorSet,
    InvariantComponent,
    closure,
    column_supports_isomorphic,
    decompose,
    diagonal_decomposition,
    filled_empty_split,
    preset,
    realized_generator_set,
)
from .orthobasis import (
    InnerProductContext,
    OrthoVector,
    cell_basis,
    csco_check,
    gram,
    gram_is_positive_definite,
    inner_product,
    orthonormal_basis,
)
from .scalars import GaussianRational

__version__ = "0.1.0"

__all__ = [
    "BasisVector",
    "B_MINUS",
    "B_MINUS_SQ",
    "B_PLUS",
    "B_PLUS_SQ",
    "ConfigError",
    "DerivedOp",
    "DimensionZero",
    "F_MINUS",
    "F_PLUS",
    "FockParams",
    "GaussianRational",
    "Generator",
    "GeneratorSet",
    "GramDegenerate",
    "InnerProductContext",
    "InvariantComponent",
    "Kind",
    "N_B",
    "N_F",
    "N_S",
    "OperatorExpr",
    "OperatorMatrix",
    "OrthoVector",
    "ParafockError",
    "Parity",
    "Q_MINUS",
    "Q_PLUS",
    "R_MINUS",
    "R_PLUS",
    "RealizedElement",
    "Relation",
    "RelationReport",
    "SpecInvalid",
    "SuperAlgebraSpec",
    "SuperMatrix2",
    "TruncationOverflow",
    "TruncationTooSmall",
    "UnknownElement",
    "Vector",
    "Z2Scheme",
    "act",
    "anticommutator",
    "apply_derived_closed_form",
    "apply_expr",
    "apply_generator",
    "builtin_spec",
    "canonicalize",
    "catalog",
    "cell_basis",
    "check_bracket_preservation",
    "closure",
    "column_supports_isomorphic",
    "commutator",
    "compile_expr",
    "csco_check",
    "decompose",
    "defining_relation_names",
    "diagonal_decomposition",
    "enumerate_basis",
    "filled_empty_split",
    "format_expr",
    "gl11_spec",
    "grade_of_expr",
    "grade_z2",
    "grade_z2z2",
    "gram",
    "gram_is_positive_definite",
    "inner_product",
    "orthonormal_basis",
    "preset",
    "realize",
    "realized_generator_set",
    "subspace_dimension",
    "support_strongly_connected",
    "theta",
    "validate_spec",
    "verify_relation",
    "verify_suite",
]
