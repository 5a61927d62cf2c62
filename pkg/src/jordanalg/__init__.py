"""Numerical Jordan algebras.

Five algebra families under one packed representation: real symmetric,
complex Hermitian, and quaternionic Hermitian matrices, the Albert
algebra of 3x3 octonionic Hermitian matrices, and spin factors, plus
general octonionic Hermitian matrices as the classical non-example.
The product is x o y = (xy + yx)/2 (matrix kinds) or the spin rule;
higher operators (U, the triple bracket, H8/H9) feed numerical
verification suites for the Jordan, Jacobson, and Glennie identities.

Entry arithmetic runs on a compiled kernel when available and a pure
numpy fallback otherwise; set JORDANALG_PURE=1 to force the fallback.
"""

from ._kernels import available_backends, backend_name, use_backend
from .composition import (
    CompositionNumber,
    cd_add,
    cd_conjugate,
    cd_multiply,
    cd_norm,
    cd_scale,
)
from .elements import (
    DenseMatrix,
    JordanElement,
    JordanVector,
    add,
    add_unit_multiple,
    equal_approx,
    from_dense,
    negate,
    scalar_add,
    scalar_multiply,
    subtract,
    to_dense,
    unit_element,
    zero_element,
)
from .errors import (
    ConfigError,
    JordanError,
    ParseError,
    ShapeError,
    UnsupportedKindError,
    UnsupportedSuiteError,
    ValidationError,
)
from .formatting import format_dense, format_vector
from .operators import (
    g8,
    g9,
    h8,
    h9,
    jacobson_diff,
    jacobson_residual,
    op_L,
    op_U,
    op_U2,
    triple_bracket,
    u_special_oracle_check,
)
from .product import (
    dense_oracle_check,
    jordan_product,
    symmetry_preservation_check,
)
from .random_gen import (
    GenConfig,
    random_albert,
    random_chm,
    random_elements,
    random_oherm,
    random_qhm,
    random_rsm,
    random_spin,
    trial_elements,
)
from .report import ResidualReport
from .serialization import parse, parse_report, render, render_report
from .shapes import (
    AlgebraShape,
    albert_shape,
    chm_shape,
    oherm_shape,
    qhm_shape,
    rsm_shape,
    spin_shape,
)
from .suites import (
    SuiteOutcome,
    evaluate_identity,
    expected_outcome,
    identity_suite,
    run_suite_outcome,
)

__version__ = "0.1.0"

__all__ = [
    "AlgebraShape",
    "CompositionNumber",
    "ConfigError",
    "DenseMatrix",
    "GenConfig",
    "JordanElement",
    "JordanError",
    "JordanVector",
    "ParseError",
    "ResidualReport",
    "ShapeError",
    "SuiteOutcome",
    "UnsupportedKindError",
    "UnsupportedSuiteError",
    "ValidationError",
    "add",
    "add_unit_multiple",
    "albert_shape",
    "available_backends",
    "backend_name",
    "cd_add",
    "cd_conjugate",
    "cd_multiply",
    "cd_norm",
    "cd_scale",
    "chm_shape",
    "dense_oracle_check",
    "equal_approx",
    "evaluate_identity",
    "expected_outcome",
    "format_dense",
    "format_vector",
    "from_dense",
    "g8",
    "g9",
    "h8",
    "h9",
    "identity_suite",
    "jacobson_diff",
    "jacobson_residual",
    "jordan_product",
    "negate",
    "oherm_shape",
    "op_L",
    "op_U",
    "op_U2",
    "parse",
    "parse_report",
    "qhm_shape",
    "random_albert",
    "random_chm",
    "random_elements",
    "random_oherm",
    "random_qhm",
    "random_rsm",
    "random_spin",
    "render",
    "render_report",
    "rsm_shape",
    "run_suite_outcome",
    "scalar_add",
    "scalar_multiply",
    "spin_shape",
    "subtract",
    "symmetry_preservation_check",
    "to_dense",
    "trial_elements",
    "triple_bracket",
    "u_special_oracle_check",
    "unit_element",
    "use_backend",
    "zero_element",
]
