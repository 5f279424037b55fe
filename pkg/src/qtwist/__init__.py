"""R-matrices for tensor products of U_q sl(2) representations from twisted tensor powers."""
from .expression import ExpressionSyntaxError, ProductExpression, parse_expression
from .linalg import LegSpace, SingularMatrixError, embed, inverse, kron, orthonormal_range, perm_matrix, spectrum
from .rword import RFactor, RWord, compose, evaluate, expand_slots, invert, parse_word, relabel
from .spectral import (
    BlockDecomposition,
    CGIsometries,
    SpectralReport,
    block_decompose,
    cg_isometries,
    rhat,
    spectral_report,
)
from .twist import (
    FLIPINV,
    STD,
    SignChoice,
    TwistConfig,
    all_configs,
    build_barR,
    build_boldR,
    build_F,
    build_v,
    paired_matrix,
    shuffle_perm,
)
from .uqsl2 import QTriData, coproduct_rep, standard_data
from .verify import (
    CheckResult,
    check_diagonal,
    check_ell_factorization,
    check_hexagons,
    check_star_v,
    check_ybe,
    run_report,
)

__version__ = "0.1.0"
