"""Exact-arithmetic characteristic-class engine for sheaves on smooth
projective threefolds: intersection theory on a numerical divisor lattice,
Riemann-Roch Euler characteristics, discriminants, expected moduli
dimensions, Serre-correspondence genus conversions, and certified searches
for vanishing expected dimension over integer twist lattices.
"""

from .chow import (
    CurveClass,
    DivClass,
    PointClass,
    Threefold,
    make_threefold,
    mul_div_div,
    pair_div_curve,
    threefold_from_json,
    threefold_to_json,
    todd_genus,
    triple,
)
from .ci import (
    CanonicalType,
    CIPreset,
    TruncSeries,
    build_ci,
    classify,
    format_preset,
    parse_preset,
    series_inv,
    series_mul,
    tangent_chern,
)
from .dzero import (
    DZeroProblem,
    DZeroReport,
    dzero_condition,
    solve_dzero,
    verify_paper_claims,
)
from .errors import (
    AsymmetricForm,
    Chern3Error,
    ClaimViolation,
    DegenerateLine,
    DimensionMismatch,
    EmptyRoots,
    InsufficientLedger,
    IntegralityWarning,
    InvalidInput,
    LimitExceeded,
    MissingCurveLattice,
    NegativeDimension,
    NonIntegralRank,
    NonUnitSeries,
    RankUnsupported,
    RedundantDegreeWarning,
    SchemaError,
    UnsupportedPicardRank,
)
from .moduli import (
    CohomologyLedger,
    ModuliReport,
    expected_dim,
    ext1_ledger,
    ext_euler,
    moduli_report,
    serre_c3,
    serre_genus,
)
from .rationals import Rat, rat, rat_str
from .sheaf import (
    CharacterData,
    ChernData,
    chern_from_json,
    chern_to_json,
    discriminant,
    dual,
    euler_char,
    from_character,
    rr_terms,
    slope,
    tensor,
    to_character,
    twist,
)
from .splitting import (
    RootSpec,
    ScalarChern,
    chern_from_roots,
    tensor_closed_form,
    tensor_from_roots,
    verify_tensor_formulas,
)

__version__ = "0.1.0"
