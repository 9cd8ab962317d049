"""Exact computation in the several-variable Riordan group.

Truncated multivariate power series over exact coefficient rings,
formal maps with verified compositional inverses, pair elements acting
on series, their monomial-indexed matrices, a windowed Laurent
extension, and seeded verification campaigns over all of it.
"""

from .errors import (
    AccuracyError,
    AlgebraError,
    ContextMismatchError,
    ExactDivisionError,
    ExprSyntaxError,
    InternalCheckError,
    NotAUnitError,
    NotInvertibleError,
    TruncationError,
    ZeroSeriesError,
)
from .rings import IntegerRing, PrimeFieldRing, RationalRing, Ring, ring_from_tag
from .series import Series
from .formal_maps import FormalMap, LinearPart, compose_series
from .riordan import RiordanElement
from .matrices import (
    MonomialMatrix,
    homomorphism_check,
    injectivity_probe,
    reconstruct,
    riordan_matrix,
)
from .projective import level_matrix, pk_action, project
from .verdestar import (
    CONVENTIONS,
    LEFT_INTO_RIGHT,
    RIGHT_INTO_LEFT,
    ConjectureReport,
    LaurentSeries,
    StarTuple,
    VSRElement,
    WindowMatrix,
    compose_laurent,
    compose_signed,
    conjecture_trial,
    k_map,
    laurent_normalize,
    star_compose,
    star_from_map,
    star_mul,
    vsr_inverse,
    vsr_mul,
    window_matrix,
)
from .parser import evaluate, parse, parse_series, render
from .campaigns import CampaignConfig, CampaignReport, derive_seed, run_campaign

__all__ = [
    "AccuracyError",
    "AlgebraError",
    "CampaignConfig",
    "CampaignReport",
    "CONVENTIONS",
    "ConjectureReport",
    "ContextMismatchError",
    "ExactDivisionError",
    "ExprSyntaxError",
    "FormalMap",
    "IntegerRing",
    "InternalCheckError",
    "LEFT_INTO_RIGHT",
    "LaurentSeries",
    "LinearPart",
    "MonomialMatrix",
    "NotAUnitError",
    "NotInvertibleError",
    "PrimeFieldRing",
    "RIGHT_INTO_LEFT",
    "RationalRing",
    "Ring",
    "RiordanElement",
    "Series",
    "StarTuple",
    "TruncationError",
    "VSRElement",
    "WindowMatrix",
    "ZeroSeriesError",
    "compose_laurent",
    "compose_series",
    "compose_signed",
    "conjecture_trial",
    "derive_seed",
    "evaluate",
    "homomorphism_check",
    "injectivity_probe",
    "k_map",
    "laurent_normalize",
    "level_matrix",
    "parse",
    "parse_series",
    "pk_action",
    "project",
    "reconstruct",
    "render",
    "ring_from_tag",
    "riordan_matrix",
    "run_campaign",
    "star_compose",
    "star_from_map",
    "star_mul",
    "vsr_inverse",
    "vsr_mul",
    "window_matrix",
]
