"""Variable-exponent norms and averaging operators on ultrametric shells.

The package models radial step functions with power-law tails over the
n-fold product of a p-adic field, computes their Lebesgue, Herz and
Morrey-Herz norms for piecewise exponent laws, applies Hardy-type averaging
operators exactly, and cross-checks everything with a Monte Carlo oracle.
"""

from .errors import (
    ClassClosureError,
    DomainError,
    HypothesisViolationError,
    SerializationError,
    TailCombinationError,
    UltraherzError,
)
from .harness import (
    THEOREM_IDS,
    FamilySpec,
    HypothesisCheck,
    HypothesisReport,
    LemmaReport,
    RatioReport,
    RatioSample,
    SweepRow,
    TheoremConfig,
    boundedness_ratio,
    check_lemmas,
    default_symbol,
    random_family,
    require_hypotheses,
    sharpness_probe,
    sweep,
    validate_hypotheses,
)
from .norms import (
    HerzParams,
    MorreyHerzParams,
    NormResult,
    ball_indicator_norm,
    cmo_norm,
    herz_norm,
    luxemburg_norm,
    modular,
    morrey_herz_norm,
    single_shell_norm,
)
from .operators import (
    OperatorSpec,
    apply_operator,
    commutator,
    hardy,
    hardy_adjoint,
    maximal,
    shell_diagonal,
)
from .oracle import (
    MCEstimate,
    OracleConfig,
    mc_integrate,
    mc_luxemburg,
    mc_operator_probe,
)
from .padic import (
    PadicContext,
    PadicPoint,
    ball_measure,
    fraction_valuation,
    padic_valuation,
    ppow,
    sample_uniform,
    sphere_measure,
)
from .radial import (
    ExponentFunction,
    RadialStepFunction,
    RegularityReport,
    Tail,
    ball_integral,
    ball_mean,
    check_regularity,
    combine,
    conjugate,
    exponent_at,
    sobolev_shift,
    total_integral,
)
from .serialize import (
    exponent_from_dict,
    exponent_to_dict,
    function_from_dict,
    function_to_dict,
    load_exponent,
    load_function,
    load_theorem_config,
    save_exponent,
    save_function,
    save_theorem_config,
    theorem_config_from_dict,
    theorem_config_to_dict,
)

__version__ = "0.1.0"

__all__ = [
    "ClassClosureError",
    "DomainError",
    "ExponentFunction",
    "FamilySpec",
    "HerzParams",
    "HypothesisCheck",
    "HypothesisReport",
    "HypothesisViolationError",
    "LemmaReport",
    "MCEstimate",
    "MorreyHerzParams",
    "NormResult",
    "OperatorSpec",
    "OracleConfig",
    "PadicContext",
    "PadicPoint",
    "RadialStepFunction",
    "RatioReport",
    "RatioSample",
    "RegularityReport",
    "SerializationError",
    "SweepRow",
    "Tail",
    "THEOREM_IDS",
    "TailCombinationError",
    "TheoremConfig",
    "UltraherzError",
    "apply_operator",
    "ball_indicator_norm",
    "ball_integral",
    "ball_mean",
    "ball_measure",
    "boundedness_ratio",
    "check_lemmas",
    "check_regularity",
    "cmo_norm",
    "combine",
    "commutator",
    "conjugate",
    "default_symbol",
    "exponent_at",
    "exponent_from_dict",
    "exponent_to_dict",
    "fraction_valuation",
    "function_from_dict",
    "function_to_dict",
    "hardy",
    "hardy_adjoint",
    "herz_norm",
    "load_exponent",
    "load_function",
    "load_theorem_config",
    "luxemburg_norm",
    "maximal",
    "mc_integrate",
    "mc_luxemburg",
    "mc_operator_probe",
    "modular",
    "morrey_herz_norm",
    "padic_valuation",
    "ppow",
    "random_family",
    "require_hypotheses",
    "sample_uniform",
    "save_exponent",
    "save_function",
    "save_theorem_config",
    "sharpness_probe",
    "shell_diagonal",
    "single_shell_norm",
    "sobolev_shift",
    "sphere_measure",
    "sweep",
    "theorem_config_from_dict",
    "theorem_config_to_dict",
    "total_integral",
    "validate_hypotheses",
    "__version__",
]
