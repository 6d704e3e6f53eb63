"""Finite nearrings: validation, classification, theorem checks, and census."""

__version__ = "0.1.0"

from .errors import (
    AxiomViolation,
    InputError,
    InvariantViolation,
    NearringError,
    PreconditionError,
)
from .groups import (
    FiniteGroup,
    GroupMap,
    Subgroup,
    build_group,
    element_order,
    endomorphisms,
    exponent,
    is_abelian,
    p_component,
    subgroups,
)
from .core import (
    CandidateMultiplication,
    Nearring,
    PropertyFlags,
    RModule,
    TranslationEmbedding,
    annihilator,
    builtin,
    classify,
    distributive_elements,
    ideals,
    is_faithful,
    is_ideal,
    is_simple,
    regular_module,
    translation_embedding,
    units,
    validate,
)
from .checks import CheckVerdict, SuiteReport, run_suite, summarize_reports
from .census import (
    CensusResult,
    SearchSpec,
    brute_force_oracle,
    candidate_stream,
    canonicalize,
    census,
    census_suite,
)
