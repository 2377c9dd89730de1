"""Monoidal categories, coherence expressions, dual pairs and braidings."""

from .category import (FinMonoidalCategory, MonoidalFunctorData, MonoidalTransformationData,
                       compose_monoidal_functors, identity_monoidal_functor, identity_monoidal_transformation,
                       remake, validate_monoidal, validate_monoidal_functor, validate_monoidal_transformation)
from .expr import canonical_coherence_iso, eval_morphism_expr
from .structures import (BraidedCategory, BraidingData, DualPair, check_symmetry, unit_dual_pair,
                         unit_endo_product, validate_braiding, validate_dual_pair)

__all__ = [
    "FinMonoidalCategory", "MonoidalFunctorData", "MonoidalTransformationData", "compose_monoidal_functors",
    "identity_monoidal_functor", "identity_monoidal_transformation", "remake", "validate_monoidal",
    "validate_monoidal_functor", "validate_monoidal_transformation", "canonical_coherence_iso",
    "eval_morphism_expr", "BraidedCategory", "BraidingData", "DualPair", "check_symmetry", "unit_dual_pair",
    "unit_endo_product", "validate_braiding", "validate_dual_pair",
]
