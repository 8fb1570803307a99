"""Exact Bernstein-Szego polynomials for root systems."""
from .bszcore import (
    BszParams,
    BszPolynomial,
    NotDeepError,
    build_P,
    exact_pairing_P_m,
    exact_pairing_P_P,
    monic_p,
    normalization_constant,
)
from .rootsys import SUPPORTED, RootSystem, UnsupportedRootSystem, build_root_system
from .symalg import (
    CharacterExpansion,
    ExponentialSum,
    SymmetricPolynomial,
    character_by_division,
    character_to_monomials,
    weyl_dimension,
)
from .univariate import ClassicParams, classic_norm, classic_norm_constant, classic_p
from .weightlat import (
    EnumerationCapExceeded,
    dominance_leq,
    is_sufficiently_deep,
    lambda_tilde,
    saturated_set,
)
from .weylgrp import WeylGroup, poincare_enumerated, poincare_product, weyl_group

__all__ = [
    "SUPPORTED", "RootSystem", "UnsupportedRootSystem", "build_root_system",
    "WeylGroup", "weyl_group", "poincare_enumerated", "poincare_product",
    "EnumerationCapExceeded", "dominance_leq", "is_sufficiently_deep", "lambda_tilde",
    "saturated_set",
    "ExponentialSum", "SymmetricPolynomial", "CharacterExpansion", "character_to_monomials",
    "character_by_division", "weyl_dimension",
    "BszParams", "BszPolynomial", "NotDeepError", "build_P", "monic_p",
    "normalization_constant", "exact_pairing_P_m", "exact_pairing_P_P",
    "ClassicParams", "classic_p", "classic_norm", "classic_norm_constant",
]
