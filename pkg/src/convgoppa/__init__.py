"""Convolutional Goppa codes on the trivial fibration P^m x A^1 -> A^1."""

from .errors import ConvGoppaError
from .finite_field import FieldElement, FieldSpec, FieldTable, build_field, gf8
from .polynomial import MINUS_INFINITY, Poly, parse_poly, poly_gcd, vec_weight
from .polymat import (
    EncoderProfile,
    PolyMatrix,
    SnfDecomposition,
    basic_encoder,
    code_degree,
    is_basic,
    minors_gcd,
    parity_check,
    rank_rational,
    smith_normal_form,
    to_canonical,
)
from .goppa import (
    CodeReport,
    GammaGenerator,
    Section,
    SectionSet,
    build_code,
    build_generator_matrix,
    evaluate_generator,
    monomial_basis,
    parameter_bounds,
    singleton_bound,
)
from .free_distance import (
    StateSpace,
    build_state_space,
    free_distance_bruteforce,
    free_distance_search,
)
from .config import CodeConfig, parse_config, realize, render_config

__version__ = "0.1.0"

__all__ = [
    "CodeConfig",
    "CodeReport",
    "ConvGoppaError",
    "EncoderProfile",
    "FieldElement",
    "FieldSpec",
    "FieldTable",
    "GammaGenerator",
    "MINUS_INFINITY",
    "Poly",
    "PolyMatrix",
    "Section",
    "SectionSet",
    "SnfDecomposition",
    "StateSpace",
    "basic_encoder",
    "build_code",
    "build_field",
    "build_generator_matrix",
    "build_state_space",
    "code_degree",
    "evaluate_generator",
    "free_distance_bruteforce",
    "free_distance_search",
    "gf8",
    "is_basic",
    "minors_gcd",
    "monomial_basis",
    "parameter_bounds",
    "parity_check",
    "parse_config",
    "parse_poly",
    "poly_gcd",
    "rank_rational",
    "realize",
    "render_config",
    "singleton_bound",
    "smith_normal_form",
    "to_canonical",
    "vec_weight",
]
