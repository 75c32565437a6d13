"""Explicit minimal free resolutions of the residue field over
two-variable monomial quotient rings, with independent verification."""
from .betti import (
    BettiTable,
    PoincareSeries,
    betti_csv,
    betti_json,
    graded_betti,
    poincare_series,
    render_betti_table,
    series_expand,
    total_betti,
)
from .classify import IdealClass, classify
from .monomials import (
    EmptyIdeal,
    Monomial,
    MonomialIdeal,
    ParseError,
    UnitIdeal,
    colon_x,
    colon_y,
    normal_form,
    normalize_ideal,
    parse_ideal,
    parse_monomial,
    staircase_outline,
    standard_monomials,
)
from .oracle import (
    ExactRationals,
    FieldConfig,
    PrimeField,
    TruncationTooSmall,
    VerificationReport,
    check_complex,
    check_exactness,
    check_minimality,
    compare_betti,
    default_max_degree,
    graded_piece,
    minimal_resolution_bruteforce,
)
from .resolution import (
    Differential,
    GradedFreeModule,
    Resolution,
    ShapeMismatch,
    StageTooSmall,
    WrongClass,
    build_d1,
    build_d2,
    build_d3,
    build_d4,
    build_degenerate,
    build_resolution,
    compose_check,
    extend_resolution,
    resolution_from_json,
    resolution_to_json,
    syzygy_generators_Mx,
)
from .staircase import render_ascii, render_svg

__all__ = [
    "BettiTable",
    "PoincareSeries",
    "betti_csv",
    "betti_json",
    "graded_betti",
    "poincare_series",
    "render_betti_table",
    "series_expand",
    "total_betti",
    "IdealClass",
    "classify",
    "EmptyIdeal",
    "Monomial",
    "MonomialIdeal",
    "ParseError",
    "UnitIdeal",
    "colon_x",
    "colon_y",
    "normal_form",
    "normalize_ideal",
    "parse_ideal",
    "parse_monomial",
    "staircase_outline",
    "standard_monomials",
    "ExactRationals",
    "FieldConfig",
    "PrimeField",
    "TruncationTooSmall",
    "VerificationReport",
    "check_complex",
    "check_exactness",
    "check_minimality",
    "compare_betti",
    "default_max_degree",
    "graded_piece",
    "minimal_resolution_bruteforce",
    "Differential",
    "GradedFreeModule",
    "Resolution",
    "ShapeMismatch",
    "StageTooSmall",
    "WrongClass",
    "build_d1",
    "build_d2",
    "build_d3",
    "build_d4",
    "build_degenerate",
    "build_resolution",
    "compose_check",
    "extend_resolution",
    "resolution_from_json",
    "resolution_to_json",
    "syzygy_generators_Mx",
    "render_ascii",
    "render_svg",
]
