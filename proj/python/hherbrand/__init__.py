"""Exact Hasse-Herbrand functions and depth transport for local fields."""

from ._hherbrand import (  # noqa: F401
    PwlFunction,
    SpecDomainError,
    SpecParseError,
    character_depth_from_parameter,
    cyclotomic_filtration,
    depth_report,
    depth_shapiro,
    induced_torus_depth,
    inflation_locus,
    parameter_depth,
    phi_cyclotomic_over_F,
    phi_cyclotomic_over_K,
    ramification_index,
    resolve_phi,
    transport_upper_index,
    verify,
)

__all__ = [
    "PwlFunction",
    "SpecDomainError",
    "SpecParseError",
    "character_depth_from_parameter",
    "cyclotomic_filtration",
    "depth_report",
    "depth_shapiro",
    "induced_torus_depth",
    "inflation_locus",
    "parameter_depth",
    "phi_cyclotomic_over_F",
    "phi_cyclotomic_over_K",
    "ramification_index",
    "resolve_phi",
    "transport_upper_index",
    "verify",
]
