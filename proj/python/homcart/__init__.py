"""Curvature, holonomy and infinitesimal automorphisms of invariant
connections on homogeneous bundles, with a generator for the conformal
geometry of a product of two spheres."""

from homcart._core import (
    Connection,
    ConnectionKind,
    CurvatureForm,
    HolonomyReport,
    InfAutResult,
    InputError,
    LieAlgebra,
    PreconditionError,
    SphereModel,
    SphereParams,
    Subspace,
    ValidationReport,
    bracket_closure,
    build_sphere_model,
    connection_from_json,
    connection_to_json,
    curvature,
    curvature_image,
    einstein_ratio,
    holonomy_report,
    infinitesimal_automorphisms,
    kappa_closed_form,
    killing_signature,
    load_connection,
    normal_connection,
    parameter_grid,
    span,
    validate,
    wang_holonomy,
)

__version__ = "0.1.0"

__all__ = [
    "Connection",
    "ConnectionKind",
    "CurvatureForm",
    "HolonomyReport",
    "InfAutResult",
    "InputError",
    "LieAlgebra",
    "PreconditionError",
    "SphereModel",
    "SphereParams",
    "Subspace",
    "ValidationReport",
    "bracket_closure",
    "build_sphere_model",
    "connection_from_json",
    "connection_to_json",
    "curvature",
    "curvature_image",
    "einstein_ratio",
    "holonomy_report",
    "infinitesimal_automorphisms",
    "kappa_closed_form",
    "killing_signature",
    "load_connection",
    "normal_connection",
    "parameter_grid",
    "span",
    "validate",
    "wang_holonomy",
]
