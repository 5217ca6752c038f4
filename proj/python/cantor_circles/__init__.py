"""Cantor circle Julia sets: component counts, dimensions and renders."""

from ._core import (
    CantorError,
    alpha_root,
    box_count,
    conformal_dimension,
    count_classes,
    count_components,
    enumerate_combinations,
    enumerate_degree_vectors,
    evaluate,
    hdim_bounds,
    ifs_maps,
    in_attractor,
    params,
    render_julia,
    render_standard,
    similarity_dimension,
    validate,
    verify,
)

__all__ = [
    "CantorError",
    "alpha_root",
    "box_count",
    "conformal_dimension",
    "count_classes",
    "count_components",
    "enumerate_combinations",
    "enumerate_degree_vectors",
    "evaluate",
    "hdim_bounds",
    "ifs_maps",
    "in_attractor",
    "params",
    "render_julia",
    "render_standard",
    "similarity_dimension",
    "validate",
    "verify",
]
