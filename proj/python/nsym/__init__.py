"""Immaculate functions: products, Pieri rules, tableaux and verification sweeps.

Linear combinations are dicts mapping index tuples to integer coefficients,
in graded-lex order of the indices.
"""

from ._nsym import (
    ResourceLimit,
    T_alpha_beta,
    convert,
    default_max_size,
    immaculate_to_H,
    left_pieri,
    left_pieri_unit_coefficient,
    lr_coefficient,
    phi_r,
    product,
    render_json,
    render_text,
    render_tableau,
    right_pieri,
    schur_to_h,
    sgn,
    skew_immaculate_tableaux,
    structure_constant,
    suite_names,
    verify,
    y_map,
)

__all__ = [
    "ResourceLimit",
    "T_alpha_beta",
    "convert",
    "default_max_size",
    "immaculate_to_H",
    "left_pieri",
    "left_pieri_unit_coefficient",
    "lr_coefficient",
    "phi_r",
    "product",
    "render_json",
    "render_text",
    "render_tableau",
    "right_pieri",
    "schur_to_h",
    "sgn",
    "skew_immaculate_tableaux",
    "structure_constant",
    "suite_names",
    "verify",
    "y_map",
]
