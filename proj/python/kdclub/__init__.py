"""Exact maximum k-defective clique solver."""

from ._core import (
    ContractViolation,
    InputError,
    brute_force,
    club,
    kdbb_edge_bound,
    kdbb_vertex_bound,
    preprocess,
    read_instance,
    solve,
)

__all__ = [
    "ContractViolation",
    "InputError",
    "brute_force",
    "club",
    "kdbb_edge_bound",
    "kdbb_vertex_bound",
    "preprocess",
    "read_instance",
    "solve",
]
