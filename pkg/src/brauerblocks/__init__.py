"""Exact computations for Brauer algebras, type C Weyl characters and star-action blocks."""

__version__ = "0.1.0"

from .partitions import enumerate_labels, specht_dimension, transpose
from .brauer import BrauerDiagram, all_diagrams, compose, involution
from .cells import build_cell, gram_rank, induce, filtration_dimension_law
from .characters import straighten, tensor_power_decomposition, weyl_dimension
from .jantzen import jsf_full, jsf_generic, is_reducible
from .blocks import brauer_blocks, symplectic_blocks, minimal_representative, orbit_invariant
from .oracle import decomposition_numbers, oracle_blocks

__all__ = [
    "enumerate_labels", "specht_dimension", "transpose",
    "BrauerDiagram", "all_diagrams", "compose", "involution",
    "build_cell", "gram_rank", "induce", "filtration_dimension_law",
    "straighten", "tensor_power_decomposition", "weyl_dimension",
    "jsf_full", "jsf_generic", "is_reducible",
    "brauer_blocks", "symplectic_blocks", "minimal_representative", "orbit_invariant",
    "decomposition_numbers", "oracle_blocks",
]
