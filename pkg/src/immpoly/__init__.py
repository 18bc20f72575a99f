"""Exact immanants and immanantal polynomials of graph matrices."""

from .graphs import Graph, build_family, graph_matrix, lincomb_matrix
from .hooks import hook_coeff_closed, specialized_coeffs
from .immanant import ImmPolynomial, imm_poly, imm_polys, immanant, immanants
from .kernel import BACKEND
from .matrix import ExactMatrix
from .orientations import census, coeff_via_orientations
from .partitions import character, enumerate_partitions, hook

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "ExactMatrix",
    "Graph",
    "ImmPolynomial",
    "build_family",
    "census",
    "character",
    "coeff_via_orientations",
    "enumerate_partitions",
    "graph_matrix",
    "hook",
    "hook_coeff_closed",
    "imm_poly",
    "imm_polys",
    "immanant",
    "immanants",
    "lincomb_matrix",
    "specialized_coeffs",
]
