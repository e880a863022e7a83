"""Chordal 1-planar graphs: recognition, drawings, the 4-join family and Hamiltonian paths."""

from .catalog import catalog, catalog_names, pattern
from .chordal import ScaleExceeded, is_chordal, is_k_tree, simplicial_vertices
from .connectivity import check_chvatal_bound, toughness, vertex_connectivity
from .embedding import Drawing, DrawingError, drawing_code, four_join, twin_faces, validate
from .families import g0, glue_g0, glued_family, random_k_tree, two_simplicial_k_tree
from .graph import Graph, are_isomorphic, canonical_form, from_edge_list, parse_edge_list
from .hamiltonian import HamPath, ktree_ham_path, oracle_ham_path, theorem_ham_path
from .oneplanarity import enumerate_drawings, is_one_planar
from .phi_family import generate_phi, phi_membership

__version__ = "0.1.0"

__all__ = [
    "Drawing",
    "DrawingError",
    "Graph",
    "HamPath",
    "ScaleExceeded",
    "are_isomorphic",
    "canonical_form",
    "catalog",
    "catalog_names",
    "check_chvatal_bound",
    "drawing_code",
    "enumerate_drawings",
    "four_join",
    "from_edge_list",
    "g0",
    "generate_phi",
    "glue_g0",
    "glued_family",
    "is_chordal",
    "is_k_tree",
    "is_one_planar",
    "ktree_ham_path",
    "oracle_ham_path",
    "parse_edge_list",
    "pattern",
    "phi_membership",
    "random_k_tree",
    "simplicial_vertices",
    "theorem_ham_path",
    "toughness",
    "twin_faces",
    "two_simplicial_k_tree",
    "validate",
    "vertex_connectivity",
]
