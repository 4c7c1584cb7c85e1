"""
Prism graphs, symmetry maps and list assignments.

Components:
- graph: Prism construction, faces, rung windows, counting identity
- symmetry: the 4n automorphisms and canonical forms of list assignments
- lists: k-uniform list assignments
- textio: line-oriented text format
"""

from .graph import (
    Layer,
    Prism,
    Vertex,
    Window,
    build_prism,
    counting_identity,
    parse_vertex,
    vertex_at,
    window_sums,
)
from .lists import ListAssignment, random_uniform, uniform_assignment
from .symmetry import (
    VertexMap,
    automorphism_group,
    canonical_form,
    canonical_keys,
    enumerate_canonical_assignments,
    transport,
)
from .textio import PrismDocument, format_document, parse_document

__all__ = [
    "Layer",
    "Prism",
    "Vertex",
    "Window",
    "build_prism",
    "counting_identity",
    "parse_vertex",
    "vertex_at",
    "window_sums",
    "ListAssignment",
    "random_uniform",
    "uniform_assignment",
    "VertexMap",
    "automorphism_group",
    "canonical_form",
    "canonical_keys",
    "enumerate_canonical_assignments",
    "transport",
    "PrismDocument",
    "format_document",
    "parse_document",
]
