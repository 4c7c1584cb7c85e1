"""
Exact list-coloring search on prisms.

Components:
- coloring: Coloring, ColorWord, properness and boundedness predicates
- search: proper-coloring search and lex-min branch and bound
- equitable: bounded coloring extraction
- oracles: independence number, exhaustive coloring enumeration and its lex-min
- refutation: propagation refutation trees for unsatisfiable assignments
"""

from .coloring import (
    ColorWord,
    Coloring,
    Comparison,
    color_word,
    compare,
    equitable_bound,
    is_bounded,
    is_list_coloring,
    is_proper,
    respects_lists,
    unused_color_move,
    uses_fewer_than_four_colors,
)
from .equitable import bounded_coloring, equitable_coloring
from .oracles import (
    all_proper_colorings,
    count_proper_colorings,
    independence_number,
    lexmin_by_enumeration,
    max_independent_set,
)
from .refutation import Branch, Conflict, check_refutation, refute
from .search import LexMinSearch, SearchResult, lexmin, solve_proper

__all__ = [
    "ColorWord",
    "Coloring",
    "Comparison",
    "color_word",
    "compare",
    "equitable_bound",
    "is_bounded",
    "is_list_coloring",
    "is_proper",
    "respects_lists",
    "unused_color_move",
    "uses_fewer_than_four_colors",
    "bounded_coloring",
    "equitable_coloring",
    "all_proper_colorings",
    "count_proper_colorings",
    "independence_number",
    "lexmin_by_enumeration",
    "max_independent_set",
    "Branch",
    "Conflict",
    "check_refutation",
    "refute",
    "LexMinSearch",
    "SearchResult",
    "lexmin",
    "solve_proper",
]
