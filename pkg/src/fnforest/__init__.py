"""Forest diagrams for the Brown-Thompson groups F(n).

Elements are reduced two-way pointed n-ary forest diagrams.  Word length is
computed exactly from a labelling of the marked spaces, and the package
ships a Cayley-graph oracle and a piecewise-linear realization to check it.
"""

from .forest import (
    ArityError,
    DiagramSyntaxError,
    ForestDiagram,
    apply_letter,
    apply_word,
    canonical_key,
    evaluate_word,
    from_text,
    identity_diagram,
    invert,
    multiply,
    reduce,
    to_text,
)
from .geodesic import (
    DomainError,
    dead_end_depth,
    descent_letter,
    geodesic_word,
    is_dead_end_brute,
    is_dead_end_structural,
)
from .metric import Label, label_spaces, length, length_parts, support
from .words import Letter, WordSyntaxError, format_word, parse_word

__version__ = "0.1.0"

__all__ = [
    "ArityError",
    "DiagramSyntaxError",
    "DomainError",
    "ForestDiagram",
    "Label",
    "Letter",
    "WordSyntaxError",
    "apply_letter",
    "apply_word",
    "canonical_key",
    "dead_end_depth",
    "descent_letter",
    "evaluate_word",
    "format_word",
    "from_text",
    "geodesic_word",
    "identity_diagram",
    "invert",
    "is_dead_end_brute",
    "is_dead_end_structural",
    "label_spaces",
    "length",
    "length_parts",
    "multiply",
    "parse_word",
    "reduce",
    "support",
    "to_text",
]
