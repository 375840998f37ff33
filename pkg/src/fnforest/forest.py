"""Two-way pointed n-ary forest diagrams and the left action of the generators.

A diagram keeps a finite window of columns.  The k-th leaf of the top window
sits over the k-th leaf of the bottom window; outside the window every column
is a trivial tree on both sides.  ``tp`` and ``bp`` index the pointed trees of
the top and bottom forest.  Diagrams returned by this module are reduced and
trimmed to the columns between the leftmost and rightmost feature, so equality
of values is equality of group elements.
"""

from __future__ import annotations

from collections.abc import Iterable
from typing import NamedTuple

from . import kernels, trees
from .trees import LEAF, TreeSyntaxError
from .words import Letter, Word, parse_word


class ArityError(ValueError):
    pass


class DiagramSyntaxError(ValueError):
    pass


class ForestDiagram(NamedTuple):
    n: int
    top: tuple[bytes, ...]
    bottom: tuple[bytes, ...]
    tp: int
    bp: int

    @property
    def raw(self) -> tuple:
        return self[1:]

    @property
    def carets(self) -> int:
        return sum(map(trees.caret_count, self.top)) + sum(map(trees.caret_count, self.bottom))

    @property
    def columns(self) -> int:
        return sum(map(trees.leaf_count, self.top))

    def is_identity(self) -> bool:
        return self.top == (LEAF,) and self.bottom == (LEAF,) and self.tp == 0 and self.bp == 0

    def __str__(self) -> str:
        return to_text(self)


def _check_arity(n: int) -> None:
    if not isinstance(n, int) or n < 2:
        raise ArityError(f"invalid arity {n!r}: need n >= 2")


def identity_diagram(n: int) -> ForestDiagram:
    _check_arity(n)
    return ForestDiagram(n, (LEAF,), (LEAF,), 0, 0)


def check_diagram(d: ForestDiagram) -> None:
    """Raise ``ValueError`` unless ``d`` satisfies the structural invariants."""
    n = d.n
    _check_arity(n)
    if not d.top or not d.bottom:
        raise ValueError("empty forest window")
    for tree in d.top + d.bottom:
        if not trees.is_valid(tree, n):
            raise ValueError(f"malformed {n}-ary tree {tree!r}")
    if sum(map(trees.leaf_count, d.top)) != sum(map(trees.leaf_count, d.bottom)):
        raise ValueError("top and bottom windows have different leaf counts")
    if not (0 <= d.tp < len(d.top) and 0 <= d.bp < len(d.bottom)):
        raise ValueError("pointer outside the window")
    if (d.tp - d.bp) % (n - 1):
        raise ValueError("pointers are not congruent modulo n-1")


def apply_letter(d: ForestDiagram, s: Letter) -> ForestDiagram:
    """The reduced diagram of ``s * d`` (left multiplication)."""
    if not 0 <= s.index < d.n or s.sign not in (1, -1):
        raise ArityError(f"letter {s} is not valid in F({d.n})")
    return ForestDiagram(d.n, *kernels.apply_letter(d.n, d.top, d.bottom, d.tp, d.bp, s.index, s.sign))


def apply_word(d: ForestDiagram, word: Iterable[Letter]) -> ForestDiagram:
    """``w * d``: the rightmost letter acts first."""
    n = d.n
    raw = d.raw
    for s in reversed(tuple(word)):
        if not 0 <= s.index < n:
            raise ArityError(f"letter {s} is not valid in F({n})")
        raw = kernels.apply_letter(n, *raw, s.index, s.sign)
    return ForestDiagram(n, *raw)


def evaluate_word(n: int, word: Word | str) -> ForestDiagram:
    if isinstance(word, str):
        word = parse_word(word, n)
    return apply_word(identity_diagram(n), word)


# -- reduction --------------------------------------------------------------


def opposing_pairs(d: ForestDiagram) -> list[int]:
    """Leaf columns at which an exposed top caret meets an exposed bottom caret."""

    def exposed(forest):
        cols = set()
        col = 0
        for tree in forest:
            for k in trees.exposed_carets(tree, d.n):
                cols.add(col + k)
            col += trees.leaf_count(tree)
        return cols

    return sorted(exposed(d.top) & exposed(d.bottom))


def _locate(forest, col):
    for k, tree in enumerate(forest):
        leaves = trees.leaf_count(tree)
        if col < leaves:
            return k, col
        col -= leaves
    raise IndexError(col)


def cancel_pair(d: ForestDiagram, col: int) -> ForestDiagram:
    """Cancel the opposing pair whose leaves start at column ``col``; no trimming."""
    top = list(d.top)
    bottom = list(d.bottom)
    for forest in (top, bottom):
        k, off = _locate(forest, col)
        forest[k] = trees.collapse_caret(forest[k], off, d.n)
    return d._replace(top=tuple(top), bottom=tuple(bottom))


def trim(d: ForestDiagram) -> ForestDiagram:
    """Drop trivial-trivial columns outside the span of features."""
    top = list(d.top)
    bottom = list(d.bottom)
    tp, bp = d.tp, d.bp
    while len(top) > 1 and len(bottom) > 1 and tp and bp and top[0] == LEAF and bottom[0] == LEAF:
        del top[0], bottom[0]
        tp -= 1
        bp -= 1
    while (
        len(top) > 1
        and len(bottom) > 1
        and tp < len(top) - 1
        and bp < len(bottom) - 1
        and top[-1] == LEAF
        and bottom[-1] == LEAF
    ):
        top.pop()
        bottom.pop()
    return ForestDiagram(d.n, tuple(top), tuple(bottom), tp, bp)


def reduce(d: ForestDiagram) -> ForestDiagram:
    """Cancel opposing caret pairs until none remain, then trim."""
    while True:
        pairs = opposing_pairs(d)
        if not pairs:
            return trim(d)
        d = cancel_pair(d, pairs[0])


def subdivide(d: ForestDiagram, col: int) -> ForestDiagram:
    """Grow an opposing caret pair under column ``col`` (same element, unreduced)."""
    top = list(d.top)
    bottom = list(d.bottom)
    new = trees.caret([LEAF] * d.n)
    for forest in (top, bottom):
        k, off = _locate(forest, col)
        forest[k] = trees.replace_leaf(forest[k], off, new)
    return d._replace(top=tuple(top), bottom=tuple(bottom))


# -- group structure ---------------------------------------------------------


def invert(d: ForestDiagram) -> ForestDiagram:
    return ForestDiagram(d.n, d.bottom, d.top, d.bp, d.tp)


def multiply(f: ForestDiagram, g: ForestDiagram) -> ForestDiagram:
    """``f * g``: left-apply a geodesic word for ``f`` to ``g``."""
    from .geodesic import geodesic_word

    if f.n != g.n:
        raise ArityError(f"cannot multiply elements of F({f.n}) and F({g.n})")
    return apply_word(g, geodesic_word(f))


# -- text format -------------------------------------------------------------


def _forest_text(forest, pointer, n):
    return " ".join(("*" if k == pointer else "") + trees.format_tree(t, n) for k, t in enumerate(forest))


def to_text(d: ForestDiagram) -> str:
    return f"F({d.n})\ntop: {_forest_text(d.top, d.tp, d.n)}\nbottom: {_forest_text(d.bottom, d.bp, d.n)}"


def canonical_key(d: ForestDiagram) -> bytes:
    return to_text(d).encode("ascii")


def _split_forest(text: str) -> list[str]:
    items = []
    depth = 0
    current = []
    for ch in text:
        if ch.isspace() and depth == 0:
            if current:
                items.append("".join(current))
                current = []
            continue
        if ch == "(":
            depth += 1
        elif ch == ")":
            depth -= 1
            if depth < 0:
                raise DiagramSyntaxError("unbalanced ')'")
        current.append(ch)
    if depth:
        raise DiagramSyntaxError("unbalanced '('")
    if current:
        items.append("".join(current))
    return items


def _parse_forest(text: str, n: int) -> tuple[tuple[bytes, ...], int]:
    out = []
    pointer = None
    for k, item in enumerate(_split_forest(text)):
        if item.startswith("*"):
            if pointer is not None:
                raise DiagramSyntaxError("two pointers in one forest")
            pointer = k
            item = item[1:]
        try:
            out.append(trees.parse_tree(item, n))
        except TreeSyntaxError as exc:
            raise DiagramSyntaxError(str(exc)) from None
    if pointer is None:
        raise DiagramSyntaxError("forest has no pointer")
    return tuple(out), pointer


def from_text(text: str) -> ForestDiagram:
    """Parse the three-line text format and return the reduced canonical diagram."""
    lines = [line.strip() for line in text.strip().splitlines() if line.strip()]
    if len(lines) != 3 or not (lines[0].startswith("F(") and lines[0].endswith(")")):
        raise DiagramSyntaxError("expected lines 'F(n)', 'top: ...', 'bottom: ...'")
    try:
        n = int(lines[0][2:-1])
    except ValueError:
        raise DiagramSyntaxError(f"bad arity line {lines[0]!r}") from None
    if n < 2:
        raise ArityError(f"invalid arity {n}")
    if not lines[1].startswith("top:") or not lines[2].startswith("bottom:"):
        raise DiagramSyntaxError("expected 'top:' then 'bottom:'")
    top, tp = _parse_forest(lines[1][4:], n)
    bottom, bp = _parse_forest(lines[2][7:], n)
    d = ForestDiagram(n, top, bottom, tp, bp)
    try:
        check_diagram(d)
    except ValueError as exc:
        raise DiagramSyntaxError(str(exc)) from None
    return reduce(d)
