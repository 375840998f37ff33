"""Gap numbering, interior/exterior classification, labels and the length formula.

Gaps sit between adjacent leaf columns.  Gap ``g`` is the one ``g`` columns to
the right of the left edge of the top pointer tree, so gap 0 is immediately
left of the current tree; gap ``g`` is *marked* when ``g`` is a multiple of
``n - 1``.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Literal

from . import kernels, trees
from .forest import ForestDiagram

Side = Literal["top", "bottom"]


class Label(str, enum.Enum):
    L = "L"
    N = "N"
    R = "R"
    I = "I"  # noqa: E741
    UNLABELLED = "-"

    def __str__(self) -> str:
        return self.value


_CODES = (Label.L, Label.N, Label.R, Label.I, Label.UNLABELLED)
_INDEX = {label: k for k, label in enumerate(_CODES)}


def weight(top: Label, bottom: Label) -> int:
    """Weight of a marked gap with the given top and bottom labels."""
    if top is Label.UNLABELLED or bottom is Label.UNLABELLED:
        raise ValueError("unlabelled gaps carry no weight")
    return kernels.WEIGHTS[_INDEX[Label(bottom)]][_INDEX[Label(top)]]


def is_marked(d: ForestDiagram, g: int) -> bool:
    return g % (d.n - 1) == 0


def origin(d: ForestDiagram) -> int:
    """Column of the leftmost leaf of the top pointer tree."""
    return kernels.leaf_start(d.top, d.tp)


@dataclass(frozen=True)
class GapClass:
    interior: bool
    tree: int | None = None
    path: tuple[int, ...] = ()
    position: int | None = None


EXTERIOR = GapClass(False)


def classify_gap(d: ForestDiagram, side: Side, g: int) -> GapClass:
    """Interior gaps report the enclosing caret and the child boundary it sits on.

    ``tree`` indexes the forest, ``path`` lists child positions (1-based) from
    the root down to the enclosing caret, and ``position`` is ``i`` when the gap
    lies between the caret's i-th and (i+1)-st child.
    """
    forest = d.top if side == "top" else d.bottom
    c = g + origin(d)
    col = 0
    for t, tree in enumerate(forest):
        leaves = trees.leaf_count(tree)
        if col < c < col + leaves:
            path, position = _enclosing(tree, d.n, c - col)
            return GapClass(True, t, path, position)
        col += leaves
    return EXTERIOR


def _enclosing(tree: bytes, n: int, offset: int) -> tuple[tuple[int, ...], int]:
    path: list[int] = []
    while True:
        kids = trees.children(tree, n)
        col = 0
        for k, kid in enumerate(kids):
            leaves = trees.leaf_count(kid)
            if offset == col and k:
                return tuple(path), k
            if col < offset < col + leaves:
                path.append(k + 1)
                tree = kid
                offset -= col
                break
            col += leaves
        else:  # pragma: no cover - offset checked by the caller
            raise AssertionError("gap not inside tree")


def _features(d: ForestDiagram) -> list[tuple[int, int]]:
    spans = []
    for forest, p in ((d.top, d.tp), (d.bottom, d.bp)):
        col = 0
        for t, tree in enumerate(forest):
            leaves = trees.leaf_count(tree)
            if t == p or tree != trees.LEAF:
                spans.append((col, col + leaves - 1))
            col += leaves
    return spans


def support(d: ForestDiagram) -> frozenset[int]:
    """All gaps (marked or not) in the support of ``d``.

    A gap is in the support when it is interior on either side, or when some
    feature (a pointer tree or a nontrivial tree of either forest) lies
    entirely to its left and another entirely to its right.
    """
    c0 = origin(d)
    spans = _features(d)
    lo = min(b for _, b in spans)
    hi = max(a for a, _ in spans)
    out = {c - c0 for c in range(lo + 1, hi + 1)}
    for forest in (d.top, d.bottom):
        col = 0
        for tree in forest:
            leaves = trees.leaf_count(tree)
            out.update(c - c0 for c in range(col + 1, col + leaves))
            col += leaves
    return frozenset(out)


@dataclass(frozen=True)
class SpaceLabel:
    top: Label
    bottom: Label

    @property
    def weight(self) -> int:
        return weight(self.top, self.bottom)


_UNLABELLED = SpaceLabel(Label.UNLABELLED, Label.UNLABELLED)


@dataclass(frozen=True)
class SpaceLabelling:
    n: int
    spaces: dict[int, SpaceLabel]

    def __getitem__(self, g: int) -> SpaceLabel:
        return self.spaces.get(g, _UNLABELLED)

    def __iter__(self):
        return iter(sorted(self.spaces))

    @property
    def total_weight(self) -> int:
        return sum(s.weight for s in self.spaces.values())

    def lines(self) -> list[str]:
        return [f"{g} {s.top} {s.bottom} {s.weight}" for g, s in sorted(self.spaces.items())]


def label_spaces(d: ForestDiagram) -> SpaceLabelling:
    """Top and bottom labels of every marked gap in the support.

    Each forest is labelled on its own, first rule that applies:

    * ``L``: exterior and at or left of the gap just left of that forest's pointer tree;
    * ``N``: exterior and the rightmost marked gap at or left of the first leaf
      of a nontrivial tree, or interior and left of a child caret of the caret
      enclosing it.  Such a claim lapses when the gap is interior on the
      opposite forest and the caret enclosing it there ends before the
      claiming caret begins;
    * ``R``: any other exterior gap;
    * ``I``: any other interior gap.
    """
    spaces = {
        g: SpaceLabel(_CODES[t], _CODES[b]) for g, t, b in kernels.labels(d.n, d.top, d.bottom, d.tp, d.bp)
    }
    return SpaceLabelling(d.n, spaces)


def length_parts(d: ForestDiagram) -> tuple[int, int]:
    return kernels.length_parts(d.n, d.top, d.bottom, d.tp, d.bp)


def length(d: ForestDiagram) -> int:
    l0, l1 = kernels.length_parts(d.n, d.top, d.bottom, d.tp, d.bp)
    return l0 + l1
