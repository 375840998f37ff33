"""Length-decreasing steps, geodesic words, dead ends and their depth.

Internally everything runs on raw kernel tuples ``(top, bottom, tp, bp)`` so the
oracle can sweep large balls without building wrapper objects.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass

from . import kernels
from .forest import ForestDiagram
from .words import Letter, Word


class DomainError(ValueError):
    """Raised when an operation is asked about an element outside its domain."""


class Action(str, enum.Enum):
    POINTER_MOVE = "pointer move"
    CARET_BUILT_TOP = "caret built top"
    CARET_REMOVED_TOP = "caret removed top"
    CARET_BUILT_BOTTOM = "caret built bottom"
    CARET_REMOVED_BOTTOM = "caret removed bottom"

    def __str__(self) -> str:
        return self.value


def _carets(forest) -> int:
    return sum(t.count(49) for t in forest)


def raw_length(n: int, raw) -> int:
    l0, l1 = kernels.length_parts(n, *raw)
    return l0 + l1


def action_kind(n: int, raw, i: int, sign: int) -> Action:
    """What left multiplication by ``x_i ** sign`` does to the diagram."""
    if i == 0:
        return Action.POINTER_MOVE
    top, bottom, tp, _ = raw
    if sign > 0:
        after = kernels.apply_letter(n, *raw, i, 1)
        if _carets(after[1]) < _carets(bottom):
            return Action.CARET_REMOVED_BOTTOM
        return Action.CARET_BUILT_TOP
    j = tp + i - 1
    if j < len(top) and top[j] != kernels.LEAF:
        return Action.CARET_REMOVED_TOP
    return Action.CARET_BUILT_BOTTOM


# -- neighbourhood -------------------------------------------------------------


@dataclass(frozen=True)
class Neighbor:
    letter: Letter
    length: int
    action: Action


@dataclass(frozen=True)
class NeighborReport:
    length: int
    neighbors: tuple[Neighbor, ...]

    def __iter__(self):
        return iter(self.neighbors)

    def __len__(self) -> int:
        return len(self.neighbors)


def neighbor_report(d: ForestDiagram) -> NeighborReport:
    n, raw = d.n, d.raw
    out = []
    for i in range(n):
        for sign in (1, -1):
            after = kernels.apply_letter(n, *raw, i, sign)
            out.append(Neighbor(Letter(i, sign), raw_length(n, after), action_kind(n, raw, i, sign)))
    return NeighborReport(raw_length(n, raw), tuple(out))


# -- left and right spaces -----------------------------------------------------


@dataclass(frozen=True)
class SidedSpaces:
    current_tree: int
    left_space: int
    right_space: int


def sided_spaces(d: ForestDiagram) -> SidedSpaces:
    """Gap indices of the left and right space of ``d``.

    The gap just left of the current tree is always exterior and marked, so it
    is the left space.  The right space is the first marked gap at or past the
    right edge of the current tree that no top tree covers; it may lie outside
    the window, where every gap is exterior.
    """
    return SidedSpaces(d.tp, 0, _right_space(d.n, d.raw))


def _right_space(n: int, raw) -> int:
    top, _, tp, _ = raw
    m = n - 1
    c0 = kernels.leaf_start(top, tp)
    edges = set()
    col = 0
    for tree in top:
        col += tree.count(48)
        edges.add(col)
    last = col
    c = kernels.leaf_start(top, tp + 1)
    c += -(c - c0) % m
    while c < last and c not in edges:
        c += m
    return c - c0


def _label_at(n: int, raw, g: int) -> tuple[int, int]:
    for gap, t, b in kernels.labels(n, *raw):
        if gap == g:
            return t, b
    return kernels.UNLABELLED, kernels.UNLABELLED


# -- descent --------------------------------------------------------------------


def _descent(n: int, raw, length: int):
    """Return ``(letter index, sign, new raw, new length)`` for one descent step."""
    top, bottom, tp, _ = raw
    nb = _carets(bottom)
    for i in range(1, n):
        after = kernels.apply_letter(n, *raw, i, 1)
        if _carets(after[1]) < nb:
            return i, 1, after, raw_length(n, after)
    removes_top = False
    for i in range(1, n):
        j = tp + i - 1
        if j < len(top) and top[j] != kernels.LEAF:
            removes_top = True
            after = kernels.apply_letter(n, *raw, i, -1)
            lengths = raw_length(n, after)
            if lengths < length:
                return i, -1, after, lengths
    signs = (1,) if removes_top else (1, -1)
    for sign in signs:
        after = kernels.apply_letter(n, *raw, 0, sign)
        lengths = raw_length(n, after)
        if lengths < length:
            return 0, sign, after, lengths
    raise AssertionError(f"no descending letter found for {ForestDiagram(n, *raw)}")


def descent_letter(d: ForestDiagram) -> Letter:
    """A letter that shortens ``d`` by one, chosen by the fixed priority order.

    1. an ``x_i`` that cancels a bottom caret;
    2. otherwise, when some ``x_i^-1`` removes a top caret, the first such one
       that shortens ``d``, falling back to ``x_0``;
    3. otherwise ``x_0`` or ``x_0^-1``.

    Ties go to the smallest index.
    """
    if d.is_identity():
        raise DomainError("the identity has no descending letter")
    n, raw = d.n, d.raw
    i, sign, _, _ = _descent(n, raw, raw_length(n, raw))
    return Letter(i, sign)


def raw_geodesic(n: int, raw) -> list[tuple[int, int]]:
    """Geodesic as ``[(index, sign), ...]``, leftmost factor first."""
    length = raw_length(n, raw)
    steps = []
    while length:
        i, sign, raw, new = _descent(n, raw, length)
        if new != length - 1:
            raise AssertionError("descent step did not shorten by exactly one")
        steps.append((i, -sign))
        length = new
    if raw != ((kernels.LEAF,), (kernels.LEAF,), 0, 0):
        raise AssertionError("descent ended at a non-identity element of length 0")
    return steps


def geodesic_word(d: ForestDiagram) -> Word:
    """A minimum-length word ``w`` with ``evaluate_word(d.n, w) == d``."""
    return tuple(Letter(i, s) for i, s in raw_geodesic(d.n, d.raw))


# -- dead ends -----------------------------------------------------------------


def raw_is_dead_end(n: int, raw, length: int | None = None) -> bool:
    if length is None:
        length = raw_length(n, raw)
    if length == 0:
        return False
    for i in range(n):
        for sign in (1, -1):
            if raw_length(n, kernels.apply_letter(n, *raw, i, sign)) > length:
                return False
    return True


def is_dead_end_brute(d: ForestDiagram) -> bool:
    """No generator or inverse makes ``d`` longer."""
    return raw_is_dead_end(d.n, d.raw)


def dead_end_conditions(d: ForestDiagram) -> tuple[bool, bool, bool, bool]:
    """The four structural conditions, in order.

    1. every ``x_i^-1`` removes a top caret;
    2. the left space is labelled L over L;
    3. the right space is labelled R over R;
    4. no ``x_i^-1 d`` has its right space labelled R over R.
    """
    return raw_dead_end_conditions(d.n, d.raw)


def raw_dead_end_conditions(n: int, raw) -> tuple[bool, bool, bool, bool]:
    top, _, tp, _ = raw
    L, R = kernels.L, kernels.R
    c1 = all(tp + i - 1 < len(top) and top[tp + i - 1] != kernels.LEAF for i in range(1, n))
    c2 = _label_at(n, raw, 0) == (L, L)
    c3 = _label_at(n, raw, _right_space(n, raw)) == (R, R)
    c4 = True
    for i in range(1, n):
        after = kernels.apply_letter(n, *raw, i, -1)
        if _label_at(n, after, _right_space(n, after)) == (R, R):
            c4 = False
            break
    return c1, c2, c3, c4


def raw_is_dead_end_structural(n: int, raw) -> bool:
    return all(raw_dead_end_conditions(n, raw))


def is_dead_end_structural(d: ForestDiagram) -> bool:
    """Dead-end test from the forest structure and labels alone."""
    return raw_is_dead_end_structural(d.n, d.raw)


def _all_letters(n: int):
    return [(i, s) for i in range(n) for s in (1, -1)]


def raw_escape_length(n: int, raw, max_length: int = 3) -> int | None:
    """Length of the shortest word ``w`` with ``|w d| > |d|``, or None past ``max_length``."""
    target = raw_length(n, raw)
    letters = _all_letters(n)
    frontier = {raw}
    for m in range(1, max_length + 1):
        nxt = set()
        for x in frontier:
            for i, s in letters:
                y = kernels.apply_letter(n, *x, i, s)
                if raw_length(n, y) > target:
                    return m
                nxt.add(y)
        frontier = nxt
    return None


def dead_end_depth(d: ForestDiagram, max_length: int = 3) -> int:
    """One less than the length of the shortest word that makes ``d`` longer."""
    n, raw = d.n, d.raw
    if not raw_is_dead_end(n, raw):
        raise DomainError("element is not a dead end")
    m = raw_escape_length(n, raw, max_length)
    if m is None:
        raise DomainError(f"no escape word of length <= {max_length}")
    return m - 1


def escape_words(n: int) -> list[Word]:
    """The ``(n-1)**2`` words ``x_i^-1 x_j^-1 x_0`` that lift a dead end by one."""
    return [(Letter(i, -1), Letter(j, -1), Letter(0, 1)) for i in range(1, n) for j in range(1, n)]
