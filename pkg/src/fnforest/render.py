"""Schematic ASCII and Graphviz renderings of a diagram.

Both formats embed the canonical text form, so a rendering can be parsed back
with :func:`diagram_from_rendering`.
"""

from __future__ import annotations

from . import trees
from .forest import ForestDiagram, from_text, to_text
from .metric import origin

_STEP = 4  # characters per leaf column


def _carets(forest, n):
    """``(first column, last column, height, child anchor columns)`` per caret.

    A leaf child anchors at its column, a caret child at the middle of its own anchors.
    """
    out = []

    def walk(tree, col):
        if tree == trees.LEAF:
            return col + 1, 0, col
        kids = trees.children(tree, n)
        anchors = []
        height = 0
        start = col
        for kid in kids:
            kid_start = col
            col, h, anchor = walk(kid, col)
            anchors.append(anchor if h else kid_start)
            height = max(height, h)
        out.append((start, col - 1, height + 1, anchors))
        return col, height + 1, (anchors[0] + anchors[-1]) // 2

    col = 0
    for tree in forest:
        col, _, _ = walk(tree, col)
    return out


def _rows(forest, n, width):
    """Caret rows from the highest down to height one."""
    carets = _carets(forest, n)
    top = max((c[2] for c in carets), default=0)
    rows = []
    for h in range(top, 0, -1):
        row = [" "] * width
        for first, last, height, anchors in carets:
            if height != h:
                continue
            for x in range(anchors[0] * _STEP, anchors[-1] * _STEP + 1):
                row[x] = "-"
            for a in anchors:
                row[a * _STEP] = "+"
        rows.append("".join(row).rstrip())
    return rows


def to_ascii(d: ForestDiagram) -> str:
    """Canonical text followed by a picture: top carets, top leaves, bottom leaves, bottom carets.

    Leaves are ``o``, the pointed trees are flagged with ``*`` and the
    marked gaps in between are numbered relative to the current tree.
    """
    n = d.n
    cols = d.columns
    width = cols * _STEP
    top_rows = _rows(d.top, n, width)
    bottom_rows = _rows(d.bottom, n, width)

    def leaves(forest, pointer):
        row = [" "] * width
        col = 0
        for t, tree in enumerate(forest):
            for k in range(trees.leaf_count(tree)):
                row[(col + k) * _STEP] = "o"
            if t == pointer:
                row[col * _STEP + 1] = "*"
            col += trees.leaf_count(tree)
        return "".join(row).rstrip()

    c0 = origin(d)
    gaps = [" "] * (width + 8)
    for c in range(1, cols):
        g = c - c0
        if g % (n - 1) == 0:
            label = str(g)
            x = c * _STEP - _STEP // 2
            for k, ch in enumerate(label):
                if x + k < len(gaps):
                    gaps[x + k] = ch
    picture = [*top_rows, leaves(d.top, d.tp), "".join(gaps).rstrip(), leaves(d.bottom, d.bp), *reversed(bottom_rows)]
    return to_text(d) + "\n\n" + "\n".join(picture)


def to_dot(d: ForestDiagram) -> str:
    """A Graphviz digraph: top forest above, bottom forest below, leaves paired by column."""
    n = d.n
    text = to_text(d).replace("\n", "|")
    lines = ["digraph forest {", f'  label="{text}";', "  labelloc=t;", "  node [shape=point];"]
    for side, forest, pointer in (("t", d.top, d.tp), ("b", d.bottom, d.bp)):
        col = 0
        counter = [0]
        leaf_names = []

        def walk(tree, parent):
            nonlocal col
            if tree == trees.LEAF:
                name = f"{side}l{col}"
                leaf_names.append(name)
                col += 1
            else:
                name = f"{side}c{counter[0]}"
                counter[0] += 1
                lines.append(f'  {name} [shape=circle, label="", width=0.15];')
                for kid in trees.children(tree, n):
                    walk(kid, name)
            if parent is not None:
                edge = f"{parent} -> {name}" if side == "t" else f"{name} -> {parent}"
                lines.append(f"  {edge} [arrowhead=none];")
            return name

        for t, tree in enumerate(forest):
            root = walk(tree, None)
            if t == pointer:
                lines.append(f'  {side}ptr [shape=plaintext, label="{"top" if side == "t" else "bottom"} pointer"];')
                edge = f"{side}ptr -> {root}" if side == "t" else f"{root} -> {side}ptr [dir=back]"
                lines.append(f"  {edge};")
        lines.append("  { rank=same; " + " ".join(leaf_names) + "; }")
    for c in range(d.columns):
        lines.append(f"  tl{c} -> bl{c} [style=dashed, arrowhead=none];")
    lines.append("}")
    return "\n".join(lines)


def diagram_from_rendering(text: str) -> ForestDiagram:
    """Recover the diagram from the output of :func:`to_ascii` or :func:`to_dot`."""
    stripped = text.lstrip()
    if stripped.startswith("digraph"):
        for line in stripped.splitlines():
            line = line.strip()
            if line.startswith("label="):
                return from_text(line[len('label="') : -2].replace("|", "\n"))
        raise ValueError("no diagram label in DOT text")
    return from_text("\n".join(stripped.splitlines()[:3]))
