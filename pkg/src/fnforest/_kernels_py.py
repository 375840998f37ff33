"""Pure-Python implementation of the hot kernels.

A forest is a tuple of trees and a tree is the preorder encoding of an n-ary
tree as a ``bytes`` string: ``1`` for a caret, ``0`` for a leaf.  A diagram is
passed around as the raw tuple ``(top, bottom, tp, bp)``.

The compiled module ``_kernels`` exposes the same functions with the same
semantics; ``fnforest.kernels`` picks one at import time.
"""

LEAF = b"0"

_CARET = 49  # ord("1")

# label codes
L, N, R, I, UNLABELLED = 0, 1, 2, 3, 4

# WEIGHTS[bottom][top]
WEIGHTS = (
    (2, 1, 1, 1),
    (1, 2, 2, 2),
    (1, 2, 2, 0),
    (1, 2, 0, 0),
)


def leaf_start(forest, t):
    """Column of the leftmost leaf of tree ``t``."""
    col = 0
    for tree in forest[:t]:
        col += tree.count(48)
    return col


def split_children(tree, n):
    """Split a nontrivial tree into the n subtrees hanging from its root."""
    out = []
    pos = 1
    for _ in range(n):
        start = pos
        need = 1
        while need:
            if tree[pos] == _CARET:
                need += n - 1
            else:
                need -= 1
            pos += 1
        out.append(tree[start:pos])
    return out


def _locate_leaf(forest, col):
    """Return (tree index, byte offset) of the leaf in column ``col``."""
    for k, tree in enumerate(forest):
        leaves = tree.count(48)
        if col < leaves:
            pos = -1
            for _ in range(col + 1):
                pos = tree.index(48, pos + 1)
            return k, pos
        col -= leaves
    raise IndexError("leaf column outside the window")


def _trim(top, bottom, tp, bp):
    while len(top) > 1 and len(bottom) > 1 and tp and bp and top[0] == LEAF and bottom[0] == LEAF:
        del top[0]
        del bottom[0]
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
    return tuple(top), tuple(bottom), tp, bp


def apply_letter(n, top, bottom, tp, bp, i, sign):
    """Left-multiply a reduced canonical diagram by ``x_i ** sign``.

    Returns the reduced canonical diagram as a raw tuple.
    """
    top = list(top)
    bottom = list(bottom)
    if i == 0:
        tp += sign * (n - 1)
        if tp < 0:
            pad = [LEAF] * (-tp)
            top[:0] = pad
            bottom[:0] = pad
            bp -= tp
            tp = 0
        elif tp >= len(top):
            pad = [LEAF] * (tp - len(top) + 1)
            top.extend(pad)
            bottom.extend(pad)
        return _trim(top, bottom, tp, bp)

    j = tp + i - 1
    if sign > 0:
        if j + n > len(top):
            pad = [LEAF] * (j + n - len(top))
            top.extend(pad)
            bottom.extend(pad)
        merged = b"1" + b"".join(top[j : j + n])
        top[j : j + n] = [merged]
        if merged.count(48) == n:
            # the only caret that can now oppose a bottom caret is the new one
            k, pos = _locate_leaf(bottom, leaf_start(top, j))
            tree = bottom[k]
            if pos and tree[pos - 1] == _CARET and tree[pos : pos + n] == merged[1:]:
                bottom[k] = tree[: pos - 1] + LEAF + tree[pos + n :]
                top[j] = LEAF
    else:
        if j >= len(top):
            pad = [LEAF] * (j - len(top) + 1)
            top.extend(pad)
            bottom.extend(pad)
        tree = top[j]
        if tree != LEAF:
            top[j : j + 1] = split_children(tree, n)
        else:
            k, pos = _locate_leaf(bottom, leaf_start(top, j))
            tree = bottom[k]
            bottom[k] = tree[:pos] + b"1" + LEAF * n + tree[pos + 1 :]
            top[j + 1 : j + 1] = [LEAF] * (n - 1)
    return _trim(top, bottom, tp, bp)


def _scan(n, forest, c0, ncols):
    """Structural data for one forest.

    Returns ``(interior, enc_end, source, starts, spans)``.  For the gap left of
    column ``c``: ``interior[c]`` tells whether it separates two leaves of one
    tree, ``enc_end[c]`` is the last column of the caret enclosing it, and
    ``source[c]`` (marked gaps only) is the leftmost start column of a caret
    that makes the gap necessary, or ``ncols + 1`` when there is none.
    """
    m = n - 1
    none = ncols + 1
    interior = [False] * (ncols + 1)
    enc_end = [-1] * (ncols + 1)
    source = [none] * (ncols + 1)
    starts = []
    spans = []
    col = 0
    for tree in forest:
        starts.append(col)
        if tree == LEAF:
            col += 1
            continue
        first = col
        # frame: [children done, gap columns, (position, start) of caret children]
        stack = []
        for ch in tree:
            if ch == _CARET:
                if stack:
                    fr = stack[-1]
                    fr[2].append((fr[0] + 1, col))
                stack.append([0, [], []])
                continue
            col += 1
            while stack:
                fr = stack[-1]
                fr[0] += 1
                if fr[0] < n:
                    fr[1].append(col)
                    break
                for pos, g in enumerate(fr[1], 1):
                    interior[g] = True
                    enc_end[g] = col - 1
                    if (g - c0) % m == 0:
                        for k, a in fr[2]:
                            if k > pos:
                                source[g] = a
                                break
                stack.pop()
        spans.append((first, col - 1))
    starts.append(col)
    for a, _ in spans:
        g = a - (a - c0) % m
        if g >= 0 and not interior[g] and a < source[g]:
            source[g] = a
    return interior, enc_end, source, starts, spans


def _label(c, interior, source, pstart, o_interior, o_enc_end):
    # a necessity coming from a caret is void when the opposite forest closes
    # the caret enclosing this gap before that caret begins
    necessary = source[c] < len(source) and not (o_interior[c] and source[c] > o_enc_end[c])
    if interior[c]:
        return N if necessary else I
    if c <= pstart:
        return L
    return N if necessary else R


def _analyse(n, top, bottom, tp, bp):
    c0 = leaf_start(top, tp)
    ncols = leaf_start(top, len(top))
    t_int, t_end, t_src, t_starts, t_spans = _scan(n, top, c0, ncols)
    b_int, b_end, b_src, b_starts, b_spans = _scan(n, bottom, c0, ncols)
    lo = min(t_starts[tp + 1], b_starts[bp + 1]) - 1
    hi = max(t_starts[tp], b_starts[bp])
    for a, b in t_spans + b_spans:
        lo = min(lo, b)
        hi = max(hi, a)
    m = n - 1
    out = []
    first = c0 % m or m
    for c in range(first, ncols, m):
        if lo < c <= hi or t_int[c] or b_int[c]:
            out.append(
                (
                    c - c0,
                    _label(c, t_int, t_src, t_starts[tp], b_int, b_end),
                    _label(c, b_int, b_src, b_starts[bp], t_int, t_end),
                )
            )
    return out


def labels(n, top, bottom, tp, bp):
    """Labelled marked gaps as ``[(gap, top_label, bottom_label), ...]``.

    Gaps are numbered from the left edge of the top pointer tree; only gaps in
    the support are listed.
    """
    return _analyse(n, top, bottom, tp, bp)


def length_parts(n, top, bottom, tp, bp):
    """``(l0, l1)``: weight sum over labelled marked gaps, and total caret count."""
    l0 = 0
    for _, t, b in _analyse(n, top, bottom, tp, bp):
        l0 += WEIGHTS[b][t]
    l1 = 0
    for tree in top:
        l1 += tree.count(_CARET)
    for tree in bottom:
        l1 += tree.count(_CARET)
    return l0, l1
