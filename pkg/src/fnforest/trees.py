"""n-ary trees in preorder encoding.

A tree is a ``bytes`` string over ``b"0"`` (leaf) and ``b"1"`` (caret), read in
preorder: a caret is followed by the encodings of its n children.  The trivial
tree is ``LEAF``.  Encodings are hashable, immutable and compare structurally,
which is all the diagram layer needs.
"""

from __future__ import annotations

from collections.abc import Sequence

LEAF = b"0"


class TreeSyntaxError(ValueError):
    pass


def caret(children: Sequence[bytes]) -> bytes:
    return b"1" + b"".join(children)


def leaf_count(tree: bytes) -> int:
    return tree.count(b"0")


def caret_count(tree: bytes) -> int:
    return tree.count(b"1")


def is_trivial(tree: bytes) -> bool:
    return tree == LEAF


def is_valid(tree: bytes, n: int) -> bool:
    need = 1
    for k, ch in enumerate(tree):
        if need == 0 or ch not in (48, 49):
            return False
        need += n - 1 if ch == 49 else -1
    return need == 0 and len(tree) > 0


def children(tree: bytes, n: int) -> list[bytes]:
    """The n subtrees below the root caret of a nontrivial tree."""
    if tree == LEAF:
        raise ValueError("a leaf has no children")
    out = []
    pos = 1
    for _ in range(n):
        start = pos
        need = 1
        while need:
            need += n - 1 if tree[pos] == 49 else -1
            pos += 1
        out.append(tree[start:pos])
    return out


def exposed_carets(tree: bytes, n: int) -> list[int]:
    """Leaf offsets (within the tree) of carets whose n children are all leaves."""
    pattern = b"1" + LEAF * n
    out = []
    pos = tree.find(pattern)
    while pos >= 0:
        out.append(tree.count(b"0", 0, pos))
        pos = tree.find(pattern, pos + 1)
    return out


def replace_leaf(tree: bytes, k: int, sub: bytes) -> bytes:
    """Replace the k-th leaf (0-based, left to right) by ``sub``."""
    pos = -1
    for _ in range(k + 1):
        pos = tree.index(b"0", pos + 1)
    return tree[:pos] + sub + tree[pos + 1 :]


def collapse_caret(tree: bytes, k: int, n: int) -> bytes:
    """Replace the exposed caret whose first leaf is leaf ``k`` by a single leaf."""
    pos = -1
    for _ in range(k + 1):
        pos = tree.index(b"0", pos + 1)
    if pos == 0 or tree[pos - 1] != 49 or tree[pos : pos + n] != LEAF * n:
        raise ValueError("no exposed caret starts at that leaf")
    return tree[: pos - 1] + LEAF + tree[pos + n :]


def format_tree(tree: bytes, n: int) -> str:
    """Text form: ``.`` for a leaf, ``(c1 c2 ... cn)`` for a caret."""
    parts = []
    stack = []  # children still owed by each open caret
    for ch in tree:
        if stack:
            if stack[-1] < n:
                parts.append(" ")
        if ch == 49:
            parts.append("(")
            stack.append(n)
            continue
        parts.append(".")
        while stack:
            stack[-1] -= 1
            if stack[-1]:
                break
            stack.pop()
            parts.append(")")
    return "".join(parts)


def parse_tree(text: str, n: int) -> bytes:
    """Inverse of :func:`format_tree`; whitespace between tokens is free."""
    out = bytearray()
    pos = 0
    size = len(text)

    def skip(p: int) -> int:
        while p < size and text[p].isspace():
            p += 1
        return p

    def node(p: int) -> int:
        p = skip(p)
        if p >= size:
            raise TreeSyntaxError(f"unexpected end of tree at position {p}")
        if text[p] == ".":
            out.append(48)
            return p + 1
        if text[p] != "(":
            raise TreeSyntaxError(f"unexpected {text[p]!r} at position {p}")
        out.append(49)
        p += 1
        for _ in range(n):
            p = node(p)
        p = skip(p)
        if p >= size or text[p] != ")":
            raise TreeSyntaxError(f"caret at position {p} does not have exactly {n} children")
        return p + 1

    pos = skip(node(pos))
    if pos != size:
        raise TreeSyntaxError(f"trailing text at position {pos}")
    return bytes(out)
