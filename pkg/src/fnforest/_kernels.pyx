# cython: language_level=3, boundscheck=False, wraparound=False, cdivision=False
"""Compiled kernels; same contract as ``fnforest._kernels_py``."""

from libc.stdlib cimport malloc, free

cdef enum:
    CARET = 49
    LEAFCH = 48

LEAF = b"0"

L, N, R, I, UNLABELLED = 0, 1, 2, 3, 4

WEIGHTS = (
    (2, 1, 1, 1),
    (1, 2, 2, 2),
    (1, 2, 2, 0),
    (1, 2, 0, 0),
)

cdef int[4][4] _W = [[2, 1, 1, 1], [1, 2, 2, 2], [1, 2, 2, 0], [1, 2, 0, 0]]


cdef inline int _count(bytes tree, unsigned char ch):
    cdef const unsigned char* s = tree
    cdef Py_ssize_t k, size = len(tree)
    cdef int c = 0
    for k in range(size):
        if s[k] == ch:
            c += 1
    return c


cdef inline int _pmod(int a, int m):
    cdef int r = a % m
    if r < 0:
        r += m
    return r


def leaf_start(tuple forest, int t):
    cdef int col = 0
    cdef int k
    for k in range(t):
        col += _count(<bytes>forest[k], LEAFCH)
    return col


def split_children(bytes tree, int n):
    cdef const unsigned char* s = tree
    cdef Py_ssize_t pos = 1, start
    cdef int need, k
    out = []
    for k in range(n):
        start = pos
        need = 1
        while need:
            if s[pos] == CARET:
                need += n - 1
            else:
                need -= 1
            pos += 1
        out.append(tree[start:pos])
    return out


cdef tuple _locate_leaf(list forest, int col):
    cdef int k, leaves
    cdef Py_ssize_t pos, size
    cdef const unsigned char* s
    cdef bytes tree
    for k in range(len(forest)):
        tree = <bytes>forest[k]
        leaves = _count(tree, LEAFCH)
        if col < leaves:
            s = tree
            size = len(tree)
            for pos in range(size):
                if s[pos] == LEAFCH:
                    if col == 0:
                        return k, pos
                    col -= 1
        col -= leaves
    raise IndexError("leaf column outside the window")


cdef tuple _trim(list top, list bottom, int tp, int bp):
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
        and top[len(top) - 1] == LEAF
        and bottom[len(bottom) - 1] == LEAF
    ):
        top.pop()
        bottom.pop()
    return tuple(top), tuple(bottom), tp, bp


def apply_letter(int n, tuple top_in, tuple bottom_in, int tp, int bp, int i, int sign):
    cdef list top = list(top_in)
    cdef list bottom = list(bottom_in)
    cdef int j, k, col, t
    cdef Py_ssize_t pos
    cdef bytes tree, merged
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
        merged = b"1" + b"".join(top[j:j + n])
        top[j:j + n] = [merged]
        if len(merged) == n + 1:
            col = 0
            for t in range(j):
                col += _count(<bytes>top[t], LEAFCH)
            k, pos = _locate_leaf(bottom, col)
            tree = <bytes>bottom[k]
            if pos and tree[pos - 1] == CARET and tree[pos:pos + n] == merged[1:]:
                bottom[k] = tree[:pos - 1] + LEAF + tree[pos + n:]
                top[j] = LEAF
    else:
        if j >= len(top):
            pad = [LEAF] * (j - len(top) + 1)
            top.extend(pad)
            bottom.extend(pad)
        tree = <bytes>top[j]
        if tree != LEAF:
            top[j:j + 1] = split_children(tree, n)
        else:
            col = 0
            for t in range(j):
                col += _count(<bytes>top[t], LEAFCH)
            k, pos = _locate_leaf(bottom, col)
            tree = <bytes>bottom[k]
            bottom[k] = tree[:pos] + b"1" + LEAF * n + tree[pos + 1:]
            top[j + 1:j + 1] = [LEAF] * (n - 1)
    return _trim(top, bottom, tp, bp)


cdef struct Side:
    char* interior
    int* enc_end
    int* source
    int pstart
    int pend


cdef int _scan(int n, tuple forest, int p, int c0, int ncols, Side* out,
               int* lo, int* hi) except -1:
    cdef int m = n - 1
    cdef int none = ncols + 1
    cdef int cap = 1, col = 0, first, depth, t, g, a, pos, q, base
    cdef Py_ssize_t k, size
    cdef const unsigned char* s
    cdef bytes tree
    cdef int ntrees = len(forest)
    for t in range(ntrees):
        cap += _count(<bytes>forest[t], CARET)
    cdef int* done = <int*>malloc(cap * sizeof(int))
    cdef int* nkids = <int*>malloc(cap * sizeof(int))
    cdef int* gaps = <int*>malloc(cap * n * sizeof(int))
    cdef int* kpos = <int*>malloc(cap * n * sizeof(int))
    cdef int* kstart = <int*>malloc(cap * n * sizeof(int))
    cdef int* tstart = <int*>malloc((ntrees + 1) * sizeof(int))
    cdef char* nontrivial = <char*>malloc((ntrees + 1) * sizeof(char))
    if not (done and nkids and gaps and kpos and kstart and tstart and nontrivial):
        raise MemoryError()
    for g in range(ncols + 1):
        out.interior[g] = 0
        out.enc_end[g] = -1
        out.source[g] = none
    try:
        for t in range(ntrees):
            tstart[t] = col
            tree = <bytes>forest[t]
            s = tree
            size = len(tree)
            if size == 1:
                nontrivial[t] = 0
                col += 1
                continue
            nontrivial[t] = 1
            first = col
            depth = 0
            for k in range(size):
                if s[k] == CARET:
                    if depth:
                        q = depth - 1
                        kpos[q * n + nkids[q]] = done[q] + 1
                        kstart[q * n + nkids[q]] = col
                        nkids[q] += 1
                    done[depth] = 0
                    nkids[depth] = 0
                    depth += 1
                    continue
                col += 1
                while depth:
                    q = depth - 1
                    done[q] += 1
                    if done[q] < n:
                        gaps[q * n + done[q] - 1] = col
                        break
                    base = q * n
                    for pos in range(1, n):
                        g = gaps[base + pos - 1]
                        out.interior[g] = 1
                        out.enc_end[g] = col - 1
                        if _pmod(g - c0, m) == 0:
                            for a in range(nkids[q]):
                                if kpos[base + a] > pos:
                                    out.source[g] = kstart[base + a]
                                    break
                    depth -= 1
            if col - 1 < lo[0]:
                lo[0] = col - 1
            if first > hi[0]:
                hi[0] = first
        tstart[ntrees] = col
        for t in range(ntrees):
            if nontrivial[t]:
                a = tstart[t]
                g = a - _pmod(a - c0, m)
                if g >= 0 and not out.interior[g] and a < out.source[g]:
                    out.source[g] = a
        out.pstart = tstart[p]
        out.pend = tstart[p + 1] - 1
    finally:
        free(done)
        free(nkids)
        free(gaps)
        free(kpos)
        free(kstart)
        free(tstart)
        free(nontrivial)
    return 0


cdef inline int _label(int c, Side* me, Side* other, int none):
    cdef int src = me.source[c]
    cdef bint necessary = src < none and not (other.interior[c] and src > other.enc_end[c])
    if me.interior[c]:
        return 1 if necessary else 3
    if c <= me.pstart:
        return 0
    return 1 if necessary else 2


cdef list _analyse(int n, tuple top, tuple bottom, int tp, int bp, bint want_list, int* l0):
    cdef int c0 = leaf_start(top, tp)
    cdef int ncols = leaf_start(top, len(top))
    cdef int m = n - 1
    cdef int lo = ncols + 1, hi = -1, c, first, tl, bl
    cdef Side ts, bs
    cdef list result = [] if want_list else None
    cdef char* buf_i = <char*>malloc(2 * (ncols + 1) * sizeof(char))
    cdef int* buf = <int*>malloc(4 * (ncols + 1) * sizeof(int))
    if not (buf_i and buf):
        raise MemoryError()
    try:
        ts.interior = buf_i
        bs.interior = buf_i + (ncols + 1)
        ts.enc_end = buf
        ts.source = buf + (ncols + 1)
        bs.enc_end = buf + 2 * (ncols + 1)
        bs.source = buf + 3 * (ncols + 1)
        _scan(n, top, tp, c0, ncols, &ts, &lo, &hi)
        _scan(n, bottom, bp, c0, ncols, &bs, &lo, &hi)
        if ts.pend < lo:
            lo = ts.pend
        if bs.pend < lo:
            lo = bs.pend
        if ts.pstart > hi:
            hi = ts.pstart
        if bs.pstart > hi:
            hi = bs.pstart
        first = c0 % m
        if first == 0:
            first = m
        l0[0] = 0
        c = first
        while c < ncols:
            if (lo < c and c <= hi) or ts.interior[c] or bs.interior[c]:
                tl = _label(c, &ts, &bs, ncols + 1)
                bl = _label(c, &bs, &ts, ncols + 1)
                l0[0] += _W[bl][tl]
                if want_list:
                    result.append((c - c0, tl, bl))
            c += m
    finally:
        free(buf_i)
        free(buf)
    return result


def labels(int n, tuple top, tuple bottom, int tp, int bp):
    cdef int l0
    return _analyse(n, top, bottom, tp, bp, True, &l0)


def length_parts(int n, tuple top, tuple bottom, int tp, int bp):
    cdef int l0, l1 = 0, t
    _analyse(n, top, bottom, tp, bp, False, &l0)
    for t in range(len(top)):
        l1 += _count(<bytes>top[t], CARET)
    for t in range(len(bottom)):
        l1 += _count(<bytes>bottom[t], CARET)
    return l0, l1
