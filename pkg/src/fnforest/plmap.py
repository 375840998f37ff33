"""Exact piecewise-linear maps of the real line with n-adic breakpoints.

A diagram becomes a map of the line.  Top tree ``t`` covers ``[t - tp, t - tp + 1]``
in the domain and bottom tree ``b`` covers ``[b - bp, b - bp + 1]`` in the range.
Each leaf interval maps linearly onto the leaf interval in the same column.

Maps compose as a right action: ``diagram_to_plmap(a * b)`` equals
``compose(diagram_to_plmap(a), diagram_to_plmap(b))``, where ``compose(f, g)``
applies ``f`` first and ``g`` second.
"""

from __future__ import annotations

import bisect
from dataclasses import dataclass

from .forest import ForestDiagram
from .nadic import NAdicRational


@dataclass(frozen=True)
class Piece:
    exponent: int
    intercept: NAdicRational

    def __call__(self, x: NAdicRational) -> NAdicRational:
        return x.scale(self.exponent) + self.intercept


@dataclass(frozen=True)
class PLMap:
    """``pieces[j]`` applies on ``[breakpoints[j-1], breakpoints[j])``; the outer pieces are unbounded."""

    n: int
    breakpoints: tuple[NAdicRational, ...]
    pieces: tuple[Piece, ...]

    def __post_init__(self):
        if len(self.pieces) != len(self.breakpoints) + 1:
            raise ValueError("need exactly one more piece than breakpoints")

    def __call__(self, x) -> NAdicRational:
        return evaluate(self, x)

    def __str__(self) -> str:
        return "\n".join(dump(self))


def _normalise(n: int, points: list, pieces: list) -> PLMap:
    """Drop breakpoints between identical pieces."""
    bps: list[NAdicRational] = []
    out = [pieces[0]]
    for x, piece in zip(points, pieces[1:]):
        if piece == out[-1]:
            continue
        bps.append(x)
        out.append(piece)
    return PLMap(n, tuple(bps), tuple(out))


def identity_map(n: int) -> PLMap:
    return PLMap(n, (), (Piece(0, NAdicRational(n, 0)),))


def _leaf_intervals(n: int, forest, pointer: int) -> list[tuple[NAdicRational, int]]:
    """``(left end, depth)`` for every leaf; the interval has width ``n**-depth``."""
    out = []
    for t, tree in enumerate(forest):
        left = NAdicRational(n, t - pointer)
        depth = 0
        # pending[d] = number of unvisited children left at depth d
        pending = []
        for ch in tree:
            if ch == 49:
                pending.append(n)
                depth += 1
                continue
            out.append((left, depth))
            left = left + NAdicRational(n, 1, depth)
            while pending:
                pending[-1] -= 1
                if pending[-1]:
                    break
                pending.pop()
                depth -= 1
    return out


def diagram_to_plmap(d: ForestDiagram) -> PLMap:
    n = d.n
    dom = _leaf_intervals(n, d.top, d.tp)
    rng = _leaf_intervals(n, d.bottom, d.bp)
    points = []
    pieces = [Piece(0, rng[0][0] - dom[0][0])]
    for (a, da), (c, dc) in zip(dom, rng):
        e = da - dc
        points.append(a)
        pieces.append(Piece(e, c - a.scale(e)))
    last_a, last_da = dom[-1]
    last_c, last_dc = rng[-1]
    end_dom = last_a + NAdicRational(n, 1, last_da)
    end_rng = last_c + NAdicRational(n, 1, last_dc)
    points.append(end_dom)
    pieces.append(Piece(0, end_rng - end_dom))
    f = _normalise(n, points, pieces)
    check_membership(f)
    return f


def _coerce(f: PLMap, x) -> NAdicRational:
    if isinstance(x, int):
        return NAdicRational(f.n, x)
    return x


def _piece_at(f: PLMap, x: NAdicRational) -> Piece:
    return f.pieces[bisect.bisect_right(f.breakpoints, x)]


def evaluate(f: PLMap, x) -> NAdicRational:
    x = _coerce(f, x)
    return _piece_at(f, x)(x)


def compose(f: PLMap, g: PLMap) -> PLMap:
    """The map ``x -> g(f(x))``: ``f`` first, then ``g``."""
    if f.n != g.n:
        raise ValueError("maps over different bases")
    finv = invert_map(f)
    points = sorted(set(f.breakpoints) | {evaluate(finv, y) for y in g.breakpoints})
    first_f, first_g = f.pieces[0], g.pieces[0]
    pieces = [Piece(first_f.exponent + first_g.exponent, first_f.intercept.scale(first_g.exponent) + first_g.intercept)]
    for x in points:
        pf = _piece_at(f, x)
        pg = _piece_at(g, pf(x))
        pieces.append(Piece(pf.exponent + pg.exponent, pf.intercept.scale(pg.exponent) + pg.intercept))
    return _normalise(f.n, points, pieces)


def invert_map(f: PLMap) -> PLMap:
    points = [piece(x) for x, piece in zip(f.breakpoints, f.pieces[1:])]
    pieces = [Piece(-p.exponent, -p.intercept.scale(-p.exponent)) for p in f.pieces]
    return PLMap(f.n, tuple(points), tuple(pieces))


# -- membership ----------------------------------------------------------------


class MembershipError(ValueError):
    pass


def membership_failures(f: PLMap) -> list[str]:
    """Reasons ``f`` is not an element of the group; empty when it is."""
    n = f.n
    out = []
    for x in f.breakpoints:
        if not isinstance(x, NAdicRational) or x.n != n:
            out.append(f"breakpoint {x} is not {n}-adic")
    if list(f.breakpoints) != sorted(set(f.breakpoints)):
        out.append("breakpoints are not strictly increasing")
    for p in f.pieces:
        if not isinstance(p.exponent, int):
            out.append(f"slope exponent {p.exponent!r} is not an integer")
    for x, left, right in zip(f.breakpoints, f.pieces, f.pieces[1:]):
        if left(x) != right(x):
            out.append(f"discontinuous at {x}")
    for side, p in (("left", f.pieces[0]), ("right", f.pieces[-1])):
        if p.exponent != 0:
            out.append(f"{side} end has slope n^{p.exponent}, not 1")
        if not p.intercept.is_integer() or p.intercept.k % (n - 1):
            out.append(f"{side} end translates by {p.intercept}, not a multiple of {n - 1}")
    return out


def check_membership(f: PLMap) -> None:
    failures = membership_failures(f)
    if failures:
        raise MembershipError("; ".join(failures))


# -- the breakpoint values of the conjugating homeomorphism -------------------------


def psi_breakpoint(n: int, k: int) -> NAdicRational:
    """Image of the integer ``k`` under the homeomorphism from the line onto ``[0, 1]``."""
    if n < 2:
        raise ValueError(f"invalid arity {n}")
    m = n - 1
    if k < 0:
        q = (-k) // m
        return NAdicRational(n, 1, q + 1) - NAdicRational(n, (-k) % m, q + 2)
    q = (k - n + 2) // m
    return NAdicRational(n, 1) - NAdicRational(n, 1, q + 1) + NAdicRational(n, (k - n + 2) % m, q + 2)


# -- text dump ---------------------------------------------------------------------


def dump(f: PLMap) -> list[str]:
    ends = ["-inf", *map(str, f.breakpoints), "+inf"]
    return [
        f"[{a}, {b}) slope=n^{p.exponent} intercept={p.intercept.k}/n^{p.intercept.p}"
        for a, b, p in zip(ends, ends[1:], f.pieces)
    ]
