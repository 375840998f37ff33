"""Brute-force certification against the Cayley graph.

Balls are explored breadth first from the identity, keyed by the reduced
diagram itself (its text form is a function of it, so the two keys are
interchangeable; hashing the tuple is cheaper).  Every check returns a
:class:`Report`; nothing here raises on a failed assertion.

Distances are exact only strictly inside a ball, so the length checks use
elements at distance below the radius.
"""

from __future__ import annotations

import json
import random
from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass, field

from . import geodesic, kernels
from .forest import ForestDiagram, canonical_key, from_text, multiply, trim
from .geodesic import Action, action_kind, raw_length
from .plmap import compose, diagram_to_plmap, psi_breakpoint
from .words import Letter, format_word

DEFAULT_CAP = 2_000_000

IDENTITY_RAW = ((kernels.LEAF,), (kernels.LEAF,), 0, 0)


class BallOverflow(RuntimeError):
    def __init__(self, n: int, radius: int, cap: int):
        super().__init__(f"ball of radius {radius} in F({n}) exceeds {cap} elements")
        self.n = n
        self.radius = radius
        self.cap = cap


def _letters(n: int) -> list[tuple[int, int]]:
    return [(i, s) for i in range(n) for s in (1, -1)]


@dataclass
class Ball:
    n: int
    radius: int
    distance: dict  # raw tuple -> distance

    def __len__(self) -> int:
        return len(self.distance)

    def __contains__(self, d: ForestDiagram) -> bool:
        return d.raw in self.distance

    def diagram(self, raw) -> ForestDiagram:
        return ForestDiagram(self.n, *raw)

    def items(self) -> Iterator[tuple[ForestDiagram, int]]:
        n = self.n
        for raw, dist in self.distance.items():
            yield ForestDiagram(n, *raw), dist

    def interior(self) -> Iterator[tuple[tuple, int]]:
        """Raw diagrams strictly inside the ball, with their distances."""
        r = self.radius
        return ((raw, k) for raw, k in self.distance.items() if k < r)

    def sphere_sizes(self) -> list[int]:
        counts = Counter(self.distance.values())
        return [counts[k] for k in range(self.radius + 1)]

    def keyed(self) -> dict[bytes, tuple[ForestDiagram, int]]:
        return {canonical_key(d): (d, k) for d, k in self.items()}

    # on-disk cache: "<distance> <key>" per line, newlines in the key shown as "|"

    def dump_lines(self) -> Iterator[str]:
        for d, k in sorted(self.items(), key=lambda item: (item[1], canonical_key(item[0]))):
            yield f"{k} {canonical_key(d).decode('ascii').replace(chr(10), '|')}"

    def save(self, path) -> None:
        with open(path, "w", encoding="ascii") as fh:
            fh.write(f"# F({self.n}) radius {self.radius}\n")
            for line in self.dump_lines():
                fh.write(line + "\n")

    @classmethod
    def load(cls, path) -> Ball:
        distance = {}
        n = radius = None
        with open(path, encoding="ascii") as fh:
            header = fh.readline().split()
            n = int(header[1][2:-1])
            radius = int(header[3])
            for line in fh:
                k, key = line.rstrip("\n").split(" ", 1)
                d = from_text(key.replace("|", "\n"))
                distance[d.raw] = int(k)
        return cls(n, radius, distance)


def enumerate_ball(n: int, radius: int, cap: int = DEFAULT_CAP) -> Ball:
    """All elements within ``radius`` of the identity, with exact distances."""
    if n < 2:
        raise ValueError(f"invalid arity {n}")
    if radius < 0:
        raise ValueError("radius must be non-negative")
    apply = kernels.apply_letter
    letters = _letters(n)
    distance = {IDENTITY_RAW: 0}
    frontier = [IDENTITY_RAW]
    for k in range(1, radius + 1):
        nxt = []
        for x in frontier:
            for i, s in letters:
                y = apply(n, *x, i, s)
                if y not in distance:
                    distance[y] = k
                    nxt.append(y)
        if len(distance) > cap:
            raise BallOverflow(n, radius, cap)
        frontier = nxt
    return Ball(n, radius, distance)


# -- reports -----------------------------------------------------------------------


@dataclass
class Report:
    name: str
    checked: int = 0
    failures: int = 0
    examples: list[str] = field(default_factory=list)
    info: dict = field(default_factory=dict)
    max_examples: int = 5

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def fail(self, message: str) -> None:
        self.failures += 1
        if len(self.examples) < self.max_examples:
            self.examples.append(message)

    def merge(self, other: Report) -> None:
        self.checked += other.checked
        self.failures += other.failures
        room = self.max_examples - len(self.examples)
        self.examples.extend(other.examples[: max(room, 0)])

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "checked": self.checked,
            "failures": self.failures,
            "passed": self.passed,
            "examples": self.examples,
            **({"info": self.info} if self.info else {}),
        }

    def summary(self) -> str:
        status = "ok" if self.passed else "FAIL"
        return f"{self.name}: {self.checked} checked, {self.failures} mismatches [{status}]"


def _show(n: int, raw) -> str:
    return str(ForestDiagram(n, *raw))


def certify_length(ball: Ball) -> Report:
    """Formula length equals graph distance on the interior of the ball."""
    n = ball.n
    rep = Report(f"length F({n}) r={ball.radius}")
    for raw, k in ball.interior():
        rep.checked += 1
        got = raw_length(n, raw)
        if got != k:
            rep.fail(f"formula {got} vs distance {k}:\n{_show(n, raw)}")
    return rep


def certify_letter_conditions(ball: Ball) -> dict[str, Report]:
    """The length-function conditions and the per-letter statements they rest on.

    Lengths come from the formula throughout; :func:`certify_length` ties them
    to the graph.
    """
    n, r = ball.n, ball.radius
    apply = kernels.apply_letter
    reps = {
        name: Report(f"{title} F({n}) r={r}")
        for name, title in (
            ("identity", "length of identity is zero"),
            ("lipschitz", "letters change length by at most one"),
            ("descent", "some letter shortens every non-identity element"),
            ("procedure", "the descent procedure picks a shortening letter"),
            ("x0", "x0 and its inverse change length by exactly one"),
            ("bottom_cancel", "cancelling a bottom caret shortens"),
            ("bottom_build", "building a bottom caret lengthens"),
            ("right_space", "caret-building x_i shortens iff the right space is [R;R]"),
        )
    }
    reps["identity"].checked = 1
    if raw_length(n, IDENTITY_RAW) != 0:
        reps["identity"].fail("identity has nonzero length")
    for raw, _ in ball.interior():
        length = raw_length(n, raw)
        rs = geodesic._right_space(n, raw)
        rr = geodesic._label_at(n, raw, rs) == (kernels.R, kernels.R)
        shorter = False
        for i, s in _letters(n):
            after = apply(n, *raw, i, s)
            new = raw_length(n, after)
            delta = new - length
            reps["lipschitz"].checked += 1
            if abs(delta) > 1:
                reps["lipschitz"].fail(f"x{i}^{s} changes length by {delta}:\n{_show(n, raw)}")
            shorter = shorter or delta < 0
            if i == 0:
                reps["x0"].checked += 1
                if abs(delta) != 1:
                    reps["x0"].fail(f"x0^{s} changes length by {delta}:\n{_show(n, raw)}")
                continue
            kind = action_kind(n, raw, i, s)
            if kind is Action.CARET_REMOVED_BOTTOM:
                reps["bottom_cancel"].checked += 1
                if delta != -1:
                    reps["bottom_cancel"].fail(f"x{i} gives {delta:+d}:\n{_show(n, raw)}")
            elif kind is Action.CARET_BUILT_BOTTOM:
                reps["bottom_build"].checked += 1
                if delta != 1:
                    reps["bottom_build"].fail(f"x{i}^-1 gives {delta:+d}:\n{_show(n, raw)}")
            elif kind is Action.CARET_BUILT_TOP:
                reps["right_space"].checked += 1
                if (delta == -1) != rr:
                    reps["right_space"].fail(
                        f"x{i} gives {delta:+d} with right space {'' if rr else 'not '}[R;R]:\n{_show(n, raw)}"
                    )
        if length:
            reps["descent"].checked += 1
            if not shorter:
                reps["descent"].fail(f"no shortening letter:\n{_show(n, raw)}")
            reps["procedure"].checked += 1
            try:
                i, s, _, new = geodesic._descent(n, raw, length)
                if new != length - 1:
                    reps["procedure"].fail(f"procedure letter x{i}^{s} gives {new - length:+d}")
            except AssertionError as exc:
                reps["procedure"].fail(str(exc))
    return reps


def certify_geodesics(ball: Ball) -> Report:
    n = ball.n
    rep = Report(f"geodesics F({n}) r={ball.radius}")
    apply = kernels.apply_letter
    for raw, k in ball.interior():
        rep.checked += 1
        try:
            word = geodesic.raw_geodesic(n, raw)
        except AssertionError as exc:
            rep.fail(f"{exc}:\n{_show(n, raw)}")
            continue
        x = IDENTITY_RAW
        for i, s in reversed(word):
            x = apply(n, *x, i, s)
        if len(word) != k or x != raw:
            rep.fail(f"word of length {len(word)} for distance {k}:\n{_show(n, raw)}")
    return rep


def certify_geodesic_pattern(ball: Ball) -> Report:
    """Replaying a synthesized geodesic, each x_i builds a top caret and each x_i^-1 a bottom caret."""
    n = ball.n
    rep = Report(f"geodesic caret pattern F({n}) r={ball.radius}")
    apply = kernels.apply_letter
    for raw, _ in ball.interior():
        x = IDENTITY_RAW
        for i, s in reversed(geodesic.raw_geodesic(n, raw)):
            if i:
                rep.checked += 1
                kind = action_kind(n, x, i, s)
                want = Action.CARET_BUILT_TOP if s > 0 else Action.CARET_BUILT_BOTTOM
                if kind is not want:
                    rep.fail(f"x{i}^{s} does '{kind}' while replaying the geodesic of\n{_show(n, raw)}")
            x = apply(n, *x, i, s)
    return rep


def certify_inverse_symmetry(ball: Ball) -> Report:
    n = ball.n
    rep = Report(f"inverse symmetry F({n}) r={ball.radius}")
    for (top, bottom, tp, bp), k in ball.distance.items():
        rep.checked += 1
        inv = (bottom, top, bp, tp)
        if ball.distance.get(inv) != k or raw_length(n, inv) != raw_length(n, (top, bottom, tp, bp)):
            rep.fail(f"inverse differs:\n{_show(n, (top, bottom, tp, bp))}")
    return rep


def certify_relations(n: int) -> Report:
    """``x_j x_i == x_i x0^-1 x_j x0`` for ``0 <= i < j <= n-1``."""
    from .forest import evaluate_word

    rep = Report(f"relations F({n})")
    for i in range(n - 1):
        for j in range(i + 1, n):
            rep.checked += 1
            lhs = evaluate_word(n, (Letter(j), Letter(i)))
            rhs = evaluate_word(n, (Letter(i), Letter(0, -1), Letter(j), Letter(0)))
            if lhs != rhs:
                rep.fail(f"x{j} x{i} != x{i} x0^-1 x{j} x0")
    return rep


def certify_plmaps(ball: Ball) -> dict[str, Report]:
    """Membership of every converted map and the homomorphism property on all pairs."""
    n = ball.n
    member = Report(f"PL membership F({n}) r={ball.radius}")
    hom = Report(f"PL homomorphism F({n}) r={ball.radius}")
    elements = [d for d, _ in ball.items()]
    maps = {}
    for d in elements:
        member.checked += 1
        try:
            maps[d] = diagram_to_plmap(d)
        except ValueError as exc:
            member.fail(f"{exc}:\n{d}")
    for a in elements:
        for b in elements:
            if a not in maps or b not in maps:
                continue
            hom.checked += 1
            ab = multiply(a, b)
            try:
                phi_ab = diagram_to_plmap(ab)
            except ValueError as exc:
                hom.fail(f"product not a group element: {exc}")
                continue
            if phi_ab != compose(maps[a], maps[b]):
                hom.fail(f"map of product differs for\n{a}\nand\n{b}")
    return {"membership": member, "homomorphism": hom}


def certify_psi(ns: Iterable[int] = (2, 3, 4, 5), ks: range = range(-12, 13)) -> Report:
    from fractions import Fraction

    rep = Report("psi breakpoints")
    anchors = {(2, 1): Fraction(3, 4), (3, 0): Fraction(1, 3), (3, 1): Fraction(2, 3), (2, -1): Fraction(1, 4)}
    for (n, k), want in anchors.items():
        rep.checked += 1
        got = psi_breakpoint(n, k).to_fraction()
        if got != want:
            rep.fail(f"psi_{n}({k}) = {got}, expected {want}")
    for n in ns:
        values = [psi_breakpoint(n, k).to_fraction() for k in ks]
        for k, v, w in zip(ks, values, values[1:]):
            rep.checked += 1
            if not (0 < v < w < 1):
                rep.fail(f"psi_{n} not increasing inside (0, 1) at {k}: {v}, {w}")
    return rep


# -- dead ends ----------------------------------------------------------------------


def escape_words_positive(n: int) -> list[tuple[tuple[int, int], ...]]:
    return [((i, 1), (j, 1), (0, 1)) for i in range(1, n) for j in range(1, n)]


def escape_words_inverse(n: int) -> list[tuple[tuple[int, int], ...]]:
    return [((i, -1), (j, -1), (0, 1)) for i in range(1, n) for j in range(1, n)]


def _left_apply(n: int, word, raw):
    for i, s in reversed(word):
        raw = kernels.apply_letter(n, *raw, i, s)
    return raw


def certify_dead_ends(n: int, elements: Iterable, length_of=None) -> dict[str, Report]:
    """Dead-end claims on a collection of raw diagrams.

    ``length_of`` maps a raw diagram to its true length and defaults to the
    formula.  Reports: brute/structural agreement, depth two, the two escape
    word families, and the absence of escapes of length two or less.
    """
    length_of = length_of or (lambda raw: raw_length(n, raw))
    reps = {
        "agreement": Report(f"dead-end tests agree F({n})"),
        "depth": Report(f"dead ends have depth two F({n})"),
        "escape_positive": Report(f"x_i x_j x0 lengthens every dead end by one F({n})"),
        "escape_inverse": Report(f"x_i^-1 x_j^-1 x0 lengthens every dead end by one F({n})"),
        "short_words": Report(f"no word of length <= 2 lengthens a dead end F({n})"),
    }
    dead = 0
    for raw in elements:
        if raw == IDENTITY_RAW:
            continue
        length = length_of(raw)
        brute = all(length_of(kernels.apply_letter(n, *raw, i, s)) <= length for i, s in _letters(n))
        structural = geodesic.raw_is_dead_end_structural(n, raw)
        reps["agreement"].checked += 1
        if brute != structural:
            reps["agreement"].fail(f"brute {brute}, structural {structural}:\n{_show(n, raw)}")
        if not brute:
            continue
        dead += 1
        reps["depth"].checked += 1
        m = geodesic.raw_escape_length(n, raw, 3)
        if m != 3:
            reps["depth"].fail(f"shortest escape has length {m}:\n{_show(n, raw)}")
        for key, words in (
            ("escape_positive", escape_words_positive(n)),
            ("escape_inverse", escape_words_inverse(n)),
        ):
            for w in words:
                reps[key].checked += 1
                got = length_of(_left_apply(n, w, raw))
                if got != length + 1:
                    text = format_word(tuple(Letter(i, s) for i, s in w))
                    reps[key].fail(f"{text} changes length by {got - length:+d}:\n{_show(n, raw)}")
        for a in _letters(n):
            x = kernels.apply_letter(n, *raw, *a)
            for b in _letters(n):
                reps["short_words"].checked += 1
                y = kernels.apply_letter(n, *x, *b)
                if length_of(y) > length:
                    reps["short_words"].fail(f"a two-letter word escapes:\n{_show(n, raw)}")
    for rep in reps.values():
        rep.info["dead_ends"] = dead
    return reps


def dead_end_census(ball: Ball) -> dict[str, Report]:
    return certify_dead_ends(ball.n, (raw for raw, _ in ball.interior()))


def random_positive_diagram(n: int, rng: random.Random, trees: int = 6, depth: int = 2):
    """A random diagram with trivial bottom forest, biased towards shapes that contain dead ends."""

    def tree(d, p):
        if d == 0 or rng.random() < p:
            return kernels.LEAF
        return b"1" + b"".join(tree(d - 1, p) for _ in range(n))

    def nontrivial(d):
        return b"1" + b"".join(tree(d - 1, 0.45) for _ in range(n))

    left = [tree(depth, 0.45) for _ in range(rng.randint(0, trees // 2))]
    current = [nontrivial(rng.randint(1, depth)) for _ in range(n - 1)]
    right = [tree(depth, 0.7) for _ in range(rng.randint(0, 2 * n))] + [nontrivial(rng.randint(1, depth))]
    top = tuple(left + current + right)
    tp = len(left)
    cols = sum(t.count(48) for t in top)
    bp = rng.choice([b for b in range(cols) if (b - tp) % (n - 1) == 0])
    return trim(ForestDiagram(n, top, (kernels.LEAF,) * cols, tp, bp)).raw


def search_dead_ends(n: int, samples: int, seed: int = 0, max_length: int | None = None) -> list:
    """Distinct dead ends (by the formula) among random positive diagrams, shortest first."""
    rng = random.Random(seed)
    found = {}
    for _ in range(samples):
        raw = random_positive_diagram(n, rng)
        length = raw_length(n, raw)
        if max_length is not None and length > max_length:
            continue
        if raw not in found and geodesic.raw_is_dead_end(n, raw, length):
            found[raw] = length
    return sorted(found, key=lambda raw: (found[raw], canonical_key(ForestDiagram(n, *raw))))


# -- exact distances beyond the ball ----------------------------------------------------


def exact_length(n: int, raw, ball: Ball, reach: int | None = None) -> int | None:
    """Graph distance of ``raw`` from the identity by meeting in the middle.

    Explores ``reach`` steps out from ``raw`` (default: the ball radius) and
    joins with the ball around the identity, so any distance up to
    ``ball.radius + reach`` is exact.  Returns None when farther.
    """
    if ball.n != n:
        raise ValueError("ball over a different group")
    reach = ball.radius if reach is None else reach
    best = ball.distance.get(raw)
    seen = {raw}
    frontier = [raw]
    for k in range(1, reach + 1):
        nxt = []
        for x in frontier:
            for i, s in _letters(n):
                y = kernels.apply_letter(n, *x, i, s)
                if y in seen:
                    continue
                seen.add(y)
                nxt.append(y)
                d = ball.distance.get(y)
                if d is not None and (best is None or d + k < best):
                    best = d + k
        frontier = nxt
        if best is not None and best <= k:
            break
    return best


# -- full run ---------------------------------------------------------------------------


def certify(n: int, radius: int, cap: int = DEFAULT_CAP, plmap_radius: int | None = None) -> dict:
    """Every ball-level check for one group, as a JSON-ready dict."""
    ball = enumerate_ball(n, radius, cap)
    reports = [certify_length(ball)]
    reports += certify_letter_conditions(ball).values()
    reports.append(certify_geodesics(ball))
    reports.append(certify_inverse_symmetry(ball))
    reports.append(certify_relations(n))
    reports += dead_end_census(ball).values()
    if plmap_radius is not None:
        reports += certify_plmaps(enumerate_ball(n, plmap_radius, cap)).values()
    return {
        "n": n,
        "radius": radius,
        "elements": len(ball),
        "sphere_sizes": ball.sphere_sizes(),
        "mismatches": sum(r.failures for r in reports),
        "reports": [r.to_json() for r in reports],
    }


def report_json(report: dict) -> str:
    return json.dumps(report, indent=2, sort_keys=False)


__all__ = [
    "Ball",
    "BallOverflow",
    "DEFAULT_CAP",
    "Report",
    "certify",
    "certify_dead_ends",
    "certify_geodesic_pattern",
    "certify_geodesics",
    "certify_inverse_symmetry",
    "certify_length",
    "certify_letter_conditions",
    "certify_plmaps",
    "certify_psi",
    "certify_relations",
    "dead_end_census",
    "enumerate_ball",
    "exact_length",
    "report_json",
    "search_dead_ends",
]
