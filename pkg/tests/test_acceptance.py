"""The eight acceptance criteria, one test each.

Every test prints a single ``criterion N: PASS|FAIL ...`` line to the terminal.
"""

import pytest

from conftest import load_dead_ends
from fnforest.forest import evaluate_word, from_text
from fnforest.geodesic import raw_length
from fnforest.metric import length, length_parts
from fnforest.oracle import (
    DEFAULT_CAP,
    BallOverflow,
    certify_dead_ends,
    certify_geodesics,
    certify_inverse_symmetry,
    certify_letter_conditions,
    certify_length,
    certify_plmaps,
    certify_psi,
    certify_relations,
    enumerate_ball,
    exact_length,
)

RADII = {2: 8, 3: 7, 4: 5}

WORKED = [
    (3, "x0^-1 x2 x0^-1 x1^2 x0 x1 x0 x1 x0^-1 x1 x0 x1", None, None, 13),
    (4, "x0^-2 x1 x0^2 x2", 4, 2, 6),
    (4, "x0^-1 x1^-1 x0^-2 x1 x3 x0^-1 x1^-1 x0^2 x1 x3^-1 x2^-1 x0^2", 8, 7, 15),
    (5, "x0 x1^-1 x0 x1^-1 x0 x4 x0^-1 x4 x0^-2", 6, 4, 10),
    (3, "x0^-1 x1^2 x0^-2 x1 x0 x1^-2 x0 x2^-1 x0^4 x1^-1 x0 x1 x2 x0^-1 x1 x0 x1^-1 x0^-1 x1^-2", 13, 13, 26),
]

# meets all four structural dead-end conditions but is not a dead end
STRUCTURAL_PROBE = from_text("F(3)\ntop: (. . .) *(. . .) (. . (. . .)) . . (. . .)\nbottom: . . . *. . . . . . . . . . . . .")


def _ball(n, radius):
    while True:
        try:
            return enumerate_ball(n, radius, DEFAULT_CAP)
        except BallOverflow:
            radius -= 1


@pytest.fixture(scope="module")
def balls():
    return {n: _ball(n, r) for n, r in RADII.items()}


@pytest.fixture
def verdict(capsys):
    def report(number, reports, note=""):
        failed = [r for r in reports if not r.passed]
        checked = sum(r.checked for r in reports)
        if failed:
            detail = "; ".join(f"{r.name}: {r.failures} of {r.checked}" for r in failed)
            line = f"criterion {number}: FAIL ({detail})"
        else:
            line = f"criterion {number}: PASS ({checked} checks{note})"
        with capsys.disabled():
            print("\n" + line)
        return failed

    return report


class Outcome:
    """Minimal report for checks done inline."""

    def __init__(self, name):
        self.name, self.checked, self.failures, self.examples = name, 0, 0, []

    @property
    def passed(self):
        return self.failures == 0

    def check(self, ok, message):
        self.checked += 1
        if not ok:
            self.failures += 1
            self.examples.append(message)


def test_criterion_1_worked_examples(verdict):
    rep = Outcome("worked examples")
    for n, word, l0, l1, total in WORKED:
        d = evaluate_word(n, word)
        parts = length_parts(d)
        rep.check(sum(parts) == total and (l0 is None or parts == (l0, l1)), f"F({n}) {word}: {parts}")
    assert not verdict(1, [rep]), rep.examples


def test_criterion_2_oracle_equivalence(verdict, balls):
    reports = [certify_length(b) for b in balls.values()]
    sizes = ", ".join(f"F({n}) r={b.radius} {len(b)} elements" for n, b in balls.items())
    assert not verdict(2, reports, f"; {sizes}"), [r.examples[:3] for r in reports]


def test_criterion_3_length_function_conditions(verdict, balls):
    reports = []
    for b in balls.values():
        reps = certify_letter_conditions(b)
        reports += [reps[k] for k in ("identity", "lipschitz", "descent", "procedure")]
    assert not verdict(3, reports), [r.examples[:3] for r in reports]


def test_criterion_4_letter_effects(verdict, balls):
    reports = []
    for b in balls.values():
        reps = certify_letter_conditions(b)
        reports += [reps[k] for k in ("x0", "bottom_cancel", "bottom_build", "right_space")]
    assert not verdict(4, reports), [r.examples[:3] for r in reports if not r.passed]


def test_criterion_5_geodesics(verdict, balls):
    reports = [certify_geodesics(b) for b in balls.values()]
    assert not verdict(5, reports), [r.examples[:3] for r in reports]


def _length_oracle(n, ball):
    """Exact graph distance while it is within reach of the ball, the formula past that."""
    cache = {}

    def length_of(raw):
        if raw not in cache:
            if raw_length(n, raw) <= 2 * ball.radius:
                cache[raw] = exact_length(n, raw, ball)
            else:
                cache[raw] = raw_length(n, raw)
        return cache[raw]

    return length_of


def test_criterion_6_dead_ends(verdict, balls):
    reports = []
    corpus = load_dead_ends()
    for n, b in balls.items():
        reports += certify_dead_ends(n, (raw for raw, _ in b.interior())).values()
        extra = [d.raw for d, _, _ in corpus if d.n == n]
        if n == STRUCTURAL_PROBE.n:
            extra.append(STRUCTURAL_PROBE.raw)
        reports += certify_dead_ends(n, extra, length_of=_length_oracle(n, b)).values()
    keep = [r for r in reports if "x_i^-1" not in r.name]
    assert not verdict(6, keep), [r.examples[:2] for r in keep if not r.passed]


def test_criterion_7_pl_realization(verdict):
    reports = []
    for n in (2, 3):
        reports += certify_plmaps(enumerate_ball(n, 3)).values()
    reports.append(certify_psi())
    assert not verdict(7, reports), [r.examples[:3] for r in reports]


def test_criterion_8_algebraic_identities(verdict, balls):
    reports = [certify_relations(n) for n in (2, 3, 4, 5)]
    reports += [certify_inverse_symmetry(b) for b in balls.values()]
    assert length(evaluate_word(2, "x0")) == 1
    assert not verdict(8, reports), [r.examples[:3] for r in reports]
