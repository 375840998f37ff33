import json

import pytest

from conftest import ball, load_dead_ends
from fnforest.forest import ForestDiagram, evaluate_word, identity_diagram
from fnforest.metric import length
from fnforest.oracle import (
    Ball,
    BallOverflow,
    Report,
    certify,
    certify_dead_ends,
    certify_length,
    certify_psi,
    certify_relations,
    enumerate_ball,
    exact_length,
    search_dead_ends,
)


def test_radius_zero():
    b = enumerate_ball(3, 0)
    assert len(b) == 1 and identity_diagram(3) in b
    assert b.sphere_sizes() == [1]


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_first_sphere(n):
    assert enumerate_ball(n, 1).sphere_sizes() == [1, 2 * n]


def test_known_sphere_sizes():
    assert ball(2, 6).sphere_sizes() == [1, 4, 12, 36, 108, 314, 906]
    assert ball(3, 5).sphere_sizes() == [1, 6, 30, 144, 688, 3196]


def test_enumeration_backend_independent(backend):
    assert enumerate_ball(3, 4).distance == ball(3, 4).distance


def test_bad_arguments():
    with pytest.raises(ValueError):
        enumerate_ball(1, 2)
    with pytest.raises(ValueError):
        enumerate_ball(2, -1)


def test_cap():
    with pytest.raises(BallOverflow) as info:
        enumerate_ball(3, 6, cap=1000)
    assert info.value.cap == 1000


def test_long_worked_word_is_at_distance_thirteen():
    b = ball(3, 7)
    d = evaluate_word(3, "x0^-1 x2 x0^-1 x1^2 x0 x1 x0 x1 x0^-1 x1 x0 x1")
    assert exact_length(3, d.raw, b) == length(d) == 13


def test_exact_length_beyond_reach():
    b = ball(2, 2)
    d = evaluate_word(2, "x1^3 x0^3")
    assert exact_length(2, d.raw, b, reach=1) is None
    assert exact_length(2, d.raw, b, reach=6) == length(d)
    with pytest.raises(ValueError):
        exact_length(3, d.raw, b)


def test_cache_round_trip(tmp_path):
    b = ball(3, 3)
    path = tmp_path / "ball.txt"
    b.save(path)
    lines = path.read_text().splitlines()
    assert lines[0] == "# F(3) radius 3"
    assert lines[1].startswith("0 F(3)|")
    loaded = Ball.load(path)
    assert (loaded.n, loaded.radius, loaded.distance) == (b.n, b.radius, b.distance)


def test_report_accounting():
    rep = Report("demo")
    assert rep.passed
    rep.checked = 3
    rep.fail("one")
    other = Report("other", checked=2)
    other.fail("two")
    rep.merge(other)
    assert (rep.checked, rep.failures, rep.passed) == (5, 2, False)
    assert json.loads(json.dumps(rep.to_json()))["failures"] == 2
    assert "FAIL" in rep.summary()


def test_certify_small():
    out = certify(2, 4, plmap_radius=1)
    assert out["elements"] == sum(out["sphere_sizes"])
    names = [r["name"] for r in out["reports"]]
    assert any(name.startswith("length") for name in names)
    assert any(name.startswith("PL homomorphism") for name in names)
    assert out["mismatches"] == 0
    assert certify_length(ball(4, 3)).passed
    assert certify_relations(5).passed
    assert certify_psi().passed


def test_search_finds_short_dead_ends():
    found = search_dead_ends(2, 3000, seed=1, max_length=12)
    assert found
    assert all(length(ForestDiagram(2, *raw)) <= 12 for raw in found)


def test_dead_end_report_on_corpus():
    for n in (2, 3, 4):
        raws = [d.raw for d, _, _ in load_dead_ends() if d.n == n]
        reps = certify_dead_ends(n, raws)
        assert reps["depth"].passed and reps["short_words"].passed and reps["escape_inverse"].passed
        assert reps["depth"].info["dead_ends"] == len(raws)
