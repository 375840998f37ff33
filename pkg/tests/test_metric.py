import itertools

import pytest

from conftest import ball
from fnforest.forest import ForestDiagram, evaluate_word, identity_diagram, invert
from fnforest.metric import (
    EXTERIOR,
    GapClass,
    Label,
    classify_gap,
    is_marked,
    label_spaces,
    length,
    length_parts,
    support,
    weight,
)

WORKED = [
    (3, "x0^-1 x2 x0^-1 x1^2 x0 x1 x0 x1 x0^-1 x1 x0 x1", None, None, 13),
    (4, "x0^-2 x1 x0^2 x2", 4, 2, 6),
    (4, "x0^-1 x1^-1 x0^-2 x1 x3 x0^-1 x1^-1 x0^2 x1 x3^-1 x2^-1 x0^2", 8, 7, 15),
    (5, "x0 x1^-1 x0 x1^-1 x0 x4 x0^-1 x4 x0^-2", 6, 4, 10),
    (3, "x0^-1 x1^2 x0^-2 x1 x0 x1^-2 x0 x2^-1 x0^4 x1^-1 x0 x1 x2 x0^-1 x1 x0 x1^-1 x0^-1 x1^-2", 13, 13, 26),
]


@pytest.mark.parametrize("n,word,l0,l1,total", WORKED)
def test_worked_examples(backend, n, word, l0, l1, total):
    d = evaluate_word(n, word)
    parts = length_parts(d)
    if l0 is not None:
        assert parts == (l0, l1)
    assert sum(parts) == total
    assert length(d) == total


def test_weight_table():
    L, N, R, I = Label.L, Label.N, Label.R, Label.I
    assert weight(L, L) == 2
    assert weight(R, I) == 0
    assert weight(I, R) == 0
    rows = {L: (2, 1, 1, 1), N: (1, 2, 2, 2), R: (1, 2, 2, 0), I: (1, 2, 0, 0)}
    for bottom, row in rows.items():
        for top, w in zip((L, N, R, I), row):
            assert weight(top, bottom) == w
    for a, b in itertools.product((L, N, R, I), repeat=2):
        assert weight(a, b) == weight(b, a)
    with pytest.raises(ValueError):
        weight(Label.UNLABELLED, L)


def test_classify_gap():
    x1 = evaluate_word(3, "x1")
    assert classify_gap(x1, "top", 2) == GapClass(True, 0, (), 2)
    assert classify_gap(x1, "bottom", 2) == EXTERIOR
    x0 = evaluate_word(3, "x0")
    assert classify_gap(x0, "top", 0) == EXTERIOR
    assert classify_gap(x0, "bottom", 0) == EXTERIOR
    deep = evaluate_word(3, "x1 x2")
    assert classify_gap(deep, "top", 2).path == (2,)


def _marked_support(d):
    return sorted(g for g in support(d) if is_marked(d, g))


def test_support():
    assert _marked_support(evaluate_word(3, "x0")) == [0]
    assert _marked_support(identity_diagram(3)) == []
    assert _marked_support(evaluate_word(3, "x1")) == [2]


def test_labels_of_small_elements(backend):
    lab = label_spaces(evaluate_word(3, "x0"))
    assert (lab[0].top, lab[0].bottom, lab[0].weight) == (Label.L, Label.R, 1)
    assert lab[-2].top is Label.UNLABELLED
    lab = label_spaces(evaluate_word(3, "x0^-1 x1"))
    assert lab.lines() == ["2 N L 1", "4 I R 0"]
    assert lab.total_weight == 1


def test_labels_agree_with_support():
    for raw in ball(3, 4).distance:
        d = ForestDiagram(3, *raw)
        assert set(label_spaces(d).spaces) == set(_marked_support(d))


def test_labelling_necessity_lapses():
    # the bottom N at gap 2 lapses because the top caret over it ends before the
    # bottom caret starts; the gap weighs 0 rather than 2
    e = ForestDiagram(3, (b"1000", b"0", b"0", b"0"), (b"0", b"0", b"0", b"1000"), 0, 0)
    assert label_spaces(e).lines() == ["2 I R 0", "4 R I 0"]
    assert length(e) == ball(3, 4).distance[e.raw] == 2


@pytest.mark.parametrize("n,r", [(2, 7), (3, 6), (4, 4), (5, 4), (6, 3)])
def test_formula_matches_distance(backend, n, r):
    for raw, k in ball(n, r).interior():
        assert length(ForestDiagram(n, *raw)) == k


@pytest.mark.parametrize("n,r", [(2, 6), (3, 5)])
def test_length_properties(n, r):
    for raw, k in ball(n, r).interior():
        d = ForestDiagram(n, *raw)
        assert length(invert(d)) == length(d)
        assert (length(d) == 0) == d.is_identity()


def test_n2_every_gap_marked():
    d = evaluate_word(2, "x1 x0^-1 x1")
    assert all(is_marked(d, g) for g in support(d))
