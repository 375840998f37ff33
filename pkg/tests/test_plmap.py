from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import ball
from fnforest.forest import evaluate_word, identity_diagram, invert, multiply
from fnforest.nadic import NAdicRational
from fnforest.plmap import (
    MembershipError,
    Piece,
    PLMap,
    check_membership,
    compose,
    diagram_to_plmap,
    evaluate,
    identity_map,
    invert_map,
    membership_failures,
    psi_breakpoint,
)

nadic = st.builds(lambda k, p: NAdicRational(3, k, p), st.integers(-500, 500), st.integers(0, 6))


class TestNAdic:
    def test_normalised(self):
        x = NAdicRational(2, 12, 3)
        assert (x.k, x.p) == (3, 1)
        assert NAdicRational(3, 5, -2) == 45
        assert NAdicRational(2, 4, 2) == 1 and hash(NAdicRational(2, 4, 2)) == hash(1)

    def test_fraction_round_trip(self):
        assert NAdicRational.from_fraction(3, Fraction(7, 9)).to_fraction() == Fraction(7, 9)
        with pytest.raises(ValueError):
            NAdicRational.from_fraction(2, Fraction(1, 3))

    def test_mixed_bases_rejected(self):
        with pytest.raises(ValueError):
            NAdicRational(2, 1) + NAdicRational(3, 1)
        with pytest.raises(ValueError):
            NAdicRational(1, 1)

    def test_str(self):
        assert str(NAdicRational(3, 2, 1)) == "2/3^1"

    @given(nadic, nadic)
    def test_arithmetic_matches_fractions(self, a, b):
        fa, fb = a.to_fraction(), b.to_fraction()
        assert (a + b).to_fraction() == fa + fb
        assert (a - b).to_fraction() == fa - fb
        assert (a * b).to_fraction() == fa * fb
        assert (a < b) == (fa < fb)
        assert (a == b) == (fa == fb)

    @given(nadic, st.integers(-4, 4))
    def test_scale(self, a, t):
        assert a.scale(t).to_fraction() == a.to_fraction() * Fraction(3) ** t


def test_x0_is_a_translation():
    f = diagram_to_plmap(evaluate_word(3, "x0"))
    assert f.breakpoints == ()
    assert f.pieces == (Piece(0, NAdicRational(3, 2)),)
    assert f(5) == 7


def test_x1_in_f2():
    f = diagram_to_plmap(evaluate_word(2, "x1"))
    assert f.breakpoints == (NAdicRational(2, 0), NAdicRational(2, 1))
    assert f(-3) == -3
    assert f(NAdicRational(2, 1, 1)) == 1
    assert f(NAdicRational(2, 3, 2)) == NAdicRational(2, 3, 1)
    assert f(4) == 5


def test_identity_map():
    assert diagram_to_plmap(identity_diagram(4)) == identity_map(4)


@pytest.mark.parametrize("n", [2, 3, 4])
def test_generators_are_faithful(n):
    maps = {w: diagram_to_plmap(evaluate_word(n, w)) for w in (f"x{i}" for i in range(n))}
    assert len(set(maps.values())) == n
    assert compose(maps["x1"], maps["x0"]) != compose(maps["x0"], maps["x1"])


@pytest.mark.parametrize("word", ["x1 x0^-2 x2", "x2^-1 x1 x1 x0", "x0^-1 x1^-1 x0 x2 x1"])
def test_inverse_map(word):
    d = evaluate_word(3, word)
    f = diagram_to_plmap(d)
    assert invert_map(f) == diagram_to_plmap(invert(d))
    assert compose(f, invert_map(f)) == identity_map(3)
    for x in (NAdicRational(3, k, 2) for k in range(-20, 40, 7)):
        assert evaluate(invert_map(f), f(x)) == x


@pytest.mark.parametrize("n", [2, 3])
def test_homomorphism_small_ball(n):
    elements = [d for d, _ in ball(n, 2).items()]
    maps = {d: diagram_to_plmap(d) for d in elements}
    for a in elements:
        for b in elements:
            assert diagram_to_plmap(multiply(a, b)) == compose(maps[a], maps[b])


def test_membership_rejects_bad_maps():
    n = 3
    one = NAdicRational(n, 1)
    assert membership_failures(identity_map(n)) == []
    translate_one = PLMap(n, (), (Piece(0, one),))
    assert any("multiple of 2" in m for m in membership_failures(translate_one))
    steep_end = PLMap(n, (NAdicRational(n, 0),), (Piece(0, NAdicRational(n, 0)), Piece(1, NAdicRational(n, 0))))
    assert any("right end" in m for m in membership_failures(steep_end))
    jump = PLMap(n, (NAdicRational(n, 0),), (Piece(0, NAdicRational(n, 0)), Piece(0, NAdicRational(n, 2))))
    assert any("discontinuous" in m for m in membership_failures(jump))
    with pytest.raises(MembershipError):
        check_membership(jump)
    with pytest.raises(ValueError):
        PLMap(n, (), ())


def test_psi_anchors():
    assert psi_breakpoint(2, 1).to_fraction() == Fraction(3, 4)
    assert psi_breakpoint(3, 0).to_fraction() == Fraction(1, 3)
    assert psi_breakpoint(3, 1).to_fraction() == Fraction(2, 3)
    with pytest.raises(ValueError):
        psi_breakpoint(1, 0)


@pytest.mark.parametrize("n", [2, 3, 4, 5])
def test_psi_increasing(n):
    values = [psi_breakpoint(n, k).to_fraction() for k in range(-12, 13)]
    assert all(0 < a < b < 1 for a, b in zip(values, values[1:]))
