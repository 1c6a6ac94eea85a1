from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bfc.bf import family
from bfc.lp import (
    LinearProgram,
    adeg_lp,
    lp_bs_cap,
    moment_lp,
    simplex_feasible,
)


def lp(num_vars, rows):
    return LinearProgram.build(num_vars, rows)


def test_trivial_feasible():
    res = simplex_feasible(lp(1, [([1], ">=", 1), ([1], "<=", 2)]))
    assert res.feasible
    assert 1 <= res.witness[0] <= 2


def test_trivial_infeasible():
    res = simplex_feasible(lp(1, [([1], ">=", 1), ([1], "<=", 0)]))
    assert not res.feasible
    assert res.witness is None


def test_empty_lp_is_feasible_at_zero():
    res = simplex_feasible(lp(2, []))
    assert res.feasible and res.witness == (0, 0)


def test_equality_system():
    res = simplex_feasible(lp(2, [([1, 1], "=", 3), ([1, -1], "=", 1)]))
    assert res.feasible
    assert res.witness == (Fraction(2), Fraction(1))


def test_moment_lp_hand_example():
    prog = moment_lp(2, 3, 0)
    res = simplex_feasible(prog)
    assert res.feasible
    # the hand point (3/2, -1/2) satisfies it: p(1)=1, p(2)=1, p(3)=0
    assert prog.satisfies((Fraction(3, 2), Fraction(-1, 2)))


def test_moment_lp_small_infeasible():
    assert not simplex_feasible(moment_lp(1, 2, 0)).feasible
    assert not simplex_feasible(moment_lp(1, 2, 1)).feasible
    assert not simplex_feasible(moment_lp(2, 4, 0)).feasible
    assert not simplex_feasible(moment_lp(2, 4, 1)).feasible


def test_moment_lp_validation():
    with pytest.raises(ValueError):
        moment_lp(0, 3, 0)
    with pytest.raises(ValueError):
        moment_lp(2, 1, 0)
    with pytest.raises(ValueError):
        moment_lp(2, 3, 2)


def test_lp_cap_small_degrees():
    assert lp_bs_cap(1).cap == 1
    assert lp_bs_cap(2).cap == 3
    scan = lp_bs_cap(3)
    assert scan.cap == 6
    assert scan.monotone
    # the profile covers the whole scan window
    assert scan.profile[0][0] == 3 and scan.profile[-1][0] == 18


def test_lp_cap_guard():
    with pytest.raises(ValueError):
        lp_bs_cap(0)
    with pytest.raises(ValueError):
        lp_bs_cap(17)


def test_simplex_determinism():
    prog = moment_lp(3, 5, 1)
    a = simplex_feasible(prog)
    b = simplex_feasible(prog)
    assert a == b


def test_text_format_roundtrip():
    prog = lp(
        2,
        [([Fraction(1, 2), Fraction(-1, 3)], "<=", Fraction(5, 7)), ([1, 0], ">=", 0)],
    )
    text = prog.to_text()
    assert text.splitlines()[0] == "vars=2"
    assert "1/2 -1/3 <= 5/7" in text
    assert LinearProgram.from_text(text) == prog


def test_text_format_rejects_garbage():
    with pytest.raises(ValueError):
        LinearProgram.from_text("vars=2\n1/2 <= 1")
    with pytest.raises(ValueError):
        LinearProgram.from_text("rows=2\n")


@st.composite
def _system_with_known_point(draw):
    nv = draw(st.integers(1, 3))
    point = [Fraction(draw(st.integers(-4, 4)), draw(st.integers(1, 3))) for _ in range(nv)]
    rows = []
    for _ in range(draw(st.integers(1, 6))):
        coeffs = [Fraction(draw(st.integers(-3, 3))) for _ in range(nv)]
        lhs = sum(c * p for c, p in zip(coeffs, point))
        margin = Fraction(draw(st.integers(0, 5)), 2)
        rel = draw(st.sampled_from(["<=", ">=", "="]))
        if rel == "<=":
            rows.append((coeffs, rel, lhs + margin))
        elif rel == ">=":
            rows.append((coeffs, rel, lhs - margin))
        else:
            rows.append((coeffs, rel, lhs))
    return lp(nv, rows)


@given(_system_with_known_point())
@settings(max_examples=120, deadline=None)
def test_systems_with_a_known_point_are_feasible_and_witnessed(prog):
    res = simplex_feasible(prog)
    assert res.feasible
    assert prog.satisfies(res.witness)


@given(_system_with_known_point())
@settings(max_examples=60, deadline=None)
def test_embedding_a_contradiction_makes_it_infeasible(prog):
    base = list(prog.constraints)
    nv = prog.num_vars
    one = tuple([Fraction(1)] + [Fraction(0)] * (nv - 1))
    base.append((one, ">=", Fraction(10)))
    base.append((one, "<=", Fraction(9)))
    assert not simplex_feasible(LinearProgram(nv, tuple(base))).feasible


def test_adeg_lp_examples():
    assert simplex_feasible(adeg_lp(family("CONST0", 2), 0, Fraction(1, 3))).feasible
    assert not simplex_feasible(adeg_lp(family("DICT", 2), 0, Fraction(1, 3))).feasible
    or2 = family("OR", 2)
    assert simplex_feasible(adeg_lp(or2, 2, Fraction(1, 3))).feasible


def test_adeg_lp_shape():
    prog = adeg_lp(family("OR", 2), 1, Fraction(1, 3))
    assert prog.num_vars == 3  # {}, {1}, {2}
    assert len(prog.constraints) == 8  # two sides per input point
