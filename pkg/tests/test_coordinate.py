from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bfc.bf import BooleanFunction, family
from bfc.coordinate import (
    ALL_BASE_KINDS,
    CERT_I,
    DEG_I,
    SENS_I,
    STANDARD_KINDS,
    CoordinateMeasureKind,
    cert_i,
    check_influence_bound,
    check_junta_count,
    check_monomial_sensitivity,
    check_restriction_inequality,
    check_rrcm,
    check_split_bound,
    deg_i,
    mix_ds,
    potential,
    restricted_potential,
    sens_i,
)

DICT1 = family("DICT", 1)
OR2 = family("OR", 2)
MAJ3 = family("MAJ", 3)


def test_kind_validation():
    with pytest.raises(ValueError):
        CoordinateMeasureKind("deg", Fraction(1, 2))
    with pytest.raises(ValueError):
        mix_ds(Fraction(3, 2))
    with pytest.raises(ValueError):
        CoordinateMeasureKind("bogus")


def test_deg_i_examples():
    assert deg_i(DICT1, 1) == 1
    assert deg_i(OR2, 1) == 2
    assert deg_i(family("CONST0", 3), 2) == 0
    # coordinate 3 of a 2-junta padded to 3 inputs
    padded = BooleanFunction(3, OR2.table | (OR2.table << 4))
    assert deg_i(padded, 3) == 0


def test_sens_i_examples():
    assert sens_i(DICT1, 1) == 2
    assert sens_i(OR2, 1) == 3
    assert sens_i(family("CONST1", 2), 1) == 0


def test_cert_i_examples():
    assert cert_i(DICT1, 1) == 2
    assert cert_i(OR2, 1) == 3
    assert cert_i(family("CONST0", 2), 2) == 0


def test_potential_examples():
    assert potential(DICT1, DEG_I).value == Fraction(1, 2)
    assert potential(DICT1, CERT_I).value == Fraction(1, 4)
    assert potential(OR2, DEG_I).value == Fraction(1, 2)


def test_restricted_potential_examples():
    assert restricted_potential(OR2, DEG_I, [1]).value == Fraction(1, 4)
    assert restricted_potential(OR2, DEG_I, []).value == 0
    top = restricted_potential(MAJ3, SENS_I, [1, 2, 3])
    assert top.value < Fraction(3, 2)


def test_mixed_potential_carries_error_bound():
    pv = potential(MAJ3, mix_ds(Fraction(1, 2)))
    assert not pv.exact
    assert pv.error_bound <= 1e-12
    # deg_i = 3 and sens_i = 4 on every coordinate: 3 * 2^-(3.5)
    assert abs(pv.value - 3 * 2 ** -3.5) < 1e-12


def test_potential_report_format():
    lines = potential(OR2, DEG_I).format_lines()
    assert lines == ["1\t2/1\t1/4", "2\t2/1\t1/4", "total\t1/2"]


def test_check_rrcm_examples():
    assert check_rrcm(OR2, 1, DEG_I).passed
    assert check_rrcm(MAJ3, 1, SENS_I).passed
    padded = BooleanFunction(3, OR2.table | (OR2.table << 4))
    for kind in STANDARD_KINDS:
        assert check_rrcm(padded, 3, kind).passed  # vacuous: coordinate 3 idle


@given(st.integers(0, (1 << 16) - 1), st.integers(1, 4))
@settings(max_examples=150, deadline=None)
def test_rrcm_axioms_random_four_variable(table, i):
    f = BooleanFunction(4, table)
    for kind in STANDARD_KINDS:
        assert check_rrcm(f, i, kind).passed


def test_restriction_inequality_examples():
    res = check_restriction_inequality(OR2, 1, DEG_I, [2])
    assert res.passed and "1/4" in res.detail
    assert check_restriction_inequality(DICT1, 1, SENS_I, []).passed
    assert check_restriction_inequality(MAJ3, 1, CERT_I, [2, 3]).passed
    with pytest.raises(ValueError):
        check_restriction_inequality(OR2, 1, DEG_I, [1])


@given(st.integers(0, (1 << 8) - 1), st.integers(1, 3))
@settings(max_examples=80, deadline=None)
def test_restriction_inequality_random(table, i):
    f = BooleanFunction(3, table)
    H = [j for j in range(1, 4) if j != i]
    for kind in ALL_BASE_KINDS:
        assert check_restriction_inequality(f, i, kind, H).passed


def test_influence_bound_examples():
    assert check_influence_bound(OR2, DEG_I).passed
    assert check_influence_bound(DICT1, SENS_I).passed
    assert check_influence_bound(family("CONST0", 3), CERT_I).passed


def test_monomial_sensitivity_examples():
    # k = 1 forces a zero count: relevant coordinates have sens_i >= 2
    assert check_monomial_sensitivity(MAJ3, 1).passed
    assert check_monomial_sensitivity(MAJ3, 4).passed
    assert check_monomial_sensitivity(family("KUSHILEVITZ"), 6).passed


def test_junta_count_examples():
    assert check_junta_count(family("DICT", 2), 2).passed
    assert check_junta_count(family("PARITY", 4), 8).passed
    assert check_junta_count(family("CONST0", 4), 3).passed


def test_split_bound_examples():
    addr = family("ADDR", 2)
    res = check_split_bound(addr, [3, 4, 5, 6])
    assert res.hypothesis_holds and res.bound_holds
    res = check_split_bound(MAJ3, [1])
    assert res.hypothesis_holds and res.bound_holds
    res = check_split_bound(family("PARITY", 3), [1, 2])
    assert not res.hypothesis_holds
    with pytest.raises(ValueError):
        check_split_bound(family("CONST0", 2), [1])


def test_c_potential_below_half_on_three_variables():
    for t in range(1 << 8):
        f = BooleanFunction(3, t)
        assert potential(f, CERT_I).value <= Fraction(1, 2)


def test_top_monomial_coordinates_have_full_deg_i():
    from bfc.measures import degree

    for t in range(1 << 8):
        f = BooleanFunction(3, t)
        d = degree(f)
        if d == 0:
            continue
        mob = f.mobius_transform()
        for subset in mob.support():
            if len(subset) == d:
                for i in subset:
                    assert deg_i(f, i) == d
