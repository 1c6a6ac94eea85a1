import math
from fractions import Fraction

import mpmath
import pytest

from bfc.bounds import (
    LP_CAP_TABLE,
    LP_CAPS,
    MARKOV_CAPS,
    SQUARE_CAPS,
    cap_profile,
    cs_harmonic_bound,
    cs_sens_bound,
    dp_degree,
    dp_mixed_ds,
    dp_monotone_degree,
    ds_influence_min,
    markov_cap,
    monotone_dt_table,
    power_tail,
    technical_recursion,
)


def test_markov_cap_values():
    assert markov_cap(1) == 1
    assert markov_cap(2) == 3
    assert markov_cap(3) == 7
    # the LP table is strictly tighter at degree 3
    assert LP_CAP_TABLE[3] == 6 < markov_cap(3)


def test_cap_profiles_monotone_and_positive():
    for profile in (SQUARE_CAPS, LP_CAPS, MARKOV_CAPS):
        prev = 0
        for d in range(1, 40):
            b = profile.bd(d)
            assert b >= 1
            assert b >= prev
            prev = b


def test_cap_provenance():
    assert MARKOV_CAPS.source(3) == "lp-table"
    assert MARKOV_CAPS.source(20) == "markov"
    assert LP_CAPS.source(20) == "square"
    assert cap_profile("square") is SQUARE_CAPS
    with pytest.raises(ValueError):
        cap_profile("tight")


# --- tail closed forms -------------------------------------------------------

@pytest.mark.parametrize("a", [1, 15, 31])
@pytest.mark.parametrize("ratio", ["dyadic", "sqrt2"])
@pytest.mark.parametrize("m", [0, 1, 2, 3])
def test_power_tail_matches_direct_summation(m, a, ratio):
    if ratio == "dyadic":
        r = Fraction(1, 2)
        closed = float(power_tail(m, a, r))
        rf = 0.5
    else:
        r = mpmath.power(2, mpmath.mpf(-0.5))
        closed = float(power_tail(m, a, r))
        rf = 2 ** -0.5
    direct, term = 0.0, None
    k = a
    while term is None or term > 1e-18:
        term = (k ** m) * rf ** k
        direct += term
        k += 1
    assert abs(closed - direct) < 1e-10


def test_power_tail_exact_dyadic():
    # sum_{k>=1} k/2^k = 2 exactly
    assert power_tail(1, 1, Fraction(1, 2)) == 2
    assert power_tail(0, 3, Fraction(1, 2)) == Fraction(1, 4)


# --- degree table --------------------------------------------------------------

def test_dp_degree_square_headline():
    grid = dp_degree(30, SQUARE_CAPS)
    assert grid.headline < 5.0782


def test_dp_degree_lp_headline():
    grid = dp_degree(30, LP_CAPS)
    assert grid.cell(900, 30) <= 4.4158
    assert grid.headline <= 4.4158


def test_dp_degree_markov_headline():
    grid = dp_degree(30, MARKOV_CAPS)
    assert grid.headline <= 4.3935


def test_dp_degree_grid_invariants():
    grid = dp_degree(12, LP_CAPS)
    for d in range(1, 13):
        bd = grid.bd[d]
        for b in range(bd + 1):
            v = grid.cell(b, d)
            assert v <= d / 2 + 1e-12
            if b + 1 <= bd:
                assert v <= grid.cell(b + 1, d) + 1e-12
        assert grid.cell(bd + 1, d) == 0.0
    assert grid.cell(0, 5) == 0.0


def test_headline_monotone_under_cap_tightening():
    h_sq = dp_degree(30, SQUARE_CAPS).headline
    h_lp = dp_degree(30, LP_CAPS).headline
    h_mk = dp_degree(30, MARKOV_CAPS).headline
    assert h_sq >= h_lp >= h_mk


def test_tail_first_form_below_second_form():
    # k (B_k - B_{k-1}) <= 2k^2 - k for the square profile, so the implemented
    # tail never beats the cruder cubic form
    grid = dp_degree(20, SQUARE_CAPS)
    d = 20
    crude_first = (d + 1) ** 3 / 2 ** (d + 1)
    crude_series = float(
        2 * power_tail(2, d + 2, Fraction(1, 2)) - power_tail(1, d + 2, Fraction(1, 2))
    )
    assert grid.tail_first <= crude_first + 1e-12
    assert grid.tail_series + grid.tail_remainder <= crude_series + 1e-12


def test_grid_text_format():
    text = dp_degree(4, LP_CAPS).to_text(b_step=2)
    lines = text.splitlines()
    assert lines[0].startswith("b\\d\t1\t2\t3\t4")
    assert any(ln.startswith("headline\t") for ln in lines)


# --- monotone degree ------------------------------------------------------------

def test_monotone_degree_base_and_values():
    table = dp_monotone_degree(30)
    assert table.values[1] == Fraction(1, 2)
    assert table.values[2] == Fraction(1, 2)
    assert table.values[30] <= Fraction(13243, 10000)
    assert table.headline <= Fraction(1325, 1000)
    # exact dyadic rationals, non-decreasing
    for d in range(1, 31):
        v = table.values[d]
        assert v.denominator & (v.denominator - 1) == 0
        if d > 1:
            assert v >= table.values[d - 1]


# --- mixed measures --------------------------------------------------------------

def test_ds_influence_min_beta_one_is_finite():
    # min_k (k + sum_{i>k} i^3 2^-i) / 2, attained at k=9: (9 + 2.7402...)/2
    res = ds_influence_min(Fraction(1, 1))
    assert res.k == 9
    assert res.value == pytest.approx(5.8701171875, abs=1e-9)


def test_ds_influence_min_monotone_in_beta():
    values = [
        ds_influence_min(Fraction(num, 4)).value for num in (1, 2, 3, 4)
    ]
    assert values == sorted(values, reverse=True)


def test_ds_influence_min_settled_scan():
    res = ds_influence_min(Fraction(1, 2))
    profile = dict(res.profile)
    assert profile[res.k] == res.value
    assert all(res.value <= v + 1e-12 for v in profile.values())


def test_dp_mixed_ds_beta_one_degenerates_to_degree():
    gm = dp_mixed_ds(1, 30, MARKOV_CAPS)
    gd = dp_degree(30, MARKOV_CAPS)
    assert abs(gm.headline - gd.headline) < 1e-3


def test_dp_mixed_ds_below_influence_minimum():
    grid = dp_mixed_ds(Fraction(1, 2), 30, MARKOV_CAPS)
    assert grid.headline <= ds_influence_min(Fraction(1, 2)).value


def test_dp_mixed_ds_profile_step_beats_uniform():
    prof = dp_mixed_ds(Fraction(1, 2), 30, MARKOV_CAPS, step="profile")
    unif = dp_mixed_ds(Fraction(1, 2), 30, MARKOV_CAPS, step="uniform")
    assert prof.headline <= unif.headline


def test_dp_mixed_validation():
    with pytest.raises(ValueError):
        dp_mixed_ds(0, 20, MARKOV_CAPS)
    with pytest.raises(ValueError):
        dp_mixed_ds(Fraction(1, 2), 20, MARKOV_CAPS, step="other")


# --- harmonic and sensitivity forms ----------------------------------------------

def test_cs_harmonic_values():
    assert cs_harmonic_bound(1) == Fraction(1, 2)
    assert cs_harmonic_bound(4) == Fraction(25, 24)


def test_cs_harmonic_vs_log_form_sweep():
    gamma = 0.5772156649
    h = Fraction(0)
    for d in range(1, 10001):
        h += Fraction(1, d)
        half_h = float(h) / 2
        assert half_h <= 0.5 * math.log(d) + gamma / 2 + 1 / (2 * d) + 1e-9


def test_cs_sens_bound():
    assert cs_sens_bound(1) == pytest.approx(0.5772156649 / 2)
    with pytest.raises(ValueError):
        cs_sens_bound(0)


# --- the auxiliary recursion -------------------------------------------------------

def test_technical_recursion_subcritical_is_bounded():
    res = technical_recursion(0.5, Fraction(1, 4), 100)
    assert res.constant_bound
    assert res.values[-1] <= res.bound_constant + 1e-9


def test_technical_recursion_critical_is_harmonic():
    res = technical_recursion(0.5, Fraction(1, 2), 100)
    assert res.harmonic_bound
    # logarithmic growth: doubling d gains roughly a constant
    assert res.values[99] - res.values[49] < 0.6


def test_technical_recursion_base_case():
    res = technical_recursion(0.5, Fraction(1, 2), 1)
    assert res.values == (0.5,)


# --- monotone decision-tree table ----------------------------------------------------

def test_monotone_dt_values():
    t = monotone_dt_table(20)
    assert t.values[1:6] == (1, 2, 4, 6, 10)
    assert t.values[10] == 2 ** 8 + 2
    for d in range(4, 21):
        assert t.values[d] == 2 ** (d - 2) + 2
    assert float(t.ratio) <= 0.2500020


def test_monotone_dt_ratio_approaches_quarter():
    t = monotone_dt_table(24)
    assert t.ratio == Fraction(2 ** 22 + 2, 2 ** 24)
    assert float(t.ratio) > 0.25
