import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from bfc.bf import ArityError, BooleanFunction, family
from bfc.corpus import (
    DEDEKIND,
    enumerate_monotone,
    parse_corpus,
    random_monotone,
)
from bfc.measures import block_sensitivity, degree
from bfc.verify import (
    DoublingFunction,
    certify_doubling_recurrence,
    check_dt_intersect,
    check_markov_consequence,
    check_standard_form_lemmas,
    dt_doubling_family,
    run_theorem_suite,
    standard_form,
    suite_failures,
    symmetrize,
)


# --- corpora -----------------------------------------------------------------

def test_all_corpus_counts():
    assert len(parse_corpus("all:2")) == 16
    labels = [lab for lab, _ in parse_corpus("all:1")]
    assert labels == ["all1:0x0", "all1:0x1", "all1:0x2", "all1:0x3"]


def test_monotone_corpus_counts():
    for n in range(0, 6):
        corpus = enumerate_monotone(n)
        fs = list(corpus)
        assert len(fs) == DEDEKIND[n] == len(corpus)
        if n <= 3:
            assert all(f.is_monotone() for _, f in fs)
    with pytest.raises(ValueError):
        enumerate_monotone(6)


def test_random_corpus_reproducible():
    a = list(parse_corpus("random:4:10:7"))
    b = list(parse_corpus("random:4:10:7"))
    assert a == b
    c = list(parse_corpus("random:4:10:8"))
    assert a != c


def test_named_corpus():
    fs = dict(parse_corpus("named:KUSHILEVITZ,MAJ:3"))
    assert fs["KUSHILEVITZ"].n == 6
    assert fs["MAJ:3"] == family("MAJ", 3)


def test_parse_corpus_rejects_garbage():
    with pytest.raises(ValueError):
        parse_corpus("some:4")
    with pytest.raises(ValueError):
        parse_corpus("random:4:10")
    with pytest.raises(ValueError):
        parse_corpus("named:")


def test_random_monotone_closure():
    for f in random_monotone(4, 20, 11):
        assert f.is_monotone()


# --- standard form --------------------------------------------------------------

def test_standard_form_or2_fixed_point():
    assert standard_form(family("OR", 2)) == family("OR", 2)


def test_standard_form_and2_is_or2():
    assert standard_form(family("AND", 2)) == family("OR", 2)


def test_standard_form_kushilevitz():
    g = standard_form(family("KUSHILEVITZ"))
    assert g.n == 6
    assert degree(g) <= 3


def test_standard_form_rejects_constants():
    with pytest.raises(ValueError):
        standard_form(family("CONST0", 2))


def test_standard_form_idempotent_up_to_permutation():
    for f in (family("MAJ", 3), family("AND", 3), family("KUSHILEVITZ")):
        g = standard_form(f)
        h = standard_form(g)
        assert h.n == g.n
        perms = itertools.permutations(range(g.n))
        assert any(
            all(
                h.evaluate([bits[p[i]] for i in range(g.n)]) == g.evaluate(bits)
                for bits in itertools.product((0, 1), repeat=g.n)
            )
            for p in perms
        )


@given(st.integers(1, (1 << 16) - 2))
@settings(max_examples=120, deadline=None)
def test_standard_form_arity_and_linear_coefficient(table):
    f = BooleanFunction(4, table)
    bs = block_sensitivity(f).bs
    g = standard_form(f)
    assert g.n == bs
    p = symmetrize(g)
    assert (p[1] if len(p) > 1 else 0) == bs


# --- symmetrisation ---------------------------------------------------------------

def test_symmetrize_examples():
    assert symmetrize(family("OR", 2)) == (0, 2, -1)
    assert symmetrize(family("PARITY", 2)) == (0, 2, -2)
    p = symmetrize(standard_form(family("MAJ", 3)))
    assert p[1] == block_sensitivity(family("MAJ", 3)).bs == 2


def test_symmetrize_endpoints():
    f = family("MAJ", 3)
    p = symmetrize(f)
    assert sum(p) == f.evaluate((1, 1, 1))
    assert p[0] == f.evaluate((0, 0, 0))


def test_standard_form_lemmas():
    or2 = family("OR", 2)
    rep = check_standard_form_lemmas(or2)
    assert rep.passed
    # single pair coefficient -1, so p''(0) = -2 = -b(b-1)
    assert or2.mobius_transform().coefficient((1, 2)) == -1
    p = symmetrize(or2)
    assert 2 * p[2] == -2
    g = standard_form(family("AND", 3))
    assert check_standard_form_lemmas(g).passed
    mob = g.mobius_transform()
    assert all(
        mob.coefficient((i, j)) in (-1, -2)
        for i in range(1, 4)
        for j in range(i + 1, 4)
    )
    assert check_standard_form_lemmas(family("DICT", 1)).passed  # vacuous pairs
    with pytest.raises(ValueError):
        check_standard_form_lemmas(family("AND", 2))  # not standard form


# --- consequences of the curvature bound -------------------------------------------

def test_markov_consequence_examples():
    ku = family("KUSHILEVITZ")
    assert check_markov_consequence(ku)
    bs = block_sensitivity(ku).bs
    d = degree(ku)
    assert bs * bs - bs == 30
    assert Fraction(2, 3) * (d ** 4 - d * d) == 48
    assert check_markov_consequence(family("PARITY", 4))  # 12 <= 160


# --- monotone decision-tree structure ------------------------------------------------

def test_dt_intersect_maj3():
    res = check_dt_intersect(family("MAJ", 3), 1)
    assert res.status == "PASS"
    assert res.lhs == 2 and res.rhs == 3


def test_dt_intersect_skips_constant_branch():
    assert check_dt_intersect(family("AND", 2), 1).status == "SKIP"


def test_dt_intersect_all_monotone_four_variable():
    for _, f in enumerate_monotone(4):
        for root in range(1, 5):
            assert check_dt_intersect(f, root).status in ("PASS", "SKIP")


# --- doubling family -----------------------------------------------------------------

def test_doubling_family_small_levels():
    f3 = dt_doubling_family(3)
    assert f3.n == 4 and f3.num_relevant() == 4
    f5 = dt_doubling_family(5)
    assert f5.n == 10 and f5.num_relevant() == 10
    from bfc.measures import dt_depth

    assert dt_depth(f3) <= 3
    assert f3.is_monotone() and f5.is_monotone()


def test_doubling_family_arity_guard():
    with pytest.raises(ArityError):
        dt_doubling_family(7)  # would need 22 inputs


def test_doubling_lazy_matches_table():
    for level in (3, 4, 5, 6):
        ev = DoublingFunction(level)
        f = dt_doubling_family(level)
        assert ev.arity == f.n
        for idx in range(0, 1 << f.n, 7):
            bits = tuple((idx >> i) & 1 for i in range(f.n))
            assert ev.evaluate(bits) == f.evaluate(bits)


def test_doubling_recurrence_certificates():
    odd = certify_doubling_recurrence(9)
    assert odd == [(1, 1), (3, 4), (5, 10), (7, 22), (9, 46)]
    even = certify_doubling_recurrence(8)
    assert even == [(2, 2), (4, 6), (6, 14), (8, 30)]


# --- the suite over small corpora ------------------------------------------------------

def test_suite_all_two_variable():
    checks = run_theorem_suite(parse_corpus("all:2"))
    assert suite_failures(checks) == 0


def test_suite_named():
    checks = run_theorem_suite(
        parse_corpus("named:KUSHILEVITZ,MAJ:3,ADDR:2,MAF:3,PARITY:4")
    )
    assert suite_failures(checks) == 0


def test_suite_monotone_three():
    checks = run_theorem_suite(parse_corpus("monotone:3"))
    assert suite_failures(checks) == 0
    by_id = {c.check_id: c for c in checks}
    assert by_id["mono_s_bs_C"].checked == 20
    assert by_id["adeg"].checked == 20


def test_suite_random_corpus():
    checks = run_theorem_suite(parse_corpus("random:5:40:3"))
    assert suite_failures(checks) == 0


def test_theorem_check_row_format():
    checks = run_theorem_suite(parse_corpus("named:MAJ:3"))
    row = checks[0].row()
    assert row.split("\t")[0] == "chain"
    assert row.split("\t")[1] == "pass"
