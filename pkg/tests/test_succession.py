from collections import Counter

import pytest

from fibcat.errors import BadParameter, RuleError
from fibcat.patterns import get_class
from fibcat.succession import (
    L,
    Label,
    SuccessionRule,
    cat1_rule,
    direct_rule,
    evf1_rule,
    evf2_rule,
    gfib2_rule,
    gfib_rule,
    level_counts,
    level_labels,
    make_rule,
    omega_rule,
    pow2_rule,
    rs2fin,
    rscat,
    rsfibo,
    verify_rule,
)

ALL_RULES = [
    rscat(), rsfibo(), rs2fin(), pow2_rule(),
    *[gfib_rule(k) for k in range(2, 7)],
    *[cat1_rule(k) for k in range(2, 7)],
    *[gfib2_rule(k) for k in range(2, 7)],
    *[omega_rule(k) for k in range(3, 7)],
    *[direct_rule(k) for k in range(2, 7)],
    *[evf1_rule(k) for k in range(3, 7)],
    *[evf2_rule(k) for k in range(3, 7)],
]


def test_base_rules():
    assert level_counts(rsfibo(), 8) == [1, 1, 2, 3, 5, 8, 13, 21, 34]
    assert level_counts(rs2fin(), 5) == [1, 1, 2, 4, 8, 16]
    assert level_counts(rscat(), 6) == [1, 1, 2, 5, 14, 42, 132]
    assert level_counts(pow2_rule(), 6) == [1, 1, 2, 4, 8, 16, 32]


def test_catalog_rule_examples():
    assert level_counts(gfib_rule(3), 6) == [1, 1, 2, 4, 7, 13, 24]
    assert level_counts(cat1_rule(3), 6) == [1, 1, 2, 5, 13, 34, 89]
    assert level_counts(evf1_rule(3), 6) == [1, 1, 2, 5, 12, 29, 70]
    assert level_counts(direct_rule(3), 6) == [1, 1, 2, 5, 12, 29, 70]


def test_small_k_specializations():
    # the k=2 / k=3 members collapse to the simpler displayed rules
    assert gfib_rule(2).display() == "(1)\n(1) ~> (2_0)\n(2_0) ~> (2_0)(1)"
    assert cat1_rule(2).display() == rs2fin().display()
    assert gfib2_rule(2).display() == rsfibo().display()
    assert direct_rule(2).display() == rsfibo().display()
    assert gfib2_rule(3).display() == "(1)\n(1) ~> (2)\n(2) ~> (1)(3)\n(3) ~> (1)(1)(3)"
    assert direct_rule(3).display() == "(1)\n(1) ~> (2)\n(2) ~> (2)(3)\n(3) ~> (2)(2)(3)"
    assert evf2_rule(3).display() == direct_rule(3).display()
    for lab in map(Label, range(1, 12)):
        assert omega_rule(3).sons(lab) == (L(2),) * (lab.value - 1) + (L(lab.value + 1),)


def test_gfib_display_k3():
    assert gfib_rule(3).display() == "(1)\n(1) ~> (2_0)\n(2_0) ~> (2_0)(2_1)\n(2_1) ~> (2_0)(1)"


@pytest.mark.parametrize("rule", ALL_RULES, ids=lambda r: r.name)
def test_conservation_and_axiom(rule):
    levels = level_labels(rule, 9)
    counts = level_counts(rule, 9)
    assert counts[0] == 1 and counts[1] == 1
    for n in range(9):
        assert counts[n + 1] == sum(lab.value * m for lab, m in levels[n].items())
        assert all(lab.value >= 1 for lab in levels[n])


def test_unbounded_rules_are_not_finite():
    assert not rscat().finite and not omega_rule(4).finite and not pow2_rule().finite
    assert gfib_rule(5).finite and evf1_rule(5).finite and cat1_rule(4).finite


def test_label_bound_grows_by_one_value_per_level():
    for rule in (rscat(), omega_rule(3), pow2_rule()):
        for n in range(8):
            assert max(lab.value for lab in rule.label_bound(n)) <= n + 2


def test_undefined_label_is_named():
    with pytest.raises(RuleError, match=r"\(7\)"):
        rsfibo().sons(L(7))
    with pytest.raises(RuleError, match=r"\(2_5\)"):
        gfib_rule(3).sons(L(2, 5))
    broken = SuccessionRule("broken", {L(1): (L(3),)}.__getitem__)
    with pytest.raises(RuleError):
        level_counts(broken, 3)


def test_production_size_must_match_label():
    bad = SuccessionRule("bad", {L(1): (L(2),), L(2): (L(2),)}.__getitem__)
    with pytest.raises(RuleError):
        level_counts(bad, 3)


def test_inadmissible_k():
    with pytest.raises(BadParameter):
        gfib_rule(1)
    with pytest.raises(BadParameter):
        evf1_rule(2)
    with pytest.raises(BadParameter):
        omega_rule(2)
    with pytest.raises(BadParameter):
        make_rule("cat1")
    with pytest.raises(BadParameter):
        make_rule("nope", 3)
    assert make_rule("direct:3").name == "direct(3)"


def test_verify_rule_fibonacci_class():
    rep = verify_rule(rsfibo(), get_class("FIB"), 8)
    assert rep.ok and rep.first_mismatch() is None
    assert [lv.rule_count for lv in rep.levels] == [1, 1, 2, 3, 5, 8, 13, 21, 34]


def test_verify_rule_reports_fib312_mismatch():
    rep = verify_rule(rsfibo(), get_class("FIB312"), 8)
    assert not rep.ok
    # counts part ways at n=4 (5 vs 4); son-count distributions already at n=3
    assert [lv.counts_equal for lv in rep.levels][:5] == [True] * 4 + [False]
    assert rep.first_mismatch() == 3


@pytest.mark.parametrize("k", [3, 4])
def test_verify_cat1(k):
    assert verify_rule(cat1_rule(k), get_class("CAT1", k), 8).ok


def test_verify_omega3():
    assert verify_rule(omega_rule(3), get_class("CAT2", 3), 8).ok


def test_verify_rule_label_distribution_detail():
    rep = verify_rule(rscat(), get_class("CATALAN"), 3)
    assert rep.levels[2].labels_eco == Counter({2: 1, 3: 1})
    assert rep.levels[2].labels_rule == Counter({2: 1, 3: 1})


def _evf1_prose(k):
    # the case analysis in words: the (3_{k-3}) son at the third site has
    # r = k-2, only two active sites and label (2)
    def produce(lab):
        if lab == L(1):
            return (L(2),)
        if lab == L(2):
            return (L(2), L(3, 0))
        j = lab.sub
        return (L(2), L(3, 0), L(2) if j == k - 3 else L(3, j + 1))

    return SuccessionRule(f"evf1-prose({k})", produce)


@pytest.mark.parametrize("k", range(3, 7))
def test_evf1_readings_agree(k):
    assert level_counts(_evf1_prose(k), 10) == level_counts(evf1_rule(k), 10)
