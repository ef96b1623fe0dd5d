"""Acceptance suite: one test per criterion, each printing a pass line.

Every assertion is exact (rational arithmetic end to end); the time
budgets are generous upper bounds asserted on wall-clock runtime.
"""

import time
from collections import Counter

from cycsurf.signature import (PRESERVING, REVERSING,
                               enumerate_quotient_signatures,
                               orbifold_euler_characteristic)
from cycsurf.classify import classify, classify_all, max_order, verify_class
from cycsurf.extend import (decide_all, map_order, map_type, parse_word,
                            max_order_realization, quarter_turn_pair,
                            types_for)
from cycsurf.catalog import crosscheck, expected_brackets, load_catalog
from cycsurf.cover import build_cover, formula_fixed_points


def _passed(k, label):
    print("\n[acceptance] criterion %d (%s): PASS" % (k, label))


def test_criterion_1_golden_table_reproduction():
    t0 = time.monotonic()
    classes = classify_all(2, "paper")
    assert len(classes) == 21
    names = [c.name for c in classes]
    assert None not in names and len(set(names)) == 21
    assert set(names) == set(load_catalog().names())
    orders = Counter(c.order for c in classes)
    assert orders == Counter({2: 7, 3: 1, 4: 3, 5: 1, 6: 5, 8: 2, 10: 1, 12: 1})
    report = crosscheck(classes, None, mode="paper")
    assert report.fully_matched() and len(report.matched) == 21
    elapsed = time.monotonic() - t0
    assert elapsed < 10
    _passed(1, "21-class table, %.2fs" % elapsed)


def test_criterion_2_strict_mode_adjudication():
    t0 = time.monotonic()
    classes = classify_all(2, "strict")
    assert len(classes) == 20
    report = crosscheck(classes, None, mode="strict")
    assert report.missing_in_enumeration == ["tau_{4,2}"]
    assert report.missing_in_catalog == []
    note = report.adjudications["tau_{4,2}"]
    assert "orientation-character parity" in note
    assert "orientable=False" in note and "connected=True" in note
    assert report.exit_code() == 0
    elapsed = time.monotonic() - t0
    assert elapsed < 10
    _passed(2, "strict diff names tau_{4,2} with oracle note, %.2fs" % elapsed)


def test_criterion_3_extendability_brackets():
    t0 = time.monotonic()
    classes = classify_all(2, "paper")
    verdicts = decide_all(classes)
    expected = expected_brackets()
    for c in classes:
        assert verdicts[id(c)].summary == expected[c.name], c.name

    rules = decide_all(classes, rules_only=True)
    by_name = {c.name: rules[id(c)] for c in classes}
    for c in classes:
        v = rules[id(c)]
        for tname in types_for(c.character):
            assert v.types[tname][0] in ("open", "ruled_out")
    for name in ("rho_5", "rho_8", "tau_8", "rho_10"):
        assert by_name[name].summary == "empty", name
    assert by_name["rho_{2,1}"].types["pm"][0] == "ruled_out"
    assert by_name["tau_{2,3}"].types["mm"][0] == "ruled_out"
    assert by_name["tau_{2,4}"].types["mp"][0] == "ruled_out"
    assert by_name["tau_{2,4}"].types["mm"][0] == "ruled_out"
    assert by_name["tau_{2,5}"].types["mp"][0] == "ruled_out"
    elapsed = time.monotonic() - t0
    assert elapsed < 10
    _passed(3, "brackets and rules-only negatives, %.2fs" % elapsed)


def test_criterion_4_construction_evaluator():
    for g in (2, 4, 6):
        tau = quarter_turn_pair(g)
        assert map_order(tau) == 4 * (g + 1)
        assert map_type(tau, g) == (-1, 1)
    assert map_order(parse_word("sigma*tau", 2)) == 6
    assert map_type(parse_word("sigma*tau", 2), 2) == (1, -1)
    assert map_order(parse_word("sigma*tau^4", 2)) == 6
    assert map_type(parse_word("sigma*tau^4", 2), 2) == (-1, -1)
    assert map_order(parse_word("rho", 2)) == 2
    assert map_type(parse_word("rho", 2), 2) == (1, 1)
    _passed(4, "family orders and types exact")


def test_criterion_5_max_order_corollaries():
    t0 = time.monotonic()
    for g in (2, 3, 4):
        assert max_order(g, PRESERVING)[0] == 4 * g + 2, g
        expected = 4 * g + 4 if g % 2 == 0 else 4 * g + 2
        assert max_order(g, "any")[0] == expected, g
    for g in (2, 4, 6):
        cls, word, (eps_sigma, eps_s) = max_order_realization(g)
        assert cls.order == 4 * g + 4
        assert map_order(quarter_turn_pair(g)) == 4 * g + 4
        assert eps_sigma == -1 and cls.character == REVERSING
    elapsed = time.monotonic() - t0
    assert elapsed < 120
    _passed(5, "max orders and even-genus witnesses, %.2fs" % elapsed)


def test_criterion_6_nonextendable_involutions():
    from cycsurf.extend import base_obstructions
    for g in range(2, 7):
        hit = False
        for c in classify(g, 2, REVERSING, "strict"):
            statuses = base_obstructions(c)
            if all(statuses[t][0] == "ruled_out" and statuses[t][1] != "R-char"
                   for t in types_for(REVERSING)):
                hit = True
                break
        assert hit, "no rules-only non-extendable involution at genus %d" % g
    _passed(6, "order-2 reversing class ruled out by rules alone, g=2..6")


def test_criterion_7_oracle_suite_genus_up_to_3():
    t0 = time.monotonic()
    for g in (2, 3):
        for c in classify_all(g, "strict", attach_names=False):
            report = verify_class(c)
            assert report["chi"] == 2 - 2 * g
            assert report["orientable"] and report["connected"]
            assert report["mismatches"] == []
            cov = build_cover(c.epi)
            for d in range(1, c.order):
                assert cov.fixed_point_count(d) == formula_fixed_points(c.epi, d)
        for n in range(2, 4 * g + 5):
            for character in (PRESERVING, REVERSING):
                if character == REVERSING and n % 2:
                    continue
                for sig in enumerate_quotient_signatures(g, n, character):
                    assert n * orbifold_euler_characteristic(sig) == 2 - 2 * g
    elapsed = time.monotonic() - t0
    assert elapsed < 60
    _passed(7, "oracle suite g<=3, %.2fs" % elapsed)


def test_criterion_8_emptiness():
    for n in (7, 9, 11):
        assert classify(2, n, PRESERVING, "paper") == []
    for n in range(13, 25):
        for character in (PRESERVING, REVERSING):
            if character == REVERSING and n % 2:
                continue
            assert classify(2, n, character, "paper") == []
            assert classify(2, n, character, "strict") == []
    _passed(8, "no actions at orders 7, 9, 11 or 13..24")
