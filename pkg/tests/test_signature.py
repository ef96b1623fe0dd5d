from fractions import Fraction

import pytest

from cycsurf.signature import (OrbifoldSignature, PRESERVING, REVERSING,
                               enumerate_quotient_signatures, format_signature,
                               orbifold_euler_characteristic, parse_signature)


def chi(text):
    return orbifold_euler_characteristic(parse_signature(text))


def test_euler_characteristic_examples():
    assert chi("S2(2,2,2,2,2,2)") == Fraction(-1)
    assert chi("S2(5,5,5)") == Fraction(-2, 5)
    assert chi("S2") == Fraction(2)
    # disc with one reflector circle and two index-3 cones
    assert chi("D(3,3)|m1") == Fraction(-1, 3)
    assert chi("T(2,2)") == Fraction(-1)
    assert chi("N3") == Fraction(-1)


def test_euler_characteristic_is_exact():
    value = chi("S2(7,7,7)")
    assert isinstance(value, Fraction)
    assert value == 2 - 3 * Fraction(6, 7)


def test_signature_normalizes_and_validates():
    sig = OrbifoldSignature(True, 0, (4, 2, 3))
    assert sig.cone_indices == (2, 3, 4)
    with pytest.raises(ValueError):
        OrbifoldSignature(True, 0, (1,))
    with pytest.raises(ValueError):
        OrbifoldSignature(False, 0)


def test_text_round_trip():
    texts = ["S2(2,2,3,3)", "T(2,2)", "N1(2,3)", "D(3,3)|m1", "S2|m3",
             "T|m1", "N2|m1", "N3", "T3(2,2)", "S2(3,3)|m2"]
    for text in texts:
        assert format_signature(parse_signature(text)) == text
    # the disc alias is only a rendering of sphere-with-one-mirror
    assert parse_signature("S2(3,3)|m1") == parse_signature("D(3,3)|m1")


def test_text_round_trip_exhaustive():
    for g in (2, 3):
        for n in range(2, 4 * g + 5):
            for character in (PRESERVING, REVERSING):
                if character == REVERSING and n % 2:
                    continue
                for sig in enumerate_quotient_signatures(g, n, character):
                    assert parse_signature(format_signature(sig)) == sig


def test_enumerate_examples():
    got = enumerate_quotient_signatures(2, 2, PRESERVING)
    assert [format_signature(s) for s in got] == ["S2(2,2,2,2,2,2)", "T(2,2)"]

    assert enumerate_quotient_signatures(2, 7, PRESERVING) == []

    got = {format_signature(s) for s in enumerate_quotient_signatures(2, 2, REVERSING)}
    assert got == {"N3", "T|m1", "N2|m1", "N1|m2", "S2|m3"}

    # n/2 even excludes mirrors entirely
    got = enumerate_quotient_signatures(2, 4, REVERSING)
    assert all(s.mirror_circles == 0 for s in got)
    assert {format_signature(s) for s in got} == {"N1(2,2,2)", "N2(2)"}


def test_reversing_odd_order_rejected():
    with pytest.raises(ValueError):
        enumerate_quotient_signatures(2, 3, REVERSING)


def test_riemann_hurwitz_and_local_rules_hold():
    for g in (2, 3):
        for n in range(2, 13):
            for character in (PRESERVING, REVERSING):
                if character == REVERSING and n % 2:
                    continue
                sigs = enumerate_quotient_signatures(g, n, character)
                assert len(set(sigs)) == len(sigs)
                assert sigs == enumerate_quotient_signatures(g, n, character)
                for sig in sigs:
                    assert n * orbifold_euler_characteristic(sig) == 2 - 2 * g
                    cap = n if character == PRESERVING else n // 2
                    assert all(cap % q == 0 for q in sig.cone_indices)
                    if character == PRESERVING:
                        assert sig.orientable and sig.mirror_circles == 0
                    else:
                        assert (not sig.orientable) or sig.mirror_circles > 0
                    if sig.mirror_circles:
                        assert (n // 2) % 2 == 1


def brute_force_signatures(g, n, character, pad=0):
    """Independent exhaustive scan inside the documented box (plus padding)."""
    target = Fraction(2 - 2 * g, n)
    cap = n if character == PRESERVING else n // 2
    qs = [q for q in range(2, n + 1) if cap % q == 0]
    mirrors_ok = character == REVERSING and n % 2 == 0 and (n // 2) % 2 == 1
    found = set()

    def cones(budget, smallest, acc):
        if budget == 0:
            yield tuple(acc)
        if len(acc) >= 2 * g + 2 + pad:
            return
        for q in qs:
            if q < smallest:
                continue
            step = Fraction(q - 1, q)
            if step <= budget:
                yield from cones(budget - step, q, acc + [q])

    for orientable in (True, False):
        if character == PRESERVING and not orientable:
            continue
        counts = range(0, g + 1 + pad) if orientable else range(1, 2 * g + 3 + pad)
        for count in counts:
            for m in range(0, g + 2 + pad):
                if m and not mirrors_ok:
                    continue
                if character == PRESERVING and m:
                    continue
                if character == REVERSING and orientable and m == 0:
                    continue
                base = 2 - (2 * count if orientable else count) - m
                budget = Fraction(base) - target
                if budget < 0:
                    continue
                for cone_tuple in cones(budget, 2, []):
                    found.add(OrbifoldSignature(orientable, count, cone_tuple, m))
    return found


def test_brute_force_equivalence():
    for g in (2, 3):
        for n in range(2, 25):
            for character in (PRESERVING, REVERSING):
                if character == REVERSING and n % 2:
                    continue
                fast = set(enumerate_quotient_signatures(g, n, character))
                assert fast == brute_force_signatures(g, n, character), (g, n, character)


def test_scan_box_is_never_tight():
    # widening every documented bound by one finds nothing new
    for g in (2, 3):
        for n in (2, 4, 6, 12):
            for character in (PRESERVING, REVERSING):
                boxed = brute_force_signatures(g, n, character)
                widened = brute_force_signatures(g, n, character, pad=1)
                assert boxed == widened, (g, n, character)
                for sig in boxed:
                    assert sig.genus_or_crosscaps <= (g if sig.orientable else 2 * g + 2)
                    assert sig.mirror_circles <= g + 1
                    assert sig.cone_count <= 2 * g + 2
