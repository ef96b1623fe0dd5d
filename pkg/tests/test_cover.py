from fractions import Fraction

import pytest

from cycsurf.signature import (PRESERVING, REVERSING,
                               enumerate_quotient_signatures,
                               orbifold_euler_characteristic, parse_signature)
from cycsurf.epimorphism import (CyclicEpimorphism, _raw_assignments,
                                 check_admissible, enumerate_epimorphisms,
                                 parse_epimorphism)
from cycsurf.cover import (CoverConstructionError, build_cover,
                           formula_fixed_points, restrict_cover,
                           trivial_cover, verify_cover)


def test_sphere_555_cover():
    epi = parse_epimorphism("Z5 @ S2(5,5,5) : cones=[1,1,3]", PRESERVING)
    cov = build_cover(epi)
    assert cov.euler_characteristic() == -2
    assert cov.is_connected()
    orientable, signs = cov.orientation()
    assert orientable and signs is not None


def test_free_involution_cover():
    epi = parse_epimorphism("Z2 @ N3 : crosscaps=[1,1,1]", REVERSING)
    cov = build_cover(epi)
    assert cov.euler_characteristic() == -2
    assert cov.is_connected()
    assert cov.orientation()[0]


def test_trivial_cover_is_the_base():
    sig = parse_signature("N3")
    cov = trivial_cover(sig)
    assert cov.euler_characteristic() == -1
    assert not cov.orientation()[0]
    sig = parse_signature("T|m1")
    cov = trivial_cover(sig)
    assert cov.euler_characteristic() == -1
    assert cov.orientation()[0]
    assert len(cov.mirror_edges) == 1


def test_disconnected_input_raises():
    sig = parse_signature("S2(2,2,2,2)")
    epi = CyclicEpimorphism(sig, 4, PRESERVING, (2, 2, 2, 2))
    with pytest.raises(CoverConstructionError):
        build_cover(epi)


def test_riemann_hurwitz_cellwise_and_fixed_formula():
    for g in (2, 3):
        for n in range(2, 13):
            for character in (PRESERVING, REVERSING):
                if character == REVERSING and n % 2:
                    continue
                for sig in enumerate_quotient_signatures(g, n, character):
                    for epi in enumerate_epimorphisms(sig, n, character):
                        cov = build_cover(epi)
                        chi = cov.euler_characteristic()
                        assert Fraction(chi) == n * orbifold_euler_characteristic(sig)
                        assert cov.is_connected()
                        assert cov.orientation()[0]
                        for d in range(1, n):
                            assert cov.fixed_point_count(d) == \
                                formula_fixed_points(epi, d)


def test_orientable_iff_parity():
    checked = 0
    for g in (2, 3):
        for n in range(2, 17):
            for character in (PRESERVING, REVERSING):
                if character == REVERSING and n % 2:
                    continue
                for sig in enumerate_quotient_signatures(g, n, character):
                    for epi in _raw_assignments(sig, n, character,
                                                strict=False, relaxed=True):
                        if not check_admissible(epi, strict=False):
                            continue
                        cov = build_cover(epi)
                        assert cov.orientation()[0] == check_admissible(epi, strict=True)
                        checked += 1
    assert checked > 100


def test_klein_bottle_datum_cover_is_nonorientable():
    epi = parse_epimorphism("Z4 @ N2(2) : cones=[2]; crosscaps=[0,1]",
                            REVERSING, strict_parity=False)
    report = verify_cover(epi)
    assert report["chi"] == -2
    assert report["connected"]
    assert not report["orientable"]


def test_involution_circle_counts_on_disc_quotients():
    two_four = parse_epimorphism(
        "Z6 @ D(3,3)|m1 : cones=[2,4]; mirror=3; boundary=[0]", REVERSING)
    two_two = parse_epimorphism(
        "Z6 @ D(3,3)|m1 : cones=[2,2]; mirror=3; boundary=[2]", REVERSING)
    assert build_cover(two_four).fixed_mirror_circles(3) == 3
    assert build_cover(two_two).fixed_mirror_circles(3) == 1


def test_restrict_cover_subgroup_quotients():
    rho8 = parse_epimorphism("Z8 @ S2(2,8,8) : cones=[4,1,3]", PRESERVING)
    sub = restrict_cover(rho8, 2)
    assert str(sub.signature) == "S2(2,2,4,4)"
    assert sub.order == 4
    assert [q for q, _ in sub.cone_data] == [2, 2, 4, 4]

    tau12 = parse_epimorphism("Z12 @ N1(2,3) : cones=[6,4]; crosscaps=[1]",
                              REVERSING)
    assert str(restrict_cover(tau12, 2).signature) == "S2(2,2,3,3)"
    assert str(restrict_cover(tau12, 3).signature) == "N1(2,2,2)"
    assert str(restrict_cover(tau12, 6).signature) == "S2(2,2,2,2,2,2)"
    assert str(restrict_cover(tau12, 4).signature) == "S2(3,3,3,3)"


def test_restrict_cover_cone_signs_balance():
    # extracted cone images of an orientable quotient satisfy the relation
    tau12 = parse_epimorphism("Z12 @ N1(2,3) : cones=[6,4]; crosscaps=[1]",
                              REVERSING)
    sub = restrict_cover(tau12, 2)
    assert sum(img for _, img in sub.cone_data) % sub.order == 0
