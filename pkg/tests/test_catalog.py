from cycsurf.classify import classify_all
from cycsurf.extend import decide_all
from cycsurf.catalog import crosscheck, expected_brackets, load_catalog
from cycsurf.epimorphism import canonicalize
from cycsurf.cover import verify_cover


def test_catalog_has_21_unique_names():
    cat = load_catalog()
    names = cat.names()
    assert len(names) == 21
    assert len(set(names)) == 21
    orders = sorted(e.order for e in cat.entries)
    assert orders == [2] * 7 + [3] + [4] * 3 + [5] + [6] * 5 + [8] * 2 + [10, 12]


def test_entries_round_trip_through_parsers():
    cat = load_catalog()
    for entry in cat.entries:
        sig = entry.signature()
        epi = entry.epimorphism()
        assert epi.signature == sig
        assert epi.n == entry.order
        canonicalize(epi)  # must be a well-formed datum


def test_every_fact_id_resolves():
    cat = load_catalog()
    for entry in cat.entries:
        for _, status, fid in entry.facts:
            assert status in ("realized", "ruled_out")
            assert fid in cat.facts, fid


def test_brackets_cover_all_entries():
    brackets = expected_brackets()
    assert set(brackets.values()) <= {"+", "-", "+-", "empty"}
    assert brackets["tau_{4,2}"] == "empty"
    assert brackets["tau_12"] == "+"


def test_crosscheck_paper_mode_fully_matched():
    classes = classify_all(2, "paper")
    verdicts = decide_all(classes)
    report = crosscheck(classes, verdicts, mode="paper")
    assert report.fully_matched()
    assert len(report.matched) == 21
    assert report.exit_code() == 0


def test_crosscheck_strict_mode_has_documented_diff_only():
    classes = classify_all(2, "strict")
    verdicts = decide_all(classes)
    report = crosscheck(classes, verdicts, mode="strict")
    assert report.missing_in_enumeration == ["tau_{4,2}"]
    assert report.missing_in_catalog == []
    assert report.verdict_mismatches == []
    assert report.documented_diff_only()
    assert report.exit_code() == 0
    note = report.adjudications["tau_{4,2}"]
    assert "parity" in note and "orientable=False" in note


def test_crosscheck_empty_input_reports_all_missing():
    report = crosscheck([], None, mode="paper")
    assert len(report.missing_in_enumeration) == 21
    assert report.exit_code() == 1


def test_crosscheck_flags_verdict_mismatch():
    classes = classify_all(2, "paper")
    verdicts = decide_all(classes)
    (victim,) = [c for c in classes if c.name == "tau_12"]
    verdicts[id(victim)].summary = "empty"
    report = crosscheck(classes, verdicts, mode="paper")
    assert report.verdict_mismatches == [("tau_12", "+", "empty")]
    assert report.exit_code() == 1


def test_parity_tension_datum_builds_nonorientable_cover():
    cat = load_catalog()
    entry = cat.by_name("tau_{4,2}")
    assert "parity-tension" in entry.notes
    report = verify_cover(entry.epimorphism())
    assert report["connected"] and report["chi"] == -2
    assert not report["orientable"]
