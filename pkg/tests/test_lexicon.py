import re

import pytest

from snacs_hi.hierarchy import ConstrualLabel
from snacs_hi.lexicon import (
    DEFAULT_LEXICON_PATH,
    GAP,
    TABLE1_COLUMNS,
    TABLE1_FUNCTIONS,
)

# the matrix of basic spatio-temporal functions, row per marker column
EXPECTED_TABLE1 = {
    "obl": {"Goal", "Extent", "Time", "Duration"},
    "meṁ": {"Circumstance", "Locus", "Time", "Duration"},
    "par": {"Circumstance", "Locus", "Time"},
    "se": {"Source", "StartTime"},
    "tak": {"Goal", "Extent", "EndTime"},
    "ko": {"Goal", "Time"},
    "ke_liye": {"Circumstance", "Extent", "Duration"},
}


def test_lookup(lexicon):
    assert lexicon.lookup("ne").category == "case-marker"
    entry = lexicon.lookup("ke_āspās")
    assert any(str(l.construal) == "Approximator" for l in entry.licenses)
    assert lexicon.lookup("zzz") is None


def test_lookup_falls_back_to_surface_keys(lexicon):
    assert lexicon.lookup("ke_lie").lemma == "ke_liye"
    assert lexicon.lookup("pe").lemma == "par"
    assert lexicon.lookup("OBL").lemma == "obl"


def test_normalize_surface(lexicon):
    assert lexicon.normalize_surface(["kī"]) == "kā"
    assert lexicon.normalize_surface(["tumhāre", "liye"]) == "ke_liye"
    assert lexicon.normalize_surface(["merā"]) == "kā"
    assert lexicon.normalize_surface(["binā", "ke"]) == "ke_binā"
    assert lexicon.normalize_surface(["choṭā-vālā"]) == "vālā"
    assert lexicon.normalize_surface(["zzz"]) is None


def test_normalize_surface_is_single_valued(lexicon):
    seen = {}
    for entry in lexicon:
        for variant in entry.variants:
            key = variant.matched_tokens
            assert seen.setdefault(key, entry.lemma) == entry.lemma
            assert lexicon.normalize_surface(key) == entry.lemma


def test_licensed_construals(lexicon):
    se = {str(c) for c in lexicon.licensed_construals("se")}
    for expected in [
        "Source", "StartTime", "Instrument", "Agent", "Means", "Manner",
        "ComparisonRef", "Locus↝Source", "Stimulus↝Source",
        "Recipient↝Source", "Originator↝Source", "Causer↝Source",
    ]:
        assert expected in se
    assert [str(c) for c in lexicon.licensed_construals("prati")] == ["RateUnit"]
    assert [str(c) for c in lexicon.licensed_construals("hī")] == ["Focus"]
    with pytest.raises(KeyError):
        lexicon.licensed_construals("zzz")


def test_allowed_functions_rows(lexicon):
    assert {f for f, v in lexicon.allowed_functions("tak").items() if v} == {
        "Goal", "Extent", "EndTime"}
    assert {f for f, v in lexicon.allowed_functions("ko").items() if v} == {"Goal", "Time"}
    assert {f for f, v in lexicon.allowed_functions("meṁ").items() if v} == {
        "Circumstance", "Locus", "Time", "Duration"}


def test_allowed_functions_full_matrix(lexicon):
    positives = 0
    for column in TABLE1_COLUMNS:
        row = lexicon.allowed_functions(column)
        assert set(row) == set(TABLE1_FUNCTIONS)
        assert {f for f, v in row.items() if v} == EXPECTED_TABLE1[column], column
        positives += sum(row.values())
    assert positives == 21


def test_allowed_functions_rejects_non_columns(lexicon):
    with pytest.raises(KeyError):
        lexicon.allowed_functions("kā")


def test_motion_adverbs_license_direction(lexicon):
    adverbs = ["āge", "sāmne", "ūpar", "pīche", "bāhar", "nīce", "dāyeṁ",
               "dāhine", "sīdhe", "bāyeṁ", "ulṭe", "dūr", "pās", "qarīb", "nazdīk"]
    for lemma in adverbs:
        construals = {str(c) for c in lexicon.licensed_construals(lemma)}
        assert "Direction" in construals, lemma


def test_variant_invariants(lexicon):
    for entry in lexicon:
        discontinuous = False
        for variant in entry.variants:
            gaps = [t for t in variant.surface_tokens if t == GAP]
            assert len(gaps) <= 1
            if gaps:
                assert variant.surface_tokens[0] != GAP
                assert variant.surface_tokens[-1] != GAP
                discontinuous = True
        assert (entry.category == "circumposition") == discontinuous, entry.lemma


def test_licenses_unique_and_in_hierarchy(lexicon, hierarchy):
    for entry in lexicon:
        assert entry.licenses, entry.lemma
        seen = set()
        for lic in entry.licenses:
            assert hierarchy.validate_construal(lic.construal), entry.lemma
            key = str(lic.construal)
            assert key not in seen, (entry.lemma, key)
            seen.add(key)


def test_register_pairs_are_symmetric(lexicon):
    for entry in lexicon:
        if entry.register_pair:
            other = lexicon.lookup(entry.register_pair)
            assert other is not None
            assert other.register_pair == entry.lemma


def test_no_ne_locus_row_in_data_file():
    # independent scan of the raw data file, bypassing the Lexicon class
    rows = []
    for line in DEFAULT_LEXICON_PATH.read_text(encoding="utf-8").splitlines():
        if line.startswith("#") or not line.strip():
            continue
        cols = line.split("\t")
        rows.append((cols[0], cols[3], cols[4]))
    assert ("ne", "Locus", "Locus") not in rows
    assert not any(r[0] == "ne" and r[2] == "Locus" for r in rows)
    # but the congruent ergative row is there
    assert ("ne", "Agent", "Agent") in rows


def test_open_scene_markers(lexicon):
    assert "Agent" in lexicon.open_scene_functions("se")
    assert "Agent" in lexicon.open_scene_functions("dvārā")
    assert "Recipient" not in lexicon.open_scene_functions("ko")
