import pytest

from snacs_hi.hierarchy import ConstrualLabel
from snacs_hi.matcher import AdpositionTarget, Sentence
from snacs_hi.validator import AnnotationRecord, ValidationIssue


def record(lemma, label, indices=(0,), surface=None, sent_id="s1", annotator="a1"):
    surface = surface if surface is not None else (lemma,)
    return AnnotationRecord(
        target=AdpositionTarget(tuple(indices), lemma, tuple(surface)),
        construal=ConstrualLabel.parse(label),
        annotator=annotator,
        sent_id=sent_id,
    )


def test_licensed_pairs_pass(validator):
    assert validator.validate(record("ko", "Recipient")) == []
    assert validator.validate(record("se", "Locus~>Source")) == []
    assert validator.validate(record("ke_bāre_meṁ", "Topic")) == []


def test_unlicensed_is_error(validator):
    issues = validator.validate(record("ne", "Locus"))
    assert [i.code for i in issues] == ["UNLICENSED_CONSTRUAL"]
    assert issues[0].severity == "error"


def test_unknown_label_is_error(validator):
    issues = validator.validate(record("ko", "Blorp"))
    assert [i.code for i in issues] == ["UNKNOWN_LABEL"]


def test_unknown_lemma_is_error(validator):
    issues = validator.validate(record("zzz", "Locus"))
    assert [i.code for i in issues] == ["UNKNOWN_LEMMA"]


def test_novel_scene_downgrades_to_warning(validator):
    # Agent is an open-scene function for passive se; Theme~>Agent is unlisted
    issues = validator.validate(record("se", "Theme~>Agent"))
    assert [(i.severity, i.code) for i in issues] == [("warning", "NOVEL_SCENE")]
    # but for a closed-function lemma the same shape is an error
    issues = validator.validate(record("hī", "Theme~>Focus"))
    assert [(i.severity, i.code) for i in issues] == [("error", "UNLICENSED_CONSTRUAL")]


def test_malformed_target_out_of_bounds(validator):
    sentence = Sentence(("mez", "ko"), "s1")
    bad = record("ko", "Theme", indices=(5,), surface=("ko",))
    issues = validator.validate(bad, sentence)
    assert [i.code for i in issues] == ["MALFORMED_TARGET"]


def test_malformed_target_wrong_lemma_resolution(validator):
    sentence = Sentence(("mez", "ko"), "s1")
    bad = record("se", "Source", indices=(1,), surface=("ko",))
    issues = validator.validate(bad, sentence)
    assert [i.code for i in issues] == ["MALFORMED_TARGET"]


def test_validate_document_overlap(validator):
    sentences = {"s1": Sentence(("ke", "bāre", "meṁ", "bāt"), "s1")}
    full = record("ke_bāre_meṁ", "Topic", indices=(0, 1, 2), surface=("ke", "bāre", "meṁ"))
    sub = record("meṁ", "Locus", indices=(2,), surface=("meṁ",))
    issues = validator.validate_document([full, sub], sentences)
    assert "OVERLAP" in [i.code for i in issues]


def test_validate_document_duplicate(validator):
    sentences = {"s1": Sentence(("mez", "ko", "sāf", "karo"), "s1")}
    a = record("ko", "Theme", indices=(1,), surface=("ko",))
    b = record("ko", "Theme", indices=(1,), surface=("ko",))
    issues = validator.validate_document([a, b], sentences)
    assert [i.code for i in issues] == ["DUPLICATE"]
    # same target, different annotators: double annotation is fine
    c = record("ko", "Theme", indices=(1,), surface=("ko",), annotator="a2")
    assert validator.validate_document([a, c], sentences) == []


def test_validate_document_empty(validator):
    assert validator.validate_document([], {}) == []


def test_gold_document_is_sound(validator, gold_doc):
    issues = validator.validate_document(gold_doc.records, gold_doc.sentence_map())
    assert issues == []


def test_suggest_ordering(validator):
    target = AdpositionTarget((0, 1, 2), "ke_bāre_meṁ", ("ke", "bāre", "meṁ"))
    suggestions, issues = validator.suggest(target)
    assert not issues
    assert str(suggestions[0].construal) == "Topic"

    target = AdpositionTarget((0, 1), "kī_taraf", ("kī", "taraf"))
    suggestions, _ = validator.suggest(target)
    assert str(suggestions[0].construal) == "Direction"

    target = AdpositionTarget((0,), "tak", ("tak",))
    suggestions, _ = validator.suggest(target)
    labels = {str(s.construal) for s in suggestions}
    assert {"Goal", "Extent", "EndTime", "Focus"} <= labels


def test_suggest_unknown_lemma(validator):
    suggestions, issues = validator.suggest(AdpositionTarget((0,), "zzz", ("zzz",)))
    assert suggestions == []
    assert [(i.severity, i.code) for i in issues] == [("warning", "UNKNOWN_LEMMA")]


def test_suggest_equals_licensed_set(validator, lexicon):
    for lemma in ("se", "ko", "kā", "vālā", "ke_binā"):
        target = AdpositionTarget((0,), lemma, (lemma,))
        suggestions, _ = validator.suggest(target)
        assert [s.construal for s in suggestions] == lexicon.licensed_construals(lemma)
        ranks = [s.rank for s in suggestions]
        assert ranks == sorted(ranks)


def test_suggestions_carry_anchor_and_condition(validator):
    suggestions, _ = validator.suggest(AdpositionTarget((0,), "ko", ("ko",)))
    top = suggestions[0]
    assert top.anchor.startswith("§")
    assert top.condition


def test_diagnostics_ko_drop_test(validator):
    checklists = validator.diagnostics_for("ko")
    assert len(checklists) == 1
    drop = checklists[0]
    assert len(drop.outcome_map) == 2
    assert str(drop.outcome_map["droppable"]) == "Theme"
    assert str(drop.outcome_map["not droppable"]) == "Recipient"


def test_diagnostics_jaise_paraphrase(validator):
    (paraphrase,) = validator.diagnostics_for("jaise")
    assert str(paraphrase.outcome_map["paraphrase works"]) == "Theme↝ComparisonRef"
    assert str(paraphrase.outcome_map["paraphrase fails"]) == "Manner↝ComparisonRef"


def test_diagnostics_registered_keys(validator):
    assert validator.diagnostics_for("ne") == []
    assert len(validator.diagnostics_for("ke_binā")) == 2
    assert validator.diagnostics_for("ke_liye")
    assert validator.diagnostics_for("kā")
    (approx,) = validator.diagnostics_for("Approximator")
    assert str(approx.outcome_map["predicate with copula"]) == "ComparisonRef↝Locus"


def test_checklist_outcomes_licensed(validator, lexicon):
    for checklist in validator.checklists:
        for outcome in checklist.outcome_map.values():
            if checklist.key in lexicon.entries:
                assert lexicon.is_licensed(checklist.key, outcome), checklist.title


def test_issue_codes_closed_registry():
    with pytest.raises(ValueError):
        ValidationIssue("error", "MADE_UP_CODE", "nope")


def test_deterministic(validator, gold_doc):
    sentences = gold_doc.sentence_map()
    first = validator.validate_document(gold_doc.records, sentences)
    second = validator.validate_document(gold_doc.records, sentences)
    assert first == second
