"""Acceptance suite: one test per release criterion, one printed verdict each.

Run with `pytest -v tests/test_acceptance.py -s` to see the per-criterion
lines.  Every tolerance is pinned here, not configurable.
"""

import time

import pytest

from snacs_hi.corpus import parse_file, serialize
from snacs_hi.lexicon import TABLE1_COLUMNS, TABLE1_FUNCTIONS

from test_lexicon import EXPECTED_TABLE1
from translit_oracle import WORDLIST, oracle


def _verdict(name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"ACCEPTANCE {status}: {name}{suffix}")
    assert ok, f"{name}{suffix}"


def test_table1_matrix_exact(lexicon):
    started = time.perf_counter()
    positives = negatives = deviations = 0
    for column in TABLE1_COLUMNS:
        row = lexicon.allowed_functions(column)
        for function in TABLE1_FUNCTIONS:
            expected = function in EXPECTED_TABLE1[column]
            if row[function] != expected:
                deviations += 1
            if row[function]:
                positives += 1
            else:
                negatives += 1
    elapsed = time.perf_counter() - started
    ok = deviations == 0 and positives == 21 and negatives == 42 and elapsed < 1.0
    _verdict(
        "function matrix reproduced exactly",
        ok,
        f"{positives} positive / {negatives} negative cells, "
        f"{deviations} deviations, {elapsed:.3f}s",
    )


def test_gold_corpus_soundness(validator, hierarchy, gold_doc):
    started = time.perf_counter()
    issues = validator.validate_document(gold_doc.records, gold_doc.sentence_map())
    elapsed = time.perf_counter() - started

    records = gold_doc.records
    lemmas = {r.target.lemma for r in records}
    groups = set()
    for rec in records:
        groups.add(hierarchy.group_root(rec.construal.scene).group)
        groups.add(hierarchy.group_root(rec.construal.function).group)
    discontinuous = [r for r in records if r.target.discontinuous]
    fused = [r for r in records if _is_fused_surface(validator.lexicon, r)]
    ok = (
        len(issues) == 0
        and len(records) >= 60
        and len(lemmas) >= 25
        and {"Circumstance", "Participant", "Configuration", "Context"} <= groups
        and len(discontinuous) >= 1
        and len(fused) >= 3
        and elapsed < 5.0
    )
    _verdict(
        "gold corpus validates clean",
        ok,
        f"{len(records)} records, {len(lemmas)} lemmas, groups={sorted(groups)}, "
        f"{len(discontinuous)} discontinuous, {len(fused)} fused surfaces, "
        f"{len(issues)} issues, {elapsed:.3f}s",
    )


def _is_fused_surface(lexicon, record) -> bool:
    """True when the record's surface is a fused pronoun+marker variant."""
    from snacs_hi.translit import normalize_key

    entry = lexicon.entries.get(record.target.lemma)
    if not entry:
        return False
    surface = tuple(normalize_key(t) for t in record.target.surface)
    return any(
        v.kind == "fused-pronoun" and v.matched_tokens == surface for v in entry.variants
    )


def test_mutation_sensitivity(validator, hierarchy, lexicon, gold_doc):
    from snacs_hi.hierarchy import ConstrualLabel
    from snacs_hi.validator import AnnotationRecord

    all_labels = sorted(n.name for n in hierarchy)
    total = rejected = 0
    for rec in gold_doc.records:
        licensed_functions = {
            lic.construal.function for lic in lexicon.entries[rec.target.lemma].licenses
        }
        for alternative in all_labels:
            if alternative in licensed_functions:
                continue
            mutated = AnnotationRecord(
                target=rec.target,
                construal=ConstrualLabel(rec.construal.scene, alternative),
                annotator=rec.annotator,
                status=rec.status,
                sent_id=rec.sent_id,
            )
            total += 1
            issues = validator.validate(mutated)
            if any(i.severity == "error" for i in issues):
                rejected += 1
    rate = rejected / total if total else 0.0
    _verdict(
        "mutation rejection rate is 100%",
        rejected == total and total > 0,
        f"{rejected}/{total} mutations rejected ({rate:.2%})",
    )


def test_matcher_recall_on_gold(matcher, gold_doc):
    sent_map = gold_doc.sentence_map()
    total = found = 0
    overlaps = 0
    special_cases = {"ke_binā_discontinuous": False, "ke_bāre_meṁ_span3": False}
    for rec in gold_doc.records:
        total += 1
        targets = matcher.find_targets(sent_map[rec.sent_id])
        hit = any(
            t.token_indices == rec.target.token_indices and t.lemma == rec.target.lemma
            for t in targets
        )
        if hit:
            found += 1
            if rec.target.lemma == "ke_binā" and rec.target.discontinuous:
                special_cases["ke_binā_discontinuous"] = True
            if rec.target.lemma == "ke_bāre_meṁ" and len(rec.target.token_indices) == 3:
                special_cases["ke_bāre_meṁ_span3"] = True
    for sentence in gold_doc.sentences:
        used = set()
        for t in matcher.find_targets(sentence):
            if used & set(t.token_indices):
                overlaps += 1
            used |= set(t.token_indices)
    ok = found == total and overlaps == 0 and all(special_cases.values())
    _verdict(
        "matcher recall 100% with exact indices",
        ok,
        f"{found}/{total} targets, {overlaps} overlaps, special cases {special_cases}",
    )


def test_hierarchy_integrity(hierarchy):
    forest_ok = True
    for node in hierarchy:
        if (node.parent is None) != (node.depth == 0):
            forest_ok = False
        if node.parent is not None and hierarchy.node(node.parent).depth != node.depth - 1:
            forest_ok = False
    non_special = [n for n in hierarchy if n.group not in ("Special", "Context")]
    focus = "Focus" in hierarchy and hierarchy.node("Focus").group == "Context"
    discourse = "`d" in hierarchy
    lca_ok = (
        hierarchy.lca("Source", "Goal").name == "Locus"
        and hierarchy.lca("StartTime", "EndTime").name == "Time"
    )
    ok = forest_ok and len(non_special) >= 50 and focus and discourse and lca_ok
    _verdict(
        "hierarchy integrity",
        ok,
        f"{len(non_special)} plain labels, Focus={focus}, `d={discourse}, lca checks={lca_ok}",
    )


def test_roundtrip_identity_and_idempotence(gold_bytes):
    docs = parse_file(gold_bytes)
    first = serialize(docs)
    docs_again = parse_file(first)
    structural = all(
        a.id == b.id
        and a.metadata == b.metadata
        and a.sentences == b.sentences
        and a.sorted_records() == b.sorted_records()
        for a, b in zip(docs, docs_again)
    ) and len(docs) == len(docs_again)
    second = serialize(docs_again)
    ok = structural and first == second
    _verdict(
        "corpus round-trip is identity and serialization idempotent",
        ok,
        f"structural={structural}, byte-identical={first == second}",
    )


def test_transliteration_oracle_agreement():
    from snacs_hi.translit import dev_to_iast

    assert len(WORDLIST) == 50
    matches = sum(1 for dev, _ in WORDLIST if dev_to_iast(dev).text == oracle(dev))
    rate = matches / len(WORDLIST)
    _verdict(
        "transliteration agrees with independent oracle",
        rate >= 0.96,
        f"{matches}/50 exact matches ({rate:.0%})",
    )
