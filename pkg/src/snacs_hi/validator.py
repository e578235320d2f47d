"""Annotation checking, construal suggestion, and diagnostic checklists.

All rules derive from the lexicon's license table and the hierarchy; the
validator itself is stateless.  Functions form a closed set per lemma.
Scene roles are open-set only where the license row is flagged open-scene
(predicate-licensed scenes, e.g. the passive subject), in which case a novel
scene downgrades to a warning.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from .hierarchy import ConstrualLabel, Hierarchy
from .lexicon import Lexicon
from .matcher import AdpositionTarget, Sentence

STATUSES = ("draft", "confirmed")

# Closed issue registry; the CLI and the HTTP API key on these.
ISSUE_CODES = (
    "PARSE_ERROR",
    "MALFORMED_TARGET",
    "UNKNOWN_LABEL",
    "UNKNOWN_LEMMA",
    "UNLICENSED_CONSTRUAL",
    "NOVEL_SCENE",
    "OVERLAP",
    "DUPLICATE",
)


@dataclass(frozen=True)
class AnnotationRecord:
    target: AdpositionTarget
    construal: ConstrualLabel
    annotator: str
    status: str = "draft"
    sent_id: str = ""  # which sentence of the document the target lives in

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")


@dataclass(frozen=True)
class ValidationIssue:
    severity: str  # error | warning
    code: str
    message: str
    anchor: str = ""  # guideline section backing the rule, when known
    location: str = ""  # sent_id@indices

    def __post_init__(self):
        if self.code not in ISSUE_CODES:
            raise ValueError(f"issue code {self.code!r} not in registry")

    def as_line(self) -> str:
        return "\t".join([self.severity, self.code, self.location or "-", self.message])


@dataclass(frozen=True)
class DiagnosticChecklist:
    """A yes/no decision aid from the guidelines' syntactic tests."""

    key: str  # lemma, or a label name for label-level tests
    title: str
    prompts: tuple[str, ...]
    outcome_map: dict[str, ConstrualLabel]
    anchor: str


@dataclass(frozen=True)
class Suggestion:
    construal: ConstrualLabel
    rank: int
    anchor: str
    condition: Optional[str]


def _builtin_checklists() -> list[DiagnosticChecklist]:
    c = ConstrualLabel
    return [
        DiagnosticChecklist(
            key="ko",
            title="ko drop test",
            prompts=(
                "Substitute an indefinite (e.g. plural) and/or inanimate NP for the object.",
                "Can the ko now be dropped without changing the role?",
            ),
            outcome_map={
                "droppable": c.congruent_label("Theme"),
                "not droppable": c.congruent_label("Recipient"),
            },
            anchor="§accusative",
        ),
        DiagnosticChecklist(
            key="ke_liye",
            title="constituency exchange with kā",
            prompts=(
                "Exchange ke_liye with kā.",
                "Does the original phrase mark a clause-level adjunct (not a constituent of an NP)?",
            ),
            outcome_map={"adjunct": c.congruent_label("Purpose")},
            anchor="§Purpose",
        ),
        DiagnosticChecklist(
            key="kā",
            title="constituency exchange with ke_liye",
            prompts=(
                "Exchange kā with ke_liye.",
                "Is the genitive phrase a constituent of an NP (not a clause-level adjunct)?",
            ),
            outcome_map={"np constituent": c.congruent_label("Gestalt")},
            anchor="§Purpose",
        ),
        DiagnosticChecklist(
            key="jaise",
            title="complementiser paraphrase",
            prompts=(
                "Paraphrase with the complementiser ki (e.g. lagtā hai ki ...).",
                "Does the paraphrase preserve the meaning?",
            ),
            outcome_map={
                "paraphrase works": c("Theme", "ComparisonRef"),
                "paraphrase fails": c("Manner", "ComparisonRef"),
            },
            anchor="§ComparisonRef",
        ),
        DiagnosticChecklist(
            key="ke_jaise",
            title="complementiser paraphrase",
            prompts=(
                "Paraphrase with the complementiser ki.",
                "Does the paraphrase preserve the meaning?",
            ),
            outcome_map={
                "paraphrase works": c("Theme", "ComparisonRef"),
                "paraphrase fails": c("Manner", "ComparisonRef"),
            },
            anchor="§ComparisonRef",
        ),
        DiagnosticChecklist(
            key="ke_binā",
            title="lekar opposite-meaning test",
            prompts=(
                "State the opposite meaning with conjunctive lekar (e.g. X lekar ...).",
                "Is the opposite meaning valid?",
            ),
            outcome_map={"valid": c("Possession", "Ancillary")},
            anchor="§without",
        ),
        DiagnosticChecklist(
            key="ke_binā",
            title="kaise question test",
            prompts=(
                "The object is an action (nominal or verbal).",
                "Can the phrase answer a kaise? question?",
            ),
            outcome_map={
                "answers kaise": c.congruent_label("Manner"),
                "does not": c.congruent_label("Circumstance"),
            },
            anchor="§without",
        ),
        DiagnosticChecklist(
            key="Approximator",
            title="predicate vs NP-modifier test",
            prompts=(
                "Look at the numeric expression carrying the marker.",
                "Is it a predicate with the copula (rather than modifying an NP)?",
            ),
            outcome_map={
                "predicate with copula": c("ComparisonRef", "Locus"),
                "modifies an NP": c.congruent_label("Approximator"),
            },
            anchor="§Approximator",
        ),
    ]


class Validator:
    def __init__(self, hierarchy: Hierarchy, lexicon: Lexicon):
        self.hierarchy = hierarchy
        self.lexicon = lexicon
        self.checklists = _builtin_checklists()
        self._check_checklists()

    def _check_checklists(self) -> None:
        for checklist in self.checklists:
            for outcome in checklist.outcome_map.values():
                if not self.hierarchy.validate_construal(outcome):
                    raise ValueError(f"checklist {checklist.title}: unknown outcome {outcome}")
                if checklist.key in self.lexicon.entries and not self.lexicon.is_licensed(
                    checklist.key, outcome
                ):
                    raise ValueError(
                        f"checklist {checklist.title}: outcome {outcome} "
                        f"not licensed for {checklist.key}"
                    )

    # -- record-level checks -------------------------------------------------

    def validate(
        self, record: AnnotationRecord, sentence: Optional[Sentence] = None
    ) -> list[ValidationIssue]:
        loc = f"{record.sent_id or (sentence.source_id if sentence else '')}@" + ",".join(
            str(i) for i in record.target.token_indices
        )
        issues: list[ValidationIssue] = []

        if sentence is not None:
            problem = record.target.check_resolution(sentence, self.lexicon)
            if problem:
                issues.append(
                    ValidationIssue("error", "MALFORMED_TARGET", problem, location=loc)
                )
                return issues

        construal = record.construal
        missing = [l for l in (construal.scene, construal.function) if l not in self.hierarchy]
        if missing:
            issues.append(
                ValidationIssue(
                    "error",
                    "UNKNOWN_LABEL",
                    f"unknown label(s): {', '.join(missing)}",
                    location=loc,
                )
            )
            return issues

        entry = self.lexicon.lookup(record.target.lemma)
        if entry is None:
            issues.append(
                ValidationIssue(
                    "error",
                    "UNKNOWN_LEMMA",
                    f"lemma {record.target.lemma!r} not in lexicon",
                    location=loc,
                )
            )
            return issues

        if self.lexicon.is_licensed(entry.lemma, construal):
            return issues

        anchor = entry.sorted_licenses()[0].source_section if entry.licenses else ""
        if construal.function in self.lexicon.open_scene_functions(entry.lemma):
            issues.append(
                ValidationIssue(
                    "warning",
                    "NOVEL_SCENE",
                    f"scene {construal.scene} is novel for {entry.lemma} "
                    f"(function {construal.function} is open-scene)",
                    anchor=anchor,
                    location=loc,
                )
            )
        else:
            issues.append(
                ValidationIssue(
                    "error",
                    "UNLICENSED_CONSTRUAL",
                    f"{construal} is not licensed for {entry.lemma}",
                    anchor=anchor,
                    location=loc,
                )
            )
        return issues

    def validate_document(
        self,
        records: list[AnnotationRecord],
        sentences: dict[str, Sentence],
    ) -> list[ValidationIssue]:
        issues: list[ValidationIssue] = []
        for record in records:
            sentence = sentences.get(record.sent_id)
            if sentence is None:
                loc = f"{record.sent_id}@" + ",".join(map(str, record.target.token_indices))
                issues.append(
                    ValidationIssue(
                        "error",
                        "MALFORMED_TARGET",
                        f"record references unknown sentence {record.sent_id!r}",
                        location=loc,
                    )
                )
                continue
            issues.extend(self.validate(record, sentence))

        by_sentence: dict[str, list[AnnotationRecord]] = {}
        for record in records:
            by_sentence.setdefault(record.sent_id, []).append(record)
        for sent_id, group in by_sentence.items():
            seen: dict[tuple, AnnotationRecord] = {}
            for record in group:
                key = (record.target.token_indices, record.target.lemma, record.annotator)
                loc = f"{sent_id}@" + ",".join(map(str, record.target.token_indices))
                if key in seen:
                    issues.append(
                        ValidationIssue(
                            "error",
                            "DUPLICATE",
                            f"duplicate record for {record.target.lemma} by {record.annotator}",
                            location=loc,
                        )
                    )
                seen[key] = record
            for i, a in enumerate(group):
                for b in group[i + 1 :]:
                    if a.target.token_indices == b.target.token_indices:
                        continue  # same target: multi-annotation, not a clash
                    if a.target.overlaps(b.target):
                        loc = f"{sent_id}@" + ",".join(map(str, b.target.token_indices))
                        issues.append(
                            ValidationIssue(
                                "error",
                                "OVERLAP",
                                f"targets {a.target.lemma} and {b.target.lemma} share tokens",
                                location=loc,
                            )
                        )
        return issues

    # -- suggestion and diagnostics -------------------------------------------

    def suggest(self, target: AdpositionTarget) -> tuple[list[Suggestion], list[ValidationIssue]]:
        entry = self.lexicon.lookup(target.lemma)
        if entry is None:
            issue = ValidationIssue(
                "warning", "UNKNOWN_LEMMA", f"lemma {target.lemma!r} not in lexicon"
            )
            return [], [issue]
        out = [
            Suggestion(lic.construal, lic.rank, lic.source_section, lic.condition)
            for lic in entry.sorted_licenses()
        ]
        return out, []

    def diagnostics_for(self, key: str) -> list[DiagnosticChecklist]:
        return [c for c in self.checklists if c.key == key]
