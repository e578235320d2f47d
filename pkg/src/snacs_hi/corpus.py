"""Annotation interchange format, persistence, and corpus statistics.

The file format is line-based and diff-friendly:

    # doc_id = <id>
    # meta <key> = <value>

    # sent_id = <id>
    0<TAB>token
    1<TAB>token
    @ 1,3<TAB>lemma<TAB>Scene~>Function-or-plain-label<TAB>annotator<TAB>status

Congruent construals are written as the bare label.  Lines starting with
``#`` that are not one of the directives above are comments and are
ignored.  Parsing is strict: structural problems are rejected with the
offending line number, never repaired.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional

from .hierarchy import ConstrualLabel
from .matcher import AdpositionTarget, Matcher, Sentence
from .translit import normalize_key
from .validator import AnnotationRecord, STATUSES


class CorpusParseError(ValueError):
    def __init__(self, message: str, line: int, code: str = "PARSE"):
        self.line = line
        self.code = code
        super().__init__(f"line {line}: {message}")


@dataclass
class Document:
    id: str
    sentences: list[Sentence] = field(default_factory=list)
    records: list[AnnotationRecord] = field(default_factory=list)
    metadata: dict[str, str] = field(default_factory=dict)

    def sentence_map(self) -> dict[str, Sentence]:
        return {s.source_id: s for s in self.sentences}

    def sorted_records(self) -> list[AnnotationRecord]:
        order = {s.source_id: i for i, s in enumerate(self.sentences)}
        return sorted(
            self.records,
            key=lambda r: (
                order.get(r.sent_id, len(order)),
                r.target.token_indices,
                r.target.lemma,
                r.annotator,
                str(r.construal),
            ),
        )


# ---------------------------------------------------------------------- parse

_DOC_DIRECTIVE = "# doc_id ="
_SENT_DIRECTIVE = "# sent_id ="
_META_DIRECTIVE = "# meta "


def parse_file(data: bytes | str) -> list[Document]:
    if isinstance(data, bytes):
        text = data.decode("utf-8")
    else:
        text = data

    docs: list[Document] = []
    doc: Optional[Document] = None
    sent_tokens: list[str] = []
    sent_id: Optional[str] = None
    pending_records: list[tuple[int, str, str, str, str, str]] = []

    def close_sentence(lineno: int) -> None:
        nonlocal sent_tokens, sent_id, pending_records
        if sent_id is None:
            return
        if not sent_tokens:
            raise CorpusParseError(f"sentence {sent_id!r} has no tokens", lineno)
        assert doc is not None
        sentence = Sentence(tuple(sent_tokens), sent_id)
        doc.sentences.append(sentence)
        for rec_line, indices_text, lemma, label, annotator, status in pending_records:
            try:
                indices = tuple(int(x) for x in indices_text.split(","))
            except ValueError:
                raise CorpusParseError(f"bad indices {indices_text!r}", rec_line) from None
            if any(i < 0 or i >= len(sentence.tokens) for i in indices):
                raise CorpusParseError(
                    f"target {indices} outside sentence of {len(sentence.tokens)} tokens",
                    rec_line,
                    code="MALFORMED_TARGET",
                )
            try:
                target = AdpositionTarget(
                    indices, normalize_key(lemma), tuple(sentence.tokens[i] for i in indices)
                )
            except ValueError as exc:
                raise CorpusParseError(str(exc), rec_line, code="MALFORMED_TARGET") from None
            if status not in STATUSES:
                raise CorpusParseError(f"bad status {status!r}", rec_line)
            if not annotator:
                raise CorpusParseError("empty annotator", rec_line)
            doc.records.append(
                AnnotationRecord(
                    target=target,
                    construal=ConstrualLabel.parse(label),
                    annotator=annotator,
                    status=status,
                    sent_id=sent_id,
                )
            )
        sent_tokens = []
        sent_id = None
        pending_records = []

    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.rstrip("\n")
        if not line.strip():
            continue
        if line.startswith(_DOC_DIRECTIVE):
            close_sentence(lineno)
            doc_id = line[len(_DOC_DIRECTIVE) :].strip()
            if not doc_id:
                raise CorpusParseError("empty doc_id", lineno)
            if any(d.id == doc_id for d in docs):
                raise CorpusParseError(f"duplicate doc_id {doc_id!r}", lineno)
            doc = Document(id=doc_id)
            docs.append(doc)
        elif line.startswith(_SENT_DIRECTIVE):
            close_sentence(lineno)
            if doc is None:
                raise CorpusParseError("sentence outside any document", lineno)
            new_id = line[len(_SENT_DIRECTIVE) :].strip()
            if not new_id:
                raise CorpusParseError("empty sent_id", lineno)
            if any(s.source_id == new_id for s in doc.sentences):
                raise CorpusParseError(f"duplicate sent_id {new_id!r}", lineno)
            sent_id = new_id
        elif line.startswith(_META_DIRECTIVE):
            if doc is None:
                raise CorpusParseError("metadata outside any document", lineno)
            body = line[len(_META_DIRECTIVE) :]
            key, sep, value = body.partition("=")
            if not sep:
                raise CorpusParseError("metadata line without '='", lineno)
            doc.metadata[key.strip()] = value.strip()
        elif line.startswith("#"):
            continue  # free comment
        elif line.startswith("@"):
            if sent_id is None:
                raise CorpusParseError("record outside any sentence", lineno)
            body = line[1:].lstrip()
            fields = body.split("\t")
            if len(fields) != 5:
                raise CorpusParseError(
                    f"record needs 5 tab-separated fields, got {len(fields)}", lineno
                )
            pending_records.append((lineno, *[f.strip() for f in fields]))
        else:
            if sent_id is None:
                raise CorpusParseError(f"unexpected line {line!r}", lineno)
            index_text, sep, form = line.partition("\t")
            if not sep or not form.strip():
                raise CorpusParseError("token line needs index<TAB>form", lineno)
            try:
                index = int(index_text)
            except ValueError:
                raise CorpusParseError(f"bad token index {index_text!r}", lineno) from None
            if index != len(sent_tokens):
                raise CorpusParseError(
                    f"token index {index}, expected {len(sent_tokens)}", lineno
                )
            sent_tokens.append(form.strip())
    close_sentence(len(text.splitlines()) + 1)
    return docs


# ------------------------------------------------------------------ serialize


def serialize(docs: Iterable[Document]) -> bytes:
    """Canonical form: sorted metadata and records, normalized lemma keys."""
    lines: list[str] = []
    for doc in docs:
        if lines:
            lines.append("")
        lines.append(f"# doc_id = {doc.id}")
        for key in sorted(doc.metadata):
            lines.append(f"# meta {key} = {doc.metadata[key]}")
        records_by_sent: dict[str, list[AnnotationRecord]] = {}
        for record in doc.sorted_records():
            records_by_sent.setdefault(record.sent_id, []).append(record)
        for sentence in doc.sentences:
            lines.append("")
            lines.append(f"# sent_id = {sentence.source_id}")
            for i, tok in enumerate(sentence.tokens):
                lines.append(f"{i}\t{tok}")
            for record in records_by_sent.get(sentence.source_id, []):
                indices = ",".join(str(i) for i in record.target.token_indices)
                lines.append(
                    "@ "
                    + "\t".join(
                        [
                            indices,
                            normalize_key(record.target.lemma),
                            str(record.construal),
                            record.annotator,
                            record.status,
                        ]
                    )
                )
    return ("\n".join(lines) + "\n" if lines else "").encode("utf-8")


# ---------------------------------------------------------------------- stats


@dataclass
class StatsReport:
    record_total: int
    per_lemma: dict[str, dict[str, int]]
    scene_totals: dict[str, int]
    function_totals: dict[str, int]
    congruent: int
    construed: int
    unannotated_targets: int

    @property
    def congruent_ratio(self) -> float:
        return self.congruent / self.record_total if self.record_total else 0.0

    def to_dict(self) -> dict:
        return {
            "record_total": self.record_total,
            "per_lemma": self.per_lemma,
            "scene_totals": self.scene_totals,
            "function_totals": self.function_totals,
            "congruent": self.congruent,
            "construed": self.construed,
            "congruent_ratio": self.congruent_ratio,
            "unannotated_targets": self.unannotated_targets,
        }


def stats(docs: Iterable[Document], matcher: Optional[Matcher] = None) -> StatsReport:
    per_lemma: dict[str, dict[str, int]] = {}
    scene_totals: dict[str, int] = {}
    function_totals: dict[str, int] = {}
    total = congruent = 0
    docs = list(docs)
    for doc in docs:
        for record in doc.records:
            total += 1
            construal = record.construal
            if construal.congruent:
                congruent += 1
            lemma_counts = per_lemma.setdefault(record.target.lemma, {})
            key = str(construal)
            lemma_counts[key] = lemma_counts.get(key, 0) + 1
            scene_totals[construal.scene] = scene_totals.get(construal.scene, 0) + 1
            function_totals[construal.function] = function_totals.get(construal.function, 0) + 1

    unannotated = 0
    if matcher is not None:
        for doc in docs:
            annotated = {
                (r.sent_id, r.target.token_indices) for r in doc.records
            }
            for sentence in doc.sentences:
                for target in matcher.find_targets(sentence):
                    if (sentence.source_id, target.token_indices) not in annotated:
                        unannotated += 1

    return StatsReport(
        record_total=total,
        per_lemma={k: dict(sorted(v.items())) for k, v in sorted(per_lemma.items())},
        scene_totals=dict(sorted(scene_totals.items())),
        function_totals=dict(sorted(function_totals.items())),
        congruent=congruent,
        construed=total - congruent,
        unannotated_targets=unannotated,
    )
