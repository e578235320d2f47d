"""HTTP facade over the toolkit: lookup, matching, validation, suggestion,
diagnostics, document CRUD with optimistic concurrency, and stats.

Responses are rendered through one canonical JSON encoder (sorted keys,
fixed separators), so identical requests against an unchanged store are
byte-identical.
"""

from __future__ import annotations

import json
from typing import Optional

from fastapi import FastAPI, HTTPException, Response
from pydantic import BaseModel, Field

from .. import Toolkit
from ..corpus import Document, stats as corpus_stats
from ..hierarchy import ConstrualLabel
from ..matcher import AdpositionTarget, Sentence
from ..validator import AnnotationRecord
from .store import DocumentStore, VersionConflict


def _canonical(payload, status_code: int = 200) -> Response:
    body = json.dumps(payload, sort_keys=True, ensure_ascii=False, separators=(",", ":"))
    return Response(content=body, status_code=status_code, media_type="application/json")


# ---------------------------------------------------------------- wire models


class SentenceIn(BaseModel):
    tokens: list[str] = Field(min_length=1)
    source_id: str = ""


class TargetIn(BaseModel):
    lemma: str
    indices: list[int] = []
    surface: list[str] = []


class SentenceBody(BaseModel):
    id: str
    tokens: list[str] = Field(min_length=1)


class RecordBody(BaseModel):
    sent_id: str
    indices: list[int] = Field(min_length=1)
    lemma: str
    label: str
    annotator: str
    status: str = "draft"


class DocumentBody(BaseModel):
    id: str
    metadata: dict[str, str] = {}
    sentences: list[SentenceBody] = []
    records: list[RecordBody] = []


class DocumentPut(BaseModel):
    version: int = 0
    document: DocumentBody


# ------------------------------------------------------------------- encoders


def target_json(target: AdpositionTarget) -> dict:
    return {
        "indices": list(target.token_indices),
        "lemma": target.lemma,
        "surface": list(target.surface),
        "discontinuous": target.discontinuous,
    }


def record_json(record: AnnotationRecord) -> dict:
    return {
        "sent_id": record.sent_id,
        "indices": list(record.target.token_indices),
        "lemma": record.target.lemma,
        "label": str(record.construal),
        "annotator": record.annotator,
        "status": record.status,
    }


def document_json(doc: Document) -> dict:
    return {
        "id": doc.id,
        "metadata": dict(doc.metadata),
        "sentences": [{"id": s.source_id, "tokens": list(s.tokens)} for s in doc.sentences],
        "records": [record_json(r) for r in doc.sorted_records()],
    }


def document_from_body(body: DocumentBody) -> Document:
    doc = Document(id=body.id, metadata=dict(body.metadata))
    for sent in body.sentences:
        doc.sentences.append(Sentence(tuple(sent.tokens), sent.id))
    by_id = doc.sentence_map()
    for rec in body.records:
        sentence = by_id.get(rec.sent_id)
        if sentence is None:
            raise HTTPException(
                422, detail=[{"loc": ["records"], "msg": f"unknown sentence {rec.sent_id!r}"}]
            )
        indices = tuple(rec.indices)
        if sorted(set(indices)) != list(indices) or indices[-1] >= len(sentence.tokens):
            raise HTTPException(
                422, detail=[{"loc": ["records"], "msg": f"bad target indices {rec.indices}"}]
            )
        target = AdpositionTarget(
            indices, rec.lemma, tuple(sentence.tokens[i] for i in indices)
        )
        try:
            record = AnnotationRecord(
                target=target,
                construal=ConstrualLabel.parse(rec.label),
                annotator=rec.annotator,
                status=rec.status,
                sent_id=rec.sent_id,
            )
        except ValueError as exc:
            raise HTTPException(422, detail=[{"loc": ["records"], "msg": str(exc)}]) from None
        doc.records.append(record)
    return doc


def issue_json(issue) -> dict:
    return {
        "severity": issue.severity,
        "code": issue.code,
        "message": issue.message,
        "anchor": issue.anchor,
        "location": issue.location,
    }


# ------------------------------------------------------------------------ app


def create_app(toolkit: Optional[Toolkit] = None, store: Optional[DocumentStore] = None) -> FastAPI:
    toolkit = toolkit or Toolkit()
    store = store if store is not None else DocumentStore()
    app = FastAPI(title="snacs-hi annotation service")
    app.state.toolkit = toolkit
    app.state.store = store

    hierarchy = toolkit.hierarchy
    lexicon = toolkit.lexicon
    matcher = toolkit.matcher
    validator = toolkit.validator

    @app.get("/hierarchy")
    def get_hierarchy():
        nodes = [
            {
                "name": node.name,
                "group": node.group,
                "parent": node.parent,
                "depth": node.depth,
            }
            for node in sorted(hierarchy, key=lambda n: (n.group, n.depth, n.name))
        ]
        return _canonical({"nodes": nodes})

    @app.get("/lexicon/{lemma}")
    def get_lexicon(lemma: str):
        entry = lexicon.lookup(lemma)
        if entry is None:
            raise HTTPException(404, detail=f"unknown lemma {lemma!r}")
        return _canonical(
            {
                "lemma": entry.lemma,
                "category": entry.category,
                "script_forms": entry.script_forms,
                "register_pair": entry.register_pair,
                "variants": [
                    {"tokens": list(v.surface_tokens), "kind": v.kind}
                    for v in entry.variants
                ],
                "licenses": [
                    {
                        "label": str(lic.construal),
                        "scene": lic.construal.scene,
                        "function": lic.construal.function,
                        "anchor": lic.source_section,
                        "condition": lic.condition,
                        "rank": lic.rank,
                        "open_scene": lic.open_scene,
                        "provisional": lic.provisional,
                    }
                    for lic in entry.sorted_licenses()
                ],
            }
        )

    @app.post("/match")
    def post_match(body: SentenceIn):
        sentence = Sentence(tuple(body.tokens), body.source_id)
        targets = matcher.find_targets(sentence)
        return _canonical({"targets": [target_json(t) for t in targets]})

    @app.post("/validate")
    def post_validate(body: DocumentBody):
        doc = document_from_body(body)
        issues = validator.validate_document(doc.records, doc.sentence_map())
        return _canonical({"issues": [issue_json(i) for i in issues]})

    @app.post("/suggest")
    def post_suggest(body: TargetIn):
        target = AdpositionTarget(
            tuple(body.indices) if body.indices else (0,),
            body.lemma,
            tuple(body.surface) if body.surface else (body.lemma,),
        )
        suggestions, issues = validator.suggest(target)
        return _canonical(
            {
                "candidates": [
                    {
                        "label": str(s.construal),
                        "scene": s.construal.scene,
                        "function": s.construal.function,
                        "rank": s.rank,
                        "anchor": s.anchor,
                        "condition": s.condition,
                    }
                    for s in suggestions
                ],
                "issues": [issue_json(i) for i in issues],
            }
        )

    @app.get("/diagnostics/{key}")
    def get_diagnostics(key: str):
        checklists = validator.diagnostics_for(key)
        return _canonical(
            {
                "checklists": [
                    {
                        "key": c.key,
                        "title": c.title,
                        "prompts": list(c.prompts),
                        "outcomes": {k: str(v) for k, v in c.outcome_map.items()},
                        "anchor": c.anchor,
                    }
                    for c in checklists
                ]
            }
        )

    @app.get("/documents")
    def list_documents():
        return _canonical({"ids": store.ids()})

    @app.get("/documents/{doc_id}")
    def get_document(doc_id: str):
        found = store.get(doc_id)
        if found is None:
            raise HTTPException(404, detail=f"unknown document {doc_id!r}")
        doc, version = found
        return _canonical({"version": version, "document": document_json(doc)})

    @app.put("/documents/{doc_id}")
    def put_document(doc_id: str, body: DocumentPut):
        if body.document.id != doc_id:
            raise HTTPException(
                422, detail=[{"loc": ["document", "id"], "msg": "id mismatch with URL"}]
            )
        doc = document_from_body(body.document)
        issues = validator.validate_document(doc.records, doc.sentence_map())
        errors = [i for i in issues if i.severity == "error"]
        if errors:
            raise HTTPException(422, detail=[issue_json(i) for i in errors])
        try:
            version = store.put(doc, body.version)
        except VersionConflict as exc:
            raise HTTPException(409, detail=str(exc)) from None
        return _canonical({"version": version})

    @app.get("/stats")
    def get_stats():
        report = corpus_stats(store.documents(), matcher)
        return _canonical(report.to_dict())

    return app
