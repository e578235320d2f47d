"""Versioned document store backing the annotation service.

Single-writer, multi-reader: reads return consistent in-memory snapshots;
writes are whole-document replacements guarded by an optimistic version
check and persisted atomically (write to temp file, then rename).
"""

from __future__ import annotations

import os
import threading
from pathlib import Path
from typing import Optional

from ..corpus import Document, parse_file, serialize


class VersionConflict(Exception):
    def __init__(self, doc_id: str, expected: int, actual: int):
        self.doc_id = doc_id
        self.expected = expected
        self.actual = actual
        super().__init__(
            f"document {doc_id!r}: version {expected} is stale (current {actual})"
        )


class DocumentStore:
    def __init__(self, directory: Optional[str | Path] = None):
        self.directory = Path(directory) if directory else None
        self._lock = threading.Lock()
        self._docs: dict[str, Document] = {}
        self._versions: dict[str, int] = {}
        if self.directory and self.directory.is_dir():
            for path in sorted(self.directory.glob("*.tsv")):
                for doc in parse_file(path.read_bytes()):
                    self._docs[doc.id] = doc
                    self._versions[doc.id] = 1

    def ids(self) -> list[str]:
        with self._lock:
            return sorted(self._docs)

    def get(self, doc_id: str) -> Optional[tuple[Document, int]]:
        with self._lock:
            doc = self._docs.get(doc_id)
            if doc is None:
                return None
            return doc, self._versions[doc_id]

    def put(self, doc: Document, version: Optional[int]) -> int:
        """Replace (or create) a document; returns the new version.

        *version* must match the stored version for an existing document;
        pass None (or 0) to create a new one.
        """
        with self._lock:
            current = self._versions.get(doc.id, 0)
            expected = version or 0
            if expected != current:
                raise VersionConflict(doc.id, expected, current)
            self._docs[doc.id] = doc
            self._versions[doc.id] = current + 1
            if self.directory:
                self.directory.mkdir(parents=True, exist_ok=True)
                path = self.directory / f"{doc.id}.tsv"
                tmp = path.with_suffix(".tsv.tmp")
                tmp.write_bytes(serialize([doc]))
                os.replace(tmp, path)
            return current + 1

    def documents(self) -> list[Document]:
        with self._lock:
            return [self._docs[k] for k in sorted(self._docs)]
