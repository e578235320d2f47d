"""Adposition target identification in tokenized, romanized sentences.

Matching is longest-match over a precomputed index keyed on the first
surface token; circumpositional variants (binā ... ke) are matched across a
bounded gap, and suffixes attach either as bare tokens or hyphen-bound
(choṭā-vālā).  Overlaps resolve deterministically: most matched tokens
first, then leftmost, then lemma.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Optional, Sequence

from .lexicon import GAP, Lexicon
from .translit import normalize_key

DEFAULT_MAX_GAP = 4  # max tokens between the two halves of a circumposition


@dataclass(frozen=True)
class Sentence:
    tokens: tuple[str, ...]
    source_id: str = ""

    def __post_init__(self):
        if not self.tokens:
            raise ValueError("sentence has no tokens")

    @classmethod
    def make(cls, tokens: Sequence[str], source_id: str = "") -> "Sentence":
        return cls(tuple(tokens), source_id)


@dataclass(frozen=True)
class AdpositionTarget:
    """A resolved annotation target: token indices plus lexicon lemma."""

    token_indices: tuple[int, ...]
    lemma: str
    surface: tuple[str, ...]

    def __post_init__(self):
        if not self.token_indices:
            raise ValueError("target has no token indices")
        if list(self.token_indices) != sorted(set(self.token_indices)):
            raise ValueError(f"indices not strictly increasing: {self.token_indices}")

    @property
    def discontinuous(self) -> bool:
        idx = self.token_indices
        return idx[-1] - idx[0] + 1 != len(idx)

    def overlaps(self, other: "AdpositionTarget") -> bool:
        return bool(set(self.token_indices) & set(other.token_indices))

    def check_resolution(self, sentence: Sentence, lexicon: Lexicon) -> Optional[str]:
        """Invariant check; returns a message on failure, None when fine."""
        if self.token_indices[-1] >= len(sentence.tokens):
            return f"index {self.token_indices[-1]} out of bounds"
        resolved = lexicon.normalize_surface(self.surface)
        if resolved is None:
            return f"surface {' '.join(self.surface)!r} does not resolve to a lemma"
        if resolved != self.lemma:
            return f"surface resolves to {resolved!r}, record says {self.lemma!r}"
        return None


class Matcher:
    """Stateless target finder over an immutable lexicon index."""

    def __init__(self, lexicon: Lexicon, max_gap: int = DEFAULT_MAX_GAP):
        self.lexicon = lexicon
        self.max_gap = max_gap
        self._index = lexicon.variants_by_first_token()
        self._suffix_forms = lexicon.suffix_forms

    # -- candidate generation ---------------------------------------------

    def _candidates(self, tokens: tuple[str, ...], raw: tuple[str, ...]) -> list[AdpositionTarget]:
        found: dict[tuple[int, ...], AdpositionTarget] = {}
        n = len(tokens)
        for i, tok in enumerate(tokens):
            for variant, lemma in self._index.get(tok, ()):  # longest first
                if variant.discontinuous:
                    gap_at = variant.surface_tokens.index(GAP)
                    head = variant.surface_tokens[:gap_at]
                    tail = variant.surface_tokens[gap_at + 1 :]
                    if tuple(tokens[i : i + len(head)]) != head:
                        continue
                    for gap in range(1, self.max_gap + 1):
                        j = i + len(head) + gap
                        if j + len(tail) > n:
                            break
                        if tuple(tokens[j : j + len(tail)]) == tail:
                            indices = tuple(range(i, i + len(head))) + tuple(
                                range(j, j + len(tail))
                            )
                            found.setdefault(
                                indices,
                                AdpositionTarget(indices, lemma, tuple(raw[k] for k in indices)),
                            )
                            break  # smallest gap only
                else:
                    length = len(variant.surface_tokens)
                    if tuple(tokens[i : i + length]) == variant.surface_tokens:
                        indices = tuple(range(i, i + length))
                        found.setdefault(
                            indices,
                            AdpositionTarget(indices, lemma, tuple(raw[k] for k in indices)),
                        )
            if "-" in tok and tok not in self._index:
                tail = tok.rsplit("-", 1)[1]
                lemma = self._suffix_forms.get(tail)
                if lemma:
                    found.setdefault((i,), AdpositionTarget((i,), lemma, (raw[i],)))
        return list(found.values())

    # -- public API ---------------------------------------------------------

    def find_targets(self, sentence: Sentence) -> list[AdpositionTarget]:
        """All maximal, non-overlapping targets, sorted by first index."""
        raw = sentence.tokens
        tokens = tuple(normalize_key(t) for t in raw)
        kept = resolve_overlaps(self._candidates(tokens, raw))
        return sorted(kept, key=lambda t: t.token_indices)


def resolve_overlaps(candidates: Iterable[AdpositionTarget]) -> list[AdpositionTarget]:
    """Drop overlapping matches: most tokens first, then leftmost, then lemma."""
    ordered = sorted(
        candidates,
        key=lambda t: (-len(t.token_indices), t.token_indices[0], t.lemma),
    )
    taken: set[int] = set()
    kept: list[AdpositionTarget] = []
    for cand in ordered:
        if taken.isdisjoint(cand.token_indices):
            kept.append(cand)
            taken.update(cand.token_indices)
    return kept
