"""Construal-licensing lexicon for Hindi-Urdu markers.

Entries, surface variants and licenses are compiled by hand into a TSV data
file (one row per license or per extra variant); this module only loads,
validates and indexes them.  Declined pronoun forms that absorb a marker
(mujhe = 1Sg + ko, tumhāre = 2Pl + ke, ...) come from a second table and are
expanded into fused-pronoun variants at load time.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path
from typing import Iterator, Optional, Sequence

from .hierarchy import ConstrualLabel, Hierarchy
from .translit import normalize_key

GAP = "…"

CATEGORIES = (
    "case-marker",
    "simple-postposition",
    "complex-postposition",
    "circumposition",
    "suffix",
    "particle",
    "adverb-postposition",
    "oblique-pseudo-marker",
)

# Lower index wins when one surface form could belong to several entries.
_CATEGORY_PRIORITY = {cat: i for i, cat in enumerate(CATEGORIES)}

TABLE1_COLUMNS = ("obl", "meṁ", "par", "se", "tak", "ko", "ke_liye")
TABLE1_ALIASES = {"ke_lie": "ke_liye", "pe": "par"}
TABLE1_FUNCTIONS = (
    "Circumstance",
    "Locus",
    "Source",
    "Goal",
    "Extent",
    "Time",
    "StartTime",
    "EndTime",
    "Duration",
)


class LexiconError(ValueError):
    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


@dataclass(frozen=True)
class SurfaceVariant:
    """One matchable token sequence; GAP marks where material may intervene."""

    surface_tokens: tuple[str, ...]
    kind: str  # inflection | fused-pronoun | contraction | circumposition-split

    def __post_init__(self):
        toks = self.surface_tokens
        if not toks:
            raise LexiconError("empty variant")
        if toks.count(GAP) > 1:
            raise LexiconError(f"more than one gap in {toks}")
        if toks[0] == GAP or toks[-1] == GAP:
            raise LexiconError(f"gap at edge of {toks}")

    @property
    def discontinuous(self) -> bool:
        return GAP in self.surface_tokens

    @property
    def matched_tokens(self) -> tuple[str, ...]:
        """The tokens that actually belong to the marker (gap removed)."""
        return tuple(t for t in self.surface_tokens if t != GAP)


@dataclass(frozen=True)
class License:
    """One licensed construal for a lemma, anchored to a guideline section."""

    construal: ConstrualLabel
    source_section: str
    condition: Optional[str]
    rank: int
    open_scene: bool = False  # scene role is predicate-licensed, not closed
    provisional: bool = False


@dataclass
class LexEntry:
    lemma: str
    category: str
    script_forms: list[str] = field(default_factory=list)
    variants: list[SurfaceVariant] = field(default_factory=list)
    licenses: list[License] = field(default_factory=list)
    register_pair: Optional[str] = None
    notes: list[str] = field(default_factory=list)
    # suffix forms that only match when hyphen-attached (choṭā-se)
    hyphen_forms: list[str] = field(default_factory=list)

    def sorted_licenses(self) -> list[License]:
        return sorted(self.licenses, key=lambda l: (l.rank, str(l.construal)))


def _parse_extras(cell: str) -> dict[str, str]:
    extras: dict[str, str] = {}
    if cell == "-" or not cell:
        return extras
    for item in cell.split(";"):
        item = item.strip()
        if not item:
            continue
        key, sep, value = item.partition("=")
        extras[key.strip()] = value.strip() if sep else ""
    return extras


def _load_pronouns(path: Path) -> list[tuple[str, str]]:
    pairs = []
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        surface, _, marker = line.partition("\t")
        pairs.append((normalize_key(surface), normalize_key(marker)))
    return pairs


class Lexicon:
    """Loaded lexicon with deterministic surface-to-lemma resolution."""

    def __init__(self, entries: dict[str, LexEntry], hierarchy: Hierarchy):
        self.entries = entries
        self.hierarchy = hierarchy
        # exact token sequence (gap stripped) -> lemma
        self._by_sequence: dict[tuple[str, ...], str] = {}
        # hyphen-attachable suffix form -> lemma
        self._suffix_forms: dict[str, str] = {}
        self._index()
        self._check()

    # -- construction -----------------------------------------------------

    def _index(self) -> None:
        claims: dict[tuple[str, ...], list[str]] = {}
        for entry in self.entries.values():
            for variant in entry.variants:
                claims.setdefault(variant.matched_tokens, []).append(entry.lemma)
            if entry.category == "suffix":
                for variant in entry.variants:
                    if len(variant.surface_tokens) == 1:
                        self._suffix_forms[variant.surface_tokens[0]] = entry.lemma
                for form in entry.hyphen_forms:
                    self._suffix_forms[form] = entry.lemma
        for seq, lemmas in claims.items():
            unique = sorted(set(lemmas))
            if len(unique) > 1:
                ranked = sorted(unique, key=lambda l: (_CATEGORY_PRIORITY[self.entries[l].category], l))
                raise LexiconError(
                    f"surface {' '.join(seq)!r} claimed by {', '.join(ranked)}"
                )
            self._by_sequence[seq] = unique[0]

    def _check(self) -> None:
        for entry in self.entries.values():
            if entry.category not in CATEGORIES:
                raise LexiconError(f"{entry.lemma}: unknown category {entry.category!r}")
            if normalize_key(entry.lemma) != entry.lemma:
                raise LexiconError(f"lemma {entry.lemma!r} is not key-normalized")
            if not entry.licenses:
                raise LexiconError(f"{entry.lemma}: no licenses")
            has_gap = any(v.discontinuous for v in entry.variants)
            if (entry.category == "circumposition") != has_gap:
                raise LexiconError(
                    f"{entry.lemma}: category {entry.category} inconsistent with "
                    f"{'presence' if has_gap else 'absence'} of a discontinuous variant"
                )
            seen: set[str] = set()
            for lic in entry.licenses:
                if not self.hierarchy.validate_construal(lic.construal):
                    raise LexiconError(
                        f"{entry.lemma}: construal {lic.construal} uses unknown labels"
                    )
                key = str(lic.construal)
                if key in seen:
                    raise LexiconError(f"{entry.lemma}: duplicate license {key}")
                seen.add(key)
            if entry.register_pair and entry.register_pair not in self.entries:
                raise LexiconError(
                    f"{entry.lemma}: register pair {entry.register_pair!r} missing"
                )

    # -- queries ----------------------------------------------------------

    def __contains__(self, lemma: str) -> bool:
        return lemma in self.entries

    def __iter__(self) -> Iterator[LexEntry]:
        return iter(self.entries.values())

    def lookup(self, key: str) -> Optional[LexEntry]:
        """Entry for a lemma key; falls back to surface resolution (kī -> kā)."""
        key = normalize_key(key)
        if key in self.entries:
            return self.entries[key]
        lemma = self.normalize_surface(tuple(key.split("_")))
        return self.entries.get(lemma) if lemma else None

    def normalize_surface(self, tokens: Sequence[str]) -> Optional[str]:
        """The lemma owning a surface token sequence, or None.

        Discontinuous targets resolve by their matched tokens with the gap
        material removed.  Hyphen-attached suffixes (choṭā-vālā) resolve to
        the suffix lemma.
        """
        seq = tuple(normalize_key(t) for t in tokens)
        lemma = self._by_sequence.get(seq)
        if lemma:
            return lemma
        if len(seq) == 1 and "-" in seq[0]:
            tail = seq[0].rsplit("-", 1)[1]
            if tail in self._suffix_forms:
                return self._suffix_forms[tail]
        return None

    def licensed_construals(self, lemma: str) -> list[ConstrualLabel]:
        entry = self.lookup(lemma)
        if entry is None:
            raise KeyError(f"unknown lemma {lemma!r}")
        return [lic.construal for lic in entry.sorted_licenses()]

    def is_licensed(self, lemma: str, construal: ConstrualLabel) -> bool:
        entry = self.lookup(lemma)
        if entry is None:
            return False
        return any(lic.construal == construal for lic in entry.licenses)

    def open_scene_functions(self, lemma: str) -> set[str]:
        """Functions whose scene role is open-set for this lemma."""
        entry = self.lookup(lemma)
        if entry is None:
            return set()
        return {l.construal.function for l in entry.licenses if l.open_scene}

    def allowed_functions(self, lemma: str) -> dict[str, bool]:
        """The spatio-temporal function matrix row for one of the 7 columns."""
        key = normalize_key(lemma)
        key = TABLE1_ALIASES.get(key, key)
        if key not in TABLE1_COLUMNS:
            raise KeyError(f"{lemma!r} is not a column of the basic function matrix")
        entry = self.entries[key]
        functions = {lic.construal.function for lic in entry.licenses}
        return {f: f in functions for f in TABLE1_FUNCTIONS}

    def variants_by_first_token(self) -> dict[str, list[tuple[SurfaceVariant, str]]]:
        """Matching index: first surface token -> [(variant, lemma)]."""
        index: dict[str, list[tuple[SurfaceVariant, str]]] = {}
        for entry in self.entries.values():
            for variant in entry.variants:
                index.setdefault(variant.surface_tokens[0], []).append((variant, entry.lemma))
        for bucket in index.values():
            bucket.sort(key=lambda pair: (-len(pair[0].surface_tokens), pair[1]))
        return index

    @property
    def suffix_forms(self) -> dict[str, str]:
        return dict(self._suffix_forms)


def _expand_pronouns(entries: dict[str, LexEntry], pronouns: list[tuple[str, str]]) -> None:
    genitive = {"kā": [], "ke": [], "kī": []}
    for surface, marker in pronouns:
        if marker in genitive:
            genitive[marker].append(surface)
            if "kā" in entries:
                entries["kā"].variants.append(SurfaceVariant((surface,), "fused-pronoun"))
        elif marker in entries:
            entries[marker].variants.append(SurfaceVariant((surface,), "fused-pronoun"))
    fusable = {"ke": genitive["ke"], "kī": genitive["kī"], "se": [s for s, m in pronouns if m == "se"]}
    for entry in entries.values():
        for variant in list(entry.variants):
            first = variant.surface_tokens[0]
            if len(variant.surface_tokens) < 2 or first not in fusable:
                continue
            for surface in fusable[first]:
                entry.variants.append(
                    SurfaceVariant((surface,) + variant.surface_tokens[1:], "fused-pronoun")
                )


DEFAULT_LEXICON_PATH = Path(__file__).parent / "data" / "lexicon.tsv"
DEFAULT_PRONOUNS_PATH = Path(__file__).parent / "data" / "pronouns.tsv"


def load_lexicon(
    hierarchy: Hierarchy,
    path: str | Path = DEFAULT_LEXICON_PATH,
    pronouns_path: str | Path = DEFAULT_PRONOUNS_PATH,
) -> Lexicon:
    entries: dict[str, LexEntry] = {}
    for lineno, raw in enumerate(Path(path).read_text(encoding="utf-8").splitlines(), 1):
        line = raw.rstrip("\n")
        if not line.strip() or line.lstrip().startswith("#"):
            continue
        cols = line.split("\t")
        if len(cols) == 8:
            cols.append("-")
        if len(cols) != 9:
            raise LexiconError(f"expected 8 or 9 columns, got {len(cols)}", lineno)
        lemma, category, pattern, scene, function, anchor, condition, rank, extras_cell = (
            c.strip() for c in cols
        )
        extras = _parse_extras(extras_cell)
        entry = entries.get(lemma)
        if entry is None:
            entry = LexEntry(lemma=lemma, category=category)
            # the lemma's own tokens are always matchable, except for the
            # bare-oblique pseudo-marker which has no surface at all
            if category != "oblique-pseudo-marker":
                entry.variants.append(SurfaceVariant(tuple(lemma.split("_")), "inflection"))
            entries[lemma] = entry
        elif entry.category != category:
            raise LexiconError(f"{lemma}: category changed mid-file", lineno)

        if pattern != "-":
            tokens = tuple(t.strip() for t in pattern.split("+"))
            kind = extras.get("kind", "inflection")
            variant = SurfaceVariant(tokens, kind)
            if variant.surface_tokens != tuple(lemma.split("_")):
                entry.variants.append(variant)
        if scene != "-":
            entry.licenses.append(
                License(
                    construal=ConstrualLabel(scene, function),
                    source_section=anchor,
                    condition=None if condition == "-" else condition,
                    rank=int(rank),
                    open_scene="open_scene" in extras,
                    provisional="provisional" in extras,
                )
            )
        if "script" in extras:
            entry.script_forms.append(extras["script"])
        if "register_pair" in extras:
            entry.register_pair = extras["register_pair"]
        if "note" in extras:
            entry.notes.append(extras["note"])
        if "hyphen_forms" in extras:
            entry.hyphen_forms.extend(extras["hyphen_forms"].split(","))

    _expand_pronouns(entries, _load_pronouns(Path(pronouns_path)))
    return Lexicon(entries, hierarchy)
