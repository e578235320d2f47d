"""Devanagari to IAST-style romanization, with schwa deletion.

The romanization approximates spoken pronunciation the way the annotation
guidelines spell their examples: the inherent vowel is dropped word-finally
and in medial VC(a)CV position (applied right to left), nasalization is
written uniformly as ``ṁ``, and nuqta consonants come out as x/ġ/z/q/f.

Everything here is pure and table-driven; an optional exceptions file
(``devanagari-form <TAB> romanization``) overrides whole-word rule output.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field
from pathlib import Path

INDEPENDENT_VOWELS = {
    "अ": "a", "आ": "ā", "इ": "i", "ई": "ī", "उ": "u", "ऊ": "ū",
    "ऋ": "ṛ", "ॠ": "ṝ", "ए": "e", "ऐ": "ai", "ओ": "o", "औ": "au",
    "ऍ": "ĕ", "ऑ": "ŏ",
}

MATRAS = {
    "ा": "ā", "ि": "i", "ी": "ī", "ु": "u", "ू": "ū",
    "ृ": "ṛ", "ॄ": "ṝ", "े": "e", "ै": "ai",
    "ो": "o", "ौ": "au", "ॅ": "ĕ", "ॉ": "ŏ",
}

CONSONANTS = {
    "क": "k", "ख": "kh", "ग": "g", "घ": "gh", "ङ": "ṅ",
    "च": "c", "छ": "ch", "ज": "j", "झ": "jh", "ञ": "ñ",
    "ट": "ṭ", "ठ": "ṭh", "ड": "ḍ", "ढ": "ḍh", "ण": "ṇ",
    "त": "t", "थ": "th", "द": "d", "ध": "dh", "न": "n",
    "प": "p", "फ": "ph", "ब": "b", "भ": "bh", "म": "m",
    "य": "y", "र": "r", "ल": "l", "ळ": "ḷ", "व": "v",
    "श": "ś", "ष": "ṣ", "स": "s", "ह": "h",
}

# Nuqta forms, keyed by base consonant (the nuqta itself is U+093C).
NUQTA_CONSONANTS = {
    "क": "q", "ख": "x", "ग": "ġ", "ज": "z", "झ": "zh",
    "ड": "ṛ", "ढ": "ṛh", "फ": "f", "य": "y", "ब": "b", "व": "v", "न": "n",
}

DIGITS = {chr(0x0966 + i): str(i) for i in range(10)}

VIRAMA = "्"
NUQTA = "़"
ANUSVARA = "ं"
CANDRABINDU = "ँ"
VISARGA = "ः"
NASAL = "ṁ"

# Devanagari code points we understand but render as-is / specially.
PASSTHROUGH = {"।": ".", "॥": "..", "ऽ": "'", "ॐ": "oṁ"}
IGNORED = {"‌", "‍"}  # ZWNJ/ZWJ

_DEVANAGARI = re.compile(r"[ऀ-ॿ]")


@dataclass
class RomanizedText:
    """Romanized output plus any unknown-code-point warnings."""

    text: str
    provenance: str  # "native-script" | "already-romanized"
    warnings: list[str] = field(default_factory=list)


def _segment_word(word: str, warnings: list[str]) -> list[tuple[str, str, bool]]:
    """Split one Devanagari word into (kind, value, inherent) segments.

    kind is C (consonant), V (vowel, nasalization folded in) or X
    (passthrough); *inherent* marks unwritten schwas, the only vowels the
    deletion rules may touch.
    """
    segs: list[tuple[str, str, bool]] = []
    i = 0
    n = len(word)
    while i < n:
        ch = word[i]
        if ch in CONSONANTS:
            roman = CONSONANTS[ch]
            if i + 1 < n and word[i + 1] == NUQTA:
                roman = NUQTA_CONSONANTS.get(ch, roman)
                i += 1
            segs.append(("C", roman, False))
            nxt = word[i + 1] if i + 1 < n else ""
            if nxt == VIRAMA:
                i += 2
                continue
            if nxt in MATRAS:
                segs.append(("V", MATRAS[nxt], False))
                i += 2
                continue
            segs.append(("V", "a", True))
            i += 1
        elif ch in INDEPENDENT_VOWELS:
            segs.append(("V", INDEPENDENT_VOWELS[ch], False))
            i += 1
        elif ch in (ANUSVARA, CANDRABINDU):
            if segs and segs[-1][0] == "V":
                kind, val, inherent = segs[-1]
                segs[-1] = (kind, val + NASAL, inherent)
            else:
                segs.append(("X", NASAL, False))
            i += 1
        elif ch == VISARGA:
            segs.append(("C", "ḥ", False))
            i += 1
        elif ch in DIGITS:
            segs.append(("X", DIGITS[ch], False))
            i += 1
        elif ch in PASSTHROUGH:
            segs.append(("X", PASSTHROUGH[ch], False))
            i += 1
        elif ch in (NUQTA, VIRAMA):
            # stray combining mark with no base; drop it
            warnings.append(f"stray mark U+{ord(ch):04X}")
            i += 1
        else:
            warnings.append(f"unknown code point U+{ord(ch):04X} ({ch})")
            segs.append(("X", ch, False))
            i += 1
    return segs


def _delete_schwas(segs: list[tuple[str, str, bool]]) -> list[tuple[str, str, bool]]:
    """Apply final then medial (right-to-left) schwa deletion in place."""
    segs = list(segs)

    def is_vowel(idx: int) -> bool:
        return 0 <= idx < len(segs) and segs[idx][0] == "V"

    def is_cons(idx: int) -> bool:
        return 0 <= idx < len(segs) and segs[idx][0] == "C"

    # word-final inherent schwa
    if segs and segs[-1] == ("V", "a", True):
        vowels = sum(1 for s in segs if s[0] == "V")
        # count consonants immediately preceding the final schwa
        j = len(segs) - 2
        cluster = []
        while j >= 0 and segs[j][0] == "C":
            cluster.append(segs[j][1])
            j -= 1
        keep = vowels <= 1 or (len(cluster) >= 2 and cluster[0] in ("y", "r", "l", "v"))
        if not keep:
            segs.pop()

    # medial deletion, right to left:  V C (a) C V  ->  V C C V
    i = len(segs) - 1
    while i >= 0:
        kind, val, inherent = segs[i]
        if (
            kind == "V"
            and inherent
            and val == "a"
            and is_cons(i - 1)
            and is_vowel(i - 2)
            and is_cons(i + 1)
            and is_vowel(i + 2)
        ):
            del segs[i]
        i -= 1
    return segs


class Transliterator:
    """Rule-based Devanagari-to-roman converter."""

    def __init__(self, exceptions: dict[str, str] | None = None):
        self.exceptions = dict(exceptions or {})

    @classmethod
    def from_exceptions_file(cls, path: str | Path) -> "Transliterator":
        exceptions = {}
        for raw in Path(path).read_text(encoding="utf-8").splitlines():
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            dev, _, roman = line.partition("\t")
            exceptions[unicodedata.normalize("NFC", dev.strip())] = roman.strip()
        return cls(exceptions)

    def word(self, word: str, warnings: list[str]) -> str:
        if word in self.exceptions:
            return self.exceptions[word]
        segs = _delete_schwas(_segment_word(word, warnings))
        return "".join(val for _, val, _ in segs)

    def __call__(self, text: str) -> RomanizedText:
        text = unicodedata.normalize("NFC", text)
        warnings: list[str] = []
        out: list[str] = []
        saw_devanagari = False
        pos = 0
        for match in re.finditer(r"[ऀ-ॿ‌‍]+", text):
            out.append(text[pos : match.start()])
            chunk = "".join(ch for ch in match.group(0) if ch not in IGNORED)
            if chunk:
                saw_devanagari = True
                out.append(self.word(chunk, warnings))
            pos = match.end()
        out.append(text[pos:])
        roman = unicodedata.normalize("NFC", "".join(out))
        return RomanizedText(
            text=roman,
            provenance="native-script" if saw_devanagari else "already-romanized",
            warnings=warnings,
        )


DEFAULT_EXCEPTIONS_PATH = Path(__file__).parent / "data" / "translit_exceptions.tsv"

_default = (
    Transliterator.from_exceptions_file(DEFAULT_EXCEPTIONS_PATH)
    if DEFAULT_EXCEPTIONS_PATH.exists()
    else Transliterator()
)


def dev_to_iast(text: str, exceptions: dict[str, str] | None = None) -> RomanizedText:
    """Romanize *text*; non-Devanagari spans pass through unchanged."""
    tr = Transliterator(exceptions) if exceptions else _default
    return tr(text)


_KEY_SEPARATORS = re.compile(r"[\s_]+")


def normalize_key(text: str) -> str:
    """Canonical lexicon key: NFC-composed, lowercased, spaces to underscores."""
    text = unicodedata.normalize("NFC", text)
    text = _KEY_SEPARATORS.sub("_", text.strip())
    return text.lower()
