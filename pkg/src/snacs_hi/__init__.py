"""Hindi-Urdu adposition/case supersense annotation toolkit."""

from pathlib import Path

from .hierarchy import (
    ConstrualLabel,
    Hierarchy,
    Supersense,
    default_hierarchy,
    load_inventory,
)
from .lexicon import LexEntry, Lexicon, License, SurfaceVariant, load_lexicon
from .matcher import AdpositionTarget, Matcher, Sentence, resolve_overlaps
from .translit import RomanizedText, dev_to_iast, normalize_key
from .validator import (
    AnnotationRecord,
    DiagnosticChecklist,
    ValidationIssue,
    Validator,
)
from . import corpus

__version__ = "0.1.0"

DATA_DIR = Path(__file__).parent / "data"
GOLD_CORPUS_PATH = DATA_DIR / "gold.tsv"


class Toolkit:
    """Convenience bundle: hierarchy + lexicon + matcher + validator."""

    def __init__(self, hierarchy=None, lexicon=None, max_gap=None):
        self.hierarchy = hierarchy or default_hierarchy()
        self.lexicon = lexicon or load_lexicon(self.hierarchy)
        kwargs = {} if max_gap is None else {"max_gap": max_gap}
        self.matcher = Matcher(self.lexicon, **kwargs)
        self.validator = Validator(self.hierarchy, self.lexicon)


def load_toolkit(hierarchy_path=None, lexicon_path=None) -> Toolkit:
    hierarchy = load_inventory(Path(hierarchy_path)) if hierarchy_path else default_hierarchy()
    lexicon = (
        load_lexicon(hierarchy, lexicon_path) if lexicon_path else load_lexicon(hierarchy)
    )
    return Toolkit(hierarchy, lexicon)
