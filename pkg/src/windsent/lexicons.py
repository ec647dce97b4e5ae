"""The three lexicon kinds backing the sentiment engines.

File formats (UTF-8, '#'-prefixed comment lines ignored):
  valence : word<TAB>valence                       valence in [-4, +4]
  pattern : word<TAB>polarity<TAB>subjectivity<TAB>intensifier_flag<TAB>intensity_factor
  synset  : synset_id<TAB>pos<TAB>pos_score<TAB>neg_score<TAB>sense_rank<TAB>lemma1,lemma2,...

Every invariant is checked at load time; a file that violates one never
produces a partially valid lexicon. Loaded lexicons are immutable and safe
for concurrent lookup.
"""

from __future__ import annotations

from dataclasses import dataclass
from pathlib import Path

from .errors import WindsentError

LEXICON_KINDS = ("valence", "pattern", "synset")
POS_TAGS = ("noun", "verb", "adj", "adv")

VALENCE_BOUND = 4.0
_SCORE_SUM_TOL = 1e-9

# fixed file names inside a lexicon directory
LEXICON_FILENAMES = {
    "valence": "valence.tsv",
    "pattern": "pattern.tsv",
    "synset": "synset.tsv",
}

_DATA_DIR = Path(__file__).resolve().parent / "data"


def bundled_lexicon_dir() -> Path:
    return _DATA_DIR / "lexicons"


class MalformedEntryError(WindsentError):
    code = "lexicon/malformed-entry"

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class OutOfRangeScoreError(WindsentError):
    code = "lexicon/out-of-range"

    def __init__(self, line: int, reason: str):
        super().__init__(f"line {line}: {reason}")
        self.line = line
        self.reason = reason


class DuplicateWordError(WindsentError):
    code = "lexicon/duplicate-word"

    def __init__(self, word: str, line: int):
        super().__init__(f"line {line}: duplicate word {word!r}")
        self.word = word
        self.line = line


class WrongKindError(WindsentError):
    code = "lexicon/wrong-kind"

    def __init__(self, expected: str, got: str):
        super().__init__(f"expected a {expected} lexicon, got {got}")
        self.expected = expected
        self.got = got


class LexiconFileError(WindsentError):
    code = "lexicon/file-not-readable"


@dataclass(frozen=True)
class ValenceEntry:
    word: str
    valence: float


@dataclass(frozen=True)
class PatternEntry:
    word: str
    polarity: float
    subjectivity: float
    is_intensifier: bool = False
    intensity_factor: float = 1.0


@dataclass(frozen=True)
class SynsetEntry:
    synset_id: str
    pos_tag: str
    pos_score: float
    neg_score: float
    lemmas: frozenset[str]
    sense_rank: int


class Lexicon:
    """Immutable lookup container for one lexicon kind."""

    def __init__(self, kind: str, source_path: str, entry_count: int,
                 valence=None, pattern=None, synsets=None):
        self.kind = kind
        self.source_path = source_path
        self.entry_count = entry_count
        self._valence: dict[str, float] = valence or {}
        self._pattern: dict[str, PatternEntry] = pattern or {}
        self._synsets: dict[tuple[str, str], tuple[SynsetEntry, ...]] = synsets or {}

    def __repr__(self):
        return f"Lexicon(kind={self.kind!r}, entries={self.entry_count})"


def lookup_valence(lexicon: Lexicon, word: str) -> float | None:
    if lexicon.kind != "valence":
        raise WrongKindError("valence", lexicon.kind)
    return lexicon._valence.get(word)


def lookup_pattern(lexicon: Lexicon, word: str) -> PatternEntry | None:
    if lexicon.kind != "pattern":
        raise WrongKindError("pattern", lexicon.kind)
    return lexicon._pattern.get(word)


def lookup_synsets(lexicon: Lexicon, lemma: str, pos_tag: str) -> tuple[SynsetEntry, ...]:
    """All senses for (lemma, pos) in ascending sense_rank order; empty
    tuple when the pair is unknown."""
    if lexicon.kind != "synset":
        raise WrongKindError("synset", lexicon.kind)
    return lexicon._synsets.get((lemma, pos_tag), ())


def _data_lines(path: Path):
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise LexiconFileError(f"{path}: {exc.strerror or exc}") from exc
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if line and not line.startswith("#"):
            yield lineno, line


def _parse_float(value: str, lineno: int, what: str) -> float:
    try:
        return float(value)
    except ValueError:
        raise MalformedEntryError(lineno, f"{what} is not a number: {value!r}") from None


def _check_word(word: str, lineno: int) -> str:
    if not word:
        raise MalformedEntryError(lineno, "empty word")
    if word != word.lower():
        raise MalformedEntryError(lineno, f"word not lowercase: {word!r}")
    return word


def _load_valence(path: Path) -> Lexicon:
    entries: dict[str, float] = {}
    for lineno, line in _data_lines(path):
        fields = line.split("\t")
        if len(fields) != 2:
            raise MalformedEntryError(lineno, f"expected 2 fields, got {len(fields)}")
        word = _check_word(fields[0], lineno)
        valence = _parse_float(fields[1], lineno, "valence")
        if not -VALENCE_BOUND <= valence <= VALENCE_BOUND:
            raise OutOfRangeScoreError(lineno, f"valence {valence} outside [-4, 4]")
        if word in entries:
            raise DuplicateWordError(word, lineno)
        entries[word] = valence
    return Lexicon("valence", str(path), len(entries), valence=entries)


_TRUE_FLAGS = {"1", "true"}
_FALSE_FLAGS = {"0", "false"}


def _load_pattern(path: Path) -> Lexicon:
    entries: dict[str, PatternEntry] = {}
    for lineno, line in _data_lines(path):
        fields = line.split("\t")
        if len(fields) != 5:
            raise MalformedEntryError(lineno, f"expected 5 fields, got {len(fields)}")
        word = _check_word(fields[0], lineno)
        polarity = _parse_float(fields[1], lineno, "polarity")
        subjectivity = _parse_float(fields[2], lineno, "subjectivity")
        flag = fields[3].lower()
        if flag in _TRUE_FLAGS:
            is_intensifier = True
        elif flag in _FALSE_FLAGS:
            is_intensifier = False
        else:
            raise MalformedEntryError(lineno, f"bad intensifier flag: {fields[3]!r}")
        factor = _parse_float(fields[4], lineno, "intensity_factor")
        if not -1.0 <= polarity <= 1.0:
            raise OutOfRangeScoreError(lineno, f"polarity {polarity} outside [-1, 1]")
        if not 0.0 <= subjectivity <= 1.0:
            raise OutOfRangeScoreError(lineno, f"subjectivity {subjectivity} outside [0, 1]")
        if factor <= 0.0:
            raise OutOfRangeScoreError(lineno, f"intensity_factor {factor} not positive")
        if word in entries:
            raise DuplicateWordError(word, lineno)
        entries[word] = PatternEntry(word, polarity, subjectivity, is_intensifier, factor)
    return Lexicon("pattern", str(path), len(entries), pattern=entries)


def _load_synset(path: Path) -> Lexicon:
    by_key: dict[tuple[str, str], list[SynsetEntry]] = {}
    seen_ids: set[str] = set()
    seen_ranks: set[tuple[str, str, int]] = set()
    count = 0
    for lineno, line in _data_lines(path):
        fields = line.split("\t")
        if len(fields) != 6:
            raise MalformedEntryError(lineno, f"expected 6 fields, got {len(fields)}")
        synset_id = fields[0]
        if not synset_id:
            raise MalformedEntryError(lineno, "empty synset id")
        if synset_id in seen_ids:
            raise DuplicateWordError(synset_id, lineno)
        pos_tag = fields[1]
        if pos_tag not in POS_TAGS:
            raise MalformedEntryError(lineno, f"bad pos tag: {pos_tag!r}")
        pos_score = _parse_float(fields[2], lineno, "pos_score")
        neg_score = _parse_float(fields[3], lineno, "neg_score")
        for name, score in (("pos_score", pos_score), ("neg_score", neg_score)):
            if not 0.0 <= score <= 1.0:
                raise OutOfRangeScoreError(lineno, f"{name} {score} outside [0, 1]")
        if pos_score + neg_score > 1.0 + _SCORE_SUM_TOL:
            raise MalformedEntryError(
                lineno, f"pos_score + neg_score = {pos_score + neg_score} exceeds 1")
        try:
            sense_rank = int(fields[4])
        except ValueError:
            raise MalformedEntryError(lineno, f"sense_rank is not an integer: {fields[4]!r}") from None
        if sense_rank < 1:
            raise MalformedEntryError(lineno, f"sense_rank {sense_rank} not positive")
        lemmas = [_check_word(w, lineno) for w in fields[5].split(",") if w]
        if not lemmas:
            raise MalformedEntryError(lineno, "empty lemma set")
        entry = SynsetEntry(synset_id, pos_tag, pos_score, neg_score,
                            frozenset(lemmas), sense_rank)
        for lemma in lemmas:
            key = (lemma, pos_tag, sense_rank)
            if key in seen_ranks:
                raise MalformedEntryError(
                    lineno, f"duplicate sense_rank {sense_rank} for ({lemma}, {pos_tag})")
            seen_ranks.add(key)
            by_key.setdefault((lemma, pos_tag), []).append(entry)
        seen_ids.add(synset_id)
        count += 1
    indexed = {
        key: tuple(sorted(senses, key=lambda e: e.sense_rank))
        for key, senses in by_key.items()
    }
    return Lexicon("synset", str(path), count, synsets=indexed)


_LOADERS = {
    "valence": _load_valence,
    "pattern": _load_pattern,
    "synset": _load_synset,
}


def load_lexicon(path: str | Path, kind: str) -> Lexicon:
    if kind not in LEXICON_KINDS:
        raise ValueError(f"unknown lexicon kind: {kind!r}")
    return _LOADERS[kind](Path(path))


@dataclass(frozen=True)
class LexiconSet:
    valence: Lexicon
    pattern: Lexicon
    synset: Lexicon


def load_lexicon_set(directory: str | Path | None = None) -> LexiconSet:
    """Load valence.tsv, pattern.tsv and synset.tsv from a directory
    (bundled lexicons when none is given)."""
    base = Path(directory) if directory is not None else bundled_lexicon_dir()
    return LexiconSet(
        valence=load_lexicon(base / LEXICON_FILENAMES["valence"], "valence"),
        pattern=load_lexicon(base / LEXICON_FILENAMES["pattern"], "pattern"),
        synset=load_lexicon(base / LEXICON_FILENAMES["synset"], "synset"),
    )
