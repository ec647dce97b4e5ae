"""Text cleaning pipeline.

Per comment, in order: null/empty check, normalize (lowercase, drop URL
tokens, delete '#', delete punctuation, collapse whitespace), tokenize,
stopword removal, lemmatization (plus optional stemming), and a length
threshold that drops documents with fewer than ``min_token_count`` tokens.

The normalization order is a fixed pipeline constant: URLs are removed
before punctuation is deleted, otherwise punctuation stripping would shred
URLs into residue tokens.

Idempotence guarantee: re-running the pipeline over the space-joined token
output reproduces the token sequence exactly. Two consequences shape the
implementation: the per-token transform is applied to a fixpoint, and
stopwords are filtered once more after lemmatization (a lemma such as
"ours" -> "our" may land on a stopword).
"""

from __future__ import annotations

import string
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Iterable, Mapping, Sequence

from .corpus import CommentCollection
from .stemming import stem

URL_PREFIXES = ("http://", "https://", "www.")
DEFAULT_PUNCTUATION = frozenset(string.punctuation)
_VOWELS = frozenset("aeiou")

_DATA_DIR = Path(__file__).resolve().parent / "data"
DEFAULT_STOPWORDS_PATH = _DATA_DIR / "stopwords.txt"
DEFAULT_LEMMAS_PATH = _DATA_DIR / "lemmas.tsv"


def load_stopwords(path: str | Path = DEFAULT_STOPWORDS_PATH) -> frozenset[str]:
    words = []
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if line and not line.startswith("#"):
            words.append(line)
    return frozenset(words)


def load_lemma_table(path: str | Path = DEFAULT_LEMMAS_PATH) -> Mapping[str, str]:
    table: dict[str, str] = {}
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        inflected, lemma = line.split("\t")
        table[inflected] = lemma
    return table


@lru_cache(maxsize=None)
def _cached_stopwords(path: str) -> frozenset[str]:
    return load_stopwords(path)


@lru_cache(maxsize=None)
def _cached_lemma_table(path: str) -> Mapping[str, str]:
    return load_lemma_table(path)


@dataclass(frozen=True)
class PreprocessConfig:
    stopwords: frozenset[str]
    lemma_table: Mapping[str, str]
    min_token_count: int = 3
    apply_stemming: bool = False
    apply_lemmatization: bool = True
    punctuation: frozenset[str] = DEFAULT_PUNCTUATION

    def __post_init__(self):
        if self.min_token_count < 1:
            raise ValueError("min_token_count must be >= 1")


def default_config(
    stopwords_path: str | Path | None = None,
    lemmas_path: str | Path | None = None,
    **overrides,
) -> PreprocessConfig:
    """Config backed by the bundled stopword list and lemma table; both
    paths are overridable."""
    stop = _cached_stopwords(str(stopwords_path or DEFAULT_STOPWORDS_PATH))
    table = _cached_lemma_table(str(lemmas_path or DEFAULT_LEMMAS_PATH))
    return PreprocessConfig(stopwords=stop, lemma_table=table, **overrides)


@dataclass(frozen=True)
class CleanedDocument:
    comment_id: str
    raw_text: str
    tokens: tuple[str, ...]
    drop_reason: str | None = None  # None | "null" | "too_short"

    @property
    def dropped(self) -> bool:
        return self.drop_reason is not None


def normalize(text: str, punctuation: frozenset[str] = DEFAULT_PUNCTUATION) -> str:
    text = text.lower()
    kept = [piece for piece in text.split() if not piece.startswith(URL_PREFIXES)]
    text = " ".join(kept)
    text = text.replace("#", "")
    text = "".join(c for c in text if c not in punctuation)
    return " ".join(text.split())


def tokenize(text: str) -> list[str]:
    return text.split()


def remove_stopwords(tokens: Iterable[str], stopwords: frozenset[str]) -> list[str]:
    return [t for t in tokens if t not in stopwords]


def _suffix_lemma(token: str) -> str | None:
    """One application of the fallback rules; None when nothing matches."""
    n = len(token)
    if token.endswith("ies") and n >= 5:
        return token[:-3] + "y"
    if n >= 5 and token.endswith(("ches", "shes", "xes", "zes", "sses")):
        return token[:-2]
    if (token.endswith("s") and not token.endswith(("ss", "us", "is")) and n >= 4):
        return token[:-1]
    if token.endswith("ing") and n >= 6 and any(c in _VOWELS for c in token[:-3]):
        return token[:-3]
    if (token.endswith("ed") and not token.endswith("eed") and n >= 5
            and any(c in _VOWELS for c in token[:-2])):
        return token[:-2]
    return None


def lemmatize(token: str, pos_hint: str | None = None,
              table: Mapping[str, str] | None = None) -> str:
    """Dictionary lemma when the token is in the table, else suffix-rule
    fallback, iterated to a fixpoint. Unknown tokens pass through.

    The bundled table is keyed by surface form alone, so ``pos_hint`` is
    accepted for interface symmetry but does not alter the lookup.
    """
    del pos_hint
    if table is None:
        table = _cached_lemma_table(str(DEFAULT_LEMMAS_PATH))
    seen = set()
    current = token
    while current not in seen:
        seen.add(current)
        if current in table:
            mapped = table[current]
            if mapped == current:
                return current
            current = mapped
            continue
        reduced = _suffix_lemma(current)
        if reduced is None:
            return current
        current = reduced
    return current  # defensive: table cycle


def _stem_fixpoint(token: str) -> str:
    current = token
    for _ in range(16):
        reduced = stem(current)
        if reduced == current:
            return current
        current = reduced
    return current


def _transform_token(token: str, config: PreprocessConfig) -> str:
    """Lemma/stem transform iterated to a joint fixpoint so that re-running
    the pipeline over its own output cannot shift a token further."""
    seen = set()
    current = token
    while current not in seen:
        seen.add(current)
        candidate = current
        if config.apply_lemmatization:
            candidate = lemmatize(candidate, table=config.lemma_table)
        if config.apply_stemming:
            candidate = _stem_fixpoint(candidate)
        if candidate == current:
            return current
        current = candidate
    return current


def preprocess_text(text: str | None, config: PreprocessConfig) -> tuple[tuple[str, ...], str | None]:
    """Clean one text; returns (tokens, drop_reason)."""
    if text is None or not text.strip():
        return (), "null"
    tokens = tokenize(normalize(text, config.punctuation))
    tokens = remove_stopwords(tokens, config.stopwords)
    tokens = [_transform_token(t, config) for t in tokens]
    tokens = remove_stopwords(tokens, config.stopwords)
    if len(tokens) < config.min_token_count:
        return tuple(tokens), "too_short"
    return tuple(tokens), None


def preprocess_corpus(collection: CommentCollection | Sequence,
                      config: PreprocessConfig | None = None) -> list[CleanedDocument]:
    """One CleanedDocument per input comment, in input order; dropped
    documents carry their reason and keep whatever tokens were computed."""
    if config is None:
        config = default_config()
    docs = []
    for comment in collection:
        tokens, reason = preprocess_text(comment.text, config)
        docs.append(CleanedDocument(
            comment_id=comment.id,
            raw_text=comment.text if comment.text is not None else "",
            tokens=tokens,
            drop_reason=reason,
        ))
    return docs
