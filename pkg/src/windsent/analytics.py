"""Sign-based polarity labeling and corpus-level analytics.

Labeling classifies the polarity value by sign: strictly positive scores
are positive, exact zero is neutral, the rest negative. A configurable
epsilon widens the neutral band (default 0, the exact sign rule).

Aggregations are pure and associative: distributions computed on corpus
shards and merged equal the whole-corpus distribution.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Mapping, Sequence

from .engines import (
    ENGINE_PATTERN,
    ENGINE_SYNSET,
    ENGINE_VALENCE,
    ENGINES,
    SentimentScore,
    tag_pos,
)
from .errors import WindsentError
from .lexicons import Lexicon, WrongKindError, lookup_pattern, lookup_synsets, lookup_valence
from .preprocess import CleanedDocument

POSITIVE = "positive"
NEUTRAL = "neutral"
NEGATIVE = "negative"
LABELS = (NEGATIVE, NEUTRAL, POSITIVE)

# lexicon kind expected by each engine
_ENGINE_KINDS = {
    ENGINE_VALENCE: "valence",
    ENGINE_PATTERN: "pattern",
    ENGINE_SYNSET: "synset",
}


class MixedEnginesError(WindsentError):
    code = "analytics/mixed-engines"

    def __init__(self, expected: str, got: str):
        super().__init__(f"expected {expected} entries, got {got}")


class MissingSubjectivityError(WindsentError):
    code = "analytics/missing-subjectivity"

    def __init__(self, engine: str):
        super().__init__(f"score from engine {engine!r} has no subjectivity")


def label_polarity(phi: float, epsilon: float = 0.0) -> str:
    if epsilon < 0:
        raise ValueError("epsilon must be >= 0")
    if phi > epsilon:
        return POSITIVE
    if abs(phi) <= epsilon:
        return NEUTRAL
    return NEGATIVE


def label(score: SentimentScore, epsilon: float = 0.0) -> str:
    return label_polarity(score.polarity, epsilon)


@dataclass(frozen=True)
class LabeledComment:
    comment_id: str
    engine: str
    score: SentimentScore
    label: str


def label_comment(comment_id: str, score: SentimentScore,
                  epsilon: float = 0.0) -> LabeledComment:
    return LabeledComment(comment_id, score.engine, score, label(score, epsilon))


@dataclass(frozen=True)
class DistributionReport:
    engine: str
    counts: Mapping[str, int]
    proportions: Mapping[str, float]

    @property
    def total(self) -> int:
        return sum(self.counts.values())


def _distribution_from_counts(engine: str, counts: dict[str, int]) -> DistributionReport:
    total = counts[NEGATIVE] + counts[NEUTRAL] + counts[POSITIVE]
    if total == 0:
        proportions = {lab: 0.0 for lab in LABELS}
    else:
        proportions = {lab: counts[lab] / total for lab in LABELS}
    return DistributionReport(engine, dict(counts), proportions)


def distribution(labeled: Sequence[LabeledComment], engine: str) -> DistributionReport:
    counts = {lab: 0 for lab in LABELS}
    for item in labeled:
        if item.engine != engine:
            raise MixedEnginesError(engine, item.engine)
        counts[item.label] += 1
    return _distribution_from_counts(engine, counts)


def merge_distributions(reports: Sequence[DistributionReport]) -> DistributionReport:
    if not reports:
        raise ValueError("cannot merge zero distribution reports")
    engine = reports[0].engine
    counts = {lab: 0 for lab in LABELS}
    for report in reports:
        if report.engine != engine:
            raise MixedEnginesError(engine, report.engine)
        for lab in LABELS:
            counts[lab] += report.counts.get(lab, 0)
    return _distribution_from_counts(engine, counts)


@dataclass(frozen=True)
class SubjectivityHistogram:
    bin_edges: tuple[float, ...]
    counts: tuple[int, ...]
    mean: float | None
    median: float | None

    @property
    def empty(self) -> bool:
        return self.mean is None


def subjectivity_histogram(scores: Sequence[SentimentScore],
                           bin_count: int = 10) -> SubjectivityHistogram:
    """Uniform bins over [0, 1]; a value on a bin boundary joins the lower
    bin (1.0 therefore joins the top bin); mean and median are exact."""
    if bin_count < 1:
        raise ValueError("bin_count must be >= 1")
    values = []
    for score in scores:
        if score.subjectivity is None:
            raise MissingSubjectivityError(score.engine)
        values.append(score.subjectivity)
    edges = tuple(i / bin_count for i in range(bin_count + 1))
    counts = [0] * bin_count
    for v in values:
        if v <= 0:
            index = 0
        else:
            index = math.ceil(v * bin_count) - 1
            if index > bin_count - 1:
                index = bin_count - 1
        counts[index] += 1
    if values:
        mean = sum(values) / len(values)
        ordered = sorted(values)
        mid = len(ordered) // 2
        if len(ordered) % 2 == 1:
            median = ordered[mid]
        else:
            median = (ordered[mid - 1] + ordered[mid]) / 2
    else:
        mean = None
        median = None
    return SubjectivityHistogram(edges, tuple(counts), mean, median)


@dataclass(frozen=True)
class WordRanking:
    engine: str
    side: str
    entries: tuple[tuple[str, int], ...]


def word_qualifies(lexicon: Lexicon, engine: str, word: str, side: str) -> bool:
    """Sign test under the lexicon of the engine that labeled the comment:
    valence > 0 / pattern polarity > 0 / top-ranked sense pos - neg > 0 for
    the positive side, the strict mirror for the negative side."""
    if side not in (POSITIVE, NEGATIVE):
        raise ValueError(f"side must be positive or negative, got {side!r}")
    if engine == ENGINE_VALENCE:
        value = lookup_valence(lexicon, word)
        if value is None:
            return False
        return value > 0 if side == POSITIVE else value < 0
    if engine == ENGINE_PATTERN:
        entry = lookup_pattern(lexicon, word)
        if entry is None:
            return False
        return entry.polarity > 0 if side == POSITIVE else entry.polarity < 0
    if engine == ENGINE_SYNSET:
        (_, tag), = tag_pos([word])
        senses = lookup_synsets(lexicon, word, tag)
        if not senses:
            return False
        diff = senses[0].pos_score - senses[0].neg_score
        return diff > 0 if side == POSITIVE else diff < 0
    raise ValueError(f"unknown engine: {engine!r}")


def top_words(documents: Sequence[CleanedDocument],
              labeled: Sequence[LabeledComment],
              lexicon: Lexicon, engine: str, side: str,
              n: int = 30) -> WordRanking:
    """The n most frequent side-qualifying words over the comments the
    engine labeled with that side; every token occurrence counts; ties break
    by ascending word order for reproducibility."""
    if engine not in ENGINES:
        raise ValueError(f"unknown engine: {engine!r}")
    if side not in (POSITIVE, NEGATIVE):
        raise ValueError(f"side must be positive or negative, got {side!r}")
    if lexicon.kind != _ENGINE_KINDS[engine]:
        raise WrongKindError(_ENGINE_KINDS[engine], lexicon.kind)
    if n < 1:
        raise ValueError("n must be >= 1")
    tokens_by_id = {doc.comment_id: doc.tokens for doc in documents}
    counts: dict[str, int] = {}
    for item in labeled:
        if item.engine != engine:
            raise MixedEnginesError(engine, item.engine)
        if item.label != side:
            continue
        try:
            tokens = tokens_by_id[item.comment_id]
        except KeyError:
            raise ValueError(f"no document for labeled comment {item.comment_id!r}") from None
        for token in tokens:
            if word_qualifies(lexicon, engine, token, side):
                counts[token] = counts.get(token, 0) + 1
    ranked = sorted(counts.items(), key=lambda kv: (-kv[1], kv[0]))
    return WordRanking(engine, side, tuple(ranked[:n]))
