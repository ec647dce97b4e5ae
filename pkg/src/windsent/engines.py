"""Three independent rule-based sentiment scorers sharing one output type.

valence_rule : per-token valences from a valence lexicon, adjusted by
               negation flip-and-damp, adjacent degree modifiers, ALL-CAPS
               emphasis and exclamation amplification (the latter two only
               when raw text is supplied), contrast-clause weighting around
               "but", then normalized to a compound via s/sqrt(s^2 + alpha).
pattern_avg  : mean polarity and subjectivity over matched pattern entries;
               intensifier entries multiply the next matched word, negation
               within a 3-token window damps it by -0.5.
synset       : POS-aware sense lookup; first_sense scores the top-ranked
               sense, average_senses the rank-weighted mean; the result is
               the mean contribution over matched tokens.

All scorers are pure functions of (input, lexicon, config). They return
exactly 0.0 polarity for zero-signal input by construction, never by
rounding, because the labeling stage compares against zero.

Pipeline modes: the default "paper_faithful" mode feeds the valence engine
cleaned tokens only, which leaves its caps/punctuation heuristics inert;
"engine_native" additionally hands it the raw comment text.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from pathlib import Path
from typing import Mapping, Sequence

from .lexicons import (
    Lexicon,
    LexiconSet,
    WrongKindError,
    lookup_pattern,
    lookup_synsets,
    lookup_valence,
)
from .preprocess import DEFAULT_PUNCTUATION, URL_PREFIXES, CleanedDocument

ENGINE_VALENCE = "valence_rule"
ENGINE_PATTERN = "pattern_avg"
ENGINE_SYNSET = "synset"
ENGINES = (ENGINE_PATTERN, ENGINE_SYNSET, ENGINE_VALENCE)

MODE_PAPER = "paper_faithful"
MODE_NATIVE = "engine_native"
PIPELINE_MODES = (MODE_PAPER, MODE_NATIVE)

DISAMBIGUATION_FIRST = "first_sense"
DISAMBIGUATION_AVERAGE = "average_senses"

# closed modifier vocabularies; punctuation stripping mangles contractions,
# hence the bare "nt" form
NEGATION_WORDS = frozenset({"not", "no", "never", "nt", "neither", "nor", "cannot"})
AMPLIFIERS = frozenset({
    "very", "really", "extremely", "absolutely", "incredibly", "totally",
    "completely", "utterly", "truly", "deeply", "especially", "particularly",
    "remarkably", "exceptionally", "hugely", "enormously", "insanely",
    "super", "so", "too", "much",
})
DAMPENERS = frozenset({
    "slightly", "somewhat", "barely", "hardly", "marginally", "scarcely",
    "kinda", "sorta", "bit", "little", "rather", "fairly", "almost",
    "nearly", "partly", "moderately",
})
DEGREE_WORDS = AMPLIFIERS | DAMPENERS
MODIFIER_WORDS = NEGATION_WORDS | DEGREE_WORDS
CONTRAST_WORD = "but"

PATTERN_NEGATION_WINDOW = 3
PATTERN_NEGATION_FACTOR = -0.5

_DATA_DIR = Path(__file__).resolve().parent / "data"
DEFAULT_POS_TABLE_PATH = _DATA_DIR / "pos_tags.tsv"


@dataclass(frozen=True)
class ValenceRuleConfig:
    negation_window: int = 3
    negation_factor: float = -0.74
    booster_increment: float = 0.293
    caps_increment: float = 0.733
    exclamation_increment: float = 0.292
    max_exclamations: int = 4
    but_discount: float = 0.5
    but_boost: float = 1.5
    normalization_alpha: float = 15.0

    def __post_init__(self):
        if self.negation_window < 0:
            raise ValueError("negation_window must be >= 0")
        for name in ("booster_increment", "caps_increment", "exclamation_increment"):
            if getattr(self, name) < 0:
                raise ValueError(f"{name} must be >= 0")
        if self.normalization_alpha <= 0:
            raise ValueError("normalization_alpha must be > 0")


DEFAULT_VALENCE_CONFIG = ValenceRuleConfig()


@dataclass(frozen=True)
class SentimentScore:
    engine: str
    polarity: float
    subjectivity: float | None = None
    proportions: tuple[float, float, float] | None = None  # (pos, neu, neg)

    def __post_init__(self):
        if not -1.0 <= self.polarity <= 1.0:
            raise ValueError(f"polarity {self.polarity} outside [-1, 1]")
        if self.subjectivity is not None and not 0.0 <= self.subjectivity <= 1.0:
            raise ValueError(f"subjectivity {self.subjectivity} outside [0, 1]")
        if self.proportions is not None:
            total = self.proportions[0] + self.proportions[1] + self.proportions[2]
            if abs(total - 1.0) > 1e-9:
                raise ValueError(f"proportions sum {total} != 1")


def compound_from_sum(raw_sum: float, alpha: float = 15.0) -> float:
    """Map an unbounded valence sum into [-1, 1]: s / sqrt(s^2 + alpha)."""
    value = raw_sum / math.sqrt(raw_sum * raw_sum + alpha)
    if value > 1.0:
        return 1.0
    if value < -1.0:
        return -1.0
    return value


def _caps_profile(raw_text: str) -> tuple[frozenset[str], bool]:
    """Words written in ALL CAPS in the raw text (lowercased, with '#' and
    punctuation deleted like the cleaning pass does), plus whether the text
    is uniformly caps, in which case emphasis carries no signal."""
    cased = []
    for piece in raw_text.split():
        if piece.lower().startswith(URL_PREFIXES):
            continue
        cleaned = "".join(c for c in piece if c not in DEFAULT_PUNCTUATION)
        if cleaned and any(c.isalpha() for c in cleaned):
            cased.append(cleaned)
    upper = [w for w in cased if w.isupper()]
    all_caps = bool(cased) and len(upper) == len(cased)
    return frozenset(w.lower() for w in upper), all_caps


def score_valence_rule(tokens: Sequence[str], lexicon: Lexicon,
                       config: ValenceRuleConfig = DEFAULT_VALENCE_CONFIG,
                       raw_text: str | None = None) -> SentimentScore:
    if lexicon.kind != "valence":
        raise WrongKindError("valence", lexicon.kind)

    caps_words: frozenset[str] = frozenset()
    all_caps = False
    if raw_text is not None:
        caps_words, all_caps = _caps_profile(raw_text)

    valences: list[float] = []
    for i, token in enumerate(tokens):
        if token in MODIFIER_WORDS:
            valences.append(0.0)
            continue
        base = lookup_valence(lexicon, token)
        if base is None:
            valences.append(0.0)
            continue
        v = base
        # negation: flip and damp when a negation word sits in the window
        lo = i - config.negation_window
        if lo < 0:
            lo = 0
        if any(t in NEGATION_WORDS for t in tokens[lo:i]):
            v = v * config.negation_factor
        # adjacent run of degree modifiers, nearest first, sign-following
        j = i - 1
        while j >= 0 and tokens[j] in DEGREE_WORDS:
            if v > 0:
                sign = 1.0
            elif v < 0:
                sign = -1.0
            else:
                sign = 0.0
            if tokens[j] in AMPLIFIERS:
                v = v + sign * config.booster_increment
            else:
                v = v - sign * config.booster_increment
            j -= 1
        # ALL-CAPS emphasis only when the whole text is not shouting
        if caps_words and not all_caps and token in caps_words:
            if v > 0:
                v = v + config.caps_increment
            elif v < 0:
                v = v - config.caps_increment
        valences.append(v)

    if CONTRAST_WORD in tokens:
        pivot = list(tokens).index(CONTRAST_WORD)
        for k in range(len(valences)):
            if k < pivot:
                valences[k] = valences[k] * config.but_discount
            elif k > pivot:
                valences[k] = valences[k] * config.but_boost

    s = 0.0
    for v in valences:
        s = s + v
    if raw_text is not None and s != 0.0:
        amplification = min(raw_text.count("!"), config.max_exclamations) \
            * config.exclamation_increment
        if s > 0:
            s = s + amplification
        else:
            s = s - amplification
    compound = compound_from_sum(s, config.normalization_alpha)

    pos_mass = 0.0
    neg_mass = 0.0
    neu_mass = 0.0
    for v in valences:
        if v > 0:
            pos_mass = pos_mass + v
        elif v < 0:
            neg_mass = neg_mass - v
        else:
            neu_mass = neu_mass + 1.0
    total = pos_mass + neg_mass + neu_mass
    if total == 0.0:
        proportions = (0.0, 1.0, 0.0)
    else:
        proportions = (pos_mass / total, neu_mass / total, neg_mass / total)
    return SentimentScore(ENGINE_VALENCE, compound, proportions=proportions)


def score_pattern_avg(tokens: Sequence[str], lexicon: Lexicon) -> SentimentScore:
    if lexicon.kind != "pattern":
        raise WrongKindError("pattern", lexicon.kind)
    polarity_sum = 0.0
    subjectivity_sum = 0.0
    matched = 0
    for i, token in enumerate(tokens):
        entry = lookup_pattern(lexicon, token)
        if entry is None or entry.is_intensifier:
            continue
        p = entry.polarity
        if i > 0:
            previous = lookup_pattern(lexicon, tokens[i - 1])
            if previous is not None and previous.is_intensifier:
                p = p * previous.intensity_factor
        lo = i - PATTERN_NEGATION_WINDOW
        if lo < 0:
            lo = 0
        if any(t in NEGATION_WORDS for t in tokens[lo:i]):
            p = p * PATTERN_NEGATION_FACTOR
        # per-word clamp keeps boosted words inside the polarity scale
        if p > 1.0:
            p = 1.0
        elif p < -1.0:
            p = -1.0
        polarity_sum = polarity_sum + p
        subjectivity_sum = subjectivity_sum + entry.subjectivity
        matched += 1
    if matched == 0:
        return SentimentScore(ENGINE_PATTERN, 0.0, subjectivity=0.0)
    return SentimentScore(ENGINE_PATTERN, polarity_sum / matched,
                          subjectivity=subjectivity_sum / matched)


def load_pos_table(path: str | Path = DEFAULT_POS_TABLE_PATH) -> Mapping[str, str]:
    table: dict[str, str] = {}
    for raw in Path(path).read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        word, tag = line.split("\t")
        table[word] = tag
    return table


@lru_cache(maxsize=None)
def _cached_pos_table(path: str) -> Mapping[str, str]:
    return load_pos_table(path)


def tag_pos(tokens: Sequence[str],
            table: Mapping[str, str] | None = None) -> list[tuple[str, str]]:
    """Most-frequent-tag lookup with suffix fallback: -ly adverb, -ing/-ed
    verb, -ous/-ful/-able adjective, noun otherwise."""
    if table is None:
        table = _cached_pos_table(str(DEFAULT_POS_TABLE_PATH))
    tagged = []
    for token in tokens:
        tag = table.get(token)
        if tag is None:
            if token.endswith("ly"):
                tag = "adv"
            elif token.endswith("ing") or token.endswith("ed"):
                tag = "verb"
            elif token.endswith(("ous", "ful", "able")):
                tag = "adj"
            else:
                tag = "noun"
        tagged.append((token, tag))
    return tagged


def score_synset(tagged_tokens: Sequence[tuple[str, str]], lexicon: Lexicon,
                 disambiguation: str = DISAMBIGUATION_FIRST) -> SentimentScore:
    if lexicon.kind != "synset":
        raise WrongKindError("synset", lexicon.kind)
    if disambiguation not in (DISAMBIGUATION_FIRST, DISAMBIGUATION_AVERAGE):
        raise ValueError(f"unknown disambiguation: {disambiguation!r}")
    total = 0.0
    matched = 0
    for token, tag in tagged_tokens:
        senses = lookup_synsets(lexicon, token, tag)
        if not senses:
            continue
        if disambiguation == DISAMBIGUATION_FIRST:
            contribution = senses[0].pos_score - senses[0].neg_score
        else:
            numerator = 0.0
            denominator = 0.0
            for sense in senses:
                numerator = numerator + (sense.pos_score - sense.neg_score) / sense.sense_rank
                denominator = denominator + 1.0 / sense.sense_rank
            contribution = numerator / denominator
        total = total + contribution
        matched += 1
    if matched == 0:
        return SentimentScore(ENGINE_SYNSET, 0.0)
    polarity = total / matched
    if polarity > 1.0:
        polarity = 1.0
    elif polarity < -1.0:
        polarity = -1.0
    return SentimentScore(ENGINE_SYNSET, polarity)


@dataclass(frozen=True)
class EngineScores:
    pattern_avg: SentimentScore
    synset: SentimentScore
    valence_rule: SentimentScore

    def by_engine(self) -> dict[str, SentimentScore]:
        return {
            ENGINE_PATTERN: self.pattern_avg,
            ENGINE_SYNSET: self.synset,
            ENGINE_VALENCE: self.valence_rule,
        }


def score_all(document: CleanedDocument, lexicons: LexiconSet,
              valence_config: ValenceRuleConfig = DEFAULT_VALENCE_CONFIG,
              mode: str = MODE_PAPER,
              disambiguation: str = DISAMBIGUATION_FIRST,
              pos_table: Mapping[str, str] | None = None) -> EngineScores:
    """Run the three engines on one cleaned document. The engines never see
    each other's output; scoring order is irrelevant."""
    if document.dropped:
        raise ValueError(f"document {document.comment_id} was dropped ({document.drop_reason})")
    if mode not in PIPELINE_MODES:
        raise ValueError(f"unknown pipeline mode: {mode!r}")
    raw = document.raw_text if mode == MODE_NATIVE else None
    tokens = document.tokens
    return EngineScores(
        pattern_avg=score_pattern_avg(tokens, lexicons.pattern),
        synset=score_synset(tag_pos(tokens, pos_table), lexicons.synset,
                            disambiguation),
        valence_rule=score_valence_rule(tokens, lexicons.valence,
                                        valence_config, raw_text=raw),
    )
