"""End-to-end orchestration: load, preprocess, score, label, aggregate,
serialize. Everything runs in corpus order; results are deterministic for
identical inputs and configuration.
"""

from __future__ import annotations

import json
from pathlib import Path

from . import analytics, corpus, engines, preprocess, report as report_mod, svgplots
from .analytics import LabeledComment
from .config import RunConfig
from .lexicons import LexiconSet, load_lexicon_set
from .preprocess import CleanedDocument, PreprocessConfig


def analyze_collection(collection: corpus.CommentCollection,
                       lexicons: LexiconSet,
                       preprocess_config: PreprocessConfig,
                       config: RunConfig) -> report_mod.AnalysisReport:
    """Pure analysis core: no file output."""
    documents = preprocess.preprocess_corpus(collection, preprocess_config)
    kept = [doc for doc in documents if not doc.dropped]
    dropped = tuple((doc.comment_id, doc.drop_reason)
                    for doc in documents if doc.dropped)

    rows = []
    labeled: dict[str, list[LabeledComment]] = {engine: [] for engine in engines.ENGINES}
    pattern_scores = []
    for doc in kept:
        scores = engines.score_all(
            doc, lexicons,
            valence_config=config.valence,
            mode=config.mode,
            disambiguation=config.disambiguation,
        )
        labels = {}
        for engine, score in scores.by_engine().items():
            item = analytics.label_comment(doc.comment_id, score, config.epsilon)
            labeled[engine].append(item)
            labels[engine] = item.label
        pattern_scores.append(scores.pattern_avg)
        rows.append(report_mod.CommentRow(doc.comment_id, scores, labels))

    distributions = {
        engine: analytics.distribution(labeled[engine], engine)
        for engine in engines.ENGINES
    }
    histogram = analytics.subjectivity_histogram(pattern_scores, config.bin_count)

    lexicon_for = {
        engines.ENGINE_VALENCE: lexicons.valence,
        engines.ENGINE_PATTERN: lexicons.pattern,
        engines.ENGINE_SYNSET: lexicons.synset,
    }
    rankings = {
        engine: {
            side: analytics.top_words(kept, labeled[engine], lexicon_for[engine],
                                      engine, side, config.top_n)
            for side in report_mod.SIDES
        }
        for engine in engines.ENGINES
    }

    return report_mod.AnalysisReport(
        config_digest=config.digest(),
        corpus_size=len(collection),
        kept_count=len(kept),
        dropped_count=len(dropped),
        input_file=config.input_path.name,
        pipeline_mode=config.mode,
        epsilon=config.epsilon,
        top_n=config.top_n,
        comments=tuple(rows),
        dropped=dropped,
        distributions=distributions,
        histogram=histogram,
        rankings=rankings,
    )


def _load_collection(config: RunConfig) -> tuple[corpus.CommentCollection,
                                                 tuple[corpus.SkippedRecord, ...]]:
    if config.lenient:
        return corpus.load_corpus_lenient(config.input_path, config.input_format)
    return corpus.load_corpus(config.input_path, config.input_format), ()


def _preprocess_config(config: RunConfig) -> PreprocessConfig:
    return preprocess.default_config(
        stopwords_path=config.stopwords_path,
        lemmas_path=config.lemmas_path,
        min_token_count=config.min_token_count,
        apply_stemming=config.apply_stemming,
        apply_lemmatization=config.apply_lemmatization,
    )


def analyze_only(config: RunConfig) -> report_mod.AnalysisReport:
    """Validate, load and analyze without writing any files."""
    config.validate()
    collection, _ = _load_collection(config)
    lexicons = load_lexicon_set(config.lexicon_dir)
    return analyze_collection(collection, lexicons, _preprocess_config(config), config)


def run_analyze(config: RunConfig) -> report_mod.AnalysisReport:
    """Execute the full pipeline and write report files (plus plots when
    enabled) into the output directory. Validation happens before any output
    is written, so a bad configuration leaves no partial results."""
    config.validate()
    collection, skipped = _load_collection(config)
    lexicons = load_lexicon_set(config.lexicon_dir)
    result = analyze_collection(collection, lexicons, _preprocess_config(config), config)
    report_mod.write_report_files(result, config.out_dir)
    if skipped:
        corpus.write_skip_report(skipped, config.out_dir / "skipped.jsonl")
    if config.plots:
        svgplots.render_report_plots(result, config.out_dir / "plots")
    return result


def cleaned_document_record(doc: CleanedDocument) -> dict:
    """JSONL record for one cleaned document. The ``text`` field holds the
    space-joined tokens so the file is itself loadable as a corpus."""
    return {
        "id": doc.comment_id,
        "text": " ".join(doc.tokens),
        "tokens": list(doc.tokens),
        "dropped": doc.dropped,
        "drop_reason": doc.drop_reason,
    }


def run_preprocess_only(config: RunConfig, out_file: str | Path) -> Path:
    """Clean the corpus and write one JSONL record per input comment,
    including dropped records with their reasons."""
    config.validate(require_lexicons=False)
    collection, skipped = _load_collection(config)
    documents = preprocess.preprocess_corpus(collection, _preprocess_config(config))
    out_path = Path(out_file)
    if out_path.parent and not out_path.parent.exists():
        out_path.parent.mkdir(parents=True, exist_ok=True)
    lines = [
        json.dumps(cleaned_document_record(doc), ensure_ascii=False, sort_keys=True)
        for doc in documents
    ]
    out_path.write_text("".join(line + "\n" for line in lines), encoding="utf-8")
    if skipped:
        corpus.write_skip_report(skipped, out_path.with_suffix(".skipped.jsonl"))
    return out_path
