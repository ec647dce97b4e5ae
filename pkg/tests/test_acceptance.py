"""Acceptance suite.

Each test enforces one release criterion at its stated tolerance and prints
one PASS/FAIL line. Fuzz tests use fixed seeds so failures reproduce.
"""

import hashlib
import json
import random
import time

import pytest

from windsent.analytics import (
    distribution,
    label_comment,
    label_polarity,
    merge_distributions,
    subjectivity_histogram,
    top_words,
)
from windsent.cli import main
from windsent.config import RunConfig
from windsent.corpus import Comment, CommentCollection, load_corpus
from windsent.engines import (
    AMPLIFIERS,
    DAMPENERS,
    ENGINES,
    NEGATION_WORDS,
    compound_from_sum,
    score_all,
    score_pattern_avg,
    score_synset,
    score_valence_rule,
    tag_pos,
)
from windsent.pipeline import analyze_collection, run_analyze
from windsent.preprocess import default_config, preprocess_corpus, preprocess_text


def report(number: int, name: str, ok: bool, detail: str = "") -> None:
    status = "PASS" if ok else "FAIL"
    suffix = f" ({detail})" if detail else ""
    print(f"ACCEPTANCE {number:02d} {name}: {status}{suffix}")
    assert ok, f"criterion {number} failed: {name} {suffix}"


def test_01_sign_labeling_conformance():
    rng = random.Random(97)
    start = time.perf_counter()
    mislabeled = 0
    for _ in range(100_000):
        phi = rng.uniform(-1.0, 1.0)
        expected = "positive" if phi > 0 else ("neutral" if phi == 0 else "negative")
        if label_polarity(phi, 0.0) != expected:
            mislabeled += 1
    for _ in range(1_000):
        if label_polarity(0.0, 0.0) != "neutral":
            mislabeled += 1
    elapsed = time.perf_counter() - start
    report(1, "sign labeling agrees with exact sign classification",
           mislabeled == 0 and elapsed < 5.0,
           f"{mislabeled} misclassified, {elapsed:.2f}s")


def _fuzz_vocabulary(lexicons):
    words = list(lexicons.valence._valence)[::3]
    words += list(lexicons.pattern._pattern)[::3]
    words += [lemma for (lemma, _pos) in lexicons.synset._synsets][::2]
    words += list(NEGATION_WORDS) + list(AMPLIFIERS) + list(DAMPENERS)
    words += ["but", "zzz", "qqq", "10", "20", "wind", "x1", "x2", "éolienne"]
    return words


def test_02_boundedness_fuzz(lexicons):
    rng = random.Random(1402)
    vocabulary = _fuzz_vocabulary(lexicons)
    start = time.perf_counter()
    violations = 0
    for i in range(10_000):
        length = rng.randint(0, 100)
        tokens = [rng.choice(vocabulary) for _ in range(length)]
        raw_text = None
        if i % 3 == 0:
            pieces = [t.upper() if rng.random() < 0.2 else t for t in tokens]
            raw_text = " ".join(pieces) + "!" * rng.randint(0, 6)
        valence = score_valence_rule(tokens, lexicons.valence, raw_text=raw_text)
        pattern = score_pattern_avg(tokens, lexicons.pattern)
        synset = score_synset(tag_pos(tokens), lexicons.synset,
                              "average_senses" if i % 2 else "first_sense")
        for score in (valence, pattern, synset):
            if not -1.0 <= score.polarity <= 1.0:
                violations += 1
        if not 0.0 <= pattern.subjectivity <= 1.0:
            violations += 1
        if abs(sum(valence.proportions) - 1.0) > 1e-9:
            violations += 1
    elapsed = time.perf_counter() - start
    report(2, "polarity/subjectivity/proportions bounded under fuzz",
           violations == 0 and elapsed < 30.0,
           f"{violations} violations, {elapsed:.1f}s")


def test_03_negation_sign_flip(lexicons):
    failures = []
    total = 0
    for word, valence in lexicons.valence._valence.items():
        if valence == 0:
            continue
        total += 1
        flipped = score_valence_rule(["not", word], lexicons.valence).polarity
        if valence > 0 and not flipped < 0:
            failures.append(word)
        if valence < 0 and not flipped > 0:
            failures.append(word)
    report(3, "negation strictly flips every lexicon entry",
           not failures and total > 0,
           f"{total - len(failures)}/{total} entries")


def test_04_normalization_oracle(lexicons):
    rng = random.Random(44)
    worst = 0.0
    for _ in range(1_000):
        s = rng.uniform(-20.0, 20.0)
        direct = s * (s * s + 15.0) ** -0.5  # independent evaluation
        worst = max(worst, abs(compound_from_sum(s, 15.0) - direct))
    # and through the engine itself on repeated-token inputs
    for _ in range(100):
        valence_word = rng.choice([w for w, v in lexicons.valence._valence.items()
                                   if abs(v) > 0.5])
        repeats = rng.randint(1, 8)
        engine_value = score_valence_rule([valence_word] * repeats,
                                          lexicons.valence).polarity
        s = 0.0
        for _ in range(repeats):
            s += lexicons.valence._valence[valence_word]
        direct = s * (s * s + 15.0) ** -0.5
        worst = max(worst, abs(engine_value - direct))
    report(4, "compound equals s/sqrt(s^2+alpha) within 1e-12",
           worst <= 1e-12, f"worst |diff| = {worst:.2e}")


def test_05_golden_corpus_equivalence(golden_corpus_path, manifest, lexicons):
    start = time.perf_counter()
    collection = load_corpus(golden_corpus_path, "jsonl")
    config = RunConfig(input_path=golden_corpus_path, input_format="jsonl",
                       out_dir=golden_corpus_path.parent)
    result = analyze_collection(collection, lexicons, default_config(), config)

    def canon(obj):
        return json.dumps(obj, ensure_ascii=False, sort_keys=True)

    produced_comments = []
    for row in result.comments:
        pos, neu, neg = row.scores.valence_rule.proportions
        produced_comments.append({
            "id": row.comment_id,
            "labels": {e: row.labels[e] for e in ENGINES},
            "scores": {
                "pattern_avg": {"polarity": row.scores.pattern_avg.polarity,
                                "subjectivity": row.scores.pattern_avg.subjectivity},
                "synset": {"polarity": row.scores.synset.polarity},
                "valence_rule": {"polarity": row.scores.valence_rule.polarity,
                                 "proportions": {"neg": neg, "neu": neu, "pos": pos}},
            },
        })
    expected_comments = [{"id": r["id"], "labels": r["labels"], "scores": r["scores"]}
                         for r in manifest["comments"]]
    same_scores = canon(produced_comments) == canon(expected_comments)

    produced_distributions = {
        engine: {"counts": dict(dist.counts), "proportions": dict(dist.proportions)}
        for engine, dist in result.distributions.items()
    }
    same_distributions = canon(produced_distributions) == canon(manifest["distributions"])

    produced_histogram = {
        "bin_edges": list(result.histogram.bin_edges),
        "counts": list(result.histogram.counts),
        "mean": result.histogram.mean,
        "median": result.histogram.median,
    }
    same_histogram = canon(produced_histogram) == canon(manifest["subjectivity"])

    produced_rankings = {
        engine: {side: [[w, c] for w, c in result.rankings[engine][side].entries]
                 for side in ("negative", "positive")}
        for engine in ENGINES
    }
    same_rankings = canon(produced_rankings) == canon(manifest["rankings"])

    elapsed = time.perf_counter() - start
    report(5, "golden corpus outputs byte-identical to the frozen manifest",
           same_scores and same_distributions and same_histogram
           and same_rankings and elapsed < 2.0,
           f"scores={same_scores} dist={same_distributions} "
           f"hist={same_histogram} rank={same_rankings}, {elapsed:.2f}s")


def _brute_force_top_words(docs_by_id, labeled, qualifies, side, n):
    counts = {}
    for item in labeled:
        if item.label != side:
            continue
        for token in docs_by_id[item.comment_id]:
            if qualifies(token):
                counts[token] = counts.get(token, 0) + 1
    ranked = []
    remaining = dict(counts)
    while remaining and len(ranked) < n:
        best = None
        for word, count in remaining.items():
            if best is None:
                best = (word, count)
                continue
            if count > best[1] or (count == best[1] and word < best[0]):
                best = (word, count)
        ranked.append(best)
        del remaining[best[0]]
    return tuple(ranked)


def test_06_top_words_oracle(lexicons):
    rng = random.Random(2026)
    qualifying = (list(lexicons.valence._valence)[::5]
                  + list(lexicons.pattern._pattern)[::5]
                  + [lemma for (lemma, _p) in lexicons.synset._synsets][::4])
    filler = ["zzz", "qqq", "10", "wind", "x1", "thing", "stuff", "item"]
    comments = []
    for i in range(200):
        length = rng.randint(3, 12)
        tokens = [rng.choice(qualifying if rng.random() < 0.6 else filler)
                  for _ in range(length)]
        comments.append(Comment(id=f"f{i:03d}", text=" ".join(tokens)))
    collection = CommentCollection(tuple(comments), "fuzz")
    documents = [d for d in preprocess_corpus(collection, default_config())
                 if not d.dropped]
    docs_by_id = {d.comment_id: d.tokens for d in documents}

    lexicon_for = {"valence_rule": lexicons.valence, "pattern_avg": lexicons.pattern,
                   "synset": lexicons.synset}

    def make_qualifier(engine, side):
        positive = side == "positive"
        if engine == "valence_rule":
            table = lexicons.valence._valence
            return lambda w: w in table and (table[w] > 0 if positive else table[w] < 0)
        if engine == "pattern_avg":
            table = lexicons.pattern._pattern
            return lambda w: w in table and (
                table[w].polarity > 0 if positive else table[w].polarity < 0)
        synsets = lexicons.synset._synsets

        def synset_qualifier(w):
            (_, tag), = tag_pos([w])
            senses = synsets.get((w, tag))
            if not senses:
                return False
            diff = senses[0].pos_score - senses[0].neg_score
            return diff > 0 if positive else diff < 0
        return synset_qualifier

    mismatches = []
    for engine in ENGINES:
        labeled = []
        for doc in documents:
            scores = score_all(doc, lexicons)
            labeled.append(label_comment(doc.comment_id, scores.by_engine()[engine]))
        for side in ("negative", "positive"):
            expected = _brute_force_top_words(
                docs_by_id, labeled, make_qualifier(engine, side), side, 30)
            produced = top_words(documents, labeled, lexicon_for[engine],
                                 engine, side, 30).entries
            if produced != expected:
                mismatches.append((engine, side))
    report(6, "top-words equals the exhaustive brute-force ranking",
           not mismatches, f"mismatches: {mismatches}" if mismatches else "6/6 pairs")


def _fuzz_comment_text(rng):
    roll = rng.random()
    if roll < 0.05:
        return ""
    if roll < 0.10:
        return " \t "
    pieces = []
    vocabulary = ["Wind", "TURBINES", "are", "killing", "whales", "not", "very",
                  "good", "terrible", "the", "ours", "thes", "runnings",
                  "#Energy", "https://x.co/a", "don't", "10%", "bébé",
                  "\U0001f642", "clean!!", "costs,", "a", "i"]
    for _ in range(rng.randint(1, 14)):
        word = rng.choice(vocabulary)
        if rng.random() < 0.15:
            word = "".join(rng.choice("abcdefghijklmnopqrstuvwxyz!#'.")
                           for _ in range(rng.randint(1, 9)))
        pieces.append(word)
    return " ".join(pieces)


def test_07_preprocess_idempotence_and_accounting():
    rng = random.Random(777)
    config = default_config()
    comments = tuple(Comment(id=f"c{i:04d}", text=_fuzz_comment_text(rng))
                     for i in range(1_000))
    documents = preprocess_corpus(CommentCollection(comments, "fuzz"), config)
    accounting_ok = len(documents) == len(comments)
    kept = sum(1 for d in documents if not d.dropped)
    dropped = sum(1 for d in documents if d.dropped)
    accounting_ok = accounting_ok and (kept + dropped == len(comments))
    reasons_ok = all(d.drop_reason in ("null", "too_short")
                     for d in documents if d.dropped)
    idempotent = True
    for doc in documents:
        again, _reason = preprocess_text(" ".join(doc.tokens), config)
        if again != doc.tokens:
            idempotent = False
            break
    report(7, "preprocessing is idempotent and accounts for every record",
           accounting_ok and reasons_ok and idempotent,
           f"kept={kept} dropped={dropped}")


def test_08_shard_merge_associativity(golden_corpus_path, lexicons):
    collection = load_corpus(golden_corpus_path, "jsonl")
    documents = [d for d in preprocess_corpus(collection, default_config())
                 if not d.dropped]
    all_equal = True
    for engine in ENGINES:
        labeled = []
        for doc in documents:
            scores = score_all(doc, lexicons)
            labeled.append(label_comment(doc.comment_id, scores.by_engine()[engine]))
        whole = distribution(labeled, engine)
        for shard_count in (1, 2, 5, 10):
            size = (len(labeled) + shard_count - 1) // shard_count
            shards = [
                distribution(labeled[i * size:(i + 1) * size], engine)
                for i in range(shard_count)
            ]
            merged = merge_distributions(shards)
            if merged.counts != whole.counts or merged.proportions != whole.proportions:
                all_equal = False
    report(8, "sharded distributions merge to the unsharded result", all_equal)


def test_09_paper_qualitative_checks(lexicons):
    config = default_config()

    contrast_tokens, _ = preprocess_text(
        "Renewable energy sources maybe a bit expensive but are much healthier",
        config)
    contrast_positive = score_valence_rule(
        list(contrast_tokens), lexicons.valence).polarity > 0

    opinion_tokens, _ = preprocess_text(
        "I do not like offshore wind energy, it's boring!", config)
    factual_tokens, _ = preprocess_text(
        "Offshore wind energy costs us 10% more than our current usage which "
        "we cannot afford due to our profits being 20% lower this year", config)
    subjectivity_ordered = (
        score_pattern_avg(list(opinion_tokens), lexicons.pattern).subjectivity
        > score_pattern_avg(list(factual_tokens), lexicons.pattern).subjectivity)

    esteem = score_synset([("estimable", "adj")], lexicons.synset).polarity
    item = score_synset([("estimable", "noun")], lexicons.synset).polarity
    estimable_ok = esteem > 0 and item == 0.0

    report(9, "sign and ordering of the qualitative example sentences",
           contrast_positive and subjectivity_ordered and estimable_ok,
           f"contrast>0={contrast_positive} subj-order={subjectivity_ordered} "
           f"estimable={estimable_ok}")


def test_10_full_run_determinism(golden_corpus_path, tmp_path):
    digests = []
    reports = []
    for run in ("one", "two"):
        out = tmp_path / run
        code = main(["analyze", "--input", str(golden_corpus_path),
                     "--format", "jsonl", "--out", str(out), "--plots"])
        assert code == 0
        reports.append((out / "report.json").read_bytes())
        digests.append({
            p.name: hashlib.sha256(p.read_bytes()).hexdigest()
            for p in sorted((out / "plots").glob("*.svg"))
        })
    identical = reports[0] == reports[1] and digests[0] == digests[1]
    complete = len(digests[0]) == 13
    report(10, "consecutive runs produce byte-identical reports and plots",
           identical and complete,
           f"report={len(reports[0])} bytes, {len(digests[0])} SVGs")
