#!/usr/bin/env python3
"""Sanity checks for the bundled data files (run manually while authoring)."""
import sys
from pathlib import Path

DATA = Path(__file__).resolve().parents[1] / "src" / "windsent" / "data"

NEGATIONS = {"not", "no", "never", "nt", "neither", "nor", "cannot"}
AMPLIFIERS = {
    "very", "really", "extremely", "absolutely", "incredibly", "totally",
    "completely", "utterly", "truly", "deeply", "especially", "particularly",
    "remarkably", "exceptionally", "hugely", "enormously", "insanely",
    "super", "so", "too", "much",
}
DAMPENERS = {
    "slightly", "somewhat", "barely", "hardly", "marginally", "scarcely",
    "kinda", "sorta", "bit", "little", "rather", "fairly", "almost",
    "nearly", "partly", "moderately",
}
CONTRAST = "but"
VOWELS = set("aeiou")


def read_lines(path):
    out = []
    for raw in path.read_text(encoding="utf-8").splitlines():
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        out.append(line)
    return out


def suffix_lemma(tok):
    n = len(tok)
    if tok.endswith("ies") and n >= 5:
        return tok[:-3] + "y"
    if n >= 5 and (tok.endswith("ches") or tok.endswith("shes")
                   or tok.endswith("xes") or tok.endswith("zes")
                   or tok.endswith("sses")):
        return tok[:-2]
    if (tok.endswith("s") and not tok.endswith("ss") and not tok.endswith("us")
            and not tok.endswith("is") and n >= 4):
        return tok[:-1]
    if tok.endswith("ing") and n >= 6 and any(c in VOWELS for c in tok[:-3]):
        return tok[:-3]
    if (tok.endswith("ed") and not tok.endswith("eed") and n >= 5
            and any(c in VOWELS for c in tok[:-2])):
        return tok[:-2]
    return None


def lemmatize(tok, table):
    seen = set()
    cur = tok
    while cur not in seen:
        seen.add(cur)
        if cur in table:
            nxt = table[cur]
            if nxt == cur:
                return cur
            cur = nxt
            continue
        nxt = suffix_lemma(cur)
        if nxt is None:
            return cur
        cur = nxt
    return cur


def tag_token(tok, table):
    if tok in table:
        return table[tok]
    if tok.endswith("ly"):
        return "adv"
    if tok.endswith("ing") or tok.endswith("ed"):
        return "verb"
    if tok.endswith("ous") or tok.endswith("ful") or tok.endswith("able"):
        return "adj"
    return "noun"


def main():
    errors = []
    stop = set(read_lines(DATA / "stopwords.txt"))
    print(f"stopwords: {len(stop)}")
    bad = stop & (NEGATIONS | AMPLIFIERS | DAMPENERS | {CONTRAST})
    if bad:
        errors.append(f"stopwords contain reserved modifier words: {sorted(bad)}")

    table = {}
    for line in read_lines(DATA / "lemmas.tsv"):
        k, v = line.split("\t")
        if k in table:
            errors.append(f"duplicate lemma key {k}")
        table[k] = v
    print(f"lemma entries: {len(table)}")
    for k, v in table.items():
        if lemmatize(v, table) != v:
            errors.append(f"lemma value not a fixpoint: {k} -> {v} -> {lemmatize(v, table)}")
        if v in stop:
            print(f"  note: lemma value is a stopword (will be filtered): {k} -> {v}")

    val = {}
    for i, line in enumerate(read_lines(DATA / "lexicons" / "valence.tsv")):
        w, s = line.split("\t")
        s = float(s)
        if w in val:
            errors.append(f"duplicate valence word {w}")
        if not -4.0 <= s <= 4.0:
            errors.append(f"valence out of range: {w} {s}")
        val[w] = s
    print(f"valence entries: {len(val)}")

    pat = {}
    n_intens = 0
    for line in read_lines(DATA / "lexicons" / "pattern.tsv"):
        w, p, s, f, m = line.split("\t")
        p, s, m = float(p), float(s), float(m)
        flag = f == "1"
        if w in pat:
            errors.append(f"duplicate pattern word {w}")
        if not (-1 <= p <= 1 and 0 <= s <= 1 and m > 0):
            errors.append(f"pattern out of range: {w}")
        if flag:
            n_intens += 1
            if p != 0.0:
                errors.append(f"intensifier with nonzero polarity: {w}")
        pat[w] = (p, s, flag, m)
    print(f"pattern entries: {len(pat)} ({n_intens} intensifiers)")

    pos_table = {}
    for line in read_lines(DATA / "pos_tags.tsv"):
        w, t = line.split("\t")
        if w in pos_table and pos_table[w] != t:
            errors.append(f"conflicting pos entry {w}")
        if t not in ("noun", "verb", "adj", "adv"):
            errors.append(f"bad tag {w} {t}")
        pos_table[w] = t
    print(f"pos entries: {len(pos_table)}")

    syn = []
    ranks = {}
    ids = set()
    lemma_tags = {}
    for line in read_lines(DATA / "lexicons" / "synset.tsv"):
        sid, pos, ps, ns, rank, lemmas = line.split("\t")
        ps, ns, rank = float(ps), float(ns), int(rank)
        if sid in ids:
            errors.append(f"duplicate synset id {sid}")
        ids.add(sid)
        if pos not in ("noun", "verb", "adj", "adv"):
            errors.append(f"bad pos {sid}")
        if ps + ns > 1.0 + 1e-9 or not (0 <= ps <= 1 and 0 <= ns <= 1):
            errors.append(f"scores invalid {sid}")
        lset = lemmas.split(",")
        for lem in lset:
            key = (lem, pos, rank)
            if key in ranks:
                errors.append(f"duplicate rank for {key}: {sid} vs {ranks[key]}")
            ranks[key] = sid
            lemma_tags.setdefault(lem, set()).add(pos)
        syn.append(sid)
    print(f"synset entries: {len(syn)}")

    reserved = NEGATIONS | AMPLIFIERS | DAMPENERS | {CONTRAST}
    for name, words in (("valence", val.keys()), ("pattern", pat.keys())):
        for w in words:
            if name == "valence" and w in reserved:
                errors.append(f"{name} word is a reserved modifier: {w}")
            if w in stop:
                errors.append(f"{name} word is a stopword: {w}")
            fp = lemmatize(w, table)
            if fp != w:
                errors.append(f"{name} word not a lemma fixpoint: {w} -> {fp}")

    for lem, tags in lemma_tags.items():
        if lem in stop:
            errors.append(f"synset lemma is a stopword: {lem}")
        fp = lemmatize(lem, table)
        if fp != lem:
            errors.append(f"synset lemma not a lemma fixpoint: {lem} -> {fp}")
        t = tag_token(lem, pos_table)
        if t not in tags:
            errors.append(f"synset lemma unreachable: {lem} tags as {t}, entries under {sorted(tags)}")

    if errors:
        print("\nFAIL")
        for e in errors:
            print(" -", e)
        sys.exit(1)
    print("\nall data checks passed")


if __name__ == "__main__":
    main()
