"""Measure the bundled corpus against the calibration targets.

Run from the repo root:  python3 tools/calibrate.py

Reports, per translation: verse structure, chapter token/character counts
against the reference counts (tolerance 2%), the top-10 bigrams with the
rank of (kingdom, heaven), and the maximum trigram count. Then sweeps the
eight preprocess configs over KJV chapter polarity against the reference
chapter totals (-2, 21, -18) and prints the best config.
"""

from __future__ import annotations

import itertools
import sys
from importlib import resources

from versant.corpus import ParallelCorpus, count_units, parse_translation, verify_alignment
from versant.ngrams import extract_ngrams, top_k
from versant.polarity import default_lexicon, polarity_series
from versant.preprocess import PreprocessConfig, preprocess_translation

IDS = ["kjv", "niv", "nrsv", "lv", "bev"]

# reference chapter counts (characters expected to be the matching mode)
TARGETS = {
    "kjv": {5: 5221, 6: 3807, 7: 2945},
    "niv": {5: 5392, 6: 4008, 7: 3052},
    "nrsv": {5: 5105, 6: 3807, 7: 2848},
    "lv": {5: 5586, 6: 4148, 7: 3120},
    "bev": {5: 5584, 6: 4216, 7: 3194},
}
POLARITY_TARGETS = {5: -2, 6: 21, 7: -18}


def load():
    ts = []
    for tid in IDS:
        data = (resources.files("versant") / "data" / "corpus" / f"{tid}.txt").read_bytes()
        ts.append(parse_translation(data, tid.upper()))
    return ParallelCorpus(tuple(ts))


def main() -> int:
    corpus = load()
    ok = True

    print("== structure ==")
    report = verify_alignment(corpus)
    for t in corpus.translations:
        sizes = {ch: len(t.chapter_verses(ch)) for ch in t.chapters()}
        good = sizes == {5: 48, 6: 34, 7: 29}
        ok &= good
        print(f"  {t.id}: {sizes} {'ok' if good else 'BAD'}")
    print(f"  aligned: {report.aligned}")
    ok &= report.aligned

    print("== chapter counts vs targets (2% tolerance) ==")
    for mode in ("characters", "tokens"):
        worst = 0.0
        rows = []
        for t in corpus.translations:
            tid = t.id.lower()
            for ch in (5, 6, 7):
                got = count_units(t, ch, mode)
                want = TARGETS[tid][ch]
                dev = (got - want) / want
                worst = max(worst, abs(dev))
                rows.append(f"    {t.id} ch{ch}: {got} vs {want} ({dev:+.2%})")
        print(f"  mode={mode}: worst deviation {worst:.2%}")
        if mode == "characters":
            print("\n".join(rows))
            ok &= worst <= 0.02

    print("== bigrams (full preprocessing) ==")
    config = PreprocessConfig()
    for t in corpus.translations:
        verses = preprocess_translation(t, config)
        table = extract_ngrams(verses, 2)
        ranked = top_k(table, 10)
        grams = [g for g, _ in ranked]
        pos = grams.index(("kingdom", "heaven")) + 1 if ("kingdom", "heaven") in grams else None
        ok &= pos is not None
        print(f"  {t.id}: (kingdom, heaven) rank {pos}")
        for g, c in ranked[:5]:
            print(f"      {' '.join(g)}: {c}")

    print("== trigram max (full preprocessing) ==")
    for t in corpus.translations:
        table = extract_ngrams(preprocess_translation(t, config), 3)
        mx = max(table.counts.values())
        tops = [g for g, c in table.counts.items() if c == mx]
        ok &= mx <= 3
        print(f"  {t.id}: max {mx} {'ok' if mx <= 3 else 'BAD'} e.g. {tops[:4]}")

    print("== KJV polarity sweep ==")
    lex = default_lexicon()
    kjv = corpus["KJV"]
    best = None
    for lower, stop, lemma in itertools.product((True, False), repeat=3):
        cfg = PreprocessConfig(lowercase=lower, remove_stopwords=stop, lemmatize=lemma)
        totals = polarity_series(kjv, cfg, lex).chapter_totals
        dev = sum(abs(totals[ch] - POLARITY_TARGETS[ch]) for ch in (5, 6, 7))
        signs = totals[6] > 0 and totals[7] < 0
        ok &= signs
        print(f"  lower={lower} stop={stop} lemma={lemma}: "
              f"{totals[5]:+d} {totals[6]:+d} {totals[7]:+d} (dev {dev}) "
              f"signs {'ok' if signs else 'BAD'}")
        if best is None or dev < best[0]:
            best = (dev, (lower, stop, lemma), totals)
    dev, flags, totals = best
    within = all(abs(totals[ch] - POLARITY_TARGETS[ch]) <= 8 for ch in (5, 6, 7))
    ok &= within
    print(f"  best: lower={flags[0]} stop={flags[1]} lemma={flags[2]} dev={dev} "
          f"within +-8 per chapter: {within}")

    print("PASS" if ok else "FAIL")
    return 0 if ok else 1


if __name__ == "__main__":
    sys.exit(main())
