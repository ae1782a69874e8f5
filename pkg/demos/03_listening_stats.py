"""Listening-test analytics on a synthetic experiment.

Simulates a small MOS test (two voices, per-sentence 1-5 ratings in 0.5
steps), an error-annotation pass, a 7-point Likert suitability test, and
the inter-rater agreement check, then prints every table.

Run:  python demos/03_listening_stats.py
"""

import random

from etnorm import (
    AnnotationRecord,
    ErrorCategory,
    LikertRecord,
    RatingRecord,
    error_rates,
    icc2k,
    likert_summary,
    mos,
)

rng = random.Random(7)

# --- MOS: two voices, 100 ratings each ------------------------------------
ratings = []
for voice, center in (("Mari", 4.0), ("Kalev", 3.0)):
    for i in range(100):
        score = min(5.0, max(1.0, round(rng.gauss(center, 0.6) * 2) / 2))
        ratings.append(
            RatingRecord(f"r{i % 10}", f"s{i}", voice, "DeepVoice3", "uudised", score)
        )

print("== MOS with 95% confidence intervals ==")
for result in mos(ratings):
    print(f"  {result.voice:<6} n={result.n:<4} MOS {result.mos:.2f} ± {result.ci_half_width:.3f}")

# --- error annotation: two annotators per sentence -------------------------
annotations = []
for voice, skip_rate in (("Mari", 0.02), ("Meelis", 0.18)):
    for s in range(60):
        for annotator in ("a", "b"):
            flags = set()
            if rng.random() < skip_rate:
                flags.add(ErrorCategory.WORD_SKIPPING)
            if rng.random() < 0.1:
                flags.add(ErrorCategory.UNNATURAL_PHRASING)
            annotations.append(AnnotationRecord(annotator, f"s{s}", voice, frozenset(flags)))

print("\n== Error rates (policy: any annotator) ==")
table = error_rates(annotations, policy="any")
for voice in sorted(table):
    skipping = table[voice][ErrorCategory.WORD_SKIPPING]
    phrasing = table[voice][ErrorCategory.UNNATURAL_PHRASING]
    print(f"  {voice:<7} word skipping {skipping:5.1f}%   phrasing {phrasing:5.1f}%")

print("\n== Error rates (policy: majority) ==")
table = error_rates(annotations, policy="majority")
for voice in sorted(table):
    skipping = table[voice][ErrorCategory.WORD_SKIPPING]
    print(f"  {voice:<7} word skipping {skipping:5.1f}%")

# --- Likert suitability: 16 raters, 1..7 ------------------------------------
likert = []
for voice, center in (("Mari", 5.0), ("Kalev", 3.3)):
    for kind in ("uudis", "ilukirjandus"):
        for i in range(16):
            score = min(7, max(1, round(rng.gauss(center, 1.3))))
            likert.append(LikertRecord(f"r{i}", voice, kind, score))

print("\n== Likert suitability (mean ± sd) ==")
for result in likert_summary(likert):
    print(f"  {result.voice:<6} {result.text_kind:<13} {result.mean:.2f} ± {result.sd:.2f}")

# --- agreement of the rating panel ------------------------------------------
# targets x raters grid: every rater scores the same 13 voice/text pairs
targets = [rng.uniform(2.0, 6.5) for _ in range(13)]
matrix = [[max(1.0, min(7.0, t + rng.gauss(0, 0.5))) for _ in range(16)] for t in targets]

result = icc2k(matrix)
print("\n== Panel agreement ==")
print(f"  ICC(2,k) = {result.icc:.2f}   F({result.df1},{result.df2}) = {result.f_value:.1f}"
      f"   p = {result.p_value:.4g}")
