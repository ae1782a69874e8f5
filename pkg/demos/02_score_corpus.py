"""Score the bundled gold corpus and measure an improvement.

The "old" system below is a deliberately crippled pipeline (it passes raw
text through untouched); the "new" system is the full verbalizer. Scoring
both against the hand-verbalized gold shows the improvement in percentage
points plus the minus/plus bookkeeping for abbreviation readings.

Run:  python demos/02_score_corpus.py
"""

from importlib import resources

from etnorm import default_config, improvement, score_corpus, verbalize
from etnorm.scoring import parse_gold_record

import json

config = default_config()

records = [
    parse_gold_record(json.loads(line))
    for line in resources.files("etnorm.data")
    .joinpath("gold_corpus.jsonl")
    .read_text("utf-8")
    .splitlines()
    if line.strip()
]
print(f"gold corpus: {len(records)} sentences")

old_hypotheses = {r.id: r.raw for r in records}
new_hypotheses = {r.id: verbalize(r.raw, config) for r in records}

old_report = score_corpus(records, old_hypotheses)
new_report = score_corpus(records, new_hypotheses)

print(f"\nraw text as-is : {old_report.summary()}"
      f"  (miinus {old_report.minus_points}, pluss {old_report.plus_points})")
print(f"verbalizer     : {new_report.summary()}"
      f"  (miinus {new_report.minus_points}, pluss {new_report.plus_points})")
print(f"improvement    : {improvement(old_report, new_report)} protsendipunkti")

misses = [s for s in new_report.per_sentence if not s.matched]
if misses:
    print("\nstill wrong:")
    for s in misses:
        print(f"  {s.id}: {s.diff}")
else:
    print("\nevery sentence matches the gold verbalization")
