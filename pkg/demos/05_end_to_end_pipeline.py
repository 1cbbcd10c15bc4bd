"""End to end: synthesize a corpus, calibrate a box, classify every tweet.

Library-level equivalent of:

    tweetsift synth --kind mixed --accounts 60 --tweets 40 --seed 7 \
        --out corpus.txt --account-labels-out accounts.tsv
    tweetsift calibrate --corpus corpus.txt --account-labels accounts.tsv --out box.tsv
    tweetsift classify --corpus corpus.txt --box box.tsv \
        --labels-out labels.tsv --report-out report.tsv
    tweetsift topics --corpus corpus.txt --labels labels.tsv
"""

import tempfile
from pathlib import Path

from tweetsift import botdetect
from tweetsift.corpus import group_by_account, write_corpus
from tweetsift.pipeline import PipelineConfig, label_lines, report_lines, run
from tweetsift.synthkit import generate_corpus

workdir = Path(tempfile.mkdtemp(prefix="tweetsift_demo_"))
corpus_path = workdir / "corpus.txt"
box_path = workdir / "box.tsv"

records, truth = generate_corpus(
    [("cyborg", 20), ("commercial", 20), ("organic", 20)], n_tweets=40, seed=7
)
write_corpus(corpus_path, records)
print(f"wrote {len(records)} records for {len(truth)} accounts -> {corpus_path}")

# calibrate the organic box from the ground-truth organic accounts
labeled = []
for sample in group_by_account(records):
    features = botdetect.extract_features(sample)
    if features is not None:
        labeled.append((features, truth[sample.account_id]))
box = botdetect.calibrate(labeled, fpr_budget=0.08)
box.save(box_path)
print(f"calibrated box over bins {sorted(box.bins)[:3]}... -> {box_path}")

report, labels = run(corpus_path, PipelineConfig(box=str(box_path)))

print("\n== per-tweet labels (first 8 lines) ==")
for line in label_lines(labels)[:8]:
    print(line)

print("\n== corpus report ==")
for line in report_lines(report):
    print(line)

# how well did the merged labels recover the generator's ground truth?
by_account = {}
for tl, rec in zip(labels, records):
    by_account.setdefault(rec.account_id, []).append(tl.label)
agreement = 0
for account, tweet_labels in by_account.items():
    majority = max(set(tweet_labels), key=tweet_labels.count)
    agreement += majority == truth[account]
print(f"\naccounts whose majority tweet label matches ground truth: {agreement}/{len(by_account)}")
