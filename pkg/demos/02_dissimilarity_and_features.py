"""The three automation features and the box classifier.

Templated accounts repeat themselves: long common subsequences, constant
URLs, and a vocabulary that stops growing. This script computes the three
features for synthetic accounts of each kind, calibrates an organic box, and
classifies a few fresh accounts.
"""

from tweetsift.botdetect import (
    AUTOMATED,
    ORGANIC,
    calibrate,
    classify,
    extract_features,
    lcs_length,
    mean_dissimilarity,
    pairwise_dissimilarity,
)
from tweetsift.synthkit import generate_account

print("== pairwise dissimilarity ==")
pairs = [
    ("I love tweeting", "I love spamming"),
    ("identical text", "identical text"),
    ("abc", "xyz"),
]
for a, b in pairs:
    print(f"lcs={lcs_length(a, b):2d}  D={pairwise_dissimilarity(a, b):.4f}  ({a!r} vs {b!r})")

print("\n== account features by kind (40 accounts x 100 tweets each) ==")
features_by_kind = {}
for kind in ("cyborg", "commercial", "organic"):
    rows = [extract_features(generate_account(kind, 100, seed=s)) for s in range(40)]
    features_by_kind[kind] = rows
    url = sum(f.url_rate for f in rows) / len(rows)
    dis = sum(f.mean_dissimilarity for f in rows) / len(rows)
    dec = sum(f.decay_rate for f in rows) / len(rows)
    print(f"{kind:11s} url_rate {url:.3f}   dissimilarity {dis:.3f}   decay {dec:.3f}")

cyborg_sample = generate_account("cyborg", 40, seed=99)
organic_sample = generate_account("organic", 40, seed=99)
print("\ncyborg 40-tweet mean dissimilarity :",
      f"{mean_dissimilarity([t.text for t in cyborg_sample.tweets]):.3f}")
print("organic 40-tweet mean dissimilarity:",
      f"{mean_dissimilarity([t.text for t in organic_sample.tweets]):.3f}")

print("\n== calibrate on organic features, classify fresh accounts ==")
labeled = [(f, ORGANIC) for f in features_by_kind["organic"]]
box = calibrate(labeled, fpr_budget=0.08)
bounds = box.bins[100]
print(f"bin 100 box: url <= {bounds.url_rate_max:.3f}, "
      f"dissimilarity in [{bounds.dissimilarity_min:.3f}, {bounds.dissimilarity_max:.3f}], "
      f"decay in [{bounds.decay_min:.3f}, {bounds.decay_max:.3f}]")

for kind in ("cyborg", "commercial", "organic"):
    hits = 0
    for s in range(100, 120):
        fv = extract_features(generate_account(kind, 100, seed=s))
        hits += classify(fv, box).label == AUTOMATED
    print(f"fresh {kind:11s} accounts flagged automated: {hits}/20")
