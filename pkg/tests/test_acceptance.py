"""Acceptance suite: one test per criterion, each printing a PASS/FAIL line.

Run with `pytest tests/test_acceptance.py -v -s` to see the per-criterion
lines and timings.
"""

import random
import time

import numpy as np
import pytest

from oracles import dp_lcs
from tweetsift.botdetect import (
    AUTOMATED,
    ORGANIC,
    UNCLASSIFIED,
    bin_size_for,
    calibrate,
    classify,
    decay_rate,
    extract_features,
    lcs_length,
    pairwise_dissimilarity,
)
from tweetsift.corpus import TweetRecord
from tweetsift.errors import UndefinedScoreError
from tweetsift.hedonometrics import (
    FrequencyDistribution,
    HappinessLexicon,
    corpus_happiness,
    neutral_filter,
    word_shift,
)
from tweetsift.pipeline import label_lines, merge_labels
from tweetsift.synthkit import generate_account
from tweetsift.topics import TopicDefinition, tally


def report(n: int, ok: bool, detail: str) -> bool:
    print(f"criterion {n:2d} {'PASS' if ok else 'FAIL'}: {detail}")
    return ok


def make_tweet(i, text, followers=0, account="a"):
    return TweetRecord(
        tweet_id=f"t{i}",
        account_id=account,
        text=text,
        created_at_utc=1_357_000_000 + i,
        follower_count=followers,
        utc_offset=0,
    )


def test_criterion_1_worked_example_constants():
    a, b = "I love tweeting", "I love spamming"
    d = pairwise_dissimilarity(a, b)
    lcs = lcs_length(a, b)
    ok = d == 17 / 31 and lcs == 7
    report(1, ok, f"worked-example constants: dissimilarity {d:.6f} vs 17/31, lcs {lcs} vs 7")
    # The asserted constants are internally inconsistent: the exact longest
    # common subsequence of this pair is "I love " + "ing" (length 10, the
    # DP-oracle value), which puts the dissimilarity at (15+15-20)/30 = 1/3.
    # No exact-LCS implementation can return 7 here, so this check documents
    # the discrepancy rather than hiding it.
    assert ok, f"exact LCS is {lcs} (oracle {dp_lcs(a, b)}), dissimilarity {d}"


def test_criterion_2_lcs_oracle_equivalence():
    rng = random.Random(2)
    alphabet = "abcdefgh XY#@.!123"
    t0 = time.perf_counter()
    for _ in range(10_000):
        a = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 30)))
        b = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 30)))
        assert lcs_length(a, b) == dp_lcs(a, b), (a, b)
    elapsed = time.perf_counter() - t0
    ok = elapsed < 10.0
    report(2, ok, f"10^4 random pairs match the DP oracle in {elapsed:.2f}s (< 10s)")
    assert ok


def test_criterion_3_word_shift_identity():
    rng = random.Random(3)
    t0 = time.perf_counter()
    worst = 0.0
    done = 0
    while done < 1000:
        words = [f"w{i}" for i in range(rng.randint(3, 40))]
        lex = HappinessLexicon(scores={w: rng.uniform(1.0, 9.0) for w in words})
        ref = FrequencyDistribution(
            counts={w: rng.randint(0, 50) for w in words if rng.random() < 0.8}
        )
        comp = FrequencyDistribution(
            counts={w: rng.randint(0, 50) for w in words if rng.random() < 0.8}
        )
        try:
            rows = word_shift(ref, comp, lex, top_k=None)
            diff = corpus_happiness(comp, lex) - corpus_happiness(ref, lex)
        except UndefinedScoreError:
            continue
        total = sum(r.contribution for r in rows)
        worst = max(worst, abs(total - diff) / max(1.0, abs(diff)))
        done += 1
    elapsed = time.perf_counter() - t0
    ok = worst <= 1e-12 and elapsed < 5.0
    report(
        3,
        ok,
        f"1000 triples: worst relative identity residual {worst:.2e} (<= 1e-12) in {elapsed:.2f}s",
    )
    assert ok


def test_criterion_4_hedonometer_hand_checks():
    lex = HappinessLexicon(scores={"good": 8.0, "bad": 2.0})
    h = corpus_happiness(FrequencyDistribution(counts={"good": 3, "bad": 1}), lex)
    boundary = HappinessLexicon(
        scores={"lo": 4.0, "hi": 6.0, "below": 3.99, "above": 6.01}
    )
    kept = set(neutral_filter(boundary).scores)
    ok = h == 6.5 and kept == {"below", "above"}
    report(4, ok, f"two-word mean {h} == 6.5; closed window removed boundary scores 4.0 and 6.0")
    assert ok


def test_criterion_5_classifier_benchmark():
    t0 = time.perf_counter()
    plan = (("cyborg", 250), ("commercial", 250), ("organic", 500))
    calibration, heldout = [], []
    seed = 20_250
    for kind, count in plan:
        truth = ORGANIC if kind == "organic" else AUTOMATED
        for i in range(count):
            account = generate_account(kind, 100, seed=seed)
            seed += 1
            features = extract_features(account)
            assert features is not None and features.bin_size == 100
            (calibration if i % 2 == 0 else heldout).append((features, truth))
    # Calibrating right at the 0.13 evaluation bound leaves no generalization
    # margin (the trim search saturates the budget on the calibration half),
    # so calibrate a notch tighter and judge the held-out half at 0.13.
    box = calibrate(calibration, fpr_budget=0.08)

    tp = fp = pos = neg = 0
    for features, truth in heldout:
        got = classify(features, box).label
        if truth == AUTOMATED:
            pos += 1
            tp += got == AUTOMATED
        else:
            neg += 1
            fp += got == AUTOMATED
    tpr, fpr = tp / pos, fp / neg
    elapsed = time.perf_counter() - t0
    ok = tpr >= 0.90 and fpr <= 0.13 and elapsed < 120.0
    report(
        5,
        ok,
        f"held-out TPR {tpr:.3f} (>= 0.90), FPR {fpr:.3f} (<= 0.13), "
        f"1000 accounts x 100 tweets in {elapsed:.1f}s (< 120s)",
    )
    assert ok


def test_criterion_6_binning_rule():
    got = {n: bin_size_for(n) for n in (24, 25, 137, 500, 900)}
    expected = {24: None, 25: 25, 137: 125, 500: 500, 900: 500}
    ok = got == expected
    report(6, ok, f"bin sizes {got}")
    assert ok


def test_criterion_7_merge_rule_toy_corpus():
    cases = [
        # (tweet, commercial flag, account flagged, account label)
        (make_tweet(1, "free trial coupon sale", account="organicA"), True, False, ORGANIC),
        (make_tweet(2, "plain words", account="flaggedA"), False, True, ORGANIC),
        (make_tweet(3, "plain words", account="botA"), False, False, AUTOMATED),
        (make_tweet(4, "look http://x.co/z", account="tiny"), False, False, UNCLASSIFIED),
        (make_tweet(5, "plain words", account="tiny"), False, False, UNCLASSIFIED),
        (make_tweet(6, "plain words", account="organicA"), False, False, ORGANIC),
    ]
    labels = [merge_labels(t, c, f, a) for t, c, f, a in cases]
    got = label_lines(labels)
    expected = [
        "tweet_id\tlabel",
        "t1\tAutomated",
        "t2\tAutomated",
        "t3\tAutomated",
        "t4\tDiscarded",
        "t5\tOrganic",
        "t6\tOrganic",
    ]
    counts = {label: sum(1 for l in labels if l.label == label) for label in set(x.label for x in labels)}
    partition_ok = sum(counts.values()) == len(cases)
    ok = got == expected and partition_ok
    report(7, ok, f"six-tweet merge labels {[l.label for l in labels]}; partition sums to 6")
    assert ok


def test_criterion_8_decay_rate_sanity():
    distinct = [" ".join(f"w{i}" for i in range(60 * j, 60 * (j + 1))) for j in range(40)]
    beta_distinct = decay_rate(distinct)
    constant = ["word " * 50] * 40
    beta_constant = decay_rate(constant)
    draws = np.random.default_rng(8).zipf(1.25, 120_000)
    zipf_texts = [" ".join(str(v) for v in draws[i : i + 20]) for i in range(0, len(draws), 20)]
    beta_zipf = decay_rate(zipf_texts)
    ok = (
        abs(beta_distinct - 0.0) <= 1e-9
        and abs(beta_constant - 1.0) <= 1e-9
        and 0.1 <= beta_zipf <= 0.3
    )
    report(
        8,
        ok,
        f"beta: all-distinct {beta_distinct:.2e} (0 +/- 1e-9), constant {beta_constant} "
        f"(1 +/- 1e-9), zipf-source {beta_zipf:.3f} (in [0.1, 0.3])",
    )
    assert ok


def test_criterion_9_determinism(tmp_path):
    from tweetsift.cli import main

    corpus = tmp_path / "corpus.txt"
    accounts = tmp_path / "accounts.tsv"
    box = tmp_path / "box.tsv"
    assert (
        main(
            [
                "synth", "--kind", "mixed", "--accounts", "60", "--tweets", "30",
                "--seed", "913", "--out", str(corpus), "--account-labels-out", str(accounts),
            ]
        )
        == 0
    )
    assert (
        main(
            [
                "calibrate", "--corpus", str(corpus), "--account-labels", str(accounts),
                "--out", str(box),
            ]
        )
        == 0
    )
    blobs = []
    for tag in ("a", "b"):
        labels = tmp_path / f"labels_{tag}.tsv"
        rep = tmp_path / f"report_{tag}.tsv"
        tal = tmp_path / f"tallies_{tag}.tsv"
        assert (
            main(
                [
                    "classify", "--corpus", str(corpus), "--box", str(box),
                    "--labels-out", str(labels), "--report-out", str(rep),
                ]
            )
            == 0
        )
        assert (
            main(["topics", "--corpus", str(corpus), "--labels", str(labels), "--out", str(tal)])
            == 0
        )
        blobs.append((labels.read_bytes(), rep.read_bytes(), tal.read_bytes()))
    ok = blobs[0] == blobs[1]
    report(9, ok, "classify + topics reruns are byte-identical")
    assert ok


def test_criterion_10_topic_impressions_arithmetic():
    discount = TopicDefinition(name="discount", keywords=("free trial", "coupon", "sale"))
    tweets = [
        (2013, make_tweet(1, "free trial today", followers=100), True),
        (2013, make_tweet(2, "no promotion here", followers=250), True),
        (2013, make_tweet(3, "still nothing", followers=0), True),
        (2013, make_tweet(4, "quiet evening", followers=50), True),
    ]
    (row,) = tally(tweets, [discount])
    hand_sum = 100  # followers of the single matching tweet
    ok = row.percentage == 25.0 and row.impressions == hand_sum and row.count == 1
    report(
        10,
        ok,
        f"discount: count {row.count}, percentage {row.percentage}, impressions {row.impressions}",
    )
    assert ok
