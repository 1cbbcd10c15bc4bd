"""Two-tier classification pipeline: keyword tier, account tier, label merge.

Tier 1 flags jargon-dense tweets and marketing accounts from keywords alone.
Tier 2 classifies accounts with enough tweets through the feature-box
detector. merge_labels folds both tiers into one final label per tweet:
Automated, Organic, or Discarded.
"""

from __future__ import annotations

import statistics
from dataclasses import dataclass, field
from datetime import datetime, timezone
from typing import Iterable, Sequence

from . import botdetect, commercial, corpus
from .botdetect import AUTOMATED, ORGANIC, UNCLASSIFIED, ClassifierBox
from .commercial import KeywordRuleSet
from .corpus import TweetRecord, load_keyword_file
from .errors import ConfigError

DISCARDED = "Discarded"
FINAL_LABELS = (AUTOMATED, ORGANIC, DISCARDED)


@dataclass
class TweetLabel:
    tweet_id: str
    label: str


@dataclass
class LabelCounts:
    total: int = 0
    automated: int = 0
    organic: int = 0
    discarded: int = 0

    def add(self, label: str) -> None:
        self.total += 1
        if label == AUTOMATED:
            self.automated += 1
        elif label == ORGANIC:
            self.organic += 1
        else:
            self.discarded += 1


@dataclass
class UserStats:
    users: int
    mean: float
    stddev: float
    max: int


@dataclass
class PipelineReport:
    per_year: dict[int, LabelCounts]
    overall: LabelCounts
    user_stats: dict[str, UserStats | None]
    automated_url_share: float | None
    parsed: int
    parse_errors: int
    non_localized: int


_CONFIG_DEFAULTS = {
    "marketing_keywords": None,
    "scrape_keywords": None,
    "lexicon": None,
    "box": None,
    "tweet_term_threshold": 3,
    "account_tweet_threshold": 10,
    "url_term_threshold": 3,
    "fpr_budget": botdetect.DEFAULT_FPR_BUDGET,
    "neutral_lo": 4.0,
    "neutral_hi": 6.0,
    "seed": 13,
}


@dataclass
class PipelineConfig:
    """Paths and thresholds steering a pipeline run. Key=value file loadable."""

    marketing_keywords: str | None = None
    scrape_keywords: str | None = None
    lexicon: str | None = None
    box: str | None = None
    topics: dict[str, str] = field(default_factory=dict)
    tweet_term_threshold: int = 3
    account_tweet_threshold: int = 10
    url_term_threshold: int = 3
    fpr_budget: float = botdetect.DEFAULT_FPR_BUDGET
    neutral_lo: float = 4.0
    neutral_hi: float = 6.0
    seed: int = 13

    @classmethod
    def from_file(cls, path) -> "PipelineConfig":
        """Parse a key=value config file; '#' lines are comments."""
        config = cls()
        with open(path, "r", encoding="utf-8") as handle:
            for line_no, raw in enumerate(handle, 1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                if "=" not in line:
                    raise ConfigError(f"{path} line {line_no}: expected key=value")
                key, value = (part.strip() for part in line.split("=", 1))
                if key.startswith("topic."):
                    config.topics[key[len("topic.") :]] = value
                    continue
                if key not in _CONFIG_DEFAULTS:
                    raise ConfigError(f"{path} line {line_no}: unknown key {key!r}")
                default = _CONFIG_DEFAULTS[key]
                try:
                    if isinstance(default, float):
                        setattr(config, key, float(value))
                    elif isinstance(default, int):
                        setattr(config, key, int(value))
                    else:
                        setattr(config, key, value or None)
                except ValueError:
                    raise ConfigError(f"{path} line {line_no}: bad value for {key}") from None
        return config

    def rule_set(self) -> KeywordRuleSet:
        thresholds = dict(
            tweet_term_threshold=self.tweet_term_threshold,
            account_tweet_threshold=self.account_tweet_threshold,
            url_term_threshold=self.url_term_threshold,
        )
        if self.marketing_keywords:
            return KeywordRuleSet(
                marketing_terms=tuple(load_keyword_file(self.marketing_keywords)), **thresholds
            )
        return KeywordRuleSet.default(**thresholds)


def merge_labels(
    tweet: TweetRecord,
    commercial_tweet: bool,
    account_flagged: bool,
    account_label: str,
) -> TweetLabel:
    """Fold tier-1 and tier-2 results into the final tweet label.

    Precedence: (1) a commercial tweet is Automated even on an Organic
    account, and the account keeps its own label; (2) marketing-flagged or
    Automated accounts taint all their tweets; (3) a URL tweet from an
    Unclassified account is Discarded; (4) other Unclassified-account tweets
    default to Organic; (5) otherwise the tweet takes its account's label.
    """
    if account_label not in (AUTOMATED, ORGANIC, UNCLASSIFIED):
        raise ValueError(f"missing or invalid account label {account_label!r}")
    if commercial_tweet:
        label = AUTOMATED
    elif account_flagged or account_label == AUTOMATED:
        label = AUTOMATED
    elif account_label == UNCLASSIFIED and tweet.urls:
        label = DISCARDED
    elif account_label == UNCLASSIFIED:
        label = ORGANIC
    else:
        label = account_label
    return TweetLabel(tweet_id=tweet.tweet_id, label=label)


def account_labels(
    samples: Iterable[corpus.AccountSample], box: ClassifierBox
) -> dict[str, str]:
    """Tier-2 label per account: feature box, or Unclassified below 25 tweets."""
    labels = {}
    for sample in samples:
        features = botdetect.extract_features(sample)
        if features is None:
            labels[sample.account_id] = UNCLASSIFIED
        else:
            labels[sample.account_id] = botdetect.classify(features, box).label
    return labels


def classify_records(
    records: Sequence[TweetRecord],
    rules: KeywordRuleSet,
    box: ClassifierBox,
) -> list[TweetLabel]:
    """Run both tiers over parsed records and merge, in input order."""
    commercial_flags = {
        r.tweet_id: commercial.classify_commercial_tweet(r, rules) for r in records
    }
    samples = corpus.group_by_account(records)
    tier2 = account_labels(samples, box)
    flagged = {
        s.account_id: sum(commercial_flags[t.tweet_id] for t in s.tweets)
        >= rules.account_tweet_threshold
        for s in samples
    }
    return [
        merge_labels(
            r,
            commercial_tweet=commercial_flags[r.tweet_id],
            account_flagged=flagged[r.account_id],
            account_label=tier2[r.account_id],
        )
        for r in records
    ]


def local_year(record: TweetRecord) -> int:
    local_ts, _ = corpus.localize(record.created_at_utc, record.utc_offset)
    return datetime.fromtimestamp(local_ts, tz=timezone.utc).year


def user_stats(
    labels: Iterable[TweetLabel], records: Sequence[TweetRecord]
) -> dict[str, UserStats | None]:
    """Tweets-per-user mean, population stddev, and max, for each final label."""
    account_of = {r.tweet_id: r.account_id for r in records}
    per_label: dict[str, dict[str, int]] = {label: {} for label in FINAL_LABELS}
    for tl in labels:
        counts = per_label[tl.label]
        account = account_of[tl.tweet_id]
        counts[account] = counts.get(account, 0) + 1
    out: dict[str, UserStats | None] = {}
    for label in FINAL_LABELS:
        counts = list(per_label[label].values())
        if not counts:
            out[label] = None
            continue
        out[label] = UserStats(
            users=len(counts),
            mean=statistics.fmean(counts),
            stddev=statistics.pstdev(counts),
            max=max(counts),
        )
    return out


def build_report(
    records: Sequence[TweetRecord],
    labels: Sequence[TweetLabel],
    parse_errors: int,
) -> PipelineReport:
    label_of = {tl.tweet_id: tl.label for tl in labels}
    per_year: dict[int, LabelCounts] = {}
    overall = LabelCounts()
    non_localized = 0
    automated_total = 0
    automated_with_url = 0
    for record in records:
        label = label_of[record.tweet_id]
        year = local_year(record)
        per_year.setdefault(year, LabelCounts()).add(label)
        overall.add(label)
        if record.utc_offset is None:
            non_localized += 1
        if label == AUTOMATED:
            automated_total += 1
            if record.urls:
                automated_with_url += 1
    return PipelineReport(
        per_year=dict(sorted(per_year.items())),
        overall=overall,
        user_stats=user_stats(labels, records),
        automated_url_share=automated_with_url / automated_total if automated_total else None,
        parsed=len(records),
        parse_errors=parse_errors,
        non_localized=non_localized,
    )


def run(corpus_path, config: PipelineConfig) -> tuple[PipelineReport, list[TweetLabel]]:
    """Classify a corpus file end to end. Deterministic for fixed inputs."""
    if not config.box:
        raise ConfigError("classification requires a calibrated box (config key 'box')")
    records, errors = corpus.read_corpus(corpus_path)
    box = ClassifierBox.load(config.box)
    labels = classify_records(records, config.rule_set(), box)
    report = build_report(records, labels, parse_errors=len(errors))
    return report, labels


def label_lines(labels: Sequence[TweetLabel]) -> list[str]:
    lines = ["tweet_id\tlabel"]
    lines.extend(f"{tl.tweet_id}\t{tl.label}" for tl in labels)
    return lines


def read_label_file(path) -> dict[str, str]:
    """Inverse of label_lines: tweet_id -> final label."""
    labels = {}
    with open(path, "r", encoding="utf-8") as handle:
        header = handle.readline()
        if header.strip() != "tweet_id\tlabel":
            raise ConfigError(f"{path}: not a label file (bad header)")
        for line_no, raw in enumerate(handle, 2):
            line = raw.rstrip("\n")
            if not line:
                continue
            parts = line.split("\t")
            if len(parts) != 2 or parts[1] not in FINAL_LABELS:
                raise ConfigError(f"{path} line {line_no}: bad label row {line!r}")
            labels[parts[0]] = parts[1]
    return labels


def report_lines(report: PipelineReport) -> list[str]:
    lines = ["# tweet labels by local-time year"]
    lines.append("year\ttotal\tautomated\torganic\tdiscarded")
    for year, counts in report.per_year.items():
        lines.append(
            f"{year}\t{counts.total}\t{counts.automated}\t{counts.organic}\t{counts.discarded}"
        )
    o = report.overall
    lines.append(f"all\t{o.total}\t{o.automated}\t{o.organic}\t{o.discarded}")
    lines.append("# tweets per user by final label (population stddev)")
    lines.append("label\tusers\tmean\tstddev\tmax")
    for label in FINAL_LABELS:
        stats = report.user_stats[label]
        if stats is None:
            lines.append(f"{label}\t0\tNA\tNA\tNA")
        else:
            lines.append(
                f"{label}\t{stats.users}\t{stats.mean:.6f}\t{stats.stddev:.6f}\t{stats.max}"
            )
    lines.append("# url share of automated tweets")
    share = "NA" if report.automated_url_share is None else f"{report.automated_url_share:.6f}"
    lines.append(f"automated_url_share\t{share}")
    lines.append("# input accounting")
    lines.append(f"parsed\t{report.parsed}")
    lines.append(f"parse_errors\t{report.parse_errors}")
    lines.append(f"non_localized\t{report.non_localized}")
    return lines
