"""Sub-categorization of automated tweets and audience-impression estimates."""

from __future__ import annotations

import random
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, Sequence

from .commercial import count_terms_in_url
from .corpus import PhraseMatcher, TweetRecord, load_keyword_file, tokenize
from .errors import ConfigError


@dataclass
class TopicDefinition:
    """A named keyword set; a tweet matches if any keyword phrase occurs.

    Topics with scan_urls also match when a single URL string carries at
    least url_term_threshold keyword occurrences (the commercial topic's URL
    rule).
    """

    name: str
    keywords: tuple[str, ...]
    scan_urls: bool = False
    url_term_threshold: int = 3
    _matcher: PhraseMatcher = field(init=False, repr=False)

    def __post_init__(self):
        if not self.keywords:
            raise ConfigError(f"topic {self.name!r} has an empty keyword set")
        self._matcher = PhraseMatcher(self.keywords)


@dataclass
class TopicTally:
    name: str
    year: int
    count: int
    percentage: float  # of automated tweets that year
    impressions: int


def load_topic_file(path, name: str | None = None, scan_urls: bool = False) -> TopicDefinition:
    keywords = tuple(load_keyword_file(path))
    if name is None:
        import os

        name = os.path.splitext(os.path.basename(str(path)))[0]
        name = name.removesuffix("_keywords")
    return TopicDefinition(name=name, keywords=keywords, scan_urls=scan_urls)


def default_topics() -> list[TopicDefinition]:
    """The bundled subcategories: commercial, cessation, discount, flavor."""
    topics = []
    for name, filename, scan_urls in (
        ("commercial", "commercial_keywords.txt", True),
        ("cessation", "cessation_keywords.txt", False),
        ("discount", "discount_keywords.txt", False),
        ("flavor", "flavor_keywords.txt", False),
    ):
        with resources.as_file(resources.files("tweetsift.data").joinpath(filename)) as path:
            topics.append(load_topic_file(path, name=name, scan_urls=scan_urls))
    return topics


def classify_topic(tweet: TweetRecord, topic: TopicDefinition) -> bool:
    """True iff any topic keyword occurs in the tokenized text (or URL rule)."""
    if topic._matcher.contains_any(tokenize(tweet.text)):
        return True
    if topic.scan_urls:
        return any(
            count_terms_in_url(u, topic._matcher) >= topic.url_term_threshold for u in tweet.urls
        )
    return False


def impressions(matching: Iterable[TweetRecord]) -> int:
    """Total audience exposure: follower counts summed per tweet, no dedup."""
    return sum(t.follower_count for t in matching)


def tally(
    tweets: Iterable[tuple[int, TweetRecord, bool]],
    topics: Sequence[TopicDefinition],
) -> list[TopicTally]:
    """Per-topic, per-year counts over automated tweets.

    Input triples are (year, record, automated flag). Topics overlap freely;
    percentages are of that year's automated tweet count, 0 when a year has
    none.
    """
    automated_by_year: dict[int, list[TweetRecord]] = {}
    year_totals: dict[int, int] = {}
    for year, record, is_automated in tweets:
        year_totals.setdefault(year, 0)
        if is_automated:
            year_totals[year] += 1
            automated_by_year.setdefault(year, []).append(record)

    tallies = []
    for topic in topics:
        for year in sorted(year_totals):
            matching = [r for r in automated_by_year.get(year, []) if classify_topic(r, topic)]
            auto_count = year_totals[year]
            tallies.append(
                TopicTally(
                    name=topic.name,
                    year=year,
                    count=len(matching),
                    percentage=100.0 * len(matching) / auto_count if auto_count else 0.0,
                    impressions=impressions(matching),
                )
            )
    return tallies


def relevance_sample(matching: Sequence[TweetRecord], n: int, seed: int) -> list[TweetRecord]:
    """Uniform sample without replacement for hand coding; fixed seed, fixed output.

    Records are ordered by tweet_id before sampling so the draw does not
    depend on input order.
    """
    pool = sorted(matching, key=lambda r: r.tweet_id)
    k = min(n, len(pool))
    if k <= 0:
        return []
    return random.Random(seed).sample(pool, k)


def tally_table_lines(tallies: Sequence[TopicTally]) -> list[str]:
    """Tab-separated tally table: subcategory, count, percentage, impressions, year."""
    lines = ["subcategory\tcount\tpercentage\timpressions\tyear"]
    for t in tallies:
        lines.append(f"{t.name}\t{t.count}\t{t.percentage:.2f}\t{t.impressions}\t{t.year}")
    return lines
