"""First-tier keyword classification: marketing-jargon tweets and accounts.

A tweet dense in advertising jargon (3+ term occurrences in its text, or 3+
inside a single URL) is automated regardless of who posted it; an account
with 10+ such tweets is flagged wholesale.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, Sequence

from .corpus import URL_PATTERN, PhraseMatcher, TweetRecord, load_keyword_file, tokenize
from .errors import ConfigError

_URL_TOKEN_RE = re.compile(r"[0-9a-z]+")


@dataclass
class KeywordRuleSet:
    """Marketing terms plus the tweet/account/url thresholds.

    Terms that tokenize to nothing (the symbol keywords '$' and '%') are
    matched as literal characters in the raw text instead.
    """

    marketing_terms: tuple[str, ...]
    tweet_term_threshold: int = 3
    account_tweet_threshold: int = 10
    url_term_threshold: int = 3
    _matcher: PhraseMatcher = field(init=False, repr=False)
    _symbols: frozenset[str] = field(init=False, repr=False)

    def __post_init__(self):
        if not self.marketing_terms:
            raise ConfigError("marketing keyword set is empty")
        for name in ("tweet_term_threshold", "account_tweet_threshold", "url_term_threshold"):
            if getattr(self, name) < 1:
                raise ConfigError(f"{name} must be >= 1")
        symbols = set()
        phrases = []
        for term in self.marketing_terms:
            if tokenize(term):
                phrases.append(term)
            elif len(term.strip()) == 1:
                symbols.add(term.strip())
            else:
                raise ConfigError(f"marketing term {term!r} has no matchable content")
        self._matcher = PhraseMatcher(phrases)
        self._symbols = frozenset(symbols)

    @classmethod
    def default(cls, **thresholds) -> "KeywordRuleSet":
        with resources.as_file(
            resources.files("tweetsift.data").joinpath("commercial_keywords.txt")
        ) as path:
            return cls(marketing_terms=tuple(load_keyword_file(path)), **thresholds)


def count_marketing_terms(tokens: Sequence[str], rules: KeywordRuleSet) -> int:
    """Total occurrences (not distinct types) of marketing terms in the tokens.

    Phrases match greedily longest-first, and tokens consumed by a phrase are
    not recounted ("free trial" is one occurrence, not three).
    """
    return rules._matcher.count_occurrences(tokens)


def count_symbol_terms(text: str, rules: KeywordRuleSet) -> int:
    """Occurrences of symbol keywords ('$', '%') in text, URLs excluded."""
    if not rules._symbols:
        return 0
    text = URL_PATTERN.sub(" ", text)
    return sum(1 for ch in text if ch in rules._symbols)


def url_term_count(url: str, rules: KeywordRuleSet) -> int:
    """Marketing-term occurrences inside a URL string.

    The URL is lowercased and split on punctuation; no page content is
    fetched.
    """
    return count_terms_in_url(url, rules._matcher)


def count_terms_in_url(url: str, matcher: PhraseMatcher) -> int:
    return matcher.count_occurrences(_URL_TOKEN_RE.findall(url.lower()))


def classify_commercial_tweet(tweet: TweetRecord, rules: KeywordRuleSet) -> bool:
    """True iff the tweet text or any single URL carries enough jargon."""
    text_count = count_marketing_terms(tokenize(tweet.text), rules) + count_symbol_terms(
        tweet.text, rules
    )
    if text_count >= rules.tweet_term_threshold:
        return True
    return any(url_term_count(u, rules) >= rules.url_term_threshold for u in tweet.urls)


def flag_marketing_account(tweets_of_account: Iterable[TweetRecord], rules: KeywordRuleSet) -> bool:
    """True iff enough of the account's tweets classify as commercial."""
    count = 0
    for tweet in tweets_of_account:
        if classify_commercial_tweet(tweet, rules):
            count += 1
            if count >= rules.account_tweet_threshold:
                return True
    return False
