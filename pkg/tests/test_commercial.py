import pytest
from hypothesis import given, strategies as st

from tweetsift.commercial import (
    KeywordRuleSet,
    classify_commercial_tweet,
    count_marketing_terms,
    count_symbol_terms,
    flag_marketing_account,
    url_term_count,
)
from tweetsift.corpus import TweetRecord, tokenize
from tweetsift.errors import ConfigError

RULES = KeywordRuleSet.default()


def tweet(text, i=0, account="a"):
    return TweetRecord(
        tweet_id=f"t{i}", account_id=account, text=text, created_at_utc=i, follower_count=0
    )


class TestCountMarketingTerms:
    def test_three_unigrams(self):
        assert count_marketing_terms(tokenize("buy now and save with this coupon"), RULES) == 3

    def test_nothing(self):
        assert count_marketing_terms(tokenize("I hate ads"), RULES) == 0

    def test_greedy_phrases(self):
        # "free e cig" + "starter kit" + "sale", no double count of consumed tokens
        toks = tokenize("free e cig starter kit on sale")
        assert count_marketing_terms(toks, RULES) == 3

    def test_occurrences_not_types(self):
        assert count_marketing_terms(tokenize("sale sale sale"), RULES) == 3

    def test_case_insensitive(self):
        assert count_marketing_terms(tokenize("BUY Buy bUy"), RULES) == 3


class TestSymbolTerms:
    def test_counts_literal_symbols(self):
        assert count_symbol_terms("was $50 now 20% off", RULES) == 2

    def test_symbols_inside_urls_ignored(self):
        assert count_symbol_terms("see http://x.co/a%20b", RULES) == 0


class TestUrlTermCount:
    def test_three_in_url(self):
        assert url_term_count("http://x.co/free-coupon-discount-sale", RULES) == 3

    def test_clean_url(self):
        assert url_term_count("http://example.org/article", RULES) == 0


class TestClassifyCommercialTweet:
    def test_three_terms_is_commercial(self):
        assert classify_commercial_tweet(tweet("coupon for a starter kit, big sale too"), RULES)

    def test_two_terms_is_not(self):
        assert not classify_commercial_tweet(tweet("buy this deal http://example.org/x"), RULES)

    def test_jargon_url(self):
        assert classify_commercial_tweet(tweet("look http://x.co/free-coupon-discount-sale"), RULES)

    def test_symbols_count_toward_threshold(self):
        assert classify_commercial_tweet(tweet("vape pens $5 $10 $20"), RULES)

    @given(st.sampled_from(["buy", "save", "coupon", "deal", "sale"]))
    def test_adding_terms_is_monotone(self, term):
        base = tweet("buy one deal now")
        more = tweet(base.text + " " + term)
        assert count_marketing_terms(tokenize(more.text), RULES) >= count_marketing_terms(
            tokenize(base.text), RULES
        )
        assert not classify_commercial_tweet(base, RULES)
        assert classify_commercial_tweet(more, RULES)

    def test_case_insensitive(self):
        lower = tweet("coupon starter kit sale")
        upper = tweet("COUPON STARTER KIT SALE")
        assert classify_commercial_tweet(lower, RULES) == classify_commercial_tweet(upper, RULES)


class TestFlagMarketingAccount:
    def commercial_tweets(self, n, account="m"):
        return [tweet("coupon sale discount", i=i, account=account) for i in range(n)]

    def test_ten_flags(self):
        assert flag_marketing_account(self.commercial_tweets(10), RULES)

    def test_nine_does_not(self):
        assert not flag_marketing_account(self.commercial_tweets(9), RULES)

    def test_empty(self):
        assert not flag_marketing_account([], RULES)

    def test_monotone_in_commercial_count(self):
        tweets = self.commercial_tweets(9) + [tweet("harmless", i=99)]
        assert not flag_marketing_account(tweets, RULES)
        assert flag_marketing_account(tweets + self.commercial_tweets(1), RULES)


class TestRuleSetValidation:
    def test_empty_keywords_rejected(self):
        with pytest.raises(ConfigError):
            KeywordRuleSet(marketing_terms=())

    def test_bad_threshold_rejected(self):
        with pytest.raises(ConfigError):
            KeywordRuleSet(marketing_terms=("buy",), tweet_term_threshold=0)

    def test_custom_thresholds(self):
        rules = KeywordRuleSet(marketing_terms=("buy",), tweet_term_threshold=1)
        assert classify_commercial_tweet(tweet("buy it"), rules)
