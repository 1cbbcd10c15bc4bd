"""tweetsift: automation detection, hedonometrics, and topic tallies for tweet corpora."""

from .botdetect import (
    AUTOMATED,
    ORGANIC,
    UNCLASSIFIED,
    AccountFeatureVector,
    AccountLabel,
    BoxBounds,
    ClassifierBox,
    calibrate,
    classify,
    decay_rate,
    extract_features,
    lcs_length,
    mean_dissimilarity,
    pairwise_dissimilarity,
    url_rate,
)
from .commercial import (
    KeywordRuleSet,
    classify_commercial_tweet,
    count_marketing_terms,
    flag_marketing_account,
)
from .corpus import (
    AccountSample,
    TweetRecord,
    group_by_account,
    localize,
    match_scrape_keywords,
    parse_record,
    read_corpus,
    tokenize,
    write_corpus,
)
from .errors import (
    CalibrationError,
    ConfigError,
    LexiconError,
    RecordParseError,
    TweetSiftError,
    UndefinedFeatureError,
    UndefinedScoreError,
)
from .hedonometrics import (
    FrequencyDistribution,
    HappinessLexicon,
    WordShiftRow,
    corpus_happiness,
    happiness_series,
    load_lexicon,
    neutral_filter,
    word_shift,
)
from .pipeline import DISCARDED, PipelineConfig, PipelineReport, TweetLabel, merge_labels, run
from .synthkit import generate_account, generate_corpus
from .topics import TopicDefinition, TopicTally, classify_topic, impressions, relevance_sample, tally

__version__ = "0.1.0"
