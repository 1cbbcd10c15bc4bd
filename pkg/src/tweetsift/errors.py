"""Exception types shared across tweetsift modules."""


class TweetSiftError(Exception):
    """Base class for all tweetsift errors."""


class RecordParseError(TweetSiftError):
    """A corpus line could not be parsed. Carries the 1-based line number."""

    def __init__(self, line_no: int, reason: str):
        super().__init__(f"line {line_no}: {reason}")
        self.line_no = line_no
        self.reason = reason


class UndefinedFeatureError(TweetSiftError):
    """A linguistic feature is undefined for the given sample (too little data)."""


class UndefinedScoreError(TweetSiftError):
    """A happiness score is undefined (no lexicon-matched words with nonzero count)."""


class LexiconError(TweetSiftError):
    """A happiness lexicon file is malformed."""


class ConfigError(TweetSiftError):
    """Invalid configuration: bad file, unknown key, or missing required value."""


class CalibrationError(TweetSiftError):
    """Classifier box calibration failed (no bin had enough organic examples)."""
