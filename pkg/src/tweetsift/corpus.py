"""Tweet corpus ingestion: record parsing, tokenization, keyword matching, grouping.

The corpus file format is line-delimited text. Each line is one record made of
tab-separated ``key=value`` fields. Required keys: ``tweet_id``, ``account_id``,
``created_at_utc``, ``text``, ``follower_count``. Optional keys: ``utc_offset``,
``lang``. Tab, newline, and backslash inside values are escaped as ``\\t``,
``\\n``, ``\\\\``.
"""

from __future__ import annotations

import re
import unicodedata
from dataclasses import dataclass, field
from importlib import resources
from typing import Iterable, Iterator, Sequence

from .errors import RecordParseError

URL_PATTERN = re.compile(r"(?:https?://|www\.)\S+")

REQUIRED_KEYS = ("tweet_id", "account_id", "created_at_utc", "text", "follower_count")
OPTIONAL_KEYS = ("utc_offset", "lang")


@dataclass
class TweetRecord:
    """One post: identifiers, text, timing, audience size, and extracted URLs."""

    tweet_id: str
    account_id: str
    text: str
    created_at_utc: int
    follower_count: int
    utc_offset: int | None = None
    lang: str | None = None
    urls: list[str] = field(default_factory=list)

    def __post_init__(self):
        if not self.urls:
            self.urls = extract_urls(self.text)


@dataclass
class AccountSample:
    """All collected tweets of one account, ascending by post time."""

    account_id: str
    tweets: list[TweetRecord]

    def __len__(self) -> int:
        return len(self.tweets)


def extract_urls(text: str) -> list[str]:
    """Substrings starting with http://, https://, or www., up to whitespace."""
    return URL_PATTERN.findall(text)


# Characters in Unicode punctuation/symbol categories are token separators,
# except '#' and '@' which must survive so hashtags and mentions stay tokens.
_KEEP = {"#", "@"}
_strip_cache: dict[str, bool] = {}


def _is_separator(ch: str) -> bool:
    hit = _strip_cache.get(ch)
    if hit is None:
        hit = unicodedata.category(ch)[0] in "PS" and ch not in _KEEP
        _strip_cache[ch] = hit
    return hit


def tokenize(text: str) -> list[str]:
    """Lowercased tokens with URLs removed and punctuation stripped.

    Hyphens and apostrophes split tokens ("E-Cig's" -> ["e", "cig", "s"]).
    """
    text = URL_PATTERN.sub(" ", text).lower()
    out = []
    cur: list[str] = []
    for ch in text:
        if ch.isspace() or _is_separator(ch):
            if cur:
                out.append("".join(cur))
                cur = []
        else:
            cur.append(ch)
    if cur:
        out.append("".join(cur))
    return out


def _unescape(value: str) -> str:
    if "\\" not in value:
        return value
    out = []
    i = 0
    while i < len(value):
        ch = value[i]
        if ch == "\\" and i + 1 < len(value):
            nxt = value[i + 1]
            out.append({"t": "\t", "n": "\n", "\\": "\\"}.get(nxt, nxt))
            i += 2
        else:
            out.append(ch)
            i += 1
    return "".join(out)


def _escape(value: str) -> str:
    return value.replace("\\", "\\\\").replace("\t", "\\t").replace("\n", "\\n")


def parse_record(line: bytes | str, line_no: int = 0) -> TweetRecord:
    """Parse one corpus line into a TweetRecord.

    Raises RecordParseError on any malformed field so callers can skip and
    count the line instead of aborting.
    """
    if isinstance(line, bytes):
        try:
            line = line.decode("utf-8")
        except UnicodeDecodeError as exc:
            raise RecordParseError(line_no, f"invalid UTF-8: {exc}") from None
    line = line.rstrip("\n")
    if not line.strip():
        raise RecordParseError(line_no, "empty line")

    fields: dict[str, str] = {}
    for part in line.split("\t"):
        if "=" not in part:
            raise RecordParseError(line_no, f"field without '=': {part!r}")
        key, value = part.split("=", 1)
        if key in fields:
            raise RecordParseError(line_no, f"duplicate key {key!r}")
        fields[key] = value

    for key in REQUIRED_KEYS:
        if key not in fields:
            raise RecordParseError(line_no, f"missing required key {key!r}")

    def _int(key: str) -> int:
        try:
            return int(fields[key])
        except ValueError:
            raise RecordParseError(line_no, f"{key} is not an integer: {fields[key]!r}") from None

    followers = _int("follower_count")
    if followers < 0:
        raise RecordParseError(line_no, f"follower_count is negative: {followers}")
    tweet_id = fields["tweet_id"]
    account_id = fields["account_id"]
    if not tweet_id or not account_id:
        raise RecordParseError(line_no, "tweet_id and account_id must be non-empty")

    offset = None
    if "utc_offset" in fields and fields["utc_offset"] != "":
        try:
            offset = int(fields["utc_offset"])
        except ValueError:
            raise RecordParseError(
                line_no, f"utc_offset is not an integer: {fields['utc_offset']!r}"
            ) from None

    return TweetRecord(
        tweet_id=tweet_id,
        account_id=account_id,
        text=_unescape(fields["text"]),
        created_at_utc=_int("created_at_utc"),
        follower_count=followers,
        utc_offset=offset,
        lang=fields.get("lang") or None,
    )


def format_record(record: TweetRecord) -> str:
    """Inverse of parse_record, minus the derived urls field."""
    parts = [
        f"tweet_id={record.tweet_id}",
        f"account_id={record.account_id}",
        f"created_at_utc={record.created_at_utc}",
        f"follower_count={record.follower_count}",
    ]
    if record.utc_offset is not None:
        parts.append(f"utc_offset={record.utc_offset}")
    if record.lang:
        parts.append(f"lang={record.lang}")
    parts.append(f"text={_escape(record.text)}")
    return "\t".join(parts)


def read_corpus(path) -> tuple[list[TweetRecord], list[RecordParseError]]:
    """Read a corpus file, skipping malformed lines.

    Returns the parsed records in file order plus the collected parse errors.
    Duplicate tweet_ids violate the corpus invariant; the later line is
    skipped and reported as an error.
    """
    records: list[TweetRecord] = []
    errors: list[RecordParseError] = []
    seen: set[str] = set()
    with open(path, "rb") as handle:
        for line_no, raw in enumerate(handle, 1):
            if not raw.strip():
                continue
            try:
                rec = parse_record(raw, line_no)
            except RecordParseError as exc:
                errors.append(exc)
                continue
            if rec.tweet_id in seen:
                errors.append(RecordParseError(line_no, f"duplicate tweet_id {rec.tweet_id!r}"))
                continue
            seen.add(rec.tweet_id)
            records.append(rec)
    return records, errors


def write_corpus(path, records: Iterable[TweetRecord]) -> None:
    with open(path, "w", encoding="utf-8") as handle:
        for rec in records:
            handle.write(format_record(rec) + "\n")


def localize(created_at_utc: int, utc_offset: int | None) -> tuple[int, bool]:
    """Local post time as epoch seconds plus a flag for whether an offset applied.

    Records without an offset keep their UTC time and are flagged non-localized.
    """
    if utc_offset is None:
        return created_at_utc, False
    return created_at_utc + utc_offset, True


def group_by_account(records: Iterable[TweetRecord]) -> list[AccountSample]:
    """One AccountSample per account, tweets time-ordered, accounts sorted by id.

    Ties in created_at_utc break by tweet_id so the output is deterministic
    regardless of input order.
    """
    by_account: dict[str, list[TweetRecord]] = {}
    for rec in records:
        by_account.setdefault(rec.account_id, []).append(rec)
    samples = []
    for account_id in sorted(by_account):
        tweets = sorted(by_account[account_id], key=lambda r: (r.created_at_utc, r.tweet_id))
        samples.append(AccountSample(account_id=account_id, tweets=tweets))
    return samples


class PhraseMatcher:
    """Matches keyword phrases against token sequences.

    Keywords are normalized through tokenize() at construction, so "e-cig",
    "E CIG", and "e cig" all denote the same two-token phrase while "#ecig"
    stays a single hashtag token.
    """

    def __init__(self, keywords: Iterable[str]):
        self.phrases: set[tuple[str, ...]] = set()
        for kw in keywords:
            toks = tuple(tokenize(kw))
            if toks:
                self.phrases.add(toks)
        self._by_first: dict[str, list[tuple[str, ...]]] = {}
        for phrase in self.phrases:
            self._by_first.setdefault(phrase[0], []).append(phrase)
        for options in self._by_first.values():
            options.sort(key=len, reverse=True)
        self._max_len = max((len(p) for p in self.phrases), default=0)

    def __len__(self) -> int:
        return len(self.phrases)

    def contains_any(self, tokens: Sequence[str]) -> bool:
        for i, tok in enumerate(tokens):
            for phrase in self._by_first.get(tok, ()):
                if tuple(tokens[i : i + len(phrase)]) == phrase:
                    return True
        return False

    def count_occurrences(self, tokens: Sequence[str]) -> int:
        """Greedy longest-match count; tokens consumed by a phrase are not recounted."""
        count = 0
        i = 0
        n = len(tokens)
        while i < n:
            matched = 0
            for phrase in self._by_first.get(tokens[i], ()):
                if tuple(tokens[i : i + len(phrase)]) == phrase:
                    matched = len(phrase)
                    break
            if matched:
                count += 1
                i += matched
            else:
                i += 1
        return count


def load_keyword_file(path) -> list[str]:
    """One keyword or phrase per line.

    A line whose first non-blank character is '#' followed by whitespace,
    another '#', or nothing is a comment. A '#' glued to text ("#ecig") is a
    hashtag keyword, not a comment.
    """
    keywords = []
    with open(path, "r", encoding="utf-8") as handle:
        for raw in handle:
            line = raw.strip()
            if not line:
                continue
            if line[0] == "#" and (len(line) == 1 or line[1] in "# \t"):
                continue
            keywords.append(line)
    return keywords


def _bundled(name: str):
    return resources.files("tweetsift.data").joinpath(name)


def default_scrape_keywords() -> list[str]:
    with resources.as_file(_bundled("scrape_keywords.txt")) as path:
        return load_keyword_file(path)


_default_scrape_matcher: PhraseMatcher | None = None


def match_scrape_keywords(text: str, keywords: Iterable[str] | PhraseMatcher | None = None) -> bool:
    """True iff the tokenized text contains any scrape keyword or phrase."""
    global _default_scrape_matcher
    if isinstance(keywords, PhraseMatcher):
        matcher = keywords
    elif keywords is not None:
        matcher = PhraseMatcher(keywords)
    else:
        if _default_scrape_matcher is None:
            _default_scrape_matcher = PhraseMatcher(default_scrape_keywords())
        matcher = _default_scrape_matcher
    return matcher.contains_any(tokenize(text))
