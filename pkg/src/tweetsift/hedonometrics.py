"""Corpus happiness scoring and word-shift decomposition.

Every lexicon word carries an average happiness score on a 1-9 scale. A
corpus scores as the frequency-weighted mean over words it shares with the
lexicon; words in the neutral band are removed first so the emotional signal
is not washed out. Word-shift rows decompose the score difference between a
reference and a comparison corpus into exact per-word contributions.
"""

from __future__ import annotations

from dataclasses import dataclass
from datetime import datetime, timezone
from typing import Iterable, Mapping, Sequence

from .errors import LexiconError, UndefinedScoreError

SCALE_MIN = 1.0
SCALE_MAX = 9.0


@dataclass
class HappinessLexicon:
    """word -> average happiness score, all scores within [1, 9]."""

    scores: dict[str, float]

    def __post_init__(self):
        for word, h in self.scores.items():
            if not SCALE_MIN <= h <= SCALE_MAX:
                raise LexiconError(f"score for {word!r} is {h}, outside [1, 9]")

    def __contains__(self, word: str) -> bool:
        return word in self.scores

    def __getitem__(self, word: str) -> float:
        return self.scores[word]

    def __len__(self) -> int:
        return len(self.scores)


def load_lexicon(path) -> HappinessLexicon:
    """Two-column tab-separated file: word, score. '#' lines are comments."""
    scores: dict[str, float] = {}
    with open(path, "r", encoding="utf-8") as handle:
        for line_no, raw in enumerate(handle, 1):
            line = raw.strip()
            if not line or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise LexiconError(f"{path} line {line_no}: expected 2 columns, got {len(parts)}")
            word = parts[0].strip().lower()
            try:
                score = float(parts[1])
            except ValueError:
                raise LexiconError(f"{path} line {line_no}: bad score {parts[1]!r}") from None
            if not SCALE_MIN <= score <= SCALE_MAX:
                raise LexiconError(
                    f"{path} line {line_no}: score for {word!r} is {score}, outside [1, 9]"
                )
            if word in scores:
                raise LexiconError(f"{path} line {line_no}: duplicate word {word!r}")
            scores[word] = score
    return HappinessLexicon(scores=scores)


def neutral_filter(lex: HappinessLexicon, lo: float = 4.0, hi: float = 6.0) -> HappinessLexicon:
    """Drop words with lo <= score <= hi (closed interval, both ends removed)."""
    if lo > hi:
        raise ValueError(f"neutral window is empty: lo={lo} > hi={hi}")
    return HappinessLexicon(scores={w: h for w, h in lex.scores.items() if h < lo or h > hi})


@dataclass
class FrequencyDistribution:
    """Word counts for one corpus."""

    counts: dict[str, int]

    def __post_init__(self):
        for word, c in self.counts.items():
            if c < 0:
                raise ValueError(f"negative count for {word!r}")

    @property
    def total(self) -> int:
        return sum(self.counts.values())

    @classmethod
    def from_tokens(cls, tokens: Iterable[str]) -> "FrequencyDistribution":
        counts: dict[str, int] = {}
        for tok in tokens:
            counts[tok] = counts.get(tok, 0) + 1
        return cls(counts=counts)

    def get(self, word: str) -> int:
        return self.counts.get(word, 0)


def corpus_happiness(dist: FrequencyDistribution | Mapping[str, int], lex: HappinessLexicon) -> float:
    """Frequency-weighted mean happiness over lexicon-matched words only."""
    counts = dist.counts if isinstance(dist, FrequencyDistribution) else dist
    weighted = 0.0
    total = 0
    for word, count in counts.items():
        if count and word in lex:
            weighted += count * lex[word]
            total += count
    if total == 0:
        raise UndefinedScoreError("no lexicon-matched words with nonzero count")
    return weighted / total


@dataclass
class WordShiftRow:
    word: str
    h_word: float
    freq_direction: str  # "up" | "down": normalized frequency in comp vs ref
    sign: str  # "positive" | "negative": h_word vs reference mean
    contribution: float
    contribution_pct: float


def word_shift(
    ref: FrequencyDistribution,
    comp: FrequencyDistribution,
    lex: HappinessLexicon,
    top_k: int | None = 50,
    exclude: Iterable[str] = (),
) -> list[WordShiftRow]:
    """Per-word contributions to the happiness difference comp - ref.

    Frequencies are normalized over the shared support (lexicon words not
    excluded), which makes the decomposition exact: the contributions sum to
    the difference of the two support-restricted happiness means. Rows come
    sorted by |contribution| descending (ties alphabetical) and truncated to
    top_k; pass top_k=None for all rows.
    """
    excluded = set(exclude)
    support = [w for w in lex.scores if w not in excluded]
    t_ref = sum(ref.get(w) for w in support)
    t_comp = sum(comp.get(w) for w in support)
    if t_ref == 0 or t_comp == 0:
        raise UndefinedScoreError("a distribution has no scoreable words on the shared support")

    h_ref = sum(lex[w] * ref.get(w) for w in support) / t_ref
    h_comp = sum(lex[w] * comp.get(w) for w in support) / t_comp
    diff = h_comp - h_ref

    rows = []
    for w in support:
        c_ref = ref.get(w)
        c_comp = comp.get(w)
        if c_ref == 0 and c_comp == 0:
            continue
        p_ref = c_ref / t_ref
        p_comp = c_comp / t_comp
        delta = (lex[w] - h_ref) * (p_comp - p_ref)
        rows.append(
            WordShiftRow(
                word=w,
                h_word=lex[w],
                freq_direction="up" if p_comp > p_ref else "down",
                sign="positive" if lex[w] > h_ref else "negative",
                contribution=delta,
                contribution_pct=100.0 * delta / abs(diff) if diff != 0.0 else 0.0,
            )
        )
    rows.sort(key=lambda r: (-abs(r.contribution), r.word))
    return rows if top_k is None else rows[:top_k]


def shift_table_lines(rows: Sequence[WordShiftRow]) -> list[str]:
    """Tab-separated word-shift table, one row per word, rank first."""
    lines = ["rank\tword\th_word\tdirection\tsign\tcontribution\tcontribution_pct"]
    for rank, row in enumerate(rows, 1):
        lines.append(
            f"{rank}\t{row.word}\t{row.h_word:.4f}\t{row.freq_direction}\t{row.sign}"
            f"\t{row.contribution:.8f}\t{row.contribution_pct:.4f}"
        )
    return lines


@dataclass
class SeriesPoint:
    label: str
    happiness: float | None  # None marks a gap bin
    matched_count: int
    tweet_count: int


def _bin_label(local_ts: int, bin_by: str) -> str:
    dt = datetime.fromtimestamp(local_ts, tz=timezone.utc)
    if bin_by == "month":
        return f"{dt.year:04d}-{dt.month:02d}"
    if bin_by == "day":
        return dt.date().isoformat()
    raise ValueError(f"bin must be 'day' or 'month', got {bin_by!r}")


def _next_label(label: str, bin_by: str) -> str:
    if bin_by == "month":
        year, month = map(int, label.split("-"))
        month += 1
        if month > 12:
            year, month = year + 1, 1
        return f"{year:04d}-{month:02d}"
    dt = datetime.strptime(label, "%Y-%m-%d").replace(tzinfo=timezone.utc)
    return datetime.fromtimestamp(dt.timestamp() + 86400, tz=timezone.utc).date().isoformat()


def happiness_series(
    tweets: Iterable[tuple[int, Sequence[str]]],
    lex: HappinessLexicon,
    bin_by: str = "month",
) -> list[SeriesPoint]:
    """Happiness per calendar bin of local time, from (local_ts, tokens) pairs.

    Covers every bin between the first and last populated ones; bins with no
    scoreable words become gap points with happiness None.
    """
    pooled: dict[str, dict[str, int]] = {}
    tweet_counts: dict[str, int] = {}
    for local_ts, tokens in tweets:
        label = _bin_label(local_ts, bin_by)
        counts = pooled.setdefault(label, {})
        tweet_counts[label] = tweet_counts.get(label, 0) + 1
        for tok in tokens:
            counts[tok] = counts.get(tok, 0) + 1
    if not pooled:
        return []

    series = []
    label = min(pooled)
    last = max(pooled)
    while True:
        counts = pooled.get(label, {})
        matched = sum(c for w, c in counts.items() if w in lex)
        if matched:
            happiness = corpus_happiness(counts, lex)
        else:
            happiness = None
        series.append(
            SeriesPoint(
                label=label,
                happiness=happiness,
                matched_count=matched,
                tweet_count=tweet_counts.get(label, 0),
            )
        )
        if label == last:
            break
        label = _next_label(label, bin_by)
    return series


def series_table_lines(series: Sequence[SeriesPoint]) -> list[str]:
    """Tab-separated series: bin, mean happiness (NA for gaps), counts."""
    lines = ["bin\thappiness\tmatched_count\ttweet_count"]
    for point in series:
        value = "NA" if point.happiness is None else f"{point.happiness:.6f}"
        lines.append(f"{point.label}\t{value}\t{point.matched_count}\t{point.tweet_count}")
    return lines
