"""Account-level automation detection from three linguistic features.

Per account: mean URLs per tweet, mean pairwise tweet dissimilarity over the
binned sample, and the vocabulary-introduction decay exponent. Accounts whose
feature vector leaves the per-bin organic box are labeled Automated.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from . import _lcsbatch
from .corpus import AccountSample, TweetRecord, tokenize
from .errors import CalibrationError, ConfigError, UndefinedFeatureError

AUTOMATED = "Automated"
ORGANIC = "Organic"
UNCLASSIFIED = "Unclassified"

MIN_BIN = 25
MAX_BIN = 500
BIN_STEP = 25
STANDARD_BINS = tuple(range(MIN_BIN, MAX_BIN + 1, BIN_STEP))

MIN_DECAY_TOKENS = 50
MIN_ORGANIC_PER_BIN = 20
DEFAULT_FPR_BUDGET = 0.13


@dataclass
class AccountFeatureVector:
    account_id: str
    url_rate: float
    mean_dissimilarity: float
    decay_rate: float
    bin_size: int

    @property
    def n_tweets_used(self) -> int:
        return self.bin_size


@dataclass
class AccountLabel:
    account_id: str
    label: str


@dataclass
class BoxBounds:
    """Axis-aligned organic region for one bin size.

    url_rate is bounded above only; the two remaining features are bounded on
    both sides. All bounds are inclusive (boundary points are Organic).
    """

    url_rate_max: float
    dissimilarity_min: float
    dissimilarity_max: float
    decay_min: float
    decay_max: float

    def contains(self, fv: AccountFeatureVector) -> bool:
        return (
            fv.url_rate <= self.url_rate_max
            and self.dissimilarity_min <= fv.mean_dissimilarity <= self.dissimilarity_max
            and self.decay_min <= fv.decay_rate <= self.decay_max
        )


@dataclass
class ClassifierBox:
    """Per-bin organic boxes, immutable after calibration."""

    bins: dict[int, BoxBounds]

    def bounds_for(self, bin_size: int) -> BoxBounds:
        try:
            return self.bins[bin_size]
        except KeyError:
            raise ConfigError(f"classifier box has no bounds for bin size {bin_size}") from None

    def save(self, path) -> None:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(
                "# bin_size\turl_rate_max\tdissimilarity_min\tdissimilarity_max"
                "\tdecay_min\tdecay_max\n"
            )
            for bin_size in sorted(self.bins):
                b = self.bins[bin_size]
                handle.write(
                    f"{bin_size}\t{b.url_rate_max!r}\t{b.dissimilarity_min!r}"
                    f"\t{b.dissimilarity_max!r}\t{b.decay_min!r}\t{b.decay_max!r}\n"
                )

    @classmethod
    def load(cls, path) -> "ClassifierBox":
        bins: dict[int, BoxBounds] = {}
        with open(path, "r", encoding="utf-8") as handle:
            for line_no, raw in enumerate(handle, 1):
                line = raw.strip()
                if not line or line.startswith("#"):
                    continue
                parts = line.split("\t")
                if len(parts) != 6:
                    raise ConfigError(f"box file line {line_no}: expected 6 columns, got {len(parts)}")
                try:
                    bin_size = int(parts[0])
                    vals = [float(v) for v in parts[1:]]
                except ValueError as exc:
                    raise ConfigError(f"box file line {line_no}: {exc}") from None
                bins[bin_size] = BoxBounds(*vals)
        if not bins:
            raise ConfigError(f"box file {path} contains no bins")
        return cls(bins=bins)


def lcs_length(a: str, b: str) -> int:
    """Length of the longest common subsequence of two strings, in characters.

    Whitespace counts like any other character. Bit-parallel over Python
    integers: the set bits of ``row`` mark the ends of a maximal chain of
    matches, so the popcount after consuming ``b`` is the LCS length. Exact,
    O(len(a)/wordsize * len(b)).
    """
    if not a or not b:
        return 0
    if len(a) > len(b):
        a, b = b, a
    return _lcsbatch.lcs_from_masks(_lcsbatch.char_masks(a), b)


def pairwise_dissimilarity(a: str, b: str) -> float:
    """Normalized tweet dissimilarity in [0, 1].

    (|a| + |b| - 2*LCS(a, b)) / (|a| + |b|); 0 for identical tweets, 1 for
    tweets with no common character. Two empty tweets count as identical.
    """
    total = len(a) + len(b)
    if total == 0:
        return 0.0
    return (total - 2 * lcs_length(a, b)) / total


def mean_dissimilarity(sample: Sequence[str]) -> float:
    """Mean pairwise dissimilarity over all C(n, 2) unordered pairs."""
    n = len(sample)
    if n < 2:
        raise UndefinedFeatureError("mean dissimilarity needs at least 2 tweets")
    lcs = _lcsbatch.allpairs_lcs(sample)
    lens = [len(t) for t in sample]
    total = 0.0
    p = 0
    for i in range(n):
        li = lens[i]
        for j in range(i + 1, n):
            pair_len = li + lens[j]
            if pair_len:
                total += (pair_len - 2 * int(lcs[p])) / pair_len
            p += 1
    return total / (n * (n - 1) // 2)


def url_rate(sample: Sequence[TweetRecord]) -> float:
    """Mean URL count per tweet."""
    if not sample:
        raise UndefinedFeatureError("url rate needs at least 1 tweet")
    return sum(len(r.urls) for r in sample) / len(sample)


def _fit_slope(log_n: np.ndarray, log_m: np.ndarray) -> float:
    x = log_n - log_n.mean()
    y = log_m - log_m.mean()
    denom = float(np.dot(x, x))
    if denom == 0.0:
        raise UndefinedFeatureError("degenerate sample grid for decay fit")
    return float(np.dot(x, y)) / denom


def _sample_grid(length: int) -> list[int]:
    """Logarithmic grid of prefix sizes for the vocabulary-growth fit.

    n = ceil(50 * 1.25^k) while it fits; short streams fall back to 5
    geometrically spaced points so the fit always has enough support.
    """
    grid: list[int] = []
    k = 0
    while True:
        n = math.ceil(50 * 1.25**k)
        if n > length:
            break
        if not grid or n > grid[-1]:
            grid.append(n)
        k += 1
    if len(grid) < 5:
        lo = max(2, length // 10)
        pts = {max(lo, round(lo * (length / lo) ** (i / 4))) for i in range(5)}
        grid = sorted(pts)
    return grid


def vocabulary_growth(tokens: Sequence[str], grid: Iterable[int]) -> list[int]:
    """Distinct-word counts m(n) over the first n tokens, for each grid point."""
    targets = sorted(set(grid))
    seen: set[str] = set()
    out = []
    ti = 0
    for n in targets:
        while ti < n:
            seen.add(tokens[ti])
            ti += 1
        out.append(len(seen))
    return out


def decay_rate(sample: Sequence[str]) -> float:
    """Word-introduction decay exponent of a time-ordered list of tweet texts.

    The tweets are tokenized and concatenated into one stream. m(n), the
    number of distinct words among the first n tokens, approximately follows
    m(n) ~ n^alpha; the decay rate is beta = 1 - alpha with alpha the
    least-squares slope of log m(n) against log n on a logarithmic grid.
    Organic vocabularies keep introducing words (small beta); template bots
    exhaust theirs quickly (beta near 1).
    """
    tokens: list[str] = []
    for text in sample:
        tokens.extend(tokenize(text))
    if len(tokens) < MIN_DECAY_TOKENS:
        raise UndefinedFeatureError(
            f"decay rate needs at least {MIN_DECAY_TOKENS} tokens, got {len(tokens)}"
        )
    grid = _sample_grid(len(tokens))
    counts = vocabulary_growth(tokens, grid)
    log_n = np.log(np.array(grid, dtype=float))
    log_m = np.log(np.array(counts, dtype=float))
    return 1.0 - _fit_slope(log_n, log_m)


def bin_size_for(n_available: int) -> int | None:
    """Largest multiple of 25 at most min(n_available, 500); None below 25."""
    if n_available < MIN_BIN:
        return None
    return min(MAX_BIN, BIN_STEP * (n_available // BIN_STEP))


def extract_features(sample: AccountSample) -> AccountFeatureVector | None:
    """Feature vector over the account's earliest bin_size tweets.

    Returns None when the account cannot be characterized: fewer than 25
    tweets, or too little text for the decay fit. Callers treat None as the
    Unclassified signal.
    """
    bin_size = bin_size_for(len(sample.tweets))
    if bin_size is None:
        return None
    used = sample.tweets[:bin_size]
    texts = [t.text for t in used]
    try:
        decay = decay_rate(texts)
    except UndefinedFeatureError:
        return None
    return AccountFeatureVector(
        account_id=sample.account_id,
        url_rate=url_rate(used),
        mean_dissimilarity=mean_dissimilarity(texts),
        decay_rate=decay,
        bin_size=bin_size,
    )


def classify(features: AccountFeatureVector, box: ClassifierBox) -> AccountLabel:
    """Organic iff the feature vector lies inside the bin's closed box."""
    bounds = box.bounds_for(features.bin_size)
    label = ORGANIC if bounds.contains(features) else AUTOMATED
    return AccountLabel(account_id=features.account_id, label=label)


def _quantile_bounds(values: np.ndarray, trim: float, two_sided: bool) -> tuple[float, float]:
    values = np.sort(values)
    if two_sided:
        lo = float(np.quantile(values, trim / 2, method="lower"))
        hi = float(np.quantile(values, 1 - trim / 2, method="higher"))
        return lo, hi
    hi = float(np.quantile(values, 1 - trim, method="higher"))
    return float(values[0]), hi


def _fit_bin(vectors: list[AccountFeatureVector], fpr_budget: float) -> BoxBounds:
    url = np.array([v.url_rate for v in vectors])
    dis = np.array([v.mean_dissimilarity for v in vectors])
    dec = np.array([v.decay_rate for v in vectors])

    def bounds_at(trim: float) -> BoxBounds:
        _, url_hi = _quantile_bounds(url, trim, two_sided=False)
        dis_lo, dis_hi = _quantile_bounds(dis, trim, two_sided=True)
        dec_lo, dec_hi = _quantile_bounds(dec, trim, two_sided=True)
        return BoxBounds(url_hi, dis_lo, dis_hi, dec_lo, dec_hi)

    def fpr(b: BoxBounds) -> float:
        inside = (
            (url <= b.url_rate_max)
            & (dis >= b.dissimilarity_min)
            & (dis <= b.dissimilarity_max)
            & (dec >= b.decay_min)
            & (dec <= b.decay_max)
        )
        return 1.0 - float(inside.mean())

    # Tightest per-axis trim within budget whose joint false-positive rate
    # still fits the budget; trim 0 (min..max box) always qualifies.
    steps = 200
    for k in range(steps, -1, -1):
        trim = fpr_budget * k / steps
        box = bounds_at(trim)
        if fpr(box) <= fpr_budget:
            return box
    return bounds_at(0.0)


def calibrate(
    labeled: Iterable[tuple[AccountFeatureVector, str]],
    fpr_budget: float = DEFAULT_FPR_BUDGET,
) -> ClassifierBox:
    """Fit per-bin organic boxes from labeled feature vectors.

    Each bin with at least MIN_ORGANIC_PER_BIN organic vectors gets its own
    symmetric quantile-trimmed box; the trim is backed off until the bin's
    empirical false-positive rate on the calibration organics is within
    fpr_budget. Bins without enough organics inherit the nearest smaller
    calibrated bin's bounds (nearest larger if none smaller exists).
    """
    if not 0.0 <= fpr_budget < 1.0:
        raise ConfigError(f"fpr_budget must be in [0, 1), got {fpr_budget}")
    organic_by_bin: dict[int, list[AccountFeatureVector]] = {}
    for fv, label in labeled:
        if label == ORGANIC:
            organic_by_bin.setdefault(fv.bin_size, []).append(fv)

    fitted = {
        bin_size: _fit_bin(vectors, fpr_budget)
        for bin_size, vectors in organic_by_bin.items()
        if len(vectors) >= MIN_ORGANIC_PER_BIN
    }
    if not fitted:
        raise CalibrationError(
            f"no bin has {MIN_ORGANIC_PER_BIN}+ organic examples; cannot calibrate"
        )

    bins: dict[int, BoxBounds] = {}
    calibrated_sizes = sorted(fitted)
    for bin_size in STANDARD_BINS:
        if bin_size in fitted:
            bins[bin_size] = fitted[bin_size]
            continue
        smaller = [s for s in calibrated_sizes if s < bin_size]
        source = smaller[-1] if smaller else min(s for s in calibrated_sizes if s > bin_size)
        bins[bin_size] = fitted[source]
    return ClassifierBox(bins=bins)
