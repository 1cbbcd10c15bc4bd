"""Labeled synthetic corpora: cyborg, commercial, and organic accounts.

Cyborg tweets come from six testimonial templates whose slots swap a few
words to fake organic variety; commercial tweets are jargon-dense ads; organic
tweets are sentences sampled from a bundled natural-text corpus. All three are
deterministic per seed, which makes them usable as calibration and benchmark
fixtures.
"""

from __future__ import annotations

import random
import re
from dataclasses import dataclass
from importlib import resources
from typing import Sequence

from .corpus import AccountSample, TweetRecord

KINDS = ("cyborg", "commercial", "organic")

BASE_EPOCH = 1356998400  # 2013-01-01T00:00:00Z

BRANDS = ("VapeCloud", "PuffRight", "NicoMist", "SteamLeaf", "MistKing")

_HANDLE_BITS = ("sky", "moon", "pix", "jam", "red", "lou", "max", "zee", "kat", "finn")


class Slot:
    """A template position filled at generation time."""

    def fill(self, rng: random.Random) -> str:
        raise NotImplementedError

    def pattern(self) -> str:
        raise NotImplementedError


@dataclass(frozen=True)
class Literal(Slot):
    text: str

    def fill(self, rng):
        return self.text

    def pattern(self):
        return re.escape(self.text)


@dataclass(frozen=True)
class Choice(Slot):
    options: tuple[str, ...]

    def __post_init__(self):
        if not self.options:
            raise ValueError("alternative set must be non-empty")

    def fill(self, rng):
        return rng.choice(self.options)

    def pattern(self):
        return "(?:" + "|".join(re.escape(o) for o in self.options) + ")"


@dataclass(frozen=True)
class Maybe(Slot):
    """An optional word, present or absent with equal probability."""

    text: str

    def fill(self, rng):
        return self.text if rng.random() < 0.5 else ""

    def pattern(self):
        return "(?:" + re.escape(self.text) + ")?"


class Mention(Slot):
    def fill(self, rng):
        return "@" + rng.choice(_HANDLE_BITS) + str(rng.randint(1, 99))

    def pattern(self):
        return r"@[a-z]+\d+"


class Brand(Slot):
    def fill(self, rng):
        return rng.choice(BRANDS)

    def pattern(self):
        return "(?:" + "|".join(BRANDS) + ")"


class Number(Slot):
    def fill(self, rng):
        return str(rng.randint(2, 14))

    def pattern(self):
        return r"\d+"


class Url(Slot):
    def fill(self, rng):
        tail = "".join(rng.choice("abcdefghijklmnopqrstuvwxyz0123456789") for _ in range(5))
        return "http://sh.rt/" + tail

    def pattern(self):
        return r"http://\S+"


MENTION, BRAND, NUMBER, URL = Mention(), Brand(), Number(), Url()

CyborgTemplate = tuple[Slot, ...]

CYBORG_TEMPLATES: tuple[CyborgTemplate, ...] = (
    (
        MENTION,
        Choice(("I", "We")),
        Choice(("tried", "pursued")),
        Literal("to"),
        Choice(("give up", "quit")),
        Literal("smoking ."),
        Literal("Discovered"),
        BRAND,
        Literal("electronic cigarettes and quit in"),
        NUMBER,
        Literal("weeks."),
        Choice(("Marvelous!", "Amazing!", "Terrific!")),
        URL,
    ),
    (
        MENTION,
        Literal("It's now really easy to"),
        Choice(("quit", "give up")),
        Literal("smoking"),
        Maybe("cigarettes"),
        Literal(". - these"),
        BRAND,
        Literal("electronic cigarettes are lots of"),
        Choice(("fun!", "pleasure!")),
        URL,
    ),
    (
        MENTION,
        Literal("electronic cigarettes can assist cigarette smokers to quit, it's well worth the cost"),
        URL,
    ),
    (
        MENTION,
        Literal("It's"),
        Choice(("incredible", "amazing")),
        Literal("- the"),
        Maybe("really"),
        Choice(("easy", "painless")),
        Choice(("answer", "method")),
        Literal("to quit cigarette smoking through"),
        BRAND,
        Literal("electronic cigarettes"),
        URL,
    ),
    (
        Literal("I managed to quit smoking with these e-cigarettes, I highly recommend them:"),
        URL,
        MENTION,
    ),
    (
        MENTION,
        Literal("Its"),
        Choice(("amazing", "extraordinary")),
        Literal("- I"),
        Maybe("really"),
        Literal("quit smoking after"),
        NUMBER,
        Literal("yrs thanks to"),
        BRAND,
        Literal("electronic cigarettes!"),
        URL,
    ),
)

_COMMERCIAL_OPENERS = ("Buy", "Save big on", "Premium", "Discount")
_COMMERCIAL_ITEMS = ("starter kit", "e cig starter kit", "vapor kit")
_COMMERCIAL_TAILS = (
    "free shipping sale",
    "coupon code inside",
    "free trial offer",
    "best price deal",
    "new mango flavor sale",
)


def render_template(template: CyborgTemplate, rng: random.Random) -> str:
    parts = [slot.fill(rng) for slot in template]
    return " ".join(p for p in parts if p)


def template_regex(template: CyborgTemplate) -> re.Pattern:
    # Maybe slots may vanish along with their separator, hence the loose joiner.
    body = r"\s*".join(slot.pattern() for slot in template)
    return re.compile("^" + body + "$")


_COMPILED = [template_regex(t) for t in CYBORG_TEMPLATES]


def matches_template(text: str) -> bool:
    """True iff the text parses back against one of the cyborg templates."""
    return any(rx.match(text) for rx in _COMPILED)


def organic_sentences() -> list[str]:
    """The bundled natural-text source, one sentence per line."""
    data = resources.files("tweetsift.data").joinpath("organic_sentences.txt").read_text("utf-8")
    return [line.strip() for line in data.splitlines() if line.strip()]


_ORGANIC_CACHE: list[str] | None = None


def _cyborg_text(rng: random.Random) -> str:
    return render_template(rng.choice(CYBORG_TEMPLATES), rng)


def _commercial_text(rng: random.Random) -> str:
    return " ".join(
        (
            rng.choice(_COMMERCIAL_OPENERS),
            rng.choice(BRANDS),
            rng.choice(_COMMERCIAL_ITEMS),
            f"{rng.randint(10, 75)}% off",
            rng.choice(_COMMERCIAL_TAILS),
            URL.fill(rng),
        )
    )


def _organic_text(rng: random.Random, sentences: Sequence[str], url_probability: float) -> str:
    text = rng.choice(sentences)[:140]
    if rng.random() < url_probability:
        text = text[:119].rstrip() + " " + URL.fill(rng)
    return text


def generate_account(
    kind: str,
    n_tweets: int,
    seed: int,
    url_probability: float = 0.05,
    sentences: Sequence[str] | None = None,
) -> AccountSample:
    """One synthetic account of the given kind, deterministic per (kind, seed).

    Organic accounts draw from the bundled sentence corpus unless another
    sentence list is supplied; their URL probability must stay at or below
    0.1 to keep the organic URL signal honest.
    """
    global _ORGANIC_CACHE
    if kind not in KINDS:
        raise ValueError(f"kind must be one of {KINDS}, got {kind!r}")
    if n_tweets < 1:
        raise ValueError("n_tweets must be >= 1")
    if kind == "organic" and url_probability > 0.1:
        raise ValueError("organic url_probability must be <= 0.1")
    if kind == "organic" and sentences is None:
        if _ORGANIC_CACHE is None:
            _ORGANIC_CACHE = organic_sentences()
        sentences = _ORGANIC_CACHE

    rng = random.Random(f"{kind}:{seed}")
    account_id = f"{kind}-{seed:06d}"
    followers = rng.randint(40, 4000) if kind != "organic" else rng.randint(15, 600)
    offset = rng.choice((-28800, -18000, -7200, 0, 3600, 7200, 19800))
    ts = BASE_EPOCH + rng.randint(0, 180 * 86400)

    tweets = []
    for i in range(n_tweets):
        if kind == "cyborg":
            text = _cyborg_text(rng)
        elif kind == "commercial":
            text = _commercial_text(rng)
        else:
            text = _organic_text(rng, sentences, url_probability)
        tweets.append(
            TweetRecord(
                tweet_id=f"{account_id}-{i:05d}",
                account_id=account_id,
                text=text,
                created_at_utc=ts,
                follower_count=followers,
                utc_offset=offset,
                lang="en",
            )
        )
        ts += rng.randint(600, 10800)
    return AccountSample(account_id=account_id, tweets=tweets)


def generate_corpus(
    kinds: Sequence[tuple[str, int]],
    n_tweets: int,
    seed: int,
) -> tuple[list[TweetRecord], dict[str, str]]:
    """Accounts for each (kind, how_many), flattened to records plus labels.

    Labels map account_id to the classification ground truth: Organic for
    organic accounts, Automated otherwise.
    """
    records: list[TweetRecord] = []
    labels: dict[str, str] = {}
    offset = 0
    for kind, n_accounts in kinds:
        for i in range(n_accounts):
            sample = generate_account(kind, n_tweets, seed + offset + i)
            records.extend(sample.tweets)
            labels[sample.account_id] = "Organic" if kind == "organic" else "Automated"
        offset += n_accounts
    return records, labels
