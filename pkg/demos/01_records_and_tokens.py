"""Corpus basics: records, tokenization, scrape keywords, local time.

Every analysis starts from line-delimited records. This walk-through parses a
few lines, shows what the tokenizer does to tweet text, and groups records
into per-account samples.
"""

from tweetsift.corpus import (
    group_by_account,
    localize,
    match_scrape_keywords,
    parse_record,
    tokenize,
)

lines = [
    "tweet_id=t1\taccount_id=alice\tcreated_at_utc=1357030000\tfollower_count=120"
    "\tutc_offset=-18000\ttext=Trying an E-Cig today! #ecig http://sh.rt/ab1",
    "tweet_id=t2\taccount_id=bob\tcreated_at_utc=1357031000\tfollower_count=15"
    "\ttext=nice weather for a walk",
    "tweet_id=t3\taccount_id=alice\tcreated_at_utc=1357029000\tfollower_count=120"
    "\tutc_offset=-18000\ttext=coffee first, tweets later",
]

records = [parse_record(line, i) for i, line in enumerate(lines, 1)]

print("== parsed records ==")
for r in records:
    print(f"{r.tweet_id}  account={r.account_id}  urls={r.urls}  text={r.text!r}")

print("\n== tokenization ==")
for text in ("Trying an E-Cig today! #ecig http://sh.rt/ab1", "E-Cig's on SALE"):
    print(f"{text!r} -> {tokenize(text)}")

print("\n== scrape keyword match ==")
for text in ("Trying an E-Cig today!", "nice weather for a walk", "#ecigs are everywhere"):
    print(f"{text!r} -> {match_scrape_keywords(text)}")

print("\n== local post time ==")
for r in records:
    local, localized = localize(r.created_at_utc, r.utc_offset)
    tag = "localized" if localized else "kept UTC (no offset)"
    print(f"{r.tweet_id}: {r.created_at_utc} -> {local}  ({tag})")

print("\n== grouped by account (time-ordered) ==")
for sample in group_by_account(records):
    order = [t.tweet_id for t in sample.tweets]
    print(f"{sample.account_id}: {len(sample)} tweets, order {order}")
