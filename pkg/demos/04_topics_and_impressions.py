"""Subcategory tallies over automated tweets, with audience impressions.

Promotional tweets get sorted into overlapping topics (commercial, cessation,
discount, flavor). Impressions approximate reach: follower counts summed over
every matching tweet.
"""

from tweetsift.pipeline import local_year
from tweetsift.synthkit import generate_account
from tweetsift.topics import default_topics, relevance_sample, tally, tally_table_lines

# cyborg + commercial accounts play the automated side, organic the rest
tweets = []
for kind, n_accounts, automated in (("cyborg", 10, True), ("commercial", 10, True), ("organic", 10, False)):
    for s in range(n_accounts):
        for t in generate_account(kind, 30, seed=400 + s).tweets:
            tweets.append((local_year(t), t, automated))

topics = default_topics()
print("== tallies (automated tweets only; topics overlap) ==")
for line in tally_table_lines(tally(tweets, topics)):
    print(line)

cessation = next(t for t in topics if t.name == "cessation")
from tweetsift.topics import classify_topic

matching = [t for _, t, automated in tweets if automated and classify_topic(t, cessation)]
print(f"\ncessation-matching automated tweets: {len(matching)}")

print("\n== seeded relevance sample for hand coding (n=5) ==")
for t in relevance_sample(matching, 5, seed=13):
    print(f"{t.tweet_id}\t{t.text}")
print("(rerunning with the same seed reproduces this sample exactly)")
