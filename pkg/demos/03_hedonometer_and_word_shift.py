"""Happiness scoring, a monthly series, and a word-shift decomposition.

Two synthetic corpora stand in for organic and promotional tweet sets. The
promotional one leans on upbeat marketing words (free, best, save), so it
scores happier; the word-shift table shows exactly which words are
responsible and by how much, and excluding the loudest two shows how much
they alone distort the comparison.
"""

from importlib import resources

from tweetsift.corpus import localize, tokenize
from tweetsift.hedonometrics import (
    FrequencyDistribution,
    corpus_happiness,
    happiness_series,
    load_lexicon,
    neutral_filter,
    shift_table_lines,
    word_shift,
)
from tweetsift.synthkit import generate_account

lexicon_path = resources.files("tweetsift.data").joinpath("sample_lexicon.tsv")
lex = load_lexicon(lexicon_path)
print(f"lexicon: {len(lex)} words; after neutral filter:", end=" ")
lex = neutral_filter(lex)  # drop scores in the closed band [4, 6]
print(f"{len(lex)} words")

organic = [t for s in range(25) for t in generate_account("organic", 40, seed=s).tweets]
promo = [t for s in range(25) for t in generate_account("commercial", 40, seed=s).tweets]

def distribution(tweets):
    tokens = [tok for t in tweets for tok in tokenize(t.text)]
    return FrequencyDistribution.from_tokens(tokens)

ref = distribution(organic)
comp = distribution(promo)
print(f"\norganic corpus happiness     : {corpus_happiness(ref, lex):.4f}")
print(f"promotional corpus happiness : {corpus_happiness(comp, lex):.4f}")

print("\n== monthly series over the organic corpus ==")
entries = [(localize(t.created_at_utc, t.utc_offset)[0], tokenize(t.text)) for t in organic]
for point in happiness_series(entries, lex, bin_by="month"):
    value = "  gap  " if point.happiness is None else f"{point.happiness:.4f}"
    print(f"{point.label}  h={value}  matched={point.matched_count:5d}  tweets={point.tweet_count}")

print("\n== top 12 words shifting promotional away from organic ==")
rows = word_shift(ref, comp, lex, top_k=12)
for line in shift_table_lines(rows):
    print(line)

print("\ncontributions sum to the full happiness difference:")
all_rows = word_shift(ref, comp, lex, top_k=None)
print(f"  sum of contributions = {sum(r.contribution for r in all_rows):+.6f}")
print(f"  h_comp - h_ref       = {corpus_happiness(comp, lex) - corpus_happiness(ref, lex):+.6f}")

print("\n== the same shift with the two loudest words excluded ==")
strip = {"free", "best"}
restricted = {w: c for w, c in comp.counts.items() if w not in strip}
print(f"promotional happiness without {sorted(strip)}: {corpus_happiness(restricted, lex):.4f}")
for line in shift_table_lines(word_shift(ref, comp, lex, top_k=5, exclude=strip)):
    print(line)
