"""
From raw text to distributional profiles
========================================

Tokenize a small corpus, count windowed co-occurrences, inspect a
contingency table, and build conditional-probability and mutual-information
profiles for a few words.
"""

from distsem import (
    CorpusConfig,
    SoAKind,
    build_profile,
    contingency,
    count_cooccurrences,
    strength,
    tokenize_documents,
)

# A corpus is just an iterable of documents.  Windows never cross document
# boundaries with the default configuration.
DOCUMENTS = [
    "the band played a quiet song while the guitar and piano carried the melody",
    "the band started a long jam and the crowd sang the song again",
    "we spread sweet jam and fresh butter on warm bread with cheese and apple",
    "the cook baked bread at dawn and the kitchen smelled of butter and cheese",
    "a small bird watched the cat while the dog slept near the horse",
]

config = CorpusConfig(window_radius=3)
counts = count_cooccurrences(tokenize_documents(DOCUMENTS, config), config)

print("tokens counted:", counts.total_tokens)
print("co-occurrence events:", counts.total_pairs)
print("vocabulary size:", len(counts.targets))

# Each (target, feature) cell collapses into a 2x2 table, from which any
# strength-of-association statistic follows.
table = contingency(counts, "guitar", "piano")
print("\ncontingency for (guitar, piano):", table)
for kind in (SoAKind.CP, SoAKind.PMI, SoAKind.DICE):
    print(f"  {kind.value:>4}: {strength(table, kind):.4f}")

# A profile maps every co-occurring feature to its association strength.
# Conditional-probability profiles are proper distributions.
cp_profile = build_profile(counts, "jam", SoAKind.CP)
print("\nconditional-probability profile of 'jam':")
for feature, value in sorted(cp_profile.entries.items(), key=lambda kv: -kv[1])[:6]:
    print(f"  {feature:>8}: {value:.3f}")
print("  (sums to", round(sum(cp_profile.entries.values()), 10), ")")

# Mutual-information profiles keep negative associations too; measures decide
# what to do with them.
pmi_profile = build_profile(counts, "jam", SoAKind.PMI)
strongest = sorted(pmi_profile.entries.items(), key=lambda kv: -kv[1])[:4]
weakest = sorted(pmi_profile.entries.items(), key=lambda kv: kv[1])[:2]
print("\nstrongest mutual-information features of 'jam':")
for feature, value in strongest:
    print(f"  {feature:>8}: {value:+.3f}")
print("most repelled features:")
for feature, value in weakest:
    print(f"  {feature:>8}: {value:+.3f}")
