"""
Evaluating measures against human judgments
===========================================

Rank word pairs by a measure, correlate the ranking with human closeness
scores, and solve multiple-choice closest-word problems.  Human scores are
closeness-oriented, so a good distance measure correlates negatively; the
magnitude is what matters and the sign is reported alongside.
"""

from distsem import (
    BenchmarkSet,
    CorpusConfig,
    MeasureId,
    WordChoiceProblem,
    correlate,
    count_cooccurrences,
    orientation,
    rank_pairs,
    solve_word_choice,
    tokenize_documents,
    word_pair_scorer,
)

DOCUMENTS = [
    "the band played a quiet song while the guitar and piano carried the melody",
    "guitar and piano lessons start with a simple song and a slow melody",
    "the band tuned the guitar and the drum before the jam and the song began",
    "we spread sweet jam and fresh butter on warm bread with cheese and apple",
    "bread with butter and a spoon of jam makes a fine meal with cheese",
    "the cook baked bread at dawn and the kitchen smelled of butter and cheese",
    "a small bird watched the cat while the dog slept near the horse",
    "the cat chased the bird across the yard while the dog barked at the horse",
]

BENCHMARK = BenchmarkSet(
    name="demo",
    pairs=[
        ("guitar", "piano", 3.8),
        ("bread", "cheese", 3.5),
        ("cat", "dog", 3.2),
        ("song", "bread", 1.0),
        ("guitar", "horse", 0.4),
    ],
    score_scale=(0.0, 4.0),
)

config = CorpusConfig(window_radius=3)
counts = count_cooccurrences(tokenize_documents(DOCUMENTS, config), config)

for measure in (MeasureId.COS, MeasureId.JSD):
    scorer = word_pair_scorer(counts, measure)
    tag = orientation(measure)
    print(f"\nranking by {measure.value} ({tag.value}):")
    result = rank_pairs(BENCHMARK, scorer, tag)
    for position, (w1, w2, human, value) in enumerate(result.ranked, 1):
        print(f"  {position}. {w1}-{w2}  human={human:.1f}  score={value:.4f}")
    report = correlate(BENCHMARK, scorer, tag)
    print(
        f"  rank correlation {report.spearman_raw:+.3f} "
        f"(magnitude {report.spearman_abs:.3f}), "
        f"linear correlation {report.pearson_raw:+.3f}"
    )

# A closest-word problem gives a target and candidate answers; the measure
# picks the candidate it finds closest.
PROBLEMS = [
    WordChoiceProblem("guitar", ["soup", "piano", "horse", "bread"], 1),
    WordChoiceProblem("bread", ["cheese", "drum", "cat", "song"], 0),
    WordChoiceProblem("cat", ["melody", "butter", "dog", "jam"], 2),
]

scorer = word_pair_scorer(counts, MeasureId.COS)
outcome = solve_word_choice(PROBLEMS, scorer, orientation(MeasureId.COS))
print(f"\nword-choice accuracy with cosine: {outcome.accuracy:.2f}")
for problem, choice in zip(PROBLEMS, outcome.choices):
    picked = problem.alternatives[choice] if choice is not None else "(none)"
    print(f"  {problem.target}: picked {picked}")
