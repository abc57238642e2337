"""
The measure catalog on one word pair
====================================

Every profile-distance measure applied to the same pair of words, with its
orientation (distance vs. closeness) and symmetry tags.  Orientation is
metadata: the toolkit never flips a distance into a closeness behind your
back.
"""

from distsem import (
    CorpusConfig,
    MeasureConfig,
    MeasureId,
    SoAKind,
    build_profile,
    count_cooccurrences,
    is_symmetric,
    orientation,
    required_soa,
    score,
    tokenize_documents,
)

DOCUMENTS = [
    "the band played a quiet song while the guitar and piano carried the melody",
    "guitar and piano lessons start with a simple song and a slow melody",
    "the band tuned the guitar and the drum before the jam and the song began",
    "we spread sweet jam and fresh butter on warm bread with cheese and apple",
    "bread with butter and a spoon of jam makes a fine meal with cheese",
    "a small bird watched the cat while the dog slept near the horse",
    "the cat chased the bird across the yard while the dog barked at the horse",
]

config = CorpusConfig(window_radius=3)
counts = count_cooccurrences(tokenize_documents(DOCUMENTS, config), config)
measure_config = MeasureConfig()

profiles = {}
for word in ("guitar", "piano", "cat"):
    profiles[word] = {
        SoAKind.CP: build_profile(counts, word, SoAKind.CP),
        SoAKind.PMI: build_profile(counts, word, SoAKind.PMI),
    }


def show(w1, w2):
    print(f"\n{w1} vs {w2}")
    print(f"{'measure':>12} {'orientation':>11} {'symmetric':>9} {'value':>10}")
    for measure in MeasureId:
        if measure in (MeasureId.HINDLE, MeasureId.LIN):
            continue  # these need dependency-parsed input; see the readme
        kind = required_soa(measure, measure_config)
        value = score(measure, profiles[w1][kind], profiles[w2][kind], measure_config)
        print(
            f"{measure.value:>12} {orientation(measure).value:>11} "
            f"{str(is_symmetric(measure)):>9} {value:>10.4f}"
        )


# Words from the same topic share context, so closeness measures run high and
# distance measures run low; a cross-topic pair shows the opposite pattern.
show("guitar", "piano")
show("guitar", "cat")
