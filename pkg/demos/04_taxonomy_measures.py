"""
Knowledge-rich scores over a concept hierarchy
==============================================

A small typed hierarchy with corpus frequencies attached to its words.
Path-based scores need only the graph; information-content scores also need
concept probabilities propagated up from word occurrences.
"""

from distsem import (
    Taxonomy,
    hirst_stonge,
    ic_from_counts,
    jiang_conrath,
    leacock_chodorow,
    lin_taxonomy,
    lso,
    resnik,
    shortest_path,
)

taxonomy = Taxonomy(
    nodes={
        "entity": "Entity",
        "animal": "Animal",
        "artifact": "Artifact",
        "dog": "Dog",
        "cat": "Cat",
        "tool": "Tool",
        "hammer": "Hammer",
    },
    edges=[
        ("animal", "entity", "isa"),
        ("artifact", "entity", "isa"),
        ("dog", "animal", "isa"),
        ("cat", "animal", "isa"),
        ("tool", "artifact", "isa"),
        ("hammer", "tool", "isa"),
        ("dog", "tool", "uses"),  # a non-hierarchy relation
    ],
    word_map={
        "dog": frozenset({"dog"}),
        "puppy": frozenset({"dog"}),
        "cat": frozenset({"cat"}),
        "hammer": frozenset({"hammer"}),
        "tool": frozenset({"tool"}),
        "animal": frozenset({"animal"}),
        "thing": frozenset({"entity"}),
    },
)

print("hierarchy depth:", taxonomy.depth)

# Path scores walk edges of every relation label; mixing labels is penalized.
length, turns = shortest_path(taxonomy, "cat", "hammer")
print(f"\nshortest path cat..hammer: {length} edges, {turns} relation turns")
for c1, c2 in [("dog", "cat"), ("dog", "hammer"), ("cat", "hammer")]:
    print(f"  path relatedness {c1}-{c2}: {hirst_stonge(taxonomy, c1, c2):.1f}")
    print(f"  scaled path closeness {c1}-{c2}: {leacock_chodorow(taxonomy, c1, c2):.3f}")

# Corpus frequencies give each concept a probability: every occurrence of a
# mapped word credits its concepts and all their ancestors.
frequencies = {"dog": 10, "puppy": 5, "cat": 10, "hammer": 8, "tool": 4, "animal": 3, "thing": 5}
table = ic_from_counts(taxonomy, frequencies)
print("\nconcept probabilities and information content:")
for node in ("entity", "animal", "dog", "tool", "hammer"):
    print(f"  {node:>8}: p={table.prob[node]:.3f}  ic={table.ic[node]:.3f}")

print("\nsubsumer-based scores:")
for c1, c2 in [("dog", "cat"), ("dog", "hammer"), ("tool", "hammer")]:
    subsumer = lso(taxonomy, c1, c2, table)
    print(
        f"  {c1}-{c2} (subsumer {subsumer}): "
        f"shared-ic={resnik(taxonomy, c1, c2, table):.3f}  "
        f"ic-distance={jiang_conrath(taxonomy, c1, c2, table):.3f}  "
        f"ic-ratio={lin_taxonomy(taxonomy, c1, c2, table):.3f}"
    )
