"""Knowledge-rich measures over a typed concept hierarchy.

The hierarchy is a labeled multigraph of concepts.  One relation label
(``isa`` by default) forms the hypernymy subgraph, which must be acyclic and
carries depth, subsumer, and information-content computations; path-based
scores walk edges of every label.

Information content is corpus-derived: each occurrence of a mapped word
credits every concept the word maps to plus all hypernym ancestors, once per
occurrence.  A concept's probability is its credit over the root's, and its
information content the negative log of that.
"""

from __future__ import annotations

import math
import warnings
from collections import deque
from dataclasses import dataclass, field
from typing import Optional

from .errors import (
    ConfigurationError,
    MissingICError,
    MissingWordError,
    NoPathError,
    ParseError,
    ValidationError,
    ZeroCreditWarning,
)


@dataclass
class Taxonomy:
    nodes: dict[str, str]  # concept id -> label
    edges: list[tuple[str, str, str]]  # (child, parent, relation)
    word_map: dict[str, frozenset] = field(default_factory=dict)
    hypernym_relation: str = "isa"

    def __post_init__(self):
        for child, parent, _ in self.edges:
            if child not in self.nodes or parent not in self.nodes:
                raise ValidationError(f"edge {child!r} -> {parent!r} uses unknown node")
        for word, concepts in self.word_map.items():
            for concept in concepts:
                if concept not in self.nodes:
                    raise ValidationError(f"word {word!r} maps to unknown concept {concept!r}")
        self._neighbors: dict[str, list[tuple[str, str]]] = {n: [] for n in self.nodes}
        self._hyper_parents: dict[str, list[str]] = {n: [] for n in self.nodes}
        self._hyper_children: dict[str, list[str]] = {n: [] for n in self.nodes}
        for child, parent, relation in self.edges:
            self._neighbors[child].append((parent, relation))
            self._neighbors[parent].append((child, relation))
            if relation == self.hypernym_relation:
                self._hyper_parents[child].append(parent)
                self._hyper_children[parent].append(child)
        self.roots = sorted(
            n for n in self.nodes if not self._hyper_parents[n]
        )
        self._check_acyclic()
        self._depths = self._compute_depths()
        self.depth = max(self._depths.values()) if self._depths else 0
        if self.nodes and self.depth < 1 and len(self.nodes) > 1:
            raise ValidationError("hypernymy subgraph has no edges")

    def _check_acyclic(self) -> None:
        state: dict[str, int] = {}

        def visit(node: str) -> None:
            state[node] = 1
            for parent in self._hyper_parents[node]:
                mark = state.get(parent)
                if mark == 1:
                    raise ValidationError(f"hypernymy cycle through {parent!r}")
                if mark is None:
                    visit(parent)
            state[node] = 2

        for node in self.nodes:
            if node not in state:
                visit(node)

    def _compute_depths(self) -> dict[str, int]:
        # longest hypernym chain from any root
        depths: dict[str, int] = {}

        def depth_of(node: str) -> int:
            if node in depths:
                return depths[node]
            parents = self._hyper_parents[node]
            value = 0 if not parents else 1 + max(depth_of(p) for p in parents)
            depths[node] = value
            return value

        for node in self.nodes:
            depth_of(node)
        return depths

    def node_depth(self, concept: str) -> int:
        self._require(concept)
        return self._depths[concept]

    def ancestors(self, concept: str) -> frozenset:
        """Hypernym closure of a concept, including itself."""
        self._require(concept)
        seen = {concept}
        queue = deque([concept])
        while queue:
            node = queue.popleft()
            for parent in self._hyper_parents[node]:
                if parent not in seen:
                    seen.add(parent)
                    queue.append(parent)
        return frozenset(seen)

    def _require(self, concept: str) -> None:
        if concept not in self.nodes:
            raise MissingWordError(f"concept {concept!r} is not in the taxonomy")


def load_taxonomy(path, hypernym_relation: str = "isa") -> Taxonomy:
    """Read ``NODE``, ``EDGE``, and ``WORD`` tab-separated record lines."""
    nodes: dict[str, str] = {}
    edges: list[tuple[str, str, str]] = []
    word_map: dict[str, set] = {}
    with open(path, encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, 1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            record = parts[0]
            if record == "NODE" and len(parts) == 3:
                if parts[1] in nodes:
                    raise ParseError(str(path), line_number, f"duplicate node {parts[1]!r}")
                nodes[parts[1]] = parts[2]
            elif record == "EDGE" and len(parts) == 4:
                edges.append((parts[1], parts[2], parts[3]))
            elif record == "WORD" and len(parts) == 3:
                word_map.setdefault(parts[1], set()).add(parts[2])
            else:
                raise ParseError(str(path), line_number, f"unrecognized record {line!r}")
    if not nodes:
        raise ConfigurationError(f"{path}: taxonomy file has no nodes")
    return Taxonomy(
        nodes=nodes,
        edges=edges,
        word_map={w: frozenset(c) for w, c in word_map.items()},
        hypernym_relation=hypernym_relation,
    )


def shortest_path(taxonomy: Taxonomy, c1: str, c2: str) -> tuple[int, int]:
    """Length of the shortest path over all edge types, plus its relation changes.

    Among equal-length paths the one with the fewest changes of relation
    label between consecutive edges is chosen.
    """
    taxonomy._require(c1)
    taxonomy._require(c2)
    if c1 == c2:
        return 0, 0
    dist = {c1: 0}
    queue = deque([c1])
    while queue:
        node = queue.popleft()
        for neighbor, _ in taxonomy._neighbors[node]:
            if neighbor not in dist:
                dist[neighbor] = dist[node] + 1
                queue.append(neighbor)
    if c2 not in dist:
        raise NoPathError(f"no path between {c1!r} and {c2!r}")
    length = dist[c2]

    # minimal relation-change count along shortest paths, layer by layer
    layer: dict[str, dict[Optional[str], int]] = {c1: {None: 0}}
    for step in range(length):
        next_layer: dict[str, dict[Optional[str], int]] = {}
        for node in sorted(layer):
            if dist[node] != step:
                continue
            for neighbor, relation in taxonomy._neighbors[node]:
                if dist.get(neighbor) != step + 1:
                    continue
                for last_rel, changes in layer[node].items():
                    cost = changes + (1 if last_rel is not None and relation != last_rel else 0)
                    slot = next_layer.setdefault(neighbor, {})
                    if relation not in slot or cost < slot[relation]:
                        slot[relation] = cost
        layer = next_layer
    changes = min(layer[c2].values())
    return length, changes


def hirst_stonge(
    taxonomy: Taxonomy, c1: str, c2: str, c_const: float = 8.0, k: float = 1.0
) -> float:
    """Path-based relatedness discounted by length and relation turns, floored at 0."""
    try:
        length, changes = shortest_path(taxonomy, c1, c2)
    except NoPathError:
        return 0.0
    return max(0.0, c_const - length - k * changes)


def _hypernym_path_length(taxonomy: Taxonomy, c1: str, c2: str) -> int:
    if c1 == c2:
        return 0
    dist = {c1: 0}
    queue = deque([c1])
    while queue:
        node = queue.popleft()
        for neighbor in taxonomy._hyper_parents[node] + taxonomy._hyper_children[node]:
            if neighbor not in dist:
                dist[neighbor] = dist[node] + 1
                if neighbor == c2:
                    return dist[neighbor]
                queue.append(neighbor)
    raise NoPathError(f"no hypernymy path between {c1!r} and {c2!r}")


def leacock_chodorow(
    taxonomy: Taxonomy, c1: str, c2: str, log_base: float = 2.0
) -> float:
    """Negative log of hypernymy path length scaled by twice the taxonomy depth."""
    taxonomy._require(c1)
    taxonomy._require(c2)
    length = max(_hypernym_path_length(taxonomy, c1, c2), 1)
    depth = taxonomy.depth
    if depth < 1:
        raise ConfigurationError("taxonomy depth must be at least 1")
    return -math.log(length / (2.0 * depth)) / math.log(log_base)


@dataclass
class ICTable:
    prob: dict[str, float]
    ic: dict[str, float]
    log_base: float = 2.0

    def ic_of(self, concept: str) -> float:
        if concept not in self.ic:
            raise MissingICError(f"no information content for {concept!r}")
        return self.ic[concept]


def ic_from_counts(
    taxonomy: Taxonomy, word_frequencies: dict[str, int], log_base: float = 2.0
) -> ICTable:
    """Propagate word-occurrence credit up the hierarchy and take negative logs.

    Requires a single root.  Concepts left with zero credit are floored to
    half of one occurrence's share and flagged with a warning.
    """
    if len(taxonomy.roots) != 1:
        raise ConfigurationError("information content needs a single-root taxonomy")
    root = taxonomy.roots[0]
    credit: dict[str, float] = {node: 0.0 for node in taxonomy.nodes}
    total_mapped = 0
    for word in sorted(word_frequencies):
        freq = word_frequencies[word]
        if freq < 0:
            raise ValidationError(f"negative frequency for {word!r}")
        concepts = taxonomy.word_map.get(word)
        if not concepts or freq == 0:
            continue
        credited: set = set()
        for concept in concepts:
            credited.update(taxonomy.ancestors(concept))
        for node in credited:
            credit[node] += freq
        total_mapped += freq
    if total_mapped == 0 or credit[root] == 0:
        raise ConfigurationError("no word occurrences mapped into the taxonomy")

    root_credit = credit[root]
    floor = 1.0 / (2.0 * root_credit)
    prob: dict[str, float] = {}
    floored = []
    for node in taxonomy.nodes:
        if credit[node] > 0:
            prob[node] = credit[node] / root_credit
        else:
            prob[node] = floor
            floored.append(node)
    if floored:
        warnings.warn(
            f"concepts with zero corpus credit floored: {sorted(floored)}",
            ZeroCreditWarning,
            stacklevel=2,
        )
    log_norm = math.log(log_base)
    ic = {node: -math.log(p) / log_norm for node, p in prob.items()}
    ic[root] = 0.0
    return ICTable(prob=prob, ic=ic, log_base=log_base)


def lso(
    taxonomy: Taxonomy, c1: str, c2: str, ic: Optional[ICTable] = None
) -> str:
    """Lowest superordinate: the deepest common hypernym ancestor.

    Depth ties break by higher information content when a table is supplied,
    then by lexicographic id.
    """
    common = taxonomy.ancestors(c1) & taxonomy.ancestors(c2)
    if not common:
        raise NoPathError(f"{c1!r} and {c2!r} share no hypernym ancestor")

    def sort_key(node: str):
        ic_value = ic.ic.get(node, 0.0) if ic is not None else 0.0
        return (-taxonomy.node_depth(node), -ic_value, node)

    return sorted(common, key=sort_key)[0]


def resnik(taxonomy: Taxonomy, c1: str, c2: str, ic: ICTable) -> float:
    """Information content of the lowest superordinate."""
    return ic.ic_of(lso(taxonomy, c1, c2, ic))


def jiang_conrath(taxonomy: Taxonomy, c1: str, c2: str, ic: ICTable) -> float:
    """Summed information-content distance of both concepts from their subsumer."""
    shared = ic.ic_of(lso(taxonomy, c1, c2, ic))
    return ic.ic_of(c1) + ic.ic_of(c2) - 2.0 * shared


def lin_taxonomy(taxonomy: Taxonomy, c1: str, c2: str, ic: ICTable) -> float:
    """Shared information content over total information content, in [0, 1]."""
    ic1 = ic.ic_of(c1)
    ic2 = ic.ic_of(c2)
    if ic1 + ic2 == 0.0:
        return 1.0
    shared = ic.ic_of(lso(taxonomy, c1, c2, ic))
    return 2.0 * shared / (ic1 + ic2)


def save_ic_table(table: ICTable, path, extra_header: list[str] = ()) -> None:
    with open(path, "w", encoding="utf-8") as out:
        for line in extra_header:
            out.write(line + "\n")
        out.write(f"#ic\tlog_base={repr(table.log_base)}\n")
        for concept in sorted(table.prob):
            out.write(
                f"{concept}\t{repr(table.prob[concept])}\t{repr(table.ic[concept])}\n"
            )


def load_ic_table(path) -> ICTable:
    prob: dict[str, float] = {}
    ic: dict[str, float] = {}
    log_base = 2.0
    with open(path, encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, 1):
            line = line.rstrip("\n")
            if not line or line.startswith("#manifest"):
                continue
            if line.startswith("#ic"):
                for part in line.split("\t")[1:]:
                    key, _, value = part.partition("=")
                    if key == "log_base":
                        log_base = float(value)
                continue
            if line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise ParseError(str(path), line_number, "expected concept<TAB>prob<TAB>ic")
            prob[parts[0]] = float(parts[1])
            ic[parts[0]] = float(parts[2])
    if not prob:
        raise ValidationError(f"{path}: empty information-content table")
    return ICTable(prob=prob, ic=ic, log_base=log_base)


def load_word_frequencies(path) -> dict[str, int]:
    """Read a ``word<TAB>count`` frequency table."""
    freqs: dict[str, int] = {}
    with open(path, encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, 1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ParseError(str(path), line_number, "expected word<TAB>count")
            try:
                freqs[parts[0]] = freqs.get(parts[0], 0) + int(parts[1])
            except ValueError:
                raise ParseError(str(path), line_number, f"bad count {parts[1]!r}") from None
    return freqs
