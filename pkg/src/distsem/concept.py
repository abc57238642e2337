"""Concept-level distance from a word-by-category co-occurrence matrix.

Thesaurus categories act as very coarse word senses.  A base matrix counts,
for every word, its windowed co-occurrence with any word listed under each
category (an ambiguous neighbor credits all of its categories).  A second,
disambiguating pass re-attributes every co-occurrence event to the single
best-supported category, yielding the bootstrapped matrix.  Columns of either
matrix give distributional profiles of concepts, compared with the ordinary
word-level measures.

The cross-lingual variant replaces category membership with candidate senses
reached through a bilingual lexicon: source-language words are profiled
against target-language categories without any parallel or sense-annotated
data.
"""

from __future__ import annotations

from collections.abc import Iterable, Mapping
from dataclasses import dataclass, field
from typing import Optional, Union

import numpy as np

from .assoc import ContingencyTable, SoAKind, strength
from .corpus import CooccurrenceCounts, CorpusConfig, iter_occurrence_contexts
from .errors import (
    ConfigurationError,
    EmptyProfileError,
    MissingWordError,
    ParseError,
    StalenessError,
    UndefinedAssociationError,
    ValidationError,
)
from .measures import MeasureConfig, MeasureId, DEFAULT_CONFIG, required_soa, score
from .profiles import DistributionalProfile


@dataclass(frozen=True)
class Category:
    label: str
    words: frozenset


@dataclass
class Thesaurus:
    """Coarse concept inventory: categories of near-synonymous words."""

    categories: dict[str, Category]
    index: dict[str, frozenset] = field(init=False)

    def __post_init__(self):
        if not self.categories:
            raise ConfigurationError("thesaurus has no categories")
        index: dict[str, set] = {}
        for cat_id, category in self.categories.items():
            if not category.words:
                raise ValidationError(f"category {cat_id!r} has an empty word set")
            for word in category.words:
                index.setdefault(word, set()).add(cat_id)
        self.index = {w: frozenset(cats) for w, cats in index.items()}

    @property
    def category_count(self) -> int:
        return len(self.categories)

    def senses(self, word: str) -> frozenset:
        return self.index.get(word, frozenset())


def load_thesaurus(path, lowercase: bool = True) -> Thesaurus:
    """Read ``category_id<TAB>label<TAB>word word ...`` lines."""
    categories: dict[str, Category] = {}
    with open(path, encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, 1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise ParseError(str(path), line_number, "expected id<TAB>label<TAB>words")
            cat_id, label, words = parts
            if cat_id in categories:
                raise ParseError(str(path), line_number, f"duplicate category {cat_id!r}")
            tokens = words.split()
            if not tokens:
                raise ParseError(str(path), line_number, f"category {cat_id!r} has no words")
            if lowercase:
                tokens = [w.lower() for w in tokens]
            categories[cat_id] = Category(label=label, words=frozenset(tokens))
    if not categories:
        raise ConfigurationError(f"{path}: thesaurus file is empty")
    return Thesaurus(categories)


@dataclass
class BilingualLexicon:
    """Source-language word to the set of its target-language translations."""

    translations: dict[str, frozenset]

    def __post_init__(self):
        if not self.translations:
            raise ConfigurationError("bilingual lexicon is empty")
        for word, targets in self.translations.items():
            if not targets:
                raise ValidationError(f"lexicon entry {word!r} has no translations")


def load_lexicon(path, lowercase: bool = True) -> BilingualLexicon:
    """Read ``source_word<TAB>target_word`` lines, merging repeated sources."""
    table: dict[str, set] = {}
    with open(path, encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, 1):
            line = line.rstrip("\n")
            if not line.strip() or line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 2:
                raise ParseError(str(path), line_number, "expected source<TAB>target")
            src, tgt = parts
            if lowercase:
                src, tgt = src.lower(), tgt.lower()
            table.setdefault(src, set()).add(tgt)
    if not table:
        raise ConfigurationError(f"{path}: lexicon file is empty")
    return BilingualLexicon({w: frozenset(t) for w, t in table.items()})


class WCCM:
    """Sparse word-by-category co-occurrence matrix."""

    def __init__(
        self,
        cells: dict[str, dict[str, float]],
        kind: str = "base",
        language_mode: str = "monolingual",
        config: Optional[CorpusConfig] = None,
        source_fingerprint: Optional[str] = None,
    ):
        if kind not in ("base", "bootstrapped"):
            raise ValidationError(f"unknown matrix kind {kind!r}")
        if language_mode not in ("monolingual", "crosslingual"):
            raise ValidationError(f"unknown language mode {language_mode!r}")
        self.cells = {w: dict(row) for w, row in cells.items() if row}
        self.kind = kind
        self.language_mode = language_mode
        self.config = config
        self.source_fingerprint = source_fingerprint
        self.row_totals = {w: sum(row.values()) for w, row in self.cells.items()}
        col_totals: dict[str, float] = {}
        columns: dict[str, dict[str, float]] = {}
        for word, row in self.cells.items():
            for cat, value in row.items():
                col_totals[cat] = col_totals.get(cat, 0.0) + value
                columns.setdefault(cat, {})[word] = value
        self.col_totals = col_totals
        self._columns = columns
        self.grand_total = sum(self.row_totals.values())

    def cell(self, word: str, category: str) -> float:
        return self.cells.get(word, {}).get(category, 0.0)

    def has_word(self, word: str) -> bool:
        return word in self.cells

    def column(self, category: str) -> dict[str, float]:
        return dict(self._columns.get(category, {}))

    def words(self) -> list[str]:
        return sorted(self.cells)

    def categories(self) -> list[str]:
        return sorted(self._columns)


def build_base_wccm(
    counts: CooccurrenceCounts,
    thesaurus: Thesaurus,
    language_mode: str = "monolingual",
    sense_index: Optional[Mapping[str, frozenset]] = None,
) -> WCCM:
    """First-pass matrix: each neighbor credits every category it is listed under."""
    if counts.feature_kind != "word":
        raise ConfigurationError("concept matrices need relation-free word counts")
    index = thesaurus.index if sense_index is None else sense_index
    if not index:
        raise ConfigurationError("no word has any candidate category")
    cells: dict[str, dict[str, float]] = {}
    for target, feature, n in counts.items():
        senses = index.get(feature)
        if not senses:
            continue
        row = cells.setdefault(target, {})
        for cat in senses:
            row[cat] = row.get(cat, 0.0) + n
    return WCCM(
        cells,
        kind="base",
        language_mode=language_mode,
        config=counts.config,
    )


def wccm_contingency(wccm: WCCM, word: str, category: str) -> ContingencyTable:
    """Collapse the matrix into a 2x2 table for one (word, category) cell."""
    if not wccm.has_word(word):
        raise MissingWordError(f"no matrix row for {word!r}")
    n_wc = wccm.cell(word, category)
    n_w_nc = wccm.row_totals[word] - n_wc
    n_nw_c = wccm.col_totals.get(category, 0.0) - n_wc
    n_nw_nc = wccm.grand_total - n_wc - n_w_nc - n_nw_c
    return ContingencyTable(n_wc, n_w_nc, n_nw_c, n_nw_nc)


def candidate_senses(
    word: str, lexicon: BilingualLexicon, thesaurus: Thesaurus
) -> frozenset:
    """Target-language categories reachable from a source word via its translations."""
    translations = lexicon.translations.get(word)
    if translations is None:
        raise MissingWordError(f"{word!r} is not in the bilingual lexicon")
    senses: set = set()
    for translation in translations:
        senses.update(thesaurus.senses(translation))
    return frozenset(senses)


def crosslingual_sense_index(
    lexicon: BilingualLexicon, thesaurus: Thesaurus
) -> dict[str, frozenset]:
    """Candidate-sense sets for every lexicon word with at least one listed translation."""
    index: dict[str, frozenset] = {}
    for word in lexicon.translations:
        senses = candidate_senses(word, lexicon, thesaurus)
        if senses:
            index[word] = senses
    return index


def build_crosslingual_wccm(
    counts: CooccurrenceCounts,
    lexicon: BilingualLexicon,
    thesaurus: Thesaurus,
) -> WCCM:
    """Base matrix over source-language words and target-language categories."""
    index = crosslingual_sense_index(lexicon, thesaurus)
    if not index:
        raise ConfigurationError("no lexicon word reaches any thesaurus category")
    return build_base_wccm(
        counts, thesaurus, language_mode="crosslingual", sense_index=index
    )


def bootstrap_wccm(
    tokens: Iterable,
    base: WCCM,
    senses: Union[Thesaurus, Mapping[str, frozenset]],
    config: CorpusConfig = CorpusConfig(),
    *,
    log_base: float = 2.0,
    iterations: int = 1,
) -> WCCM:
    """Second corpus pass: attribute each co-occurrence event to one category.

    For every occurrence of a word with several candidate categories, the
    category scoring highest by summed context association (positive-only,
    from the reference matrix) wins; ties go to the smallest category id.
    Monosemous occurrences attribute directly.  Words without candidate
    categories contribute no events.
    """
    if iterations < 1:
        raise ConfigurationError("iterations must be >= 1")
    if base.config is not None:
        # only the fields that shape counting matter for staleness
        ours = (config.window_radius, config.lowercase, config.respect_boundaries)
        theirs = (
            base.config.window_radius,
            base.config.lowercase,
            base.config.respect_boundaries,
        )
        if ours != theirs:
            raise StalenessError(
                "base matrix was built with a different corpus configuration"
            )
    index = senses.index if isinstance(senses, Thesaurus) else senses
    if not index:
        raise ConfigurationError("no word has any candidate category")
    if iterations > 1 and not isinstance(tokens, (list, tuple)):
        tokens = list(tokens)

    reference = base
    for _ in range(iterations):
        cells: dict[str, dict[str, float]] = {}
        assoc_cache: dict[tuple[str, str], float] = {}

        def positive_assoc(word: str, category: str) -> float:
            key = (word, category)
            cached = assoc_cache.get(key)
            if cached is None:
                if not reference.has_word(word):
                    cached = 0.0
                else:
                    try:
                        value = strength(
                            wccm_contingency(reference, word, category),
                            SoAKind.PMI,
                            log_base,
                        )
                    except UndefinedAssociationError:
                        value = 0.0
                    cached = max(value, 0.0)
                assoc_cache[key] = cached
            return cached

        for occurrence, context in iter_occurrence_contexts(tokens, config):
            cats = index.get(occurrence)
            if not cats or not context:
                continue
            if len(cats) == 1:
                chosen = next(iter(cats))
            else:
                chosen = None
                best = -1.0
                for cat in sorted(cats):
                    total = 0.0
                    for ctx_word in context:
                        total += positive_assoc(ctx_word, cat)
                    if total > best:
                        best = total
                        chosen = cat
            for ctx_word in context:
                row = cells.setdefault(ctx_word, {})
                row[chosen] = row.get(chosen, 0.0) + 1.0
        reference = WCCM(
            cells,
            kind="bootstrapped",
            language_mode=base.language_mode,
            config=base.config if base.config is not None else config,
            source_fingerprint=base.source_fingerprint,
        )
    return reference


def concept_profile(
    wccm: WCCM, category: str, kind: SoAKind, log_base: float = 2.0
) -> DistributionalProfile:
    """Distributional profile of one concept over its co-occurring words."""
    kind = SoAKind(kind)
    column = wccm.column(category)
    if not column:
        raise EmptyProfileError(f"category {category!r} has an empty column")
    entries: dict = {}
    if kind is SoAKind.CP:
        total = wccm.col_totals[category]
        for word in column:
            entries[word] = column[word] / total
    else:
        for word in column:
            value = strength(wccm_contingency(wccm, word, category), kind, log_base)
            if value != 0.0:
                entries[word] = value
    if not entries:
        raise EmptyProfileError(f"category {category!r} yields an empty profile")
    return DistributionalProfile(target=category, soa=kind, entries=entries)


def concept_distance(
    wccm: WCCM,
    c1: str,
    c2: str,
    measure: MeasureId,
    config: MeasureConfig = DEFAULT_CONFIG,
) -> float:
    """Any catalogued measure applied to the two concept profiles."""
    kind = required_soa(measure, config)
    dp1 = concept_profile(wccm, c1, kind, config.log_base)
    dp2 = concept_profile(wccm, c2, kind, config.log_base)
    return score(measure, dp1, dp2, config)


def concept_distance_matrix(
    wccm: WCCM,
    measure: MeasureId,
    config: MeasureConfig = DEFAULT_CONFIG,
) -> tuple[list[str], np.ndarray]:
    """All pairwise concept scores; storage is category-by-category only."""
    cats = wccm.categories()
    kind = required_soa(measure, config)
    profiles = [concept_profile(wccm, c, kind, config.log_base) for c in cats]
    matrix = np.zeros((len(cats), len(cats)), dtype=np.float64)
    for i, dp1 in enumerate(profiles):
        for j, dp2 in enumerate(profiles):
            matrix[i, j] = score(measure, dp1, dp2, config)
    return cats, matrix


def save_wccm(wccm: WCCM, path, extra_header: list[str] = ()) -> None:
    """Write ``word<TAB>category<TAB>count`` lines under a kind header."""
    fields = [
        f"kind={wccm.kind}",
        f"language_mode={wccm.language_mode}",
    ]
    if wccm.config is not None:
        fields += [
            f"window={wccm.config.window_radius}",
            f"boundaries={wccm.config.respect_boundaries.value}",
            f"lowercase={str(wccm.config.lowercase).lower()}",
        ]
    if wccm.source_fingerprint:
        fields.append(f"source={wccm.source_fingerprint}")
    with open(path, "w", encoding="utf-8") as out:
        for line in extra_header:
            out.write(line + "\n")
        out.write("#wccm\t" + "\t".join(fields) + "\n")
        for word in sorted(wccm.cells):
            row = wccm.cells[word]
            for cat in sorted(row):
                out.write(f"{word}\t{cat}\t{repr(row[cat])}\n")


def load_wccm(path) -> WCCM:
    cells: dict[str, dict[str, float]] = {}
    kind = "base"
    language_mode = "monolingual"
    config = None
    fingerprint = None
    header_seen = False
    with open(path, encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, 1):
            line = line.rstrip("\n")
            if not line or line.startswith("#manifest"):
                continue
            if line.startswith("#wccm"):
                header_seen = True
                kv = {}
                for part in line.split("\t")[1:]:
                    key, _, value = part.partition("=")
                    kv[key] = value
                kind = kv.get("kind", "base")
                language_mode = kv.get("language_mode", "monolingual")
                fingerprint = kv.get("source")
                if "window" in kv:
                    config = CorpusConfig(
                        window_radius=int(kv["window"]),
                        lowercase=kv.get("lowercase", "true") == "true",
                        respect_boundaries=kv.get("boundaries", "document"),
                    )
                continue
            if line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise ParseError(str(path), line_number, "expected word<TAB>category<TAB>count")
            try:
                value = float(parts[2])
            except ValueError:
                raise ParseError(str(path), line_number, f"bad count {parts[2]!r}") from None
            if value < 0:
                raise ValidationError(f"{path}:{line_number}: negative cell")
            cells.setdefault(parts[0], {})[parts[1]] = value
    if not header_seen:
        raise ValidationError(f"{path}: missing #wccm header")
    return WCCM(
        cells,
        kind=kind,
        language_mode=language_mode,
        config=config,
        source_fingerprint=fingerprint,
    )
