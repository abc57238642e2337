"""Corpus ingestion: tokenization, windowed co-occurrence counting, dependency triples.

Tokens are maximal runs of letters and digits; everything else is stripped.
Boundary markers (the module constant ``BOUNDARY``) are interleaved into token
streams between documents or sentences, and windows never cross them.

Counting is streaming: tokens are consumed once, buffered in fixed-size numpy
chunks, and aggregated as sorted (target id, feature id) key arrays, so memory
scales with the observed vocabulary and pair inventory rather than corpus
length.  Counts over disjoint document shards can be merged additively with
:func:`merge_counts`.
"""

from __future__ import annotations

import re
from collections import Counter
from collections.abc import Iterable, Iterator
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Union

import numpy as np

from .errors import (
    ConfigurationError,
    CorpusDecodeError,
    MissingWordError,
    ParseError,
    UnknownRelationError,
    ValidationError,
)

#: Marker interleaved into token streams where a window must not reach across.
BOUNDARY = None

#: A profile/counts feature: a plain word or a (relation label, word) pair.
Feature = Union[str, tuple[str, str]]

_TOKEN_OR_STOP = re.compile(r"[^\W_]+|[.!?]", re.UNICODE)

_KEY_BITS = 32
_KEY_MASK = (1 << _KEY_BITS) - 1


class Boundaries(str, Enum):
    DOCUMENT = "document"
    SENTENCE = "sentence"
    NONE = "none"


@dataclass(frozen=True)
class CorpusConfig:
    """Settings shared by tokenization and window counting."""

    window_radius: int = 5
    lowercase: bool = True
    respect_boundaries: Boundaries = Boundaries.DOCUMENT
    min_token_frequency: int = 1

    def __post_init__(self):
        if isinstance(self.respect_boundaries, str) and not isinstance(
            self.respect_boundaries, Boundaries
        ):
            object.__setattr__(
                self, "respect_boundaries", Boundaries(self.respect_boundaries)
            )
        if self.window_radius < 1:
            raise ConfigurationError("window_radius must be >= 1")
        if self.min_token_frequency < 1:
            raise ConfigurationError("min_token_frequency must be >= 1")


def tokenize(text: str, config: CorpusConfig = CorpusConfig()) -> list:
    """Split one document into tokens, inserting sentence boundaries if configured.

    Returns a list of strings with ``BOUNDARY`` markers between sentences when
    ``respect_boundaries`` is ``sentence``.  A single document never starts or
    ends with a marker.
    """
    tokens: list = []
    sentence_mode = config.respect_boundaries is Boundaries.SENTENCE
    pending_break = False
    for match in _TOKEN_OR_STOP.finditer(text):
        piece = match.group(0)
        if piece in (".", "!", "?"):
            pending_break = True
            continue
        if pending_break and sentence_mode and tokens:
            tokens.append(BOUNDARY)
        pending_break = False
        tokens.append(piece.lower() if config.lowercase else piece)
    return tokens


def tokenize_documents(
    documents: Iterable[str], config: CorpusConfig = CorpusConfig()
) -> Iterator:
    """Tokenize a document sequence into one stream with boundaries between documents.

    Document breaks produce a marker in both ``document`` and ``sentence``
    modes; in ``none`` mode the stream has no markers at all.
    """
    keep_doc_breaks = config.respect_boundaries is not Boundaries.NONE
    emitted_any = False
    for doc in documents:
        doc_tokens = tokenize(doc, config)
        if not doc_tokens:
            continue
        if emitted_any and keep_doc_breaks:
            yield BOUNDARY
        yield from doc_tokens
        emitted_any = True


def read_documents(path, one_doc_per_line: bool = False) -> list[str]:
    """Read a UTF-8 corpus file as a list of documents.

    With ``one_doc_per_line`` each line is a document; otherwise the whole
    file is one document.  Invalid bytes raise :class:`CorpusDecodeError`
    carrying the byte offset.
    """
    with open(path, "rb") as handle:
        raw = handle.read()
    try:
        text = raw.decode("utf-8")
    except UnicodeDecodeError as exc:
        raise CorpusDecodeError(str(path), exc.start) from None
    if one_doc_per_line:
        return [line for line in text.split("\n") if line.strip()]
    return [text] if text.strip() else []


def inverse_relation(relation: str) -> str:
    """Label for the inverse direction of a dependency relation."""
    return relation + "^-1"


def render_feature(feature: Feature) -> str:
    if isinstance(feature, tuple):
        return f"{feature[0]}:{feature[1]}"
    return feature


def parse_feature(text: str) -> Feature:
    if ":" in text:
        relation, word = text.split(":", 1)
        return (relation, word)
    return text


class CooccurrenceCounts:
    """Sparse target-by-feature event counts with marginals.

    Rows are target words; columns are features (words for window counts,
    (relation, word) pairs for dependency triples).  Stored in compressed
    sparse row form over integer ids.
    """

    def __init__(
        self,
        targets: list[str],
        features: list[Feature],
        indptr: np.ndarray,
        indices: np.ndarray,
        data: np.ndarray,
        unigram_counts: dict[str, int],
        total_tokens: int,
        config: Optional[CorpusConfig] = None,
        feature_kind: str = "word",
    ):
        self.targets = targets
        self.features = features
        self._target_index = {w: i for i, w in enumerate(targets)}
        self._feature_index = {f: i for i, f in enumerate(features)}
        self._indptr = indptr
        self._indices = indices
        self._data = data
        self.unigram_counts = unigram_counts
        self.total_tokens = total_tokens
        self.config = config
        self.feature_kind = feature_kind
        self._target_totals = _bincount_int(
            np.repeat(np.arange(len(targets)), np.diff(indptr)), data, len(targets)
        )
        self._feature_totals = _bincount_int(indices, data, len(features))
        self.total_pairs = int(data.sum()) if data.size else 0

    @classmethod
    def from_pairs(
        cls,
        pair_counts: dict,
        unigram_counts: Optional[dict[str, int]] = None,
        total_tokens: int = 0,
        config: Optional[CorpusConfig] = None,
        feature_kind: str = "word",
    ) -> "CooccurrenceCounts":
        """Build counts from a {(target, feature): count} mapping."""
        targets = sorted({t for t, _ in pair_counts})
        features = sorted({f for _, f in pair_counts}, key=render_feature)
        tix = {w: i for i, w in enumerate(targets)}
        fix = {f: i for i, f in enumerate(features)}
        triples = sorted(
            ((tix[t], fix[f], int(n)) for (t, f), n in pair_counts.items() if n),
        )
        rows = np.array([r for r, _, _ in triples], dtype=np.int64)
        cols = np.array([c for _, c, _ in triples], dtype=np.int64)
        data = np.array([n for _, _, n in triples], dtype=np.int64)
        indptr = _indptr_from_sorted_rows(rows, len(targets))
        return cls(
            targets,
            features,
            indptr,
            cols,
            data,
            dict(unigram_counts or {}),
            total_tokens,
            config,
            feature_kind,
        )

    def has_target(self, word: str) -> bool:
        return word in self._target_index

    def pair_count(self, target: str, feature: Feature) -> int:
        row = self._target_index.get(target)
        col = self._feature_index.get(feature)
        if row is None or col is None:
            return 0
        lo, hi = self._indptr[row], self._indptr[row + 1]
        pos = np.searchsorted(self._indices[lo:hi], col)
        if pos < hi - lo and self._indices[lo + pos] == col:
            return int(self._data[lo + pos])
        return 0

    def target_total(self, target: str) -> int:
        row = self._target_index.get(target)
        if row is None:
            raise MissingWordError(f"no counts row for {target!r}")
        return int(self._target_totals[row])

    def feature_total(self, feature: Feature) -> int:
        col = self._feature_index.get(feature)
        return int(self._feature_totals[col]) if col is not None else 0

    def row_items(self, target: str) -> list[tuple[Feature, int]]:
        row = self._target_index.get(target)
        if row is None:
            raise MissingWordError(f"no counts row for {target!r}")
        lo, hi = int(self._indptr[row]), int(self._indptr[row + 1])
        return [
            (self.features[int(c)], int(n))
            for c, n in zip(self._indices[lo:hi], self._data[lo:hi])
        ]

    def items(self) -> Iterator[tuple[str, Feature, int]]:
        for row, target in enumerate(self.targets):
            lo, hi = int(self._indptr[row]), int(self._indptr[row + 1])
            for c, n in zip(self._indices[lo:hi], self._data[lo:hi]):
                yield target, self.features[int(c)], int(n)

    def unigram_count(self, word: str) -> int:
        return self.unigram_counts.get(word, 0)

    def nnz(self) -> int:
        return int(self._data.size)


def _bincount_int(ids: np.ndarray, weights: np.ndarray, size: int) -> np.ndarray:
    if ids.size == 0:
        return np.zeros(size, dtype=np.int64)
    return np.bincount(ids, weights=weights, minlength=size).astype(np.int64)


def _indptr_from_sorted_rows(rows: np.ndarray, n_rows: int) -> np.ndarray:
    return np.searchsorted(rows, np.arange(n_rows + 1), side="left").astype(np.int64)


def _merge_sorted_keyed(
    keys_a: np.ndarray, counts_a: np.ndarray, keys_b: np.ndarray, counts_b: np.ndarray
) -> tuple[np.ndarray, np.ndarray]:
    if keys_a.size == 0:
        return keys_b, counts_b
    if keys_b.size == 0:
        return keys_a, counts_a
    keys = np.concatenate([keys_a, keys_b])
    counts = np.concatenate([counts_a, counts_b])
    order = np.argsort(keys, kind="mergesort")
    keys = keys[order]
    counts = counts[order]
    fresh = np.empty(keys.size, dtype=bool)
    fresh[0] = True
    np.not_equal(keys[1:], keys[:-1], out=fresh[1:])
    starts = np.flatnonzero(fresh)
    return keys[starts], np.add.reduceat(counts, starts)


def count_cooccurrences(
    tokens: Iterable,
    config: CorpusConfig = CorpusConfig(),
    chunk_size: int = 1 << 20,
) -> CooccurrenceCounts:
    """Count windowed co-occurrence events over a token stream.

    Every token occurrence pairs once with each neighbor within
    ``window_radius`` positions on either side, without crossing a boundary
    marker.  A neighbor identical to the target still counts, and a word
    appearing twice inside one window contributes two events.
    """
    radius = config.window_radius
    chunk = max(chunk_size, 2 * radius + 2)
    index: dict[str, int] = {}
    words: list[str] = []
    ids_buf = np.empty(chunk, dtype=np.int64)
    seg_buf = np.empty(chunk, dtype=np.int64)

    agg_keys = np.empty(0, dtype=np.int64)
    agg_counts = np.empty(0, dtype=np.int64)
    unigrams = np.empty(0, dtype=np.int64)
    total_tokens = 0

    def flush(pos: int, prefix: int) -> int:
        nonlocal agg_keys, agg_counts, unigrams
        new_ids = ids_buf[prefix:pos]
        if new_ids.size:
            if unigrams.size < len(words):
                unigrams = np.concatenate(
                    [unigrams, np.zeros(len(words) - unigrams.size, dtype=np.int64)]
                )
            unigrams += np.bincount(new_ids, minlength=unigrams.size)
        pieces = []
        for offset in range(1, radius + 1):
            lo = max(prefix - offset, 0)
            if pos - offset <= lo:
                continue
            left = ids_buf[lo : pos - offset]
            right = ids_buf[lo + offset : pos]
            same = seg_buf[lo : pos - offset] == seg_buf[lo + offset : pos]
            left = left[same]
            right = right[same]
            if left.size:
                pieces.append((left << _KEY_BITS) | right)
                pieces.append((right << _KEY_BITS) | left)
        if pieces:
            chunk_keys = np.concatenate(pieces)
            uniq, cnt = np.unique(chunk_keys, return_counts=True)
            agg_keys, agg_counts = _merge_sorted_keyed(
                agg_keys, agg_counts, uniq, cnt.astype(np.int64)
            )
        # carry the last `radius` positions so cross-chunk windows are counted once
        keep = min(radius, pos)
        ids_buf[:keep] = ids_buf[pos - keep : pos]
        seg_buf[:keep] = seg_buf[pos - keep : pos]
        return keep

    pos = 0
    prefix = 0
    segment = 0
    for token in tokens:
        if token is BOUNDARY:
            segment += 1
            continue
        tid = index.get(token)
        if tid is None:
            tid = len(words)
            index[token] = tid
            words.append(token)
        ids_buf[pos] = tid
        seg_buf[pos] = segment
        pos += 1
        total_tokens += 1
        if pos == chunk:
            prefix = flush(pos, prefix)
            pos = prefix
    flush(pos, prefix)

    if unigrams.size < len(words):
        unigrams = np.concatenate(
            [unigrams, np.zeros(len(words) - unigrams.size, dtype=np.int64)]
        )
    rows = agg_keys >> _KEY_BITS
    cols = agg_keys & _KEY_MASK
    indptr = _indptr_from_sorted_rows(rows, len(words))
    unigram_counts = {w: int(unigrams[i]) for i, w in enumerate(words)}
    return CooccurrenceCounts(
        targets=words,
        features=list(words),
        indptr=indptr,
        indices=cols,
        data=agg_counts,
        unigram_counts=unigram_counts,
        total_tokens=total_tokens,
        config=config,
        feature_kind="word",
    )


def ingest_triples(
    lines: Iterable[str],
    allowed_relations: Optional[set[str]] = None,
    source: str = "<triples>",
) -> CooccurrenceCounts:
    """Build relation-tagged counts from ``head<TAB>relation<TAB>dependent`` records.

    Each record is indexed in both directions: the head gains a
    ``(relation, dependent)`` feature and the dependent gains an
    ``(inverse relation, head)`` feature, so either word's profile can be
    built from the same file.
    """
    pair_counts: Counter = Counter()
    unigram: Counter = Counter()
    records = 0
    for line_number, line in enumerate(lines, 1):
        line = line.rstrip("\n")
        if not line.strip() or line.startswith("#"):
            continue
        parts = line.split("\t")
        if len(parts) != 3:
            raise ParseError(source, line_number, "expected head<TAB>relation<TAB>dependent")
        head, relation, dependent = parts
        if not head or not relation or not dependent:
            raise ParseError(source, line_number, "empty field in triple")
        for field in (head, relation, dependent):
            if ":" in field:
                raise ParseError(source, line_number, f"field {field!r} contains ':'")
        if allowed_relations is not None and relation not in allowed_relations:
            raise UnknownRelationError(relation, source, line_number)
        pair_counts[(head, (relation, dependent))] += 1
        pair_counts[(dependent, (inverse_relation(relation), head))] += 1
        unigram[head] += 1
        unigram[dependent] += 1
        records += 1
    return CooccurrenceCounts.from_pairs(
        dict(pair_counts),
        unigram_counts=dict(unigram),
        total_tokens=2 * records,
        config=None,
        feature_kind="relation",
    )


def merge_counts(parts: list[CooccurrenceCounts]) -> CooccurrenceCounts:
    """Additively merge shard counts produced with one configuration."""
    if not parts:
        raise ConfigurationError("nothing to merge")
    configs = [p.config for p in parts if p.config is not None]
    for cfg in configs[1:]:
        if cfg != configs[0]:
            raise ConfigurationError("cannot merge counts built with different configs")
    kinds = {p.feature_kind for p in parts}
    if len(kinds) != 1:
        raise ConfigurationError("cannot merge word-feature and relation-feature counts")

    targets: list[str] = []
    tix: dict[str, int] = {}
    features: list[Feature] = []
    fix: dict[Feature, int] = {}
    for part in parts:
        for w in part.targets:
            if w not in tix:
                tix[w] = len(targets)
                targets.append(w)
        for f in part.features:
            if f not in fix:
                fix[f] = len(features)
                features.append(f)

    agg_keys = np.empty(0, dtype=np.int64)
    agg_counts = np.empty(0, dtype=np.int64)
    for part in parts:
        if not part.nnz():
            continue
        row_map = np.array([tix[w] for w in part.targets], dtype=np.int64)
        col_map = np.array([fix[f] for f in part.features], dtype=np.int64)
        rows = row_map[np.repeat(np.arange(len(part.targets)), np.diff(part._indptr))]
        cols = col_map[part._indices]
        keys = (rows << _KEY_BITS) | cols
        order = np.argsort(keys, kind="mergesort")
        agg_keys, agg_counts = _merge_sorted_keyed(
            agg_keys, agg_counts, keys[order], part._data[order]
        )

    unigram: Counter = Counter()
    for part in parts:
        unigram.update(part.unigram_counts)
    rows = agg_keys >> _KEY_BITS
    cols = agg_keys & _KEY_MASK
    return CooccurrenceCounts(
        targets=targets,
        features=features,
        indptr=_indptr_from_sorted_rows(rows, len(targets)),
        indices=cols,
        data=agg_counts,
        unigram_counts=dict(unigram),
        total_tokens=sum(p.total_tokens for p in parts),
        config=configs[0] if configs else None,
        feature_kind=parts[0].feature_kind,
    )


def counts_equal(a: CooccurrenceCounts, b: CooccurrenceCounts) -> bool:
    """Content equality regardless of internal id assignment."""
    if (
        sorted(a.targets) != sorted(b.targets)
        or sorted(map(render_feature, a.features)) != sorted(map(render_feature, b.features))
        or a.total_tokens != b.total_tokens
        or a.total_pairs != b.total_pairs
        or a.unigram_counts != b.unigram_counts
    ):
        return False

    def canonical(c: CooccurrenceCounts) -> tuple[np.ndarray, np.ndarray]:
        t_rank = {w: i for i, w in enumerate(sorted(c.targets))}
        f_rank = {
            f: i for i, f in enumerate(sorted(c.features, key=render_feature))
        }
        row_map = np.array([t_rank[w] for w in c.targets], dtype=np.int64)
        col_map = np.array([f_rank[f] for f in c.features], dtype=np.int64)
        rows = row_map[np.repeat(np.arange(len(c.targets)), np.diff(c._indptr))]
        cols = col_map[c._indices]
        keys = (rows << _KEY_BITS) | cols
        order = np.argsort(keys, kind="mergesort")
        return keys[order], c._data[order]

    ka, va = canonical(a)
    kb, vb = canonical(b)
    return ka.size == kb.size and bool(np.array_equal(ka, kb) and np.array_equal(va, vb))


def save_counts(counts: CooccurrenceCounts, path, extra_header: list[str] = ()) -> None:
    """Write counts as a sorted TSV with a totals header and unigram lines."""
    fields = [
        f"total_pairs={counts.total_pairs}",
        f"total_tokens={counts.total_tokens}",
        f"feature_kind={counts.feature_kind}",
    ]
    if counts.config is not None:
        cfg = counts.config
        fields += [
            f"window={cfg.window_radius}",
            f"boundaries={cfg.respect_boundaries.value}",
            f"lowercase={str(cfg.lowercase).lower()}",
            f"min_freq={cfg.min_token_frequency}",
        ]
    with open(path, "w", encoding="utf-8") as out:
        for line in extra_header:
            out.write(line + "\n")
        out.write("#counts\t" + "\t".join(fields) + "\n")
        for word in sorted(counts.unigram_counts):
            out.write(f"#unigram\t{word}\t{counts.unigram_counts[word]}\n")
        lines = [
            (target, render_feature(feature), n)
            for target, feature, n in counts.items()
        ]
        lines.sort()
        for target, feature, n in lines:
            out.write(f"{target}\t{feature}\t{n}\n")


def load_counts(path) -> CooccurrenceCounts:
    """Read counts written by :func:`save_counts`."""
    pair_counts: dict = {}
    unigram: dict[str, int] = {}
    total_tokens = 0
    feature_kind = "word"
    config = None
    header_seen = False
    with open(path, encoding="utf-8") as handle:
        for line_number, line in enumerate(handle, 1):
            line = line.rstrip("\n")
            if not line:
                continue
            if line.startswith("#manifest"):
                continue
            if line.startswith("#unigram\t"):
                parts = line.split("\t")
                if len(parts) != 3:
                    raise ParseError(str(path), line_number, "malformed unigram line")
                unigram[parts[1]] = int(parts[2])
                continue
            if line.startswith("#counts"):
                header_seen = True
                kv = {}
                for field in line.split("\t")[1:]:
                    key, _, value = field.partition("=")
                    kv[key] = value
                total_tokens = int(kv.get("total_tokens", 0))
                feature_kind = kv.get("feature_kind", "word")
                if "window" in kv:
                    config = CorpusConfig(
                        window_radius=int(kv["window"]),
                        lowercase=kv.get("lowercase", "true") == "true",
                        respect_boundaries=Boundaries(kv.get("boundaries", "document")),
                        min_token_frequency=int(kv.get("min_freq", 1)),
                    )
                continue
            if line.startswith("#"):
                continue
            parts = line.split("\t")
            if len(parts) != 3:
                raise ParseError(str(path), line_number, "expected target<TAB>feature<TAB>count")
            try:
                n = int(parts[2])
            except ValueError:
                raise ParseError(str(path), line_number, f"bad count {parts[2]!r}") from None
            feature = parse_feature(parts[1]) if feature_kind == "relation" else parts[1]
            pair_counts[(parts[0], feature)] = n
    if not header_seen:
        raise ValidationError(f"{path}: missing #counts header")
    counts = CooccurrenceCounts.from_pairs(
        pair_counts,
        unigram_counts=unigram,
        total_tokens=total_tokens,
        config=config,
        feature_kind=feature_kind,
    )
    return counts


def iter_occurrence_contexts(
    tokens: Iterable, config: CorpusConfig = CorpusConfig()
) -> Iterator[tuple[str, list[str]]]:
    """Yield (word occurrence, window context words) pairs from a token stream.

    Used by the disambiguating second pass over a corpus; the windowing is the
    same as in :func:`count_cooccurrences`.
    """
    radius = config.window_radius
    segment: list[str] = []

    def emit(seg: list[str]) -> Iterator[tuple[str, list[str]]]:
        for i, word in enumerate(seg):
            lo = max(i - radius, 0)
            context = seg[lo:i] + seg[i + 1 : i + radius + 1]
            yield word, context

    for token in tokens:
        if token is BOUNDARY:
            if segment:
                yield from emit(segment)
            segment = []
        else:
            segment.append(token)
    if segment:
        yield from emit(segment)
