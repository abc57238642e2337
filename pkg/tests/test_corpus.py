import random

import numpy as np
import pytest

from distsem import (
    BOUNDARY,
    Boundaries,
    CooccurrenceCounts,
    CorpusConfig,
    count_cooccurrences,
    counts_equal,
    ingest_triples,
    inverse_relation,
    load_counts,
    merge_counts,
    read_documents,
    save_counts,
    tokenize,
    tokenize_documents,
)
from distsem.errors import (
    ConfigurationError,
    CorpusDecodeError,
    ParseError,
    UnknownRelationError,
)

from oracles import triple_pairs, window_pairs


def pairs_of(counts):
    return {(t, f): n for t, f, n in counts.items()}


class TestTokenize:
    def test_simple_sentence(self):
        assert tokenize("The cat sat.") == ["the", "cat", "sat"]

    def test_empty(self):
        assert tokenize("") == []

    def test_character_classes(self):
        # oracle: scan "A-B c" for letter/digit runs, then fold case
        assert tokenize("A-B c") == ["a", "b", "c"]

    def test_case_preserved_when_configured(self):
        cfg = CorpusConfig(lowercase=False)
        assert tokenize("The cat", cfg) == ["The", "cat"]

    def test_digits_are_tokens(self):
        assert tokenize("room 101!") == ["room", "101"]

    def test_sentence_boundaries(self):
        cfg = CorpusConfig(respect_boundaries=Boundaries.SENTENCE)
        assert tokenize("a b. c d", cfg) == ["a", "b", BOUNDARY, "c", "d"]

    def test_no_leading_or_trailing_markers(self):
        cfg = CorpusConfig(respect_boundaries=Boundaries.SENTENCE)
        assert tokenize("... a b...", cfg) == ["a", "b"]

    def test_document_stream_markers(self):
        cfg = CorpusConfig()
        stream = list(tokenize_documents(["a b", "c"], cfg))
        assert stream == ["a", "b", BOUNDARY, "c"]

    def test_none_mode_has_no_markers(self):
        cfg = CorpusConfig(respect_boundaries=Boundaries.NONE)
        stream = list(tokenize_documents(["a b.", "c"], cfg))
        assert stream == ["a", "b", "c"]


class TestReadDocuments:
    def test_one_doc_per_line(self, toy_corpus_path):
        docs = read_documents(toy_corpus_path, one_doc_per_line=True)
        assert len(docs) == 12

    def test_whole_file(self, toy_corpus_path):
        docs = read_documents(toy_corpus_path)
        assert len(docs) == 1

    def test_decode_error_offset(self, tmp_path):
        bad = tmp_path / "bad.txt"
        bad.write_bytes(b"good text \xff\xfe more")
        with pytest.raises(CorpusDecodeError) as err:
            read_documents(bad)
        assert err.value.byte_offset == 10


class TestCounting:
    def test_two_token_corpus(self):
        cfg = CorpusConfig(window_radius=1)
        counts = count_cooccurrences(["a", "b"], cfg)
        assert pairs_of(counts) == {("a", "b"): 1, ("b", "a"): 1}
        assert counts.total_pairs == 2
        assert counts.total_tokens == 2

    def test_single_token(self):
        counts = count_cooccurrences(["a"], CorpusConfig(window_radius=1))
        assert counts.total_pairs == 0
        assert counts.total_tokens == 1

    def test_empty_stream(self):
        counts = count_cooccurrences([], CorpusConfig())
        assert counts.total_pairs == 0
        assert counts.total_tokens == 0
        assert counts.targets == []

    def test_self_cooccurrence_counted(self):
        counts = count_cooccurrences(["a", "a"], CorpusConfig(window_radius=1))
        assert pairs_of(counts) == {("a", "a"): 2}

    def test_repeated_neighbor_counts_twice(self):
        counts = count_cooccurrences(["b", "a", "b"], CorpusConfig(window_radius=1))
        assert counts.pair_count("a", "b") == 2

    def test_boundary_blocks_window(self):
        cfg = CorpusConfig(window_radius=2)
        counts = count_cooccurrences(["a", BOUNDARY, "b"], cfg)
        assert counts.total_pairs == 0

    def test_toy_corpus_matches_brute_force(self, toy_counts, toy_pairs):
        assert pairs_of(toy_counts) == dict(toy_pairs)
        assert toy_counts.total_pairs == sum(toy_pairs.values())

    @pytest.mark.parametrize("radius", [1, 2, 5])
    @pytest.mark.parametrize("mode", ["document", "sentence", "none"])
    def test_all_modes_match_brute_force(self, toy_documents, radius, mode):
        import re

        cfg = CorpusConfig(window_radius=radius, respect_boundaries=mode)
        counts = count_cooccurrences(tokenize_documents(toy_documents, cfg), cfg)
        if mode == "none":
            segments = [
                [t.lower() for doc in toy_documents for t in re.findall(r"[^\W_]+", doc)]
            ]
        elif mode == "document":
            segments = [
                [t.lower() for t in re.findall(r"[^\W_]+", doc)] for doc in toy_documents
            ]
        else:
            segments = []
            for doc in toy_documents:
                for sentence in re.split(r"[.!?]", doc):
                    toks = [t.lower() for t in re.findall(r"[^\W_]+", sentence)]
                    if toks:
                        segments.append(toks)
        assert pairs_of(counts) == dict(window_pairs(segments, radius))

    def test_chunked_counting_matches_unchunked(self, toy_documents, toy_config):
        tokens = list(tokenize_documents(toy_documents, toy_config))
        small = count_cooccurrences(tokens, toy_config, chunk_size=8)
        big = count_cooccurrences(tokens, toy_config)
        assert counts_equal(small, big)

    def test_accepts_generator_input(self, toy_documents, toy_config, toy_counts):
        stream = tokenize_documents(toy_documents, toy_config)
        counts = count_cooccurrences(stream, toy_config)
        assert counts_equal(counts, toy_counts)

    def test_marginal_consistency(self, toy_counts):
        for target in toy_counts.targets:
            row_sum = sum(n for _, n in toy_counts.row_items(target))
            assert row_sum == toy_counts.target_total(target)
        assert (
            sum(toy_counts.target_total(t) for t in toy_counts.targets)
            == toy_counts.total_pairs
        )

    def test_marginal_consistency_random(self):
        rng = random.Random(7)
        for _ in range(20):
            tokens = [str(rng.randint(0, 9)) for _ in range(rng.randint(0, 60))]
            cfg = CorpusConfig(window_radius=rng.randint(1, 4))
            counts = count_cooccurrences(tokens, cfg)
            total = 0
            for t in counts.targets:
                row = sum(n for _, n in counts.row_items(t))
                assert row == counts.target_total(t)
                total += row
            assert total == counts.total_pairs

    def test_window_symmetry_without_boundaries(self):
        rng = random.Random(11)
        tokens = [str(rng.randint(0, 5)) for _ in range(200)]
        cfg = CorpusConfig(window_radius=3, respect_boundaries=Boundaries.NONE)
        counts = count_cooccurrences(tokens, cfg)
        for t, f, n in counts.items():
            assert counts.pair_count(f, t) == n

    def test_unigram_counts(self, toy_counts, toy_segments):
        want = {}
        for seg in toy_segments:
            for tok in seg:
                want[tok] = want.get(tok, 0) + 1
        assert toy_counts.unigram_counts == want
        assert toy_counts.total_tokens == sum(want.values())


class TestShardMerge:
    def test_two_shards_equal_concatenation(self, toy_documents, toy_config):
        half = len(toy_documents) // 2
        first = count_cooccurrences(
            tokenize_documents(toy_documents[:half], toy_config), toy_config
        )
        second = count_cooccurrences(
            tokenize_documents(toy_documents[half:], toy_config), toy_config
        )
        merged = merge_counts([first, second])
        whole = count_cooccurrences(
            tokenize_documents(toy_documents, toy_config), toy_config
        )
        assert counts_equal(merged, whole)

    def test_merge_rejects_mismatched_configs(self):
        a = count_cooccurrences(["a", "b"], CorpusConfig(window_radius=1))
        b = count_cooccurrences(["a", "b"], CorpusConfig(window_radius=2))
        with pytest.raises(ConfigurationError):
            merge_counts([a, b])

    def test_merge_nothing(self):
        with pytest.raises(ConfigurationError):
            merge_counts([])


class TestTriples:
    def test_single_record_both_directions(self):
        counts = ingest_triples(["eat\tobj\tapple"])
        assert pairs_of(counts) == {
            ("eat", ("obj", "apple")): 1,
            ("apple", (inverse_relation("obj"), "eat")): 1,
        }

    def test_empty_file(self):
        counts = ingest_triples([])
        assert counts.total_pairs == 0

    def test_fixture_matches_tally(self, fixtures_dir):
        lines = (fixtures_dir / "toy.triples").read_text().splitlines()
        counts = ingest_triples(lines)
        records = [tuple(line.split("\t")) for line in lines if line]
        assert pairs_of(counts) == dict(triple_pairs(records))

    def test_malformed_line_reports_number(self):
        with pytest.raises(ParseError) as err:
            ingest_triples(["eat\tobj\tapple", "bad line"])
        assert err.value.line_number == 2

    def test_unknown_relation_rejected(self):
        with pytest.raises(UnknownRelationError) as err:
            ingest_triples(["eat\txcomp\tapple"], allowed_relations={"obj", "subj"})
        assert "xcomp" in str(err.value)

    def test_relation_profile_direction(self, fixtures_dir):
        lines = (fixtures_dir / "toy.triples").read_text().splitlines()
        counts = ingest_triples(lines)
        features = [f for f, _ in counts.row_items("guitar")]
        assert features and all(
            isinstance(f, tuple) and f[0] == "obj^-1" for f in features
        )


class TestSerialization:
    def test_round_trip(self, toy_counts, tmp_path):
        path = tmp_path / "counts.tsv"
        save_counts(toy_counts, path)
        loaded = load_counts(path)
        assert counts_equal(loaded, toy_counts)
        assert loaded.config == toy_counts.config

    def test_round_trip_triples(self, fixtures_dir, tmp_path):
        lines = (fixtures_dir / "toy.triples").read_text().splitlines()
        counts = ingest_triples(lines)
        path = tmp_path / "triples-counts.tsv"
        save_counts(counts, path)
        assert counts_equal(load_counts(path), counts)

    def test_header_totals(self, toy_counts, tmp_path):
        path = tmp_path / "counts.tsv"
        save_counts(toy_counts, path)
        header = [
            line for line in path.read_text().splitlines() if line.startswith("#counts")
        ]
        assert len(header) == 1
        assert f"total_pairs={toy_counts.total_pairs}" in header[0]
        assert f"total_tokens={toy_counts.total_tokens}" in header[0]

    def test_write_is_deterministic(self, toy_counts, tmp_path):
        a = tmp_path / "a.tsv"
        b = tmp_path / "b.tsv"
        save_counts(toy_counts, a)
        save_counts(toy_counts, b)
        assert a.read_bytes() == b.read_bytes()

    def test_bad_line_reports_number(self, tmp_path):
        path = tmp_path / "bad.tsv"
        path.write_text("#counts\ttotal_pairs=1\ttotal_tokens=1\na\tb\n")
        with pytest.raises(ParseError) as err:
            load_counts(path)
        assert err.value.line_number == 2


class TestConfig:
    def test_invalid_radius(self):
        with pytest.raises(ConfigurationError):
            CorpusConfig(window_radius=0)

    def test_invalid_min_frequency(self):
        with pytest.raises(ConfigurationError):
            CorpusConfig(min_token_frequency=0)

    def test_boundaries_from_string(self):
        assert CorpusConfig(respect_boundaries="sentence").respect_boundaries is (
            Boundaries.SENTENCE
        )


class TestFromPairs:
    def test_round_trip_dict(self):
        pairs = {("a", "b"): 2, ("b", "a"): 2, ("a", "c"): 1}
        counts = CooccurrenceCounts.from_pairs(pairs)
        assert pairs_of(counts) == pairs
        assert counts.target_total("a") == 3
        assert counts.feature_total("a") == 2
        assert counts.total_pairs == 5

    def test_scaling_leaves_structure(self, toy_counts):
        scaled = CooccurrenceCounts.from_pairs(
            {(t, f): 3 * n for t, f, n in toy_counts.items()}
        )
        assert scaled.total_pairs == 3 * toy_counts.total_pairs
        assert np.isclose(
            scaled.pair_count("band", "song") / scaled.target_total("band"),
            toy_counts.pair_count("band", "song") / toy_counts.target_total("band"),
        )
