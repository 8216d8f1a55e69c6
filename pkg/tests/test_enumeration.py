from __future__ import annotations

import pytest
from conftest import SQUARE4, contains_square_block, redelmeier_counts

from polyalg import (
    Polyomino,
    PreconditionError,
    canonical_form,
    conjecture_scan,
    enumerate_fixed,
    filter_corpus,
    is_connected,
    is_simple,
    is_thin,
)

# Fixed-polyomino counts per rank, frozen after cross-checking against the
# Redelmeier oracle below (and agreeing with the published sequence).
FIXED_COUNTS = [1, 2, 6, 19, 63, 216, 760]


class TestEnumerateFixed:
    def test_counts_match_redelmeier(self):
        per_rank = {}
        for poly in enumerate_fixed(7):
            per_rank[poly.rank] = per_rank.get(poly.rank, 0) + 1
        counts = [per_rank[r] for r in range(1, 8)]
        assert counts == redelmeier_counts(7)
        assert counts == FIXED_COUNTS

    def test_rank_one(self):
        assert list(enumerate_fixed(1)) == [Polyomino([(0, 0)])]

    def test_rank_two_is_both_dominoes(self):
        ranked = [p for p in enumerate_fixed(2) if p.rank == 2]
        assert ranked == [Polyomino([(0, 0), (0, 1)]), Polyomino([(0, 0), (1, 0)])]

    def test_stream_properties(self):
        seen = set()
        for poly in enumerate_fixed(5):
            form = canonical_form(poly)
            assert form not in seen, "duplicate canonical form"
            seen.add(form)
            assert is_connected(poly)
            assert poly.bounds[:2] == (0, 0), "stream is normalized"

    def test_deterministic(self):
        assert list(enumerate_fixed(4)) == list(enumerate_fixed(4))

    def test_rank_bounds(self):
        with pytest.raises(PreconditionError):
            list(enumerate_fixed(0))
        with pytest.raises(PreconditionError):
            list(enumerate_fixed(11))
        with pytest.raises(PreconditionError):
            list(enumerate_fixed(4, rank_limit=3))


class TestCanonicalForm:
    def test_translation_invariance(self):
        poly = Polyomino([(3, 4), (4, 4)])
        assert canonical_form(poly) == canonical_form(poly.translate(-7, 11))
        assert canonical_form(poly) == ((0, 0), (1, 0))


class TestFilterCorpus:
    def test_thin_rank4_count(self):
        # the square tetromino is the unique non-thin board of rank <= 4
        thin = list(filter_corpus(4, {"thin"}))
        assert len(thin) == sum(FIXED_COUNTS[:4]) - 1
        assert SQUARE4 not in thin

    def test_simple_non_thin_members_contain_blocks(self):
        for poly in filter_corpus(5, ("simple", "not-thin")):
            assert contains_square_block(poly)
            assert is_simple(poly)

    def test_first_hole_appears_at_rank_seven(self):
        holed = [p for p in filter_corpus(7, ("not-simple",))]
        assert holed, "rank 7 contains holed polyominoes"
        assert min(p.rank for p in holed) == 7

    def test_cell_interval_filter(self):
        intervals = list(filter_corpus(3, ("cell-interval",)))
        assert len(intervals) == 1 + 2 + 2

    def test_unknown_predicate(self):
        with pytest.raises(PreconditionError):
            list(filter_corpus(2, ("convex",)))


class TestConjectureScan:
    def test_rank_two(self):
        report = conjecture_scan(2)
        assert report.total == 3
        assert report.processed == 3
        assert not report.skipped
        assert all(r.thin and r.equal for r in report.records)

    def test_rank_four_flags_only_the_square(self):
        report = conjecture_scan(4)
        unequal = [r for r in report.records if r.skipped is None and not r.equal]
        assert len(unequal) == 1
        assert Polyomino(unequal[0].cells) == SQUARE4
        assert not report.thin_unequal
        assert not report.nonthin_equal
        assert not report.degree_mismatches

    def test_accounting_reconciles(self):
        report = conjecture_scan(3)
        assert report.processed + len(report.skipped) == report.total

    def test_parallel_matches_serial(self):
        serial = conjecture_scan(3, jobs=1)
        parallel = conjecture_scan(3, jobs=2)
        assert serial.records == parallel.records

    def test_custom_depth_policy(self):
        report = conjecture_scan(2, depth_policy=lambda p: 6)
        assert all(r.depth == 6 for r in report.records)

    def test_record_serialization(self):
        record = conjecture_scan(1).records[0]
        payload = record.as_dict()
        assert payload["cells"] == [[0, 0]]
        assert payload["rook_polynomial"] == [1, 1]
        assert payload["equal"] is True
        assert payload["skipped"] is None

    def test_summary_shape(self):
        summary = conjecture_scan(2).summary()
        assert summary["total"] == 3
        assert summary["processed"] + summary["skipped"] == summary["total"]
        assert summary["thin_unequal"] == []

    def test_thin_boards_always_match(self):
        report = conjecture_scan(4)
        for record in report.records:
            if record.skipped is None and record.thin:
                assert record.equal
                assert record.degrees_match
