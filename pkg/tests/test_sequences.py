import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from tseq import sequences
from tseq.sequences import (
    BudgetExceededError,
    InvalidSequenceError,
    candidates,
    enumerate_tree,
    format_terms,
    parse_terms,
    representation_profile,
    tournament_children,
    validate_meeussen,
    validate_tournament,
)

from helpers import (
    brute_is_meeussen,
    brute_meeussen_children,
    brute_subset_counts,
    brute_ur,
)


increasing_positive = st.lists(st.integers(1, 40), min_size=1, max_size=9, unique=True).map(
    lambda xs: tuple(sorted(xs))
)


class TestValidateTournament:
    def test_valid_example(self):
        assert validate_tournament((1, 2, 3, 5)).valid

    def test_double_rule(self):
        report = validate_tournament((1, 2, 5))
        assert not report.valid
        assert [(v.index, v.rule) for v in report.violations] == [(2, "exceeds-double")]

    def test_first_term_rule(self):
        report = validate_tournament((2, 3))
        assert not report.valid
        assert report.violations[0].rule == "first-term"

    def test_collects_all_violations(self):
        report = validate_tournament((2, 2, 9))
        rules = {v.rule for v in report.violations}
        assert {"first-term", "not-increasing", "exceeds-double"} <= rules

    def test_empty_rejected(self):
        with pytest.raises(ValueError):
            validate_tournament(())

    def test_single_root(self):
        assert validate_tournament((1,)).valid


class TestTournamentChildren:
    @pytest.mark.parametrize("k,expected", [(1, [2]), (2, [3, 4]), (3, [4, 5, 6])])
    def test_examples(self, k, expected):
        assert tournament_children(k) == expected

    def test_zero_rejected(self):
        with pytest.raises(ValueError):
            tournament_children(0)

    @given(st.integers(1, 200))
    def test_length_and_range(self, k):
        kids = tournament_children(k)
        assert len(kids) == k
        assert kids[0] == k + 1 and kids[-1] == 2 * k


class TestRepresentationProfile:
    def test_1_2_3(self):
        prof = representation_profile((1, 2, 3))
        assert prof.total == 6
        assert prof.covers_interval()
        assert list(prof.uniquely_representable()) == [0, 1, 2, 4, 5, 6]

    def test_binary(self):
        prof = representation_profile((1, 2, 4))
        assert all(prof.count(t) == 1 for t in range(8))

    def test_1_2_3_5(self):
        prof = representation_profile((1, 2, 3, 5))
        assert list(prof.uniquely_representable()) == [0, 1, 2, 4, 7, 9, 10, 11]

    def test_endpoints(self):
        prof = representation_profile((1, 2, 3, 5))
        assert prof.count(0) == 1 and prof.count(prof.total) == 1

    def test_budget(self):
        with pytest.raises(BudgetExceededError) as err:
            representation_profile((1, 2, 4, 8), budget=10)
        assert "15" in str(err.value) and "10" in str(err.value)

    @given(increasing_positive)
    @settings(max_examples=60)
    def test_matches_brute_force(self, terms):
        prof = representation_profile(terms)
        brute = brute_subset_counts(terms)
        for t in range(prof.total + 1):
            assert prof.count(t) == min(2, brute[t])

    @given(increasing_positive)
    @settings(max_examples=60)
    def test_complementation_symmetry(self, terms):
        counts = representation_profile(terms).counts
        assert np.array_equal(counts, counts[::-1])


class TestValidateMeeussen:
    def test_beheaded_fibonacci(self):
        assert validate_meeussen((1, 2, 3, 5, 8, 13)).valid

    def test_duplicate_representation(self):
        report = validate_meeussen((1, 2, 3, 4))
        assert not report.valid
        bad = [v for v in report.violations if v.rule == "not-unique"]
        assert bad and bad[0].index == 4 and "3" in bad[0].detail

    def test_gap(self):
        report = validate_meeussen((1, 3))
        assert not report.valid
        assert any(v.rule == "sum-gap" and "2" in v.detail for v in report.violations)

    def test_structural_mode(self):
        assert validate_meeussen((1, 2, 3, 5, 8, 13), "structural").valid
        report = validate_meeussen((1, 2, 3, 4), "structural")
        assert not report.valid
        assert report.violations[0].index == 4

    def test_bad_mode(self):
        with pytest.raises(ValueError):
            validate_meeussen((1,), "magic")

    @given(increasing_positive)
    @settings(max_examples=80)
    def test_modes_agree_and_match_brute(self, terms):
        dp = validate_meeussen(terms)
        structural = validate_meeussen(terms, "structural")
        assert dp.valid == structural.valid == brute_is_meeussen(terms)


class TestCandidates:
    def test_examples(self):
        assert candidates((1,)) == (1,)
        assert candidates((1, 2, 3)) == (4, 5, 6)
        assert candidates((1, 2, 3, 5)) == (7, 9, 10, 11)

    def test_largest_is_total(self):
        for terms in [(1,), (1, 2), (1, 2, 3, 5), (1, 2, 4, 8)]:
            assert candidates(terms)[-1] == sum(terms)

    def test_invalid_rejected_with_report(self):
        with pytest.raises(InvalidSequenceError) as err:
            candidates((1, 2, 3, 4))
        assert not err.value.report.valid


class TestEnumerateTree:
    def test_tournament_row_4(self):
        labels = []
        n = enumerate_tree("tournament", 4, lambda t: labels.append(t[-1]))
        assert n == 7
        assert labels == [4, 5, 6, 5, 6, 7, 8]

    def test_meeussen_row_4(self):
        labels = []
        n = enumerate_tree("meeussen", 4, lambda t: labels.append(t[-1]))
        assert n == 7
        assert labels == [5, 6, 7, 5, 6, 7, 8]

    def test_root_only(self):
        seqs = []
        assert enumerate_tree("tournament", 1, seqs.append) == 1
        assert seqs == [(1,)]

    def test_meeussen_row_5_matches_figure(self):
        rows = {}
        enumerate_tree("meeussen", 5, lambda t: rows.setdefault(t[:4], []).append(t[-1]))
        assert rows[(1, 2, 3, 5)] == [8, 10, 11, 12]
        assert rows[(1, 2, 3, 6)] == [8, 9, 11, 12, 13]
        assert rows[(1, 2, 3, 7)] == [8, 9, 10, 12, 13, 14]
        assert rows[(1, 2, 4, 5)] == [9, 10, 11, 12, 13]
        assert rows[(1, 2, 4, 6)] == [9, 10, 11, 12, 13, 14]
        assert rows[(1, 2, 4, 7)] == [9, 10, 11, 12, 13, 14, 15]
        assert rows[(1, 2, 4, 8)] == [9, 10, 11, 12, 13, 14, 15, 16]

    def test_lex_order(self):
        for kind in ("tournament", "meeussen"):
            seqs = []
            enumerate_tree(kind, 5, seqs.append)
            assert seqs == sorted(seqs)

    def test_visitorless_count_matches(self):
        for kind in ("tournament", "meeussen"):
            for depth in range(1, 8):
                seen = []
                with_visitor = enumerate_tree(kind, depth, seen.append)
                assert with_visitor == len(seen) == enumerate_tree(kind, depth)

    def test_kinds_agree(self):
        for depth in range(1, 9):
            assert enumerate_tree("tournament", depth) == enumerate_tree("meeussen", depth)

    def test_depth_limit(self):
        with pytest.raises(ValueError):
            enumerate_tree("tournament", 11)
        assert enumerate_tree("tournament", 3, depth_limit=3) == 2
        with pytest.raises(ValueError):
            enumerate_tree("tournament", 4, depth_limit=3)

    def test_bad_kind(self):
        with pytest.raises(ValueError):
            enumerate_tree("nonsense", 3)

    def test_meeussen_children_match_brute_force(self):
        # children must come from the full prefix, never from the last label
        kids = {}
        enumerate_tree("meeussen", 5, lambda t: kids.setdefault(t[:4], []).append(t[-1]))
        for prefix, children in kids.items():
            assert children == brute_meeussen_children(prefix)
        assert kids[(1, 2, 3, 5)] != kids[(1, 2, 4, 5)]  # shared last term, different children


class TestExtensionTheorem:
    def test_exhaustive_to_depth_6(self):
        # extending by the j-th candidate yields a Meeussen sequence with
        # k + j candidates, for every node
        def check(terms):
            cands = brute_meeussen_children(terms)
            k = len(cands)
            for j, child_label in enumerate(cands, 1):
                child = terms + (child_label,)
                assert brute_is_meeussen(child)
                assert len(brute_meeussen_children(child)) == k + j

        enumerate_tree("meeussen", 1, check)
        for depth in range(2, 7):
            enumerate_tree("meeussen", depth, check)

    def test_candidate_mirror_to_depth_6(self):
        # below the last term, the uniquely representable sums are exactly
        # the candidates reflected through the total
        def check(terms):
            ur = brute_ur(terms)
            last, total = terms[-1], sum(terms)
            cands = [u for u in ur if u >= last]
            mirrored = sorted(total - u for u in cands)
            assert [u for u in ur if u < last] == [v for v in mirrored if v < last]

        for depth in range(1, 7):
            enumerate_tree("meeussen", depth, check)


class TestTextFormat:
    def test_roundtrip(self):
        assert parse_terms("1 2 3 5") == (1, 2, 3, 5)
        assert format_terms((1, 2, 3, 5)) == "1 2 3 5"

    @pytest.mark.parametrize("bad", ["", "1 02", "1 -2", "one", "1 2.5", "0"])
    def test_rejects_bad_tokens(self, bad):
        with pytest.raises(ValueError):
            parse_terms(bad)
