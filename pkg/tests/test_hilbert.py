from __future__ import annotations

import pytest
from conftest import (
    RING8,
    SINGLE,
    SKEW4,
    SQUARE4,
    STAIRS5,
    ZIGZAG7,
    simple_thin_polyominoes,
    straight,
)
from hypothesis import given

from polyalg import (
    HilbertSeries,
    IntPolynomial,
    Polyomino,
    PreconditionError,
    a_invariant,
    betti_numerator_identity,
    cell_interval_series,
    enumerate_fixed,
    hilbert_series_recursive,
    hilbert_series_thin,
    is_gorenstein,
    is_palindromic,
    is_simple,
    is_thin,
    krull_dimension,
    multiplicity,
    regularity,
)
from polyalg.hilbert import one_minus_t_power


class TestHilbertSeriesType:
    def test_stores_reduced_form(self):
        # (1 - t) / (1 - t) reduces away entirely
        series = HilbertSeries([1, -1], 1)
        assert series.numerator.coeffs == (1,)
        assert series.denom_power == 0

    def test_no_reduction_when_numerator_not_divisible(self):
        series = HilbertSeries([1, 2], 3)
        assert series.numerator.coeffs == (1, 2)
        assert series.denom_power == 3

    def test_double_reduction(self):
        # (1 - t)^2 * (1 + t) over (1 - t)^5
        numerator = one_minus_t_power(2) * IntPolynomial([1, 1])
        series = HilbertSeries(numerator, 5)
        assert series.numerator.coeffs == (1, 1)
        assert series.denom_power == 3

    def test_rejects_negative_power(self):
        with pytest.raises(ValueError):
            HilbertSeries([1], -1)


class TestKrullDimension:
    def test_zigzag(self):
        assert krull_dimension(ZIGZAG7) == 9

    @pytest.mark.parametrize("r", range(1, 7))
    def test_interval(self, r):
        assert krull_dimension(straight(r)) == r + 2

    def test_single_cell(self):
        assert krull_dimension(SINGLE) == 3

    def test_square_is_simple_enough(self):
        # the formula needs simplicity, not thinness
        assert krull_dimension(SQUARE4) == 9 - 4

    def test_rejects_holes(self):
        with pytest.raises(PreconditionError):
            krull_dimension(RING8)

    def test_rejects_disconnected(self):
        with pytest.raises(PreconditionError):
            krull_dimension(Polyomino([(0, 0), (2, 2)]))


class TestCellIntervalSeries:
    @pytest.mark.parametrize("r", [1, 4, 10])
    def test_shape(self, r):
        series = cell_interval_series(r)
        assert series.numerator.coeffs == (1, r)
        assert series.denom_power == r + 2

    def test_rejects_empty(self):
        with pytest.raises(PreconditionError):
            cell_interval_series(0)


class TestSeriesThin:
    def test_zigzag(self):
        series = hilbert_series_thin(ZIGZAG7)
        assert series.numerator.coeffs == (1, 7, 13, 7, 1)
        assert series.denom_power == 9

    @pytest.mark.parametrize("r", range(1, 9))
    def test_interval_matches_closed_form(self, r):
        assert hilbert_series_thin(straight(r)) == cell_interval_series(r)

    def test_skew(self):
        series = hilbert_series_thin(SKEW4)
        assert series.numerator.coeffs == (1, 4, 3)
        assert series.denom_power == 6

    def test_rejects_non_thin(self):
        with pytest.raises(PreconditionError):
            hilbert_series_thin(SQUARE4)


class TestSeriesRecursive:
    def test_single_cell_base_case(self):
        series = hilbert_series_recursive(SINGLE)
        assert series.numerator.coeffs == (1, 1)
        assert series.denom_power == 3

    def test_zigzag(self):
        assert hilbert_series_recursive(ZIGZAG7) == hilbert_series_thin(ZIGZAG7)

    def test_agrees_on_corpus(self):
        for poly in enumerate_fixed(5):
            if is_thin(poly) and is_simple(poly):
                assert hilbert_series_recursive(poly) == hilbert_series_thin(poly)

    @given(simple_thin_polyominoes(max_rank=8))
    def test_agrees_on_random_boards(self, poly):
        assert hilbert_series_recursive(poly) == hilbert_series_thin(poly)


class TestBettiIdentity:
    def test_smallest_case_explicitly(self):
        # r = 1: the alternating sum collapses to 1 - t^2 = (1 + t)(1 - t)
        assert (IntPolynomial([1, 1]) * one_minus_t_power(1)).coeffs == (1, 0, -1)
        assert betti_numerator_identity(1)

    def test_r2_expansion(self):
        # (1 + 2t)(1 - t)^2 = 1 - 3t^2 + 2t^3, matching the alternating sum
        assert (IntPolynomial([1, 2]) * one_minus_t_power(2)).coeffs == (1, 0, -3, 2)
        assert betti_numerator_identity(2)

    @pytest.mark.parametrize("r", list(range(1, 13)))
    def test_holds(self, r):
        assert betti_numerator_identity(r)

    def test_rejects_nonpositive(self):
        with pytest.raises(PreconditionError):
            betti_numerator_identity(0)


class TestDerivedInvariants:
    def test_zigzag_values(self):
        assert regularity(ZIGZAG7) == 4
        assert multiplicity(ZIGZAG7) == 29
        assert a_invariant(ZIGZAG7) == -5

    def test_single_cell_values(self):
        assert regularity(SINGLE) == 1
        assert multiplicity(SINGLE) == 2
        assert a_invariant(SINGLE) == -2

    def test_skew_values(self):
        assert regularity(SKEW4) == 2
        assert multiplicity(SKEW4) == 8
        assert a_invariant(SKEW4) == -4

    @pytest.mark.parametrize("r", [1, 3, 6])
    def test_interval_values(self, r):
        assert multiplicity(straight(r)) == r + 1
        assert a_invariant(straight(r)) == -r - 1


class TestPalindromic:
    def test_symmetric(self):
        assert is_palindromic(IntPolynomial([1, 7, 13, 7, 1]))

    def test_asymmetric(self):
        assert not is_palindromic(IntPolynomial([1, 5, 6, 1]))

    def test_constant_and_zero(self):
        assert is_palindromic(IntPolynomial([1]))
        assert is_palindromic(IntPolynomial([]))


class TestGorenstein:
    def test_zigzag(self):
        assert is_gorenstein(ZIGZAG7)

    def test_stairs(self):
        assert not is_gorenstein(STAIRS5)

    def test_single_cell(self):
        assert is_gorenstein(SINGLE)

    @pytest.mark.parametrize("r", [2, 3, 5])
    def test_longer_intervals_are_not(self, r):
        assert not is_gorenstein(straight(r))

    def test_rejects_non_thin(self):
        with pytest.raises(PreconditionError):
            is_gorenstein(SQUARE4)
