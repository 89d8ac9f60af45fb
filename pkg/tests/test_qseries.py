"""Tests for q-polynomials, truncated series and their character-valued form."""

import pytest
import sympy
from sympy.utilities.iterables import partitions

from app.errors import DomainError, SeriesOrderError
from app.lie import Character, Weight
from app.qseries import CharacterQSeries, QPolynomial, QSeries, inv_poch, poch, qbinom


class TestQPolynomial:
    """Test exact polynomials in q."""

    def test_trailing_zeros_trimmed(self):
        """Test that trailing zero coefficients are dropped."""
        assert QPolynomial((1, 2, 0, 0)).coeffs == (1, 2)
        assert QPolynomial.zero().degree == -1

    def test_product_and_value_at_one(self):
        """Test multiplication and the q=1 specialization."""
        p = QPolynomial((1, 1)) * QPolynomial((1, 1))
        assert p.coeffs == (1, 2, 1)
        assert p.at_one() == 4

    def test_negative_monomial_rejected(self):
        """Test that negative powers are refused."""
        with pytest.raises(DomainError):
            QPolynomial.monomial(-1)


class TestQSeries:
    """Test truncated power series."""

    def test_padding_to_order(self):
        """Test that coefficients are padded and cut to the order."""
        assert QSeries((1, 2), 3).coeffs == (1, 2, 0, 0)
        assert QSeries((1, 2, 3, 4), 1).coeffs == (1, 2)

    def test_mixed_orders_do_not_compare(self):
        """Test that series of different orders must be truncated explicitly."""
        with pytest.raises(SeriesOrderError, match="truncate explicitly"):
            _ = QSeries.one(3) == QSeries.one(4)

    def test_sum_keeps_smaller_order(self):
        """Test that arithmetic keeps the smaller of two orders."""
        assert (QSeries.one(3) + QSeries.one(5)).order == 3

    def test_truncate_cannot_extend(self):
        """Test that a series cannot be extended beyond its order."""
        with pytest.raises(SeriesOrderError):
            QSeries.one(2).truncate(4)

    def test_coefficient_beyond_order(self):
        """Test that unknown coefficients are not invented."""
        with pytest.raises(SeriesOrderError):
            QSeries.one(2).coefficient(3)

    def test_no_evaluation_at_one(self):
        """Test that truncated series cannot be specialized at q=1."""
        with pytest.raises(DomainError):
            QSeries.one(2).at_one()

    def test_first_mismatch(self):
        """Test the lowest differing power."""
        assert QSeries((1, 1, 2), 4).first_mismatch(QSeries((1, 1, 3), 4)) == 2
        assert QSeries((1, 1), 4).first_mismatch(QSeries((1, 1), 4)) is None


class TestFunctions:
    """Test Pochhammer symbols and Gaussian binomials."""

    def test_poch(self):
        """Test (q)_2 = 1 - q - q^2 + q^3."""
        assert poch(2).coeffs == (1, -1, -1, 1)
        assert poch(0) == QPolynomial.one()

    def test_inv_poch_counts_partitions(self):
        """Test that 1/(q)_2 counts partitions into parts 1 and 2."""
        assert inv_poch(2, 6).to_list() == [1, 1, 2, 2, 3, 3, 4]
        assert inv_poch(0, 3).to_list() == [1, 0, 0, 0]

    @pytest.mark.parametrize("m", [1, 2, 3, 5])
    def test_inverse(self, m):
        """Test (q)_m * 1/(q)_m = 1 through the truncation order."""
        assert inv_poch(m, 10) * poch(m) == QSeries.one(10)

    @pytest.mark.parametrize("m", [2, 4])
    def test_inv_poch_matches_sympy_series(self, m):
        """Test 1/(q)_m against sympy's Taylor expansion."""
        q = sympy.Symbol("q")
        expr = 1 / sympy.prod([1 - q**k for k in range(1, m + 1)])
        expansion = sympy.expand(sympy.series(expr, q, 0, 9).removeO())
        expected = [int(expansion.coeff(q, k)) for k in range(9)]
        assert inv_poch(m, 8).to_list() == expected

    def test_inv_poch_negative(self):
        """Test that negative arguments are rejected."""
        with pytest.raises(DomainError):
            inv_poch(-1, 3)

    def test_qbinom(self):
        """Test [4, 2]_q = 1 + q + 2q^2 + q^3 + q^4."""
        assert qbinom(4, 2).coeffs == (1, 1, 2, 1, 1)

    @pytest.mark.parametrize(("top", "bottom"), [(2, 3), (3, -1), (-1, 0)])
    def test_qbinom_outside_range_is_zero(self, top, bottom):
        """Test that the Gaussian binomial vanishes outside 0 <= bottom <= top."""
        assert qbinom(top, bottom) == QPolynomial.zero()

    @pytest.mark.parametrize("a", range(6))
    @pytest.mark.parametrize("b", range(6))
    def test_qbinom_counts_partitions_in_box(self, a, b):
        """Test that [a+b, a]_q counts partitions with at most a parts, each at most b."""
        expected = [
            sum(1 for _ in partitions(n, m=a, k=b)) if a and b else int(n == 0)
            for n in range(a * b + 1)
        ]
        assert list(qbinom(a + b, a).coeffs) == expected

    @pytest.mark.parametrize("n", range(9))
    def test_qbinom_symmetry(self, n):
        """Test that [n, k]_q = [n, n-k]_q."""
        for k in range(n + 1):
            assert qbinom(n, k) == qbinom(n, n - k)

    @pytest.mark.parametrize(("top", "bottom", "count"), [(4, 2, 6), (6, 3, 20), (5, 1, 5)])
    def test_qbinom_at_one(self, top, bottom, count):
        """Test that [n, k]_q specializes to the ordinary binomial."""
        assert qbinom(top, bottom).at_one() == count


class TestCharacterQSeries:
    """Test weight-indexed series."""

    def test_zero_entries_dropped(self):
        """Test that vanishing entries are not stored."""
        series = CharacterQSeries(3, {Weight((0,)): QSeries.zero(3)})
        assert not series

    def test_entry_order_checked(self):
        """Test that entries must share the series order."""
        with pytest.raises(SeriesOrderError):
            CharacterQSeries(3, {Weight((0,)): QSeries.one(2)})

    def test_from_character(self):
        """Test a character times a scalar series."""
        character = Character.from_weights([Weight((1,)), Weight((-1,))])
        series = CharacterQSeries.from_character(character, inv_poch(1, 3), 3)
        assert series.coefficient(Weight((1,))).to_list() == [1, 1, 1, 1]
        assert series.at_q_zero() == character

    def test_first_mismatch_reports_weight(self):
        """Test that a mismatch names the weight, power and both values."""
        lhs = CharacterQSeries(2, {Weight((0,)): QSeries((1, 2), 2)})
        rhs = CharacterQSeries(2, {Weight((0,)): QSeries((1, 3), 2)})
        assert lhs.first_mismatch(rhs) == (Weight((0,)), 1, 2, 3)
        assert lhs.first_mismatch(lhs) is None
