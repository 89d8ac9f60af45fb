"""Tests for the fermionic formula and modified Hall-Littlewood polynomials."""

from fractions import Fraction

import pytest
from sympy.utilities.iterables import partitions

from app.errors import DomainError, WeightsNotImplementedError
from app.hl import (
    HLConfiguration,
    assemble,
    at_q_one,
    cocharge,
    configurations,
    fermionic_poly,
    modified_hl,
    phi,
    require_supported_pattern,
    vacancy,
)
from app.lie import Character, Weight, algebra_from_name, irreducible_character
from app.qseries import QPolynomial, qbinom


def w(*labels: int) -> Weight:
    return Weight(labels)


def sl2_by_enumeration(top: int, k: int) -> QPolynomial:
    """M_{(top-2k), (top)} summed directly over partitions of k."""
    total = QPolynomial.zero()
    for parts in partitions(k):
        m = dict(parts)
        term = QPolynomial.monomial(sum(min(a, b) * m[a] * m[b] for a in m for b in m))
        for a, ma in m.items():
            room = top - 2 * sum(min(a, b) * mb for b, mb in m.items())
            term = term * qbinom(room + ma, ma)
        total = total + term
    return total


class TestFermionicData:
    """Test Phi, configurations, vacancy numbers and cocharge."""

    def test_phi_simply_laced(self):
        """Test Phi on sl2 where every root has norm 2."""
        sl2 = algebra_from_name("sl2")
        assert phi(sl2, 1, 1, 1, 1) == 2
        assert phi(sl2, 1, 1, 1, 3) == 2

    def test_phi_b2(self):
        """Test Phi on so5 with a long and a short simple root."""
        so5 = algebra_from_name("so5")
        assert phi(so5, 2, 2, 1, 1) == 2
        assert phi(so5, 1, 2, 1, 1) == -1
        assert phi(so5, 2, 1, 1, 1) == -1
        assert phi(so5, 1, 1, 2, 1) == Fraction(2)

    def test_phi_index_range(self):
        """Test that root indices are checked."""
        with pytest.raises(DomainError, match="out of range"):
            phi(algebra_from_name("sl2"), 1, 2, 1, 1)

    def test_configurations_are_partitions(self):
        """Test that configurations run over partitions of the root coefficients."""
        sl2 = algebra_from_name("sl2")
        found = {c.parts for c in configurations(sl2, [3])}
        assert found == {(((3, 1),),), (((1, 1), (2, 1)),), (((1, 3),),)}

    def test_vacancy_and_cocharge(self):
        """Test the single configuration of M_{0,(2)} on sl2."""
        sl2 = algebra_from_name("sl2")
        config = HLConfiguration.from_partitions([{1: 1}])
        assert vacancy(sl2, w(2), config, 1, 1) == 0
        assert cocharge(sl2, config) == 1
        assert cocharge(sl2, HLConfiguration.empty(1)) == 0


class TestModifiedHL:
    """Test modified Hall-Littlewood polynomials."""

    def test_sl2(self):
        """Test M_{mu,(2)}: 1 at mu = 2 and q at mu = 0."""
        result = modified_hl(algebra_from_name("sl2"), w(2))
        assert {mu: list(p.coeffs) for mu, p in result.items()} == {w(0): [0, 1], w(2): [1]}

    def test_sl3_adjoint(self):
        """Test M_{mu,(1,1)} on sl3."""
        result = modified_hl(algebra_from_name("sl3"), w(1, 1))
        assert {mu: list(p.coeffs) for mu, p in result.items()} == {
            w(0, 0): [0, 1],
            w(1, 1): [1],
        }

    def test_so5_vector(self):
        """Test that the vector of so5 has no lower term: the vacancy goes negative."""
        result = modified_hl(algebra_from_name("so5"), w(1, 0))
        assert {mu: list(p.coeffs) for mu, p in result.items()} == {w(1, 0): [1]}

    @pytest.mark.parametrize("top", range(7))
    def test_sl2_matches_enumeration(self, top):
        """Test sl2 against a direct sum over partitions, with no constant term below the top."""
        sl2 = algebra_from_name("sl2")
        for k in range(top // 2 + 1):
            poly = fermionic_poly(sl2, w(top - 2 * k), w(top))
            assert poly == sl2_by_enumeration(top, k)
            if k:
                assert poly.coefficient(0) == 0

    @pytest.mark.parametrize(
        ("name", "labels"),
        [("sl3", (2, 2)), ("sl4", (1, 1, 1)), ("so5", (2, 1)), ("so7", (1, 0, 1))],
    )
    def test_support_below_lambda(self, name, labels):
        """Test that every nonzero entry sits at a dominant weight below lambda."""
        algebra = algebra_from_name(name)
        lam = w(*labels)
        result = modified_hl(algebra, lam)
        assert result[lam] == QPolynomial.one()
        for mu, poly in result.items():
            assert poly
            assert mu.is_dominant()
            coords = algebra.root_coordinates(lam - mu)
            assert all(c >= 0 and c.denominator == 1 for c in coords)

    def test_not_below(self):
        """Test that M vanishes when mu is not below lambda."""
        sl3 = algebra_from_name("sl3")
        assert not fermionic_poly(sl3, w(1, 0), w(0, 1))

    def test_non_dominant_rejected(self):
        """Test that lambda must be dominant."""
        with pytest.raises(DomainError, match="dominant"):
            modified_hl(algebra_from_name("sl3"), w(1, -1))

    @pytest.mark.parametrize(
        ("name", "labels"),
        [("sl2", (3,)), ("sl3", (2, 1)), ("sl4", (1, 1, 0)), ("so5", (1, 1)), ("so5", (0, 2))],
    )
    def test_q_one_is_tensor_product(self, name, labels):
        """Test that at q = 1 the sum is the tensor product of fundamentals."""
        algebra = algebra_from_name(name)
        expected = Character.trivial(algebra.rank)
        for i, m in enumerate(labels):
            for _ in range(m):
                fundamental = algebra.fundamental_weight(i + 1)
                expected = expected * irreducible_character(algebra, fundamental)
        assert at_q_one(algebra, modified_hl(algebra, w(*labels))) == expected

    def test_assemble(self):
        """Test the character-valued assembly on sl2."""
        sl2 = algebra_from_name("sl2")
        series = assemble(sl2, modified_hl(sl2, w(2)), 3)
        assert series.coefficient(w(0)).to_list() == [1, 1, 0, 0]
        assert series.coefficient(w(2)).to_list() == [1, 0, 0, 0]


class TestSupportedPattern:
    """Test the B-series restriction to Lambda_1 and Lambda_n."""

    def test_inner_fundamental(self):
        """Test that so7 weights using Lambda_2 are refused."""
        with pytest.raises(WeightsNotImplementedError, match="Lambda_2"):
            require_supported_pattern(algebra_from_name("so7"), w(0, 1, 0))

    def test_outer_fundamentals(self):
        """Test that so7 weights on Lambda_1 and Lambda_3 pass."""
        require_supported_pattern(algebra_from_name("so7"), w(1, 0, 2))

    def test_type_a_unrestricted(self):
        """Test that sl weights are never refused."""
        require_supported_pattern(algebra_from_name("sl4"), w(0, 1, 0))
