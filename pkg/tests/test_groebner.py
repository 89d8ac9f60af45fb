"""Tests for Q(sqrt 2) polynomials, lex orders and Buchberger's algorithm."""

from fractions import Fraction

import pytest
import sympy

from app.errors import DomainError, PairQueueOverflowError
from app.groebner import (
    CoeffExt,
    GradedVariable,
    MonomialIdeal,
    MonomialOrder,
    Polynomial,
    PolynomialRing,
    buchberger,
    is_groebner_basis,
    lex_compare,
    lt_ideal,
    normal_form,
)
from app.lie import Weight


def make_ring(*names: str) -> PolynomialRing:
    return PolynomialRing(tuple(GradedVariable(n, (1,), Weight((0,))) for n in names))


def poly(ring: PolynomialRing, *terms: tuple[int, dict[str, int]]) -> Polynomial:
    return Polynomial(
        ring, {ring.monomial(mono): CoeffExt(Fraction(coeff)) for coeff, mono in terms}
    )


@pytest.fixture
def xyz():
    ring = make_ring("x", "y", "z")
    order = MonomialOrder.natural(ring)
    generators = [
        poly(ring, (1, {"x": 2}), (-1, {"y": 1})),
        poly(ring, (1, {"x": 1, "y": 1}), (-1, {"z": 1})),
    ]
    return ring, order, generators


class TestCoeffExt:
    """Test arithmetic in Q(sqrt 2)."""

    def test_unit(self):
        """Test (1 + sqrt 2)(-1 + sqrt 2) = 1."""
        assert CoeffExt(1, 1) * CoeffExt(-1, 1) == CoeffExt.one()

    def test_inverse(self):
        """Test that the inverse multiplies back to one."""
        c = CoeffExt(Fraction(3, 2), Fraction(-2))
        assert c * c.inverse() == CoeffExt.one()

    def test_zero_has_no_inverse(self):
        """Test that zero cannot be inverted."""
        with pytest.raises(ZeroDivisionError):
            CoeffExt.zero().inverse()

    def test_quadruple(self):
        """Test the [a_num, a_den, b_num, b_den] file encoding."""
        c = CoeffExt.from_quadruple([1, 2, -1, 3])
        assert c == CoeffExt(Fraction(1, 2), Fraction(-1, 3))
        assert c.to_quadruple() == [1, 2, -1, 3]

    def test_zero_denominator(self):
        """Test that a zero denominator is rejected."""
        with pytest.raises(DomainError, match="Zero denominator"):
            CoeffExt.from_quadruple([1, 0, 0, 1])


class TestOrders:
    """Test lex orders and monomial ideals."""

    def test_lex_compare(self):
        """Test that the first variable dominates."""
        order = MonomialOrder.natural(make_ring("x", "y", "z"))
        assert lex_compare(order, (1, 0, 0), (0, 5, 5)) == 1
        assert lex_compare(order, (0, 1, 0), (0, 1, 1)) == -1
        assert lex_compare(order, (2, 0, 1), (2, 0, 1)) == 0

    def test_custom_sequence(self):
        """Test a lex order along a non-natural sequence."""
        order = MonomialOrder(make_ring("x", "y"), ("y", "x"))
        assert lex_compare(order, (0, 1), (5, 0)) == 1

    def test_sequence_must_be_permutation(self):
        """Test that an order must list every variable once."""
        with pytest.raises(DomainError, match="permutation"):
            MonomialOrder(make_ring("x", "y"), ("x", "x"))

    def test_exponent_length_checked(self):
        """Test that exponent vectors must match the ring."""
        order = MonomialOrder.natural(make_ring("x", "y"))
        with pytest.raises(DomainError):
            lex_compare(order, (1, 0, 0), (0, 1))

    def test_ideal_keeps_minimal_generators(self):
        """Test that redundant generators are removed."""
        ring = make_ring("x", "y")
        ideal = MonomialIdeal.from_names(ring, [{"x": 2}, {"x": 2, "y": 1}, {"y": 3}])
        assert ideal.as_names() == {frozenset({("x", 2)}), frozenset({("y", 3)})}
        assert ideal.contains((3, 1))
        assert not ideal.contains((1, 2))
        assert not ideal.is_quadratic()


class TestBuchberger:
    """Test reduced Groebner bases."""

    def test_leading_terms(self, xyz):
        """Test the leading-term ideal of <x^2 - y, xy - z>."""
        ring, order, generators = xyz
        basis = buchberger(generators, order)
        lt = lt_ideal(basis, order)
        assert lt.as_names() == {
            frozenset({("x", 2)}),
            frozenset({("x", 1), ("y", 1)}),
            frozenset({("x", 1), ("z", 1)}),
            frozenset({("y", 3)}),
        }

    def test_matches_sympy(self, xyz):
        """Test the basis against sympy's reduced lex basis."""
        ring, order, generators = xyz
        gens = sympy.symbols("x y z")
        oracle = sympy.groebner([g.as_expr() for g in generators], *gens, order="lex")

        basis = buchberger(generators, order)
        ours = {sympy.expand(g.as_expr()) for g in basis}
        assert ours == {sympy.expand(g) for g in oracle.exprs}

    def test_result_is_groebner_basis(self, xyz):
        """Test the S-pair criterion on the result but not on the input."""
        _, order, generators = xyz
        assert not is_groebner_basis(generators, order)
        assert is_groebner_basis(buchberger(generators, order), order)

    def test_normal_form(self, xyz):
        """Test that x^3 reduces to z."""
        ring, order, generators = xyz
        basis = buchberger(generators, order)
        cube = poly(ring, (1, {"x": 3}))
        assert normal_form(cube, basis, order) == poly(ring, (1, {"z": 1}))

    def test_sqrt2_coefficients(self):
        """Test a basis over Q(sqrt 2): x^2 - 2y^2 and x - sqrt2 y generate x - sqrt2 y."""
        ring = make_ring("x", "y")
        order = MonomialOrder.natural(ring)
        linear = Polynomial(
            ring, {(1, 0): CoeffExt.one(), (0, 1): CoeffExt(Fraction(0), Fraction(-1))}
        )
        square = poly(ring, (1, {"x": 2}), (-2, {"y": 2}))
        basis = buchberger([square, linear], order)
        assert basis == [linear]

    def test_pair_queue_bound(self, xyz):
        """Test that the pair queue bound aborts the computation."""
        _, order, generators = xyz
        with pytest.raises(PairQueueOverflowError):
            buchberger(generators, order, max_pairs=0)

    def test_zero_generator_rejected(self, xyz):
        """Test that a zero generator is refused."""
        ring, order, generators = xyz
        with pytest.raises(DomainError, match="nonzero"):
            buchberger([*generators, Polynomial(ring)], order)
