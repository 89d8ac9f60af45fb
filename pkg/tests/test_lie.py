"""Tests for root data, weights and characters."""

from itertools import product

import pytest

from app.errors import (
    ConfigurationError,
    DomainError,
    NotAVirtualCharacterError,
    WeightsNotImplementedError,
)
from app.lie import (
    Character,
    Weight,
    algebra_from_name,
    build_algebra,
    decompose,
    irreducible_character,
    rep_weights,
    tensor_decompose,
    weyl_dim,
)
from app.qseries import QPolynomial


def w(*labels: int) -> Weight:
    return Weight(labels)


class TestAlgebra:
    """Test algebra construction from names and Cartan types."""

    def test_names(self):
        """Test that sl and odd so names map to A and B."""
        assert algebra_from_name("sl3").name == "sl3"
        assert algebra_from_name("so5").rank == 2
        assert algebra_from_name("so7").rank == 3

    def test_unknown_name(self):
        """Test that unsupported names are rejected."""
        with pytest.raises(ConfigurationError, match="Unknown algebra"):
            algebra_from_name("g2")

    def test_even_orthogonal_rejected(self):
        """Test that so(2n) is not supported."""
        with pytest.raises(ConfigurationError, match="odd orthogonal"):
            algebra_from_name("so6")

    def test_unsupported_rank(self):
        """Test that B1 is not built."""
        with pytest.raises(ConfigurationError):
            build_algebra("B", 1)

    def test_cartan_matrix_b2(self):
        """Test the B2 Cartan matrix; row i holds the Dynkin labels of alpha_i."""
        so5 = algebra_from_name("so5")
        assert so5.cartan_matrix == ((2, -2), (-1, 2))

    def test_fundamental_dimensions(self):
        """Test dimensions of the fundamental representations."""
        assert algebra_from_name("sl4").fund_rep_dims == (4, 6, 4)
        assert algebra_from_name("so5").fund_rep_dims == (5, 4)
        assert algebra_from_name("so7").fund_rep_dims == (7, 21, 8)

    def test_highest_weight_rank_checked(self):
        """Test that a weight of the wrong rank is rejected."""
        with pytest.raises(DomainError, match="rank"):
            algebra_from_name("sl3").highest_weight([1, 0, 0])


class TestRepWeights:
    """Test coordinate labels and weights of fundamental representations."""

    def test_sl3_vector(self):
        """Test the defining representation of sl3."""
        weights = rep_weights(algebra_from_name("sl3"), 1)
        assert weights == [("x1", w(1, 0)), ("x2", w(-1, 1)), ("x3", w(0, -1))]

    def test_sl3_dual(self):
        """Test the second fundamental representation of sl3."""
        weights = rep_weights(algebra_from_name("sl3"), 2)
        assert [label for label, _ in weights] == ["x12", "x13", "x23"]
        assert weights[0][1] == w(0, 1)

    def test_so5_vector_labels(self):
        """Test the vector representation of so5 including the zero weight."""
        weights = rep_weights(algebra_from_name("so5"), 1)
        assert [label for label, _ in weights] == ["x1", "x2", "x0", "x2b", "x1b"]
        assert dict(weights)["x0"] == w(0, 0)
        assert dict(weights)["x2"] == w(-1, 2)

    def test_so5_spinor(self):
        """Test the spinor representation of so5."""
        weights = rep_weights(algebra_from_name("so5"), 2)
        assert weights == [
            ("xpp", w(0, 1)),
            ("xpm", w(1, -1)),
            ("xmp", w(-1, 1)),
            ("xmm", w(0, -1)),
        ]

    def test_so7_inner_fundamental_not_implemented(self):
        """Test that inner B-series fundamentals are refused."""
        with pytest.raises(WeightsNotImplementedError, match="Lambda_2"):
            rep_weights(algebra_from_name("so7"), 2)

    @pytest.mark.parametrize(("name", "i"), [("sl3", 1), ("sl4", 2), ("so5", 1), ("so7", 3)])
    def test_weights_match_character(self, name, i):
        """Test that the coordinate weights form the fundamental character."""
        algebra = algebra_from_name(name)
        weights = Character.from_weights(wt for _, wt in rep_weights(algebra, i))
        assert weights == irreducible_character(algebra, algebra.fundamental_weight(i))


class TestCharacters:
    """Test Weyl dimensions, Freudenthal multiplicities and tensor products."""

    @pytest.mark.parametrize(
        ("name", "labels", "dim"),
        [
            ("sl2", (3,), 4),
            ("sl3", (1, 1), 8),
            ("sl3", (2, 0), 6),
            ("sl4", (0, 1, 0), 6),
            ("so5", (1, 1), 16),
            ("so5", (0, 2), 10),
            ("so7", (0, 0, 1), 8),
        ],
    )
    def test_weyl_dim(self, name, labels, dim):
        """Test dimensions against known values."""
        assert weyl_dim(algebra_from_name(name), w(*labels)) == dim

    def test_weyl_dim_requires_dominant(self):
        """Test that a non-dominant weight is rejected."""
        with pytest.raises(DomainError, match="not dominant"):
            weyl_dim(algebra_from_name("sl3"), w(-1, 1))

    @pytest.mark.parametrize(
        ("name", "labels"),
        [("sl3", (2, 1)), ("sl4", (1, 0, 1)), ("so5", (1, 2)), ("so7", (1, 0, 1))],
    )
    def test_character_mass_is_dimension(self, name, labels):
        """Test that Freudenthal multiplicities sum to the Weyl dimension."""
        algebra = algebra_from_name(name)
        character = irreducible_character(algebra, w(*labels))
        assert character.mass() == weyl_dim(algebra, w(*labels))
        assert algebra.is_weyl_symmetric(character.support)

    def test_adjoint_zero_weight(self):
        """Test that the zero weight of the adjoint has multiplicity equal to the rank."""
        assert irreducible_character(algebra_from_name("sl3"), w(1, 1)).multiplicity(w(0, 0)) == 2
        assert irreducible_character(algebra_from_name("so5"), w(0, 2)).multiplicity(w(0, 0)) == 2

    def test_sl3_tensor(self):
        """Test V (x) V = Sym^2 V + Lambda^2 V for sl3."""
        assert tensor_decompose(algebra_from_name("sl3"), w(1, 0), w(1, 0)) == {
            w(0, 1): 1,
            w(2, 0): 1,
        }

    def test_so5_vector_square(self):
        """Test the decomposition of the tensor square of the so5 vector."""
        assert tensor_decompose(algebra_from_name("so5"), w(1, 0), w(1, 0)) == {
            w(0, 0): 1,
            w(0, 2): 1,
            w(2, 0): 1,
        }

    def test_so5_spinor_square(self):
        """Test the decomposition of the tensor square of the so5 spinor."""
        assert tensor_decompose(algebra_from_name("so5"), w(0, 1), w(0, 1)) == {
            w(0, 0): 1,
            w(0, 2): 1,
            w(1, 0): 1,
        }

    def test_dual_character(self):
        """Test that the dual of the sl3 vector is the second fundamental."""
        sl3 = algebra_from_name("sl3")
        assert irreducible_character(sl3, w(1, 0)).dual() == irreducible_character(sl3, w(0, 1))


def dominant_weights(rank: int, total: int) -> list[Weight]:
    labels = product(range(total + 1), repeat=rank)
    return [Weight(values) for values in labels if sum(values) <= total]


class TestDecompose:
    """Test stripping virtual characters into irreducibles."""

    @pytest.mark.parametrize("name", ["sl2", "sl3", "sl4", "so5", "so7"])
    def test_irreducible_round_trip(self, name):
        """Test that an irreducible character decomposes to itself."""
        algebra = algebra_from_name(name)
        for lam in dominant_weights(algebra.rank, 4):
            assert decompose(algebra, irreducible_character(algebra, lam).support) == {lam: 1}

    @pytest.mark.parametrize(
        ("name", "left", "right", "expected"),
        [
            ("sl3", (1, 0), (0, 1), [(1, 1), (0, 0)]),
            ("sl4", (1, 0, 0), (0, 0, 1), [(1, 0, 1), (0, 0, 0)]),
            ("sl4", (1, 0, 0), (0, 1, 0), [(1, 1, 0), (0, 0, 1)]),
            ("sl4", (0, 1, 0), (0, 0, 1), [(0, 1, 1), (1, 0, 0)]),
            ("so5", (1, 0), (0, 1), [(1, 1), (0, 1)]),
            ("so7", (1, 0, 0), (0, 0, 1), [(1, 0, 1), (0, 0, 1)]),
        ],
    )
    def test_fundamental_products(self, name, left, right, expected):
        """Test products of fundamentals and the matching dimension count."""
        algebra = algebra_from_name(name)
        result = tensor_decompose(algebra, w(*left), w(*right))
        assert result == {w(*labels): 1 for labels in expected}
        product_dim = weyl_dim(algebra, w(*left)) * weyl_dim(algebra, w(*right))
        assert product_dim == sum(m * weyl_dim(algebra, mu) for mu, m in result.items())

    def test_not_weyl_symmetric(self):
        """Test that a lone non-zero weight is not a virtual character."""
        with pytest.raises(NotAVirtualCharacterError, match="Weyl symmetric"):
            decompose(algebra_from_name("sl3"), {w(1, 0): 1})

    def test_q_polynomial_coefficients(self):
        """Test decomposing (1 + 2q) ch L(1,1) + q^2 ch L(0,0)."""
        sl3 = algebra_from_name("sl3")
        head = QPolynomial((1, 2))
        values = {mu: head * m for mu, m in irreducible_character(sl3, w(1, 1)).support.items()}
        values[w(0, 0)] = values[w(0, 0)] + QPolynomial.monomial(2)

        assert decompose(sl3, values) == {w(0, 0): QPolynomial.monomial(2), w(1, 1): head}
