"""Tests for the fixture corpus and its loader."""

import json

import pytest

from app.affine import hilbert_affinized
from app.errors import FixtureError, PairQueueOverflowError
from app.fixtures import (
    Provenance,
    build_fixture,
    dump_model,
    list_fixtures,
    load_fixture,
    load_model_file,
    parse_fixture,
    serialize_fixture,
)
from app.groebner import Polynomial


def minimal_fixture(**overrides) -> dict:
    data = {
        "name": "tiny",
        "algebra": {"family": "A", "rank": 1},
        "reps": [1],
        "provenance": "paper-ideal",
        "variables": [
            {"name": "a", "multidegree": [1], "dynkin": [1]},
            {"name": "b", "multidegree": [1], "dynkin": [-1]},
        ],
        "order": ["a", "b"],
        "generators": [],
    }
    data.update(overrides)
    return data


class TestCorpus:
    """Test the bundled fixtures."""

    def test_list(self):
        """Test that every bundled fixture is listed."""
        assert [f.name for f in list_fixtures()] == ["sl2", "sl3", "sl4", "so5", "so7"]

    @pytest.mark.parametrize("name", ["sl2", "sl3", "sl4", "so5"])
    def test_leading_terms_match_expectation(self, name):
        """Test the computed leading-term ideal against the stored one."""
        fixture = load_fixture(name)
        assert fixture.lt_ideal().as_names() == fixture.expected_lt().as_names()

    @pytest.mark.parametrize("name", ["sl3", "sl4", "so5", "so7"])
    def test_model_pairs_match_expectation(self, name):
        """Test the quadratic model's pairs against the stored ones."""
        fixture = load_fixture(name)
        expected = {tuple(sorted(p)) for p in fixture.spec.expected_pairs}
        assert set(fixture.model().pair_names()) == expected

    def test_so5_basis_contains_tau(self):
        """Test that the so5 basis holds the cubic sigma*x_{-+} - x_1b*sigma_{++} up to scaling."""
        fixture = load_fixture("so5")
        ring, order = fixture.ring, fixture.order
        named = {
            p.label: poly
            for p, poly in zip(fixture.spec.generators, fixture.generators, strict=True)
        }
        xmp = Polynomial.from_monomial(ring, ring.monomial({"xmp": 1}))
        x1b = Polynomial.from_monomial(ring, ring.monomial({"x1b": 1}))
        tau = named["sigma"] * xmp - x1b * named["sigma_pp"]

        basis = [g.monic(order) for g in fixture.groebner_basis()]
        assert tau.monic(order) in basis
        assert tau.leading(order)[0] == ring.monomial({"x2": 1, "x2b": 1, "xmp": 1})

    def test_model_cache_respects_pair_budget(self):
        """Test that a tighter pair budget is not answered from the cached model."""
        fixture = build_fixture(load_fixture("so5").spec)
        assert fixture.model().pair_names()
        with pytest.raises(PairQueueOverflowError):
            fixture.model(max_pairs=0)

    def test_lt_only_fixture_has_no_generators(self):
        """Test that a leading-terms-only fixture refuses Buchberger."""
        fixture = load_fixture("so7")
        assert fixture.provenance == Provenance.PAPER_LT
        with pytest.raises(FixtureError, match="paper-LT"):
            fixture.groebner_basis()

    def test_greedy_model_has_same_series(self):
        """Test that greedy quadratization of so5 gives the same Hilbert series."""
        fixture = load_fixture("so5")
        stored = hilbert_affinized(fixture.model(), [1, 1], 4)
        greedy = hilbert_affinized(fixture.model(greedy=True), [1, 1], 4)
        assert greedy == stored

    def test_missing(self):
        """Test that an unknown fixture name is reported."""
        with pytest.raises(FixtureError, match="not found"):
            load_fixture("e8")


class TestLoader:
    """Test parsing, validation and serialization."""

    def test_invalid_json(self):
        """Test that a malformed fixture is rejected."""
        with pytest.raises(FixtureError, match="Invalid fixture"):
            parse_fixture("{}")

    def test_order_must_cover_variables(self):
        """Test that the order lists every variable."""
        with pytest.raises(FixtureError, match="order"):
            parse_fixture(json.dumps(minimal_fixture(order=["a"])))

    def test_inhomogeneous_generator(self):
        """Test that generators must be homogeneous in multidegree and weight."""
        generator = {
            "label": "bad",
            "terms": [{"monomial": {"a": 1, "b": 1}}, {"monomial": {"a": 2}}],
        }
        spec = parse_fixture(json.dumps(minimal_fixture(generators=[generator])))
        with pytest.raises(FixtureError, match="not homogeneous"):
            build_fixture(spec)

    def test_unknown_variable(self):
        """Test that generators may only use declared variables."""
        generator = {"terms": [{"monomial": {"c": 2}}]}
        spec = parse_fixture(json.dumps(minimal_fixture(generators=[generator])))
        with pytest.raises(FixtureError, match="Unknown variable"):
            build_fixture(spec)

    @pytest.mark.parametrize("monomial", [{}, {"a": 0}, {"a": 2, "b": -1}])
    def test_stored_leading_term_needs_positive_powers(self, monomial):
        """Test that stored leading terms are real monomials of positive degree."""
        data = minimal_fixture(provenance="paper-LT", lt_generators=[{"a": 1, "b": 1}, monomial])
        with pytest.raises(FixtureError, match="positive powers"):
            build_fixture(parse_fixture(json.dumps(data)))

    def test_stored_leading_term_unknown_variable(self):
        """Test that stored leading terms may only use declared variables."""
        data = minimal_fixture(provenance="paper-LT", lt_generators=[{"c": 2}])
        with pytest.raises(FixtureError, match="Unknown variable"):
            build_fixture(parse_fixture(json.dumps(data)))

    def test_stored_leading_terms_accepted(self):
        """Test that a well-formed leading-terms-only fixture builds its ideal."""
        data = minimal_fixture(provenance="paper-LT", lt_generators=[{"a": 1, "b": 1}])
        fixture = build_fixture(parse_fixture(json.dumps(data)))
        assert fixture.lt_ideal().as_names() == {frozenset({("a", 1), ("b", 1)})}

    def test_serialize_is_stable(self):
        """Test that canonical JSON reparses to the same generators."""
        fixture = load_fixture("so5")
        text = serialize_fixture(fixture)
        again = build_fixture(parse_fixture(text))
        assert again.generators == fixture.generators
        assert serialize_fixture(again) == text

    def test_model_file(self, tmp_path):
        """Test writing and reading a quadratic model."""
        model = load_fixture("so5").model()
        path = tmp_path / "so5-model.json"
        path.write_text(dump_model(model), encoding="utf-8")

        loaded = load_model_file(path)
        assert loaded.pair_names() == model.pair_names()
        assert loaded.aux_names() == model.aux_names()

    def test_bad_model_file(self, tmp_path):
        """Test that an unreadable model file is a fixture error."""
        with pytest.raises(FixtureError, match="Invalid model file"):
            load_model_file(tmp_path / "missing.json")
