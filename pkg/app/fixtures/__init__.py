"""Fixture corpus: flag-variety examples with ideals, orders, substitutions and resolutions."""

from app.fixtures.loader import (
    Fixture,
    build_fixture,
    dump_model,
    list_fixtures,
    load_fixture,
    load_model_file,
    parse_fixture,
    serialize_fixture,
)
from app.fixtures.models import FixtureFile, ModelFile, Provenance

__all__ = [
    "Fixture",
    "FixtureFile",
    "ModelFile",
    "Provenance",
    "build_fixture",
    "dump_model",
    "list_fixtures",
    "load_fixture",
    "load_model_file",
    "parse_fixture",
    "serialize_fixture",
]
