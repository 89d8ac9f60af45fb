"""Executable checks for the q-identities, manifest forms and conjectures."""

from app.verify.conjectures import (
    check_conjecture_51,
    check_q_one_limit,
    normalized_hilbert,
    q_one_limit,
)
from app.verify.identities import (
    chain_alternating,
    chain_multisum,
    check_chain_quadratization,
    check_identity_35,
    check_identity_36,
    check_identity_313_316,
)
from app.verify.manifest import ManifestCase, check_manifest, manifest_form
from app.verify.models import (
    CheckReport,
    CheckStatus,
    ResolutionData,
    ResolutionTerm,
    Witness,
)
from app.verify.resolutions import (
    check_conjecture_21,
    check_conjecture_21_case,
    check_dim_243,
    check_euler_poincare,
    dim_243,
    euler_poincare_finite,
    resolution_from_fixture,
)
from app.verify.runner import CheckSpec, default_suite, run_check, run_checks, select

__all__ = [
    "CheckReport",
    "CheckSpec",
    "CheckStatus",
    "ManifestCase",
    "ResolutionData",
    "ResolutionTerm",
    "Witness",
    "chain_alternating",
    "chain_multisum",
    "check_chain_quadratization",
    "check_conjecture_21",
    "check_conjecture_21_case",
    "check_conjecture_51",
    "check_dim_243",
    "check_euler_poincare",
    "check_identity_35",
    "check_identity_36",
    "check_identity_313_316",
    "check_manifest",
    "check_q_one_limit",
    "default_suite",
    "dim_243",
    "euler_poincare_finite",
    "manifest_form",
    "normalized_hilbert",
    "q_one_limit",
    "resolution_from_fixture",
    "run_check",
    "run_checks",
    "select",
]
