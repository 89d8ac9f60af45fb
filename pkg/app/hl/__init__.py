"""Modified Hall-Littlewood polynomials via the fermionic formula."""

from app.hl.fermionic import (
    assemble,
    at_q_one,
    cocharge,
    configurations,
    fermionic_poly,
    fermionic_terms,
    modified_hl,
    phi,
    require_supported_pattern,
    vacancy,
)
from app.hl.models import FermionicData, HLConfiguration

__all__ = [
    "FermionicData",
    "HLConfiguration",
    "assemble",
    "at_q_one",
    "cocharge",
    "configurations",
    "fermionic_poly",
    "fermionic_terms",
    "modified_hl",
    "phi",
    "require_supported_pattern",
    "vacancy",
]
