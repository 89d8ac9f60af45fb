"""Truncated q-series, q-Pochhammer symbols and character-valued series."""

from app.qseries.functions import inv_poch, poch, qbinom
from app.qseries.models import CharacterQSeries, QPolynomial, QSeries

__all__ = [
    "CharacterQSeries",
    "QPolynomial",
    "QSeries",
    "inv_poch",
    "poch",
    "qbinom",
]
