"""Exact finite rings, monoid rings, radicals and bounded Armendariz-type verdicts."""

from .catalog import monoid, ring
from .rings import FiniteRing, RingError, SearchBudgetExceeded, SizeCapExceeded, make_zmod
from .verdicts import FAILS, HOLDS, Verdict, check_armendariz

__version__ = "0.1.0"

__all__ = ["FAILS", "HOLDS", "FiniteRing", "RingError", "SearchBudgetExceeded", "SizeCapExceeded",
           "Verdict", "check_armendariz", "make_zmod", "monoid", "ring"]
