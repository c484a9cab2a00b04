"""Exact computation in affine Hecke algebras of based root data.

Subpackages are organized by layer: scalar arithmetic (``laurent``,
``finitefield``, ``padic``), Weyl-group combinatorics (``rootdata``),
the generic algebra itself (``hecke``), the general-linear
specialization (``gln``), standard modules and integral structures
(``modules``), and the command-line driver with its verification
suites (``cli``, ``suites``).
"""

from .laurent import HalfLaurent, LaurentRing, Specialization
from .finitefield import GF, FFElement, FiniteField
from .padic import MonomialPadic, PadicRing

__all__ = [
    "HalfLaurent",
    "LaurentRing",
    "Specialization",
    "GF",
    "FFElement",
    "FiniteField",
    "MonomialPadic",
    "PadicRing",
]

__version__ = "0.1.0"
