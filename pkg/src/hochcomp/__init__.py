"""Hochschild cohomology, cup product and Gerstenhaber bracket of
monomial path algebras ``kQ/I``, computed exactly through Bardzell's
minimal resolution and explicit comparison morphisms with the bar
resolution."""

__version__ = "0.1.0"

from .algebra import AlgebraError, MonomialAlgebra, build_algebra
from .cohomology import Cochain, HochschildComplex, complex_of, hh, hh_center_oracle
from .comparison import Comparison, comparison
from .corpus import corpus_names, load, load_corpus
from .fields import RATIONALS, Field, parse_field
from .gerstenhaber import (bracket, circ, circ_i, cup, cup_even_fast, delta_action,
                           delta_cochain, product_tables)
from .quiver import InputError, Path, Quiver, parse_input
from .resolution import APElement, BardzellResolution, resolution

__all__ = [
    "APElement", "AlgebraError", "BardzellResolution", "Cochain", "Comparison", "Field",
    "HochschildComplex", "InputError", "MonomialAlgebra", "Path", "Quiver", "RATIONALS",
    "bracket", "build_algebra", "circ", "circ_i", "comparison", "complex_of", "corpus_names",
    "cup", "cup_even_fast", "delta_action", "delta_cochain", "hh", "hh_center_oracle", "load",
    "load_corpus", "parse_field", "parse_input", "product_tables", "resolution",
]
