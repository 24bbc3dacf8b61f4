# src/symcomb/__init__.py

from .exceptions import SymcombError
from .models import MonomialIdeal, Report, SimplicialComplex, WeightedComplex
from .simplicial import from_facets, is_matroid

__version__ = "1.0.0"

__all__ = [
    "__version__",
    "SymcombError",
    "SimplicialComplex",
    "WeightedComplex",
    "MonomialIdeal",
    "Report",
    "from_facets",
    "is_matroid",
]
