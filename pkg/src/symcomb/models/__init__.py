from .betti import BettiTable, EisenbudGotoReport, MonomialInvariants
from .complex import Face, FacetWitness, SimplicialComplex
from .cover import (
    CoverClass,
    DimensionEstimate,
    Infeasible,
    KCover,
    VariableWeight,
    WeightedComplex,
)
from .monomial import Monomial, MonomialIdeal, minimalize
from .partition import (
    BiDiagram,
    IdentityReport,
    MinorsParams,
    Partition,
    RegularityInfo,
    RelationBounds,
    partitions_of,
)
from .polar import IndexedPrime, ObstructionResult, PolarizedIdeal
from .polynomial import DeformationReport, FlatFamilyReport, GroebnerBasis, Polynomial, TermOrder
from .report import Report

__all__ = [
    "BettiTable",
    "BiDiagram",
    "CoverClass",
    "DeformationReport",
    "DimensionEstimate",
    "EisenbudGotoReport",
    "Face",
    "FacetWitness",
    "FlatFamilyReport",
    "GroebnerBasis",
    "IdentityReport",
    "IndexedPrime",
    "Infeasible",
    "KCover",
    "MinorsParams",
    "Monomial",
    "MonomialIdeal",
    "MonomialInvariants",
    "ObstructionResult",
    "Partition",
    "PolarizedIdeal",
    "RegularityInfo",
    "RelationBounds",
    "Polynomial",
    "Report",
    "SimplicialComplex",
    "TermOrder",
    "VariableWeight",
    "WeightedComplex",
    "minimalize",
    "partitions_of",
]
