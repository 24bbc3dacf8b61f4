from .betti import hochster_betti, koszul_betti, lcm_lattice, union_closure, upper_koszul_faces
from .homology import reduced_euler_characteristic, reduced_homology, reduced_homology_of, resolve_field
from .invariants import betti_table, eisenbud_goto_check, invariants_of_monomial, multiplicity

__all__ = [
    "reduced_homology",
    "reduced_homology_of",
    "reduced_euler_characteristic",
    "resolve_field",
    "hochster_betti",
    "koszul_betti",
    "lcm_lattice",
    "union_closure",
    "upper_koszul_faces",
    "betti_table",
    "invariants_of_monomial",
    "multiplicity",
    "eisenbud_goto_check",
]
