"""cfl: exact computations on finite lattices, relations, and their modules."""

from .exact import ExactMatrix, PrimeField, RATIONALS, parse_ring
from .lattices import (JoinMap, Lattice, LatticeError, Poset, chain,
                       ideal_lattice, irreducibles, is_distributive,
                       lattice_from_json, lattice_from_leq, lattice_to_json,
                       mobius)
from .morphisms import ChainTuple, LinMorphism
from .relations import Correspondence, Permutation, delta, order_flags
from .suite import Limits, run_suite

__all__ = [
    "ChainTuple", "Correspondence", "ExactMatrix", "JoinMap", "Lattice",
    "LatticeError", "Limits", "LinMorphism", "Permutation", "Poset",
    "PrimeField", "RATIONALS", "chain", "delta", "ideal_lattice",
    "irreducibles", "is_distributive", "lattice_from_json", "lattice_from_leq",
    "lattice_to_json", "mobius", "order_flags", "parse_ring", "run_suite",
]

__version__ = "0.1.0"
