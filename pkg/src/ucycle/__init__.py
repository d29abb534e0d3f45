"""Uniformly random universal cycles over implicit de Bruijn graphs."""

from .euler import generate_random_ucycle, order_adjacency, traverse
from .families import (AllStrings, Family, Forbidden, MultisetPerm, Orientable, ShorthandPerm,
                       ShorthandSubset, WeakOrder, WeightRange, make_family)
from .oracle import verify_ucycle
from .rng import RandomStream
from .samplers import random_word
from .walk import random_arborescence

__all__ = [
    "AllStrings", "Family", "Forbidden", "MultisetPerm", "Orientable", "RandomStream",
    "ShorthandPerm", "ShorthandSubset", "WeakOrder", "WeightRange", "generate_random_ucycle",
    "make_family", "order_adjacency", "random_arborescence", "random_word", "traverse",
    "verify_ucycle",
]
