"""Exact computations on parabolic coset posets of finite Coxeter groups."""
from .burnside import BurnsideElement, BurnsideRing, ring
from .chambers import chamber_ascent_character, choose_rho, positive_complex, shelling_order, shelling_types
from .coxgroup import Group, GroupSymbol, build_group
from .cosetposet import CosetPoset, build_coset_poset
from .errors import (
    CosetLabError,
    NonGeneric,
    NotIdeal,
    NotParabolic,
    ShellingViolation,
    SizeCap,
    UnsupportedType,
)
from .flats import Lattice, build_lattice

__version__ = "0.1.0"

__all__ = [
    "BurnsideElement",
    "BurnsideRing",
    "CosetLabError",
    "CosetPoset",
    "Group",
    "GroupSymbol",
    "Lattice",
    "NonGeneric",
    "NotIdeal",
    "NotParabolic",
    "ShellingViolation",
    "SizeCap",
    "UnsupportedType",
    "build_coset_poset",
    "build_group",
    "build_lattice",
    "chamber_ascent_character",
    "choose_rho",
    "positive_complex",
    "ring",
    "shelling_order",
    "shelling_types",
]
