"""Fitting-type subgroup functorials on finite permutation groups."""

__version__ = "0.1.0"

from .config import Caps, CapExceeded, GroupError, using_caps
from .perm import Permutation, compose, invert
from .group import Group, Subgroup, build_chain, direct_product, quotient
from .functorials import evaluate, check_axioms
from .parsing import parse_functorial, parse_group_file

__all__ = [
    "Caps", "CapExceeded", "GroupError", "using_caps",
    "Permutation", "compose", "invert",
    "Group", "Subgroup", "build_chain", "direct_product", "quotient",
    "evaluate", "check_axioms", "parse_functorial", "parse_group_file",
]
