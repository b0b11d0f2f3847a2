"""ut-lab: homogeneity and universal-transversal deciders for permutation groups."""

from .perm_core import PermGroup, Permutation, compose, group_order, invert
from .partitions import SetPartition, SubPartition

__all__ = [
    "PermGroup",
    "Permutation",
    "SetPartition",
    "SubPartition",
    "compose",
    "group_order",
    "invert",
]

__version__ = "0.1.0"
