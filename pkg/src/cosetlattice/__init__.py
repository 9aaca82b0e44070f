"""Subgroup intervals [H, G] of finite permutation groups: lattices, totients, coset posets."""

from .catalog import CatalogEntry, find_entry, load_catalog, load_fixtures
from .complexes import build_coset_poset, coset_complex_homology, is_cohen_macaulay, poset_homology
from .errors import CosetLatticeError
from .invariants import is_strongly_w_cyclic, is_w_cyclic, lambda_
from .lattice import build_interval, is_boolean, is_group_complemented
from .perm import Permutation, PermGroup, Subgroup, group_from_generators, stabilizer
from .totient import dual_euler_totient, euler_totient_direct, euler_totient_moebius

__version__ = "0.1.0"
