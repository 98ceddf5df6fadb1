"""Exact computations with highest-weight Harish-Chandra supermodules."""
from .rootsys import Family, Root, SuperRootSystem, build_root_system, coroot_pair, is_isotropic, pairing, parse_family

__all__ = ["Family", "Root", "SuperRootSystem", "build_root_system", "coroot_pair", "is_isotropic",
           "pairing", "parse_family"]
__version__ = "0.1.0"
