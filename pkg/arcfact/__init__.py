"""
arcfact - factorization and s-arc-transitivity toolkit for finite permutation groups.
"""

__version__ = "0.1.0"
