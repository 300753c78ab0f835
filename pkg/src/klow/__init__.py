"""Exact-arithmetic workbench for the lower K-theory of finite rings:
K0 and K1 of concrete finite rings, relative and nonunital K-groups with
the excision boundary map, the matrix identities behind them (Whitehead
factorization, sum-ring, cone, Toeplitz), and the cyclic/bar homology
obstruction to K-excision for rational algebras."""

from . import (abgroups, cache, catalog, cone, errors, excision, groups,
               homology, intlinalg, kone, kzero, rings, rmatrix, toeplitz)

__version__ = "0.1.0"

__all__ = [
    "abgroups", "cache", "catalog", "cone", "errors", "excision", "groups",
    "homology", "intlinalg", "kone", "kzero", "rings", "rmatrix", "toeplitz",
    "__version__",
]
