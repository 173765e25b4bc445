"""Exact arithmetic for the reciprocal quintinomials

    F(n, A, B) = x^(2^n) + A x^(3*2^(n-2)) + B x^(2^(n-1)) + A x^(2^(n-2)) + 1:

irreducibility with certificates, monogenicity through Dedekind's criterion,
Galois groups for n = 2, 3, and squarefree values of the associated
polynomials at primes.
"""

from .dedekind import MonogenicityVerdict, Status, dedekind_check, factor_integer, is_monogenic, squarefree
from .density import FactoredPoly, cg_truncated, density_report, ng_count, obstruction_scan, rho_ell2
from .ffield import ModPoly, factor_mod, is_prime
from .galois import GaloisClass, GaloisLabel, frobenius_fingerprint, octic_wreath, quartic_galois
from .poly import IntPoly, discriminant, resultant
from .quintinomial import (
    QuinInvariants,
    QuinParams,
    ReducibilityCert,
    build,
    disc_formula,
    invariants,
    irreducible,
    octic_family_membership,
    quin,
)
from .search import SearchRecord, classify, distinct_fields, grid_classify, item3_family

__version__ = "0.1.0"

__all__ = [
    "FactoredPoly",
    "GaloisClass",
    "GaloisLabel",
    "IntPoly",
    "ModPoly",
    "MonogenicityVerdict",
    "QuinInvariants",
    "QuinParams",
    "ReducibilityCert",
    "SearchRecord",
    "Status",
    "build",
    "cg_truncated",
    "classify",
    "dedekind_check",
    "density_report",
    "disc_formula",
    "discriminant",
    "distinct_fields",
    "factor_integer",
    "factor_mod",
    "frobenius_fingerprint",
    "grid_classify",
    "invariants",
    "irreducible",
    "is_monogenic",
    "is_prime",
    "item3_family",
    "ng_count",
    "obstruction_scan",
    "octic_family_membership",
    "octic_wreath",
    "quartic_galois",
    "quin",
    "resultant",
    "rho_ell2",
    "squarefree",
]
