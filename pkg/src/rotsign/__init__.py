"""Signings of irreducible nonnegative integer matrices whose spectrum is a rotation of sp(A)."""

from rotsign.digraph import CyclicStructure, Digraph, cyclic_structure, digraph_of, is_strongly_connected, period
from rotsign.errors import (
    BaseMismatch,
    CapExceeded,
    NoClosedPath,
    OrderMismatch,
    ParseError,
    ReducibleError,
    RotsignError,
)
from rotsign.matrix_core import (
    NonnegMatrix,
    Permutation,
    SignDiagonal,
    Signing,
    conjugate_diag,
    conjugate_perm,
    realize,
)
from rotsign.signing import (
    AnalysisReport,
    admissible_alphas,
    analyze,
    construct_witness,
    decide_diag_similar,
    enumerate_class,
    membership,
)
from rotsign.spectrum import CharPoly, RotationFactor, char_poly, multiset_match, numeric_spectrum, rotation_check

__version__ = "0.1.0"
