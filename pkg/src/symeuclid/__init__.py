"""Continuant calculus for the Euclidean algorithm with palindromic quotients.

The library traces the Euclidean algorithm on coprime pairs, recognizes
the pairs whose quotient list is an even palindrome (exactly the square
roots of -1 mod n), reads off the two-squares decomposition of n from
the remainders, expresses every remainder through continuants of the
half quotient sequence, enumerates two families of quadratic-form
identities among the remainders, and nests palindromic continued
fractions.  Brute-force counterparts in `oracle` and the property suite
in `verify` cross-check everything by independent routes.
"""

from .continuants import (
    ContinuantTable,
    cf_eval,
    continuant,
    continuant_table,
    euler_identity_holds,
    palindrome,
    reverse,
)
from .errors import (
    DomainError,
    InternalCheckError,
    NotCoprimeError,
    NotSqrtMinusOneError,
    NotSymmetricError,
    SweepBoundError,
)
from .euclid import (
    DEFAULT_MAX_SWEEP,
    EuclidTrace,
    apply_convention,
    euclid_trace,
    is_sqrt_minus_one,
    max_sweep,
    sqrt_minus_one_all,
    symmetric_trace,
)
from .identities import (
    FormIdentity,
    NestChain,
    RemainderFormulaRow,
    enumerate_identities,
    form_identity,
    nest_chain,
    nest_step,
    remainder_formulas,
)
from .two_squares import TwoSquares, all_primitive_representations, brillhart

__version__ = "0.1.0"

__all__ = [
    "ContinuantTable",
    "DEFAULT_MAX_SWEEP",
    "DomainError",
    "EuclidTrace",
    "FormIdentity",
    "InternalCheckError",
    "NestChain",
    "NotCoprimeError",
    "NotSqrtMinusOneError",
    "NotSymmetricError",
    "RemainderFormulaRow",
    "SweepBoundError",
    "TwoSquares",
    "all_primitive_representations",
    "apply_convention",
    "brillhart",
    "cf_eval",
    "continuant",
    "continuant_table",
    "enumerate_identities",
    "euclid_trace",
    "euler_identity_holds",
    "form_identity",
    "is_sqrt_minus_one",
    "max_sweep",
    "nest_chain",
    "nest_step",
    "palindrome",
    "remainder_formulas",
    "reverse",
    "sqrt_minus_one_all",
    "symmetric_trace",
]
