"""Exact computations with nilpotent generators of sp_2n."""
from spgen._backend import BACKEND
from spgen.completion import CompletionFailed, CompletionResult, complete_nilpotent
from spgen.constructions import (
    GeneratorPair,
    example1_pair,
    lemma3_pair,
    lemma3_T,
    prop3_condition_check,
    prop3_pair,
    verify_lemma3_conjugation,
)
from spgen.exactnum import CycloElement, Poly, cyclo_inv, cyclotomic_polynomial, poly_gcd
from spgen.genverify import (
    Certificate,
    ClosureResult,
    bracket_closure,
    consistent_check,
    generates_sp,
    vandermonde_closure,
    verify_certificate,
)
from spgen.linalg import (
    LinAlgError,
    Mat,
    SpanBasis,
    charpoly,
    commutator,
    exp_nilpotent,
    mat_inv,
    rank,
    span_insert,
)
from spgen.sp_lie import (
    SpContext,
    ad_matrix,
    conjugate,
    coords,
    is_member,
    is_nilpotent,
    make_context,
    random_symplectic,
)

__version__ = "0.1.0"
