"""Exact classification and character evaluation for tame modules over the
ortho-symplectic Lie superalgebras osp(2m+1|2n) and osp(2m|2n)."""

from .exactnum import (
    HalfInt,
    LaurentPolynomial,
    NotDivisible,
    Weight,
    evaluate_at_one,
    exact_divide,
    monomial,
)
from .rootdata import (
    Algebra,
    BorelData,
    EpsDeltaSequence,
    FamilyMismatch,
    NotSimpleIsotropic,
    Root,
    WeylElement,
    apply_weyl,
    b_odd,
    b_standard,
    borel_from_sequence,
    odd_reflection,
    pairing,
    sigma_twist,
    weyl_alternating_sum,
    weyl_elements,
)
from .hook import (
    FrobeniusData,
    HookPartition,
    HookViolation,
    UnsupportedCase,
    frobenius_weight,
    highest_weight_via_reflections,
    natural_weight,
    transpose,
)
from .atyp import (
    NotTame,
    TamenessReport,
    atypicality_degree,
    distinguished_T_bodd,
    e_of_lambda,
    is_tame,
    j_lambda,
)
from .blocks import (
    BottomTrace,
    CentralCharFingerprint,
    InternalError,
    WrongRegime,
    admissibility_positivity,
    bottom_of_block,
    fingerprint,
    lambda_x_family,
    preceq,
    same_central_character,
)
from .characters import (
    CharacterResult,
    JDivisibilityFailure,
    denominators,
    dimension,
    euler_char_character,
    kw_character,
    supercharacter,
)

__version__ = "0.1.0"
