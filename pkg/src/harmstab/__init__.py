"""Exact computer algebra for harmonic coproducts on the free algebra
on two generators: derivations, the Ihara-type bracket, the slot
decomposition of the coproduct action, and degree-by-degree equality of
the two stabilizer Lie algebras."""

from .freealg import (
    E0,
    E1,
    LyndonElement,
    NCPoly,
    bracket,
    is_lie_element,
    lyndon_basis,
    witt_dimension,
    word_from_letters,
    word_from_str,
    word_to_str,
)
from .walg import (
    Composition,
    MElem,
    Tensor2,
    WPoly,
    deg,
    deg1,
    deg2,
    deg_prime,
    epsilon,
    inv,
    m_from_y_alphabet,
    m_to_y_alphabet,
    partial,
    partial_prime,
    pi,
    sigma,
    to_m,
    w_from_v,
    w_to_v,
    y_embed,
    ytilde,
)
from .coproducts import (
    PrimitiveBasis,
    delta_m,
    delta_seq,
    delta_w,
    primitive_defect,
    primitives_basis,
)
from .derivations import (
    DerivationHandle,
    act_m,
    act_w,
    apply_derivation,
    der_m10,
    der_v1,
    der_v10,
    der_w1,
    ihara_bracket,
    theta,
)
from .decomposition import (
    HTriple,
    bound_N,
    bound_N_prime,
    in_im_j,
    map_H,
    map_L,
    map_Mi,
    map_R,
    map_h,
    map_h_eval,
    map_i_eval,
    map_j,
    stabilization_report,
    verify_decomposition,
)
from .stabilizers import (
    GradedSubspace,
    check_inclusion_aux,
    stab_m_lie,
    stab_w_lie,
    stab_w_v0,
    verify_main_equality,
)

__version__ = "0.1.0"
