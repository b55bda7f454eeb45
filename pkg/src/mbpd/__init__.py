"""Marked bumpless pipedreams, reverse compatible pairs, and the exact
computation of Grothendieck polynomials by four independent methods."""

from .biwords import (
    Biletter,
    Rcp,
    enumerate_rcp,
    format_biword,
    parse_biword,
    pd_of_rcp,
    rcp_of_pd,
    rcp_permutation,
    rcp_weight,
)
from .bijection import (
    MoveRecord,
    PopResult,
    is_reduced_mbpd,
    is_reduced_rcp,
    phi,
    phi_trace,
    psi,
    psi_trace,
    row_pop,
    row_push,
)
from .grid import (
    Mbpd,
    Tile,
    asm_of,
    enumerate_mbpd,
    identity_mbpd,
    parse,
    render_ascii,
    rothe,
    serialize,
    validate,
    weight,
)
from .groth import (
    groth_from_mbpd,
    groth_from_pd,
    groth_from_rcp,
    groth_recursive,
    schubert,
)
from .moves import (
    DroopKind,
    ETarget,
    FTarget,
    droop,
    e_move,
    f_move,
    f_target_in_row,
    find_doublecross,
    find_e_target,
    find_f_target,
    undroop,
)
from .perms import (
    Permutation,
    demazure_left,
    demazure_right,
    hecke_product,
    mbpd_permutation,
)
from .pipedreams import PipeDream, enumerate_pd, pd_permutation, pd_weight
from .poly import Poly, divided_difference, pi_op

__version__ = "0.1.0"
