"""Exact computation in Coxeter and Weyl groups."""
from .conjugacy import conjugation_closure, is_straight_up_to, min_length_conjugate, power_lengths
from .regular import (
    RegularityCertificate,
    RegularityVerdict,
    StraightnessCertificate,
    StraightnessVerdict,
    certify_regular,
    certify_straight,
    matrix_order,
)
from .roots import (
    Root,
    apply_to_root,
    coroot,
    enumerate_roots,
    find_separated_wall_pair,
    pairing,
    pairing_product,
    simple_root,
    walls_cross,
)
from .system import (
    CoxeterSystem,
    WeylElement,
    coxeter_element,
    element_of_word,
    format_word,
    length,
    length_and_reduced_word,
    with_word,
)

__all__ = [name for name in dir() if not name.startswith("_")]
