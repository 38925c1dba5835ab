"""Graph products of groups and their right-angled buildings."""
from .building import (
    BALL_CAP,
    CLOSURE_CAP,
    Hull,
    WPDResult,
    adjacent_chambers,
    apartment_section,
    ball,
    brute_force_wpd_check,
    combinatorial_hull,
    gallery_distance,
    interval,
    is_convex,
    neighbours,
    rac_normal_form,
    translate,
    weyl_distance,
)
from .normal_form import (
    IDENTITY,
    Chamber,
    NormalForm,
    format_normal_form,
    inverse,
    multiply,
    normal_form,
    parse_word,
    power,
    sort_key,
)
from .spec import GraphProductSpec, VertexGroup, is_irreducible_graph, join_partition

__all__ = [name for name in dir() if not name.startswith("_")]
