from .necklace import Gadget, color_necklace, gadget_decompose
from .oddhole import color_odd_hole, extend_to_first_neighborhood, pair_property_violations
from .pipelines import (
    decide_auto,
    decide_n12k,
    decide_n113,
    decide_n222_no_c5,
    decide_n222_with_c5,
    decide_root,
    size_bound,
)
from .verdict import Verdict

__all__ = [
    "Gadget",
    "Verdict",
    "color_necklace",
    "color_odd_hole",
    "decide_auto",
    "decide_n113",
    "decide_n12k",
    "decide_n222_no_c5",
    "decide_n222_with_c5",
    "decide_root",
    "extend_to_first_neighborhood",
    "gadget_decompose",
    "pair_property_violations",
    "size_bound",
]
