"""Adjacency labeling: codec, combinators and concrete schemes."""
from .core import (
    Bound,
    Label,
    Labeling,
    SplitStep,
    VerificationReport,
    cover_scheme,
    decode_adjacent,
    split_scheme,
    verify_labeling,
    width_for,
)
from .schemes import (
    SCHEMES,
    biclique_union_scheme,
    chain_scheme,
    constants_table,
    dk_scheme,
    double_star_degree,
    double_star_scheme,
    f1tt_scheme,
    ftt_scheme,
    get_scheme,
    one_sided_f1t1_scheme,
    one_sided_ft1_scheme,
    peel_scheme,
    s222_scheme,
    zk_scheme,
)

__all__ = [
    "Bound", "Label", "Labeling", "SplitStep", "VerificationReport", "cover_scheme", "decode_adjacent",
    "split_scheme", "verify_labeling", "width_for", "SCHEMES", "biclique_union_scheme", "chain_scheme",
    "constants_table", "dk_scheme", "double_star_degree", "double_star_scheme", "f1tt_scheme", "ftt_scheme",
    "get_scheme", "one_sided_f1t1_scheme", "one_sided_ft1_scheme", "peel_scheme", "s222_scheme", "zk_scheme",
]
