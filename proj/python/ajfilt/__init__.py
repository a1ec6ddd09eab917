"""Exact computations in the Johnson filtration of Aut(F_n)."""

from ._core import (
    NotInFiltration,
    NotLieElement,
    ParseError,
    bracketing,
    compile_aut,
    ep_coeffs,
    expand_lyndon,
    filtration_degree,
    gr_rank_psn,
    growth_check,
    hi_lower_bound,
    injectivity,
    johnson_degree,
    leading_lie,
    lie_to_lyndon,
    lyndon_words,
    magnus_expand,
    reduce_word,
    summand_ranks,
    tau,
    verify_lie_morphism,
    verify_mccool,
    verify_prop62,
    witt_rank,
)

__all__ = [name for name in dir() if not name.startswith("_")]
