"""Ascent sequences, (2+2)-free posets, their bijection, and exact
truncated generating-function checks.

Everything is implemented in the C++ extension module ``fishburn._core``;
this package re-exports its functions.  Structured values (posets, series,
verification reports) are plain dicts/lists mirroring the CLI's JSON wire
formats.
"""

from ._core import (  # noqa: F401
    __version__,
    are_isomorphic,
    asc,
    check_conjecture,
    check_kernel_relation,
    check_lemma2,
    check_lemma_h,
    check_psi,
    check_pt_from_ptz,
    check_theorem_gr,
    check_theorem_main,
    construct_trace,
    contains_three_plus_one,
    contains_two_plus_two,
    decompose_trace,
    enumerate_ascent_sequences,
    enumerate_restricted,
    g1_closed,
    g_oracle,
    glue,
    h_closed,
    h_oracle,
    is_ascent_sequence,
    is_restricted,
    p_t,
    p_tz,
    p_tz_conjecture,
    poset_stats,
    poset_to_sequence,
    rightmost_maximum,
    sequence_to_poset,
    split,
    stats,
    validate,
    verify_all,
    verify_catalan,
    verify_lemma1,
    verify_restricted_study,
    verify_violation_yields_31,
)

__all__ = [name for name in dir() if not name.startswith("_")]
