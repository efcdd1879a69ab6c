"""Parity-filtration invariants of free knots."""

from ._freeknot import (
    ChordDiagram,
    FreeKnotError,
    apply_move,
    conjugate_equal,
    delete_odd,
    distinguish,
    evaluate,
    invariant,
    linked,
    moves,
    normal_form_to_word,
    parse_gauss_code,
    reduce,
    relation_check,
    scramble,
    search_nontrivial,
    serialize,
    word_of,
)

__all__ = [
    "ChordDiagram",
    "FreeKnotError",
    "apply_move",
    "conjugate_equal",
    "delete_odd",
    "distinguish",
    "evaluate",
    "invariant",
    "linked",
    "moves",
    "normal_form_to_word",
    "parse_gauss_code",
    "reduce",
    "relation_check",
    "scramble",
    "search_nontrivial",
    "serialize",
    "word_of",
]
