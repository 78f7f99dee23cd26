"""Simulation-based reduction of nondeterministic tree automata."""

from ._core import (
    Automaton,
    CatalogError,
    Error,
    GuardError,
    ParseError,
    baseline,
    bench,
    combined_preorder,
    enumerate_language,
    equivalent,
    fixture,
    fixture_names,
    force_prune,
    generate,
    gfp_allowed,
    gfq_allowed,
    heavy,
    op,
    parse_timbuk,
    read_timbuk,
    relation,
    remove_useless,
)

__all__ = [
    "Automaton",
    "CatalogError",
    "Error",
    "GuardError",
    "ParseError",
    "baseline",
    "bench",
    "combined_preorder",
    "enumerate_language",
    "equivalent",
    "fixture",
    "fixture_names",
    "force_prune",
    "generate",
    "gfp_allowed",
    "gfq_allowed",
    "heavy",
    "op",
    "parse_timbuk",
    "read_timbuk",
    "relation",
    "remove_useless",
]
