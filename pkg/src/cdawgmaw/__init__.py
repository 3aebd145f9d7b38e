"""Minimal absent words and related word sets enumerated from a CDAWG."""
from .cdawg import (
    Cdawg,
    IndexStats,
    ReservedSymbolError,
    SentinelMode,
    Text,
    build_cdawg,
    choose_orientation,
    compute_stats,
    wrap_text,
)
from .enumerators import (
    Counters,
    LengthBoundError,
    WordHandle,
    ebfs_length_bounded,
    enumerate_ebfs,
    enumerate_maws,
    enumerate_mus,
    enumerate_occurring_mrws,
    iter_ebfs,
    iter_maws,
    iter_mus,
    iter_occurring_mrws,
    maws_length_bounded,
)
from .grammar import Grammar, build_grammar, decompress_node
from .index import Index, build_index
from .lpt import LptPlus, build_lpt_plus, compute_fast_links

__version__ = "0.1.0"

__all__ = [
    "Cdawg",
    "Counters",
    "Grammar",
    "Index",
    "IndexStats",
    "LengthBoundError",
    "LptPlus",
    "ReservedSymbolError",
    "SentinelMode",
    "Text",
    "WordHandle",
    "build_cdawg",
    "build_grammar",
    "build_index",
    "build_lpt_plus",
    "choose_orientation",
    "compute_fast_links",
    "compute_stats",
    "decompress_node",
    "ebfs_length_bounded",
    "enumerate_ebfs",
    "enumerate_maws",
    "enumerate_mus",
    "enumerate_occurring_mrws",
    "iter_ebfs",
    "iter_maws",
    "iter_mus",
    "iter_occurring_mrws",
    "maws_length_bounded",
    "wrap_text",
]
