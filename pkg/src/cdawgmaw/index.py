"""The assembled index: oriented CDAWG, grammar, LPT+ and stored prefix sets."""
from __future__ import annotations

from typing import Optional

from .cdawg import Cdawg, IndexStats, SentinelMode, Text, choose_orientation, wrap_text
from .enumerators import StoredPrefixSet, WordHandle, precompute_stored_sets
from .grammar import Grammar, build_grammar, decompress_node
from .lpt import LptPlus, build_lpt_plus, compute_fast_links


class Index:
    def __init__(
        self,
        cdawg: Cdawg,
        grammar: Grammar,
        lpt: LptPlus,
        stats: IndexStats,
        mode: SentinelMode = SentinelMode.NONE,
        sharp: Optional[int] = None,
        dollar: Optional[int] = None,
        text: Optional[bytes] = None,
    ):
        self.cdawg = cdawg
        self.grammar = grammar
        self.lpt = lpt
        self.stats = stats
        self.mode = mode
        self.sharp = sharp
        self.dollar = dollar
        # the wrapped input in reading order, kept only in retain-text mode
        self.text = text
        self.stored_maw: Optional[StoredPrefixSet] = None
        self.stored_ebf: Optional[StoredPrefixSet] = None

    @property
    def reversed(self) -> bool:
        return self.stats.reversed

    def node_string(self, v: int) -> bytes:
        """``str(v)`` of a white node in the orientation the index was built on."""
        return decompress_node(self.grammar, self.cdawg, v)

    def materialize(self, h: WordHandle) -> bytes:
        word = bytes([h.a]) + decompress_node(self.grammar, self.cdawg, h.u) + bytes([h.b])
        return word[::-1] if h.reversed else word

    def word_length(self, h: WordHandle) -> int:
        return self.lpt.str_len[h.u] + 2


def build_index(
    raw,
    mode="end_only",
    orientation: str = "auto",
    retain_text: bool = False,
    stored_sets: bool = True,
    **wrap_kwargs,
) -> Index:
    """Wrap ``raw`` with sentinels and build the full index over it.

    ``raw`` may also be an already wrapped :class:`Text`, in which case
    ``mode`` is ignored.
    """
    text = raw if isinstance(raw, Text) else wrap_text(raw, mode, **wrap_kwargs)
    cdawg, stats = choose_orientation(text, orientation)
    grammar = build_grammar(cdawg)
    lpt = compute_fast_links(build_lpt_plus(cdawg), cdawg)
    cdawg.drop_text()
    index = Index(
        cdawg,
        grammar,
        lpt,
        stats,
        mode=text.mode,
        sharp=text.sharp,
        dollar=text.dollar,
        text=text.data if retain_text else None,
    )
    if retain_text:
        cdawg.text = text.data[::-1] if stats.reversed else text.data
    if stored_sets:
        index.stored_maw, index.stored_ebf = precompute_stored_sets(index)
    return index
