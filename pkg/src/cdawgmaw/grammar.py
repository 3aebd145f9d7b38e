"""CDAWG-grammar and text-free decompression of node strings.

Every CDAWG node ``v`` is a non-terminal ``X(v)``.  Its right-hand side lists
one symbol per in-edge ``(w, v)``: the non-terminal ``X(w)``, or the terminal
first character of the edge when ``w`` is the source.  In-edges are ordered
by decreasing ``max_len(w) + label_len`` so that ``X(v)`` expands to the
first ``max_len(v) - max_len(slink(v))`` symbols of ``str(v)``.
"""
from __future__ import annotations

from typing import List, Optional

from .cdawg import Cdawg


class Grammar:
    def __init__(self, rhs: List[List[int]], shortcut: List[int], root: int):
        # terminals are encoded as ~c (always negative), non-terminals as node ids
        self.rhs = rhs
        self.shortcut = shortcut
        self.root = root

    @property
    def size(self) -> int:
        return sum(len(r) for r in self.rhs)

    def is_unary(self, v: int) -> bool:
        r = self.rhs[v]
        return len(r) == 1 and r[0] >= 0

    def expand(self, v: int, counter: Optional[list] = None) -> bytes:
        """Expand ``X(v)`` (the string ``p_v``) with an explicit stack."""
        out = bytearray()
        rhs = self.rhs
        shortcut = self.shortcut
        stack = [shortcut[v]]
        work = 0
        while stack:
            x = stack.pop()
            work += 1
            if x < 0:
                out.append(~x)
                continue
            for y in reversed(rhs[x]):
                stack.append(y if y < 0 else shortcut[y])
        if counter is not None:
            counter[0] += work
        return bytes(out)


def build_grammar(cdawg: Cdawg) -> Grammar:
    n_nodes = cdawg.node_count
    incoming = cdawg.in_edges()
    rhs: List[List[int]] = [[] for _ in range(n_nodes)]
    for v in range(1, n_nodes):
        edges = sorted(
            incoming[v],
            key=lambda e: cdawg.max_len[cdawg.e_src[e]] + cdawg.e_len[e],
            reverse=True,
        )
        rhs[v] = [~cdawg.e_char[e] if cdawg.e_src[e] == 0 else cdawg.e_src[e] for e in edges]

    # nodes are numbered by max_len, so a producer always precedes its consumers
    shortcut = list(range(n_nodes))
    for v in range(1, n_nodes):
        r = rhs[v]
        if len(r) == 1 and r[0] > 0:
            shortcut[v] = shortcut[r[0]]
    g = Grammar(rhs, shortcut, cdawg.sink)
    if cdawg.text is not None and decompress_node(g, cdawg, cdawg.sink) != cdawg.text:
        raise AssertionError("grammar does not reproduce the text")
    return g


def decompress_node(grammar: Grammar, cdawg: Cdawg, v: int, counter: Optional[list] = None) -> bytes:
    """Return ``str(v)`` by concatenating ``p_v``, ``p_slink(v)``, ... ."""
    parts = []
    while v > 0:
        if counter is not None:
            counter[0] += 1
        parts.append(grammar.expand(v, counter))
        v = cdawg.slink[v]
    return b"".join(parts)
