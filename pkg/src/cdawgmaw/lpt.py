"""Extended longest-path tree (LPT+) over a CDAWG.

White tree nodes share their ids with CDAWG nodes.  Every secondary CDAWG
edge ``(w, u)`` gets a gray leaf (ids ``node_count ..``) that copies ``u``.
Tree edges share their ids with CDAWG edges.

Each tree edge ``(vh, uh)`` labeled ``X`` carries a fast link: ``top`` is the
first white node on the suffix-link chain of ``vh`` and ``bottom`` is the
node below ``top`` reached by spelling ``X``.  Edges leaving the source have
no suffix link to follow; for them ``top`` is the source itself, the path
spells ``X[1:]`` and the source takes part in the walk.
"""
from __future__ import annotations

from typing import List

from .cdawg import Cdawg


class FastLinkError(AssertionError):
    pass


class LptPlus:
    def __init__(self, cdawg: Cdawg):
        nv = cdawg.node_count
        self.white_count = nv
        self.cdawg_node: List[int] = list(range(nv))
        self.str_len: List[int] = list(cdawg.max_len)
        self.parent: List[int] = [-1] * nv
        self.pchar: List[int] = [-1] * nv
        self.plen: List[int] = [0] * nv
        self.slink: List[int] = []
        self.edge_child: List[int] = [0] * cdawg.edge_count
        self.top: List[int] = []
        self.bottom: List[int] = []
        self.achar: List[int] = []
        self.up: List[List[int]] = []
        self.skip_up: List[int] = []
        self.skip_char: List[int] = []

    @property
    def node_count(self) -> int:
        return len(self.str_len)

    @property
    def edge_count(self) -> int:
        return len(self.edge_child)

    def is_white(self, x: int) -> bool:
        return x < self.white_count

    def gray_target(self, x: int) -> int:
        """White node of the CDAWG node a gray leaf was copied from."""
        return self.cdawg_node[x]

    def children(self, cdawg: Cdawg, x: int):
        if x >= self.white_count:
            return []
        return [self.edge_child[e] for e in cdawg.children(x)]

    def build_level_ancestor(self) -> None:
        parent = [p if p >= 0 else 0 for p in self.parent]
        up = [parent]
        depth = max(1, self.node_count).bit_length()
        for _ in range(depth):
            prev = up[-1]
            nxt = [prev[p] for p in prev]
            if nxt == prev:
                break
            up.append(nxt)
        self.up = up

    def build_branch_skips(self, cdawg: Cdawg) -> None:
        """Point every node at its nearest branching proper ancestor.

        ``skip_char[x]`` is the first symbol of the edge leaving that ancestor
        towards ``x``.  Unary nodes only exist when the text does not end
        with a unique symbol; they never contribute a word and are jumped over.
        """
        size = self.node_count
        skip_up = [-1] * size
        skip_char = [-1] * size
        parent = self.parent
        pchar = self.pchar
        out_chars = cdawg.out_chars
        # white ids follow max_len and gray leaves hang below white nodes
        for x in range(1, size):
            p = parent[x]
            if len(out_chars[p]) >= 2:
                skip_up[x], skip_char[x] = p, pchar[x]
            else:
                skip_up[x], skip_char[x] = skip_up[p], skip_char[p]
        self.skip_up = skip_up
        self.skip_char = skip_char

    @property
    def level_ancestor_words(self) -> int:
        return sum(len(t) for t in self.up)

    def level_ancestor(self, node: int, target_len: int) -> int:
        """Shallowest ancestor of ``node`` (inclusive) whose string is at least ``target_len`` long."""
        str_len = self.str_len
        if target_len > str_len[node]:
            raise ValueError(f"target length {target_len} exceeds depth {str_len[node]} of node {node}")
        if not self.up:
            self.build_level_ancestor()
        x = node
        for table in reversed(self.up):
            y = table[x]
            if str_len[y] >= target_len:
                x = y
        return x


def build_lpt_plus(cdawg: Cdawg) -> LptPlus:
    lpt = LptPlus(cdawg)
    nv = cdawg.node_count
    grays_of: List[List[int]] = [[] for _ in range(nv)]
    for e in range(cdawg.edge_count):
        src, dst = cdawg.e_src[e], cdawg.e_dst[e]
        if cdawg.e_primary[e]:
            x = dst
        else:
            x = lpt.node_count
            lpt.cdawg_node.append(dst)
            lpt.str_len.append(cdawg.max_len[src] + cdawg.e_len[e])
            lpt.parent.append(-1)
            lpt.pchar.append(-1)
            lpt.plen.append(0)
            grays_of[dst].append(x)
        lpt.parent[x] = src
        lpt.pchar[x] = cdawg.e_char[e]
        lpt.plen[x] = cdawg.e_len[e]
        lpt.edge_child[e] = x

    slink = [-1] * lpt.node_count
    str_len = lpt.str_len
    for u in range(1, nv):
        chain = [u] + sorted(grays_of[u], key=lambda x: str_len[x], reverse=True)
        for x, y in zip(chain, chain[1:]):
            if str_len[x] <= str_len[y]:
                raise AssertionError(f"equal-length split copies of node {u}")
            slink[x] = y
        slink[chain[-1]] = cdawg.slink[u]
    lpt.slink = slink
    lpt.build_branch_skips(cdawg)
    lpt.build_level_ancestor()
    return lpt


def compute_fast_links(lpt: LptPlus, cdawg: Cdawg, text: bytes = None) -> LptPlus:
    """Install ``(top, bottom, achar)`` on every tree edge using the text."""
    text = cdawg.text if text is None else text
    if text is None:
        raise ValueError("fast links are computed at build time and need the text")
    nv = lpt.white_count
    str_len = lpt.str_len
    slink = lpt.slink
    edge_child = lpt.edge_child
    top_of = [0] * lpt.edge_count
    bottom_of = [0] * lpt.edge_count
    achar_of = [0] * lpt.edge_count
    for e in range(lpt.edge_count):
        src = cdawg.e_src[e]
        start, end = cdawg.label_ref(e)
        if src == 0:
            top = 0
            pos = start + 1
        else:
            top = slink[src]
            while top >= nv:
                top = slink[top]
            pos = start
        x = top
        while pos < end:
            if x >= nv:
                raise FastLinkError(f"edge {e}: fast-link path leaves a gray leaf")
            f = cdawg.edge_by_char(x, text[pos])
            if f < 0:
                raise FastLinkError(f"edge {e}: no out-edge for symbol {text[pos]} at node {x}")
            pos += cdawg.e_len[f]
            x = edge_child[f]
        if pos != end:
            raise FastLinkError(f"edge {e}: fast-link path overshoots the label")
        if str_len[x] != str_len[top] + (end - start) - (1 if src == 0 else 0):
            raise FastLinkError(f"edge {e}: fast-link path length mismatch")
        top_of[e] = top
        bottom_of[e] = x
        achar_of[e] = text[end - str_len[x] - 1]
    lpt.top = top_of
    lpt.bottom = bottom_of
    lpt.achar = achar_of
    return lpt
