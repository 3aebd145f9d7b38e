"""Compact directed acyclic word graph (CDAWG) construction.

The automaton is obtained by building the suffix automaton (DAWG) online,
left to right, and then contracting every state that is neither branching,
final nor the source into the edge that passes through it.  Node strings
are never stored; each node keeps the length of its longest string, its
suffix link and the single character ``wchar`` such that
``wchar + str(slink(v))`` is the shortest string the node represents.
"""
from __future__ import annotations

import enum
from bisect import bisect_left
from dataclasses import dataclass
from typing import List, Optional, Tuple

SHARP = 0x01
DOLLAR = 0x00


class SentinelMode(str, enum.Enum):
    NONE = "none"
    END = "end_only"
    BOTH = "both"

    @classmethod
    def parse(cls, value) -> "SentinelMode":
        if isinstance(value, cls):
            return value
        aliases = {"end": cls.END, "end_only": cls.END, "both": cls.BOTH, "none": cls.NONE}
        try:
            return aliases[str(value)]
        except KeyError:
            raise ValueError(f"unknown sentinel mode {value!r}") from None


class ReservedSymbolError(ValueError):
    """Raised when the raw input already contains a sentinel code."""

    def __init__(self, position: int, symbol: int):
        super().__init__(f"reserved sentinel byte 0x{symbol:02x} found at position {position}")
        self.position = position
        self.symbol = symbol


@dataclass(frozen=True)
class Text:
    data: bytes
    mode: SentinelMode = SentinelMode.NONE
    sharp: Optional[int] = None
    dollar: Optional[int] = None

    def __len__(self) -> int:
        return len(self.data)

    @property
    def sigma(self) -> int:
        return len(set(self.data))

    def reversed(self) -> "Text":
        return Text(self.data[::-1], self.mode, self.sharp, self.dollar)


def wrap_text(raw, mode="end_only", sharp: int = SHARP, dollar: int = DOLLAR) -> Text:
    """Inject the unique terminal symbols requested by ``mode`` around ``raw``."""
    mode = SentinelMode.parse(mode)
    raw = bytes(raw.encode("latin-1") if isinstance(raw, str) else raw)
    reserved = []
    if mode is SentinelMode.BOTH:
        if sharp == dollar:
            raise ValueError("start and end sentinels must differ")
        reserved = [sharp, dollar]
    elif mode is SentinelMode.END:
        reserved = [dollar]
    for symbol in reserved:
        pos = raw.find(bytes([symbol]))
        if pos >= 0:
            raise ReservedSymbolError(pos, symbol)
    if mode is SentinelMode.BOTH:
        return Text(bytes([sharp]) + raw + bytes([dollar]), mode, sharp, dollar)
    if mode is SentinelMode.END:
        return Text(raw + bytes([dollar]), mode, None, dollar)
    return Text(raw, mode)


def build_dawg(data: bytes):
    """Blumer et al. online suffix automaton.

    Returns ``(length, link, trans, firstpos, last)``; ``firstpos[x]`` is the
    end position (inclusive, 0-based) of the first occurrence of the strings
    of state ``x``.
    """
    length = [0]
    link = [-1]
    trans: List[dict] = [{}]
    firstpos = [-1]
    last = 0
    for i, c in enumerate(data):
        cur = len(length)
        length.append(length[last] + 1)
        link.append(0)
        trans.append({})
        firstpos.append(i)
        p = last
        while p != -1 and c not in trans[p]:
            trans[p][c] = cur
            p = link[p]
        if p != -1:
            q = trans[p][c]
            if length[p] + 1 == length[q]:
                link[cur] = q
            else:
                clone = len(length)
                length.append(length[p] + 1)
                link.append(link[q])
                trans.append(dict(trans[q]))
                firstpos.append(firstpos[q])
                while p != -1 and trans[p].get(c) == q:
                    trans[p][c] = clone
                    p = link[p]
                link[q] = clone
                link[cur] = clone
        last = cur
    return length, link, trans, firstpos, last


class Cdawg:
    """Immutable CDAWG with suffix links and primary/secondary edge flags.

    Nodes are numbered by ``(max_len, firstpos)``, so the source is node 0
    and the sink is the last node.  Edges are numbered by ``(src, first_char)``;
    the out-edges of a node therefore form a contiguous, sorted id range.
    """

    def __init__(self):
        self.n = 0
        self.sigma = 0
        self.max_len: List[int] = []
        self.slink: List[int] = []
        self.wchar: List[int] = []
        self.final: List[bool] = []
        self.occ: List[int] = []
        self.left_ext: List[int] = []
        self.firstpos: List[int] = []
        self.first_edge: List[int] = []
        self.out_chars: List[Tuple[int, ...]] = []
        self.e_src: List[int] = []
        self.e_dst: List[int] = []
        self.e_char: List[int] = []
        self.e_len: List[int] = []
        self.e_primary: List[bool] = []
        self.text: Optional[bytes] = None

    @property
    def node_count(self) -> int:
        return len(self.max_len)

    @property
    def edge_count(self) -> int:
        return len(self.e_src)

    @property
    def sink(self) -> int:
        return len(self.max_len) - 1

    def children(self, v: int) -> range:
        return range(self.first_edge[v], self.first_edge[v] + len(self.out_chars[v]))

    def edge_by_char(self, v: int, c: int) -> int:
        chars = self.out_chars[v]
        i = bisect_left(chars, c)
        if i == len(chars) or chars[i] != c:
            return -1
        return self.first_edge[v] + i

    def label_ref(self, e: int) -> Tuple[int, int]:
        """Half-open text interval of one occurrence of the edge label.

        The occurrence is the one ending where ``str(src) + label`` ends, so
        the positions preceding it spell a suffix of ``str(src)``.
        """
        end = self.firstpos[self.e_dst[e]] + 1
        return end - self.e_len[e], end

    def label(self, e: int) -> bytes:
        if self.text is None:
            raise ValueError("edge labels need the retained text")
        start, end = self.label_ref(e)
        return self.text[start:end]

    def drop_text(self) -> None:
        self.text = None

    def in_edges(self) -> List[List[int]]:
        result: List[List[int]] = [[] for _ in self.max_len]
        for e, dst in enumerate(self.e_dst):
            result[dst].append(e)
        return result


def build_cdawg(text) -> Cdawg:
    data = text.data if isinstance(text, Text) else bytes(text)
    if not data:
        raise ValueError("cannot index an empty text")
    length, link, trans, firstpos, last = build_dawg(data)
    size = len(length)

    is_node = [False] * size
    is_node[0] = True
    final = [False] * size
    x = last
    while x != -1:
        final[x] = True
        is_node[x] = True
        x = link[x]
    for x in range(size):
        if len(trans[x]) != 1:
            is_node[x] = True

    # bucket states by length for a topological order
    buckets: List[List[int]] = [[] for _ in range(length[last] + 1)]
    for x in range(size):
        buckets[length[x]].append(x)

    # contract unary chains: jump[x] = (node reached, symbols consumed)
    jump_to = [-1] * size
    jump_len = [0] * size
    for ln in range(length[last], -1, -1):
        for x in buckets[ln]:
            if is_node[x]:
                continue
            (y,) = trans[x].values()
            if is_node[y]:
                jump_to[x], jump_len[x] = y, 1
            else:
                jump_to[x], jump_len[x] = jump_to[y], jump_len[y] + 1

    nodes = sorted((x for x in range(size) if is_node[x]), key=lambda x: (length[x], firstpos[x]))
    ident = [-1] * size
    for i, x in enumerate(nodes):
        ident[x] = i

    left_ext = [0] * size
    for x in range(1, size):
        left_ext[link[x]] += 1

    g = Cdawg()
    g.n = len(data)
    g.sigma = len(set(data))
    g.text = data
    for x in nodes:
        g.max_len.append(length[x])
        if x == 0:
            g.slink.append(-1)
            g.wchar.append(-1)
        else:
            s = link[x]
            if not is_node[s]:
                raise AssertionError("suffix link of a node state must be a node")
            g.slink.append(ident[s])
            g.wchar.append(data[firstpos[x] - length[s]])
        g.final.append(final[x])
        g.left_ext.append(left_ext[x])
        g.firstpos.append(firstpos[x])
        g.first_edge.append(len(g.e_src))
        chars = sorted(trans[x])
        g.out_chars.append(tuple(chars))
        v = ident[x]
        for c in chars:
            y = trans[x][c]
            if is_node[y]:
                dst, ln = y, 1
            else:
                dst, ln = jump_to[y], jump_len[y] + 1
            g.e_src.append(v)
            g.e_dst.append(ident[dst])
            g.e_char.append(c)
            g.e_len.append(ln)
            g.e_primary.append(length[x] + ln == length[dst])

    occ = [0] * len(nodes)
    for v in range(len(nodes) - 1, -1, -1):
        total = 1 if g.final[v] else 0
        for e in g.children(v):
            total += occ[g.e_dst[e]]
        occ[v] = total
    g.occ = occ
    return g


@dataclass(frozen=True)
class IndexStats:
    n: int
    sigma: int
    e_R: int
    e_L: int
    node_count: int
    reversed: bool

    @property
    def e_min(self) -> int:
        return min(self.e_R, self.e_L)


def compute_stats(text: Text) -> IndexStats:
    forward = build_cdawg(text)
    backward = build_cdawg(text.data[::-1])
    return IndexStats(
        n=len(text),
        sigma=forward.sigma,
        e_R=forward.edge_count,
        e_L=backward.edge_count,
        node_count=forward.node_count,
        reversed=backward.edge_count < forward.edge_count,
    )


def choose_orientation(text: Text, orientation: str = "auto") -> Tuple[Cdawg, IndexStats]:
    """Build both automata and keep the one with fewer edges.

    ``orientation`` may force ``"forward"`` or ``"reverse"``.  Ties keep the
    forward automaton.
    """
    forward = build_cdawg(text)
    backward = build_cdawg(text.data[::-1])
    if orientation == "auto":
        use_reverse = backward.edge_count < forward.edge_count
    elif orientation in ("forward", "reverse"):
        use_reverse = orientation == "reverse"
    else:
        raise ValueError(f"unknown orientation {orientation!r}")
    stats = IndexStats(
        n=len(text),
        sigma=forward.sigma,
        e_R=forward.edge_count,
        e_L=backward.edge_count,
        node_count=forward.node_count,
        reversed=use_reverse,
    )
    return (backward if use_reverse else forward), stats
