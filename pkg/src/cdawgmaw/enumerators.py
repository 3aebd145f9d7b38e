"""Output-sensitive enumeration of MAWs, EBFs, occurring MRWs and MUSs.

All enumerators work on an :class:`~cdawgmaw.index.Index` and produce
:class:`WordHandle` objects ``(a, u, b)`` where ``u`` is a white LPT+ node;
the word itself is only built on request by ``Index.materialize``.

The MAW/EBF traversal visits, for every tree edge ``(vh, uh)``, the path
``u_1, u_2, ..., u_m`` from the fast-link bottom up to (excluding) the
fast-link top.  At ``u_1`` the children of ``u_1`` are merged against the
children of the CDAWG node of ``uh``; at every higher ``u_i`` the only child
that does not give a MAW is the one continuing down the path.  Unary path
nodes give no word and are skipped through ``LptPlus.skip_up``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Iterator, List, NamedTuple, Optional, Tuple

INF = float("inf")

MAW = "MAW"
EBF = "EBF"
MRW = "MRW"
MUS = "MUS"


class WordHandle(NamedTuple):
    a: int
    u: int
    b: int
    kind: str
    k: int = 0
    reversed: bool = False
    interval: Optional[Tuple[int, int]] = None


@dataclass
class Counters:
    visits: int = 0
    comparisons: int = 0
    silent_nodes: int = 0

    @property
    def total(self) -> int:
        return self.visits + self.comparisons


class LengthBoundError(ValueError):
    pass


def _walk(index, kind: str, lo=0, hi=INF, counters: Optional[Counters] = None) -> Iterator[Tuple[int, int, int]]:
    """Yield ``(a, u, b)`` for MAWs or EBFs whose inner part has length in ``[lo, hi]``."""
    cd = index.cdawg
    lpt = index.lpt
    nv = lpt.white_count
    out_chars = cd.out_chars
    left_ext = cd.left_ext
    e_src = cd.e_src
    e_dst = cd.e_dst
    skip_up = lpt.skip_up
    skip_char = lpt.skip_char
    str_len = lpt.str_len
    top_of = lpt.top
    bottom_of = lpt.bottom
    achar = lpt.achar
    maws = kind == MAW
    visits = comparisons = silent = 0
    try:
        for e in range(len(e_src)):
            visits += 1
            u1 = bottom_of[e]
            # the source takes part in the walk of its own out-edges
            stop_len = str_len[top_of[e]] if e_src[e] else -1
            a = achar[e]
            if str_len[u1] <= hi:
                if u1 < nv and str_len[u1] >= lo:
                    have = out_chars[e_dst[e]]
                    if maws:
                        j = 0
                        nh = len(have)
                        for b in out_chars[u1]:
                            comparisons += 1
                            if j < nh and have[j] == b:
                                j += 1
                            else:
                                yield a, u1, b
                    elif left_ext[u1] >= 2 and len(out_chars[u1]) >= 2:
                        for b in have:
                            comparisons += 1
                            yield a, u1, b
                below = u1
            else:
                if stop_len >= hi:
                    continue
                below = lpt.level_ancestor(u1, hi + 1)
            x = skip_up[below]
            c = skip_char[below]
            while x >= 0 and str_len[x] > stop_len:
                if str_len[x] < lo:
                    break
                visits += 1
                if maws:
                    emitted = False
                    for b in out_chars[x]:
                        comparisons += 1
                        if b != c:
                            emitted = True
                            yield a, x, b
                    if not emitted:
                        silent += 1
                else:
                    comparisons += 1
                    if left_ext[x] >= 2:
                        yield a, x, c
                c = skip_char[x]
                x = skip_up[x]
    finally:
        if counters is not None:
            counters.visits += visits
            counters.comparisons += comparisons
            counters.silent_nodes += silent


def _drive(gen, index, kind, emit) -> int:
    count = 0
    rev = index.reversed
    for a, u, b in gen:
        count += 1
        if emit is not None and emit(WordHandle(a, u, b, kind, 0, rev)) is False:
            break
    return count


def iter_maws(index, counters: Optional[Counters] = None) -> Iterator[WordHandle]:
    rev = index.reversed
    for a, u, b in _walk(index, MAW, counters=counters):
        yield WordHandle(a, u, b, MAW, 0, rev)


def iter_ebfs(index, counters: Optional[Counters] = None) -> Iterator[WordHandle]:
    rev = index.reversed
    for a, u, b in _walk(index, EBF, counters=counters):
        yield WordHandle(a, u, b, EBF, 0, rev)


def enumerate_maws(index, emit: Optional[Callable] = None, counters: Optional[Counters] = None) -> int:
    """Emit every MAW once; ``emit`` may return ``False`` to stop early."""
    return _drive(_walk(index, MAW, counters=counters), index, MAW, emit)


def enumerate_ebfs(index, emit: Optional[Callable] = None, counters: Optional[Counters] = None) -> int:
    return _drive(_walk(index, EBF, counters=counters), index, EBF, emit)


def iter_occurring_mrws(index) -> Iterator[WordHandle]:
    """MRWs occurring in the text, one candidate per CDAWG edge out of a non-source node.

    For an edge ``(v1, v2)`` the candidate is ``wchar(v1) + str(slink(v1)) + b``
    where ``b`` is the first symbol of the edge; it occurs ``occ(v2)`` times.
    """
    cd = index.cdawg
    rev = index.reversed
    n = cd.n
    occ = cd.occ
    wchar = cd.wchar
    slink = cd.slink
    max_len = cd.max_len
    firstpos = cd.firstpos
    e_src, e_dst, e_char, e_len = cd.e_src, cd.e_dst, cd.e_char, cd.e_len
    for e in range(cd.first_edge[1] if cd.node_count > 1 else 0, len(e_src)):
        v1 = e_src[e]
        k = occ[e_dst[e]]
        if occ[v1] <= k:
            continue
        u = slink[v1]
        b = e_char[e]
        f = cd.edge_by_char(u, b)
        if occ[e_dst[f]] <= k:
            continue
        interval = None
        if k == 1:
            end = firstpos[e_dst[e]] - (e_len[e] - 1)
            start = end - max_len[u] - 1
            interval = (n - 1 - end, n - 1 - start) if rev else (start, end)
        yield WordHandle(wchar[v1], u, b, MRW, k, rev, interval)


def enumerate_occurring_mrws(index, emit: Optional[Callable] = None, k: Optional[int] = None) -> int:
    count = 0
    for h in iter_occurring_mrws(index):
        if k is not None and h.k != k:
            continue
        count += 1
        if emit is not None and emit(h) is False:
            break
    return count


def iter_mus(index) -> Iterator[WordHandle]:
    for h in iter_occurring_mrws(index):
        if h.k == 1:
            yield h._replace(kind=MUS)


def enumerate_mus(index, emit: Optional[Callable] = None) -> int:
    count = 0
    for h in iter_mus(index):
        count += 1
        if emit is not None and emit(h) is False:
            break
    return count


@dataclass
class StoredPrefixSet:
    """Words of length at most ``m_star`` sorted by length, ``(a, u, b)`` each."""

    m_star: int
    complete: bool
    items: List[Tuple[int, int, int]]


def _stored(index, kind) -> StoredPrefixSet:
    str_len = index.lpt.str_len
    found = sorted(_walk(index, kind), key=lambda t: str_len[t[1]])
    budget = index.stats.e_min
    if len(found) <= budget:
        m_star = str_len[found[-1][1]] + 2 if found else 2
        return StoredPrefixSet(m_star, True, found)
    # largest m with |{w : |w| <= m}| <= e_min
    cut = budget
    limit = str_len[found[cut][1]] + 2
    while cut > 0 and str_len[found[cut - 1][1]] + 2 == limit:
        cut -= 1
    return StoredPrefixSet(limit - 1, False, found[:cut])


def precompute_stored_sets(index) -> Tuple[StoredPrefixSet, StoredPrefixSet]:
    return _stored(index, MAW), _stored(index, EBF)


def _bounded(index, kind, length, direction, emit, route):
    if length < 2:
        raise LengthBoundError(f"length bound must be at least 2, got {length}")
    if direction not in ("min", "max"):
        raise ValueError(f"direction must be 'min' or 'max', got {direction!r}")
    rev = index.reversed
    count = 0
    if direction == "min":
        gen = _walk(index, kind, lo=length - 2)
    else:
        stored = index.stored_maw if kind == MAW else index.stored_ebf
        use_stored = route == "stored" or (
            route == "auto" and stored is not None and (stored.complete or length <= stored.m_star)
        )
        if use_stored:
            if stored is None or not (stored.complete or length <= stored.m_star):
                raise LengthBoundError(f"length {length} is not covered by the stored prefix set")
            str_len = index.lpt.str_len
            gen = (t for t in stored.items if str_len[t[1]] + 2 <= length)
        else:
            gen = _walk(index, kind, hi=length - 2)
    for a, u, b in gen:
        count += 1
        if emit is not None and emit(WordHandle(a, u, b, kind, 0, rev)) is False:
            break
    return count


def maws_length_bounded(index, length: int, direction: str, emit: Optional[Callable] = None, route: str = "auto") -> int:
    """MAWs of length ``>= length`` (``direction="min"``) or ``<= length`` (``"max"``).

    ``route`` selects how ``"max"`` queries are answered: ``"auto"`` replays
    the stored prefix set when it covers ``length`` and walks the tree
    otherwise; ``"walk"`` and ``"stored"`` force one route.
    """
    return _bounded(index, MAW, length, direction, emit, route)


def ebfs_length_bounded(index, length: int, direction: str, emit: Optional[Callable] = None, route: str = "auto") -> int:
    return _bounded(index, EBF, length, direction, emit, route)
