"""Brute-force ground truth for every word set, plus test-family generators.

Two tiers are provided.  The naive tier tabulates the occurrence count of
every substring and checks each definition literally; it is limited to short
texts.  The automaton tier counts occurrences with its own suffix automaton
(independent of :mod:`cdawgmaw.cdawg`) and reaches a few thousand symbols.
All functions take and return ``bytes``.
"""
from __future__ import annotations

import os
from collections import Counter
from typing import Dict, Optional, Set, Tuple

NAIVE_CAP = 64
DEFAULT_CAP = 2000


class OracleCapExceeded(ValueError):
    pass


def oracle_cap() -> int:
    return int(os.environ.get("CDWG_ORACLE_CAP", DEFAULT_CAP))


def _as_bytes(text) -> bytes:
    if isinstance(text, str):
        return text.encode("latin-1")
    return bytes(getattr(text, "data", text))


class OccTable:
    """Occurrence counts of all substrings of a short text."""

    def __init__(self, text):
        text = _as_bytes(text)
        if len(text) > NAIVE_CAP:
            raise OracleCapExceeded(f"naive occurrence table limited to {NAIVE_CAP} symbols, got {len(text)}")
        self.text = text
        counts = Counter(text[i:j] for i in range(len(text)) for j in range(i + 1, len(text) + 1))
        counts[b""] = len(text) + 1
        self.counts = counts

    def occ(self, w: bytes) -> int:
        return self.counts.get(w, 0)

    def __contains__(self, w: bytes) -> bool:
        return w in self.counts

    def substrings(self):
        return self.counts.keys()


def _pick(text, method: Optional[str]) -> str:
    n = len(text)
    if method is None:
        method = "naive" if n <= NAIVE_CAP else "automaton"
    if method == "naive" and n > NAIVE_CAP:
        raise OracleCapExceeded(f"naive oracle limited to {NAIVE_CAP} symbols, got {n}")
    if n > oracle_cap():
        raise OracleCapExceeded(f"oracle limited to {oracle_cap()} symbols, got {n}")
    return method


# -- naive tier -------------------------------------------------------------


def _naive_maws(text: bytes) -> Set[bytes]:
    table = OccTable(text)
    alphabet = sorted(set(text))
    found = set()
    for x in list(table.substrings()):
        if not x:
            continue
        for b in alphabet:
            w = x + bytes([b])
            if w not in table and w[1:] in table:
                found.add(w)
    return found


def _naive_mrws(text: bytes) -> Dict[bytes, int]:
    """Every non-trivial MRW mapped to its occurrence count (0 for MAWs)."""
    table = OccTable(text)
    alphabet = sorted(set(text))
    found = {}
    for x in list(table.substrings()):
        if not x:
            continue
        for b in alphabet:
            w = x + bytes([b])
            k = table.occ(w)
            if table.occ(w[:-1]) > k and table.occ(w[1:]) > k:
                found[w] = k
    return found


def _naive_ebfs(text: bytes) -> Set[bytes]:
    table = OccTable(text)
    alphabet = sorted(set(text))
    found = set()
    for w in table.substrings():
        if len(w) < 2:
            continue
        a, u, b = w[0], w[1:-1], w[-1]
        left = any(c != a and bytes([c]) + u in table for c in alphabet)
        right = any(c != b and u + bytes([c]) in table for c in alphabet)
        if left and right:
            found.add(w)
    return found


def _naive_maximal_repeats(text: bytes) -> Set[bytes]:
    table = OccTable(text)
    alphabet = sorted(set(text))
    found = set()
    for u in table.substrings():
        if table.occ(u) < 2:
            continue
        left = text.startswith(u) or sum(bytes([c]) + u in table for c in alphabet) >= 2
        right = text.endswith(u) or sum(u + bytes([c]) in table for c in alphabet) >= 2
        if left and right:
            found.add(u)
    return found


# -- automaton tier -------------------------------------------------------------


class _SuffixAutomaton:
    """Plain suffix automaton with endpos sizes, used only for counting."""

    def __init__(self, text: bytes):
        self.text = text
        maxlen = [0]
        link = [-1]
        nxt = [{}]
        end = [-1]
        cnt = [0]
        last = 0
        for i, c in enumerate(text):
            cur = len(maxlen)
            maxlen.append(maxlen[last] + 1)
            link.append(0)
            nxt.append({})
            end.append(i)
            cnt.append(1)
            p = last
            while p >= 0 and c not in nxt[p]:
                nxt[p][c] = cur
                p = link[p]
            if p >= 0:
                q = nxt[p][c]
                if maxlen[q] == maxlen[p] + 1:
                    link[cur] = q
                else:
                    cl = len(maxlen)
                    maxlen.append(maxlen[p] + 1)
                    link.append(link[q])
                    nxt.append(dict(nxt[q]))
                    end.append(end[q])
                    cnt.append(0)
                    while p >= 0 and nxt[p].get(c) == q:
                        nxt[p][c] = cl
                        p = link[p]
                    link[q] = cl
                    link[cur] = cl
            last = cur
        for x in sorted(range(1, len(maxlen)), key=maxlen.__getitem__, reverse=True):
            cnt[link[x]] += cnt[x]
        cnt[0] = len(text) + 1
        self.maxlen, self.link, self.nxt, self.end, self.cnt = maxlen, link, nxt, end, cnt

    def shortest(self, x: int) -> bytes:
        ln = self.maxlen[self.link[x]] + 1
        return self.text[self.end[x] - ln + 1 : self.end[x] + 1]

    def states(self):
        return range(1, len(self.maxlen))


def _automaton_mrws(text: bytes) -> Dict[bytes, int]:
    # an MRW aub needs occ(u) > occ(au), so au is the shortest string of its state
    sa = _SuffixAutomaton(text)
    found = {}
    for y in sa.states():
        x = sa.link[y]
        au = sa.shortest(y)
        k_au = sa.cnt[y]
        for b, zx in sa.nxt[x].items():
            zy = sa.nxt[y].get(b)
            k = sa.cnt[zy] if zy is not None else 0
            if k_au > k and sa.cnt[zx] > k:
                found[au + bytes([b])] = k
    return found


def _automaton_ebfs(text: bytes) -> Set[bytes]:
    sa = _SuffixAutomaton(text)
    left_ext = Counter(sa.link[y] for y in sa.states())
    found = set()
    for y in sa.states():
        x = sa.link[y]
        au = sa.shortest(y)
        # u must itself be the longest string of x to have a second left extension
        if len(au) - 1 != sa.maxlen[x] or left_ext[x] < 2 or len(sa.nxt[x]) < 2:
            continue
        for b in sa.nxt[y]:
            found.add(au + bytes([b]))
    return found


# -- public oracles -------------------------------------------------------------


def oracle_maws(text, method: Optional[str] = None) -> Set[bytes]:
    text = _as_bytes(text)
    if _pick(text, method) == "naive":
        return _naive_maws(text)
    return {w for w, k in _automaton_mrws(text).items() if k == 0}


def oracle_ebfs(text, method: Optional[str] = None) -> Set[bytes]:
    text = _as_bytes(text)
    if _pick(text, method) == "naive":
        return _naive_ebfs(text)
    return _automaton_ebfs(text)


def oracle_mrws(text, k="all", method: Optional[str] = None) -> Set[bytes]:
    """MRWs occurring exactly ``k`` times; ``k="all"`` gives every MRW occurring at least once."""
    text = _as_bytes(text)
    table = _naive_mrws(text) if _pick(text, method) == "naive" else _automaton_mrws(text)
    if k == "all":
        return {w for w, c in table.items() if c >= 1}
    return {w for w, c in table.items() if c == k}


def oracle_mrw_counts(text, method: Optional[str] = None) -> Dict[bytes, int]:
    text = _as_bytes(text)
    return _naive_mrws(text) if _pick(text, method) == "naive" else _automaton_mrws(text)


def oracle_mus(text, method: Optional[str] = None) -> Dict[bytes, Tuple[int, int]]:
    """MUSs mapped to their unique occurrence ``(start, end)``, both inclusive."""
    text = _as_bytes(text)
    if _pick(text, method) == "naive":
        table = OccTable(text)
        words = {
            w
            for w in table.substrings()
            if len(w) >= 2 and table.occ(w) == 1 and table.occ(w[:-1]) >= 2 and table.occ(w[1:]) >= 2
        }
    else:
        words = {w for w, c in _automaton_mrws(text).items() if c == 1}
    result = {}
    for w in words:
        start = text.find(w)
        result[w] = (start, start + len(w) - 1)
    return result


def oracle_maximal_repeats(text, method: Optional[str] = None) -> Set[bytes]:
    text = _as_bytes(text)
    if _pick(text, method) == "naive":
        return _naive_maximal_repeats(text)
    sa = _SuffixAutomaton(text)
    # a state's longest string is left-maximal; keep the right-maximal repeats
    suffix_states = set()
    x = max(sa.states(), key=sa.maxlen.__getitem__, default=0)
    while x > 0:
        suffix_states.add(x)
        x = sa.link[x]
    found = {b""}
    for x in sa.states():
        if sa.cnt[x] >= 2 and (len(sa.nxt[x]) >= 2 or x in suffix_states):
            found.add(sa.text[sa.end[x] - sa.maxlen[x] + 1 : sa.end[x] + 1])
    return found


def census(text: bytes, k: int) -> Counter:
    return Counter(text[i : i + k] for i in range(len(text) - k + 1))


def de_bruijn(sigma: int, k: int, alphabet: bytes = b"abcdefghijklmnopqrstuvwxyz") -> bytes:
    """Linearized de Bruijn sequence: every length-``k`` word occurs exactly once."""
    if sigma < 2 or k < 2:
        raise ValueError("de Bruijn sequences need sigma >= 2 and k >= 2")
    if sigma > len(alphabet):
        raise ValueError(f"alphabet has only {len(alphabet)} symbols")
    if sigma**k > max(oracle_cap(), 1 << 20):
        raise OracleCapExceeded(f"sigma**k = {sigma**k} is too large")
    # Fredricksen-Kessler-Maiorana: concatenate Lyndon words whose length divides k
    seq = []
    word = [0] * (k + 1)

    def gen(t, p):
        if t > k:
            if k % p == 0:
                seq.extend(word[1 : p + 1])
            return
        word[t] = word[t - p]
        gen(t + 1, p)
        for j in range(word[t - p] + 1, sigma):
            word[t] = j
            gen(t + 1, t)

    gen(1, 1)
    seq += seq[: k - 1]
    return bytes(alphabet[i] for i in seq)


def fibonacci_word(k: int) -> bytes:
    """F_2 = "a", F_3 = "ab", F_k = F_{k-1} F_{k-2}."""
    if k < 2:
        raise ValueError("Fibonacci words start at index 2")
    prev, cur = b"b", b"a"
    for _ in range(k - 2):
        prev, cur = cur, cur + prev
    return cur
