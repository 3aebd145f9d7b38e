"""Shared verification routine for the corpus-driven tests."""
from __future__ import annotations

from collections import defaultdict
from typing import Dict, List

from cdawgmaw import oracle
from cdawgmaw.checks import ENUM_BUDGET
from cdawgmaw.enumerators import (
    Counters,
    ebfs_length_bounded,
    iter_ebfs,
    iter_maws,
    iter_mus,
    iter_occurring_mrws,
    maws_length_bounded,
)
from cdawgmaw.index import build_index

SETS = "sets"
BOUNDS = "bounds"
BUDGET = "budget"
LENGTH = "length"


def word_sets(index) -> Dict:
    mc, ec = Counters(), Counters()
    maws = [index.materialize(h) for h in iter_maws(index, mc)]
    ebfs = [index.materialize(h) for h in iter_ebfs(index, ec)]
    mrw = {index.materialize(h): h.k for h in iter_occurring_mrws(index)}
    mus = {index.materialize(h): h.interval for h in iter_mus(index)}
    return {"maw": maws, "ebf": ebfs, "mrw": mrw, "mus": mus, "maw_counters": mc, "ebf_counters": ec}


def oracle_sets(text: bytes, method=None) -> Dict:
    counts = oracle.oracle_mrw_counts(text, method)
    return {
        "maw": {w for w, k in counts.items() if k == 0},
        "ebf": oracle.oracle_ebfs(text, method),
        "mrw": {w: k for w, k in counts.items() if k >= 1},
        "mus": oracle.oracle_mus(text, method),
        "all_mrw": counts,
    }


def verify(raw: bytes, mode: str, orientation: str = "auto", method=None, length_queries: bool = True) -> Dict[str, List[str]]:
    """Check one text against every corpus criterion; returns failure messages keyed by criterion."""
    fails: Dict[str, List[str]] = defaultdict(list)
    index = build_index(raw, mode=mode, orientation=orientation, retain_text=True)
    text = index.text
    got = word_sets(index)
    want = oracle_sets(text, method)
    tag = f"{raw!r}/{mode}/{orientation}"

    for key in ("maw", "ebf"):
        if len(got[key]) != len(set(got[key])) or set(got[key]) != want[key]:
            fails[SETS].append(f"{tag}: {key} differs")
    for key in ("mrw", "mus"):
        if got[key] != want[key]:
            fails[SETS].append(f"{tag}: {key} differs")

    st = index.stats
    maws, ebfs = got["maw"], got["ebf"]
    if not st.e_min < 2 * st.n:
        fails[BOUNDS].append(f"{tag}: e_min={st.e_min} n={st.n}")
    if len(maws) > st.sigma * st.e_R or len(maws) > st.sigma * st.e_L:
        fails[BOUNDS].append(f"{tag}: |MAW|={len(maws)}")
    if len(ebfs) > st.e_R + st.e_L - st.node_count + 1:
        fails[BOUNDS].append(f"{tag}: |EBF|={len(ebfs)}")
    if len(got["mrw"]) > st.e_min:
        fails[BOUNDS].append(f"{tag}: |MRW|={len(got['mrw'])}")
    if index.sharp is not None and index.dollar is not None:
        if not set(maws).isdisjoint(got["mrw"]) or set(want["all_mrw"]) != set(maws) | set(got["mrw"]):
            fails[BOUNDS].append(f"{tag}: MRW partition")
    repeats = oracle.oracle_maximal_repeats(text, method)
    for w in list(maws) + list(ebfs) + list(got["mrw"]):
        if w[1:-1] not in repeats:
            fails[BOUNDS].append(f"{tag}: inner part of {w!r} is not a maximal repeat")
            break

    edges = index.cdawg.edge_count
    for key in ("maw", "ebf"):
        c = got[f"{key}_counters"]
        if c.total > ENUM_BUDGET * (edges + len(got[key]) + 1):
            fails[BUDGET].append(f"{tag}: {key} work {c.total}")
    if got["maw_counters"].silent_nodes:
        fails[BUDGET].append(f"{tag}: {got['maw_counters'].silent_nodes} path nodes without a MAW")

    if length_queries:
        fails[LENGTH].extend(check_length_bounded(index, got, tag))
    return fails


def check_length_bounded(index, got, tag) -> List[str]:
    """Compare bounded queries with the filtered full sets on handles, not words."""
    fails = []
    n = index.stats.n
    wl = index.word_length
    for key, it, query, stored in (
        ("maw", iter_maws, maws_length_bounded, index.stored_maw),
        ("ebf", iter_ebfs, ebfs_length_bounded, index.stored_ebf),
    ):
        full = [h[:3] for h in it(index)]
        sizes = [wl(h) for h in it(index)]
        for length in range(2, n + 3):
            lo, hi = [], []
            query(index, length, "min", lo.append)
            query(index, length, "max", hi.append, route="walk")
            if sorted(h[:3] for h in lo) != sorted(t for t, m in zip(full, sizes) if m >= length):
                fails.append(f"{tag}: {key} >= {length}")
            if sorted(h[:3] for h in hi) != sorted(t for t, m in zip(full, sizes) if m <= length):
                fails.append(f"{tag}: {key} <= {length}")
            if length <= stored.m_star or stored.complete:
                replayed = []
                query(index, length, "max", replayed.append, route="stored")
                hi.sort(key=wl)
                if hi != replayed:
                    fails.append(f"{tag}: {key} stored replay differs at {length}")
    return fails
