"""Invariant suite run by ``cdwg check``: structure, bounds, budgets and oracles."""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Optional

from . import oracle
from .enumerators import (
    Counters,
    ebfs_length_bounded,
    iter_ebfs,
    iter_maws,
    iter_mus,
    iter_occurring_mrws,
    maws_length_bounded,
)
from .grammar import decompress_node
from .index import Index

ENUM_BUDGET = 4
DECOMPRESS_BUDGET = 4


@dataclass
class CheckResult:
    name: str
    ok: bool
    detail: str = ""

    def line(self) -> str:
        status = "PASS" if self.ok else "FAIL"
        return f"{status} {self.name}" + (f": {self.detail}" if self.detail else "")


def structural_checks(index: Index) -> List[CheckResult]:
    cd, g, lpt = index.cdawg, index.grammar, index.lpt
    st = index.stats
    results = []
    nv = cd.node_count
    results.append(CheckResult("e_min < 2n", st.e_min < 2 * st.n, f"e_min={st.e_min} n={st.n}"))
    primary = sum(cd.e_primary)
    results.append(CheckResult("primary edges = |V| - 1", primary == nv - 1, f"{primary} vs {nv - 1}"))
    results.append(
        CheckResult(
            "suffix links shorten",
            all(cd.max_len[cd.slink[v]] < cd.max_len[v] for v in range(1, nv)),
        )
    )
    results.append(CheckResult("LPT+ edge count = CDAWG edge count", lpt.edge_count == cd.edge_count))

    bad_len = bad_wchar = over_budget = 0
    for v in range(1, nv):
        counter = [0]
        s = decompress_node(g, cd, v, counter)
        if len(s) != cd.max_len[v]:
            bad_len += 1
            continue
        if s[cd.max_len[v] - cd.max_len[cd.slink[v]] - 1] != cd.wchar[v]:
            bad_wchar += 1
        if counter[0] > DECOMPRESS_BUDGET * (len(s) + 1):
            over_budget += 1
    results.append(CheckResult("|decompress(v)| = max_len(v)", bad_len == 0, f"{bad_len} mismatches"))
    results.append(CheckResult("stored wchar matches decompressed node", bad_wchar == 0, f"{bad_wchar} mismatches"))
    results.append(CheckResult("decompression work budget", over_budget == 0, f"{over_budget} nodes over budget"))
    if index.text is not None:
        oriented = index.text[::-1] if index.reversed else index.text
        results.append(CheckResult("sink decompresses to the text", decompress_node(g, cd, cd.sink) == oriented))
    return results


def enumeration_checks(index: Index, text: Optional[bytes] = None, use_oracle: Optional[bool] = None) -> List[CheckResult]:
    """Bounds and budgets always; oracle equivalence when ``text`` fits the oracle cap."""
    st = index.stats
    results = []
    edges = index.cdawg.edge_count

    maw_counters = Counters()
    maws = [index.materialize(h) for h in iter_maws(index, maw_counters)]
    ebf_counters = Counters()
    ebfs = [index.materialize(h) for h in iter_ebfs(index, ebf_counters)]
    mrw_handles = list(iter_occurring_mrws(index))
    mrws = [index.materialize(h) for h in mrw_handles]
    mus = {index.materialize(h): h.interval for h in iter_mus(index)}

    for name, words in (("MAW", maws), ("EBF", ebfs), ("MRW", mrws)):
        results.append(CheckResult(f"{name} output has no duplicates", len(words) == len(set(words))))
    results.append(
        CheckResult(
            "|MAW| <= sigma*e_R and <= sigma*e_L",
            len(maws) <= st.sigma * st.e_R and len(maws) <= st.sigma * st.e_L,
            f"|MAW|={len(maws)} sigma={st.sigma} e_R={st.e_R} e_L={st.e_L}",
        )
    )
    ebf_bound = st.e_R + st.e_L - st.node_count + 1
    results.append(CheckResult("|EBF| <= e_R + e_L - |V| + 1", len(ebfs) <= ebf_bound, f"{len(ebfs)} vs {ebf_bound}"))
    results.append(CheckResult("|MRW_{>=1}| <= e_min", len(mrws) <= st.e_min, f"{len(mrws)} vs {st.e_min}"))
    results.append(
        CheckResult(
            "MAW work budget",
            maw_counters.total <= ENUM_BUDGET * (edges + len(maws) + 1),
            f"{maw_counters.total} vs {ENUM_BUDGET * (edges + len(maws) + 1)}",
        )
    )
    results.append(
        CheckResult(
            "EBF work budget",
            ebf_counters.total <= ENUM_BUDGET * (edges + len(ebfs) + 1),
            f"{ebf_counters.total} vs {ENUM_BUDGET * (edges + len(ebfs) + 1)}",
        )
    )
    results.append(
        CheckResult("every visited path node yields a MAW", maw_counters.silent_nodes == 0, f"{maw_counters.silent_nodes} violations")
    )

    if text is None:
        text = index.text
    if use_oracle is None:
        use_oracle = text is not None and len(text) <= oracle.oracle_cap()
    if not use_oracle:
        return results

    results.append(CheckResult("MAW = oracle", set(maws) == oracle.oracle_maws(text)))
    results.append(CheckResult("EBF = oracle", set(ebfs) == oracle.oracle_ebfs(text)))
    counts = oracle.oracle_mrw_counts(text)
    occurring = {w: k for w, k in counts.items() if k >= 1}
    got = {w: h.k for w, h in zip(mrws, mrw_handles)}
    results.append(CheckResult("occurring MRW = oracle (with counts)", got == occurring))
    results.append(CheckResult("MUS = oracle (with intervals)", mus == oracle.oracle_mus(text)))
    repeats = oracle.oracle_maximal_repeats(text)
    inner = {w[1:-1] for w in maws} | {w[1:-1] for w in ebfs} | {w[1:-1] for w in mrws}
    results.append(CheckResult("inner parts are maximal repeats", inner <= repeats))
    if index.sharp is not None and index.dollar is not None:
        all_mrw = set(counts)
        partition = set(maws).isdisjoint(mrws) and all_mrw == set(maws) | set(mrws)
        results.append(CheckResult("MRW = MAW + occurring MRW (disjoint)", partition))

    full = {"MAW": maws, "EBF": ebfs}
    bounded_ok = True
    for kind, query in (("MAW", maws_length_bounded), ("EBF", ebfs_length_bounded)):
        for length in range(2, st.n + 3):
            for direction in ("min", "max"):
                got_words: List[bytes] = []
                query(index, length, direction, lambda h: got_words.append(index.materialize(h)))
                keep = (lambda w: len(w) >= length) if direction == "min" else (lambda w: len(w) <= length)
                if sorted(got_words) != sorted(w for w in full[kind] if keep(w)):
                    bounded_ok = False
    results.append(CheckResult("length-bounded queries = filtered full sets", bounded_ok))
    return results


def run_checks(index: Index, text: Optional[bytes] = None, use_oracle: Optional[bool] = None) -> List[CheckResult]:
    return structural_checks(index) + enumeration_checks(index, text, use_oracle)


def inject_wchar_fault(index: Index) -> int:
    """Corrupt the stored Weiner character of one node; returns the node id."""
    cd = index.cdawg
    if cd.node_count < 2:
        raise ValueError("index has no node with a Weiner character")
    cd.wchar[1] = (cd.wchar[1] + 1) % 256
    return 1
