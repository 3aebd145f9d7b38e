"""Benchmark families and per-text measurement rows."""
from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Dict, Iterable, List, Tuple

from .enumerators import enumerate_ebfs, enumerate_maws, enumerate_occurring_mrws
from .index import build_index
from .oracle import de_bruijn, fibonacci_word

COLUMNS = ["family", "param", "n", "sigma", "e_R", "e_L", "e_min", "nodes", "maws", "ebfs", "mrws", "wall_time"]

ALPHABET = b"abcdefghijklmnopqrstuvwxyz"


class BoundViolation(AssertionError):
    pass


def family_texts(family: str, params: Dict) -> List[Tuple[str, bytes]]:
    """Return ``(param label, raw text)`` pairs for one benchmark family."""
    if family == "fib":
        lo, hi = params.get("k_min", 10), params.get("k_max", 30)
        return [(f"k={k}", fibonacci_word(k)) for k in range(lo, hi + 1)]
    if family == "debruijn":
        sigma = params.get("sigma", 2)
        lo, hi = params.get("k_min", 3), params.get("k_max", 12)
        return [(f"k={k}", de_bruijn(sigma, k)) for k in range(lo, hi + 1)]
    if family == "random":
        sigma = params.get("sigma", 26)
        rng = random.Random(params.get("seed", 0))
        out = []
        for n in params.get("lengths", [1000]):
            out.append((f"n={n}", bytes(rng.choice(ALPHABET[:sigma]) for _ in range(n))))
        return out
    raise ValueError(f"unknown benchmark family {family!r}")


def measure(raw: bytes, mode: str = "end_only") -> Dict:
    """Index one text, count its word sets and assert the size bounds."""
    t0 = time.perf_counter()
    index = build_index(raw, mode=mode, stored_sets=False)
    maws = enumerate_maws(index)
    ebfs = enumerate_ebfs(index)
    mrws = enumerate_occurring_mrws(index)
    wall = time.perf_counter() - t0
    st = index.stats
    row = {
        "n": st.n,
        "sigma": st.sigma,
        "e_R": st.e_R,
        "e_L": st.e_L,
        "e_min": st.e_min,
        "nodes": st.node_count,
        "maws": maws,
        "ebfs": ebfs,
        "mrws": mrws,
        "wall_time": round(wall, 4),
    }
    check_bounds(row)
    return row


def check_bounds(row: Dict) -> None:
    failures = []
    if not row["e_min"] < 2 * row["n"]:
        failures.append("e_min < 2n")
    if row["maws"] > row["sigma"] * row["e_R"] or row["maws"] > row["sigma"] * row["e_L"]:
        failures.append("|MAW| <= sigma*e")
    if row["ebfs"] > row["e_R"] + row["e_L"] - row["nodes"] + 1:
        failures.append("|EBF| <= e_R + e_L - |V| + 1")
    if row["mrws"] > row["e_min"]:
        failures.append("|MRW| <= e_min")
    if failures:
        raise BoundViolation(f"bounds violated for n={row['n']}: " + ", ".join(failures))


def _job(args):
    family, label, raw, mode = args
    row = measure(raw, mode)
    return {"family": family, "param": label, **row}


def run_bench(family: str, params: Dict, mode: str = "end_only", jobs: int = 1) -> Iterable[Dict]:
    tasks = [(family, label, raw, mode) for label, raw in family_texts(family, params)]
    if jobs <= 1:
        for t in tasks:
            yield _job(t)
        return
    with ProcessPoolExecutor(max_workers=jobs) as pool:
        yield from pool.map(_job, tasks)
