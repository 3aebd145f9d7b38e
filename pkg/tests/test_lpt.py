import itertools
import random

import pytest

from cdawgmaw.cdawg import DOLLAR, build_cdawg, wrap_text
from cdawgmaw.grammar import build_grammar, decompress_node
from cdawgmaw.lpt import build_lpt_plus, compute_fast_links

RUNNING = wrap_text(b"ababcbababcbc", "end_only").data


def build(text):
    cd = build_cdawg(text)
    g = build_grammar(cd)
    lpt = compute_fast_links(build_lpt_plus(cd), cd)
    return cd, g, lpt


def tree_strings(cd, g, lpt):
    """String of every LPT+ node: decompressed for white, parent string + label for gray."""
    strs = [decompress_node(g, cd, v) for v in range(lpt.white_count)]
    for x in range(lpt.white_count, lpt.node_count):
        strs.append(None)
    for e in range(cd.edge_count):
        x = lpt.edge_child[e]
        if not lpt.is_white(x):
            strs[x] = strs[cd.e_src[e]] + cd.label(e)
    return strs


def naive_ancestor(lpt, node, target):
    path = [node]
    while lpt.parent[path[-1]] >= 0:
        path.append(lpt.parent[path[-1]])
    return min((x for x in path if lpt.str_len[x] >= target), key=lambda x: lpt.str_len[x])


def test_running_example_fast_link():
    cd, g, lpt = build(RUNNING)
    strs = tree_strings(cd, g, lpt)
    e = next(e for e in range(cd.edge_count) if cd.label(e) == b"c" + bytes([DOLLAR]))
    top, bottom = lpt.top[e], lpt.bottom[e]
    assert lpt.achar[e] == ord("c")
    path = [bottom]
    while path[-1] != top:
        path.append(lpt.parent[path[-1]])
    assert b"bc" in [strs[x] for x in path]
    u2 = next(x for x in path if strs[x] == b"bc")
    assert ord("b") in cd.out_chars[u2]


def test_sharp_ab_dollar_star():
    cd, g, lpt = build(wrap_text(b"ab", "both").data)
    assert lpt.white_count == 2
    assert lpt.edge_count == 4
    assert lpt.node_count == 5
    assert all(lpt.parent[x] == 0 for x in range(1, lpt.node_count))
    assert all(lpt.gray_target(x) == 1 for x in range(2, lpt.node_count))


def test_unary_run_node_count():
    cd, g, lpt = build(wrap_text(b"aaaaa", "end_only").data)
    secondary = sum(not p for p in cd.e_primary)
    assert lpt.node_count == cd.node_count + secondary


def test_source_edges_start_at_source():
    cd, g, lpt = build(RUNNING)
    strs = tree_strings(cd, g, lpt)
    for e in cd.children(0):
        assert lpt.top[e] == 0
        assert strs[lpt.bottom[e]] == cd.label(e)[1:]


def test_gray_pointers_and_suffix_chains():
    cd, g, lpt = build(RUNNING)
    strs = tree_strings(cd, g, lpt)
    for x in range(1, lpt.node_count):
        white = lpt.gray_target(x)
        assert strs[white].endswith(strs[x])
        y = lpt.slink[x]
        assert lpt.str_len[y] < lpt.str_len[x]
        assert strs[x].endswith(strs[y])


def _fast_links_brute(cd, g, lpt, strs):
    node_by_string = {s: x for x, s in enumerate(strs)}
    white = set(strs[: lpt.white_count])
    for e in range(cd.edge_count):
        src = cd.e_src[e]
        label = cd.label(e)
        if src == 0:
            top, want = b"", label[1:]
        else:
            s = strs[src]
            top = next(s[i:] for i in range(1, len(s) + 1) if s[i:] in white)
            want = top + label
        assert strs[lpt.top[e]] == top
        assert node_by_string[want] == lpt.bottom[e]
        full = strs[src] + label
        assert lpt.achar[e] == full[-len(want) - 1]


@pytest.mark.parametrize("mode", ["none", "end_only", "both"])
def test_fast_links_brute_force_exhaustive(mode):
    for n in range(1, 11):
        for p in itertools.product(b"ab", repeat=n):
            cd, g, lpt = build(wrap_text(bytes(p), mode).data)
            _fast_links_brute(cd, g, lpt, tree_strings(cd, g, lpt))


def test_achar_is_weiner_char_of_source():
    rng = random.Random(3)
    for _ in range(200):
        text = wrap_text(bytes(rng.choice(b"abc") for _ in range(rng.randint(1, 40))), "end_only").data
        cd, g, lpt = build(text)
        for e in range(cd.first_edge[1], cd.edge_count):
            assert lpt.achar[e] == cd.wchar[cd.e_src[e]]


def test_level_ancestor_examples():
    cd, g, lpt = build(RUNNING)
    strs = tree_strings(cd, g, lpt)
    x = strs.index(b"ababcb")
    assert lpt.level_ancestor(x, 0) == 0
    assert lpt.level_ancestor(x, 2) == naive_ancestor(lpt, x, 2)
    with pytest.raises(ValueError):
        lpt.level_ancestor(x, 7)


def test_level_ancestor_random():
    rng = random.Random(11)
    for _ in range(100):
        text = wrap_text(bytes(rng.choice(b"ab") for _ in range(rng.randint(1, 60))), "both").data
        cd, g, lpt = build(text)
        for _ in range(20):
            x = rng.randrange(lpt.node_count)
            target = rng.randint(0, lpt.str_len[x])
            assert lpt.level_ancestor(x, target) == naive_ancestor(lpt, x, target)
