import itertools

import pytest

from cdawgmaw.cdawg import build_cdawg, wrap_text
from cdawgmaw.grammar import build_grammar, decompress_node
from cdawgmaw.index import build_index

RUNNING = wrap_text(b"ababcbababcbc", "end_only").data


def _node_of_length(cd, length):
    return next(v for v in range(cd.node_count) if cd.max_len[v] == length)


def test_running_example_expansion_and_decompression():
    cd = build_cdawg(RUNNING)
    g = build_grammar(cd)
    x3 = _node_of_length(cd, 6)
    assert g.expand(x3) == b"ababc"
    assert decompress_node(g, cd, x3) == b"ababcb"
    # the remaining "b" comes from the suffix-link target
    assert decompress_node(g, cd, cd.slink[x3]) == b"b"


def test_single_symbol_text():
    cd = build_cdawg(b"$")
    g = build_grammar(cd)
    assert g.expand(g.root) == b"$"


def test_source_decompresses_to_empty():
    cd = build_cdawg(RUNNING)
    g = build_grammar(cd)
    assert decompress_node(g, cd, 0) == b""


@pytest.mark.parametrize("mode", ["none", "both"])
def test_root_expansion_equals_text_exhaustive(mode):
    for n in range(1, 13):
        for p in itertools.product(b"ab", repeat=n):
            text = wrap_text(bytes(p), mode).data
            cd = build_cdawg(text)
            g = build_grammar(cd)
            assert decompress_node(g, cd, cd.sink) == text
            for v in range(1, cd.node_count):
                s = decompress_node(g, cd, v)
                assert len(s) == cd.max_len[v]
                assert g.expand(v) == s[: cd.max_len[v] - cd.max_len[cd.slink[v]]]


def test_decompression_without_text_and_work_bound():
    idx = build_index(b"abaababaabaababaababa", mode="both")
    assert idx.cdawg.text is None
    cd, g = idx.cdawg, idx.grammar
    for v in range(1, cd.node_count):
        counter = [0]
        s = decompress_node(g, cd, v, counter)
        assert len(s) == cd.max_len[v]
        assert counter[0] <= 4 * (len(s) + 1)


def test_shortcuts_skip_unary_productions():
    cd = build_cdawg(wrap_text(b"abcabcabcabc", "end_only").data)
    g = build_grammar(cd)
    assert any(g.is_unary(v) for v in range(1, cd.node_count))
    for v in range(1, cd.node_count):
        assert not g.is_unary(g.shortcut[v])
        assert g.expand(v) == g.expand(g.shortcut[v])
