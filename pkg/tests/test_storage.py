import io
import random
import struct

import pytest

from cdawgmaw.enumerators import iter_ebfs, iter_maws, iter_mus, iter_occurring_mrws
from cdawgmaw.index import build_index
from cdawgmaw.storage import FORMAT_VERSION, MAGIC, IndexFormatError, dump, load, load_from, save


def stream(index):
    parts = []
    for it in (iter_maws, iter_ebfs, iter_occurring_mrws, iter_mus):
        for h in it(index):
            parts.append(index.materialize(h) + b"\n")
    return b"".join(parts)


def roundtrip(index):
    buf = io.BytesIO()
    dump(index, buf)
    buf.seek(0)
    return load_from(buf)


@pytest.mark.parametrize("mode", ["none", "end_only", "both"])
def test_roundtrip_preserves_streams(mode):
    rng = random.Random(1)
    for _ in range(100):
        raw = bytes(rng.choice(b"abcd") for _ in range(rng.randint(1, 60)))
        idx = build_index(raw, mode=mode)
        back = roundtrip(idx)
        assert stream(back) == stream(idx)
        assert back.stats == idx.stats
        assert back.stored_maw == idx.stored_maw


def test_header_and_file_roundtrip(tmp_path):
    idx = build_index(b"ababcbababcbc", mode="end_only", retain_text=True)
    path = tmp_path / "x.cdwg"
    save(idx, path)
    data = path.read_bytes()
    assert data[:4] == MAGIC
    assert struct.unpack_from("<H", data, 4)[0] == FORMAT_VERSION
    back = load(path)
    assert back.text == idx.text
    assert back.cdawg.label(0) == idx.cdawg.label(0)
    assert stream(back) == stream(idx)


def test_serialization_is_deterministic():
    a, b = io.BytesIO(), io.BytesIO()
    dump(build_index(b"abaababaab", mode="both"), a)
    dump(build_index(b"abaababaab", mode="both"), b)
    assert a.getvalue() == b.getvalue()


def test_future_version_refused():
    buf = io.BytesIO()
    dump(build_index(b"abc"), buf)
    data = bytearray(buf.getvalue())
    struct.pack_into("<H", data, 4, FORMAT_VERSION + 1)
    with pytest.raises(IndexFormatError, match="newer"):
        load_from(io.BytesIO(bytes(data)))


def test_bad_magic_and_truncation():
    with pytest.raises(IndexFormatError):
        load_from(io.BytesIO(b"NOPE" + b"\0" * 40))
    buf = io.BytesIO()
    dump(build_index(b"abcab"), buf)
    with pytest.raises(IndexFormatError, match="truncated"):
        load_from(io.BytesIO(buf.getvalue()[:-3]))
