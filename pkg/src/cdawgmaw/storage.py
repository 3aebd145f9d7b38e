"""Versioned binary index files.

Layout (little-endian throughout)::

    magic "CDWG" | u16 version | u8 int width | u8 flags | u8 sentinel mode
    i16 sharp | i16 dollar
    stats block: n, sigma, e_R, e_L, node_count   (int width each)
    u32 section count, then per section: 4-byte tag | u32 length | values

Every section is an array of signed integers of the declared width.  Derived
tables (children ranges, skip pointers, level-ancestor jumps) are rebuilt on
load.
"""
from __future__ import annotations

import struct
import sys
from array import array
from typing import BinaryIO, Dict, List

from .cdawg import Cdawg, IndexStats, SentinelMode
from .enumerators import StoredPrefixSet
from .grammar import Grammar
from .index import Index
from .lpt import LptPlus

MAGIC = b"CDWG"
FORMAT_VERSION = 1
INT_WIDTH = 4
_MODES = [SentinelMode.NONE, SentinelMode.END, SentinelMode.BOTH]

_HEADER = struct.Struct("<4sHBBBhh")


class IndexFormatError(ValueError):
    pass


def _ints(values) -> array:
    arr = array("i", values)
    if arr.itemsize != INT_WIDTH:
        raise RuntimeError("platform int is not 32 bits")
    if sys.byteorder != "little":
        arr.byteswap()
    return arr


def _stored_section(stored: StoredPrefixSet) -> List[int]:
    flat = [stored.m_star, int(stored.complete)]
    for item in stored.items:
        flat.extend(item)
    return flat


def _sections(index: Index) -> Dict[bytes, List[int]]:
    cd, g, lpt = index.cdawg, index.grammar, index.lpt
    offsets = [0]
    flat: List[int] = []
    for r in g.rhs:
        flat.extend(r)
        offsets.append(len(flat))
    sections = {
        b"NMXL": cd.max_len,
        b"NSLK": cd.slink,
        b"NWCH": cd.wchar,
        b"NFIN": [int(f) for f in cd.final],
        b"NOCC": cd.occ,
        b"NLEX": cd.left_ext,
        b"NFPS": cd.firstpos,
        b"ESRC": cd.e_src,
        b"EDST": cd.e_dst,
        b"ECHR": cd.e_char,
        b"ELEN": cd.e_len,
        b"EPRI": [int(p) for p in cd.e_primary],
        b"GOFF": offsets,
        b"GRHS": flat,
        b"GSHC": g.shortcut,
        b"LCDN": lpt.cdawg_node[lpt.white_count :],
        b"LSTR": lpt.str_len,
        b"LPAR": lpt.parent,
        b"LPCH": lpt.pchar,
        b"LPLN": lpt.plen,
        b"LSLK": lpt.slink,
        b"LECH": lpt.edge_child,
        b"LTOP": lpt.top,
        b"LBOT": lpt.bottom,
        b"LACH": lpt.achar,
    }
    if index.stored_maw is not None:
        sections[b"SMAW"] = _stored_section(index.stored_maw)
        sections[b"SEBF"] = _stored_section(index.stored_ebf)
    if index.text is not None:
        sections[b"TEXT"] = list(index.text)
    return sections


def dump(index: Index, fh: BinaryIO) -> None:
    st = index.stats
    flags = int(st.reversed) | (int(index.text is not None) << 1)
    fh.write(
        _HEADER.pack(
            MAGIC,
            FORMAT_VERSION,
            INT_WIDTH,
            flags,
            _MODES.index(index.mode),
            -1 if index.sharp is None else index.sharp,
            -1 if index.dollar is None else index.dollar,
        )
    )
    fh.write(_ints([st.n, st.sigma, st.e_R, st.e_L, st.node_count]).tobytes())
    sections = _sections(index)
    fh.write(struct.pack("<I", len(sections)))
    for tag, values in sections.items():
        fh.write(tag + struct.pack("<I", len(values)))
        fh.write(_ints(values).tobytes())


def save(index: Index, path) -> None:
    with open(path, "wb") as fh:
        dump(index, fh)


def _read(fh: BinaryIO, size: int) -> bytes:
    data = fh.read(size)
    if len(data) != size:
        raise IndexFormatError("truncated index file")
    return data


def _read_ints(fh: BinaryIO, count: int) -> List[int]:
    arr = array("i")
    arr.frombytes(_read(fh, count * INT_WIDTH))
    if sys.byteorder != "little":
        arr.byteswap()
    return arr.tolist()


def _stored_from(flat: List[int]) -> StoredPrefixSet:
    items = [tuple(flat[i : i + 3]) for i in range(2, len(flat), 3)]
    return StoredPrefixSet(flat[0], bool(flat[1]), items)


def load_from(fh: BinaryIO) -> Index:
    magic, version, width, flags, mode, sharp, dollar = _HEADER.unpack(_read(fh, _HEADER.size))
    if magic != MAGIC:
        raise IndexFormatError("not an index file (bad magic)")
    if version > FORMAT_VERSION:
        raise IndexFormatError(f"index format version {version} is newer than supported {FORMAT_VERSION}")
    if width != INT_WIDTH:
        raise IndexFormatError(f"unsupported integer width {width}")
    n, sigma, e_r, e_l, node_count = _read_ints(fh, 5)
    (count,) = struct.unpack("<I", _read(fh, 4))
    s: Dict[bytes, List[int]] = {}
    for _ in range(count):
        tag = _read(fh, 4)
        (length,) = struct.unpack("<I", _read(fh, 4))
        s[tag] = _read_ints(fh, length)

    cd = Cdawg()
    cd.n, cd.sigma = n, sigma
    cd.max_len = s[b"NMXL"]
    cd.slink = s[b"NSLK"]
    cd.wchar = s[b"NWCH"]
    cd.final = [bool(f) for f in s[b"NFIN"]]
    cd.occ = s[b"NOCC"]
    cd.left_ext = s[b"NLEX"]
    cd.firstpos = s[b"NFPS"]
    cd.e_src = s[b"ESRC"]
    cd.e_dst = s[b"EDST"]
    cd.e_char = s[b"ECHR"]
    cd.e_len = s[b"ELEN"]
    cd.e_primary = [bool(p) for p in s[b"EPRI"]]
    nv = len(cd.max_len)
    cd.first_edge = [0] * nv
    chars: List[List[int]] = [[] for _ in range(nv)]
    for e in range(len(cd.e_src) - 1, -1, -1):
        cd.first_edge[cd.e_src[e]] = e
    for e, src in enumerate(cd.e_src):
        chars[src].append(cd.e_char[e])
    for v in range(nv):
        if not chars[v]:
            cd.first_edge[v] = len(cd.e_src)
    cd.out_chars = [tuple(c) for c in chars]

    offsets, flat = s[b"GOFF"], s[b"GRHS"]
    rhs = [flat[offsets[i] : offsets[i + 1]] for i in range(len(offsets) - 1)]
    grammar = Grammar(rhs, s[b"GSHC"], nv - 1)

    lpt = LptPlus(cd)
    lpt.cdawg_node = list(range(nv)) + s[b"LCDN"]
    lpt.str_len = s[b"LSTR"]
    lpt.parent = s[b"LPAR"]
    lpt.pchar = s[b"LPCH"]
    lpt.plen = s[b"LPLN"]
    lpt.slink = s[b"LSLK"]
    lpt.edge_child = s[b"LECH"]
    lpt.top = s[b"LTOP"]
    lpt.bottom = s[b"LBOT"]
    lpt.achar = s[b"LACH"]
    lpt.build_branch_skips(cd)
    lpt.build_level_ancestor()

    stats = IndexStats(n=n, sigma=sigma, e_R=e_r, e_L=e_l, node_count=node_count, reversed=bool(flags & 1))
    text = bytes(s[b"TEXT"]) if b"TEXT" in s else None
    index = Index(
        cd,
        grammar,
        lpt,
        stats,
        mode=_MODES[mode],
        sharp=None if sharp < 0 else sharp,
        dollar=None if dollar < 0 else dollar,
        text=text,
    )
    if text is not None:
        cd.text = text[::-1] if stats.reversed else text
    if b"SMAW" in s:
        index.stored_maw = _stored_from(s[b"SMAW"])
        index.stored_ebf = _stored_from(s[b"SEBF"])
    return index


def load(path) -> Index:
    with open(path, "rb") as fh:
        return load_from(fh)
