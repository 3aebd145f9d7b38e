"""Command-line front end: ``cdwg index|enumerate|check|bench|dot``.

Exit codes: 0 success, 1 unreadable input, 2 reserved sentinel byte in the
input, 3 write failure, 4 usage error, 5 invariant check failure.
"""
from __future__ import annotations

import argparse
import csv
import sys
from typing import List, Optional

from . import bench as bench_mod
from .cdawg import ReservedSymbolError
from .checks import inject_wchar_fault, run_checks
from .enumerators import (
    EBF,
    MAW,
    ebfs_length_bounded,
    iter_ebfs,
    iter_maws,
    iter_mus,
    iter_occurring_mrws,
    maws_length_bounded,
)
from .grammar import decompress_node
from .index import Index, build_index
from .storage import IndexFormatError, load, save

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_RESERVED = 2
EXIT_WRITE = 3
EXIT_USAGE = 4
EXIT_CHECK = 5

SENTINEL_CHOICES = ["none", "end", "both"]


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    # argparse exits with 2 by default, which is taken by the reserved-byte error
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def escape_word(word: bytes, sharp: Optional[int] = None, dollar: Optional[int] = None, pretty: bool = False) -> str:
    """C-style escaping; ``pretty`` shows the sentinels as the usual glyphs."""
    out = []
    for c in word:
        if pretty and c == sharp:
            out.append("♯")
        elif pretty and c == dollar:
            out.append("$")
        elif c == 0x5C:
            out.append("\\\\")
        elif c == 0x0A:
            out.append("\\n")
        elif c == 0x09:
            out.append("\\t")
        elif c == 0x0D:
            out.append("\\r")
        elif 0x20 <= c < 0x7F:
            out.append(chr(c))
        else:
            out.append(f"\\x{c:02x}")
    return "".join(out)


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    with open(path, "rb") as fh:
        return fh.read()


def _fail(code: int, message: str) -> int:
    print(f"cdwg: {message}", file=sys.stderr)
    return code


def _stats_line(index: Index) -> str:
    st = index.stats
    return (
        f"n={st.n} sigma={st.sigma} e_R={st.e_R} e_L={st.e_L} e_min={st.e_min} "
        f"nodes={st.node_count} orientation={'reverse' if st.reversed else 'forward'} "
        f"grammar={index.grammar.size}"
    )


def _build(args, retain_text: bool):
    try:
        raw = _read_input(args.input)
    except OSError as exc:
        return None, _fail(EXIT_INPUT, f"cannot read {args.input}: {exc.strerror or exc}")
    try:
        return build_index(raw, mode=args.sentinels, orientation=args.orientation, retain_text=retain_text), EXIT_OK
    except ReservedSymbolError as exc:
        return None, _fail(EXIT_RESERVED, str(exc))


def cmd_index(args) -> int:
    index, code = _build(args, args.retain_text)
    if index is None:
        return code
    if args.out:
        try:
            save(index, args.out)
        except OSError as exc:
            return _fail(EXIT_WRITE, f"cannot write {args.out}: {exc.strerror or exc}")
    print(_stats_line(index))
    return EXIT_OK


def _load(path: str):
    try:
        return load(path), EXIT_OK
    except OSError as exc:
        return None, _fail(EXIT_INPUT, f"cannot read {path}: {exc.strerror or exc}")
    except (IndexFormatError, KeyError) as exc:
        return None, _fail(EXIT_INPUT, f"invalid index file {path}: {exc}")


def _handles(index: Index, args):
    """Handle stream for the requested set and filters, in enumeration order."""
    kind = args.set
    if kind in ("maw", "ebf"):
        if args.min_len is not None or args.max_len is not None:
            query = maws_length_bounded if kind == "maw" else ebfs_length_bounded
            length, direction = (args.min_len, "min") if args.min_len is not None else (args.max_len, "max")
            buf = []
            query(index, length, direction, buf.append)
            return iter(buf)
        return iter_maws(index) if kind == "maw" else iter_ebfs(index)
    gen = iter_mus(index) if kind == "mus" else iter_occurring_mrws(index)
    k = args.k
    lo = args.min_len if args.min_len is not None else 0
    hi = args.max_len if args.max_len is not None else float("inf")
    return (h for h in gen if (k is None or h.k == k) and lo <= index.word_length(h) <= hi)


def cmd_enumerate(args) -> int:
    if args.min_len is not None and args.max_len is not None:
        return _fail(EXIT_USAGE, "--min-len and --max-len are mutually exclusive")
    for flag, value in (("--min-len", args.min_len), ("--max-len", args.max_len)):
        if value is not None and value < 2:
            return _fail(EXIT_USAGE, f"{flag} must be at least 2")
    if args.k is not None and args.set != "mrw":
        return _fail(EXIT_USAGE, "--k only applies to --set mrw")
    index, code = _load(args.index)
    if index is None:
        return code
    out = sys.stdout
    count = 0
    for h in _handles(index, args):
        if args.limit is not None and count >= args.limit:
            break
        count += 1
        if args.format == "count":
            continue
        word = escape_word(index.materialize(h), index.sharp, index.dollar, args.pretty)
        if args.format == "plain":
            out.write(word + "\n")
        else:
            interval = "" if h.interval is None else f"{h.interval[0]}-{h.interval[1]}"
            out.write(f"{word}\t{index.word_length(h)}\t{h.kind}\t{h.k}\t{h.a}\t{h.u}\t{h.b}\t{interval}\n")
    if args.format == "count":
        out.write(f"{count}\n")
    return EXIT_OK


def cmd_check(args) -> int:
    index, code = _build(args, retain_text=True)
    if index is None:
        return code
    if args.inject_fault:
        v = inject_wchar_fault(index)
        print(f"injected fault: wchar of node {v} altered")
    use_oracle = False if args.bounds_only else None
    results = run_checks(index, use_oracle=use_oracle)
    for r in results:
        print(r.line())
    failed = sum(not r.ok for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed")
    return EXIT_CHECK if failed else EXIT_OK


def _int_list(value: str) -> List[int]:
    return [int(x) for x in value.split(",") if x]


def cmd_bench(args) -> int:
    params = {"seed": args.seed}
    if args.sigma is not None:
        params["sigma"] = args.sigma
    if args.k_min is not None:
        params["k_min"] = args.k_min
    if args.k_max is not None:
        params["k_max"] = args.k_max
    if args.lengths:
        params["lengths"] = args.lengths
    writer = csv.DictWriter(sys.stdout, fieldnames=bench_mod.COLUMNS, lineterminator="\n")
    writer.writeheader()
    try:
        for row in bench_mod.run_bench(args.family, params, mode=args.sentinels, jobs=args.jobs):
            writer.writerow(row)
            sys.stdout.flush()
    except bench_mod.BoundViolation as exc:
        return _fail(EXIT_CHECK, str(exc))
    except ValueError as exc:
        return _fail(EXIT_USAGE, str(exc))
    return EXIT_OK


def _dot_id(label: str) -> str:
    return '"' + label.replace("\\", "\\\\").replace('"', '\\"') + '"'


def dot_cdawg(index: Index, pretty: bool = True) -> str:
    cd = index.cdawg
    esc = lambda w: escape_word(w, index.sharp, index.dollar, pretty)  # noqa: E731
    lines = ["digraph cdawg {", "  rankdir=LR;", "  node [shape=circle];"]
    for v in range(cd.node_count):
        label = esc(decompress_node(index.grammar, cd, v)) if v else "source"
        lines.append(f"  n{v} [label={_dot_id(label)}];")
    for e in range(cd.edge_count):
        text = esc(cd.label(e)) if cd.text is not None else esc(bytes([cd.e_char[e]]))
        style = "" if cd.e_primary[e] else ", color=gray40"
        lines.append(f"  n{cd.e_src[e]} -> n{cd.e_dst[e]} [label={_dot_id(text)}{style}];")
    for v in range(1, cd.node_count):
        lines.append(f"  n{v} -> n{cd.slink[v]} [style=dashed, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def dot_lpt(index: Index, pretty: bool = True) -> str:
    cd, lpt = index.cdawg, index.lpt
    esc = lambda w: escape_word(w, index.sharp, index.dollar, pretty)  # noqa: E731
    lines = ["digraph lpt {", "  node [shape=circle];"]
    for x in range(lpt.node_count):
        if lpt.is_white(x):
            label = esc(decompress_node(index.grammar, cd, x)) if x else "source"
            lines.append(f"  t{x} [label={_dot_id(label)}];")
        else:
            label = f"{lpt.str_len[x]}:{lpt.gray_target(x)}"
            lines.append(f"  t{x} [label={_dot_id(label)}, style=filled, fillcolor=gray];")
    for e in range(lpt.edge_count):
        x = lpt.edge_child[e]
        text = esc(cd.label(e)) if cd.text is not None else esc(bytes([cd.e_char[e]]))
        lines.append(f"  t{lpt.parent[x]} -> t{x} [label={_dot_id(text)}];")
    for x in range(1, lpt.node_count):
        if lpt.slink[x] >= 0:
            lines.append(f"  t{x} -> t{lpt.slink[x]} [style=dashed, constraint=false];")
    for e in range(lpt.edge_count):
        x = lpt.edge_child[e]
        lines.append(f"  t{x} -> t{lpt.bottom[e]} [style=bold, color=blue, constraint=false];")
    lines.append("}")
    return "\n".join(lines) + "\n"


def cmd_dot(args) -> int:
    index, code = _load(args.index)
    if index is None:
        return code
    render = dot_cdawg if args.graph == "cdawg" else dot_lpt
    sys.stdout.write(render(index, pretty=not args.raw))
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="cdwg", description="CDAWG index: minimal absent words, EBFs, MRWs and MUSs.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def text_input(sp):
        sp.add_argument("input", help="input file, or - for stdin")
        sp.add_argument("--sentinels", choices=SENTINEL_CHOICES, default="end")
        sp.add_argument("--orientation", choices=["auto", "forward", "reverse"], default="auto")

    sp = sub.add_parser("index", help="build an index and write it to a file")
    text_input(sp)
    sp.add_argument("--out", help="output index path")
    sp.add_argument("--retain-text", action="store_true", help="store the text for readable DOT labels")
    sp.set_defaults(func=cmd_index)

    sp = sub.add_parser("enumerate", help="stream a word set from an index file")
    sp.add_argument("index")
    sp.add_argument("--set", choices=["maw", "ebf", "mrw", "mus"], default="maw")
    sp.add_argument("--k", type=int, help="occurrence count for --set mrw")
    sp.add_argument("--min-len", type=int)
    sp.add_argument("--max-len", type=int)
    sp.add_argument("--format", choices=["plain", "tsv", "count"], default="plain")
    sp.add_argument("--limit", type=int)
    sp.add_argument("--pretty", action="store_true", help="render sentinels as glyphs")
    sp.set_defaults(func=cmd_enumerate)

    sp = sub.add_parser("check", help="run the invariant suite on a text")
    text_input(sp)
    sp.add_argument("--bounds-only", action="store_true", help="skip oracle comparisons")
    sp.add_argument("--inject-fault", action="store_true", help=argparse.SUPPRESS)
    sp.set_defaults(func=cmd_check)

    sp = sub.add_parser("bench", help="measure a family of texts, CSV on stdout")
    sp.add_argument("--family", choices=["random", "fib", "debruijn"], required=True)
    sp.add_argument("--sigma", type=int)
    sp.add_argument("--k-min", type=int)
    sp.add_argument("--k-max", type=int)
    sp.add_argument("--lengths", type=_int_list, help="comma-separated lengths for the random family")
    sp.add_argument("--seed", type=int, default=0)
    sp.add_argument("--sentinels", choices=SENTINEL_CHOICES, default="end")
    sp.add_argument("--jobs", type=int, default=1)
    sp.set_defaults(func=cmd_bench)

    sp = sub.add_parser("dot", help="export the CDAWG or LPT+ as DOT")
    sp.add_argument("index")
    sp.add_argument("--graph", choices=["cdawg", "lpt"], default="cdawg")
    sp.add_argument("--raw", action="store_true", help="escape sentinels instead of glyphs")
    sp.set_defaults(func=cmd_dot)
    return p


def main(argv: Optional[List[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        return EXIT_OK


if __name__ == "__main__":
    sys.exit(main())
