"""Command-line interface: ``rooklab <command> ...``.

Exit status is 0 on success, 1 when ``verify`` finds a violation and 2 on
bad input (unparsable arguments, invalid boards or placements, boards that
are not equivalent).
"""

from __future__ import annotations

import argparse
import json
import sys

from . import __version__
from .board import (
    ascii_diagram,
    delta,
    l_operator,
    m_increasing_representative,
    pad_to,
    parse_board,
    singleton_of,
    square,
)
from .errors import RookError
from .fs_bijection import equivalence_script, transport
from .gm_rook import gm_rook_transport, smallest_triangle
from .hit import gm_hit_transport, hit_vector, q_hit_polynomial, xi_statistic
from .placement import parse_cells, q_rook_polynomial, rook_numbers, validate_placement
from .poly import are_equivalent
from .verify import SUITES, default_cells, run_suite


class _UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _board_arg(text):
    try:
        return parse_board(text)
    except (ValueError, RookError) as exc:
        raise argparse.ArgumentTypeError(f"bad board {text!r}: {exc}") from exc


def _cells_arg(text):
    try:
        return parse_cells(text)
    except (ValueError, TypeError) as exc:
        raise argparse.ArgumentTypeError(f"bad cell list {text!r}: {exc}") from exc


def _m_list(text):
    try:
        values = tuple(int(x) for x in text.split(","))
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad m list {text!r}") from exc
    if not values or min(values) < 1:
        raise argparse.ArgumentTypeError("m values must be positive")
    return values


def _positive(text):
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return value


def _cells_json(cells):
    return [list(c) for c in sorted(cells)]


def _cells_text(cells):
    return ";".join(f"{c},{r}" for c, r in sorted(cells)) or "(empty)"


# -- commands ---------------------------------------------------------------


def cmd_count(args, out):
    counts = rook_numbers(args.board, args.m)
    if args.k is not None:
        value = counts[args.k] if args.k < len(counts) else 0
        return {"board": list(args.board.heights), "m": args.m, "k": args.k, "count": value}, str(value)
    data = {"board": list(args.board.heights), "m": args.m, "rook_numbers": counts}
    return data, ", ".join(map(str, counts))


def cmd_qpoly(args, out):
    poly = q_rook_polynomial(args.board, args.m, args.k)
    data = {"board": list(args.board.heights), "m": args.m, "k": args.k, "coefficients": json.loads(poly.to_json())}
    return data, str(poly)


def cmd_singleton(args, out):
    B = singleton_of(args.board, args.m)
    return {"board": list(args.board.heights), "m": args.m, "singleton": list(B.heights)}, str(B)


def cmd_lop(args, out):
    B = l_operator(args.board, args.m)
    return {"board": list(args.board.heights), "m": args.m, "l": list(B.heights)}, str(B)


def cmd_rep(args, out):
    rep, steps = m_increasing_representative(args.board, args.m)
    data = {
        "board": list(args.board.heights),
        "m": args.m,
        "representative": list(rep.heights),
        "script": [s.to_dict() for s in steps],
    }
    return data, "\n".join([str(rep)] + [f"  {s}" for s in steps])


def cmd_equiv(args, out):
    same = are_equivalent(args.a, args.b, args.m)
    rep_a = m_increasing_representative(args.a, args.m)[0]
    rep_b = m_increasing_representative(args.b, args.m)[0]
    data = {
        "a": list(args.a.heights),
        "b": list(args.b.heights),
        "m": args.m,
        "equivalent": same,
        "representatives": [list(rep_a.heights), list(rep_b.heights)],
    }
    text = f"true\n{rep_a}" if same else f"false\n{rep_a} vs {rep_b}"
    return data, text


def cmd_transport(args, out):
    trace = [] if args.trace else None
    image = transport(args.source, args.target, args.m, args.placement, trace=trace)
    data = {
        "from": list(args.source.heights),
        "to": list(args.target.heights),
        "m": args.m,
        "placement": _cells_json(image.cells),
    }
    text = _cells_text(image.cells)
    if trace is not None:
        data["script"] = equivalence_script(args.source, args.target, args.m).to_list()
        data["trace"] = [{"step": s.to_dict(), "placement": _cells_json(c)} for s, c in trace]
        start = validate_placement(args.source, args.m, args.placement).cells
        blocks = [f"start ({args.source.stripped()}): {_cells_text(start)}",
                  ascii_diagram(args.source.stripped(), args.m, _unshift(start, args.source))]
        for step, cells in trace:
            blocks.append(f"{step}: {_cells_text(cells)}")
            blocks.append(ascii_diagram(step.target, args.m, cells))
        blocks.append(text)
        text = "\n".join(blocks)
    return data, text


def _unshift(cells, B):
    z = B.leading_zeros
    return {(c - z, r) for c, r in cells}


def _config_diagram(board, N, m, triangle, config):
    marks = {}
    for cell in getattr(config, "whites", ()):
        marks[cell] = "W"
    for cell in getattr(config, "circled", ()):
        marks[cell] = "C"
    for cell in config.blacks:
        marks[cell] = "R"
    ambient = delta(N, m) if triangle else square(N, m)
    h = board.heights
    for c in range(1, N + 1):
        for r in range(1, ambient.heights[c - 1] + 1):
            if (c, r) not in marks and r > h[c - 1]:
                marks[(c, r)] = ":"
    return ascii_diagram(ambient, m, (), marks)


def _trace_blocks(trace, N, m, triangle):
    blocks, rows = [], []
    for side, tag, cfg in trace.steps:
        rows.append({"side": side, "map": tag, "config": cfg.to_dict()})
        blocks.append(f"[{side} after {tag}] sign {cfg.sign:+d}")
        blocks.append(_config_diagram(cfg.board, N, m, triangle, cfg))
    return blocks, rows


def cmd_gm_transport(args, out):
    cells = validate_placement(args.source, args.m, args.placement).cells
    N = args.N if args.N is not None else smallest_triangle([args.source, args.target], args.m, len(cells))
    traces = [] if args.trace else None
    image = gm_rook_transport(args.source, args.target, args.m, N, len(cells), cells, trace=traces)
    data = {
        "from": list(args.source.heights),
        "to": list(args.target.heights),
        "m": args.m,
        "N": N,
        "placement": _cells_json(image.cells),
    }
    text = _cells_text(image.cells)
    if traces:
        blocks, rows = _trace_blocks(traces[0], N, args.m, triangle=True)
        data["trace"] = rows
        text = "\n".join(blocks + [text])
    return data, text


def cmd_hit(args, out):
    vec = hit_vector(args.board, args.m, args.N)
    if args.k is not None:
        value = vec[args.k] if 0 <= args.k < len(vec) else 0
        return {"board": list(args.board.heights), "m": args.m, "N": args.N, "k": args.k, "hits": value}, str(value)
    data = {"board": list(args.board.heights), "m": args.m, "N": args.N, "hit_numbers": vec}
    return data, ", ".join(map(str, vec))


def cmd_hit_transport(args, out):
    rooks = frozenset(args.rooks)
    P = pad_to(args.source, args.N)
    k = sum(1 for c, r in rooks if 1 <= c <= args.N and r <= P.heights[c - 1])
    traces = [] if args.trace else None
    image = gm_hit_transport(args.source, args.target, args.m, args.N, k, rooks, trace=traces)
    data = {
        "from": list(args.source.heights),
        "to": list(args.target.heights),
        "m": args.m,
        "N": args.N,
        "k": k,
        "rooks": _cells_json(image),
    }
    text = _cells_text(image)
    if traces:
        blocks, rows = _trace_blocks(traces[0], args.N, args.m, triangle=False)
        data["trace"] = rows
        text = "\n".join(blocks + [text])
    return data, text


def cmd_hit_qpoly(args, out):
    poly = q_hit_polynomial(args.board, args.m, args.N, args.k)
    data = {"board": list(args.board.heights), "m": args.m, "N": args.N, "k": args.k,
            "coefficients": json.loads(poly.to_json())}
    return data, str(poly)


def cmd_xi(args, out):
    value = xi_statistic(args.board, args.m, args.N, args.rooks)
    return {"board": list(args.board.heights), "m": args.m, "N": args.N, "xi": value}, str(value)


def cmd_verify(args, out):
    names = sorted(SUITES) if args.suite == "all" else [args.suite]
    cells = args.max_cells if args.max_cells is not None else default_cells()
    results = [
        run_suite(name, max_cells=cells, m_list=args.m_list, max_n=args.max_n,
                  **({"seed": args.seed, "samples": args.samples} if name == "hit" else {}))
        for name in names
    ]
    data = {"max_cells": cells, "m_list": list(args.m_list), "max_n": args.max_n,
            "results": [r.to_dict() for r in results]}
    lines = []
    for r in results:
        lines.append(f"{r.name}: {'ok' if r.ok else 'FAIL'} ({r.cases} cases)")
        if not r.ok:
            lines.append(f"  counterexample: {json.dumps(r.counterexample)}")
        for note in r.notes:
            lines.append(f"  note: {json.dumps(note)}")
    status = 0 if all(r.ok for r in results) else 1
    return data, "\n".join(lines), status


# -- parser -----------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="rooklab", description="m-level rook placements on Ferrers boards")
    parser.add_argument("--version", action="version", version=f"rooklab {__version__}")
    parser.add_argument("--format", choices=("text", "json"), default="text")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name, func, help_text):
        p = sub.add_parser(name, help=help_text)
        p.add_argument("--format", choices=("text", "json"), default=argparse.SUPPRESS)
        p.set_defaults(func=func)
        return p

    p = add("count", cmd_count, "m-level rook numbers")
    p.add_argument("--board", type=_board_arg, required=True)
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--k", type=int)

    p = add("qpoly", cmd_qpoly, "inversion generating polynomial for k rooks")
    p.add_argument("--board", type=_board_arg, required=True)
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--k", type=int, required=True)

    for name, func, text in (
        ("singleton", cmd_singleton, "equivalent singleton board"),
        ("lop", cmd_lop, "board of reversed level counts"),
        ("rep", cmd_rep, "m-increasing representative and its script"),
    ):
        p = add(name, func, text)
        p.add_argument("--board", type=_board_arg, required=True)
        p.add_argument("--m", type=_positive, required=True)

    p = add("equiv", cmd_equiv, "decide m-level rook equivalence")
    p.add_argument("--a", type=_board_arg, required=True)
    p.add_argument("--b", type=_board_arg, required=True)
    p.add_argument("--m", type=_positive, required=True)

    for name, func, text in (
        ("transport", cmd_transport, "inversion-preserving placement transport"),
        ("gm-transport", cmd_gm_transport, "involution-principle transport between singleton boards"),
    ):
        p = add(name, func, text)
        p.add_argument("--from", dest="source", type=_board_arg, required=True)
        p.add_argument("--to", dest="target", type=_board_arg, required=True)
        p.add_argument("--m", type=_positive, required=True)
        p.add_argument("--placement", type=_cells_arg, required=True)
        p.add_argument("--trace", action="store_true")
        if name == "gm-transport":
            p.add_argument("--N", type=_positive)

    p = add("hit", cmd_hit, "hit numbers over the wreath product")
    p.add_argument("--board", type=_board_arg, required=True)
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--N", type=_positive, required=True)
    p.add_argument("--k", type=int)

    p = add("hit-transport", cmd_hit_transport, "involution-principle transport between hit sets")
    p.add_argument("--from", dest="source", type=_board_arg, required=True)
    p.add_argument("--to", dest="target", type=_board_arg, required=True)
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--N", type=_positive, required=True)
    p.add_argument("--rooks", type=_cells_arg, required=True)
    p.add_argument("--trace", action="store_true")

    p = add("hit-qpoly", cmd_hit_qpoly, "xi generating polynomial of a hit set")
    p.add_argument("--board", type=_board_arg, required=True)
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--N", type=_positive, required=True)
    p.add_argument("--k", type=int, required=True)

    p = add("xi", cmd_xi, "xi statistic of one full placement")
    p.add_argument("--board", type=_board_arg, required=True)
    p.add_argument("--m", type=_positive, required=True)
    p.add_argument("--N", type=_positive, required=True)
    p.add_argument("--rooks", type=_cells_arg, required=True)

    p = add("verify", cmd_verify, "run an exhaustive invariant suite")
    p.add_argument("--suite", choices=sorted(SUITES) + ["all"], default="all")
    p.add_argument("--max-cells", type=_positive)
    p.add_argument("--m-list", type=_m_list, default=(1, 2, 3))
    p.add_argument("--max-n", type=_positive, default=3)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=2)
    return parser


def _emit(out, fmt, data, text):
    if fmt == "json":
        out.write(json.dumps(data, sort_keys=True) + "\n")
    else:
        out.write(text + "\n")


def run(argv=None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    argv = list(sys.argv[1:] if argv is None else argv)
    fmt = "json" if _wants_json(argv) else "text"
    try:
        args = build_parser().parse_args(argv)
    except _UsageError as exc:
        return _error(out, err, fmt, "usage", str(exc))
    fmt = args.format
    try:
        result = args.func(args, out)
    except RookError as exc:
        return _error(out, err, fmt, type(exc).__name__, str(exc))
    data, text = result[0], result[1]
    _emit(out, fmt, data, text)
    return result[2] if len(result) > 2 else 0


def _wants_json(argv) -> bool:
    for i, tok in enumerate(argv):
        if tok == "--format=json" or (tok == "--format" and i + 1 < len(argv) and argv[i + 1] == "json"):
            return True
    return False


def _error(out, err, fmt, kind, message) -> int:
    if fmt == "json":
        out.write(json.dumps({"error": kind, "message": message}, sort_keys=True) + "\n")
    else:
        err.write(f"rooklab: error: {message}\n")
    return 2


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
