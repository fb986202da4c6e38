"""Plain-text file formats for graphs, maps, paths, grids, traces, cones and reports.

All formats are line based.  ``#`` starts a comment and blank lines are
ignored.  Parse errors carry 1-based line and column numbers.
"""

from __future__ import annotations

from .cones import Cone, ObstructionReport
from .errors import InvalidGraph, ParseError
from .graphs import Graph, GraphMap, make_graph
from .paths import HomotopyGrid, HomotopyTrace, StablePath


def _data_lines(text: str):
    """Yield ``(lineno, [(column, token), ...])`` for every non-empty line."""
    for lineno, line in enumerate(text.splitlines(), start=1):
        line = line.split("#", 1)[0]
        toks = []
        col = 0
        for tok in line.split():
            col = line.index(tok, col)
            toks.append((col + 1, tok))
            col += len(tok)
        if toks:
            yield lineno, toks


class _Lines:
    def __init__(self, text: str):
        self._it = iter(list(_data_lines(text)))
        self.last = 0

    def next(self, what: str):
        try:
            lineno, toks = next(self._it)
        except StopIteration:
            raise ParseError(f"unexpected end of input, expected {what}", self.last + 1, 1) from None
        self.last = lineno
        return lineno, toks

    def rest(self):
        for lineno, toks in self._it:
            self.last = lineno
            yield lineno, toks


def _expect_tag(lineno, toks, tag, arity=None):
    col, got = toks[0]
    if got != tag:
        raise ParseError(f"expected '{tag}', got '{got}'", lineno, col)
    if arity is not None and len(toks) != arity + 1:
        raise ParseError(f"'{tag}' takes {arity} values, got {len(toks) - 1}", lineno, col)


def _int(lineno, tok, lo=0, hi=None):
    col, s = tok
    try:
        v = int(s)
    except ValueError:
        raise ParseError(f"expected an integer, got '{s}'", lineno, col) from None
    if v < lo or (hi is not None and v >= hi):
        bound = f"[{lo}, {hi})" if hi is not None else f">= {lo}"
        raise ParseError(f"value {v} outside {bound}", lineno, col)
    return v


def _read_graph(lines: _Lines, stop_tags=()) -> tuple[Graph, list]:
    lineno, toks = lines.next("'n <num_vertices>'")
    _expect_tag(lineno, toks, "n", 1)
    n = _int(lineno, toks[1])
    edges = []
    leftover = []
    for lineno, toks in lines.rest():
        if toks[0][1] in stop_tags:
            leftover.append((lineno, toks))
            leftover.extend(lines.rest())
            break
        _expect_tag(lineno, toks, "e", 2)
        u = _int(lineno, toks[1], 0, n)
        v = _int(lineno, toks[2], 0, n)
        if u == v:
            raise ParseError(f"loop edge ({u}, {v})", lineno, toks[2][0])
        edges.append((u, v))
    try:
        return make_graph(n, edges), leftover
    except InvalidGraph as exc:
        raise ParseError(str(exc), lines.last, 1) from exc


def parse_graph(text: str) -> Graph:
    g, _ = _read_graph(_Lines(text))
    return g


def format_graph(g: Graph) -> str:
    lines = [f"n {g.num_vertices}"] + [f"e {u} {v}" for u, v in g.sorted_edges]
    return "\n".join(lines) + "\n"


def parse_map(text: str) -> tuple[int, int, tuple]:
    """``(n_src, n_tgt, assignment)``; the hom condition is not checked here."""
    lines = _Lines(text)
    lineno, toks = lines.next("'m <n_src> <n_tgt>'")
    _expect_tag(lineno, toks, "m", 2)
    n_src, n_tgt = _int(lineno, toks[1]), _int(lineno, toks[2])
    assignment = [None] * n_src
    for lineno, toks in lines.rest():
        _expect_tag(lineno, toks, "a", 2)
        s = _int(lineno, toks[1], 0, n_src)
        t = _int(lineno, toks[2], 0, n_tgt)
        if assignment[s] is not None:
            raise ParseError(f"vertex {s} assigned twice", lineno, toks[1][0])
        assignment[s] = t
    missing = [v for v, a in enumerate(assignment) if a is None]
    if missing:
        raise ParseError(f"no image given for source vertex {missing[0]}", lines.last + 1, 1)
    return n_src, n_tgt, tuple(assignment)


def format_map(f: GraphMap) -> str:
    lines = [f"m {f.source.num_vertices} {f.target.num_vertices}"]
    lines += [f"a {v} {a}" for v, a in enumerate(f.assignment)]
    return "\n".join(lines) + "\n"


def _read_counted(lineno, toks, tag):
    _expect_tag(lineno, toks, tag)
    if len(toks) < 2:
        raise ParseError(f"'{tag}' needs a length", lineno, toks[0][0])
    k = _int(lineno, toks[1], 1)
    if len(toks) != k + 2:
        raise ParseError(f"'{tag}' announces {k} vertices, got {len(toks) - 2}", lineno, toks[0][0])
    return tuple(_int(lineno, t) for t in toks[2:])


def parse_path(text: str) -> tuple:
    """The raw word of a ``p <k+1> v0 ... vk`` line."""
    lines = _Lines(text)
    lineno, toks = lines.next("'p <k+1> v0 ... vk'")
    word = _read_counted(lineno, toks, "p")
    for lineno, toks in lines.rest():
        raise ParseError("trailing data after path", lineno, toks[0][0])
    return word


def format_path(p: StablePath) -> str:
    return f"p {len(p.word)} " + " ".join(map(str, p.word)) + "\n"


def parse_grid(text: str) -> tuple:
    lines = _Lines(text)
    lineno, toks = lines.next("'g <rows> <cols>'")
    _expect_tag(lineno, toks, "g", 2)
    nrows, ncols = _int(lineno, toks[1], 1), _int(lineno, toks[2], 1)
    cells = []
    for _ in range(nrows):
        lineno, toks = lines.next("a grid row")
        if len(toks) != ncols:
            raise ParseError(f"row has {len(toks)} cells, expected {ncols}", lineno, 1)
        cells.append(tuple(_int(lineno, t) for t in toks))
    for lineno, toks in lines.rest():
        raise ParseError("trailing data after grid", lineno, toks[0][0])
    return tuple(cells)


def format_grid(gr: HomotopyGrid) -> str:
    lines = [f"g {gr.rows + 1} {gr.cols + 1}"] + [" ".join(map(str, r)) for r in gr.cells]
    return "\n".join(lines) + "\n"


def parse_trace(text: str) -> tuple:
    """``(n_src, n_tgt, [assignment, ...])`` of a ``t`` block."""
    lines = _Lines(text)
    lineno, toks = lines.next("'t <k+1> <n_src> <n_tgt>'")
    _expect_tag(lineno, toks, "t", 3)
    k, n_src, n_tgt = (_int(lineno, t) for t in toks[1:])
    maps = []
    for _ in range(k):
        lineno, toks = lines.next("an 'f' line")
        _expect_tag(lineno, toks, "f", n_src)
        maps.append(tuple(_int(lineno, t, 0, n_tgt) for t in toks[1:]))
    for lineno, toks in lines.rest():
        raise ParseError("trailing data after trace", lineno, toks[0][0])
    return n_src, n_tgt, maps


def format_trace(tr: HomotopyTrace) -> str:
    f = tr.first
    lines = [f"t {len(tr.maps)} {f.source.num_vertices} {f.target.num_vertices}"]
    lines += ["f " + " ".join(map(str, m.assignment)) for m in tr.maps]
    return "\n".join(lines) + "\n"


def load_trace(text: str, src: Graph, tgt: Graph) -> HomotopyTrace:
    """Parse and re-validate a trace against its graphs."""
    n_src, n_tgt, maps = parse_trace(text)
    if (n_src, n_tgt) != (src.num_vertices, tgt.num_vertices):
        raise ParseError("trace sizes do not match the graphs", 1, 1)
    return HomotopyTrace(tuple(GraphMap(src, tgt, a) for a in maps))


def load_grid(text: str, target: Graph) -> HomotopyGrid:
    return HomotopyGrid(target, parse_grid(text))


def parse_cone(text: str) -> Cone:
    """Graph block, then ``c <k+1> v0 ... vk``, then ``marks i1 i2 i3 i4``.

    Syntax problems raise ParseError; a walk or marks that do not form a
    cone raise the corresponding validation error.
    """
    g, rest = _read_graph(_Lines(text), stop_tags=("c",))
    if not rest:
        raise ParseError("missing 'c' line", 1, 1)
    lineno, toks = rest[0]
    word = _read_counted(lineno, toks, "c")
    if len(rest) < 2:
        raise ParseError("missing 'marks' line", lineno + 1, 1)
    lineno, toks = rest[1]
    _expect_tag(lineno, toks, "marks", 4)
    marks = tuple(_int(lineno, t) for t in toks[1:])
    if len(rest) > 2:
        raise ParseError("trailing data after marks", rest[2][0], 1)
    return Cone(g, StablePath(g, word), marks)


def format_cone(cone: Cone) -> str:
    return (format_graph(cone.apex)
            + f"c {len(cone.word)} " + " ".join(map(str, cone.word)) + "\n"
            + "marks " + " ".join(map(str, cone.marks)) + "\n")


def parse_report(text: str) -> ObstructionReport:
    lines = _Lines(text)
    lineno, toks = lines.next("'obstruction N=<N> target_winding=<w>'")
    _expect_tag(lineno, toks, "obstruction", 2)
    fields = {}
    for col, tok in toks[1:]:
        key, _, val = tok.partition("=")
        fields[key] = _int(lineno, (col + len(key) + 1, val), -10**9)
    if set(fields) != {"N", "target_winding"}:
        raise ParseError("header needs N= and target_winding=", lineno, 1)
    entries = []
    for lineno, toks in lines.rest():
        _expect_tag(lineno, toks, "f", 2)
        idx = _int(lineno, toks[1])
        col, tok = toks[2]
        if not tok.startswith("winding="):
            raise ParseError("expected 'winding=<w>'", lineno, col)
        w = _int(lineno, (col + 8, tok[8:]), -10**9)
        if idx != len(entries):
            raise ParseError(f"expected index {len(entries)}, got {idx}", lineno, toks[1][0])
        entries.append((idx, None, w))
    return ObstructionReport(fields["N"], fields["target_winding"], -1, tuple(entries))
