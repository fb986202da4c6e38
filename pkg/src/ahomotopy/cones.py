"""Cones under the span ``I_0 <- I_0 ⊔ I_0 -> I_0`` and maps between them.

A cone with apex ``G`` is a closed stabilised walk in ``G`` with four marked
positions ``i1 <= i2 <= i3 <= i4``.  Cutting the word at the marks gives
five pieces; the middle three are ``p1``, ``p2^-1`` and ``q2`` and the outer
two, joined through the base point, form ``q1^-1``.

A cone map ``f_* λ -> λ'`` is a graph map ``f`` together with a grid whose
top row is the pushed-forward walk and whose bottom row is the target walk.
Both rows are cut at the same four columns, and each cut segment must be
the corresponding piece padded by its last vertex.  The two outer columns
of the grid have to agree.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Optional

from .errors import InvalidCone
from .graphs import DEFAULT_CAP, Graph, GraphMap, cycle_graph, enumerate_homomorphisms, is_graph_map
from ._kernels import decode, encode, row_ball
from .homotopy import DEFAULT_STATE_CAP
from .paths import (HomotopyGrid, StablePath, active_length, canonical_bounds, is_cycle, map_path,
                    reverse, winding_number)


def _transport(raw: tuple, marks) -> tuple[tuple, tuple]:
    """Canonicalise ``raw`` and move ``marks`` along with it."""
    lo, hi = canonical_bounds(raw)
    return raw[lo:hi + 1], tuple(min(max(i - lo, 0), hi - lo) for i in marks)


@dataclass(frozen=True)
class Cone:
    apex: Graph
    cycle: StablePath
    marks: tuple

    def __post_init__(self):
        object.__setattr__(self, "marks", tuple(self.marks))
        if self.cycle.target != self.apex:
            raise InvalidCone("cycle does not live in the apex")
        if not is_cycle(self.cycle):
            raise InvalidCone("cone walk is not closed")
        if len(self.marks) != 4:
            raise InvalidCone(f"need four marks, got {len(self.marks)}")
        k = len(self.cycle.word) - 1
        prev = 0
        for i in self.marks:
            if not prev <= i <= k:
                raise InvalidCone(f"marks {self.marks} are not ordered positions in 0..{k}")
            prev = i

    @property
    def word(self) -> tuple:
        return self.cycle.word

    @property
    def vertices(self) -> tuple:
        """``(v1, v2, v3, v4)``."""
        return tuple(self.word[i] for i in self.marks)

    def pieces(self) -> tuple:
        """The five subwords between base point and marks."""
        cuts = (0,) + self.marks + (len(self.word) - 1,)
        return tuple(self.word[a:b + 1] for a, b in zip(cuts, cuts[1:]))

    def decompose(self) -> tuple[StablePath, StablePath, StablePath, StablePath]:
        """``(p1, p2, q1, q2)`` with ``p1: v1->v2``, ``p2: v3->v2``, ``q1: v1->v4``, ``q2: v3->v4``."""
        g, w = self.apex, self.word
        i1, i2, i3, i4 = self.marks
        p1 = StablePath(g, w[i1:i2 + 1])
        p2 = reverse(StablePath(g, w[i2:i3 + 1]))
        q2 = StablePath(g, w[i3:i4 + 1])
        q1 = reverse(StablePath(g, w[i4:] + w[1:i1 + 1]))
        return p1, p2, q1, q2

    def rebased(self) -> StablePath:
        """The cycle read from ``v1``: ``p1 . p2^-1 . q2 . q1^-1``."""
        i1 = self.marks[0]
        return StablePath(self.apex, self.word[i1:] + self.word[1:i1 + 1])


def cone_from_quadruple(p1: StablePath, p2: StablePath, q1: StablePath, q2: StablePath,
                        v1: int, v2: int, v3: int, v4: int) -> Cone:
    ends = {"p1": (p1, v1, v2), "p2": (p2, v3, v2), "q1": (q1, v1, v4), "q2": (q2, v3, v4)}
    for name, (path, a, b) in ends.items():
        if (path.start, path.end) != (a, b):
            raise InvalidCone(f"{name} runs {path.start}->{path.end}, expected {a}->{b}")
        if path.target != p1.target:
            raise InvalidCone(f"{name} lives in a different graph")
    legs = (p1, reverse(p2), q2, reverse(q1))
    raw = legs[0].word
    marks = [0]
    for leg in legs[1:]:
        marks.append(len(raw) - 1)
        raw = raw + leg.word[1:]
    word, moved = _transport(raw, marks)
    return Cone(p1.target, StablePath(p1.target, word), moved)


def pushforward_cone(f: GraphMap, cone: Cone) -> Cone:
    """``f_* λ``: the image walk with the marks carried through canonicalisation."""
    if f.source != cone.apex:
        raise InvalidCone("map source is not the cone apex")
    raw = tuple(f.assignment[v] for v in cone.word)
    word, marks = _transport(raw, cone.marks)
    return Cone(f.target, StablePath(f.target, word), marks)


def identity_cone(n: int, marks=(0, 1, 2, 3)) -> Cone:
    """The identity walk ``0, 1, ..., n-1, 0`` on ``C_n`` with the given marks."""
    g = cycle_graph(n)
    return Cone(g, StablePath(g, tuple(range(n)) + (0,)), marks)


def obstruction_cone(src: Cone) -> Cone:
    """The target cone with no cone map out of ``src``.

    Identity walk on ``C_N`` with ``N = max(m + 1, 5)`` (``m`` the active
    length of the source walk) and every mark at position 0.  ``C_3`` and
    ``C_4`` are contractible, hence the floor of 5.
    """
    n = max(active_length(src.cycle) + 1, 5)
    return identity_cone(n, (0, 0, 0, 0))


@dataclass(frozen=True)
class ConeMap:
    map: GraphMap
    target_cone: Cone
    homotopy: HomotopyGrid
    columns: tuple


@dataclass(frozen=True)
class Verification:
    ok: bool
    reason: str = ""

    def __bool__(self):
        return self.ok


def _segments(width_cuts, pieces):
    for (a, b), piece in zip(zip(width_cuts, width_cuts[1:]), pieces):
        yield a, b, piece


def _padded(piece: tuple, width: int) -> Optional[tuple]:
    if width < len(piece) - 1:
        return None
    return piece + (piece[-1],) * (width + 1 - len(piece))


def verify_cone_map(src: Cone, cm: ConeMap) -> Verification:
    """Re-check every cone-map condition of ``cm`` against ``src``."""
    f, tgt, gr = cm.map, cm.target_cone, cm.homotopy
    if f.source != src.apex:
        return Verification(False, "map source is not the source apex")
    if f.target != tgt.apex:
        return Verification(False, "map target is not the target apex")
    if not is_graph_map(f.source, f.target, f.assignment):
        return Verification(False, "map violates the hom condition")
    if gr.target != tgt.apex:
        return Verification(False, "grid does not live in the target apex")
    cells = gr.cells
    if not cells or not cells[0] or any(len(r) != len(cells[0]) for r in cells):
        return Verification(False, "grid is not rectangular")
    h = tgt.apex
    for i, r in enumerate(cells):
        for a, b in zip(r, r[1:]):
            if not (0 <= a < h.num_vertices and 0 <= b < h.num_vertices) or not h.adjacent_or_equal(a, b):
                return Verification(False, f"row step {a}->{b} in row {i}")
    for r0, r1 in zip(cells, cells[1:]):
        for j, (a, b) in enumerate(zip(r0, r1)):
            if not h.adjacent_or_equal(a, b):
                return Verification(False, f"column step {a}->{b} in column {j}")
    k = len(cells[0]) - 1
    cols = tuple(cm.columns)
    if len(cols) != 4 or not all(0 <= x <= y <= k for x, y in zip((0,) + cols, cols + (k,))):
        return Verification(False, f"marked columns {cols} are not ordered in 0..{k}")
    if gr.column(0) != gr.column(k):
        return Verification(False, "outer columns differ")
    pushed = pushforward_cone(f, src)
    cuts = (0,) + cols + (k,)
    top, bottom = cells[0], cells[-1]
    for name, row, pieces in (("top", top, pushed.pieces()), ("bottom", bottom, tgt.pieces())):
        for s, (a, b, piece) in enumerate(_segments(cuts, pieces)):
            if row[a:b + 1] != _padded(piece, b - a):
                return Verification(False, f"{name} row segment {s} is not the padded piece {list(piece)}")
    for i, (j, fv, w) in enumerate(zip(cols, pushed.vertices, tgt.vertices), start=1):
        if (top[j], bottom[j]) != (fv, w):
            return Verification(False, f"marked column {i} does not join f(v{i}) to w{i}")
    return Verification(True)


@dataclass(frozen=True)
class ObstructionReport:
    """Windings of ``f . c1`` for every map ``f`` into the obstruction apex."""

    n: int
    target_winding: int
    source_length: int
    entries: tuple = field(default_factory=tuple)

    @property
    def certified(self) -> bool:
        return all(w != self.target_winding for _, _, w in self.entries)

    def to_text(self) -> str:
        lines = [f"obstruction N={self.n} target_winding={self.target_winding}"]
        lines += [f"f {i} winding={w}" for i, _, w in self.entries]
        return "\n".join(lines) + "\n"


def certify_no_cone_map(src: Cone, cap: int = DEFAULT_CAP) -> ObstructionReport:
    """Winding certificate that no cone map ``src -> obstruction_cone(src)`` exists.

    A cone map along ``f`` would be a grid from ``f . c1`` to the identity
    walk with equal outer columns; such a grid preserves the signed step
    count in ``C_N`` for ``N >= 5``.  Every ``f . c1`` has at most
    ``m < N`` steps, so its winding is 0 while the target's is 1.
    """
    tgt = obstruction_cone(src)
    h = tgt.apex
    entries = []
    for i, f in enumerate(enumerate_homomorphisms(src.apex, h, cap)):
        entries.append((i, f.assignment, winding_number(map_path(f, src.cycle))))
    return ObstructionReport(h.num_vertices, winding_number(tgt.cycle),
                             active_length(src.cycle), tuple(entries))


def check_report(src: Cone, report: ObstructionReport, cap: int = DEFAULT_CAP) -> bool:
    """Recompute a report from scratch and compare."""
    fresh = certify_no_cone_map(src, cap)
    return ([(i, w) for i, _, w in fresh.entries] == [(i, w) for i, _, w in report.entries]
            and (fresh.n, fresh.target_winding) == (report.n, report.target_winding))


def _compositions(total: int, parts: int):
    """Ways to write ``total`` as an ordered sum of ``parts`` nonnegative ints, lex order."""
    for cut in itertools.combinations(range(total + parts - 1), parts - 1):
        bounds = (-1,) + cut + (total + parts - 1,)
        yield tuple(b - a - 1 for a, b in zip(bounds, bounds[1:]))


class _RowBall:
    """Closed rows within ``depth`` moves of a root row, with parent links."""

    def __init__(self, h: Graph, root: tuple, depth: int, cap: int):
        self.n, self.length = h.num_vertices, len(root)
        self.parent = row_ball(h, root, depth, cap, free=True)

    def path_from(self, row: tuple) -> Optional[list]:
        code = encode(row, self.n)
        if code not in self.parent:
            return None
        out = [code]
        while self.parent[out[-1]] != -1:
            out.append(self.parent[out[-1]])
        return [decode(c, self.n, self.length) for c in out]


def search_cone_maps(src: Cone, tgt: Cone, max_rows: int, max_cols: int,
                     cap: int = DEFAULT_CAP, state_cap: int = DEFAULT_STATE_CAP) -> list:
    """Bounded brute-force search for cone maps ``src -> tgt``.

    For each map ``f`` of apexes, in canonical order, tries every grid width
    up to ``max_cols`` and every placement of the four marked columns, and
    searches breadth-first for a grid with at most ``max_rows`` row steps.
    Returns the first cone map found for each ``f`` that admits one.  Uses
    no invariant of the target beyond the cone-map conditions themselves.
    """
    h = tgt.apex
    balls = {}
    bottom_pieces = tgt.pieces()
    found = []
    for f in enumerate_homomorphisms(src.apex, h, cap):
        pushed = pushforward_cone(f, src)
        top_pieces = pushed.pieces()
        least = [max(len(a), len(b)) - 1 for a, b in zip(top_pieces, bottom_pieces)]
        hit = None
        for k in range(sum(least), max_cols + 1):
            for extra in _compositions(k - sum(least), 5):
                widths = [a + b for a, b in zip(least, extra)]
                top, bottom = (), ()
                for w, tp, bp in zip(widths, top_pieces, bottom_pieces):
                    top = top[:-1] + _padded(tp, w)
                    bottom = bottom[:-1] + _padded(bp, w)
                ball = balls.get(bottom)
                if ball is None:
                    ball = balls[bottom] = _RowBall(h, bottom, max_rows, state_cap)
                rows = ball.path_from(top)
                if rows is not None:
                    cols = tuple(itertools.accumulate(widths[:4]))
                    hit = ConeMap(f, tgt, HomotopyGrid(h, tuple(rows)), cols)
                    break
            if hit is not None:
                break
        if hit is not None:
            found.append(hit)
    return found
