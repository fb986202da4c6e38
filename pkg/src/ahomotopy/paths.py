"""Stabilised paths out of ``I_∞``, homotopy grids and homotopy traces.

A map ``I_∞ -> G`` that is eventually constant on both ends is stored as
its canonical finite word: the shortest window outside of which the map is
constant.  Rectangular grids play the role of maps ``I_∞ ⊗ I_∞ -> G``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .errors import ConcatError, InvalidInput, InvalidTarget, NotAPath
from .graphs import Graph, GraphMap, is_cycle_graph, pointwise_close


def check_steps(target: Graph, word: Sequence[int]) -> None:
    for v in word:
        if not 0 <= v < target.num_vertices:
            raise NotAPath(f"vertex {v} not in target")
    for i in range(len(word) - 1):
        if not target.adjacent_or_equal(word[i], word[i + 1]):
            raise NotAPath(f"step {word[i]} -> {word[i + 1]} at position {i} is not an edge")


def canonical_bounds(word: Sequence[int]) -> tuple[int, int]:
    """``(lo, hi)`` such that ``word[lo:hi + 1]`` is the canonical word."""
    lo, hi = 0, len(word) - 1
    while lo < hi and word[lo] == word[lo + 1]:
        lo += 1
    while hi > lo and word[hi] == word[hi - 1]:
        hi -= 1
    return lo, hi


@dataclass(frozen=True)
class StablePath:
    target: Graph
    word: tuple

    def __post_init__(self):
        word = tuple(self.word)
        if not word:
            raise NotAPath("empty word")
        check_steps(self.target, word)
        lo, hi = canonical_bounds(word)
        object.__setattr__(self, "word", word[lo:hi + 1])

    def __len__(self):
        return len(self.word)

    def __repr__(self):
        return f"StablePath({list(self.word)})"

    @property
    def start(self) -> int:
        return self.word[0]

    @property
    def end(self) -> int:
        return self.word[-1]

    def padded(self, width: int) -> tuple:
        """The word extended by its end value to ``width + 1`` entries."""
        if width < len(self.word) - 1:
            raise InvalidInput(f"width {width} is shorter than the path ({len(self.word) - 1} steps)")
        return self.word + (self.word[-1],) * (width + 1 - len(self.word))


def canonicalize(target: Graph, word: Sequence[int]) -> StablePath:
    return StablePath(target, tuple(word))


def constant_path(g: Graph, v: int) -> StablePath:
    return StablePath(g, (v,))


def active_length(p: StablePath) -> int:
    """Number of steps in the canonical word, 0 for constant paths."""
    return len(p.word) - 1


def endpoints(p: StablePath) -> tuple[int, int]:
    return p.start, p.end


def is_cycle(p: StablePath) -> bool:
    return p.start == p.end


def reverse(p: StablePath) -> StablePath:
    return StablePath(p.target, p.word[::-1])


def concat(p: StablePath, *rest: StablePath) -> StablePath:
    """Concatenate paths end to start; the junction vertex is kept once."""
    word = p.word
    for q in rest:
        if q.target != p.target:
            raise ConcatError("paths live in different graphs")
        if word[-1] != q.start:
            raise ConcatError(f"end {word[-1]} does not match start {q.start}")
        word = word + q.word[1:]
    return StablePath(p.target, word)


def map_path(f: GraphMap, p: StablePath) -> StablePath:
    if p.target != f.source:
        raise InvalidInput("path does not live in the source of the map")
    return StablePath(f.target, tuple(f.assignment[v] for v in p.word))


def winding_net(target: Graph, word: Sequence[int]) -> int:
    """Signed step count of a word in ``C_n`` (+1 forward, -1 back, 0 stall)."""
    if not is_cycle_graph(target):
        raise InvalidTarget("winding numbers are only defined for targets C_n")
    n = target.num_vertices
    net = 0
    for a, b in zip(word, word[1:]):
        d = (b - a) % n
        if d == 1:
            net += 1
        elif d == n - 1:
            net -= 1
        elif d != 0:
            raise NotAPath(f"step {a} -> {b} is not an edge of C_{n}")
    return net


def winding_number(p: StablePath) -> int:
    if not is_cycle(p):
        raise InvalidInput("winding number needs a closed path")
    net = winding_net(p.target, p.word)
    return net // p.target.num_vertices


@dataclass(frozen=True)
class HomotopyGrid:
    """Vertex matrix whose rows and columns are all walks in ``target``.

    ``cells[i][j]`` is row ``i`` (top is 0) and column ``j``.
    """

    target: Graph
    cells: tuple

    def __post_init__(self):
        cells = tuple(tuple(r) for r in self.cells)
        if not cells or not cells[0]:
            raise InvalidInput("grid must have at least one cell")
        width = len(cells[0])
        for r in cells:
            if len(r) != width:
                raise InvalidInput("ragged grid")
            check_steps(self.target, r)
        for a, b in zip(cells, cells[1:]):
            for j, (x, y) in enumerate(zip(a, b)):
                if not self.target.adjacent_or_equal(x, y):
                    raise NotAPath(f"column {j} steps {x} -> {y}, not an edge")
        object.__setattr__(self, "cells", cells)

    @classmethod
    def unchecked(cls, target: Graph, cells) -> "HomotopyGrid":
        """Build a grid without validation, e.g. to feed a verifier."""
        gr = object.__new__(cls)
        object.__setattr__(gr, "target", target)
        object.__setattr__(gr, "cells", tuple(tuple(r) for r in cells))
        return gr

    def is_valid(self) -> bool:
        try:
            HomotopyGrid(self.target, self.cells)
        except (InvalidInput, NotAPath):
            return False
        return True

    @property
    def rows(self) -> int:
        return len(self.cells) - 1

    @property
    def cols(self) -> int:
        return len(self.cells[0]) - 1

    def row(self, i: int) -> tuple:
        return self.cells[i]

    def column(self, j: int) -> tuple:
        return tuple(r[j] for r in self.cells)


def grid_boundary(gr: HomotopyGrid) -> tuple[StablePath, StablePath, StablePath, StablePath]:
    """``(top, bottom, left, right)``, each canonicalised."""
    t = gr.target
    return (StablePath(t, gr.row(0)), StablePath(t, gr.row(gr.rows)),
            StablePath(t, gr.column(0)), StablePath(t, gr.column(gr.cols)))


def hconcat(a: HomotopyGrid, *rest: HomotopyGrid) -> HomotopyGrid:
    """Glue grids side by side; shared columns are stored once."""
    cells = [list(r) for r in a.cells]
    for b in rest:
        if b.target != a.target:
            raise ConcatError("grids live in different graphs")
        if b.rows != a.rows:
            raise ConcatError(f"row counts differ ({a.rows} vs {b.rows})")
        if tuple(r[-1] for r in cells) != b.column(0):
            raise ConcatError("right column does not match the next left column")
        for r, br in zip(cells, b.cells):
            r.extend(br[1:])
    return HomotopyGrid(a.target, tuple(tuple(r) for r in cells))


def hreverse(a: HomotopyGrid) -> HomotopyGrid:
    return HomotopyGrid(a.target, tuple(r[::-1] for r in a.cells))


@dataclass(frozen=True)
class HomotopyTrace:
    """Maps ``f_0, ..., f_k`` with consecutive maps pointwise equal-or-adjacent."""

    maps: tuple

    def __post_init__(self):
        maps = tuple(self.maps)
        if not maps:
            raise InvalidInput("empty trace")
        src, tgt = maps[0].source, maps[0].target
        for m in maps:
            if m.source != src or m.target != tgt:
                raise InvalidInput("trace maps have different sources or targets")
        for a, b in zip(maps, maps[1:]):
            if not pointwise_close(tgt, a.assignment, b.assignment):
                raise InvalidInput(f"{a!r} and {b!r} are not one step apart")
        object.__setattr__(self, "maps", maps)

    def __len__(self):
        return len(self.maps) - 1

    @property
    def first(self) -> GraphMap:
        return self.maps[0]

    @property
    def last(self) -> GraphMap:
        return self.maps[-1]
