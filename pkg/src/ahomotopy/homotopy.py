"""Deciding A-homotopies: between graph maps, and between paths rel endpoints."""

from __future__ import annotations

import enum
from collections import deque
from dataclasses import dataclass
from typing import Callable, Iterator, Optional, Sequence

from .errors import InternalLimit, InvalidInput, InvalidTarget, ResourceLimit
from .graphs import DEFAULT_CAP, Graph, GraphMap, _earlier_neighbors, enumerate_homomorphisms, is_cycle_graph
from .paths import (HomotopyGrid, HomotopyTrace, StablePath, active_length, constant_path,
                    is_cycle, winding_net)

DEFAULT_STATE_CAP = 2_000_000


class Verdict(enum.Enum):
    YES = "yes"
    NO = "no"
    UNDECIDED = "undecided"


@dataclass(frozen=True)
class Decision:
    verdict: Verdict
    certificate: object = None

    def __bool__(self):
        return self.verdict is Verdict.YES


@dataclass(frozen=True)
class WindingCertificate:
    """A cycle in ``C_n`` together with its signed step count."""

    n: int
    net: int
    word: tuple

    @property
    def winding(self) -> int:
        return self.net // self.n


def map_neighbors(h: GraphMap) -> Iterator[tuple]:
    """Assignments of graph maps pointwise equal-or-adjacent to ``h``.

    Includes ``h`` itself.  Vertices are filled in id order over the closed
    neighbourhoods of ``h``'s values, pruned by the hom condition against
    already-filled neighbours.
    """
    g, t = h.source, h.target
    n = g.num_vertices
    if n == 0:
        yield ()
        return
    earlier = _earlier_neighbors(g)
    base = h.assignment
    closed = t._closed_sets

    def cands(v, partial):
        opts = closed[base[v]]
        for u in earlier[v]:
            opts = opts & closed[partial[u]]
        return iter(sorted(opts))

    partial = [0] * n
    stack = [cands(0, partial)]
    while stack:
        v = len(stack) - 1
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            continue
        partial[v] = nxt
        if v == n - 1:
            yield tuple(partial)
        else:
            stack.append(cands(v + 1, partial))


def _bfs(start, neighbors: Callable, is_goal: Callable, cap: int):
    """Plain BFS returning ``(path_to_goal or None, exhausted)``."""
    parent = {start: None}
    if is_goal(start):
        return [start], True
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        for nb in neighbors(cur):
            if nb in parent:
                continue
            parent[nb] = cur
            if is_goal(nb):
                path = [nb]
                while parent[path[-1]] is not None:
                    path.append(parent[path[-1]])
                return path[::-1], True
            if len(parent) > cap:
                return None, False
            queue.append(nb)
    return None, True


def are_homotopic(f: GraphMap, g: GraphMap, cap: int = DEFAULT_CAP) -> Optional[HomotopyTrace]:
    """A homotopy trace from ``f`` to ``g``, or None if none exists.

    Explores the component of ``f`` in the exponential graph; the answer is
    complete because there are finitely many maps.
    """
    if f.source != g.source or f.target != g.target:
        raise InvalidInput("maps must share source and target")
    src, tgt = f.source, f.target
    goal = g.assignment

    def nbrs(a):
        return map_neighbors(GraphMap._trusted(src, tgt, a))

    path, exhausted = _bfs(f.assignment, nbrs, lambda a: a == goal, cap)
    if path is None:
        if not exhausted:
            raise ResourceLimit(f"homotopy search visited more than {cap} maps")
        return None
    return HomotopyTrace(tuple(GraphMap._trusted(src, tgt, a) for a in path))


def homotopy_classes(g: Graph, h: Graph, cap: int = DEFAULT_CAP) -> list:
    """Component label of every map ``G -> H``, in canonical map order."""
    maps = enumerate_homomorphisms(g, h, cap)
    index = {m.assignment: i for i, m in enumerate(maps)}
    label = [-1] * len(maps)
    comp = 0
    for i, m in enumerate(maps):
        if label[i] >= 0:
            continue
        label[i] = comp
        queue = deque([m])
        while queue:
            cur = queue.popleft()
            for a in map_neighbors(cur):
                j = index[a]
                if label[j] < 0:
                    label[j] = comp
                    queue.append(maps[j])
        comp += 1
    return label


def row_neighbors(h: Graph, row: Sequence[int], free: bool = False) -> Iterator[tuple]:
    """Walks pointwise equal-or-adjacent to ``row``, in lexicographic order.

    With ``free=False`` both end cells are held fixed.  With ``free=True``
    the row must be closed and the neighbours are closed walks whose shared
    end cell may move.
    """
    closed = h._closed_sets
    last = len(row) - 1
    first_opts = h._closed[row[0]] if free else (row[0],)
    for x in first_opts:
        if last == 0:
            yield (x,)
            continue
        end = x if free else row[last]
        # alive[k]: values at cell k from which the row can still be completed
        alive = [frozenset()] * (last + 1)
        alive[last] = frozenset((end,)) if end in closed[row[last]] else frozenset()
        for k in range(last - 1, 0, -1):
            nxt = alive[k + 1]
            alive[k] = frozenset(v for v in closed[row[k]] if not closed[v].isdisjoint(nxt))
        if closed[x].isdisjoint(alive[1]):
            continue
        out = [x] + [0] * last
        stack = [iter(sorted(closed[x] & alive[1]))]
        while stack:
            k = len(stack)
            nxt = next(stack[-1], None)
            if nxt is None:
                stack.pop()
                continue
            out[k] = nxt
            if k == last:
                yield tuple(out)
            else:
                stack.append(iter(sorted(closed[nxt] & alive[k + 1])))


def search_row_homotopy(h: Graph, top: tuple, is_goal: Callable, free: bool = False,
                        cap: int = DEFAULT_STATE_CAP):
    """BFS over rows of fixed width from ``top`` to a row accepted by ``is_goal``.

    Returns ``(grid or None, exhausted)``.  In fixed mode the end cells never
    move, so the grid has constant outer columns; in free mode every row is
    closed, so the outer columns agree.
    """
    rows, exhausted = _bfs(tuple(top), lambda r: row_neighbors(h, r, free), is_goal, cap)
    if rows is None:
        return None, exhausted
    return HomotopyGrid(h, tuple(rows)), True


def path_homotopic_rel_endpoints(p: StablePath, q: StablePath, window: int,
                                 max_window: Optional[int] = None,
                                 cap: int = DEFAULT_STATE_CAP) -> Decision:
    """Look for a grid from ``p`` to ``q`` with constant side columns.

    Both paths are padded to ``window`` steps.  NO is only reported when the
    search space at this width is exhausted and ``window`` has reached the
    configured ``max_window``; exhaustion below that is UNDECIDED.
    """
    if p.target != q.target:
        raise InvalidInput("paths live in different graphs")
    if (p.start, p.end) != (q.start, q.end):
        raise InvalidInput("paths must share endpoints")
    top, bottom = p.padded(window), q.padded(window)
    grid, exhausted = search_row_homotopy(p.target, top, lambda r: r == bottom, cap=cap)
    if grid is not None:
        return Decision(Verdict.YES, grid)
    if exhausted and max_window is not None and window >= max_window:
        return Decision(Verdict.NO)
    return Decision(Verdict.UNDECIDED)


def nullhomotopic_in_cycle(p: StablePath, based: bool = True,
                           cap: int = DEFAULT_STATE_CAP) -> Decision:
    """Decide whether a closed walk in ``C_n`` contracts to a constant.

    For ``n >= 5`` a nonzero winding number is returned as the certificate of
    NO.  Otherwise a grid is searched for at widths ``L + 2, L + 4, ...`` up to
    ``L + 2n`` (``L`` the active length); failing to find one raises
    InternalLimit.  ``based=False`` lets the shared side column move, giving
    a free homotopy of loops onto some constant loop.
    """
    h = p.target
    if not is_cycle_graph(h):
        raise InvalidTarget("target is not a cycle graph")
    if not is_cycle(p):
        raise InvalidInput("path is not closed")
    n = h.num_vertices
    net = winding_net(h, p.word)
    if n >= 5 and net != 0:
        return Decision(Verdict.NO, WindingCertificate(n, net, p.word))
    length = active_length(p)
    for window in range(length + 2, length + 2 * n + 1, 2):
        top = p.padded(window)
        if based:
            goal = constant_path(h, p.start).padded(window)
            grid, _ = search_row_homotopy(h, top, lambda r: r == goal, cap=cap)
        else:
            grid, _ = search_row_homotopy(h, top, lambda r: len(set(r)) == 1, free=True, cap=cap)
        if grid is not None:
            return Decision(Verdict.YES, grid)
    raise InternalLimit(f"no contraction of {p!r} found up to width {length + 2 * n}")
