"""Finite simple graphs, graph maps and the basic constructions on them.

Graph maps follow the A-theory convention: an edge may be sent to an edge
or collapsed onto a single vertex.  Vertices are always ``0..n-1`` and every
enumeration is produced in lexicographic order of the assignment tuple.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property, lru_cache
from typing import Iterable, Iterator, Sequence

import numpy as np

from ._kernels import count_homs
from .errors import CompositionError, InvalidGraph, InvalidMap, ResourceLimit

DEFAULT_CAP = 200_000


@dataclass(frozen=True)
class Graph:
    num_vertices: int
    edges: frozenset = field(default_factory=frozenset)

    def __post_init__(self):
        if self.num_vertices < 0:
            raise InvalidGraph(f"negative vertex count {self.num_vertices}")
        for u, v in self.edges:
            if not (0 <= u < v < self.num_vertices):
                raise InvalidGraph(f"edge ({u}, {v}) is not a canonical pair below {self.num_vertices}")

    def __repr__(self):
        return f"Graph(n={self.num_vertices}, m={len(self.edges)})"

    @property
    def vertices(self) -> range:
        return range(self.num_vertices)

    @cached_property
    def _neighbors(self) -> tuple:
        nbrs = [[] for _ in range(self.num_vertices)]
        for u, v in self.edges:
            nbrs[u].append(v)
            nbrs[v].append(u)
        return tuple(tuple(sorted(vs)) for vs in nbrs)

    @cached_property
    def _closed(self) -> tuple:
        return tuple(tuple(sorted(vs + (v,))) for v, vs in enumerate(self._neighbors))

    @cached_property
    def _closed_sets(self) -> tuple:
        return tuple(frozenset(vs) for vs in self._closed)

    @cached_property
    def sorted_edges(self) -> tuple:
        return tuple(sorted(self.edges))

    @cached_property
    def distances(self) -> tuple:
        """All-pairs graph distance; unreachable pairs get ``num_vertices``."""
        n = self.num_vertices
        out = []
        for s in range(n):
            d = [n] * n
            d[s] = 0
            frontier = [s]
            while frontier:
                nxt = []
                for u in frontier:
                    for w in self._neighbors[u]:
                        if d[w] == n:
                            d[w] = d[u] + 1
                            nxt.append(w)
                frontier = nxt
            out.append(tuple(d))
        return tuple(out)

    def neighbors(self, v: int) -> tuple:
        return self._neighbors[v]

    def closed_neighbors(self, v: int) -> tuple:
        """Sorted ``N[v]``, i.e. the neighbours of ``v`` together with ``v``."""
        return self._closed[v]

    def adjacent(self, u: int, v: int) -> bool:
        return (min(u, v), max(u, v)) in self.edges

    def adjacent_or_equal(self, u: int, v: int) -> bool:
        return v in self._closed_sets[u]

    def reflexive_matrix(self) -> np.ndarray:
        """Boolean matrix of the relation 'equal or adjacent'."""
        m = np.eye(self.num_vertices, dtype=bool)
        for u, v in self.edges:
            m[u, v] = m[v, u] = True
        return m


def make_graph(n: int, edges: Iterable[Sequence[int]] = ()) -> Graph:
    if n < 0:
        raise InvalidGraph(f"negative vertex count {n}")
    canon = set()
    for e in edges:
        u, v = e
        if u == v:
            raise InvalidGraph(f"loop edge ({u}, {v})")
        if not (0 <= u < n and 0 <= v < n):
            raise InvalidGraph(f"edge ({u}, {v}) out of range for {n} vertices")
        canon.add((min(u, v), max(u, v)))
    return Graph(n, frozenset(canon))


def path_graph(n: int) -> Graph:
    """``I_n``: vertices ``0..n`` with edges ``{i, i+1}``."""
    if n < 0:
        raise InvalidGraph(f"path length must be nonnegative, got {n}")
    return make_graph(n + 1, [(i, i + 1) for i in range(n)])


@lru_cache(maxsize=None)
def cycle_graph(n: int) -> Graph:
    """``C_n``: vertices ``0..n-1`` with edges ``{i, i+1 mod n}``."""
    if n < 3:
        raise InvalidGraph(f"cycle graphs need at least 3 vertices, got {n}")
    return make_graph(n, [(i, (i + 1) % n) for i in range(n)])


def discrete_graph(n: int) -> Graph:
    """``n`` isolated points, the set-tensor ``S x I_0`` for ``|S| = n``."""
    return make_graph(n, [])


def is_cycle_graph(g: Graph) -> bool:
    """True iff ``g`` is literally ``C_n`` with the standard labelling."""
    n = g.num_vertices
    return n >= 3 and g == cycle_graph(n)


@dataclass(frozen=True)
class GraphMap:
    source: Graph
    target: Graph
    assignment: tuple

    def __post_init__(self):
        object.__setattr__(self, "assignment", tuple(self.assignment))
        if not is_graph_map(self.source, self.target, self.assignment):
            raise InvalidMap("assignment violates the hom condition")

    @classmethod
    def _trusted(cls, source, target, assignment):
        m = object.__new__(cls)
        object.__setattr__(m, "source", source)
        object.__setattr__(m, "target", target)
        object.__setattr__(m, "assignment", assignment)
        return m

    def __call__(self, v: int) -> int:
        return self.assignment[v]

    def __repr__(self):
        return f"GraphMap({list(self.assignment)})"


def is_graph_map(src: Graph, tgt: Graph, assignment: Sequence[int]) -> bool:
    if len(assignment) != src.num_vertices:
        raise InvalidMap(f"assignment has {len(assignment)} entries, source has {src.num_vertices} vertices")
    for a in assignment:
        if not (0 <= a < tgt.num_vertices):
            raise InvalidMap(f"image {a} out of range for target with {tgt.num_vertices} vertices")
    return all(tgt.adjacent_or_equal(assignment[u], assignment[v]) for u, v in src.edges)


def identity_map(g: Graph) -> GraphMap:
    return GraphMap._trusted(g, g, tuple(g.vertices))


def constant_map(src: Graph, tgt: Graph, w: int) -> GraphMap:
    if not 0 <= w < tgt.num_vertices:
        raise InvalidMap(f"vertex {w} not in target")
    return GraphMap._trusted(src, tgt, (w,) * src.num_vertices)


def compose(f: GraphMap, g: GraphMap) -> GraphMap:
    """``f o g`` (apply ``g`` first)."""
    if g.target != f.source:
        raise CompositionError("target of g differs from source of f")
    out = tuple(f.assignment[x] for x in g.assignment)
    assert is_graph_map(g.source, f.target, out)
    return GraphMap._trusted(g.source, f.target, out)


def disjoint_union(g: Graph, h: Graph) -> tuple[Graph, GraphMap, GraphMap]:
    """``G ⊔ H`` with its two injections; ``H``'s ids are shifted by ``|V(G)|``."""
    k = g.num_vertices
    u = make_graph(k + h.num_vertices,
                   list(g.edges) + [(a + k, b + k) for a, b in h.edges])
    inj_g = GraphMap._trusted(g, u, tuple(g.vertices))
    inj_h = GraphMap._trusted(h, u, tuple(v + k for v in h.vertices))
    return u, inj_g, inj_h


def box_product(g: Graph, h: Graph) -> Graph:
    """Box product; vertex ``(a, b)`` gets id ``a * |V(H)| + b``."""
    nh = h.num_vertices
    edges = []
    for a in g.vertices:
        for b, c in h.edges:
            edges.append((a * nh + b, a * nh + c))
    for a, c in g.edges:
        for b in h.vertices:
            edges.append((a * nh + b, c * nh + b))
    return make_graph(g.num_vertices * nh, edges)


def cube_graph(n: int) -> Graph:
    """The ``n``-fold box power of ``I_1`` (``I_0`` when ``n = 0``)."""
    q = path_graph(0)
    for _ in range(n):
        q = box_product(q, path_graph(1))
    return q


def _earlier_neighbors(g: Graph) -> list:
    return [tuple(u for u in g.neighbors(v) if u < v) for v in g.vertices]


def _closed_bits(h: Graph) -> list:
    """``N[v]`` of every target vertex as an int bitmask."""
    out = []
    for v in h.vertices:
        m = 0
        for w in h.closed_neighbors(v):
            m |= 1 << w
        out.append(m)
    return out


def _bits(mask: int) -> list:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def _candidate_mask(bits: list, full: int, images) -> int:
    m = full
    for a in images:
        m &= bits[a]
    return m


def iter_homomorphisms(g: Graph, h: Graph) -> Iterator[tuple]:
    """Yield every hom ``G -> H`` as an assignment tuple, lexicographically.

    Vertices are assigned in id order; a vertex only ranges over target
    vertices equal-or-adjacent to the images of its already-assigned
    neighbours, so dead branches are cut as soon as they appear.
    """
    n = g.num_vertices
    if n == 0:
        yield ()
        return
    if h.num_vertices == 0:
        return
    earlier = _earlier_neighbors(g)
    bits = _closed_bits(h)
    full = (1 << h.num_vertices) - 1
    assignment = [0] * n
    stack = [iter(range(h.num_vertices))]
    while stack:
        v = len(stack) - 1
        nxt = next(stack[-1], None)
        if nxt is None:
            stack.pop()
            continue
        assignment[v] = nxt
        if v == n - 1:
            yield tuple(assignment)
            continue
        w = v + 1
        stack.append(iter(_bits(_candidate_mask(bits, full, [assignment[u] for u in earlier[w]]))))


def enumerate_homomorphisms(g: Graph, h: Graph, cap: int = DEFAULT_CAP) -> list:
    """All graph maps ``G -> H`` in lexicographic order.

    Raises ResourceLimit once more than ``cap`` maps have been produced.
    """
    out = []
    for a in iter_homomorphisms(g, h):
        if len(out) >= cap:
            raise ResourceLimit(f"more than {cap} homomorphisms {g!r} -> {h!r}")
        out.append(GraphMap._trusted(g, h, a))
    return out


def count_homomorphisms(g: Graph, h: Graph, cap: int = DEFAULT_CAP) -> int:
    """``|Hom(G, H)|`` without materialising the maps.

    Same search as iter_homomorphisms (compiled), but the last vertex
    contributes the size of its candidate set instead of being branched on.
    """
    n = g.num_vertices
    if n == 0:
        return 1
    if h.num_vertices == 0:
        return 0
    if n == 1:
        total = h.num_vertices
    else:
        total = count_homs(_earlier_neighbors(g), h, cap)
    if total < 0 or total > cap:
        raise ResourceLimit(f"more than {cap} homomorphisms {g!r} -> {h!r}")
    return total


def pointwise_close(h: Graph, a: Sequence[int], b: Sequence[int]) -> bool:
    """Whether two assignments into ``h`` are equal-or-adjacent everywhere."""
    return all(h.adjacent_or_equal(x, y) for x, y in zip(a, b))


def exponential_graph(g: Graph, h: Graph, cap: int = DEFAULT_CAP) -> Graph:
    """The hom graph ``H^G``.

    Vertex ``i`` is the ``i``-th map of ``enumerate_homomorphisms(g, h)``;
    two distinct maps are adjacent iff they are pointwise equal-or-adjacent.
    """
    maps = enumerate_homomorphisms(g, h, cap)
    k = len(maps)
    if k == 0:
        return make_graph(0)
    if g.num_vertices == 0:
        return make_graph(k)
    table = np.array([m.assignment for m in maps], dtype=np.int64)
    rel = h.reflexive_matrix()
    edges = []
    chunk = max(1, 2_000_000 // (k * g.num_vertices))
    for start in range(0, k, chunk):
        block = table[start:start + chunk]
        ok = np.ones((len(block), k), dtype=bool)
        for v in range(g.num_vertices):
            ok &= rel[block[:, v][:, None], table[:, v][None, :]]
        rows, cols = np.nonzero(ok)
        rows = rows + start
        keep = rows < cols
        edges.extend(zip(rows[keep].tolist(), cols[keep].tolist()))
    return make_graph(k, edges)
