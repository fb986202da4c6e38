"""Compiled inner loops for the row-by-row grid searches.

Rows are packed into an int64 as base-``n`` digits (first cell most
significant) and closed neighbourhoods are bitmasks, so ``n <= 62`` and
``n ** width`` must stay below ``2 ** 62``.
"""

import numpy as np
from numba import njit, types
from numba.typed import Dict, List

from .errors import ResourceLimit


def closed_masks(h) -> np.ndarray:
    masks = np.zeros(h.num_vertices, dtype=np.int64)
    for v in h.vertices:
        for w in h.closed_neighbors(v):
            masks[v] |= 1 << w
    return masks


def encodable(n: int, length: int) -> bool:
    return n <= 62 and n ** length < 2 ** 62


def encode(row, n: int) -> int:
    c = 0
    for x in row:
        c = c * n + x
    return c


def decode(code: int, n: int, length: int) -> tuple:
    out = [0] * length
    for i in range(length - 1, -1, -1):
        code, out[i] = divmod(code, n)
    return tuple(out)


@njit(cache=True)
def _row_ball(cm, root, n, depth, cap, free):
    length = root.shape[0]
    last = length - 1
    parent = Dict.empty(key_type=types.int64, value_type=types.int64)
    rc = 0
    for x in root:
        rc = rc * n + x
    parent[rc] = -1
    frontier = List.empty_list(types.int64)
    frontier.append(rc)
    row = np.empty(length, np.int64)
    out = np.empty(length, np.int64)
    alive = np.empty(length, np.int64)
    nextv = np.empty(length, np.int64)
    status = 0
    for _ in range(depth):
        nxt = List.empty_list(types.int64)
        for code in frontier:
            c = code
            for i in range(last, -1, -1):
                row[i] = c % n
                c //= n
            first = cm[row[0]] if free else (np.int64(1) << row[0])
            for x in range(n):
                if not (first >> x) & 1:
                    continue
                end = x if free else row[last]
                out[0] = x
                if last == 0:
                    cand = np.int64(x)
                    if cand not in parent:
                        parent[cand] = code
                        nxt.append(cand)
                    continue
                alive[last] = (np.int64(1) << end) if (cm[row[last]] >> end) & 1 else 0
                for k in range(last - 1, 0, -1):
                    a = np.int64(0)
                    m = cm[row[k]]
                    for v in range(n):
                        if (m >> v) & 1 and cm[v] & alive[k + 1]:
                            a |= np.int64(1) << v
                    alive[k] = a
                if cm[x] & alive[1] == 0:
                    continue
                k = 1
                nextv[1] = 0
                while k >= 1:
                    allowed = cm[out[k - 1]] & alive[k]
                    v = nextv[k]
                    while v < n and not (allowed >> v) & 1:
                        v += 1
                    if v >= n:
                        k -= 1
                        continue
                    nextv[k] = v + 1
                    out[k] = v
                    if k == last:
                        cand = np.int64(0)
                        for i in range(length):
                            cand = cand * n + out[i]
                        if cand not in parent:
                            parent[cand] = code
                            nxt.append(cand)
                    else:
                        k += 1
                        nextv[k] = 0
            if len(parent) > cap:
                status = 1
                break
        if status or len(nxt) == 0:
            break
        frontier = nxt
    keys = np.empty(len(parent), np.int64)
    vals = np.empty(len(parent), np.int64)
    i = 0
    for key, val in parent.items():
        keys[i] = key
        vals[i] = val
        i += 1
    return keys, vals, status


def row_ball(h, root, depth: int, cap: int, free: bool = True) -> dict:
    """All rows within ``depth`` moves of ``root``, as ``{code: parent code}``.

    The root maps to -1.  Moves are the same as ``homotopy.row_neighbors``.
    """
    n = h.num_vertices
    if not encodable(n, len(root)):
        raise ResourceLimit(f"rows of length {len(root)} over {n} vertices are too wide to pack")
    keys, vals, status = _row_ball(closed_masks(h), np.asarray(root, dtype=np.int64),
                                   n, depth, cap, free)
    if status:
        raise ResourceLimit(f"row search exceeded {cap} rows")
    return dict(zip(keys.tolist(), vals.tolist()))


def closed_words(h) -> np.ndarray:
    """``N[v]`` as multi-word uint64 bitmasks, shape ``(n, ceil(n / 64))``."""
    n = h.num_vertices
    words = max(1, (n + 63) // 64)
    out = np.zeros((n, words), dtype=np.uint64)
    for v in h.vertices:
        for w in h.closed_neighbors(v):
            out[v, w >> 6] |= np.uint64(1) << np.uint64(w & 63)
    return out


@njit(cache=True)
def _popcount64(x):
    c = 0
    while x:
        x &= x - np.uint64(1)
        c += 1
    return c


@njit(cache=True)
def _count_homs(ptr, idx, masks, n_src, cap):
    n_t, words = masks.shape
    full = np.zeros(words, np.uint64)
    for v in range(n_t):
        full[v >> 6] |= np.uint64(1) << np.uint64(v & 63)
    cand = np.zeros((n_src, words), np.uint64)
    cand[0, :] = full
    pos = np.zeros(n_src, np.int64)
    assignment = np.zeros(n_src, np.int64)
    last = n_src - 1
    total = 0
    v = 0
    while v >= 0:
        # next candidate of vertex v at or after pos[v]
        b = -1
        p = pos[v]
        while p < n_t:
            wd = p >> 6
            m = cand[v, wd] >> np.uint64(p & 63)
            if m:
                t = 0
                while not (m >> np.uint64(t)) & np.uint64(1):
                    t += 1
                b = p + t
                break
            p = (wd + 1) << 6
        if b < 0:
            v -= 1
            continue
        assignment[v] = b
        pos[v] = b + 1
        w = v + 1
        for k in range(words):
            cand[w, k] = full[k]
        for e in range(ptr[w], ptr[w + 1]):
            a = assignment[idx[e]]
            for k in range(words):
                cand[w, k] &= masks[a, k]
        if w == last:
            for k in range(words):
                total += _popcount64(cand[w, k])
            if total > cap:
                return -1
        else:
            nonzero = False
            for k in range(words):
                if cand[w, k]:
                    nonzero = True
                    break
            if nonzero:
                v = w
                pos[w] = 0
    return total


def count_homs(earlier, h, cap: int) -> int:
    """Count maps given each source vertex's earlier neighbours; -1 past ``cap``."""
    ptr = np.zeros(len(earlier) + 1, dtype=np.int64)
    for v, es in enumerate(earlier):
        ptr[v + 1] = ptr[v] + len(es)
    idx = np.array([u for es in earlier for u in es], dtype=np.int64)
    return int(_count_homs(ptr, idx, closed_words(h), len(earlier), cap))
