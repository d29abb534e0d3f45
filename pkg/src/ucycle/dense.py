"""Compiled engine: the same walk/order/traverse steps over radix-coded vertices.

Vertices of a family with word length L are coded as radix-k integers in
[0, k**(L-1)).  In- and out-label sets are cached as per-vertex bitmasks
built from the vectorised membership table (skipped for the full de Bruijn
graph), and the visited set is a byte array.  The kernels draw randomness
with the same xoshiro256** recurrence and rejection rule as
:class:`ucycle.rng.RandomStream`, so for a given stream they reproduce the
reference engine bit for bit.
"""

from __future__ import annotations

from functools import lru_cache

import numba as nb
import numpy as np
from numba import uint64

from .euler import NotEulerianError, RunStats
from .families import DENSE_LIMIT, AllStrings, Family, encode
from .rng import RandomStream
from .samplers import sample_edge
from .walk import WalkAbortedError, default_max_steps

VERTEX_LIMIT = 1 << 26
MAX_K = 32
_STEP_CAP = (1 << 62)


@nb.njit(inline="always")
def _rotl(x, k):
    return (x << uint64(k)) | (x >> uint64(64 - k))


@nb.njit(inline="always")
def _next_u64(s):
    result = _rotl(s[1] * uint64(5), 7) * uint64(9)
    t = s[1] << uint64(17)
    s[2] ^= s[0]
    s[3] ^= s[1]
    s[1] ^= s[2]
    s[0] ^= s[3]
    s[2] ^= t
    s[3] = _rotl(s[3], 45)
    return result


@nb.njit(inline="always")
def _uniform_small(s, m):
    if m == 1:
        return 0
    bits = 0
    x = m - 1
    while x:
        bits += 1
        x >>= 1
    shift = uint64(64 - bits)
    um = uint64(m)
    while True:
        y = _next_u64(s) >> shift
        if y < um:
            return np.int64(y)


@nb.njit(nogil=True, cache=True)
def _walk(s, inmask, full, k, pw, root, total, max_steps, visited, tree, order):
    """Backward walk from ``root``; returns steps, or -1 when ``max_steps`` is hit."""
    fullmask = (1 << k) - 1
    pow2 = (k & (k - 1)) == 0
    lg = 0
    while (1 << lg) < k:
        lg += 1
    visited[root] = 1
    order[0] = root
    cnt = 1
    steps = 0
    w = root
    while cnt < total:
        if steps >= max_steps:
            return -1
        m = fullmask if full else np.int64(inmask[w])
        if m == 0:
            return -2
        d = 0
        mm = m
        while mm:
            d += mm & 1
            mm >>= 1
        j = _uniform_small(s, d)
        sigma = 0
        mm = m
        while True:
            if mm & 1:
                if j == 0:
                    break
                j -= 1
            mm >>= 1
            sigma += 1
        if pow2:
            u = sigma * pw + (w >> lg)
            t = w & (k - 1)
        else:
            u = sigma * pw + w // k
            t = w % k
        steps += 1
        if visited[u] == 0:
            visited[u] = 1
            tree[u] = t
            order[cnt] = u
            cnt += 1
        w = u
    return steps


@nb.njit(nogil=True, cache=True)
def _walk_full(s, k, pw, root, total, max_steps, visited, tree, order):
    """``_walk`` specialised to the complete graph: every symbol is a predecessor."""
    bits = 0
    x = k - 1
    while x:
        bits += 1
        x >>= 1
    shift = uint64(64 - bits)
    uk = uint64(k)
    pow2 = (k & (k - 1)) == 0
    lg = np.int64(bits)
    visited[root] = 1
    order[0] = root
    cnt = 1
    steps = 0
    w = root
    while cnt < total:
        if steps >= max_steps:
            return -1
        while True:
            y = _next_u64(s) >> shift
            if y < uk:
                break
        if pow2:
            u = np.int64(y) * pw + (w >> lg)
            t = w & (k - 1)
        else:
            u = np.int64(y) * pw + w // k
            t = w % k
        steps += 1
        if visited[u] == 0:
            visited[u] = 1
            tree[u] = t
            order[cnt] = u
            cnt += 1
        w = u
    return steps


@nb.njit(nogil=True, cache=True)
def _order(s, outmask, full, k, order, cnt, tree, root, adj, deg):
    fullmask = (1 << k) - 1
    buf = np.empty(k, np.int64)
    for idx in range(cnt):
        v = order[idx]
        m = fullmask if full else np.int64(outmask[v])
        t = -1 if v == root else np.int64(tree[v])
        c = 0
        for sigma in range(k):
            if (m >> sigma) & 1 and sigma != t:
                buf[c] = sigma
                c += 1
        for i in range(c - 1, 0, -1):
            j = _uniform_small(s, i + 1)
            tmp = buf[i]
            buf[i] = buf[j]
            buf[j] = tmp
        if t >= 0:
            buf[c] = t
            c += 1
        for i in range(c):
            adj[v, i] = buf[i]
        deg[v] = c


@nb.njit(nogil=True, cache=True)
def _traverse(adj, deg, cursor, k, nv, root, out):
    """Returns (symbols emitted, final vertex); -1 emitted means overflow of ``out``."""
    v = root
    n = 0
    while True:
        c = cursor[v]
        if c == deg[v]:
            break
        cursor[v] = c + 1
        sigma = adj[v, c]
        if n >= out.shape[0]:
            return -1, v
        out[n] = sigma
        n += 1
        v = (v * k + sigma) % nv
    return n, v


class DenseGraph:
    """Bitmask view of G(S) over radix-coded vertices."""

    def __init__(self, f: Family):
        self.family = f
        k, L = f.k, f.L
        self.k = k
        self.L = L
        self.nv = k ** (L - 1)
        self.pw = k ** (L - 2) if L >= 2 else 0
        self.full = isinstance(f, AllStrings)
        if self.full:
            self.inmask = self.outmask = np.zeros(1, np.uint32)
            self.vertex_total = self.nv
        else:
            member = f.member_table()
            weights = (np.uint32(1) << np.arange(k, dtype=np.uint32))
            self.outmask = (member.reshape(self.nv, k) * weights).sum(axis=1).astype(np.uint32)
            self.inmask = (member.reshape(k, self.nv).T * weights).sum(axis=1).astype(np.uint32)
            present = (self.inmask | self.outmask) != 0
            self.vertex_total = int(np.count_nonzero(present))
            self.balanced = bool(np.array_equal(_popcount(self.inmask), _popcount(self.outmask)))

    def buffers(self):
        return (np.zeros(self.nv, np.uint8), np.zeros(self.nv, np.int8),
                np.zeros(self.nv, np.int32))

    def code(self, v) -> int:
        return encode(v, self.k)

    def walk(self, root_code: int, r: RandomStream, max_steps: int, bufs) -> int:
        visited, tree, order = bufs
        visited.fill(0)
        s = r.state_array()
        cap = min(max_steps, _STEP_CAP)
        if self.full and self.k > 1:
            steps = _walk_full(s, self.k, self.pw, root_code, self.vertex_total, cap,
                               visited, tree, order)
        else:
            steps = _walk(s, self.inmask, self.full, self.k, self.pw, root_code,
                          self.vertex_total, cap, visited, tree, order)
        r.set_state_array(s)
        if steps == -1:
            raise WalkAbortedError(f"{self.family!r}: no cover within {max_steps} steps")
        if steps == -2:
            raise WalkAbortedError(f"{self.family!r}: vertex without in-edges reached")
        return int(steps)

    def cycle(self, root_code: int, r: RandomStream, bufs) -> np.ndarray:
        """Order adjacency (consuming ``r``) and traverse; returns the label array."""
        visited, tree, order = bufs
        adj = np.zeros((self.nv, self.k), np.int8)
        deg = np.zeros(self.nv, np.int64)
        s = r.state_array()
        _order(s, self.outmask, self.full, self.k, order, self.vertex_total, tree,
               root_code, adj, deg)
        r.set_state_array(s)
        cursor = np.zeros(self.nv, np.int64)
        out = np.empty(self.family.cardinality, np.int8)
        n, end = _traverse(adj, deg, cursor, self.k, self.nv, root_code, out)
        if n != self.family.cardinality or end != root_code:
            raise NotEulerianError(
                f"{self.family!r}: traversal stopped after {n} of "
                f"{self.family.cardinality} edges")
        return out


def _popcount(a: np.ndarray) -> np.ndarray:
    a = a.astype(np.uint32)
    c = np.zeros(a.shape, np.int64)
    while a.any():
        c += (a & 1).astype(np.int64)
        a >>= np.uint32(1)
    return c


def supported(f: Family) -> bool:
    if f.k > MAX_K:
        return False
    if isinstance(f, AllStrings):
        return f.k ** (f.L - 1) <= VERTEX_LIMIT
    return f.k ** f.L <= DENSE_LIMIT


@lru_cache(maxsize=16)
def graph_for(f: Family) -> DenseGraph:
    return DenseGraph(f)


def generate_array(f: Family, r: RandomStream, max_steps: int | None = None):
    g = graph_for(f)
    if max_steps is None:
        max_steps = default_max_steps(f)
    word, attempts = sample_edge(f, r)
    root = g.code(word[:-1])
    bufs = g.buffers()
    steps = g.walk(root, r, max_steps, bufs)
    seq = g.cycle(root, r, bufs)
    return seq, RunStats(steps, steps / f.cardinality, attempts)


def generate(f: Family, r: RandomStream, max_steps: int | None = None):
    seq, stats = generate_array(f, r, max_steps)
    return tuple(seq.tolist()), stats


def cover_steps(f: Family, r: RandomStream, max_steps: int | None = None, bufs=None):
    """Seed + backward walk only; returns (steps, attempts)."""
    g = graph_for(f)
    if max_steps is None:
        max_steps = default_max_steps(f)
    if bufs is None:
        bufs = g.buffers()
    word, attempts = sample_edge(f, r)
    return g.walk(g.code(word[:-1]), r, max_steps, bufs), attempts
