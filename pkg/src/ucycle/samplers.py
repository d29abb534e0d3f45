"""Uniform random members of each family (the seed edge of a generation run)."""

from __future__ import annotations

from functools import lru_cache

from .families import (AllStrings, Family, Forbidden, MultisetPerm, Orientable,
                       WeakOrder, WeightRange)
from .rng import RandomStream

MAX_REJECTIONS = 10 ** 6


class RankError(ValueError):
    pass


class EmptyFamilyError(ValueError):
    pass


class RejectionLimitError(RuntimeError):
    pass


def random_all_strings(k: int, n: int, r: RandomStream) -> tuple:
    return tuple(r.uniform_below(k) for _ in range(n))


def shuffle_multiset(multiset, r: RandomStream) -> tuple:
    """Fisher-Yates over the given symbols: for i from n down to 2 swap m_i with m_j, j in [1, i]."""
    m = list(multiset)
    for i in range(len(m) - 1, 0, -1):
        j = r.uniform_below(i + 1)
        m[i], m[j] = m[j], m[i]
    return tuple(m)


def weak_content_for_rank(n: int, rank: int, tables) -> list[int]:
    """Decode a rank in [1, W_n] to a content vector (c_0..c_{n-1}), 0-based values."""
    binom, weak = tables.binomial, tables.weak
    if not 1 <= rank <= weak[n]:
        raise RankError(f"rank {rank} outside [1, {weak[n]}]")
    c = [0] * n
    t, v = n, 0
    while t >= 1:
        for j in range(1, t + 1):
            p = binom[t][j] * weak[t - j]
            if rank <= p:
                break
            rank -= p
        # Each of the C(t, j) tie positions shares the same W_{t-j} tail ranks.
        rank = (rank - 1) % weak[t - j] + 1
        c[v] = j
        v += j
        t -= j
    return c


def random_weak_order(n: int, tables, r: RandomStream) -> tuple:
    rank = 1 + r.uniform_below(tables.weak[n])
    c = weak_content_for_rank(n, rank, tables)
    symbols = [v for v, cnt in enumerate(c) for _ in range(cnt)]
    return shuffle_multiset(symbols, r)


def unrank_weight_range(k: int, n: int, lo: int, hi: int, rank: int, tables) -> tuple:
    """The rank-th (1-based) word of WR_k(n, [lo, hi]) in lexicographic order."""
    total = tables.wr(n, lo, hi)
    if not 1 <= rank <= total:
        raise RankError(f"rank {rank} outside [1, {total}]")
    s = []
    for j in range(1, n):
        counts = [tables.wr(n - j, lo - i, hi - i) for i in range(k)]
        i = 0
        while rank > counts[i]:
            rank -= counts[i]
            i += 1
        s.append(i)
        lo -= i
        hi -= i
    if lo < 0:
        lo = 0
    s.append(lo + rank - 1)
    return tuple(s)


def unrank_no0z_linear(k: int, m: int, z: int, run: int, rank: int, tables) -> tuple:
    """Rank-th length-m word (lex order) with no 0^z, given ``run`` zeros just before it."""
    d = tables.forb_run
    total = d[m][run]
    if not 1 <= rank <= total:
        raise RankError(f"rank {rank} outside [1, {total}]")
    out = []
    for i in range(1, m + 1):
        rest = m - i
        zero_block = d[rest][run + 1]
        if rank <= zero_block:
            out.append(0)
            run += 1
            continue
        rank -= zero_block
        block = d[rest][0]
        s = 1 + (rank - 1) // block
        rank -= (s - 1) * block
        out.append(s)
        run = 0
    return tuple(out)


def unrank_no0z_cyclic(k: int, n: int, z: int, rank: int, tables) -> tuple:
    """Deterministic decoding of a rank in [1, Z_k(n, z)].

    Part A: a non-zero first symbol followed by a linear no-0^z tail.
    Part B, by ascending j (zeros in the wraparound), then p (leading zeros),
    then X, the middle block, and Y: words shaped 0^p X mid Y 0^(j-p).
    """
    total = tables.forb_cyclic
    if not 1 <= rank <= total:
        raise RankError(f"rank {rank} outside [1, {total}]")
    if z > n or z == n:
        # Plain radix decoding; z == n skips 0^n (rank 1 maps to 0..01).
        code = rank - 1 if z > n else rank
        out = [0] * n
        for i in range(n - 1, -1, -1):
            code, out[i] = divmod(code, k)
        return tuple(out)
    f = tables.forb_linear
    part_a = (k - 1) * f[n - 1]
    if rank <= part_a:
        x = 1 + (rank - 1) // f[n - 1]
        rank -= (x - 1) * f[n - 1]
        return (x,) + unrank_no0z_linear(k, n - 1, z, 0, rank, tables)
    rank -= part_a
    for j in range(1, z):
        mlen = n - j - 2
        block = (k - 1) ** 2 * f[mlen]
        if rank <= j * block:
            break
        rank -= j * block
    p = 1 + (rank - 1) // block
    rank -= (p - 1) * block
    idx = rank - 1
    idx, y = divmod(idx, k - 1)
    x, mid_idx = divmod(idx, f[mlen])
    mid = unrank_no0z_linear(k, mlen, z, 0, mid_idx + 1, tables)
    return (0,) * p + (x + 1,) + mid + (y + 1,) + (0,) * (j - p)


def random_no0z_cyclic(k: int, n: int, z: int, tables, r: RandomStream) -> tuple:
    rank = 1 + r.uniform_below(tables.forb_cyclic)
    return unrank_no0z_cyclic(k, n, z, rank, tables)


def random_orientable_attempts(k: int, n: int, r: RandomStream,
                               max_attempts: int = MAX_REJECTIONS) -> tuple[tuple, int]:
    return _reject(_orientable(k, n), r, max_attempts)


@lru_cache(maxsize=32)
def _orientable(k: int, n: int) -> Orientable:
    try:
        return Orientable(k, n)
    except ValueError as exc:
        raise EmptyFamilyError(str(exc)) from None


def _reject(fam: Orientable, r: RandomStream, max_attempts: int) -> tuple[tuple, int]:
    for attempt in range(1, max_attempts + 1):
        w = random_all_strings(fam.k, fam.n, r)
        if fam._contains(w):
            return w, attempt
    raise RejectionLimitError(f"no member of {fam!r} after {max_attempts} attempts")


def random_orientable(k: int, n: int, r: RandomStream) -> tuple:
    return random_orientable_attempts(k, n, r)[0]


def sample_edge(f: Family, r: RandomStream) -> tuple[tuple, int]:
    """Uniform member of ``f`` and the number of attempts it took (1 unless rejecting)."""
    if isinstance(f, AllStrings):
        return random_all_strings(f.k, f.n, r), 1
    if isinstance(f, MultisetPerm):
        full = [s for s, c in enumerate(f.multiplicities) for _ in range(c)]
        return shuffle_multiset(full, r)[:-1], 1
    if isinstance(f, WeakOrder):
        return random_weak_order(f.n, f.tables, r), 1
    if isinstance(f, WeightRange):
        rank = 1 + r.uniform_below(f.cardinality)
        return unrank_weight_range(f.k, f.n, f.lo, f.hi, rank, f.tables), 1
    if isinstance(f, Forbidden):
        return random_no0z_cyclic(f.k, f.n, f.z, f.tables, r), 1
    if isinstance(f, Orientable):
        return _reject(f, r, MAX_REJECTIONS)
    raise TypeError(f"no sampler for {f!r}")


def random_word(f: Family, r: RandomStream) -> tuple:
    return sample_edge(f, r)[0]
