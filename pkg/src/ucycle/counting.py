"""Exact counts and the prefix-count tables behind the unranking samplers.

Every count is a Python int checked against the 2**127 cap; exceeding it
raises :class:`CountOverflowError` instead of wrapping.
"""

from __future__ import annotations

import math

import numpy as np

COUNT_LIMIT = 1 << 127
ENUM_LIMIT = 1 << 26


class CountOverflowError(OverflowError):
    pass


class TooLargeError(ValueError):
    """An exhaustive enumeration would exceed its size guard."""


def checked(x: int) -> int:
    if x < 0:
        raise ValueError(f"negative count {x}")
    if x >= COUNT_LIMIT:
        raise CountOverflowError(f"count {x} does not fit in 127 bits")
    return x


def binomial(n: int, k: int) -> int:
    if n < 0:
        raise ValueError("binomial needs n >= 0")
    if k < 0 or k > n:
        return 0
    return checked(math.comb(n, k))


def multinomial(parts) -> int:
    total = 0
    result = 1
    for c in parts:
        total += c
        result *= math.comb(total, c)
    return checked(result)


def pascal(n: int) -> list[list[int]]:
    """Rows 0..n of Pascal's triangle, built additively."""
    rows = [[1]]
    for i in range(1, n + 1):
        prev = rows[-1]
        row = [1] * (i + 1)
        for j in range(1, i):
            row[j] = checked(prev[j - 1] + prev[j])
        rows.append(row)
    return rows


def weak_table(n: int, binom=None) -> list[int]:
    """W_0..W_n where W_t = sum_{j=1..t} C(t, j) W_{t-j}."""
    if binom is None:
        binom = pascal(n)
    w = [1]
    for t in range(1, n + 1):
        w.append(checked(sum(binom[t][j] * w[t - j] for j in range(1, t + 1))))
    return w


def weak_count(n: int) -> int:
    if n < 0:
        raise ValueError("weak_count needs n >= 0")
    return weak_table(n)[n]


def _wr_raw(k: int, n: int, lo: int, hi: int, memo: dict) -> int:
    top = n * (k - 1)
    if hi < 0 or lo > top or lo > hi:
        return 0
    lo = max(lo, 0)
    hi = min(hi, top)
    key = (n, lo, hi)
    got = memo.get(key)
    if got is not None:
        return got
    if n == 1:
        val = min(hi, k - 1) - max(lo, 0) + 1
    else:
        val = checked(sum(_wr_raw(k, n - 1, lo - j, hi - j, memo) for j in range(k)))
    memo[key] = val
    return val


def wr_count(k: int, n: int, lo: int, hi: int) -> int:
    """Number of words in Sigma_k(n) whose symbol sum lies in [lo, hi]."""
    if n < 1 or k < 2:
        raise ValueError("wr_count needs n >= 1 and k >= 2")
    return _wr_raw(k, n, lo, hi, {})


def forb_linear_table(k: int, n: int, z: int) -> list[int]:
    """F_k(0..n, z): words with no 0^z substring (not cyclic)."""
    if k < 2 or z < 2 or n < 0:
        raise ValueError("forb_linear needs k >= 2, z >= 2, n >= 0")
    f = []
    for t in range(n + 1):
        if z > t:
            f.append(checked(k ** t))
        elif z == t:
            f.append(checked(k ** t - 1))
        else:
            f.append(checked((k - 1) * sum(f[t - j] for j in range(1, z + 1))))
    return f


def forb_linear_count(k: int, n: int, z: int) -> int:
    return forb_linear_table(k, n, z)[n]


def forb_cyclic_count(k: int, n: int, z: int, flin=None) -> int:
    """Z_k(n, z): words with no 0^z, counting the wraparound."""
    if k < 2 or z < 2 or n < 1:
        raise ValueError("forb_cyclic needs k >= 2, z >= 2, n >= 1")
    if z > n:
        return checked(k ** n)
    if z == n:
        return checked(k ** n - 1)
    f = flin if flin is not None else forb_linear_table(k, n, z)
    total = (k - 1) * f[n - 1]
    total += (k - 1) ** 2 * sum(j * f[n - j - 2] for j in range(1, z))
    return checked(total)


def forb_run_table(k: int, n: int, z: int) -> list[list[int]]:
    """D[t][r]: length-t suffixes with no 0^z after a run of r zeros (0 <= r <= z)."""
    if k < 2 or z < 2 or n < 0:
        raise ValueError("forb_run needs k >= 2, z >= 2, n >= 0")
    d = [[1] * z + [0]]
    for t in range(1, n + 1):
        prev = d[-1]
        row = [checked(prev[r + 1] + (k - 1) * prev[0]) for r in range(z)] + [0]
        d.append(row)
    return d


def forb_run_count(t: int, r: int, k: int, z: int) -> int:
    if t < 0 or not 0 <= r <= z:
        raise ValueError("forb_run_count needs t >= 0 and 0 <= r <= z")
    return forb_run_table(k, t, z)[t][r]


def _rotation_min(codes: np.ndarray, k: int, n: int) -> np.ndarray:
    """Per-code minimum over all cyclic rotations (radix-k, first symbol most significant)."""
    top = k ** (n - 1)
    best = codes.copy()
    cur = codes.copy()
    for _ in range(n - 1):
        cur = (cur % top) * k + cur // top
        np.minimum(best, cur, out=best)
    return best


def _reverse_codes(codes: np.ndarray, k: int, n: int) -> np.ndarray:
    rev = np.zeros_like(codes)
    cur = codes.copy()
    for _ in range(n):
        rev = rev * k + cur % k
        cur //= k
    return rev


def orientable_mask(codes: np.ndarray, k: int, n: int) -> np.ndarray:
    """Vectorised membership: the necklace of w is strictly below that of its reversal."""
    return _rotation_min(codes, k, n) < _rotation_min(_reverse_codes(codes, k, n), k, n)


def os_count(k: int, n: int, limit: int = ENUM_LIMIT, chunk: int = 1 << 20) -> int:
    """|OS_k(n)| by exhaustive enumeration of Sigma_k(n)."""
    total_words = k ** n
    if total_words > limit:
        raise TooLargeError(f"{k}^{n} words exceeds enumeration guard {limit}")
    total = 0
    for start in range(0, total_words, chunk):
        codes = np.arange(start, min(start + chunk, total_words), dtype=np.int64)
        total += int(np.count_nonzero(orientable_mask(codes, k, n)))
    return total


class CountTables:
    """Immutable per-family tables: Pascal rows, W_t, F_t, D[t][r], WR memo."""

    def __init__(self, k: int, n: int, z: int | None = None, weight_range=None):
        self.k = k
        self.n = n
        self.z = z
        self.binomial = pascal(n)
        self.weak = weak_table(n, self.binomial)
        if z is not None:
            self.forb_linear = forb_linear_table(k, n, z)
            self.forb_run = forb_run_table(k, n, z)
            self.forb_cyclic = forb_cyclic_count(k, n, z, self.forb_linear)
        else:
            self.forb_linear = self.forb_run = self.forb_cyclic = None
        self._wr: dict = {}
        if weight_range is not None:
            lo, hi = weight_range
            # Fill every sub-range the unranking loop can touch.
            for t in range(1, n + 1):
                for j in range(0, (n - t) * (k - 1) + 1):
                    _wr_raw(k, t, lo - j, hi - j, self._wr)

    def wr(self, t: int, lo: int, hi: int) -> int:
        return _wr_raw(self.k, t, lo, hi, self._wr)
