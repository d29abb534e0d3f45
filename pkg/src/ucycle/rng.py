"""Seedable, splittable random streams.

The generator is xoshiro256** (period 2**256 - 1) seeded through splitmix64.
The same recurrence is implemented in the numba kernels (``ucycle.dense``),
and the state can be handed back and forth, so both engines consume
identical random sequences.
"""

from __future__ import annotations

import os

import numpy as np

MASK64 = (1 << 64) - 1
MAX_RANGE = 1 << 127

_GOLDEN = 0x9E3779B97F4A7C15


class EmptyRangeError(ValueError):
    pass


class RangeOverflowError(OverflowError):
    pass


def _splitmix64(x: int) -> tuple[int, int]:
    """One splitmix64 step: returns (new_state, output)."""
    x = (x + _GOLDEN) & MASK64
    z = x
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & MASK64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & MASK64
    return x, z ^ (z >> 31)


def _mix(x: int) -> int:
    return _splitmix64(x & MASK64)[1]


def _rotl(x: int, k: int) -> int:
    return ((x << k) | (x >> (64 - k))) & MASK64


class RandomStream:
    """xoshiro256** stream identified by ``(seed, stream_id)``."""

    __slots__ = ("seed", "stream_id", "_s")

    def __init__(self, seed: int | None = None, stream_id: int = 0):
        if seed is None:
            seed = int.from_bytes(os.urandom(8), "little")
        self.seed = seed & MASK64
        self.stream_id = stream_id & MASK64
        x = self.seed ^ _mix(self.stream_id ^ 0x5851F42D4C957F2D)
        s = []
        for _ in range(4):
            x, out = _splitmix64(x)
            s.append(out)
        if not any(s):  # all-zero state is a fixed point
            s[0] = 1
        self._s = s

    def __repr__(self):
        return f"RandomStream(seed={self.seed}, stream_id={self.stream_id})"

    def next_u64(self) -> int:
        s = self._s
        s0, s1, s2, s3 = s
        result = (_rotl((s1 * 5) & MASK64, 7) * 9) & MASK64
        t = (s1 << 17) & MASK64
        s2 ^= s0
        s3 ^= s1
        s1 ^= s2
        s0 ^= s3
        s2 ^= t
        s3 = _rotl(s3, 45)
        s[0], s[1], s[2], s[3] = s0, s1, s2, s3
        return result

    def uniform_below(self, m: int) -> int:
        """Uniform integer in ``[0, m)`` by bitmask rejection (no modulo bias).

        ``m == 1`` consumes no randomness.  Ranges up to ``2**127`` are
        supported by concatenating 64-bit draws.
        """
        if m < 1:
            raise EmptyRangeError(f"empty range [0, {m})")
        if m >= MAX_RANGE:
            raise RangeOverflowError(f"range {m} exceeds 2**127")
        if m == 1:
            return 0
        bits = (m - 1).bit_length()
        if bits <= 64:
            shift = 64 - bits
            while True:
                x = self.next_u64() >> shift
                if x < m:
                    return x
        words = (bits + 63) // 64
        shift = 64 * words - bits
        while True:
            x = 0
            for _ in range(words):
                x = (x << 64) | self.next_u64()
            x >>= shift
            if x < m:
                return x

    def randint(self, lo: int, hi: int) -> int:
        """Uniform integer in the closed range ``[lo, hi]``."""
        return lo + self.uniform_below(hi - lo + 1)

    def shuffle(self, a: list) -> None:
        """In-place Fisher-Yates, index-descending swap loop."""
        for i in range(len(a) - 1, 0, -1):
            j = self.uniform_below(i + 1)
            a[i], a[j] = a[j], a[i]

    def split(self, i: int) -> "RandomStream":
        """Independent sub-stream, deterministic in ``(seed, stream_id, i)``."""
        return RandomStream(self.seed, _mix(self.stream_id * 0xD1B54A32D192ED03 + i + 1))

    def state_array(self) -> np.ndarray:
        return np.array(self._s, dtype=np.uint64)

    def set_state_array(self, arr: np.ndarray) -> None:
        self._s = [int(v) for v in arr]
