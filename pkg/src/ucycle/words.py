"""Word primitives.

A word is a tuple of non-negative ints (0-based symbols).  Tuples are
hashable, so vertices and edges can be used directly as set/dict keys.
"""

from __future__ import annotations

from typing import Iterable, Sequence

Word = tuple  # tuple[int, ...]


class InvalidSymbolError(ValueError):
    pass


def least_rotation(w: Sequence[int]) -> Word:
    """Lexicographically least rotation of ``w`` (Booth's algorithm, O(n))."""
    w = tuple(w)
    n = len(w)
    if n == 0:
        raise ValueError("least_rotation of an empty word")
    s = w + w
    f = [-1] * (2 * n)
    k = 0
    for j in range(1, 2 * n):
        sj = s[j]
        i = f[j - k - 1]
        while i != -1 and sj != s[k + i + 1]:
            if sj < s[k + i + 1]:
                k = j - i - 1
            i = f[i]
        if sj != s[k + i + 1]:
            # i == -1 here
            if sj < s[k]:
                k = j
            f[j - k] = -1
        else:
            f[j - k] = i + 1
    return s[k:k + n]


def least_rotation_naive(w: Sequence[int]) -> Word:
    w = tuple(w)
    if not w:
        raise ValueError("least_rotation of an empty word")
    return min(w[i:] + w[:i] for i in range(len(w)))


def rotate(w: Sequence[int], j: int) -> Word:
    w = tuple(w)
    if not w:
        return w
    j %= len(w)
    return w[j:] + w[:j]


def reverse(w: Sequence[int]) -> Word:
    return tuple(reversed(w))


def content(w: Iterable[int], k: int) -> list[int]:
    """Count vector: entry i is the number of occurrences of symbol i."""
    counts = [0] * k
    for s in w:
        if not 0 <= s < k:
            raise InvalidSymbolError(f"symbol {s} outside alphabet of size {k}")
        counts[s] += 1
    return counts


def max_cyclic_zero_run(w: Sequence[int]) -> int:
    """Longest run of 0s in ``w`` read cyclically (len(w) for the all-zero word)."""
    n = len(w)
    if n == 0:
        raise ValueError("max_cyclic_zero_run of an empty word")
    try:
        start = next(i for i, s in enumerate(w) if s != 0)
    except StopIteration:
        return n
    # Scan one full turn starting just after a non-zero symbol, so every
    # run (including the wraparound one) is seen contiguously.
    best = run = 0
    for i in range(start + 1, start + n + 1):
        if w[i % n] == 0:
            run += 1
            if run > best:
                best = run
        else:
            run = 0
    return best


def cyclic_windows(w: Sequence[int], n: int) -> list[Word]:
    """All len(w) cyclic length-n windows of ``w``, in starting-position order."""
    w = tuple(w)
    m = len(w)
    if m == 0:
        return []
    reps = (n + m - 1) // m + 1
    ext = w * reps
    return [ext[i:i + n] for i in range(m)]


def format_word(w: Sequence[int], offset: int = 0) -> str:
    """Render a word; ``offset`` shifts symbols for display (1 for 1-based families)."""
    vals = [s + offset for s in w]
    if all(0 <= v <= 9 for v in vals):
        return "".join(str(v) for v in vals)
    return ",".join(str(v) for v in vals)


def parse_word(text: str, offset: int = 0) -> Word:
    """Inverse of :func:`format_word`; accepts digit strings or comma-separated ints."""
    text = text.strip()
    if not text:
        return ()
    if "," in text:
        parts = [p.strip() for p in text.split(",")]
    else:
        parts = list(text)
    try:
        vals = [int(p) - offset for p in parts]
    except ValueError:
        raise InvalidSymbolError(f"cannot parse word {text!r}") from None
    if any(v < 0 for v in vals):
        raise InvalidSymbolError(f"negative symbol in {text!r}")
    return tuple(vals)
