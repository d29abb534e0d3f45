"""Brute-force ground truth on small, explicitly materialised graphs.

Nothing here uses the implicit neighbour probing or the samplers; the graph
is rebuilt from an exhaustive scan of Sigma_k(L) through ``contains``.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass

from .counting import TooLargeError
from .families import Family
from .words import cyclic_windows, format_word

UCYCLE_GUARD = 64
ARBORESCENCE_GUARD = 20


@dataclass
class VerifyResult:
    ok: bool
    kind: str = ""  # "", "length", "foreign", "duplicate", "missing"
    window: tuple | None = None
    message: str = ""

    def __bool__(self):
        return self.ok


def verify_ucycle(f: Family, w) -> VerifyResult:
    """Check that the cyclic windows of ``w`` are exactly S, each once."""
    w = tuple(w)
    off = f.display_offset
    seen = set()
    for win in cyclic_windows(w, f.L):
        if any(not 0 <= s < f.k for s in win) or not f.contains(win):
            return VerifyResult(False, "foreign", win,
                                f"window {format_word(win, off)} is not in {f!r}")
        if win in seen:
            return VerifyResult(False, "duplicate", win,
                                f"duplicate window {format_word(win, off)}")
        seen.add(win)
    if len(w) != f.cardinality:
        missing = None
        if len(w) < f.cardinality and f.k ** f.L <= 1 << 20:
            missing = next((m for m in _scan(f) if m not in seen), None)
        text = f"length {len(w)} but |S| = {f.cardinality}"
        if missing is not None:
            return VerifyResult(False, "missing", missing,
                                f"{text}; missing {format_word(missing, off)}")
        return VerifyResult(False, "length", None, text)
    return VerifyResult(True)


def _scan(f: Family):
    for w in itertools.product(range(f.k), repeat=f.L):
        if f.contains(w):
            yield w


def explicit_graph(f: Family, guard: int = 1 << 16) -> dict:
    """vertex -> sorted list of (label, successor), built from a full scan."""
    if f.k ** f.L > guard:
        raise TooLargeError(f"{f!r} too large for an explicit graph")
    adj: dict = {}
    for w in _scan(f):
        u, v = w[:-1], w[1:]
        adj.setdefault(u, []).append((w[-1], v))
        adj.setdefault(v, [])
    for lst in adj.values():
        lst.sort()
    return adj


def enumerate_all_ucycles(f: Family, guard: int = UCYCLE_GUARD) -> set:
    """Every linear string obtained by reading an Euler circuit's labels from any start."""
    edges = sum(1 for _ in _scan(f)) if f.k ** f.L <= 1 << 16 else None
    if edges is None or edges > guard:
        raise TooLargeError(f"{f!r}: more than {guard} edges")
    adj = explicit_graph(f)
    used = {v: [False] * len(lst) for v, lst in adj.items()}
    results: set = set()
    path: list = []

    def dfs(v, start):
        if len(path) == edges:
            if v == start:
                results.add(tuple(path))
            return
        for i, (label, nxt) in enumerate(adj[v]):
            if not used[v][i]:
                used[v][i] = True
                path.append(label)
                dfs(nxt, start)
                path.pop()
                used[v][i] = False

    for start in adj:
        dfs(start, start)
    return results


def enumerate_arborescences(f: Family, root, guard: int = ARBORESCENCE_GUARD) -> list[dict]:
    """All maps vertex -> tree label forming a spanning in-tree rooted at ``root``."""
    adj = explicit_graph(f)
    root = tuple(root)
    if len(adj) > guard:
        raise TooLargeError(f"{f!r}: {len(adj)} vertices exceeds guard {guard}")
    others = [v for v in adj if v != root]
    choices = [adj[v] for v in others]
    trees = []
    for pick in itertools.product(*choices):
        succ = {v: nxt for v, (label, nxt) in zip(others, pick)}
        if all(_reaches(v, root, succ, len(adj)) for v in others):
            trees.append({v: label for v, (label, nxt) in zip(others, pick)})
    return trees


def _reaches(v, root, succ, limit):
    for _ in range(limit):
        if v == root:
            return True
        v = succ[v]
    return v == root
