"""Random spanning in-trees via a backward random walk."""

from __future__ import annotations

from dataclasses import dataclass, field

from .families import Family
from .rng import RandomStream

DEFAULT_STEP_FACTOR = 10 ** 4


class WalkAbortedError(RuntimeError):
    """The backward walk hit its step guard before covering the graph."""


@dataclass
class ArborescenceMap:
    root: tuple
    tree: dict = field(default_factory=dict)  # vertex -> label of its tree out-edge
    visited_order: list = field(default_factory=list)
    steps: int = 0

    def parent(self, v: tuple) -> tuple:
        return (v + (self.tree[v],))[1:]


def default_max_steps(f: Family) -> int:
    return DEFAULT_STEP_FACTOR * f.cardinality


def random_arborescence(f: Family, root, r: RandomStream, max_steps: int | None = None,
                        vertex_total: int | None = None) -> ArborescenceMap:
    """Walk backwards from ``root``; the edge used to first reach a vertex is its tree edge.

    For an Eulerian graph the resulting in-tree is uniform over all spanning
    in-trees rooted at ``root``.
    """
    root = tuple(root)
    if vertex_total is None:
        vertex_total = f.vertex_count()
    if max_steps is None:
        max_steps = default_max_steps(f)
    tree = {}
    order = [root]
    visited = {root}
    w = root
    steps = 0
    in_symbols = f.in_symbols
    while len(visited) < vertex_total:
        if steps >= max_steps:
            raise WalkAbortedError(
                f"{f!r}: {len(visited)}/{vertex_total} vertices after {steps} steps")
        preds = in_symbols(w)
        if not preds:
            raise WalkAbortedError(f"{f!r}: vertex {w} has no in-edges")
        sigma = preds[r.uniform_below(len(preds))]
        u = (sigma,) + w[:-1]
        steps += 1
        if u not in visited:
            visited.add(u)
            order.append(u)
            tree[u] = w[-1]
        w = u
    return ArborescenceMap(root, tree, order, steps)


def cover_ratio(a: ArborescenceMap, f: Family) -> float:
    return a.steps / f.cardinality
