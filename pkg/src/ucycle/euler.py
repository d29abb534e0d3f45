"""Adjacency ordering with tree edges last, and the traversal that emits the cycle."""

from __future__ import annotations

from dataclasses import dataclass, field

from .families import Family
from .rng import RandomStream
from .samplers import sample_edge
from .walk import ArborescenceMap, random_arborescence


class NotEulerianError(RuntimeError):
    pass


@dataclass
class AdjacencyOrder:
    root: tuple
    order: dict  # vertex -> list of out-labels, tree label last
    cursor: dict = field(default_factory=dict)


@dataclass
class RunStats:
    steps: int
    cover_ratio: float
    attempts: int = 1


def order_adjacency(f: Family, a: ArborescenceMap, r: RandomStream) -> AdjacencyOrder:
    """Shuffle each visited vertex's non-tree out-labels and append the tree label.

    Vertices are processed in first-visit order; the root's list is a plain
    shuffle of all its labels.
    """
    order = {}
    tree = a.tree
    for v in a.visited_order:
        labels = f.out_labels(v)
        t = tree.get(v)
        if t is not None:
            labels.remove(t)
            r.shuffle(labels)
            labels.append(t)
        else:
            r.shuffle(labels)
        order[v] = labels
    return AdjacencyOrder(a.root, order)


def traverse(f: Family, adj: AdjacencyOrder) -> tuple:
    """Follow the first unused out-label from the root until a list is exhausted."""
    order = adj.order
    cursor = adj.cursor
    out = []
    v = adj.root
    while True:
        labels = order.get(v)
        if labels is None:
            raise NotEulerianError(f"{f!r}: traversal reached unknown vertex {v}")
        i = cursor.get(v, 0)
        if i == len(labels):
            break
        cursor[v] = i + 1
        s = labels[i]
        out.append(s)
        v = (v + (s,))[1:]
    if v != adj.root or len(out) != f.cardinality:
        raise NotEulerianError(
            f"{f!r}: traversal stopped at {v} after {len(out)} of {f.cardinality} edges")
    return tuple(out)


def generate_reference(f: Family, r: RandomStream, max_steps: int | None = None):
    """Algorithm steps 1-4 on the implicit graph with hash-set bookkeeping."""
    word, attempts = sample_edge(f, r)
    root = word[:-1]
    a = random_arborescence(f, root, r, max_steps=max_steps)
    adj = order_adjacency(f, a, r)
    seq = traverse(f, adj)
    return seq, RunStats(a.steps, a.steps / f.cardinality, attempts)


def generate_random_ucycle(f: Family, r: RandomStream, max_steps: int | None = None,
                           engine: str = "auto"):
    """Uniformly random universal cycle for ``f`` plus the run statistics.

    ``engine`` is "reference" (hash-set walk over the implicit graph),
    "dense" (numba kernels over a precomputed membership table) or "auto".
    Both engines consume the random stream identically.
    """
    from . import dense

    if engine == "auto":
        engine = "dense" if dense.supported(f) else "reference"
    if engine == "dense":
        return dense.generate(f, r, max_steps=max_steps)
    if engine == "reference":
        return generate_reference(f, r, max_steps=max_steps)
    raise ValueError(f"unknown engine {engine!r}")
