"""Cover-time experiments and chi-square uniformity checks."""

from __future__ import annotations

import time
from collections import Counter
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field

from scipy.stats import chi2

from . import dense
from .euler import generate_random_ucycle
from .families import Family
from .oracle import enumerate_all_ucycles
from .rng import RandomStream
from .samplers import sample_edge
from .walk import WalkAbortedError, default_max_steps, random_arborescence

SIGNIFICANCE = 0.001


@dataclass
class ExperimentReport:
    family: str
    params: dict
    iterations: int
    min_ratio: float
    max_ratio: float
    avg_ratio: float
    wall_seconds: float
    seed: int | None = None
    full: bool = False
    completed: int = 0
    error: str | None = None
    ratios: list = field(default_factory=list, repr=False)

    def to_json(self) -> dict:
        return {"family": self.family, "params": self.params, "iterations": self.iterations,
                "min": self.min_ratio, "max": self.max_ratio, "avg": self.avg_ratio,
                "seconds": self.wall_seconds, "seed": self.seed}


def _one_iteration(f: Family, r: RandomStream, full: bool, max_steps: int, engine: str,
                   bufs=None, vertex_total=None):
    if full:
        _, st = generate_random_ucycle(f, r, max_steps=max_steps, engine=engine)
        return st.steps
    if engine == "dense":
        return dense.cover_steps(f, r, max_steps, bufs)[0]
    word, _ = sample_edge(f, r)
    return random_arborescence(f, word[:-1], r, max_steps=max_steps,
                               vertex_total=vertex_total).steps


def covertime_experiment(f: Family, iterations: int, r: RandomStream, threads: int = 1,
                         full: bool = False, max_steps: int | None = None,
                         engine: str = "auto") -> ExperimentReport:
    """Cover ratio statistics over ``iterations`` independent runs.

    Iteration i always uses ``r.split(i)``, so results do not depend on the
    thread count.  Without ``full`` only the seed and the backward walk run.
    """
    if iterations < 1:
        raise ValueError("iterations must be >= 1")
    if engine == "auto":
        engine = "dense" if dense.supported(f) else "reference"
    if max_steps is None:
        max_steps = default_max_steps(f)
    if engine == "dense":
        dense.graph_for(f)  # build tables once, outside the worker threads
        vertex_total = None
    else:
        vertex_total = f.vertex_count()
    ratios = [None] * iterations
    errors = []

    def work(indices):
        bufs = dense.graph_for(f).buffers() if engine == "dense" else None
        for i in indices:
            try:
                steps = _one_iteration(f, r.split(i), full, max_steps, engine, bufs,
                                       vertex_total)
            except WalkAbortedError as exc:
                errors.append(str(exc))
                return
            ratios[i] = steps / f.cardinality

    start = time.perf_counter()
    threads = max(1, threads)
    if threads == 1:
        work(range(iterations))
    else:
        with ThreadPoolExecutor(threads) as pool:
            list(pool.map(work, [range(t, iterations, threads) for t in range(threads)]))
    elapsed = time.perf_counter() - start
    done = [x for x in ratios if x is not None]
    if not done:
        done = [float("nan")]
    return ExperimentReport(
        family=f.name, params=f.params(), iterations=iterations,
        min_ratio=min(done), max_ratio=max(done), avg_ratio=sum(done) / len(done),
        wall_seconds=elapsed, seed=r.seed, full=full,
        completed=sum(1 for x in ratios if x is not None),
        error=errors[0] if errors else None, ratios=done)


@dataclass
class UniformityResult:
    chi_square: float
    dof: int
    threshold: float
    passed: bool
    outcomes: int
    counts: Counter = field(repr=False, default_factory=Counter)


def chi_square_threshold(dof: int, significance: float = SIGNIFICANCE) -> float:
    return float(chi2.ppf(1 - significance, dof))


def pearson(counts, outcomes) -> float:
    expected = sum(counts.values()) / len(outcomes)
    return sum((counts.get(o, 0) - expected) ** 2 / expected for o in outcomes)


def uniformity_test(f: Family, samples: int, r: RandomStream, generator=None,
                    significance: float = SIGNIFICANCE) -> UniformityResult:
    """Pearson chi-square of sampled cycles against the enumerated outcome set.

    ``generator(f, stream) -> sequence`` overrides the sampler under test.
    Any sample outside the oracle's set fails the test outright.
    """
    outcomes = sorted(enumerate_all_ucycles(f))
    if generator is None:
        def generator(fam, stream):
            return generate_random_ucycle(fam, stream)[0]
    counts: Counter = Counter()
    for i in range(samples):
        counts[tuple(generator(f, r.split(i)))] += 1
    dof = len(outcomes) - 1
    threshold = chi_square_threshold(dof, significance) if dof > 0 else 0.0
    stray = set(counts) - set(outcomes)
    stat = pearson(counts, outcomes) if dof > 0 else 0.0
    passed = not stray and stat < threshold if dof > 0 else not stray
    return UniformityResult(stat, dof, threshold, passed, len(outcomes), counts)


def report_dict(rep: ExperimentReport) -> dict:
    d = asdict(rep)
    d.pop("ratios")
    return d
