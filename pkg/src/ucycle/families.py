"""The eight string families and their implicit de Bruijn graphs.

Each family is a set S of length-L words over {0..k-1}.  Vertices are the
length-(L-1) prefixes/suffixes of members and every member is an edge
labelled with its last symbol.  No adjacency is stored: neighbours are
found by probing membership of the k candidate extensions.
"""

from __future__ import annotations

import itertools
import math

import numpy as np

from . import counting
from .counting import CountTables, TooLargeError, checked
from .words import InvalidSymbolError, least_rotation, max_cyclic_zero_run, reverse

# Largest k**L for which a dense member table is built.
DENSE_LIMIT = 1 << 24


class FamilyError(ValueError):
    pass


class Family:
    """Base class; subclasses set ``k``, ``L`` and implement ``_contains``."""

    name = ""
    display_offset = 0

    k: int
    L: int

    def __init__(self):
        self.cardinality = self._cardinality()
        if self.cardinality < 1:
            raise FamilyError(f"{self!r} is empty")

    # -- identity -------------------------------------------------------
    def params(self) -> dict:
        raise NotImplementedError

    def __repr__(self):
        args = ", ".join(f"{k}={v}" for k, v in self.params().items())
        return f"{type(self).__name__}({args})"

    def __eq__(self, other):
        return type(self) is type(other) and self.params() == other.params()

    def __hash__(self):
        return hash((type(self).__name__, tuple(self.params().items())))

    # -- membership and neighbours -------------------------------------
    def contains(self, w) -> bool:
        if len(w) != self.L:
            raise ValueError(f"word of length {len(w)}, expected {self.L}")
        for s in w:
            if not 0 <= s < self.k:
                raise InvalidSymbolError(f"symbol {s} outside alphabet of size {self.k}")
        return self._contains(tuple(w))

    def _contains(self, w: tuple) -> bool:
        raise NotImplementedError

    def out_labels(self, v) -> list[int]:
        v = tuple(v)
        return [s for s in range(self.k) if self._contains(v + (s,))]

    def in_symbols(self, v) -> list[int]:
        v = tuple(v)
        return [s for s in range(self.k) if self._contains((s,) + v)]

    # -- counts ---------------------------------------------------------
    def _cardinality(self) -> int:
        raise NotImplementedError

    def vertex_count(self) -> int:
        return len(self.vertices())

    def vertices(self) -> set:
        """All vertices, as the union of member prefixes and suffixes."""
        pre, suf = self.prefix_suffix_sets()
        return pre | suf

    def prefix_suffix_sets(self) -> tuple[set, set]:
        pre, suf = set(), set()
        for w in self.members():
            pre.add(w[:-1])
            suf.add(w[1:])
        return pre, suf

    def members(self):
        """Iterate S in lexicographic order (brute force, guarded)."""
        if self.k ** self.L <= DENSE_LIMIT:
            table = self.member_table()
            for code in np.flatnonzero(table):
                yield decode(int(code), self.k, self.L)
            return
        raise TooLargeError(f"{self!r}: {self.k}^{self.L} words exceeds enumeration guard")

    # -- dense (vectorised) view ---------------------------------------
    def member_mask(self, digits: np.ndarray) -> np.ndarray:
        """Vectorised membership of the rows of an (N, L) digit array."""
        return np.fromiter((self._contains(tuple(int(x) for x in row)) for row in digits),
                           dtype=bool, count=len(digits))

    def member_table(self, chunk: int = 1 << 20) -> np.ndarray:
        """Boolean table over all k**L radix codes (first symbol most significant)."""
        total = self.k ** self.L
        if total > DENSE_LIMIT:
            raise TooLargeError(f"{self!r}: {total} words exceeds dense guard {DENSE_LIMIT}")
        out = np.empty(total, dtype=bool)
        for start in range(0, total, chunk):
            stop = min(start + chunk, total)
            codes = np.arange(start, stop, dtype=np.int64)
            out[start:stop] = self.member_mask(digits_of(codes, self.k, self.L))
        return out

    def symbol_offset(self) -> int:
        return self.display_offset


def digits_of(codes: np.ndarray, k: int, L: int) -> np.ndarray:
    d = np.empty((len(codes), L), dtype=np.int64)
    cur = codes.copy()
    for i in range(L - 1, -1, -1):
        d[:, i] = cur % k
        cur //= k
    return d


def encode(w, k: int) -> int:
    code = 0
    for s in w:
        code = code * k + s
    return code


def decode(code: int, k: int, L: int) -> tuple:
    out = [0] * L
    for i in range(L - 1, -1, -1):
        code, out[i] = divmod(code, k)
    return tuple(out)


class AllStrings(Family):
    name = "debruijn"

    def __init__(self, k: int, n: int):
        if k < 2 or n < 1:
            raise FamilyError("debruijn needs k >= 2 and n >= 1")
        self.k, self.n, self.L = k, n, n
        super().__init__()

    def params(self):
        return {"k": self.k, "n": self.n}

    def _contains(self, w):
        return True

    def out_labels(self, v):
        return list(range(self.k))

    def in_symbols(self, v):
        return list(range(self.k))

    def _cardinality(self):
        return checked(self.k ** self.n)

    def vertex_count(self):
        return checked(self.k ** (self.n - 1))

    def vertices(self):
        return set(itertools.product(range(self.k), repeat=self.L - 1))

    def member_mask(self, digits):
        return np.ones(len(digits), dtype=bool)


class MultisetPerm(Family):
    """Shorthand permutations of a multiset: drop the (implied) last symbol."""

    name = "multiset"

    def __init__(self, multiplicities):
        mult = tuple(int(c) for c in multiplicities)
        if len(mult) < 1 or any(c < 0 for c in mult):
            raise FamilyError("multiset needs non-negative multiplicities")
        n = sum(mult)
        if n < 2:
            raise FamilyError("multiset needs at least 2 elements")
        self.multiplicities = mult
        self.n = n
        self.k = max(len(mult), 2)
        self.L = n - 1
        super().__init__()

    def params(self):
        return {"content": self.multiplicities}

    def _mult(self):
        return self.multiplicities + (0,) * (self.k - len(self.multiplicities))

    def _contains(self, w):
        counts = [0] * self.k
        for s in w:
            counts[s] += 1
        return all(c <= m for c, m in zip(counts, self._mult()))

    def _cardinality(self):
        return counting.multinomial(self.multiplicities)

    def member_mask(self, digits):
        ok = np.ones(len(digits), dtype=bool)
        for s, m in enumerate(self._mult()):
            ok &= (digits == s).sum(axis=1) <= m
        return ok

    def members(self):
        # Lex-order distinct arrangements of length n-1; exactly one unit is left over.
        left = list(self._mult())
        word = []

        def rec():
            if len(word) == self.L:
                yield tuple(word)
                return
            for s in range(self.k):
                if left[s]:
                    left[s] -= 1
                    word.append(s)
                    yield from rec()
                    word.pop()
                    left[s] += 1

        yield from rec()


class ShorthandPerm(MultisetPerm):
    name = "perm"
    display_offset = 1

    def __init__(self, n: int):
        if n < 2:
            raise FamilyError("perm needs n >= 2")
        super().__init__((1,) * n)

    def params(self):
        return {"n": self.n}

    def _contains(self, w):
        return len(set(w)) == len(w)

    def _cardinality(self):
        return checked(math.factorial(self.n))

    def vertex_count(self):
        return checked(math.factorial(self.n) // 2)

    def member_mask(self, digits):
        s = np.sort(digits, axis=1)
        return ~(s[:, 1:] == s[:, :-1]).any(axis=1)


class ShorthandSubset(MultisetPerm):
    name = "subset"

    def __init__(self, n: int, t: int):
        if not 2 <= t <= n:
            raise FamilyError("subset needs 2 <= t <= n")
        self.t = t
        super().__init__((n - t, t))

    def params(self):
        return {"n": self.n, "t": self.t}

    def _contains(self, w):
        return self.t - 1 <= sum(w) <= self.t

    def _cardinality(self):
        return counting.binomial(self.n, self.t)

    def vertex_count(self):
        n, t = self.n, self.t
        return checked(counting.binomial(n - 2, t - 2) + counting.binomial(n - 2, t - 1)
                       + counting.binomial(n - 2, t))

    def member_mask(self, digits):
        w = digits.sum(axis=1)
        return (w >= self.t - 1) & (w <= self.t)


class WeakOrder(Family):
    """Weak orders on n competitors; symbol v means v competitors finished ahead."""

    name = "weak"
    display_offset = 1

    def __init__(self, n: int):
        if n < 1:
            raise FamilyError("weak needs n >= 1")
        self.n = n
        self.k = max(n, 2)
        self.L = n
        self.tables = CountTables(self.k, n)
        super().__init__()

    def params(self):
        return {"n": self.n}

    def _contains(self, w):
        for v in set(w):
            if sum(1 for x in w if x < v) != v:
                return False
        return True

    def _cardinality(self):
        return self.tables.weak[self.n]

    def member_mask(self, digits):
        ok = np.ones(len(digits), dtype=bool)
        for i in range(digits.shape[1]):
            v = digits[:, i]
            ok &= (digits < v[:, None]).sum(axis=1) == v
        return ok


class WeightRange(Family):
    name = "weight-range"

    def __init__(self, k: int, n: int, lo: int, hi: int):
        if k < 2 or n < 1:
            raise FamilyError("weight-range needs k >= 2 and n >= 1")
        self.k, self.n, self.L = k, n, n
        self.lo, self.hi = lo, hi
        self.tables = CountTables(k, n, weight_range=(lo, hi))
        super().__init__()

    def params(self):
        return {"k": self.k, "n": self.n, "min": self.lo, "max": self.hi}

    def _contains(self, w):
        return self.lo <= sum(w) <= self.hi

    def _cardinality(self):
        return self.tables.wr(self.n, self.lo, self.hi)

    def vertex_count(self):
        if self.n == 1:
            return 1
        return self.tables.wr(self.n - 1, max(0, self.lo - self.k + 1), self.hi)

    def member_mask(self, digits):
        w = digits.sum(axis=1)
        return (w >= self.lo) & (w <= self.hi)


class Forbidden(Family):
    """Words with no cyclic run of z zeros."""

    name = "forbidden"

    def __init__(self, k: int, n: int, z: int):
        if k < 2 or n < 1:
            raise FamilyError("forbidden needs k >= 2 and n >= 1")
        if z < 2:
            raise FamilyError("forbidden needs z >= 2")
        self.k, self.n, self.L, self.z = k, n, n, z
        self.tables = CountTables(k, n, z=z)
        super().__init__()

    def params(self):
        return {"k": self.k, "n": self.n, "z": self.z}

    def _contains(self, w):
        return max_cyclic_zero_run(w) < self.z

    def _cardinality(self):
        return self.tables.forb_cyclic

    def member_mask(self, digits):
        n = digits.shape[1]
        zero = digits == 0
        allzero = zero.all(axis=1)
        run = np.zeros(len(digits), dtype=np.int64)
        best = np.zeros(len(digits), dtype=np.int64)
        for i in range(2 * n):
            run = np.where(zero[:, i % n], run + 1, 0)
            np.maximum(best, run, out=best)
        best = np.where(allzero, n, np.minimum(best, n))
        return best < self.z


class Orientable(Family):
    """Union of the necklace classes of asymmetric bracelets.

    A word belongs iff its necklace is strictly smaller than the necklace of
    its reversal, i.e. its class is the one holding the bracelet.
    """

    name = "orientable"

    def __init__(self, k: int, n: int):
        if k < 2 or n < 1:
            raise FamilyError("orientable needs k >= 2 and n >= 1")
        self.k, self.n, self.L = k, n, n
        super().__init__()

    def params(self):
        return {"k": self.k, "n": self.n}

    def _contains(self, w):
        return least_rotation(w) < least_rotation(reverse(w))

    def _cardinality(self):
        return counting.os_count(self.k, self.n)

    def member_mask(self, digits):
        codes = np.zeros(len(digits), dtype=np.int64)
        for i in range(digits.shape[1]):
            codes = codes * self.k + digits[:, i]
        return counting.orientable_mask(codes, self.k, self.n)


FAMILY_NAMES = ("debruijn", "perm", "subset", "multiset", "weak",
                "weight-range", "forbidden", "orientable")


def make_family(name: str, n=None, k=None, t=None, content=None, lo=None, hi=None, z=None):
    """Build a family from CLI-style parameters."""

    def need(value, flag):
        if value is None:
            raise FamilyError(f"family {name!r} requires --{flag}")
        return value

    if name == "debruijn":
        return AllStrings(k if k is not None else 2, need(n, "n"))
    if name == "perm":
        return ShorthandPerm(need(n, "n"))
    if name == "subset":
        return ShorthandSubset(need(n, "n"), need(t, "t"))
    if name == "multiset":
        return MultisetPerm(need(content, "content"))
    if name == "weak":
        return WeakOrder(need(n, "n"))
    if name == "weight-range":
        return WeightRange(k if k is not None else 2, need(n, "n"), need(lo, "min"), need(hi, "max"))
    if name == "forbidden":
        return Forbidden(k if k is not None else 2, need(n, "n"), need(z, "z"))
    if name == "orientable":
        return Orientable(k if k is not None else 2, need(n, "n"))
    raise FamilyError(f"unknown family {name!r}")
