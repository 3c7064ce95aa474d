"""Set partitions and integer partitions: enumeration, canonical indexing,
induced partitions, permutation action, and shape extraction.

Ground sets are [n] = {1, ..., n}.  A set partition is stored canonically as a
restricted growth string (RGS): a tuple ``rgs`` of length n with ``rgs[0] = 0``
and ``rgs[i] <= 1 + max(rgs[:i])``, where ``rgs[i]`` is the class label of
element i+1 and labels appear in order of first occurrence.  All vector
coordinates over partitions use lexicographic RGS order.
"""

from __future__ import annotations

import functools
import itertools
from dataclasses import dataclass

SET_PARTITION_CAP = 13
INTEGER_PARTITION_CAP = 60


class SizeLimitError(ValueError):
    """Raised when an enumeration request exceeds the desk-scale caps."""


def bell_number(n):
    """Bell number B(n) via the Bell triangle."""
    row = [1]
    for _ in range(n):
        nxt = [row[-1]]
        for x in row:
            nxt.append(nxt[-1] + x)
        row = nxt
    return row[0]


def canonical_rgs(labels):
    """Relabel an arbitrary label sequence to a canonical RGS tuple."""
    seen = {}
    out = []
    for lab in labels:
        if lab not in seen:
            seen[lab] = len(seen)
        out.append(seen[lab])
    return tuple(out)


def _check_rgs(rgs):
    if len(rgs) == 0:
        raise ValueError("empty RGS")
    mx = -1
    for i, lab in enumerate(rgs):
        if not isinstance(lab, int) or lab < 0:
            raise ValueError("RGS labels must be non-negative integers")
        if lab > mx + 1:
            raise ValueError(f"not a restricted growth string at position {i}: {rgs}")
        mx = max(mx, lab)


@dataclass(frozen=True)
class SetPartition:
    """A partition of [n] in canonical RGS form."""

    n: int
    rgs: tuple

    def __post_init__(self):
        if self.n != len(self.rgs):
            raise ValueError("n must equal len(rgs)")
        _check_rgs(self.rgs)

    @classmethod
    def from_blocks(cls, n, blocks):
        """Build from an iterable of disjoint blocks covering {1..n}."""
        lab = {}
        for b in blocks:
            mn = min(b)
            for v in b:
                if v in lab:
                    raise ValueError("blocks overlap")
                lab[v] = mn
        if sorted(lab) != list(range(1, n + 1)):
            raise ValueError("blocks must cover {1..n} exactly")
        return cls(n, canonical_rgs(lab[v] for v in range(1, n + 1)))

    def num_classes(self):
        return max(self.rgs) + 1

    def class_of(self, v):
        """The block containing element v, as a frozenset."""
        lab = self.rgs[v - 1]
        return frozenset(i + 1 for i, x in enumerate(self.rgs) if x == lab)

    def blocks(self):
        """Blocks in order of first occurrence."""
        out = [[] for _ in range(self.num_classes())]
        for i, lab in enumerate(self.rgs):
            out[lab].append(i + 1)
        return tuple(frozenset(b) for b in out)

    def same_class(self, u, v):
        return self.rgs[u - 1] == self.rgs[v - 1]

    def to_string(self):
        if max(self.rgs) > 9:
            raise ValueError("RGS string form only supports class labels 0..9")
        return "RGS:" + "".join(str(d) for d in self.rgs)

    @classmethod
    def from_string(cls, s):
        if not s.startswith("RGS:"):
            raise ValueError(f"expected 'RGS:<digits>', got {s!r}")
        digits = s[4:]
        return cls(len(digits), tuple(int(c) for c in digits))


@dataclass(frozen=True)
class IntegerPartition:
    """A partition of the integer n: parts sorted non-increasing."""

    n: int
    parts: tuple

    def __post_init__(self):
        if any(p <= 0 for p in self.parts):
            raise ValueError("parts must be positive")
        if list(self.parts) != sorted(self.parts, reverse=True):
            raise ValueError("parts must be non-increasing")
        if sum(self.parts) != self.n:
            raise ValueError("parts must sum to n")

    def to_string(self):
        return "-".join(str(p) for p in self.parts)

    @classmethod
    def from_string(cls, s):
        parts = tuple(int(tok) for tok in s.split("-"))
        return cls(sum(parts), parts)


def iter_set_partitions(n):
    """Yield all RGS tuples of length n in lexicographic order."""
    rgs = [0] * n

    def rec(i, mx):
        if i == n:
            yield tuple(rgs)
            return
        for lab in range(mx + 2):
            rgs[i] = lab
            yield from rec(i + 1, max(mx, lab))

    yield from rec(1, 0) if n > 0 else iter(())


def enumerate_set_partitions(n):
    """All set partitions of [n], lexicographic in RGS; length Bell(n)."""
    if not 1 <= n <= SET_PARTITION_CAP:
        raise SizeLimitError(f"set-partition enumeration supports 1 <= n <= {SET_PARTITION_CAP}")
    return [SetPartition(n, rgs) for rgs in iter_set_partitions(n)]


@dataclass(frozen=True)
class PartitionIndex:
    """Fixed coordinate order for vectors over partitions of [n]."""

    n: int
    table: tuple
    position: object  # dict rgs tuple -> index

    @classmethod
    def build(cls, n):
        return _partition_index(n)

    def __len__(self):
        return len(self.table)

    def index_of(self, pi):
        return self.position[pi.rgs]

    def at(self, i):
        return self.table[i]


@functools.lru_cache(maxsize=None)
def _partition_index(n):
    table = tuple(enumerate_set_partitions(n))
    position = {pi.rgs: i for i, pi in enumerate(table)}
    return PartitionIndex(n, table, position)


def induced_partition(pi, K):
    """The partition of [|K|] induced on a subset K of [n], relabeled 1..|K|
    in increasing order of the original elements."""
    K = sorted(set(K))
    if not K:
        raise ValueError("K must be non-empty")
    if K[0] < 1 or K[-1] > pi.n:
        raise ValueError("K must be a subset of {1..n}")
    return SetPartition(len(K), canonical_rgs(pi.rgs[v - 1] for v in K))


def check_permutation(sigma, n):
    if sorted(sigma) != list(range(1, n + 1)):
        raise ValueError("sigma must be a permutation of {1..n} in one-line form")


def apply_permutation(sigma, pi):
    """Image of pi under sigma: x ~ y in the result iff
    sigma^{-1}(x) ~ sigma^{-1}(y) in pi.  sigma is one-line: sigma[i] = image of i+1."""
    n = pi.n
    check_permutation(sigma, n)
    inv = [0] * n
    for i, img in enumerate(sigma):
        inv[img - 1] = i + 1
    return SetPartition(n, canonical_rgs(pi.rgs[inv[x] - 1] for x in range(n)))


def integer_shape(pi):
    """Multiset of class sizes as an IntegerPartition."""
    sizes = sorted((len(b) for b in pi.blocks()), reverse=True)
    return IntegerPartition(pi.n, tuple(sizes))


def iter_integer_partitions(n, max_part=None):
    """Yield partitions of n (as tuples) in reverse-lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for k in range(min(n, max_part), 0, -1):
        for rest in iter_integer_partitions(n - k, k):
            yield (k,) + rest


def enumerate_integer_partitions(n):
    """All integer partitions of n, reverse-lexicographic."""
    if not 1 <= n <= INTEGER_PARTITION_CAP:
        raise SizeLimitError(f"integer-partition enumeration supports 1 <= n <= {INTEGER_PARTITION_CAP}")
    return [IntegerPartition(n, parts) for parts in iter_integer_partitions(n)]


def shape_count_in_rer(shape):
    """Number of set partitions of [n] with the given integer shape:
    n! / (prod_i k_i! * prod_size multiplicity(size)!)."""
    count = _factorial(shape.n)
    for k in shape.parts:
        count //= _factorial(k)
    for size in set(shape.parts):
        count //= _factorial(sum(1 for k in shape.parts if k == size))
    return count


@functools.lru_cache(maxsize=None)
def _factorial(a):
    return 1 if a <= 1 else a * _factorial(a - 1)


def partitions_with_shape(n, shape):
    """All set partitions of [n] whose class-size multiset equals shape."""
    out = [pi for pi in enumerate_set_partitions(n) if integer_shape(pi) == shape]
    return out


def all_subsets(n, nonempty=True):
    """Subsets of {1..n} as sorted tuples."""
    base = range(1, n + 1)
    start = 1 if nonempty else 0
    for r in range(start, n + 1):
        yield from itertools.combinations(base, r)
