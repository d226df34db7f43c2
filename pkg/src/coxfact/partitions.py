"""Integer partitions and symmetric-group characters.

Dimensions come from the hook-length formula, character values from the
Murnaghan-Nakayama rule (border strips are removed on the beta-set / abacus
of the partition), and normalized transposition values from content sums.
"""

from __future__ import annotations

from collections import Counter
from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement, product
from math import factorial, prod
from typing import Iterable, Iterator, Sequence

__all__ = [
    "Partition",
    "CycleType",
    "PartitionVector",
    "partitions",
    "partition_vectors",
    "hook",
    "quasi_hook",
    "is_hook",
    "is_quasi_hook",
    "contents",
    "dim",
    "mn_char",
    "normalized_transposition_value",
    "centralizer_order",
]


class Partition(tuple):
    """A weakly decreasing tuple of positive integers."""

    def __new__(cls, parts: Iterable[int] = ()):
        parts = tuple(int(p) for p in parts)
        if any(p <= 0 for p in parts):
            raise ValueError(f"partition parts must be positive: {parts}")
        if any(a < b for a, b in zip(parts, parts[1:])):
            raise ValueError(f"partition parts must be weakly decreasing: {parts}")
        return super().__new__(cls, parts)

    @classmethod
    def from_parts(cls, parts: Iterable[int]) -> "Partition":
        """Sort arbitrary positive parts into a partition."""
        return cls(sorted(parts, reverse=True))

    @property
    def size(self) -> int:
        return sum(self)

    def conjugate(self) -> "Partition":
        if not self:
            return Partition()
        return Partition(sum(1 for p in self if p > j) for j in range(self[0]))

    def cells(self) -> Iterator[tuple[int, int]]:
        for i, p in enumerate(self):
            for j in range(p):
                yield i, j

    def __repr__(self):
        return f"Partition({list(self)})"


# A cycle type is a partition read as the multiset of cycle lengths.
CycleType = Partition


class PartitionVector(tuple):
    """An r-tuple of partitions; labels irreducible characters of G(r,1,n)."""

    def __new__(cls, components: Iterable[Iterable[int]]):
        self = super().__new__(cls, tuple(c if isinstance(c, Partition) else Partition(c) for c in components))
        self._sizes = tuple(sum(c) for c in self)
        return self

    @property
    def size(self) -> int:
        return sum(self._sizes)

    @property
    def sizes(self) -> tuple[int, ...]:
        return self._sizes

    def __repr__(self):
        return f"PartitionVector({[list(c) for c in self]})"


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of n in reverse lexicographic order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield Partition()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield Partition((first,) + tuple(rest))


@lru_cache(maxsize=None)
def _partition_list(n: int) -> tuple[Partition, ...]:
    return tuple(partitions(n))


def partition_vectors(n: int, r: int) -> Iterator[PartitionVector]:
    """All r-tuples of partitions of total size n."""
    # a size vector is a multiset of n slots out of r (stars and bars)
    for slots in combinations_with_replacement(range(r), n):
        sizes = [0] * r
        for s in slots:
            sizes[s] += 1
        for comps in product(*(_partition_list(k) for k in sizes)):
            yield PartitionVector(comps)


def hook(n: int, k: int) -> Partition:
    """The hook [n-k, 1^k]."""
    if n < 1 or not 0 <= k < n:
        raise ValueError(f"hook({n}, {k}) requires 0 <= k < n")
    return Partition((n - k,) + (1,) * k)


def quasi_hook(n: int, k: int) -> Partition:
    """The quasi-hook [n-k-1, 2, 1^(k-1)]."""
    if n < 4 or not 1 <= k <= n - 3:
        raise ValueError(f"quasi_hook({n}, {k}) requires n >= 4 and 1 <= k <= n-3")
    return Partition((n - k - 1, 2) + (1,) * (k - 1))


def is_hook(lam: Sequence[int]) -> bool:
    return len(lam) > 0 and all(p == 1 for p in lam[1:])


def is_quasi_hook(lam: Sequence[int]) -> bool:
    return len(lam) >= 2 and lam[1] == 2 and lam[0] >= 2 and all(p == 1 for p in lam[2:])


def contents(lam: Sequence[int]) -> Counter:
    """Multiset {j - i} over the cells (i, j) of lam."""
    return Counter(j - i for i, p in enumerate(lam) for j in range(p))


@lru_cache(maxsize=None)
def _dim(lam: tuple[int, ...]) -> int:
    n = sum(lam)
    conj = Partition(lam).conjugate()
    hooks = prod(lam[i] - j + conj[j] - i - 1 for i in range(len(lam)) for j in range(lam[i]))
    q, rem = divmod(factorial(n), hooks)
    assert rem == 0, lam
    return q


def dim(lam: Sequence[int]) -> int:
    """Number of standard Young tableaux of shape lam (hook-length formula)."""
    return _dim(tuple(lam))


def _beta(lam: tuple[int, ...], length: int) -> tuple[int, ...]:
    padded = lam + (0,) * (length - len(lam))
    return tuple(p + length - 1 - i for i, p in enumerate(padded))


def _from_beta(beta: Iterable[int]) -> tuple[int, ...]:
    b = sorted(beta, reverse=True)
    m = len(b)
    return tuple(p for p in (x - (m - 1 - i) for i, x in enumerate(b)) if p > 0)


@lru_cache(maxsize=None)
def _mn(lam: tuple[int, ...], mu: tuple[int, ...]) -> int:
    if not mu:
        return 1
    k, rest = mu[0], mu[1:]
    length = len(lam) + k
    beta = _beta(lam, length)
    beads = set(beta)
    total = 0
    for b in beta:
        t = b - k
        if t < 0 or t in beads:
            continue
        # height of the strip = beads strictly between t and b
        height = sum(1 for x in beads if t < x < b)
        new = _from_beta((beads - {b}) | {t})
        total += (-1) ** height * _mn(new, rest)
    return total


def mn_char(lam: Sequence[int], mu: Sequence[int]) -> int:
    """chi_lam evaluated at a permutation of cycle type mu."""
    lam = tuple(lam)
    mu = tuple(sorted(mu, reverse=True))
    if sum(lam) != sum(mu):
        raise ValueError(f"size mismatch: |{list(lam)}| != |{list(mu)}|")
    return _mn(lam, mu)


def normalized_transposition_value(lam: Sequence[int]) -> Fraction:
    """chi_lam(tau) / dim(lam) for a transposition tau, via the content sum."""
    n = sum(lam)
    if n < 2:
        raise ValueError("a transposition needs n >= 2")
    total = sum(x * m for x, m in contents(lam).items())
    return Fraction(2 * total, n * (n - 1))


def centralizer_order(mu: Sequence[int]) -> int:
    """z_mu = prod_i i^{m_i} m_i!, the centralizer order of a permutation of type mu."""
    return prod(i ** m * factorial(m) for i, m in Counter(mu).items())
