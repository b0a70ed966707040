"""Exact counters for dissections, nested sets and ordered partitions."""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial, prod
from typing import Iterator

from .core import ValidationError, check_params


@dataclass(frozen=True)
class DissectionType:
    """Cell census of a dissection: ``pairs`` holds ``(edges, multiplicity)``
    with strictly increasing edge counts."""

    pairs: tuple

    def __post_init__(self):
        object.__setattr__(self, "pairs", tuple(sorted((int(i), int(m)) for i, m in self.pairs)))

    @classmethod
    def from_cells(cls, edge_counts) -> "DissectionType":
        census: dict[int, int] = {}
        for e in edge_counts:
            census[e] = census.get(e, 0) + 1
        return cls(tuple(census.items()))

    @property
    def k(self) -> int:
        return sum(m for _, m in self.pairs)

    def __str__(self) -> str:
        return ",".join(f"{i}^{m}" for i, m in self.pairs)


def validate_type(t: DissectionType, n: int, k: int) -> None:
    check_params(n, k)
    edges = [i for i, _ in t.pairs]
    if len(set(edges)) != len(edges):
        raise ValidationError("repeated polygon size in type", str(t))
    for i, m in t.pairs:
        if not 3 <= i <= n + 1:
            raise ValidationError("polygon size out of range [3,n+1]", f"{i}")
        if m < 1:
            raise ValidationError("multiplicity must be ≥ 1", f"{i}^{m}")
    if t.k != k:
        raise ValidationError("sum of multiplicities must equal k", f"{t.k} != {k}")
    total = sum(i * m for i, m in t.pairs)
    if total != n + 2 * k - 1:
        raise ValidationError("sum of i*m must equal n+2k-1", f"{total} != {n + 2 * k - 1}")


def kirkman_cayley(n: int, k: int) -> int:
    """Dissections of a convex (n+1)-gon by k-1 non-crossing diagonals."""
    check_params(n, k)
    num = comb(n - 2, k - 1) * comb(n + k - 1, k - 1)
    q, r = divmod(num, k)
    assert r == 0, f"division by k={k} not exact for n={n}"
    return q


def distinguished_count(n: int, k: int) -> int:
    """Distinguished admissible internally ordered k-partitions of [1, n+k-1]."""
    check_params(n, k)
    return factorial(n) * comb(n - 2, k - 1) * comb(n + k - 1, k - 1)


def assoc_stirling2(m: int, k: int) -> int:
    """Partitions of [1, m] into k blocks of size at least 2.

    Bottom-up over T(m, k) = k T(m-1, k) + (m-1) T(m-2, k-1); no shared cache,
    so concurrent callers never race.
    """
    if m < 0 or k < 0:
        raise ValidationError("negative argument", f"m={m}, k={k}")
    if m < 2 * k:
        return 0
    # prev1[j] = T(i-1, j), prev2[j] = T(i-2, j)
    prev2 = [1] + [0] * k  # i = 0
    prev1 = [0] * (k + 1)  # i = 1
    if m == 0:
        return prev2[k]
    if m == 1:
        return prev1[k]
    for i in range(2, m + 1):
        cur = [0] * (k + 1)
        for j in range(1, k + 1):
            cur[j] = j * prev1[j] + (i - 1) * prev2[j - 1]
        prev2, prev1 = prev1, cur
    return prev1[k]


def ward_number(n: int, k: int) -> int:
    """Nested sets of size k on [1, n]."""
    check_params(n, k)
    return assoc_stirling2(n + k - 1, k)


def type_count(n: int, k: int, t: DissectionType) -> int:
    validate_type(t, n, k)
    denom = factorial(n) * prod(factorial(m) for _, m in t.pairs)
    q, r = divmod(factorial(n + k - 1), denom)
    assert r == 0, f"type count for {t} not integral"
    return q


def dissection_types(n: int, k: int) -> Iterator[DissectionType]:
    """Every type with k cells and sum of edge counts n+2k-1, by increasing sizes."""
    check_params(n, k)

    def split(total: int, cells: int, smallest: int) -> Iterator[list]:
        if cells == 0:
            if total == 0:
                yield []
            return
        for i in range(smallest, min(n + 1, total - 3 * (cells - 1)) + 1):
            for m in range(1, cells + 1):
                rest_total = total - i * m
                rest_cells = cells - m
                if rest_cells and rest_total < (i + 1) * rest_cells:
                    continue
                for tail in split(rest_total, rest_cells, i + 1):
                    yield [(i, m)] + tail

    for pairs in split(n + 2 * k - 1, k, 3):
        yield DissectionType(tuple(pairs))
