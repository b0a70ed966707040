"""Exhaustive generators, each yielding its family exactly once in canonical
order (see :func:`polydissect.core.canonical_key`).

The generators are lazy backtracking searches: every recursion level carries
an agenda of the choices still compatible with the prefix built so far, so a
stream holds one partial object plus the recursion stack.
"""

from __future__ import annotations

from itertools import combinations, permutations
from typing import Iterator, Optional, Sequence

from .core import (
    InternallyOrderedPartition,
    NestedSet,
    ParenthesizedList,
    Partition2,
    Triple,
    ValidationError,
    check_params,
)


def _check_m_k(m: int, k: int) -> None:
    if k < 1:
        raise ValidationError("k must be ≥ 1", f"k={k}")
    if m < 2 * k:
        raise ValidationError("m must be ≥ 2k", f"m={m}, k={k}")


def _compatible(a: frozenset, b: frozenset) -> bool:
    return not (a & b) or a <= b or b <= a


def enum_nested_sets(n: int, k: int) -> Iterator[NestedSet]:
    check_params(n, k)
    full = frozenset(range(1, n + 1))
    # candidates listed in the order the output is compared: lexicographic on sorted lists
    candidates = sorted(
        (c for size in range(2, n + 1) for c in combinations(range(1, n + 1), size)),
    )

    def key(block: tuple) -> tuple[int, int]:
        return (block[0], len(block))

    def extend(chosen: list, agenda: list) -> Iterator[NestedSet]:
        if len(chosen) == k:
            if any(len(b) == n for b in chosen):
                yield NestedSet(n, chosen)
            return
        need = k - len(chosen)
        has_full = any(len(b) == n for b in chosen)
        for c in agenda:
            if not has_full and c[0] > 1:
                # the full set sorts before every block not containing 1
                continue
            cs = frozenset(c)
            rest = [d for d in agenda if key(d) > key(c) and _compatible(cs, frozenset(d))]
            if len(rest) >= need - 1:
                yield from extend(chosen + [c], rest)

    start = [c for c in candidates if _compatible(frozenset(c), full)]
    yield from extend([], start)


def enum_partitions2(m: int, k: int) -> Iterator[Partition2]:
    _check_m_k(m, k)

    def blocks_from(rest: tuple, left: int) -> Iterator[list]:
        # the block holding the smallest remaining element comes first
        if left == 1:
            yield [rest]
            return
        head, tail = rest[0], rest[1:]
        for block in _sorted_subsets_with_head(head, tail, len(tail) - 2 * (left - 1)):
            used = set(block)
            remaining = tuple(x for x in tail if x not in used)
            for more in blocks_from(remaining, left - 1):
                yield [block] + more

    for blocks in blocks_from(tuple(range(1, m + 1)), k):
        yield Partition2(m, blocks)


def _sorted_subsets_with_head(head: int, tail: Sequence[int], max_extra: int) -> Iterator[tuple]:
    """``(head, *subset)`` for nonempty subsets of ``tail`` of size ≤ max_extra,
    in lexicographic order of the tuples."""

    def grow(prefix: tuple, start: int) -> Iterator[tuple]:
        if len(prefix) > 1:
            yield prefix
        if len(prefix) - 1 == max_extra:
            return
        for i in range(start, len(tail)):
            yield from grow(prefix + (tail[i],), i + 1)

    yield from grow((head,), 0)


def enum_parenthesizations(
    n: int, k: int, perm: Optional[Sequence[int]] = None
) -> Iterator[ParenthesizedList]:
    """All parenthesizations of ``perm`` (default ``1..n``) with ``k`` pairs."""
    check_params(n, k)
    perm = tuple(range(1, n + 1)) if perm is None else tuple(perm)
    if sorted(perm) != list(range(1, n + 1)):
        raise ValidationError("perm is not a permutation of [1,n]", f"{perm}")

    def fits(a: tuple, b: tuple) -> bool:
        (l1, r1), (l2, r2) = a, b
        return r1 < l2 or r2 < l1 or (l1 <= l2 and r2 <= r1) or (l2 <= l1 and r1 <= r2)

    # (1, n) sorts after every (1, r) and before every (l, r) with l > 1, so
    # leaving it out of the search does not change the output order
    def extend(chosen: list, agenda: list) -> Iterator[ParenthesizedList]:
        if len(chosen) == k - 1:
            yield ParenthesizedList(n, perm, chosen + [(1, n)])
            return
        need = k - 1 - len(chosen)
        for i, c in enumerate(agenda):
            if len(agenda) - i < need:
                break
            rest = [d for d in agenda[i + 1 :] if fits(c, d)]
            if len(rest) >= need - 1:
                yield from extend(chosen + [c], rest)

    proper = [(l, r) for l in range(1, n + 1) for r in range(l + 1, n + 1) if (l, r) != (1, n)]
    yield from extend([], proper)


def enum_iop(m: int, k: int) -> Iterator[InternallyOrderedPartition]:
    """Admissible internally ordered k-partitions of ``[1, m]``, no distinguished block."""
    _check_m_k(m, k)

    def blocks_after(rest: frozenset, left: int, last_head: int) -> Iterator[list]:
        if left == 0:
            if not rest:
                yield []
            return
        for head in sorted(rest):
            if head <= last_head:
                continue
            # later heads must exceed this one
            if sum(1 for x in rest if x > head) < left - 1:
                break
            remaining = rest - {head}
            for block in _sequences(head, remaining, left - 1):
                leftover = remaining - set(block)
                for more in blocks_after(leftover, left - 1, head):
                    yield [block] + more

    def _sequences(head: int, pool: frozenset, left_after: int) -> Iterator[tuple]:
        # sequences (head, x1, x2, ...) in lexicographic order, leaving a feasible pool
        def feasible(remaining: frozenset) -> bool:
            if left_after == 0:
                return not remaining
            return (
                len(remaining) >= 2 * left_after
                and sum(1 for x in remaining if x > head) >= left_after
            )

        def grow(prefix: tuple, remaining: frozenset) -> Iterator[tuple]:
            if len(prefix) > 1 and feasible(remaining):
                yield prefix
            if len(remaining) <= 2 * left_after:
                return
            for x in sorted(remaining):
                yield from grow(prefix + (x,), remaining - {x})

        yield from grow((head,), pool)

    for blocks in blocks_after(frozenset(range(1, m + 1)), k, 0):
        yield InternallyOrderedPartition(m, blocks)


def enum_triples(n: int, k: int) -> Iterator[Triple]:
    check_params(n, k)
    for I in combinations(range(1, n + k), n):
        for sigma in permutations(range(1, n + 1)):
            for cuts in combinations(range(2, n), k - 1):
                yield Triple(n, k, I, sigma, cuts)
