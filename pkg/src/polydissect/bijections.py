"""Explicit bijections between nested sets, partitions with blocks of size at
least 2, internally ordered partitions and coding triples."""

from __future__ import annotations

from typing import Optional, Sequence

from .core import (
    InternallyOrderedPartition,
    NestedSet,
    ParenthesizedList,
    Partition2,
    Triple,
    ValidationError,
    check_params,
    validate,
)
from .trees import ordered_tree_from_parenthesization, tree_from_nested_set


def _resolve_nk(m: int, blocks: int, n: Optional[int], k: Optional[int]) -> tuple[int, int]:
    if k is None:
        k = blocks
    if n is None:
        n = m - k + 1
    check_params(n, k)
    if blocks != k:
        raise ValidationError("wrong number of blocks", f"expected {k}, got {blocks}")
    if m != n + k - 1:
        raise ValidationError("ground size is not n+k-1", f"m={m}, n={n}, k={k}")
    return n, k


def _rebuild_levels(blocks: Sequence[Sequence[int]], n: int, k: int) -> dict[int, tuple]:
    """Assign labels ``n+1..n+k`` to the blocks of a partition of ``[1, n+k-1]``.

    Works in rounds: a block is ready once every label it contains is already
    assigned.  The ready blocks of one round form one tree level and are
    labelled by the minimum of their leaf-sets.  Returns label -> block.
    """
    leaf_set: dict[int, frozenset] = {}
    by_label: dict[int, tuple] = {}
    pending = [tuple(b) for b in blocks]
    next_label = n + 1
    while pending:
        known = next_label - 1
        ready = [b for b in pending if max(b) <= known]
        if not ready:
            raise ValidationError("no preimage", "no block can be resolved at this level")
        expanded = []
        for b in ready:
            leaves = frozenset(x for x in b if x <= n).union(
                *(leaf_set[h] for h in b if h > n)
            )
            expanded.append((min(leaves), leaves, b))
        expanded.sort()
        for _, leaves, b in expanded:
            leaf_set[next_label] = leaves
            by_label[next_label] = b
            next_label += 1
        pending = [b for b in pending if max(b) > known]
    if leaf_set[n + k] != frozenset(range(1, n + 1)):
        raise ValidationError("no preimage", "root does not cover [1,n]")
    return by_label


def phi(s: NestedSet, k: Optional[int] = None) -> Partition2:
    """Map a nested set to the partition of ``[1, n+k-1]`` formed by the child
    labels of each internal vertex."""
    validate(s, k)
    t = tree_from_nested_set(s)
    return Partition2(s.n + s.k - 1, t.children.values())


def phi_inv(p: Partition2, n: Optional[int] = None, k: Optional[int] = None) -> NestedSet:
    validate(p)
    n, k = _resolve_nk(p.m, p.k, n, k)
    by_label = _rebuild_levels([sorted(b) for b in p.blocks], n, k)
    leaves: dict[int, frozenset] = {}
    for label in sorted(by_label):
        leaves[label] = frozenset().union(
            *(leaves[h] if h > n else {h} for h in by_label[label])
        )
    return NestedSet(n, leaves.values())


def gamma(p: ParenthesizedList) -> InternallyOrderedPartition:
    """Read each internal vertex's children left to right as an ordered block."""
    t = ordered_tree_from_parenthesization(p)
    return InternallyOrderedPartition(p.n + p.k - 1, t.child_order.values())


def gamma_inv(
    q: InternallyOrderedPartition, n: Optional[int] = None, k: Optional[int] = None
) -> ParenthesizedList:
    validate(q)
    if q.distinguished is not None:
        raise ValidationError("unexpected distinguished block")
    n, k = _resolve_nk(q.m, q.k, n, k)
    by_label = _rebuild_levels(list(q.blocks), n, k)

    perm: list[int] = []
    intervals = []

    def walk(v: int) -> None:
        if v <= n:
            perm.append(v)
            return
        start = len(perm) + 1
        for c in by_label[v]:
            walk(c)
        intervals.append((start, len(perm)))

    walk(n + k)
    result = ParenthesizedList(n, perm, intervals)
    if gamma(result) != q:
        raise ValidationError("no preimage", "labels do not match the rebuilt tree")
    return result


def decode_triple(t: Triple) -> InternallyOrderedPartition:
    validate(t)
    n, k = t.n, t.k
    sI = t.sigma_I
    J = sorted(set(range(1, n + k)) - set(t.I))
    bounds = list(t.cuts) + [n]
    x1 = (sI[n - 1],) + sI[: bounds[0] - 1]
    blocks = [x1]
    for j, lo, hi in zip(J, bounds, bounds[1:]):
        blocks.append((j,) + sI[lo - 1 : hi - 1])
    return InternallyOrderedPartition(n + k - 1, blocks, x1)


def encode_triple(
    q: InternallyOrderedPartition, n: Optional[int] = None, k: Optional[int] = None
) -> Triple:
    validate(q)
    if q.distinguished is None:
        raise ValidationError("no distinguished block")
    n, k = _resolve_nk(q.m, q.k, n, k)
    x, *rest = q.parts()
    J = {p[0] for p in rest}
    I = tuple(v for v in range(1, n + k) if v not in J)
    listed = list(x[1:])
    cuts = []
    for p in rest:
        cuts.append(len(listed) + 1)
        listed.extend(p[1:])
    listed.append(x[0])
    index = {v: i for i, v in enumerate(I, start=1)}
    return Triple(n, k, I, [index[v] for v in listed], cuts)


def induced_action(g: Sequence[int], s: NestedSet, k: Optional[int] = None) -> NestedSet:
    """Act on a nested set by permuting the labels of its partition.

    ``g`` is the image list ``[g(1), ..., g(n+k-1)]``.
    """
    validate(s, k)
    m = s.n + s.k - 1
    if sorted(g) != list(range(1, m + 1)):
        raise ValidationError("g is not a permutation of [1,n+k-1]", f"{tuple(g)}")
    p = phi(s)
    moved = Partition2(m, [{g[x - 1] for x in b} for b in p.blocks])
    return phi_inv(moved, s.n, s.k)


def compose(g: Sequence[int], h: Sequence[int]) -> tuple:
    """``g ∘ h`` as an image list (apply ``h`` first)."""
    return tuple(g[h[x] - 1] for x in range(len(h)))
