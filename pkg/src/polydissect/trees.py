"""Labelled rooted trees of nested sets.

A nested set on ``[1, n]`` plus the singletons is drawn as its Hasse diagram:
leaves ``1..n``, one internal vertex per block.  Internal vertices are labelled
``n+1..n+k`` by level (longest path down to a leaf), and inside a level by the
minimal element of their leaf-sets.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Mapping, Optional

from .core import NestedSet, ParenthesizedList, ValidationError, validate


@dataclass(frozen=True)
class LevelTree:
    n: int
    k: int
    parent: Mapping[int, int]
    child_order: Optional[Mapping[int, tuple]] = field(default=None)

    @property
    def root(self) -> int:
        return self.n + self.k

    @cached_property
    def children(self) -> dict[int, tuple]:
        ch: dict[int, list] = {v: [] for v in range(self.n + 1, self.n + self.k + 1)}
        for v, p in sorted(self.parent.items()):
            ch.setdefault(p, []).append(v)
        return {v: tuple(c) for v, c in ch.items()}

    @cached_property
    def levels(self) -> dict[int, int]:
        lv: dict[int, int] = {}

        def visit(v: int) -> int:
            if v not in lv:
                kids = self.children.get(v, ())
                lv[v] = 1 + max(visit(c) for c in kids) if kids else 0
            return lv[v]

        for v in range(1, self.n + self.k + 1):
            visit(v)
        return lv

    @cached_property
    def leaf_sets(self) -> dict[int, frozenset]:
        ls: dict[int, frozenset] = {}

        def visit(v: int) -> frozenset:
            if v not in ls:
                kids = self.children.get(v, ())
                ls[v] = frozenset().union(*map(visit, kids)) if kids else frozenset({v})
            return ls[v]

        visit(self.root)
        return ls

    def level(self, v: int) -> int:
        return self.levels[v]

    def ordered_children(self, v: int) -> tuple:
        if self.child_order is not None:
            return tuple(self.child_order[v])
        return self.children[v]

    def to_dot(self) -> str:
        lines = ["digraph LevelTree {"]
        for v in range(1, self.n + self.k + 1):
            shape = "box" if v <= self.n else "ellipse"
            lines.append(f'  {v} [label="{v} (level {self.levels[v]})", shape={shape}];')
        for v in range(self.n + 1, self.n + self.k + 1):
            for c in self.ordered_children(v):
                lines.append(f"  {v} -> {c};")
        lines.append("}")
        return "\n".join(lines) + "\n"


def validate_tree(t: LevelTree) -> None:
    n, k = t.n, t.k
    labels = set(range(1, n + k + 1))
    if set(t.parent) != labels - {t.root}:
        raise ValidationError("malformed tree", "every non-root label needs a parent")
    if not set(t.parent.values()) <= set(range(n + 1, n + k + 1)):
        raise ValidationError("malformed tree", "parents must be internal labels")
    try:
        lv = t.levels
        leaf_sets = t.leaf_sets
    except RecursionError as exc:
        raise ValidationError("malformed tree", "parent map has a cycle") from exc
    if len(leaf_sets) != n + k:
        raise ValidationError("malformed tree", "not every vertex hangs below the root")
    for v in range(n + 1, n + k + 1):
        if len(t.children[v]) < 2:
            raise ValidationError("internal vertex with fewer than 2 children", f"vertex {v}")
        if t.child_order is not None and sorted(t.child_order[v]) != sorted(t.children[v]):
            raise ValidationError("child_order disagrees with parent map", f"vertex {v}")
    internal = sorted(range(n + 1, n + k + 1), key=lambda v: (lv[v], min(leaf_sets[v])))
    if internal != list(range(n + 1, n + k + 1)):
        raise ValidationError("labels inconsistent with levels", f"expected order {internal}")


def _hasse(n: int, leafsets: list[frozenset]) -> tuple[dict, dict]:
    """Label the blocks of a nested family and link the Hasse diagram.

    Returns ``(label_of_block, parent)``.
    """
    by_size = sorted(leafsets, key=len)
    parent_block: dict = {}
    for i, b in enumerate(by_size):
        for c in by_size[i + 1 :]:
            if b < c:
                parent_block[b] = c
                break
    leaf_parent: dict[int, frozenset] = {}
    for b in reversed(by_size):
        for x in b:
            leaf_parent[x] = b  # smallest containing block wins, it comes last

    level: dict = {}
    for b in by_size:
        level.setdefault(b, 1)
        if b in parent_block:
            p = parent_block[b]
            level[p] = max(level.get(p, 1), level[b] + 1)

    order = sorted(by_size, key=lambda b: (level[b], min(b)))
    label = {b: n + 1 + i for i, b in enumerate(order)}
    parent = {x: label[b] for x, b in leaf_parent.items()}
    for b, p in parent_block.items():
        parent[label[b]] = label[p]
    return label, parent


def tree_from_nested_set(s: NestedSet) -> LevelTree:
    validate(s)
    _, parent = _hasse(s.n, list(s.blocks))
    return LevelTree(s.n, s.k, parent)


def nested_set_from_tree(t: LevelTree) -> NestedSet:
    validate_tree(t)
    return NestedSet(t.n, [t.leaf_sets[v] for v in range(t.n + 1, t.n + t.k + 1)])


def ordered_tree_from_parenthesization(p: ParenthesizedList) -> LevelTree:
    validate(p)
    by_values = {p.values(iv): iv for iv in p.intervals}
    label, parent = _hasse(p.n, list(by_values))
    position = {x: i for i, x in enumerate(p.perm, start=1)}
    for values, (l, _) in by_values.items():
        position[label[values]] = l

    order: dict[int, list] = {v: [] for v in label.values()}
    for child, par in parent.items():
        order[par].append(child)
    child_order = {v: tuple(sorted(c, key=position.__getitem__)) for v, c in order.items()}
    return LevelTree(p.n, p.k, parent, child_order)
