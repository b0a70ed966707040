"""Domain types shared by every module: nested sets, partitions, parenthesized
lists, internally ordered partitions and coding triples.

All ground sets are ``[1, n]`` (or ``[1, m]``), 1-based.  Objects are frozen
values; constructors only normalise containers, :func:`validate` checks the
invariants.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import singledispatch
from typing import Any, Iterable, Optional


class ValidationError(ValueError):
    """An invariant of a domain object does not hold.

    ``invariant`` is a short stable name of the violated condition, e.g.
    ``"not nested"`` or ``"missing full set"``.
    """

    def __init__(self, invariant: str, detail: str = ""):
        self.invariant = invariant
        self.detail = detail
        super().__init__(f"{invariant}: {detail}" if detail else invariant)


def check_params(n: int, k: int) -> None:
    if n < 2:
        raise ValidationError("n must be ≥ 2", f"n={n}")
    if k < 1:
        raise ValidationError("k must be ≥ 1", f"k={k}")
    if k > n - 1:
        raise ValidationError("k must be ≤ n−1", f"n={n}, k={k}")


def _block_key(block: Iterable[int]) -> tuple[int, int]:
    b = tuple(block)
    return (min(b), len(b))


@dataclass(frozen=True)
class NestedSet:
    n: int
    blocks: frozenset

    def __post_init__(self):
        object.__setattr__(self, "blocks", frozenset(frozenset(b) for b in self.blocks))

    @property
    def k(self) -> int:
        return len(self.blocks)

    def sorted_blocks(self) -> list[list[int]]:
        """Blocks as ascending lists, ordered by (min element, size)."""
        return sorted((sorted(b) for b in self.blocks), key=_block_key)


@dataclass(frozen=True)
class Partition2:
    m: int
    blocks: frozenset

    def __post_init__(self):
        object.__setattr__(self, "blocks", frozenset(frozenset(b) for b in self.blocks))

    @property
    def k(self) -> int:
        return len(self.blocks)

    def sorted_blocks(self) -> list[list[int]]:
        return sorted((sorted(b) for b in self.blocks), key=_block_key)


@dataclass(frozen=True)
class ParenthesizedList:
    """Parenthesization of the list ``perm``; intervals are 1-based position ranges."""

    n: int
    perm: tuple
    intervals: frozenset

    def __post_init__(self):
        object.__setattr__(self, "perm", tuple(self.perm))
        object.__setattr__(
            self, "intervals", frozenset((int(l), int(r)) for l, r in self.intervals)
        )

    @property
    def k(self) -> int:
        return len(self.intervals)

    def values(self, interval: tuple[int, int]) -> frozenset:
        l, r = interval
        return frozenset(self.perm[l - 1 : r])

    def sorted_intervals(self) -> list[list[int]]:
        return [list(iv) for iv in sorted(self.intervals)]


@dataclass(frozen=True)
class InternallyOrderedPartition:
    """Partition of ``[1, m]`` whose blocks are sequences (head first).

    ``distinguished`` is either None or one of the blocks.
    """

    m: int
    blocks: frozenset
    distinguished: Optional[tuple] = None

    def __post_init__(self):
        object.__setattr__(self, "blocks", frozenset(tuple(b) for b in self.blocks))
        if self.distinguished is not None:
            object.__setattr__(self, "distinguished", tuple(self.distinguished))

    @property
    def k(self) -> int:
        return len(self.blocks)

    def ordered_blocks(self) -> list[tuple]:
        """All blocks sorted by their head (first element)."""
        return sorted(self.blocks, key=lambda b: b[0])

    def parts(self) -> list[tuple]:
        """``[X1, P2, ..., Pk]``: distinguished block first, the rest by head."""
        if self.distinguished is None:
            raise ValidationError("no distinguished block")
        rest = [b for b in self.ordered_blocks() if b != self.distinguished]
        return [self.distinguished] + rest


@dataclass(frozen=True)
class Triple:
    """Coding triple.  ``sigma`` is the image list ``[σ(1), ..., σ(n)]`` and
    ``cuts`` are the positions ``d_1 < ... < d_{k-1}``."""

    n: int
    k: int
    I: tuple
    sigma: tuple
    cuts: tuple

    def __post_init__(self):
        object.__setattr__(self, "I", tuple(self.I))
        object.__setattr__(self, "sigma", tuple(self.sigma))
        object.__setattr__(self, "cuts", tuple(self.cuts))

    @property
    def sigma_I(self) -> tuple:
        return tuple(self.I[s - 1] for s in self.sigma)

    @property
    def D(self) -> tuple:
        """Values ``i_{σ(d_t)}`` selected by the cuts."""
        sI = self.sigma_I
        return tuple(sI[d - 1] for d in self.cuts)


def block_order(a: Iterable[int], b: Iterable[int]) -> str:
    """Compare two sets by their minimal elements.

    Returns ``"less"``, ``"greater"`` or ``"incomparable"`` (equal minima).
    """
    a, b = set(a), set(b)
    if not a or not b:
        raise ValidationError("empty set", "block_order needs nonempty sets")
    ma, mb = min(a), min(b)
    if ma < mb:
        return "less"
    if ma > mb:
        return "greater"
    return "incomparable"


# -- validation -------------------------------------------------------------


def _check_nested_family(sets: list[frozenset], what: str = "not nested") -> None:
    for i, a in enumerate(sets):
        for b in sets[i + 1 :]:
            if a & b and not (a <= b or b <= a):
                raise ValidationError(what, f"{sorted(a)} and {sorted(b)}")


@singledispatch
def validate(obj: Any, k: Optional[int] = None) -> None:
    """Raise :class:`ValidationError` unless ``obj`` satisfies its invariants.

    When ``k`` is given the object must also have exactly ``k`` blocks.
    """
    raise TypeError(f"cannot validate {type(obj).__name__}")


@validate.register
def _(obj: NestedSet, k: Optional[int] = None) -> None:
    n = obj.n
    if n < 2:
        raise ValidationError("n must be ≥ 2", f"n={n}")
    ground = frozenset(range(1, n + 1))
    for b in obj.blocks:
        if not b <= ground:
            raise ValidationError("element out of range", f"{sorted(b)} not within [1,{n}]")
        if len(b) < 2:
            raise ValidationError("block smaller than 2", f"{sorted(b)}")
    if ground not in obj.blocks:
        raise ValidationError("missing full set", f"[1,{n}] is not a block")
    _check_nested_family(list(obj.blocks))
    if k is not None and obj.k != k:
        raise ValidationError("wrong number of blocks", f"expected {k}, got {obj.k}")


@validate.register
def _(obj: Partition2, k: Optional[int] = None) -> None:
    m = obj.m
    seen: set[int] = set()
    for b in obj.blocks:
        if not b:
            raise ValidationError("empty block")
        if len(b) < 2:
            raise ValidationError("block smaller than 2", f"{sorted(b)}")
        if seen & b:
            raise ValidationError("blocks not disjoint", f"{sorted(seen & b)} repeated")
        seen |= b
    if seen != set(range(1, m + 1)):
        raise ValidationError("union is not [1,m]", f"m={m}")
    if k is not None and obj.k != k:
        raise ValidationError("wrong number of blocks", f"expected {k}, got {obj.k}")


@validate.register
def _(obj: ParenthesizedList, k: Optional[int] = None) -> None:
    n = obj.n
    if n < 2:
        raise ValidationError("n must be ≥ 2", f"n={n}")
    if sorted(obj.perm) != list(range(1, n + 1)):
        raise ValidationError("perm is not a permutation of [1,n]", f"{obj.perm}")
    for l, r in obj.intervals:
        if not 1 <= l <= r <= n:
            raise ValidationError("interval out of range", f"[{l},{r}]")
        if r - l < 1:
            raise ValidationError("interval shorter than 2", f"[{l},{r}]")
    if (1, n) not in obj.intervals:
        raise ValidationError("missing maximal interval", f"[1,{n}] absent")
    ivs = sorted(obj.intervals)
    for i, (l1, r1) in enumerate(ivs):
        for l2, r2 in ivs[i + 1 :]:
            # l1 <= l2 by sorting
            if l1 < l2 <= r1 < r2:
                raise ValidationError("intervals not nested", f"[{l1},{r1}] and [{l2},{r2}]")
    if k is not None and obj.k != k:
        raise ValidationError("wrong number of intervals", f"expected {k}, got {obj.k}")


@validate.register
def _(obj: InternallyOrderedPartition, k: Optional[int] = None) -> None:
    seen: set[int] = set()
    for b in obj.blocks:
        if len(b) < 2:
            raise ValidationError("block smaller than 2", f"{b}")
        if len(set(b)) != len(b):
            raise ValidationError("repeated element in block", f"{b}")
        if seen & set(b):
            raise ValidationError("blocks not disjoint", f"{sorted(seen & set(b))} repeated")
        seen |= set(b)
    if seen != set(range(1, obj.m + 1)):
        raise ValidationError("union is not [1,m]", f"m={obj.m}")
    if obj.distinguished is not None and obj.distinguished not in obj.blocks:
        raise ValidationError("distinguished block not in partition", f"{obj.distinguished}")
    if k is not None and obj.k != k:
        raise ValidationError("wrong number of blocks", f"expected {k}, got {obj.k}")


@validate.register
def _(obj: Triple, k: Optional[int] = None) -> None:
    n, kk = obj.n, obj.k
    check_params(n, kk)
    if k is not None and kk != k:
        raise ValidationError("wrong number of blocks", f"expected {k}, got {kk}")
    m = n + kk - 1
    if len(obj.I) != n:
        raise ValidationError("I has wrong length", f"expected {n}, got {len(obj.I)}")
    if any(a >= b for a, b in zip(obj.I, obj.I[1:])):
        raise ValidationError("I not strictly ascending", f"{obj.I}")
    if obj.I and not (1 <= obj.I[0] and obj.I[-1] <= m):
        raise ValidationError("I not within [1,n+k-1]", f"{obj.I}")
    if sorted(obj.sigma) != list(range(1, n + 1)):
        raise ValidationError("sigma is not a permutation of [1,n]", f"{obj.sigma}")
    if len(obj.cuts) != kk - 1:
        raise ValidationError("cuts has wrong length", f"expected {kk - 1}, got {len(obj.cuts)}")
    if any(a >= b for a, b in zip(obj.cuts, obj.cuts[1:])):
        raise ValidationError("cuts not strictly ascending", f"{obj.cuts}")
    if obj.cuts and not (2 <= obj.cuts[0] and obj.cuts[-1] <= n - 1):
        raise ValidationError("cuts not within [2,n-1]", f"{obj.cuts}")


# -- canonical JSON ---------------------------------------------------------


@singledispatch
def to_json(obj: Any) -> dict:
    """Canonical JSON-ready dict for a domain object."""
    raise TypeError(f"no JSON form for {type(obj).__name__}")


@to_json.register
def _(obj: NestedSet) -> dict:
    return {"n": obj.n, "blocks": obj.sorted_blocks()}


@to_json.register
def _(obj: Partition2) -> dict:
    return {"m": obj.m, "blocks": obj.sorted_blocks()}


@to_json.register
def _(obj: ParenthesizedList) -> dict:
    return {"n": obj.n, "perm": list(obj.perm), "intervals": obj.sorted_intervals()}


@to_json.register
def _(obj: InternallyOrderedPartition) -> dict:
    blocks = obj.ordered_blocks()
    dist = None if obj.distinguished is None else blocks.index(obj.distinguished)
    return {"m": obj.m, "blocks": [list(b) for b in blocks], "distinguished": dist}


@to_json.register
def _(obj: Triple) -> dict:
    return {
        "n": obj.n,
        "k": obj.k,
        "I": list(obj.I),
        "sigma": list(obj.sigma),
        "cuts": list(obj.cuts),
    }


_DECODERS: list = []


def register_decoder(keys: frozenset, build) -> None:
    """Let :func:`from_json` build objects whose JSON carries exactly ``keys``."""
    _DECODERS.append((keys, build))


def _iop_from_json(d: dict) -> InternallyOrderedPartition:
    blocks = [tuple(b) for b in d["blocks"]]
    idx = d["distinguished"]
    if idx is not None and not 0 <= idx < len(blocks):
        raise ValidationError("distinguished index out of range", f"{idx}")
    dist = None if idx is None else blocks[idx]
    return InternallyOrderedPartition(d["m"], blocks, dist)


register_decoder(frozenset({"n", "blocks"}), lambda d: NestedSet(d["n"], d["blocks"]))
register_decoder(frozenset({"m", "blocks"}), lambda d: Partition2(d["m"], d["blocks"]))
register_decoder(
    frozenset({"n", "perm", "intervals"}),
    lambda d: ParenthesizedList(d["n"], d["perm"], d["intervals"]),
)
register_decoder(frozenset({"m", "blocks", "distinguished"}), _iop_from_json)
register_decoder(
    frozenset({"n", "k", "I", "sigma", "cuts"}),
    lambda d: Triple(d["n"], d["k"], d["I"], d["sigma"], d["cuts"]),
)


def from_json(d: dict) -> Any:
    """Rebuild a domain object from its canonical dict; the key set picks the type."""
    if not isinstance(d, dict):
        raise ValidationError("malformed JSON", "expected an object")
    keys = frozenset(d)
    for expected, build in _DECODERS:
        if keys == expected:
            try:
                return build(d)
            except (TypeError, KeyError) as exc:
                raise ValidationError("malformed JSON", str(exc)) from exc
    raise ValidationError("malformed JSON", f"unrecognised keys {sorted(keys)}")


def dumps(obj: Any) -> str:
    return json.dumps(to_json(obj), separators=(",", ":"))


def loads(text: str) -> Any:
    return from_json(json.loads(text))


def canonical_key(obj: Any) -> tuple:
    """Sort key: the canonical JSON value compared lexicographically, integers numerically."""

    def freeze(v):
        if isinstance(v, list):
            return tuple(freeze(x) for x in v)
        if v is None:
            return -1
        return v

    return tuple(freeze(v) for v in to_json(obj).values())
