import pytest

from polydissect.core import ValidationError, canonical_key
from polydissect.counting import assoc_stirling2, distinguished_count
from polydissect.enumeration import (
    enum_iop,
    enum_nested_sets,
    enum_parenthesizations,
    enum_partitions2,
    enum_triples,
)
from oracles import (
    brute_iop,
    brute_nested_sets,
    brute_parenthesizations,
    brute_partitions2,
    brute_triples,
)


def test_nested_set_examples():
    found = list(enum_nested_sets(3, 2))
    assert [s.sorted_blocks() for s in found] == [
        [[1, 2], [1, 2, 3]],
        [[1, 2, 3], [2, 3]],
        [[1, 3], [1, 2, 3]],
    ]
    assert len(list(enum_nested_sets(4, 2))) == 10
    assert len(list(enum_nested_sets(6, 1))) == 1


def test_partition_examples():
    assert [p.sorted_blocks() for p in enum_partitions2(4, 2)] == [
        [[1, 2], [3, 4]],
        [[1, 3], [2, 4]],
        [[1, 4], [2, 3]],
    ]
    assert len(list(enum_partitions2(5, 2))) == 10
    assert len(list(enum_partitions2(7, 1))) == 1


def test_parenthesization_examples():
    assert len(list(enum_parenthesizations(5, 4))) == 14
    assert len(list(enum_parenthesizations(5, 2))) == 9
    assert len(list(enum_parenthesizations(4, 1, (4, 2, 3, 1)))) == 1


def test_iop_examples():
    assert [q.ordered_blocks() for q in enum_iop(2, 1)] == [[(1, 2)], [(2, 1)]]
    assert len(list(enum_iop(4, 2))) == 12
    assert sum(1 for _ in enum_iop(8, 4)) == 1680


def test_triple_examples():
    assert len(list(enum_triples(2, 1))) == 2
    assert sum(1 for _ in enum_triples(5, 4)) == 6720
    # 3! * C(1,1) * C(4,1)
    assert len(list(enum_triples(3, 2))) == 24


@pytest.mark.parametrize(
    "call",
    [
        lambda: enum_nested_sets(1, 1),
        lambda: enum_nested_sets(4, 4),
        lambda: enum_partitions2(5, 3),
        lambda: enum_iop(3, 2),
        lambda: enum_parenthesizations(4, 0),
        lambda: enum_parenthesizations(3, 2, (1, 1, 2)),
        lambda: enum_triples(3, 3),
    ],
)
def test_invalid_params(call):
    with pytest.raises(ValidationError):
        list(call())


def _cells(max_n):
    return [(n, k) for n in range(2, max_n + 1) for k in range(1, n)]


@pytest.mark.parametrize("n, k", _cells(5))
def test_nested_sets_match_brute_force(n, k):
    found = [s.blocks for s in enum_nested_sets(n, k)]
    assert len(found) == len(set(found))
    assert set(found) == set(brute_nested_sets(n, k))


@pytest.mark.parametrize("m", range(2, 9))
def test_partitions_match_brute_force(m):
    for k in range(1, m // 2 + 1):
        found = [p.blocks for p in enum_partitions2(m, k)]
        assert len(found) == len(set(found))
        assert set(found) == set(brute_partitions2(m, k))


@pytest.mark.parametrize("n, k", _cells(6))
def test_parenthesizations_match_brute_force(n, k):
    found = [p.intervals for p in enum_parenthesizations(n, k)]
    assert len(found) == len(set(found))
    assert set(found) == set(brute_parenthesizations(n, k))


@pytest.mark.parametrize("n, k", _cells(4) + [(5, 2), (5, 3)])
def test_iop_match_brute_force(n, k):
    found = [q.blocks for q in enum_iop(n + k - 1, k)]
    assert len(found) == len(set(found))
    assert set(found) == set(brute_iop(n + k - 1, k))


@pytest.mark.parametrize("n, k", _cells(4))
def test_triples_match_brute_force(n, k):
    found = [(t.I, t.sigma, t.cuts) for t in enum_triples(n, k)]
    assert len(found) == len(set(found))
    assert set(found) == set(brute_triples(n, k))


@pytest.mark.parametrize(
    "stream",
    [
        lambda: enum_nested_sets(6, 3),
        lambda: enum_nested_sets(5, 4),
        lambda: enum_partitions2(8, 3),
        lambda: enum_parenthesizations(7, 4, (3, 1, 2, 7, 5, 4, 6)),
        lambda: enum_iop(7, 3),
        lambda: enum_triples(4, 3),
    ],
)
def test_streams_sorted_and_duplicate_free(stream):
    keys = [canonical_key(x) for x in stream()]
    assert all(a < b for a, b in zip(keys, keys[1:]))


@pytest.mark.parametrize("n", range(2, 8))
def test_nested_sets_and_partitions_equinumerous(n):
    for k in range(1, n):
        a = sum(1 for _ in enum_nested_sets(n, k))
        assert a == sum(1 for _ in enum_partitions2(n + k - 1, k)) == assoc_stirling2(n + k - 1, k)


@pytest.mark.parametrize("n", range(2, 7))
def test_ordered_counts(n):
    from math import factorial

    for k in range(1, n):
        iop = sum(1 for _ in enum_iop(n + k - 1, k))
        assert iop * k == sum(1 for _ in enum_triples(n, k)) == distinguished_count(n, k)
        assert factorial(n) * sum(1 for _ in enum_parenthesizations(n, k)) == iop


def test_streams_are_lazy_and_restartable():
    gen = enum_nested_sets(7, 6)
    first = next(gen)
    assert first == next(enum_nested_sets(7, 6))
    gen.close()
