"""Slow, filter-based reference generators.

These share no code with ``polydissect.enumeration``; they scan whole power
sets and filter, so they are only usable for small n.
"""

from itertools import combinations, permutations, product


def all_set_partitions(elements):
    elements = list(elements)
    if not elements:
        yield []
        return
    first, rest = elements[0], elements[1:]
    for part in all_set_partitions(rest):
        yield [[first]] + part
        for i in range(len(part)):
            yield part[:i] + [[first] + part[i]] + part[i + 1 :]


def brute_nested_sets(n, k):
    full = frozenset(range(1, n + 1))
    proper = [frozenset(c) for size in range(2, n) for c in combinations(range(1, n + 1), size)]
    found = []
    for family in combinations(proper, k - 1):
        ok = all(not (a & b) or a <= b or b <= a for a, b in combinations(family, 2))
        if ok:
            found.append(frozenset(family) | {full})
    return found


def brute_partitions2(m, k):
    return [
        frozenset(frozenset(b) for b in part)
        for part in all_set_partitions(range(1, m + 1))
        if len(part) == k and all(len(b) >= 2 for b in part)
    ]


def brute_parenthesizations(n, k):
    proper = [(l, r) for l in range(1, n + 1) for r in range(l + 1, n + 1) if (l, r) != (1, n)]

    def ok(a, b):
        sa, sb = set(range(a[0], a[1] + 1)), set(range(b[0], b[1] + 1))
        return not (sa & sb) or sa <= sb or sb <= sa

    return [
        frozenset(family) | {(1, n)}
        for family in combinations(proper, k - 1)
        if all(ok(a, b) for a, b in combinations(family, 2))
    ]


def brute_iop(m, k):
    found = []
    for part in brute_partitions2(m, k):
        blocks = [sorted(b) for b in part]
        for orders in product(*(permutations(b) for b in blocks)):
            found.append(frozenset(orders))
    return found


def brute_triples(n, k):
    m = n + k - 1
    found = []
    for I in permutations(range(1, m + 1), n):
        if list(I) != sorted(I):
            continue
        for sigma in permutations(range(1, n + 1)):
            for cuts in permutations(range(1, n + 1), k - 1):
                if list(cuts) == sorted(cuts) and all(2 <= d <= n - 1 for d in cuts):
                    found.append((I, sigma, cuts))
    return found


def polygon_cells(n, diagonals):
    """Edge counts of the cells of a convex (n+1)-gon cut along ``diagonals``,
    found by splitting the vertex cycle along one chord at a time."""
    chords = {frozenset(d) for d in diagonals}

    def split(cycle):
        size = len(cycle)
        for i in range(size):
            for j in range(i + 2, size):
                if i == 0 and j == size - 1:
                    continue
                if frozenset((cycle[i], cycle[j])) in chords:
                    return split(cycle[i : j + 1]) + split(cycle[j:] + cycle[: i + 1])
        return [size]

    return sorted(split(list(range(n + 1))))
