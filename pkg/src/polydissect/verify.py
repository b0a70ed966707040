"""Exhaustive cross-checks of the counting identities and bijections.

Each ``check_*`` function runs one identity over a range of ``n`` and returns
a :class:`CheckResult`; :func:`run_all` drives them for the ``verify`` command.
"""

from __future__ import annotations

import random
import time
from collections import Counter
from dataclasses import dataclass, field
from itertools import permutations
from typing import Callable, Optional

from .bijections import (
    compose,
    decode_triple,
    encode_triple,
    gamma,
    gamma_inv,
    induced_action,
    phi,
    phi_inv,
)
from .core import InternallyOrderedPartition, NestedSet, Triple
from .counting import (
    assoc_stirling2,
    distinguished_count,
    dissection_types,
    kirkman_cayley,
    type_count,
)
from .dissect import dissection_from_parenthesization, dissection_type
from .enumeration import (
    enum_iop,
    enum_nested_sets,
    enum_parenthesizations,
    enum_partitions2,
    enum_triples,
)


@dataclass
class CheckResult:
    name: str
    scope: str
    passed: bool
    seconds: float = 0.0
    budget: Optional[float] = None
    failures: list = field(default_factory=list)

    @property
    def status(self) -> str:
        return "PASS" if self.passed else "FAIL"

    def line(self) -> str:
        budget = f" (budget {self.budget:.0f}s)" if self.budget else ""
        head = f"{self.status}  {self.name:<34} {self.scope:<16} {self.seconds:7.2f}s{budget}"
        if self.failures:
            head += "  -- " + "; ".join(str(f) for f in self.failures[:3])
        return head


def _timed(name: str, scope: str, budget: Optional[float], body: Callable[[list], None]) -> CheckResult:
    failures: list = []
    start = time.perf_counter()
    body(failures)
    elapsed = time.perf_counter() - start
    if budget is not None and elapsed > budget:
        failures.append(f"took {elapsed:.1f}s, budget {budget:.0f}s")
    return CheckResult(name, scope, not failures, elapsed, budget, failures)


def _cells(max_n: int):
    for n in range(2, max_n + 1):
        for k in range(1, n):
            yield n, k


def check_ward_counts(max_n: int = 7, budget: Optional[float] = 60.0) -> CheckResult:
    def body(failures):
        for n, k in _cells(max_n):
            a = sum(1 for _ in enum_nested_sets(n, k))
            b = sum(1 for _ in enum_partitions2(n + k - 1, k))
            c = assoc_stirling2(n + k - 1, k)
            if not a == b == c:
                failures.append(f"(n={n},k={k}): {a}, {b}, {c}")

    return _timed("nested sets = partitions = T2", f"n<={max_n}", budget, body)


def check_phi_bijection(max_n: int = 7, budget: Optional[float] = 120.0) -> CheckResult:
    def body(failures):
        for n, k in _cells(max_n):
            images = set()
            for s in enum_nested_sets(n, k):
                p = phi(s)
                images.add(p)
                if phi_inv(p, n, k) != s:
                    failures.append(f"phi_inv(phi(s)) != s for {s}")
            for p in enum_partitions2(n + k - 1, k):
                if phi(phi_inv(p, n, k)) != p:
                    failures.append(f"phi(phi_inv(p)) != p for {p}")
                if p not in images:
                    failures.append(f"{p} not hit by phi")

    return _timed("phi bijection", f"n<={max_n}", budget, body)


def check_gamma_bijection(max_n: int = 6, budget: Optional[float] = 180.0) -> CheckResult:
    def body(failures):
        for n, k in _cells(max_n):
            images = set()
            inputs = 0
            for perm in permutations(range(1, n + 1)):
                for p in enum_parenthesizations(n, k, perm):
                    inputs += 1
                    q = gamma(p)
                    images.add(q)
                    if gamma_inv(q, n, k) != p:
                        failures.append(f"gamma_inv(gamma(p)) != p for {p}")
            if len(images) != inputs:
                failures.append(f"(n={n},k={k}): gamma not injective")
            targets = 0
            for q in enum_iop(n + k - 1, k):
                targets += 1
                if q not in images:
                    failures.append(f"{q} not hit by gamma")
                elif gamma(gamma_inv(q, n, k)) != q:
                    failures.append(f"gamma(gamma_inv(q)) != q for {q}")
            if targets != inputs:
                failures.append(f"(n={n},k={k}): {inputs} parenthesizations vs {targets} partitions")

    return _timed("gamma bijection", f"n<={max_n}", budget, body)


EXAMPLE_TRIPLE = Triple(7, 4, (1, 2, 3, 4, 6, 9, 10), (2, 5, 1, 7, 3, 6, 4), (3, 5, 6))
EXAMPLE_PARTS = [(4, 2, 6), (5, 1, 10), (7, 3), (8, 9)]


def check_triples(max_n: int = 6, budget: Optional[float] = None) -> CheckResult:
    def body(failures):
        q = decode_triple(EXAMPLE_TRIPLE)
        if q.parts() != EXAMPLE_PARTS:
            failures.append(f"worked example decodes to {q.parts()}")
        if encode_triple(q) != EXAMPLE_TRIPLE:
            failures.append("worked example does not re-encode")
        for n, k in _cells(max_n):
            count = 0
            for t in enum_triples(n, k):
                count += 1
                if encode_triple(decode_triple(t), n, k) != t:
                    failures.append(f"encode(decode(t)) != t for {t}")
            iops = 0
            for q in enum_iop(n + k - 1, k):
                iops += 1
                for b in q.blocks:
                    marked = InternallyOrderedPartition(q.m, q.blocks, b)
                    if decode_triple(encode_triple(marked, n, k)) != marked:
                        failures.append(f"decode(encode(q)) != q for {marked}")
            expected = distinguished_count(n, k)
            if not count == expected == k * iops:
                failures.append(f"(n={n},k={k}): {count} triples, formula {expected}, k*iop {k * iops}")

    return _timed("triple codec and count", f"n<={max_n}", budget, body)


def _catalan(c: int) -> int:
    cat = [1]
    for i in range(c):
        cat.append(sum(cat[j] * cat[i - j] for j in range(i + 1)))
    return cat[c]


def check_kirkman_cayley(max_n: int = 8, budget: Optional[float] = None) -> CheckResult:
    def body(failures):
        for n, k in _cells(max_n):
            found = sum(1 for _ in enum_parenthesizations(n, k))
            if found != kirkman_cayley(n, k):
                failures.append(f"(n={n},k={k}): enumerated {found}, formula {kirkman_cayley(n, k)}")
        for n in range(2, 13):
            if kirkman_cayley(n, n - 1) != _catalan(n - 1):
                failures.append(f"triangulations of {n + 1}-gon != Catalan({n - 1})")

    return _timed("Kirkman-Cayley", f"n<={max_n}", budget, body)


def check_type_counts(max_n: int = 8, budget: Optional[float] = 120.0) -> CheckResult:
    def body(failures):
        for n, k in _cells(max_n):
            census = Counter(
                dissection_type(p) for p in enum_parenthesizations(n, k)
            )
            total = 0
            for t in dissection_types(n, k):
                c = type_count(n, k, t)
                total += c
                if census.pop(t, 0) != c:
                    failures.append(f"(n={n},k={k}) type {t}: formula {c}")
            if census:
                failures.append(f"(n={n},k={k}): unexpected types {[str(t) for t in census]}")
            if total != kirkman_cayley(n, k):
                failures.append(f"(n={n},k={k}): type counts sum to {total}")

    return _timed("prescribed-type counts", f"n<={max_n}", budget, body)


def check_type_relations(max_n: int = 8, budget: Optional[float] = None) -> CheckResult:
    def body(failures):
        for n, k in _cells(max_n):
            for p in enum_parenthesizations(n, k):
                d = dissection_from_parenthesization(p)
                t = dissection_type(d)
                cells = sum(m for _, m in t.pairs)
                edges = sum(i * m for i, m in t.pairs)
                if cells != k or edges != n + 2 * k - 1:
                    failures.append(f"{p}: type {t} breaks the relations")

    return _timed("type relations", f"n<={max_n}", budget, body)


def _random_perm(rng: random.Random, m: int) -> tuple:
    g = list(range(1, m + 1))
    rng.shuffle(g)
    return tuple(g)


def find_action_witness(n: int = 5, k: int = 4):
    """A nested set and a permutation of the leaves (internal labels fixed)
    where the induced action differs from relabelling the leaves."""
    m = n + k - 1
    for s in enum_nested_sets(n, k):
        for leaves in permutations(range(1, n + 1)):
            g = leaves + tuple(range(n + 1, m + 1))
            relabelled = NestedSet(n, [{g[x - 1] for x in b} for b in s.blocks])
            if induced_action(g, s) != relabelled:
                return g, s, induced_action(g, s), relabelled
    return None


def check_action(max_n: int = 6, pairs: int = 100, seed: int = 0, budget: Optional[float] = None) -> CheckResult:
    def body(failures):
        rng = random.Random(seed)
        for n, k in _cells(max_n):
            m = n + k - 1
            family = list(enum_nested_sets(n, k))
            ident = tuple(range(1, m + 1))
            for _ in range(pairs):
                s = rng.choice(family)
                g, h = _random_perm(rng, m), _random_perm(rng, m)
                if induced_action(ident, s) != s:
                    failures.append(f"identity moves {s}")
                gh = induced_action(compose(g, h), s)
                if gh != induced_action(g, induced_action(h, s)):
                    failures.append(f"(n={n},k={k}): composition law fails for g={g}, h={h}")
                sizes = sorted(len(b) for b in phi(s).blocks)
                if sorted(len(b) for b in phi(gh).blocks) != sizes:
                    failures.append(f"block sizes not preserved for {s}")
        if max_n >= 5 and find_action_witness(5, 4) is None:
            failures.append("no incompatibility witness for n=5, k=4")

    return _timed("induced action laws", f"n<={max_n}", budget, body)


def check_hexagon_example(budget: Optional[float] = None) -> CheckResult:
    from .cli import parse_parens
    from .dissect import render_svg

    def body(failures):
        p = parse_parens("(1,((2,3),(4,5)))")
        d = dissection_from_parenthesization(p)
        svg = render_svg(d)
        if d.n + 1 != 6 or svg.count('class="diagonal"') != 3:
            failures.append(f"expected hexagon with 3 diagonals, got {d}")
        if str(dissection_type(p)) != "3^4":
            failures.append(f"type {dissection_type(p)} != 3^4")

    return _timed("hexagon golden example", "n=5", budget, body)


# largest n each check is run at; verify --max-n never exceeds these
CHECKS = [
    (check_ward_counts, 7),
    (check_phi_bijection, 7),
    (check_gamma_bijection, 6),
    (check_triples, 6),
    (check_kirkman_cayley, 8),
    (check_type_counts, 8),
    (check_type_relations, 8),
    (check_action, 6),
]


def run_all(max_n: int = 6, report: Optional[Callable[[CheckResult], None]] = None) -> list[CheckResult]:
    results = []
    for check, cap in CHECKS:
        r = check(min(max_n, cap))
        results.append(r)
        if report:
            report(r)
    r = check_hexagon_example()
    results.append(r)
    if report:
        report(r)
    return results
