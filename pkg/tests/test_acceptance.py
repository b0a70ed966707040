"""Acceptance criteria, one test each, at the stated ranges and time budgets.

Run ``pytest tests/test_acceptance.py`` (or this file directly); a PASS/FAIL
line per criterion is printed at the end of the session.
"""

import re

import pytest

from polydissect.cli import main, parse_parens
from polydissect.counting import kirkman_cayley
from polydissect.dissect import dissection_type
from polydissect.enumeration import enum_nested_sets, enum_parenthesizations, enum_partitions2
from polydissect import verify

RESULTS = []


def record(number, result):
    RESULTS.append((number, result))
    assert result.passed, result.line()


def test_1_nested_sets_equal_partitions():
    spots = {(4, 2): 10, (4, 3): 15, (3, 2): 3}
    for (n, k), want in spots.items():
        assert sum(1 for _ in enum_nested_sets(n, k)) == want
        assert sum(1 for _ in enum_partitions2(n + k - 1, k)) == want
    record(1, verify.check_ward_counts(7, budget=60))


def test_2_phi_bijection():
    record(2, verify.check_phi_bijection(7, budget=120))


def test_3_gamma_bijection():
    record(3, verify.check_gamma_bijection(6, budget=180))


def test_4_triple_theorem():
    record(4, verify.check_triples(6))


def test_5_kirkman_cayley():
    for k, want in [(2, 9), (3, 21), (4, 14)]:
        assert sum(1 for _ in enum_parenthesizations(5, k)) == want == kirkman_cayley(5, k)
    record(5, verify.check_kirkman_cayley(8))


def test_6_prescribed_types():
    record(6, verify.check_type_counts(8, budget=120))


def test_7_type_relations():
    record(7, verify.check_type_relations(8))


def test_8_induced_action():
    record(8, verify.check_action(6, pairs=100, seed=20240))


def test_9_hexagon_example(capsys):
    code = main(["render", "--parens", "(1,((2,3),(4,5)))"])
    svg = capsys.readouterr().out
    assert code == 0
    points = re.search(r'<polygon[^>]*points="([^"]*)"', svg).group(1).split()
    assert len(points) == 6
    assert svg.count('<line class="diagonal"') == 3
    assert str(dissection_type(parse_parens("(1,((2,3),(4,5)))"))) == "3^4"
    record(9, verify.check_hexagon_example())


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-q"]))
