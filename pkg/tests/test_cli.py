import json
from itertools import permutations

import pytest

from polydissect.cli import format_parens, main, parse_parens, parse_type
from polydissect.core import ParenthesizedList, ValidationError, dumps, loads
from polydissect.enumeration import enum_parenthesizations
from polydissect.verify import EXAMPLE_TRIPLE


def run(capsys, *argv, stdin=None, monkeypatch=None):
    if stdin is not None:
        import io

        monkeypatch.setattr("sys.stdin", io.StringIO(stdin))
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_count(capsys):
    assert run(capsys, "count", "kirkman-cayley", "--n", "5", "--k", "4")[:2] == (0, "14\n")
    assert run(capsys, "count", "type", "--n", "5", "--k", "2", "--type", "3^1,5^1")[:2] == (0, "6\n")
    assert run(capsys, "count", "distinguished", "--n", "7", "--k", "4")[:2] == (0, "6048000\n")
    assert run(capsys, "count", "ward", "--n", "4", "--k", "3")[:2] == (0, "15\n")


def test_count_errors(capsys):
    code, _, err = run(capsys, "count", "kirkman-cayley", "--n", "5", "--k", "5")
    assert code == 2 and "k must be ≤ n−1" in err
    code, _, err = run(capsys, "count", "type", "--n", "5", "--k", "2", "--type", "3^2")
    assert code == 2 and "sum of i*m must equal n+2k-1" in err
    code, _, err = run(capsys, "count", "type", "--n", "5", "--k", "2", "--type", "3x2")
    assert code == 2 and "malformed type" in err


def test_enum(capsys):
    code, out, _ = run(capsys, "enum", "nested", "--n", "3", "--k", "2")
    lines = out.splitlines()
    assert code == 0 and len(lines) == 3
    assert json.loads(lines[0]) == {"n": 3, "blocks": [[1, 2], [1, 2, 3]]}
    assert len(run(capsys, "enum", "iop", "--m", "4", "--k", "2")[1].splitlines()) == 12
    assert len(run(capsys, "enum", "nested", "--n", "3", "--k", "2", "--limit", "1")[1].splitlines()) == 1
    assert len(run(capsys, "enum", "partition2", "--n", "4", "--k", "3")[1].splitlines()) == 15
    assert len(run(capsys, "enum", "triple", "--n", "3", "--k", "2")[1].splitlines()) == 24
    out = run(capsys, "enum", "parens", "--n", "3", "--k", "2", "--perm", "2,3,1")[1]
    assert [loads(x).perm for x in out.splitlines()] == [(2, 3, 1)] * 2


def test_enum_errors(capsys):
    assert run(capsys, "enum", "nested", "--n", "3", "--k", "3")[0] == 2
    assert run(capsys, "enum", "iop", "--m", "3", "--k", "2")[0] == 2
    assert run(capsys, "enum", "nested", "--k", "2")[0] == 2


def test_map_decode_worked_example(capsys, monkeypatch):
    code, out, _ = run(capsys, "map", "decode-triple", stdin=dumps(EXAMPLE_TRIPLE), monkeypatch=monkeypatch)
    assert code == 0
    q = loads(out)
    assert q.parts() == [(4, 2, 6), (5, 1, 10), (7, 3), (8, 9)]
    code, out, _ = run(capsys, "map", "encode-triple", stdin=out, monkeypatch=monkeypatch)
    assert loads(out) == EXAMPLE_TRIPLE


def test_map_phi_roundtrip(capsys, monkeypatch, tmp_path):
    src = '{"n":5,"blocks":[[1,2,3,4,5],[2,3],[2,3,4]]}'
    path = tmp_path / "s.json"
    path.write_text(src)
    code, out, _ = run(capsys, "map", "phi", "--input", str(path))
    assert code == 0 and json.loads(out) == {"m": 7, "blocks": [[1, 5, 7], [2, 3], [4, 6]]}
    code, back, _ = run(capsys, "map", "phi-inv", "--n", "5", "--k", "3", stdin=out, monkeypatch=monkeypatch)
    assert back.strip() == src


def test_map_gamma_roundtrip(capsys, monkeypatch):
    src = '{"n":4,"perm":[3,1,2,4],"intervals":[[1,4],[2,3]]}'
    code, out, _ = run(capsys, "map", "gamma", stdin=src, monkeypatch=monkeypatch)
    assert json.loads(out) == {"m": 5, "blocks": [[1, 2], [3, 5, 4]], "distinguished": None}
    code, back, _ = run(capsys, "map", "gamma-inv", stdin=out, monkeypatch=monkeypatch)
    assert back.strip() == src


def test_map_errors(capsys, monkeypatch):
    bad = '{"n":4,"blocks":[[1,2,3,4],[1,2],[2,3]]}'
    code, _, err = run(capsys, "map", "phi", stdin=bad, monkeypatch=monkeypatch)
    assert code == 2 and "not nested" in err
    code, _, err = run(capsys, "map", "gamma", stdin=bad, monkeypatch=monkeypatch)
    assert code == 2 and "wrong input type" in err
    code, _, err = run(capsys, "map", "phi", stdin="{not json", monkeypatch=monkeypatch)
    assert code == 2 and "malformed JSON" in err


def test_verify_bounds(capsys):
    code, _, err = run(capsys, "verify", "--max-n", "1")
    assert code == 2 and "n must be ≥ 2" in err
    assert run(capsys, "verify", "--max-n", "9")[0] == 2


def test_verify_small(capsys):
    code, out, _ = run(capsys, "verify", "--max-n", "4")
    assert code == 0
    assert out.count("PASS") == 9 and "FAIL" not in out


def test_render_hexagon(capsys, tmp_path):
    code, out, _ = run(capsys, "render", "--parens", "(1,((2,3),(4,5)))")
    assert code == 0 and out.count('class="diagonal"') == 3
    assert "Dissection of a 6-gon by 3 diagonals" in out
    path = tmp_path / "hex.svg"
    assert run(capsys, "render", "--parens", "(1,((2,3),(4,5)))", "--out", str(path))[0] == 0
    assert path.read_text() == out


def test_render_triangle_and_errors(capsys, monkeypatch):
    code, out, _ = run(capsys, "render", "--parens", "(1,2)")
    assert code == 0 and "<line" not in out
    code, _, err = run(capsys, "render", "--parens", "(1,(2))")
    assert code == 2 and "parenthesis pair with fewer than two entries" in err
    code, _, err = run(capsys, "render", "--parens", "(2,1,3)")
    assert code == 2 and "perm is not the identity" in err
    code, out, _ = run(
        capsys, "render", "--input", "-", stdin='{"n":5,"diagonals":[[1,3],[1,5],[3,5]]}', monkeypatch=monkeypatch
    )
    assert code == 0 and out.count('class="diagonal"') == 3


def test_output_is_deterministic(capsys):
    a = run(capsys, "enum", "iop", "--m", "5", "--k", "2")[1]
    b = run(capsys, "enum", "iop", "--m", "5", "--k", "2")[1]
    assert a == b


@pytest.mark.parametrize(
    "text, message",
    [
        ("(1,(2))", "fewer than two entries"),
        ("((1,2))", "fewer than two entries"),
        ("1,2", "missing outer parentheses"),
        ("(1,2", "expected ')'"),
        ("(1,2)(3)", "trailing input"),
        ("(1,3)", "permutation of 1..n"),
        ("(1,,2)", "unexpected ','"),
        ("(1;2)", "unexpected ';'"),
    ],
)
def test_parse_errors(text, message):
    with pytest.raises(ValidationError, match=message.replace("(", r"\(").replace(")", r"\)")):
        parse_parens(text)


def test_parse_hexagon_example():
    p = parse_parens("(1, ((2,3), (4,5)))")
    assert p == ParenthesizedList(5, range(1, 6), [(1, 5), (2, 5), (2, 3), (4, 5)])
    assert format_parens(p) == "(1,((2,3),(4,5)))"


@pytest.mark.parametrize("n", range(2, 8))
def test_print_parse_roundtrip(n):
    perms = [tuple(range(1, n + 1))] + ([tuple(range(n, 0, -1))] if n > 2 else [])
    if n <= 4:
        perms = list(permutations(range(1, n + 1)))
    for perm in perms:
        for k in range(1, n):
            for p in enum_parenthesizations(n, k, perm):
                text = format_parens(p)
                assert parse_parens(text) == p
                assert format_parens(parse_parens(text)) == text


def test_parse_type():
    assert str(parse_type("3^2, 4^1")) == "3^2,4^1"
    with pytest.raises(ValidationError):
        parse_type("3^")
