import functools
import json
import random

import pytest

from rotsign import cli
from rotsign.matrix_core import NonnegMatrix, SignDiagonal, conjugate_diag, format_matrix, parse_matrix
from rotsign.oracle import exhaustive_switching, random_irreducible
from rotsign.orientations import Orientation, format_orientation, parse_orientation
from rotsign.spectrum import CharPoly, rotation_check
from rotsign.verify import random_family, run_verification


@pytest.fixture
def write(tmp_path):
    def _write(name, content):
        path = tmp_path / name
        path.write_text(content if isinstance(content, str) else format_matrix(content))
        return str(path)

    return _write


def run(capsys, *argv):
    code = cli.main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def test_analyze_two_cycle(write, capsys):
    code, out, _ = run(capsys, "analyze", write("a.txt", [[0, 1], [1, 0]]))
    assert code == 0
    assert "irreducible, p=2, ks={0,1,2,3}" in out
    assert "V0={0} V1={1}" in out and "block sizes: (1, 1)" in out
    assert "e^(i*pi*3/2)" in out and "k in {0,2}" in out and "k in {1,3}" in out


def test_analyze_loop_matrix(write, capsys):
    code, out, _ = run(capsys, "analyze", write("a.txt", [[1, 1], [1, 0]]))
    assert code == 0 and "p=1" in out and "alpha in {1,-1}" in out


def test_analyze_json(write, capsys):
    code, out, _ = run(capsys, "analyze", "--json", write("a.txt", '{"n": 3, "rows": [[0,1,0],[0,0,1],[1,0,0]]}'))
    data = json.loads(out)
    assert code == 0 and data["p"] == 3 and data["ks"] == list(range(6)) and data["block_sizes"] == [1, 1, 1]


def test_analyze_reducible_exit_3(write, capsys):
    code, out, _ = run(capsys, "analyze", write("a.txt", [[1, 1], [0, 1]]))
    assert code == 3 and "[[1], [0]]" in out


def test_analyze_no_closed_path_exit_3(write, capsys):
    code, out, _ = run(capsys, "analyze", write("a.txt", "1\n0\n"))
    assert code == 3 and "undefined" in out


def test_parse_error_exit_2(write, capsys):
    code, _, err = run(capsys, "analyze", write("a.txt", "2\n0 1\n"))
    assert code == 2 and "error" in err
    code, _, _ = run(capsys, "analyze", "/nonexistent/file")
    assert code == 2


def test_cap_exit_5(write, capsys):
    code, _, _ = run(capsys, "analyze", "--max-n", "1", write("a.txt", [[0, 1], [1, 0]]))
    assert code == 5


def test_construct_examples(write, capsys):
    code, out, _ = run(capsys, "construct", write("a.txt", [[0, 1], [1, 0]]), "--k", "1")
    assert code == 0 and parse_matrix(out, signed=True) == ((0, 1), (-1, 0))
    c3 = [[0, 1, 0], [0, 0, 1], [1, 0, 0]]
    code, out, _ = run(capsys, "construct", write("c.txt", c3), "--k", "0")
    assert parse_matrix(out) == tuple(map(tuple, c3))
    code, _, _ = run(capsys, "construct", write("c.txt", c3), "--k", "6")
    assert code == 2


def test_construct_then_check_round_trip(write, capsys):
    a = random_irreducible(6, 2, 3)
    pa = write("a.txt", a.rows)
    for k in range(4):
        _, out, _ = run(capsys, "construct", pa, "--k", str(k))
        code, text, _ = run(capsys, "check", pa, write("b.txt", out), "--k", str(k))
        assert code == 0 and "yes" in text


def test_check_non_member_exit_1(write, capsys):
    pa = write("a.txt", [[0, 1], [1, 0]])
    code, out, _ = run(capsys, "check", pa, pa, "--k", "1")
    assert code == 1 and "no" in out


def test_check_recovers_random_delta(write, capsys):
    a = random_irreducible(5, 1, 8)
    pa = write("a.txt", a.rows)
    _, out, _ = run(capsys, "construct", pa, "--k", "1")
    witness = parse_matrix(out, signed=True)
    d0 = SignDiagonal((1, -1, -1, 1, -1))
    flipped = conjugate_diag(witness, d0)
    code, text, _ = run(capsys, "check", "--json", pa, write("b.txt", flipped), "--k", "1")
    data = json.loads(text)
    assert code == 0 and tuple(data["delta"]) in (d0.diag, (-d0).diag)


def test_check_base_mismatch_exit_4(write, capsys):
    code, _, _ = run(capsys, "check", write("a.txt", [[0, 1], [1, 0]]), write("b.txt", "2\n0 2\n1 0\n"), "--k", "0")
    assert code == 4


def test_similar(write, capsys):
    b1 = write("b1.txt", "2\n0 1\n-1 0\n")
    code, out, _ = run(capsys, "similar", b1, write("b2.txt", "2\n0 -1\n1 0\n"))
    assert code == 0 and "delta: 1 -1" in out
    code, out, _ = run(capsys, "similar", b1, b1)
    assert code == 0 and "delta: 1 1" in out
    code, _, _ = run(capsys, "similar", b1, write("b3.txt", "2\n0 1\n1 0\n"))
    assert code == 1
    code, _, _ = run(capsys, "similar", b1, write("b4.txt", "2\n0 3\n1 0\n"))
    assert code == 4


def test_similar_random_round_trip(write, capsys):
    rng = random.Random(1)
    a = random_irreducible(7, 2, 1)
    b = [[rng.choice((1, -1)) * x for x in r] for r in a.rows]
    d0 = SignDiagonal(tuple(rng.choice((1, -1)) for _ in range(7)))
    code, out, _ = run(capsys, "similar", "--json", write("b1.txt", b), write("b2.txt", conjugate_diag(b, d0)))
    assert code == 0 and tuple(json.loads(out)["delta"]) in (d0.diag, (-d0).diag)


def test_orient_commands(write, capsys):
    triangle = write("t.txt", "3 3\n0 1\n1 2\n0 2\n")
    code, out, _ = run(capsys, "orient", "bipartite", triangle)
    assert code == 1
    p3 = write("p3.txt", "3 2\n0 1\n1 2\n")
    code, out, _ = run(capsys, "orient", "bipartite", p3)
    assert code == 0 and "I={0,2} J={1}" in out
    code, out, _ = run(capsys, "orient", "canonical", p3)
    assert code == 0 and parse_orientation(out).arcs == {(0, 1), (2, 1)}
    code, _, _ = run(capsys, "orient", "canonical", write("d.txt", "4 2\n0 1\n2 3\n"))
    assert code == 3


def test_orient_switch_and_equivalent(write, capsys):
    c4 = write("c4.txt", "4 4\n0 1\n1 2\n2 3\n0 3\n")
    _, canon, _ = run(capsys, "orient", "canonical", c4)
    o1 = write("o1.txt", canon)
    _, switched, _ = run(capsys, "orient", "switch", o1, "--set", "1,2")
    o2 = write("o2.txt", switched)
    code, out, _ = run(capsys, "orient", "equivalent", o1, o2)
    assert code == 0 and "W={1,2}" in out
    clockwise = write("o3.txt", "4 4\n0 1\n1 2\n2 3\n3 0\n")
    code, out, _ = run(capsys, "orient", "equivalent", "--json", o1, clockwise)
    expected = exhaustive_switching(parse_orientation(canon), parse_orientation("4 4\n0 1\n1 2\n2 3\n3 0\n"))
    assert code == 0 and set(json.loads(out)["W"]) == expected
    one_flip = write("o4.txt", "4 4\n1 0\n2 1\n2 3\n0 3\n")
    code, _, _ = run(capsys, "orient", "equivalent", o1, one_flip)
    assert code == 1
    code, _, _ = run(capsys, "orient", "equivalent", o1, write("p.txt", "3 2\n0 1\n1 2\n"))
    assert code == 4


def test_orient_arity(write):
    with pytest.raises(SystemExit):
        cli.main(["orient", "equivalent", write("x.txt", "2 1\n0 1\n")])


def test_verify_random_passes_and_is_deterministic(capsys):
    code, out, _ = run(capsys, "verify", "--n", "3", "--trials", "20", "--seed", "1")
    assert code == 0 and "FAIL" not in out and out.count("PASS") == 4
    _, again, _ = run(capsys, "verify", "--n", "3", "--trials", "20", "--seed", "1")
    assert again == out


def test_verify_exhaustive_order_four(capsys):
    code, out, _ = run(capsys, "verify", "--n", "4", "--exhaustive", "--json")
    data = json.loads(out)
    assert code == 0 and data["passed"] and data["matrices"] == 25696


def test_verify_enum_cap_exit_5(capsys):
    code, _, _ = run(capsys, "verify", "--n", "3", "--exhaustive", "--enum-cap", "1")
    assert code == 5


def mutant_check(pa: CharPoly, pb: CharPoly, alpha):
    # drops the sign: accepts c_j(B) = -c_j(A) as well
    if pa.n != pb.n:
        return False
    return all(abs(x) == abs(y) for x, y in zip(pa.coeffs, pb.coeffs)) and rotation_check(pa, pa, alpha)


def test_verify_catches_mutated_rotation_check():
    report = run_verification(random_family(3, 20, 1), check=mutant_check)
    assert not report.passed
    failed = [r for r in report.results if not r.passed]
    assert failed[0].name.startswith("theorem") and "A=" in failed[0].counterexample


def test_verify_cli_reports_mutation(monkeypatch, capsys):
    monkeypatch.setattr(cli, "run_verification", functools.partial(run_verification, check=mutant_check))
    code, out, _ = run(capsys, "verify", "--n", "3", "--trials", "20", "--seed", "1")
    assert code == 1 and "FAIL theorem" in out and "counterexample" in out
