import json

import pytest

from leibnizalg import cli, corpus
from leibnizalg.fileformat import dumps_algebra


@pytest.fixture
def ex1_file(tmp_path):
    path = tmp_path / "example1.json"
    path.write_text(dumps_algebra(corpus.example1().algebra))
    return str(path)


@pytest.fixture
def broken_file(tmp_path):
    # [e1,e1] = e2, [e1,e2] = e1 fails the identity at (e1,e1,e1)
    path = tmp_path / "broken.json"
    path.write_text(json.dumps({
        "field": "Q", "dim": 2, "basis": ["e1", "e2"],
        "table": [[0, 0, [1, 1, 1]], [0, 1, [0, 1, 1]]],
    }))
    return str(path)


def run_cli(capsys, *args):
    code = cli.run(list(args))
    out = capsys.readouterr().out
    return code, out


def test_validate_passes(capsys, ex1_file):
    code, out = run_cli(capsys, "validate", ex1_file)
    assert code == 0
    assert "passed: True" in out


def test_validate_broken_exits_1_and_names_triple(capsys, broken_file):
    code, out = run_cli(capsys, "validate", broken_file)
    assert code == 1
    assert "e1" in out


def test_verify_example1_reproduces_counterexample(capsys, ex1_file):
    code, out = run_cli(capsys, "--format", "json", "verify", ex1_file)
    assert code == 0
    rep = json.loads(out)
    assert rep["theorem2"]["formula_equal"] is True
    assert rep["theorem2"]["kernel_quotient_equal"] is False
    assert rep["verdict"] == "pass"


def test_nilradical_abelian_full_space(capsys):
    code, out = run_cli(capsys, "--format", "json", "nilradical", "abelian-3")
    assert code == 0
    rep = json.loads(out)
    # rational entries serialize as exact [num, den] pairs
    one, zero = [1, 1], [0, 1]
    assert rep["nilradical"]["basis"] == [[one, zero, zero],
                                          [zero, one, zero],
                                          [zero, zero, one]]


def test_corpus_name_accepted_as_source(capsys):
    code, out = run_cli(capsys, "kernel", "example1")
    assert code == 0
    assert "span{(0, 1)}" in out


def test_unknown_source_is_usage_error(capsys):
    assert cli.run(["info", "no-such-thing"]) == 2


def test_unknown_flag_rejected(capsys):
    assert cli.run(["validate", "example1", "--bogus"]) == 2


def test_unsupported_exits_3(capsys):
    # Frattini ideal of a non-nilpotent algebra over Q
    assert cli.run(["frattini", "example1"]) == 3


def test_info_and_series(capsys):
    code, out = run_cli(capsys, "info", "example1")
    assert code == 0 and "is_lie: False" in out
    code, out = run_cli(capsys, "series", "example1")
    assert code == 0


def test_quotient_default_is_kernel(capsys):
    code, out = run_cli(capsys, "--format", "json", "quotient", "example1")
    assert code == 0
    rep = json.loads(out)
    assert rep["quotient_dim"] == 1


def test_find_b_example1(capsys):
    code, out = run_cli(capsys, "--format", "json", "find-b", "example1")
    assert code == 0
    rep = json.loads(out)
    assert rep["found"] is True
    assert rep["B"]["basis"] == [[[1, 1], [-1, 1]]]


def test_oracle_scan(capsys, tmp_path):
    from leibnizalg.oracle import reduce_mod_p

    path = tmp_path / "ex1_f3.json"
    path.write_text(dumps_algebra(reduce_mod_p(corpus.example1().algebra, 3)))
    code, out = run_cli(capsys, "--format", "json", "oracle-scan", str(path))
    assert code == 0
    rep = json.loads(out)
    assert rep["subspaces"] == 6  # 0, four lines, and the plane
    assert rep["nilradical"] == [[0, 1]]


def test_corpus_list_and_emit(capsys, tmp_path):
    code, out = run_cli(capsys, "--format", "json", "corpus")
    assert code == 0
    assert "example1" in json.loads(out)["builders"]
    target = tmp_path / "emitted.json"
    code, _ = run_cli(capsys, "corpus", "example1", "-o", str(target))
    assert code == 0
    assert json.loads(target.read_text())["dim"] == 2


def test_json_and_text_verdicts_identical(capsys, ex1_file):
    code_j, out_j = run_cli(capsys, "--format", "json", "verify", ex1_file)
    code_t, out_t = run_cli(capsys, "verify", ex1_file)
    assert code_j == code_t == 0
    rep = json.loads(out_j)
    assert f"verdict: {rep['verdict']}" in out_t
    assert f"formula_equal: {rep['theorem2']['formula_equal']}" in out_t
    assert f"kernel_quotient_equal: {rep['theorem2']['kernel_quotient_equal']}" in out_t
    # subspace bases agree between formats
    assert "span{(0, 1)}" in out_t  # the kernel, as exact fractions
    assert rep["theorem2"]["details"]["kernel"]["basis"] == [[[0, 1], [1, 1]]]
