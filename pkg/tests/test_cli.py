import json

import pytest
from click.testing import CliRunner

from suffixfree.automata import Dfa
from suffixfree.cli import main
from suffixfree.langops import equivalent, star
from suffixfree.witnesses import d5, d6


@pytest.fixture
def runner():
    return CliRunner()


def invoke(runner, *args, **kwargs):
    return runner.invoke(main, list(args), **kwargs)


# ---------------------------------------------------------------------------
# witness

def test_witness_d5_json(runner):
    result = invoke(runner, "witness", "d5", "--n", "6")
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert Dfa.from_dict(doc) == d5(6)


def test_witness_d6_dialect_text(runner):
    result = invoke(runner, "witness", "d6", "--n", "5",
                    "--dialect", "a,-,c,-,e", "--format", "text")
    assert result.exit_code == 0
    assert "alphabet: a c e" in result.output


def test_witness_dot_output(runner):
    result = invoke(runner, "witness", "d6", "--n", "4", "--dot")
    assert result.exit_code == 0
    assert result.output.startswith("digraph")


def test_witness_product_binary(runner):
    result = invoke(runner, "witness", "product-binary", "--m", "6", "--n", "7")
    assert result.exit_code == 0
    left, right = (Dfa.from_dict(doc) for doc in json.loads(result.output))
    assert left.state_count == 6 and right.state_count == 7


def test_witness_out_file(runner, tmp_path):
    path = tmp_path / "d5.json"
    result = invoke(runner, "witness", "d5", "--n", "6", "--out", str(path))
    assert result.exit_code == 0
    assert Dfa.from_dict(json.loads(path.read_text())) == d5(6)


# ---------------------------------------------------------------------------
# op

def write_dfa(tmp_path, name, d):
    path = tmp_path / name
    path.write_text(json.dumps(d.to_dict()))
    return str(path)


def test_op_star(runner, tmp_path):
    src = write_dfa(tmp_path, "in.json", d5(6, "a,b,-"))
    result = invoke(runner, "op", "star", src)
    assert result.exit_code == 0
    out = Dfa.from_dict(json.loads(result.output))
    assert out.state_count == 17
    assert equivalent(out, star(d5(6, "a,b,-")))


def test_op_union(runner, tmp_path):
    a = write_dfa(tmp_path, "a.json", d5(6, "a,b,-"))
    b = write_dfa(tmp_path, "b.json", d5(6, "-,b,a"))
    result = invoke(runner, "op", "union", a, b)
    assert result.exit_code == 0
    assert json.loads(result.output)["states"] == 26


def test_op_wrong_arity(runner, tmp_path):
    src = write_dfa(tmp_path, "in.json", d6(4))
    result = invoke(runner, "op", "concat", src)
    assert result.exit_code != 0


def test_op_budget_states(runner, tmp_path):
    src = write_dfa(tmp_path, "in.json", d5(8, "a,b,-"))
    result = invoke(runner, "op", "star", src, "--budget-states", "10")
    assert result.exit_code != 0


# ---------------------------------------------------------------------------
# semigroup

def test_semigroup_generate(runner, tmp_path):
    src = write_dfa(tmp_path, "in.json", d6(5))
    result = invoke(runner, "semigroup", "generate", src, "--format", "json")
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc == {"degree": 5, "cardinality": 67}


def test_semigroup_generate_elements(runner, tmp_path):
    src = write_dfa(tmp_path, "in.json", d6(4))
    result = invoke(runner, "semigroup", "generate", src,
                    "--format", "json", "--elements")
    doc = json.loads(result.output)
    assert doc["cardinality"] == 11
    assert len(doc["elements"]) == 11
    assert doc["elements"] == sorted(doc["elements"])


def test_semigroup_classify(runner, tmp_path):
    src = write_dfa(tmp_path, "in.json", d6(5))
    result = invoke(runner, "semigroup", "classify", src, "--format", "json")
    doc = json.loads(result.output)
    assert doc["suffix_free"] is True
    assert doc["in_bsf"] is True and doc["in_wsf"] is True
    assert doc["in_vsf"] is False


def test_semigroup_collisions(runner, tmp_path):
    src = write_dfa(tmp_path, "in.json", d6(5))
    result = invoke(runner, "semigroup", "collisions", src, "--format", "json")
    doc = json.loads(result.output)
    assert doc["colliding"] == []
    assert doc["focused"] == [[1, 2], [1, 3], [2, 3]]


# ---------------------------------------------------------------------------
# atoms

def test_atoms_list(runner, tmp_path):
    src = write_dfa(tmp_path, "in.json", d6(4))
    result = invoke(runner, "atoms", "list", src, "--format", "json")
    bases = json.loads(result.output)
    assert len(bases) == 5
    assert [] in bases and [0] in bases


def test_atoms_complexity(runner, tmp_path):
    src = write_dfa(tmp_path, "in.json", d6(5))
    result = invoke(runner, "atoms", "complexity", src,
                    "--basis", "1,2", "--format", "json")
    assert json.loads(result.output) == {"basis": [1, 2], "complexity": 16}


def test_atoms_table(runner):
    result = invoke(runner, "atoms", "table", "--n", "5", "--format", "json")
    rows = json.loads(result.output)
    assert all(row["met"] for row in rows)
    assert max(row["complexity"] for row in rows) == 16


# ---------------------------------------------------------------------------
# verify / search and exit codes

def test_verify_star_exit_zero(runner):
    result = invoke(runner, "verify", "star", "--n", "6")
    assert result.exit_code == 0
    assert "met" in result.output


def test_verify_unknown_measure_exit_two(runner):
    # run through the top-level handler to observe the mapped exit code
    import subprocess
    import sys
    proc = subprocess.run(
        [sys.executable, "-m", "suffixfree.cli", "verify", "squaring", "--n", "6"],
        capture_output=True, text=True)
    assert proc.returncode == 2


def test_verify_json_and_text_agree(runner):
    as_json = invoke(runner, "verify", "reversal", "--n", "5",
                     "--format", "json")
    as_text = invoke(runner, "verify", "reversal", "--n", "5")
    doc = json.loads(as_json.output)[0]
    assert doc["computed"] == 9
    assert f"computed={doc['computed']}" in as_text.output


def test_search_command(runner):
    result = invoke(runner, "search", "--n", "4", "--format", "json")
    assert result.exit_code == 0
    doc = json.loads(result.output)
    assert doc["max_cardinality"] == 13
    assert doc["complete"] is True


def test_search_budget_exit_two(runner):
    import subprocess
    import sys
    proc = subprocess.run(
        [sys.executable, "-m", "suffixfree.cli", "search", "--n", "7"],
        capture_output=True, text=True)
    assert proc.returncode == 2
    assert "budget" in proc.stderr.lower()
