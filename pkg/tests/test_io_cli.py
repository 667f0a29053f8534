import json

import pytest
from hypothesis import given
from hypothesis import strategies as st

from orthodim.algebra import GF3, Subspace
from orthodim.cli import run_command
from orthodim.graph import Family, complete_graph, recognize_family, remove_vertices
from orthodim.io import Instance, InstanceFormatError, gen_random, parse_instance, serialize_instance

K3 = "p edge 3 3\ne 1 2\ne 2 3\ne 1 3\n"


def test_parse_examples():
    inst = parse_instance(K3)
    assert inst.graph == complete_graph(3)
    assert parse_instance(K3 + "x 1\nx 2\n").modulator == [0, 1]


@pytest.mark.parametrize(
    "text,line",
    [
        ("p edge 2 1\ne 1 1\n", 2),
        ("p edge 2 2\ne 1 2\ne 2 1\n", 3),
        ("p edge 2 1\ne 1 3\n", 2),
        ("p edge 2 1\nq 1\n", 2),
        ("e 1 2\n", 1),
        ("p edge 2 0\nd 2\nf gf3\nl 1 1 1\n", 4),
    ],
)
def test_parse_errors_carry_line_numbers(text, line):
    with pytest.raises(InstanceFormatError) as exc:
        parse_instance(text)
    assert exc.value.lineno == line


def test_subspace_lines():
    text = "p edge 2 1\nd 2\nf gf3\ne 1 2\nl 1 1 2 2\nl 2 2 1 0 0 1\n"
    inst = parse_instance(text)
    assert inst.subspaces[0] == Subspace.span(GF3, [(1, 1)], 2)
    assert inst.subspaces[1] == Subspace.full(GF3, 2)
    canon = serialize_instance(inst)
    assert "l 1 1 1 1" in canon
    assert serialize_instance(parse_instance(canon)) == canon


def test_canonical_round_trip():
    canon = "c hello\np edge 4 3\nd 3\nf gf2\ne 1 2\ne 1 3\ne 2 4\nx 1\nx 2\n"
    assert serialize_instance(parse_instance(canon)) == canon
    messy = "p edge 4 3\nx 2\ne 4 2\nf gf2\ne 1 3\nd 3\ne 2 1\nx 1\nc hello\n"
    assert serialize_instance(parse_instance(messy)) == canon


@given(
    st.integers(1, 9),
    st.integers(0, 9),
    st.sampled_from(list(Family)),
    st.floats(0, 1),
    st.integers(0, 2**63),
)
def test_gen_random_properties(n, k, family, density, seed):
    k = min(k, n)
    inst = gen_random(n, k, family, density, seed)
    assert len(inst.modulator) == k
    assert recognize_family(remove_vertices(inst.graph, inst.modulator)[0], family)[0]
    text = serialize_instance(inst)
    assert serialize_instance(gen_random(n, k, family, density, seed)) == text
    assert serialize_instance(parse_instance(text)) == text


def test_gen_examples():
    a = gen_random(8, 3, Family.EMPTY, 0.5, 7)
    xs = set(a.modulator)
    assert all(u in xs or v in xs for u, v in a.graph.edges())
    assert serialize_instance(a) == serialize_instance(gen_random(8, 3, Family.EMPTY, 0.5, 7))
    b = gen_random(8, 2, Family.PATH, 0.5, 7)
    assert recognize_family(remove_vertices(b.graph, b.modulator)[0], Family.PATH)[0]
    with pytest.raises(ValueError):
        gen_random(3, 4, Family.EMPTY, 0.5, 0)


# ---- CLI


@pytest.fixture
def k3_file(tmp_path):
    p = tmp_path / "k3.gr"
    p.write_text(K3)
    return p


def test_cli_decide(k3_file, capsys):
    assert run_command(["decide", "--field", "gf2", "--d", "3", str(k3_file)]) == 0
    out = capsys.readouterr().out.splitlines()
    assert out[0] == "YES"
    assert json.loads(out[1])["d"] == 3
    assert run_command(["decide", "--field", "gf2", "--d", "2", str(k3_file)]) == 0
    assert capsys.readouterr().out.strip() == "NO"


def test_cli_decide_witness_file(k3_file, tmp_path, capsys):
    w = tmp_path / "w.json"
    assert run_command(["decide", "--field", "gf3", "--d", "3", "--witness", str(w), str(k3_file)]) == 0
    assert capsys.readouterr().out.strip() == "YES"
    assert len(json.loads(w.read_text())["vectors"]) == 3


def test_cli_gen_and_kernelize(tmp_path, capsys):
    inst = tmp_path / "in.gr"
    assert run_command(["gen", "--n", "10", "--k", "4", "--family", "empty", "--seed", "3", "-o", str(inst)]) == 0
    assert run_command(["kernelize", "--alg", "real", "--d", "3", "--k-check", str(inst)]) == 0
    assert json.loads(capsys.readouterr().out)["within_bound"] is True
    out = tmp_path / "ker.gr"
    assert run_command(["kernelize", "--alg", "general", "--d", "3", "-o", str(out), str(inst)]) == 0
    assert parse_instance(out.read_text()).modulator == [0, 1, 2, 3]


def test_cli_gen_deterministic(capsys):
    run_command(["gen", "--n", "7", "--k", "2", "--family", "split", "--seed", "5"])
    a = capsys.readouterr().out
    run_command(["gen", "--n", "7", "--k", "2", "--family", "split", "--seed", "5"])
    assert capsys.readouterr().out == a


def test_cli_reduce(k3_file, tmp_path, capsys):
    k3_file.write_text(K3 + "x 1\nx 2\n")
    out = tmp_path / "red.gr"
    assert run_command(["reduce", "--d", "3", "-o", str(out), str(k3_file)]) == 0
    report = json.loads(capsys.readouterr().out)
    assert len(report["modulator"]) == 29
    assert parse_instance(out.read_text()).graph.n == 3 + 3 + 3 * 2 * 4


def test_cli_certify(tmp_path, capsys):
    p = tmp_path / "c.gr"
    p.write_text("p edge 3 3\nd 2\nf gf2\ne 1 2\ne 1 3\ne 2 3\nl 1 2 1 0 0 1\nl 2 2 1 0 0 1\nl 3 2 1 0 0 1\n")
    assert run_command(["certify", "--kind", "split", str(p)]) == 0
    data = json.loads(capsys.readouterr().out)
    assert data["vertices"] == [0, 1, 2] and data["verified"] is True


def test_cli_verify(capsys):
    assert run_command(["verify", "--suite", "kernel-general", "--trials", "20", "--seed", "1"]) == 0
    assert capsys.readouterr().out.strip() == "20/20 equivalent"


def test_cli_exit_codes(k3_file, tmp_path, capsys):
    assert run_command([]) == 2
    assert run_command(["bogus"]) == 2
    assert run_command(["verify", "--suite", "nope"]) == 2
    assert run_command(["decide", "--d", "3", str(k3_file)]) == 2  # no field
    bad = tmp_path / "bad.gr"
    bad.write_text("p edge 2 1\ne 1 1\n")
    assert run_command(["decide", "--field", "gf2", "--d", "2", str(bad)]) == 2
    assert "line 2" in capsys.readouterr().err
    big = tmp_path / "big.gr"
    big.write_text(serialize_instance(Instance(complete_graph(8))))
    assert run_command(["decide", "--field", "gf2", "--d", "7", "--budget", "5", str(big)]) == 3
    assert run_command(["decide", "--field", "gf5", "--d", "12", str(k3_file)]) == 3
