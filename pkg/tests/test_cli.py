import json

import pytest

from bichain.cli import main
from bichain.graph import cycle_graph
from bichain.io import load_graph, save_graph


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_generate_then_recognize(tmp_path, capsys):
    z = tmp_path / "z.json"
    assert run(capsys, "generate", "z", "--n", "7", "--k", "6", "-o", str(z))[0] == 0
    rec = load_graph(z)
    assert rec.graph.n == 42 and rec.coords[0] == (1, 1)
    code, out, _ = run(capsys, "--json", "recognize", "bichain", str(z))
    assert code == 0 and json.loads(out)["verdict"] is True


def test_false_verdict_exit_code(tmp_path, capsys):
    c6 = tmp_path / "c6.json"
    save_graph(c6, cycle_graph(6))
    code, out, _ = run(capsys, "--json", "recognize", "bichain", str(c6))
    assert code == 1
    obj = json.loads(out)
    assert obj["forbidden"] == "C6" and sorted(obj["witness"]) == list(range(6))


def test_missing_file_and_bad_usage(capsys):
    code, _, err = run(capsys, "width", "rank", "missing.json")
    assert code == 2 and "missing.json" in err
    assert run(capsys, "frobnicate")[0] == 2
    assert run(capsys, "verify", "no-such-suite")[0] == 2


def test_verify_pivot_lemma(capsys):
    code, out, _ = run(capsys, "--json", "verify", "pivot-lemma", "--max-n", "5")
    report = json.loads(out)
    assert code == 0 and report["suite"] == "pivot-lemma"
    assert set(report["checks"][0]) >= {"name", "pass", "millis"}


def test_width_and_decompose(tmp_path, capsys):
    c6 = tmp_path / "c6.json"
    save_graph(c6, cycle_graph(6))
    code, out, _ = run(capsys, "--json", "width", "clique", str(c6))
    assert code == 0 and json.loads(out)["clique_width"] == 3
    code, out, _ = run(capsys, "--json", "width", "rank", str(c6))
    assert json.loads(out)["rank_width"] == 2
    code, out, _ = run(capsys, "--json", "decompose", str(c6))
    assert json.loads(out)["tree"]["op"] == "x"


def test_letters_round_trip(tmp_path, capsys):
    code, out, _ = run(capsys, "letters", "encode-z", "--n", "3", "--k", "2")
    system = tmp_path / "sys.json"
    system.write_text(out)
    code, out, _ = run(capsys, "letters", "decode", str(system))
    assert code == 0 and json.loads(out)["n"] == 6


def test_wqo_antichain(capsys):
    code, out, _ = run(capsys, "--json", "wqo", "antichain", "--family", "scirc", "--from", "3", "--to", "5")
    assert code == 0 and json.loads(out)["valid"]


def test_transform(tmp_path, capsys):
    c6 = tmp_path / "c6.json"
    save_graph(c6, cycle_graph(6))
    code, out, _ = run(capsys, "transform", "local", str(c6), "--u", "0")
    assert code == 0 and json.loads(out)["n"] == 6
    code, out, _ = run(capsys, "--json", "transform", "pivot-xy", "--n", "2")
    assert json.loads(out)["equals_y_grid"]
    assert run(capsys, "transform", "pivot", str(c6), "--u", "0", "--v", "2")[0] == 2


def test_dot_output(capsys):
    code, out, _ = run(capsys, "generate", "x", "--n", "2", "--k", "2", "--dot")
    assert code == 0 and "c1r2 -- c2r1;" in out


@pytest.mark.parametrize("fam", ["chain", "s", "t", "scirc", "tcirc", "path", "cycle", "y", "zsplit"])
def test_generate_families(fam, capsys):
    code, out, _ = run(capsys, "generate", fam, "--n", "4")
    assert code == 0 and json.loads(out)["n"] > 0


def test_wqo_experiments(capsys):
    code, out, _ = run(capsys, "--json", "wqo", "intervals", "--max-n", "6")
    assert code == 0 and json.loads(out)["pass"]
    code, out, _ = run(capsys, "--json", "wqo", "x-columns", "--n", "1", "--budget", "50")
    assert code == 0 and json.loads(out)["details"]["checked"] == 50
