import json
import subprocess
import sys

import pytest

from isopart.cli import EXIT_ABORT, EXIT_FAIL, EXIT_INPUT, EXIT_OK, main
from isopart.formats import emit_graph6
from isopart.graph import clique_plus, complete_graph, cycle_graph

C3 = emit_graph6(cycle_graph(3))
C4 = emit_graph6(cycle_graph(4))
C5 = emit_graph6(cycle_graph(5))
K4 = emit_graph6(complete_graph(4))
K5 = emit_graph6(complete_graph(5))


def run(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def test_verify_pass(capsys):
    code, out, _ = run(capsys, "verify", "--graph6", C4, "--target", "cycle", "--colors", "1,2,3,4")
    assert code == EXIT_OK
    assert json.loads(out)["verdict"] == "PASS"


def test_verify_fail_reports_empty_class(capsys):
    code, out, _ = run(capsys, "verify", "--graph6", C3, "--target", "cycle", "--colors", "1,2,3", "--classes", "4")
    cert = json.loads(out)
    assert code == EXIT_FAIL
    assert cert["verdict"] == "FAIL" and cert["class"] == 4 and sorted(cert["witness"]) == [0, 1, 2]


def test_verify_reads_coloring_file(capsys, tmp_path):
    p = tmp_path / "c.json"
    p.write_text(json.dumps({"colors": [1, 2, 3, 4], "classes": 4}))
    code, _, _ = run(capsys, "verify", "--graph6", C4, "--target", "cycle", "--coloring", str(p))
    assert code == EXIT_OK


def test_malformed_graph6(capsys):
    code, _, err = run(capsys, "verify", "--graph6", "C~~~", "--target", "cycle", "--colors", "1,2,3,4")
    assert code == EXIT_INPUT and "cannot parse graph" in err


def test_colouring_length_mismatch(capsys):
    code, _, err = run(capsys, "verify", "--graph6", C4, "--target", "cycle", "--colors", "1,2")
    assert code == EXIT_INPUT and "entries" in err


def test_partition_clique_with_pendant(capsys):
    code, out, _ = run(capsys, "partition", "--graph6", emit_graph6(clique_plus(4)), "--mode", "clique", "--k", "4")
    obj = json.loads(out)
    assert code == EXIT_OK
    assert sorted(obj["coloring"]["colors"]) == [1, 2, 3, 4, 5]
    assert obj["certificate"]["verdict"] == "PASS"


def test_partition_cycle_on_k4(capsys):
    code, out, _ = run(capsys, "partition", "--graph6", K4, "--mode", "cycle")
    obj = json.loads(out)
    assert code == EXIT_OK and sorted(obj["coloring"]["colors"]) == [1, 2, 3, 4]


def test_partition_cycle_rejects_c3(capsys):
    code, _, err = run(capsys, "partition", "--graph6", C3, "--mode", "cycle")
    assert code == EXIT_INPUT and "excluded: C_3" in err


def test_partition_clique_rejects_k_k(capsys):
    code, _, err = run(capsys, "partition", "--graph6", K4, "--mode", "clique", "--k", "4")
    assert code == EXIT_INPUT and "excluded: K_4" in err


def test_iota_and_isomatic_examples(capsys):
    code, out, _ = run(capsys, "iota", "--graph6", C5, "--k", "2")
    assert code == EXIT_OK and json.loads(out)["value"] == 2
    code, out, _ = run(capsys, "isomatic", "--graph6", C3, "--target", "cycle")
    assert code == EXIT_OK and json.loads(out)["value"] == 3
    code, out, _ = run(capsys, "isomatic", "--graph6", K5, "--target", "dominate")
    assert code == EXIT_OK and json.loads(out)["value"] == 5


def test_budget_exhaustion_exits_3(capsys):
    code, out, _ = run(capsys, "isomatic", "--graph6", K5, "--target", "dominate", "--budget", "1")
    assert code == EXIT_ABORT and json.loads(out)["status"] == "ABORTED"


def test_bad_target(capsys):
    code, _, _ = run(capsys, "iota", "--graph6", C5, "--target", "square")
    assert code == EXIT_INPUT


def test_edge_list_from_file(capsys, tmp_path):
    p = tmp_path / "g.txt"
    p.write_text("5\n0 1\n1 2\n2 3\n3 4\n4 0\n")
    code, out, _ = run(capsys, "iota", "--input", str(p), "--target", "kclique:2")
    assert code == EXIT_OK and json.loads(out)["value"] == 2


def test_sweep_writes_report(capsys, tmp_path):
    out = tmp_path / "sweep.json"
    code, _, err = run(
        capsys, "sweep", "--gen-n", "5", "--connected", "--checks", "bounds,conjectures", "--ks", "3,4", "--out", str(out), "--jobs", "2"
    )
    assert code == EXIT_OK
    report = json.loads(out.read_text())
    assert set(report) == {"config", "results", "counterexamples", "aggregate", "summary"}
    assert report["aggregate"]["fail"] == 0
    assert "consistent with conjecture on this set" in err


def test_sweep_tsv_to_stdout(capsys):
    code, out, _ = run(capsys, "sweep", "--gen-n", "4", "--labeled", "--connected", "--checks", "cycle-partition", "--format", "tsv")
    assert code == EXIT_OK
    rows = out.splitlines()
    assert rows[0].startswith("graph6\tn\tcheck") and len(rows) == 1 + 1 + 1 + 4 + 38


def test_sweep_rejects_bad_config(capsys):
    code, _, _ = run(capsys, "sweep", "--gen-n", "3", "--checks", "nonsense")
    assert code == EXIT_INPUT
    code, _, _ = run(capsys, "sweep", "--gen-n", "9", "--labeled")
    assert code == EXIT_INPUT


@pytest.mark.parametrize("args, code", [(["verify", "--graph6", C4, "--target", "cycle", "--colors", "1,2,3,4"], 0)])
def test_module_entry_point(args, code):
    proc = subprocess.run([sys.executable, "-m", "isopart.cli", *args], capture_output=True, text=True)
    assert proc.returncode == code
