import io
import json
import subprocess
import sys

import pytest

from lefschetz.cli import main


def run(*argv):
    out, err = io.StringIO(), io.StringIO()
    code = main(list(argv), out, err)
    return code, out.getvalue(), err.getvalue()


def run_json(*argv):
    code, out, err = run(*argv, "--format", "json")
    assert code == 0, err
    return json.loads(out)


def test_analyze_d8():
    d = run_json("analyze", "--family", "dihedral:8", "--prime", "2")
    assert d["class_table"]["c"] == 5 and d["borel_smith"]["rank"] == 5
    assert d["verdict"]["outcome"] == "Surjective"


def test_analyze_s2p3():
    d = run_json("analyze", "--family", "s2p_normalizer:3", "--prime", "3")
    assert d["class_table"]["c"] == 3
    assert d["tuples"]["invariants"] == [2, 2]
    assert d["verdict"]["outcome"] == "Unknown"


def test_verdict_s5():
    d = run_json("verdict", "--family", "symmetric:5", "--prime", "5")
    assert set(d) == {"group", "prime", "unit_order", "verdict"}
    assert d["unit_order"] == 4
    assert d["verdict"]["outcome"] == "Surjective"
    assert d["verdict"]["certificate"] == {"criterion": "cyclic-sylow", "period": 8}


def test_text_output():
    code, out, _ = run("analyze", "--family", "symmetric:3", "--prime", "3")
    assert code == 0
    assert "outcome: Surjective" in out and "schema: lefschetz-report/1" in out


def test_group_file(tmp_path):
    path = tmp_path / "d8.txt"
    path.write_text("degree 4\ngen (1 2 3 4)\ngen (1 3)\n")
    d = run_json("analyze", "--group", str(path), "--prime", "2")
    assert d["group"]["order"] == 8 and d["group"]["name"] == "d8"
    path.write_text("degree 3\ngen (1 2 4)\n")
    code, _, err = run("analyze", "--group", str(path), "--prime", "2")
    assert code == 2 and "point out of range" in err


@pytest.mark.parametrize("name", ["cfb-d8", "units-d8", "cfb-d2n:4", "units-d2n:5"])
def test_tables(name):
    d = run_json("tables", name)
    assert d["matches_reference"]
    code, out, _ = run("tables", name)
    assert code == 0 and out.rstrip().endswith("yes")


@pytest.mark.parametrize("h,result", [("4,0", "in kernel"), ("2,0", "not in kernel"),
                                      ("0,0", "in kernel")])
def test_kernel_s3(h, result):
    d = run_json("kernel", "--family", "symmetric:3", "--prime", "3", "--h", h)
    assert d["result"] == result and d["test"] == "cyclic-sylow"
    assert any(c.get("modulus") == 4 for c in d["checks"])


def test_kernel_d8_even_values():
    d = run_json("kernel", "--family", "dihedral:8", "--prime", "2", "--h", "2,2,2,2,2,2,2,2")
    assert d["result"] == "in kernel" and d["exact"]
    d = run_json("kernel", "--family", "dihedral:8", "--prime", "2", "--h", "1,1,1,1,1,1,1,1")
    assert d["result"] == "not in kernel"


def test_kernel_necessary_only_for_odd_rank_two():
    d = run_json("kernel", "--family", "s2p_normalizer:3", "--prime", "3", "--h", "0,0,0,0")
    assert d["result"] == "necessary conditions hold" and not d["exact"]


@pytest.mark.parametrize("argv,message", [
    (("kernel", "--family", "symmetric:3", "--prime", "3", "--h", "3,0"), "Borel-Smith"),
    (("kernel", "--family", "symmetric:3", "--prime", "3", "--h", "4"), "2 classes"),
    (("kernel", "--family", "symmetric:3", "--prime", "3", "--h", "a,b"), "integers"),
    (("analyze", "--family", "symmetric:3", "--prime", "4"), "must be prime"),
    (("analyze", "--family", "symmetric:3", "--prime", "3", "-m", "0"), "positive"),
    (("analyze", "--family", "mathieu:11", "--prime", "2"), "mathieu"),
    (("tables", "cfb-d2n:2"), "n >= 4"),
    (("tables", "bogus"), ""),
])
def test_input_errors_exit_2(argv, message):
    code, out, err = run(*argv)
    assert code == 2 and out == ""
    assert err.startswith("error:") and message in err


def test_bound_exit_3():
    code, _, err = run("analyze", "--family", "symmetric:6", "--prime", "2", "--bound", "100")
    assert code == 3 and "too large" in err


def test_argparse_errors_exit_2(capsys):
    assert main(["analyze", "--prime", "2"]) == 2
    assert main(["frobnicate"]) == 2
    assert main(["--help"]) == 0
    capsys.readouterr()


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "lefschetz", "verdict", "--family",
                           "cyclic:9", "--prime", "3", "--format", "json"],
                          capture_output=True, text=True, timeout=60)
    assert proc.returncode == 0
    assert json.loads(proc.stdout)["verdict"]["certificate"]["period"] == 2
