import json
import subprocess
import sys

import pytest

from bvfrac import __version__
from bvfrac.cli import RunConfig, main, run
from bvfrac.gridfn import read_grid, sample_corpus, write_grid


def call(capsys, *argv):
    code = main(list(argv))
    out, err = capsys.readouterr()
    return code, out, err


def report(capsys, *argv):
    code, out, err = call(capsys, *argv)
    assert code == 0, err
    doc = json.loads(out)
    assert doc["schema"] == 1
    assert doc["meta"] == {"tool": "bvfrac", "version": __version__}
    return doc


def test_variation_example(capsys):
    doc = report(capsys, "variation", "--corpus", "plane_indicator", "--m", "2", "--n", "2",
                 "--senses", "vitali,frechet,arzela")
    v = doc["result"]["variations"]
    assert (v["Vitali"]["value"], v["Frechet"]["value"], v["Arzela"]["value"]) == (6, 6, 2)
    assert doc["config"]["senses"] == ["Vitali", "Frechet", "Arzela"]


def test_boxdim_example(capsys):
    doc = report(capsys, "boxdim", "--corpus", "constant", "--levels", "3..8")
    assert doc["result"]["slope"] == 2.0
    assert doc["result"]["grid"]["m"] == 256


def test_fracint_example(capsys):
    doc = report(capsys, "fracint", "--corpus", "ones", "--alpha", "1", "--beta", "1", "--check", "sup-bound")
    r = doc["result"]
    assert r["holds"] is True and r["bound"] == 1 and r["sup_abs"] == 1


def test_profile_embeds_verdicts(capsys):
    doc = report(capsys, "variation", "--corpus", "plane", "--m", "64", "--senses", "Vitali,hahn", "--profile")
    v = doc["result"]["variations"]
    assert v["Vitali"]["diagnosis"]["verdict"] == "bounded"
    assert v["Hahn"]["diagnosis"]["verdict"] == "bounded"


def test_input_file_and_csv_output(tmp_path, capsys):
    path = tmp_path / "g.json"
    write_grid(sample_corpus("product", 4), path)
    code, out, _ = call(capsys, "variation", "--input", str(path), "--senses", "vitali", "--format", "csv")
    assert code == 0
    assert out.splitlines()[0] == "sense,value,exactness"
    assert out.splitlines()[1].startswith("Vitali,1.0,")


def test_corpus_listing_and_sampling(tmp_path, capsys):
    doc = report(capsys, "corpus")
    assert "plane_indicator" in doc["result"]["corpus"]
    out = tmp_path / "g.csv"
    code, _, _ = call(capsys, "corpus", "--corpus", "plane", "--m", "4", "--format", "csv", "--output", str(out))
    assert code == 0
    assert read_grid(out).z[4, 4] == 2.0


def test_plot_csv(tmp_path, capsys):
    plot = tmp_path / "plot.csv"
    report(capsys, "boxdim", "--corpus", "plane", "--levels", "3..5", "--plot", str(plot))
    rows = plot.read_text().splitlines()
    assert rows[0] == "log_inv_delta,log_N" and len(rows) == 4


def test_schedule_override_base_three(capsys):
    doc = report(capsys, "boxdim", "--corpus", "constant", "--base", "3", "--schedule", "2,3,5")
    assert doc["result"]["grid"]["m"] == 243
    assert abs(doc["result"]["slope"] - 2.0) < 1e-12


@pytest.mark.parametrize(
    "argv",
    [
        ["variation", "--corpus", "nope"],
        ["variation"],
        ["variation", "--corpus", "plane", "--senses", "bogus"],
        ["boxdim", "--corpus", "plane", "--levels", "5..3"],
        ["fracint", "--corpus", "plane", "--alpha", "-1", "--beta", "1"],
        ["fracint", "--corpus", "plane", "--alpha", "1"],
        ["frobnicate"],
    ],
)
def test_usage_errors_exit_two(capsys, argv):
    code, _, err = call(capsys, *argv)
    assert code == 2
    assert err


def test_computation_error_exits_one(capsys):
    code, _, err = call(capsys, "boxdim", "--corpus", "plane", "--m", "100")
    assert code == 1 and "too coarse" in err


def test_bad_input_file_exits_one(tmp_path, capsys):
    path = tmp_path / "g.json"
    path.write_text('{"rect": {"a": 0, "b": 1, "c": 0, "d": 1}, "m": 1, "n": 1, "values": [0, 1, 2]}')
    code, _, err = call(capsys, "variation", "--input", str(path))
    assert code == 1 and "length mismatch" in err


def test_run_validates_config(capsys):
    assert run(RunConfig(command="variation", corpus="plane", senses=[])) == 2
    assert run(RunConfig(command="boxdim", corpus="plane", levels=[])) == 2


def test_repeated_runs_are_byte_identical(tmp_path):
    outs = []
    path = tmp_path / "r.json"
    for _ in range(2):
        assert main(["fracint", "--corpus", "plane", "--alpha", "0.5", "--beta", "0.5",
                     "--check", "bv-preservation", "--output", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]


def test_module_entry_point():
    proc = subprocess.run([sys.executable, "-m", "bvfrac", "--version"], capture_output=True, text=True)
    assert proc.returncode == 0 and __version__ in proc.stdout


def test_threads_env_does_not_change_output(tmp_path, monkeypatch):
    argv = ["variation", "--corpus", "xsin_inv", "--m", "16", "--senses", "frechet"]
    outs = []
    for threads in ("1", "4"):
        monkeypatch.setenv("BVF_THREADS", threads)
        path = tmp_path / "t.json"
        assert main(argv + ["--output", str(path)]) == 0
        outs.append(path.read_bytes())
    assert outs[0] == outs[1]
