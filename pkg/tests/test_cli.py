import json
import subprocess
import sys

import pytest

from thetafloer.cli import main, read_config
from thetafloer.pipeline import JobSpec, Report, decomp_from_dict, run


def cli(capsys, *argv):
    rc = main(list(argv))
    out, err = capsys.readouterr()
    return rc, out, err


def test_curve_job(capsys):
    rc, out, _ = cli(capsys, "curve", "-d", "3", "--mults", "1,1,1,1,1", "--local", "--format", "json")
    assert rc == 0
    rep = json.loads(out)
    assert rep["derived"]["genus"] == 4
    assert rep["derived"]["spectrum"] == [["-2/3", 2]]
    assert rep["derived"]["character"] == ["-2/1", "-4/1"]
    assert [c["length"] for c in rep["homology"]["local"]["cyclic"]] == [2]
    assert "plain" not in rep["homology"]
    assert rep["derived"]["roundtrip_solver"] == "ok"


def test_hyperelliptic_and_torusknot(capsys):
    rc, out, _ = cli(capsys, "hyperelliptic", "--genus", "2", "--format", "json")
    assert rc == 0 and json.loads(out)["derived"]["distribution"] == {"0": 10, "1": 6}
    rc, out, _ = cli(capsys, "torusknot", "2", "3", "--format", "json")
    assert rc == 0 and json.loads(out)["derived"]["torsion_sum"] == 1


def test_classes_rows(capsys):
    rc, out, _ = cli(capsys, "hyperelliptic", "--genus", "2", "--classes", "--format", "json")
    rows = json.loads(out)["derived"]["classes"]
    assert rc == 0 and len(rows) == 16
    assert all(sum(r["local"]) == r["h0"] for r in rows)


def test_spectrum_inputs(capsys):
    rc, out, _ = cli(capsys, "spectrum", "-d", "5", "--eigens", "1:2,2:-1", "--format", "json")
    rep = json.loads(out)
    assert rc == 0
    assert rep["derived"]["spectrum"] == [["2/5", 2], ["-4/5", 1]]
    assert rep["closed_form"]["c_L"] == 1
    rc, out, _ = cli(capsys, "spectrum", "--pairs", "1/2:3", "--check", "--format", "json")
    rep = json.loads(out)
    assert rc == 0 and rep["checks"]["local_truncation_invariant"]


@pytest.mark.parametrize(
    "argv,code",
    [
        (["ramification", "-d", "3", "--rotations", "1,1"], "non_integral_multiplicity"),
        (["spectrum", "--pairs", "1/2:3", "--weight", "1"], "input_error"),
        (["spectrum", "--pairs", "1/2:3", "--truncation", "1"], "truncation_too_small"),
        (["torusknot", "4", "6"], "not_coprime"),
        (["ramification", "-d", "9", "--rotations", "1,2"], "input_error"),
    ],
)
def test_input_errors_exit_2(capsys, argv, code):
    rc, out, err = cli(capsys, *argv)
    assert rc == 2 and out == ""
    assert json.loads(err)["error"] == code


def test_selftest_with_tiny_truncation(capsys):
    rc, _, err = cli(capsys, "selftest", "--truncation", "1")
    assert rc == 2 and json.loads(err)["error"] == "truncation_too_small"


def test_json_is_deterministic(capsys):
    argv = ["curve", "-d", "5", "--mults", "1,2,2,4", "--format", "json"]
    _, first, _ = cli(capsys, *argv)
    _, second, _ = cli(capsys, *argv)
    assert first == second


def test_report_roundtrip():
    rep = run(JobSpec("spectrum", pairs=(("-2/5", 1), ("4/5", 2))))
    again = Report.from_json(rep.to_json())
    assert again == rep and again.to_json() == rep.to_json()
    assert list(json.loads(rep.to_json())) == ["mode", "input", "derived", "closed_form", "homology",
                                                "warnings", "checks", "version"]
    dec = decomp_from_dict(rep.homology["local"])
    assert dec.cyclic_lengths == [1, 2]


def test_config_batch(tmp_path, capsys):
    cfg = tmp_path / "sweep.cfg"
    cfg.write_text(
        "# two jobs\nmode = spectrum\npairs = 1/2:2\nformat = json\n---\n"
        "mode = torusknot\np = 2\nq = 5\nformat = json\n"
    )
    assert read_config(str(cfg)) == [
        ["spectrum", "--pairs", "1/2:2", "--format", "json"],
        ["torusknot", "2", "5", "--format", "json"],
    ]
    for jobs in ("1", "2"):
        rc, out, _ = cli(capsys, "--config", str(cfg), "--jobs", jobs)
        assert rc == 0
        dec = json.JSONDecoder()
        first, end = dec.raw_decode(out)
        second, _ = dec.raw_decode(out[end:].lstrip())
        assert (first["mode"], second["mode"]) == ("spectrum", "torusknot")


def test_module_entry_point():
    res = subprocess.run([sys.executable, "-m", "thetafloer", "torusknot", "2", "3"],
                         capture_output=True, text=True, check=False)
    assert res.returncode == 0 and "torsion_sum: 1" in res.stdout
