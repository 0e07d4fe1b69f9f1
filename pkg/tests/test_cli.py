import contextlib
import io
import json

from groupoidreps.cli import main
from groupoidreps.reporting import checks_payload


def run_cli(argv):
    buf = io.StringIO()
    with contextlib.redirect_stdout(buf):
        code = main(argv)
    return code, buf.getvalue()


def test_simples_json():
    code, out = run_cli(["simples", "--ell", "2", "--d", "2", "--out", "json"])
    assert code == 0
    rep = json.loads(out)
    assert rep["schema"] == "groupoid-reps/1"
    assert rep["command"] == "simples"
    dims = next(c for c in rep["checks"] if c["name"] == "wedderburn sum of squares")
    assert sorted(dims["details"]["dims"]) == [1, 1, 1, 1, 2]


def test_verify_iso_text():
    code, out = run_cli(["verify-iso", "--ell", "1", "--d", "3"])
    assert code == 0
    assert "PASS" in out


def test_gkd_subcommand():
    code, out = run_cli(["gkd", "--ell", "2", "--k", "2", "--d", "2", "--out", "json"])
    assert code == 0
    rep = json.loads(out)
    labels = next(c for c in rep["checks"] if c["name"] == "simple labels")
    assert len(labels["details"]) == 4


def test_objects_subcommand():
    code, out = run_cli(["objects", "--ell", "2", "--d", "2", "--out", "json"])
    assert code == 0
    rep = json.loads(out)
    table = next(c for c in rep["checks"] if c["name"] == "object table")
    assert table["details"]["objects"] == 4


def test_schur_weyl_subcommand():
    code, out = run_cli(["schur-weyl", "--ell", "2", "--d", "2", "--kvec", "1,1", "--out", "json"])
    assert code == 0


def test_rook_subcommand():
    code, out = run_cli(["rook-check", "--d", "3", "--out", "json"])
    assert code == 0


def test_gelfand_subcommand():
    code, out = run_cli(["gelfand", "--ell", "2", "--d", "2", "--out", "json"])
    assert code == 0


def test_branching_subcommand():
    code, out = run_cli(["branching", "--ell", "2", "--d", "2", "--out", "json"])
    assert code == 0


def test_shift_duality_flag():
    code, out = run_cli(
        ["schur-weyl", "--shift-duality", "--ell", "2", "--kk", "2", "--m", "1", "--d", "1", "--out", "json"]
    )
    assert code == 0


def test_usage_error_exit_code():
    code, _ = run_cli(["not-a-command"])
    assert code == 2


def test_resource_cap_exit_code(capsys):
    code, _out = run_cli(["objects", "--ell", "10", "--d", "8", "--cap", "1000"])
    assert code == 3


def test_config_file(tmp_path):
    cfg = tmp_path / "cfg.json"
    cfg.write_text(json.dumps({"ell": 1, "d": 3}))
    code, out = run_cli(["--config", str(cfg), "verify-iso", "--out", "json"])
    assert code == 0
    rep = json.loads(out)
    assert rep["parameters"] == {"ell": 1, "d": 3}
    # explicit flags win over the config
    code, out = run_cli(["--config", str(cfg), "verify-iso", "--ell", "2", "--out", "json"])
    rep = json.loads(out)
    assert rep["parameters"]["ell"] == 2


def test_all_small_grid_deterministic():
    code1, out1 = run_cli(["all", "--max-ell", "2", "--max-d", "1", "--out", "json"])
    code2, out2 = run_cli(["all", "--max-ell", "2", "--max-d", "1", "--out", "json"])
    assert code1 == code2 == 0
    r1, r2 = json.loads(out1), json.loads(out2)
    assert checks_payload(r1) == checks_payload(r2)
    assert all(c["status"] == "pass" for c in r1["checks"])
