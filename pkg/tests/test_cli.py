import json

from gnetcode import minimum_distances, capability
from gnetcode.cli import main
from test_config import REPETITION


def run_cli(capsys, *argv):
    code = main(list(argv))
    out = capsys.readouterr()
    return code, out.out, out.err


def run_json(capsys, *argv):
    code, out, err = run_cli(capsys, *argv)
    return code, json.loads(out), err


def test_toy_distances_text(capsys):
    code, out, _ = run_cli(capsys, "--toy-example", "distances")
    assert code == 0
    assert "d0_min=3" in out and "d1_min=2" in out and "d2_min=2" in out


def test_toy_distances_structured_matches_engine(capsys, toy):
    code, doc, _ = run_json(capsys, "--toy-example", "--format", "structured",
                            "distances")
    assert code == 0
    assert doc["distances"] == minimum_distances(toy).to_dict()
    assert doc["source"] == "toy-example"


def test_structured_output_round_trips(capsys):
    _, doc, _ = run_json(capsys, "--toy-example", "--format", "structured",
                         "capability")
    assert json.loads(json.dumps(doc)) == doc


def test_toy_capability(capsys, toy):
    code, doc, _ = run_json(capsys, "--toy-example", "--format", "structured",
                            "capability")
    assert code == 0
    assert doc["capability"]["max_correctable"] == 1
    assert doc["capability"]["max_detectable"] == 1
    assert doc["capability"] == capability(toy).to_dict()


def test_toy_joint(capsys):
    code, doc, _ = run_json(capsys, "--toy-example", "--format", "structured",
                            "joint", "--c", "0", "--cprime", "1")
    assert code == 0 and doc["joint"]["verdict"] is True
    code, doc, _ = run_json(capsys, "--toy-example", "--format", "structured",
                            "joint", "--c", "1", "--cprime", "0")
    assert code == 0 and doc["joint"]["verdict"] is True
    code, doc, _ = run_json(capsys, "--toy-example", "--format", "structured",
                            "joint", "--c", "0", "--cprime", "2")
    assert code == 0 and doc["joint"]["verdict"] is False


def test_toy_decode(capsys):
    code, out, _ = run_cli(capsys, "--toy-example", "decode", "0,0,0")
    assert code == 0 and "Decoded((0, 0, 0))" in out
    code, out, _ = run_cli(capsys, "--toy-example", "decode", "1,0,0",
                           "--bounded", "1")
    assert code == 0 and "Decoded((0, 0, 0))" in out
    code, out, _ = run_cli(capsys, "--toy-example", "decode", "2,2,2",
                           "--bounded", "1")
    assert code == 0 and "Detected" in out


def test_toy_verify_exit_zero(capsys):
    code, out, _ = run_cli(capsys, "--toy-example", "verify")
    assert code == 0
    assert "overall: pass" in out


def test_linear_matrix_config_verify(capsys, tmp_path):
    from test_config import MATRIX_RANK
    cfg = tmp_path / "rank.ini"
    cfg.write_text(MATRIX_RANK)
    code, doc, _ = run_json(capsys, "--config", str(cfg), "--format",
                            "structured", "verify")
    assert code == 0
    assert doc["ledger"]["passed"] is True
    states = {v["check"]: v["status"] for v in doc["ledger"]["verdicts"]}
    assert states["all-distances-coincide"] == "pass"


def test_toy_classify(capsys):
    code, doc, _ = run_json(capsys, "--toy-example", "--format", "structured",
                            "classify")
    assert code == 0
    assert doc["classification"]["error_linear"] is False
    assert doc["classification"]["witness"] is not None


def test_config_distances(capsys, tmp_path):
    cfg = tmp_path / "repetition.ini"
    cfg.write_text(REPETITION)
    code, doc, _ = run_json(capsys, "--config", str(cfg), "--format",
                            "structured", "distances")
    assert code == 0
    for key in ("d0_min", "d1_min", "d2_min"):
        assert doc["distances"][key] == {"value": 3, "infinite": False}
    assert doc["source"].startswith("config:")


def test_config_parse_error(capsys, tmp_path):
    cfg = tmp_path / "bad.ini"
    cfg.write_text(REPETITION.replace("p = 2", "p = 6"))
    code, out, err = run_cli(capsys, "--config", str(cfg), "distances")
    assert code == 2
    assert "error:" in err and "prime" in err


def test_missing_config_file(capsys):
    code, _, err = run_cli(capsys, "--config", "/nonexistent.ini", "distances")
    assert code == 2


def test_bad_received_word(capsys):
    code, _, err = run_cli(capsys, "--toy-example", "decode", "abc")
    assert code == 2 and "error:" in err


def test_invalid_bounded_radius(capsys, tmp_path):
    cfg = tmp_path / "repetition.ini"
    cfg.write_text(REPETITION)
    code, _, err = run_cli(capsys, "--config", str(cfg), "decode", "0,0,0",
                           "--bounded", "2")
    assert code == 2 and "intersect" in err


def test_parallelism_validation(capsys):
    code, _, err = run_cli(capsys, "--toy-example", "--parallelism", "0",
                           "distances")
    assert code == 2


def test_verify_fails_on_corrupted_engine(capsys, monkeypatch):
    import gnetcode.properties as props

    real = props.minimum_distances

    def corrupted(ch):
        report = real(ch)
        import dataclasses
        return dataclasses.replace(report, d1={k: 0 for k in report.d1})

    monkeypatch.setattr(props, "minimum_distances", corrupted)
    code, out, _ = run_cli(capsys, "--toy-example", "verify")
    assert code == 1
    assert "fail" in out


def test_cli_is_thin_adapter(capsys, toy):
    # numbers printed by the CLI must be the engine's, byte for byte
    _, doc, _ = run_json(capsys, "--toy-example", "--format", "structured",
                         "distances")
    engine = minimum_distances(toy).to_dict()
    assert json.dumps(doc["distances"], sort_keys=True) == json.dumps(
        engine, sort_keys=True)
