# Copyright 2025 The tautring Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

import gc
import io
import json
from pathlib import Path

import pytest
from omegaconf.errors import OmegaConfBaseException

from tautring.utils.logger import Tracker
from tautring.verifier import (
    CHECKS,
    Check,
    Outcome,
    exit_code,
    load_config,
    read_config_lines,
    run_check,
    run_suite,
    select_checks,
    values_equal,
)
from tautring.verifier.config import EngineConfig
from tautring.verifier.main import EXIT_FAILED, EXIT_OK, EXIT_USAGE, main


ROOT = Path(__file__).resolve().parents[1]
REPORT_FIELDS = {"check_id", "anchor", "status", "computed", "expected", "provenance", "millis"}


def test_default_config():
    config = load_config()
    assert config.engine.trunc == 4
    assert config.suite.format == "text"
    assert config.suite.only is None
    assert not config.suite.use_ray


def test_config_layers(tmp_path):
    path = tmp_path / "verify.conf"
    path.write_text("# comment\ntrunc = 3\nformat=json\nsuite.num_workers=2\n")
    config = load_config(str(path))
    assert (config.engine.trunc, config.suite.format, config.suite.num_workers) == (3, "json", 2)

    config = load_config(str(path), flags={"engine": {"trunc": 2}})
    assert config.engine.trunc == 2

    config = load_config(str(path), overrides=["trunc=5"], flags={"engine": {"trunc": 2}})
    assert config.engine.trunc == 5
    assert config.to_dict()["suite"]["format"] == "json"


def test_shipped_config_file():
    config = load_config(str(ROOT / "configs" / "verify.conf"))
    assert config.engine.trunc == 4
    assert config.suite.num_workers == 1


def test_config_file_selects_checks(tmp_path, capsys):
    path = tmp_path / "verify.conf"
    path.write_text("only = m6-presentation,looijenga-vanishing\nformat = json\n")
    config = load_config(str(path))
    assert list(config.suite.only) == ["m6-presentation", "looijenga-vanishing"]
    assert read_config_lines("only=sensitivity") == ["suite.only=[sensitivity]"]

    assert main(["verify", "--config", str(path)]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert [c["check_id"] for c in document["checks"]] == ["m6-presentation", "looijenga-vanishing"]


@pytest.mark.parametrize("override", ["trunc=0", "format=xml", "suite.num_workers=0", "engine.max_roots=0"])
def test_config_validation(override):
    with pytest.raises(ValueError):
        load_config(overrides=[override])


def test_config_rejects_unknown_keys():
    with pytest.raises(OmegaConfBaseException):
        load_config(overrides=["engine.depth=3"])

    with pytest.raises(ValueError, match="line 2"):
        read_config_lines("trunc=3\nnot a pair\n")


def test_literature_anchors_quote_their_source():
    literature = [c for c in CHECKS.values() if c.provenance == "literature"]
    assert len(literature) >= 9
    for check_def in literature:
        assert check_def.anchor.startswith('"')
        assert "$" in check_def.anchor or "\\" in check_def.anchor


def test_select_checks():
    ids = [c.check_id for c in select_checks()]
    assert ids == sorted(CHECKS)
    assert len(ids) == 13
    assert [c.check_id for c in select_checks(["sensitivity", "m6-presentation"])] == ["m6-presentation", "sensitivity"]
    with pytest.raises(KeyError, match="no-such-check"):
        select_checks(["no-such-check"])


def test_values_equal_unifies_tables():
    from tautring.verifier.checks import expr

    assert values_equal(expr("k1 + k2"), expr("k2 + k1"))
    assert values_equal({"a": (1, expr("k1"))}, {"a": (1, expr("k1 + 0*k2"))})
    assert not values_equal((1, 2), (1, 2, 3))


def test_sensitivity_check_detects_perturbation():
    report = run_check(CHECKS["sensitivity"], EngineConfig())
    assert report.status == "pass"
    assert "fail" in report.computed
    assert "-28672/12769" in report.computed


def test_failing_and_raising_checks(monkeypatch):
    def mismatch(engine):
        return Outcome(1, 2)

    def broken(engine):
        raise ValueError("boom")

    monkeypatch.setitem(CHECKS, "always-fails", Check("always-fails", "1 = 2", "derived oracle", mismatch))
    monkeypatch.setitem(CHECKS, "always-raises", Check("always-raises", "no error", "derived oracle", broken))
    reports = [run_check(CHECKS[check_id], EngineConfig()) for check_id in ("always-fails", "always-raises")]
    assert [r.status for r in reports] == ["fail", "fail"]
    assert reports[1].computed == "error: boom"
    assert exit_code(reports) == 1
    assert main(["verify", "--only", "always-fails"]) == EXIT_FAILED


def test_full_suite_passes():
    reports = run_suite(load_config())
    assert [r.check_id for r in reports] == sorted(CHECKS)
    failed = {r.check_id: (r.computed, r.expected) for r in reports if r.status != "pass"}
    assert failed == {}
    assert exit_code(reports) == 0
    assert {r.provenance for r in reports} == {"literature", "derived oracle"}


def test_verify_json_report(capsys):
    assert main(["verify", "--only", "m6-presentation,sensitivity", "--format", "json"]) == EXIT_OK
    document = json.loads(capsys.readouterr().out)
    assert document["summary"] == {"total": 2, "passed": 2, "failed": 0}
    assert document["config"]["engine.trunc"] == 4
    assert [c["check_id"] for c in document["checks"]] == ["m6-presentation", "sensitivity"]
    assert all(set(c) == REPORT_FIELDS for c in document["checks"])


def test_verify_text_report(capsys):
    assert main(["verify", "--only", "looijenga-vanishing", "--trunc", "3"]) == EXIT_OK
    out = capsys.readouterr().out
    assert out.startswith("Config\n")
    assert "[PASS] looijenga-vanishing" in out
    assert out.rstrip().endswith("1 passed, 0 failed, 1 checks")


def test_verify_usage_errors(capsys):
    assert main(["verify", "--only", "no-such-check"]) == EXIT_USAGE
    assert main(["verify", "trunc"]) == EXIT_USAGE
    assert main(["verify", "trunc=0"]) == EXIT_USAGE
    assert main(["verify", "--config", "/nonexistent/verify.conf"]) == EXIT_USAGE
    with pytest.raises(SystemExit) as info:
        main(["verify", "--format", "xml"])

    assert info.value.code == 2


def test_eval_command(capsys):
    assert main(["eval", "nf(k1^4, M6)"]) == EXIT_OK
    assert capsys.readouterr().out == "36864/113 * k2^2\n"

    assert main(["eval", "ydim", "--load", str(ROOT / "data" / "mukai.defs")]) == EXIT_OK
    assert capsys.readouterr().out == "40\n"

    assert main(["eval", "1 +"]) == EXIT_USAGE
    err = capsys.readouterr().err
    assert "unexpected 'end of input'" in err
    assert err.rstrip().endswith("^")

    assert main(["eval", "wedge(6, V)"]) == EXIT_USAGE
    assert capsys.readouterr().err.startswith("error: ")


def test_repl_command(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO("x = 2\n\n# comment\nx^10\n1 +\nhilbert(M6, 2)\n"))
    assert main(["repl"]) == EXIT_USAGE
    lines = capsys.readouterr().out.splitlines()
    assert lines[:2] == ["2", "1024"]
    assert lines[-1] == "(1, 1, 2)"


def test_repl_exit_codes(monkeypatch, capsys):
    monkeypatch.setattr("sys.stdin", io.StringIO("x = 3\nx^2\n"))
    assert main(["repl"]) == EXIT_OK
    assert capsys.readouterr().out.splitlines() == ["3", "9"]

    monkeypatch.setattr("sys.stdin", io.StringIO("wedge(6, V)\n2 + 2\n"))
    assert main(["repl"]) == EXIT_USAGE
    lines = capsys.readouterr().out.splitlines()
    assert lines[0].startswith("error: ")
    assert lines[-1] == "4"


def test_tracker_rejects_unknown_format():
    with pytest.raises(ValueError):
        Tracker("yaml")


def test_tracker_rejects_unknown_format_without_finalizer_error(monkeypatch, capsys):
    unraisable = []
    monkeypatch.setattr("sys.unraisablehook", unraisable.append)
    with pytest.raises(ValueError):
        Tracker(["text", "yaml"])

    gc.collect()
    assert unraisable == []
    assert capsys.readouterr().out == ""
