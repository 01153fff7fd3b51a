import json

import pytest
from pydantic import ValidationError

from algebra.errors import InvalidRootError
from app import EXIT_FAILED, EXIT_OK, EXIT_USAGE, build_parser, run
from config import Settings, load_settings


@pytest.fixture(autouse=True)
def clean_environment(monkeypatch, tmp_path):
    for name in ("QGROUP_N", "QGROUP_FORMAT", "QGROUP_LOG_LEVEL", "QGROUP_TWO_FORM", "QGROUP_SEED", "QGROUP_SAMPLES"):
        monkeypatch.delenv(name, raising=False)
    monkeypatch.chdir(tmp_path)


def run_json(capsys, *argv):
    status = run(list(argv))
    out = capsys.readouterr().out
    return status, json.loads(out) if out.strip() else None


class TestSettings:
    def test_defaults(self):
        settings = load_settings()
        assert settings == Settings()
        assert settings.N == 3

    def test_environment(self, monkeypatch):
        monkeypatch.setenv("QGROUP_N", "5")
        monkeypatch.setenv("QGROUP_FORMAT", "text")
        settings = load_settings()
        assert settings.N == 5
        assert settings.output_format == "text"

    def test_overrides_win(self, monkeypatch):
        monkeypatch.setenv("QGROUP_N", "5")
        assert load_settings(N=7).N == 7

    def test_env_file(self, tmp_path):
        path = tmp_path / "custom.env"
        path.write_text("QGROUP_TWO_FORM=manin\nQGROUP_SAMPLES=3\n")
        settings = load_settings(str(path))
        assert settings.two_form == "manin"
        assert settings.samples == 3

    @pytest.mark.parametrize("value", [4, 1, -3])
    def test_invalid_root(self, value):
        with pytest.raises(InvalidRootError):
            load_settings(N=value)

    def test_settings_share_root_message(self):
        message = str(InvalidRootError(8))
        with pytest.raises(ValidationError, match=message):
            Settings(N=8)

    def test_invalid_root_from_environment(self, monkeypatch):
        monkeypatch.setenv("QGROUP_N", "6")
        with pytest.raises(InvalidRootError):
            load_settings()

    def test_log_level_is_normalized(self):
        assert load_settings(log_level="debug").log_level == "DEBUG"


class TestCommands:
    def test_mul(self, capsys):
        status, result = run_json(capsys, "mul", "M", "y", "x")
        assert status == EXIT_OK
        assert result["status"] == "ok"
        assert result["payload"]["result"] == "(-1 - q)*x*y"

    def test_normalize(self, capsys):
        status, result = run_json(capsys, "normalize", "F", "a*d - q*b*c")
        assert status == EXIT_OK
        assert result["payload"]["result"] == "1"

    def test_decompose_tensor(self, capsys):
        status, result = run_json(capsys, "decompose", "tensor", "3irr", "3irr")
        assert status == EXIT_OK
        assert result["payload"]["summands"] == {"6_odd": 1, "3_irr": 1}
        assert result["payload"]["verified"] is True

    def test_decompose_plane(self, capsys):
        status, result = run_json(capsys, "decompose", "M")
        assert status == EXIT_OK
        assert sorted(result["payload"]["summands"]) == ["3_eve", "3_irr", "3_odd"]

    def test_qdim(self, capsys):
        status, result = run_json(capsys, "qdim", "2")
        assert status == EXIT_OK
        assert result["payload"]["qdim"] == "-1"

    def test_radical(self, capsys):
        status, result = run_json(capsys, "radical")
        assert status == EXIT_OK
        assert result["payload"]["dim radical"] == 13
        assert result["payload"]["blocks"] == [9, 4, 1]

    def test_curvature(self, capsys):
        status, result = run_json(capsys, "curvature", "x*dx")
        assert status == EXIT_OK
        assert result["payload"]["flat"] is True

    def test_check_rmatrix(self, capsys):
        status, result = run_json(capsys, "check", "rmatrix")
        assert status == EXIT_OK
        assert result["payload"]["status"] == "pass"

    def test_text_output(self, capsys):
        status = run(["qdim", "3_irr", "--format", "text"])
        out = capsys.readouterr().out
        assert status == EXIT_OK
        assert out.startswith("qdim: ok")
        assert "qdim: 0" in out


class TestErrors:
    def test_parse_error(self, capsys):
        status = run(["normalize", "M", "x^"])
        assert status == EXIT_USAGE
        assert "position 2" in capsys.readouterr().err

    def test_invalid_root(self, capsys):
        assert run(["qdim", "2", "--N", "4"]) == EXIT_USAGE

    def test_unknown_module(self, capsys):
        assert run(["qdim", "7_irr"]) == EXIT_FAILED

    def test_missing_labels(self, capsys):
        assert run(["decompose", "tensor", "2"]) == EXIT_USAGE

    def test_unknown_command(self, capsys):
        assert run(["integrate"]) == EXIT_USAGE

    def test_parser_lists_checks(self):
        parser = build_parser()
        args = parser.parse_args(["check", "all"])
        assert args.name == "all"
