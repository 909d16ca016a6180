from pathlib import Path

import pytest
from typer.testing import CliRunner

from main import app


DATA = Path(__file__).parent / "data"

runner = CliRunner()


@pytest.fixture
def workdir(tmp_path, monkeypatch):
    monkeypatch.chdir(tmp_path)
    return tmp_path


def write_script(directory: Path, *lines: str) -> Path:
    script = directory / "script.sgc"
    script.write_text("\n".join(lines) + "\n", encoding="utf-8")
    return script


class TestBatchMode:
    def test_transcript(self, workdir):
        result = runner.invoke(app, ["--batch", str(DATA / "transcript.sgc")])
        expected = (DATA / "transcript.out").read_text(encoding="utf-8")
        assert result.stdout == expected
        assert result.exit_code == 1

    def test_session_file_format(self, workdir):
        runner.invoke(app, ["--batch", str(DATA / "transcript.sgc")])
        saved = (workdir / "session.sgc").read_bytes()
        assert saved == (
            b"h = <-1, <E1|<E1|E2>> | <2|2>>\n"
            b"p = <<3|-1>, <3|1> | <-1|-3>, <1|-3>>\n"
        )

    def test_deterministic(self, workdir):
        first = runner.invoke(app, ["--batch", str(DATA / "transcript.sgc")])
        second = runner.invoke(app, ["--batch", str(DATA / "transcript.sgc")])
        assert first.stdout == second.stdout

    def test_success_exit_code(self, workdir):
        script = write_script(workdir, "let x = hat(1)", "show x + 1")
        result = runner.invoke(app, ["--batch", str(script)])
        assert result.exit_code == 0
        assert result.stdout == "> let x = hat(1)\nx = <0|E0>\n> show x + 1\n<1|E1>\n"

    def test_pretty_format(self, workdir):
        script = write_script(workdir, "canon <-1, <E1|<E1|E2>> | <2|2>>", "show conj(hat(2))")
        result = runner.invoke(app, ["--batch", str(script), "--format", "pretty"])
        assert result.stdout.splitlines()[1] == "<-1, 1-^1 | <2|2>>"
        assert result.stdout.splitlines()[3] == "-^2"

    def test_errors_do_not_stop_the_batch(self, workdir):
        script = write_script(workdir, "canon <E5|4>", "cmp 1", "frobnicate 2", "show 2")
        result = runner.invoke(app, ["--batch", str(script)])
        lines = result.stdout.splitlines()
        assert lines[1].startswith("error: canonical form requires a guaranteed game")
        assert lines[3].startswith("error: syntax error at position")
        assert lines[5] == "error: unknown command 'frobnicate'"
        assert lines[7] == "2"
        assert result.exit_code == 1

    def test_missing_batch_file(self, workdir):
        result = runner.invoke(app, ["--batch", str(workdir / "absent.sgc")])
        assert result.exit_code != 0
