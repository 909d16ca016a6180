import pytest

from calculator import Session
from commands import CommandContext, execute_command, get_command_names, list_available_commands, run_command
from core.exceptions import InvalidArgumentError, UnboundNameError
from engine import hat
from rulesets import list_available_rulesets


@pytest.fixture
def context():
    return CommandContext(session=Session(), style="literal", unicode_atoms=False)


class TestCommands:
    def test_registered(self):
        for name in ("let", "show", "canon", "cmp", "stops", "guaranteed", "invertible", "birthday", "save", "load", "quit"):
            assert name in get_command_names()

    def test_help_lists_usage_and_rulesets(self, context):
        output = run_command("help", context).output
        assert output.startswith(list_available_commands())
        assert "cmp EXPR, EXPR" in output
        assert output.endswith(list_available_rulesets())
        assert "  - pickends: " in output

    def test_let_binds(self, context):
        result = run_command("let w = hat(1)", context)
        assert result.ok
        assert result.output == "w = <0|E0>"
        assert context.session.get("w") is hat(1)

    def test_let_rejects_keywords(self, context):
        result = run_command("let hat = 1", context)
        assert not result.ok
        assert result.output == "error: 'hat' is reserved"

    def test_let_usage(self, context):
        with pytest.raises(InvalidArgumentError):
            execute_command("let = 1", context)

    def test_missing_expression(self, context):
        assert run_command("show", context).output == "error: missing expression"

    def test_execute_raises(self, context):
        with pytest.raises(UnboundNameError):
            execute_command("show x", context)

    def test_quit_and_exit(self, context):
        assert run_command("quit", context).should_quit
        assert run_command("exit", context).should_quit

    def test_pretty_context(self):
        context = CommandContext(style="pretty", unicode_atoms=True)
        assert run_command("show <E0|E5>", context).output == "<∅^0|∅^5>"
        assert run_command("show hat(3)", context).output == "^3"

    def test_stops_reject_non_guaranteed(self, context):
        result = run_command("stops <E5|4>", context)
        assert result.output == "error: stops requires a guaranteed game"

    def test_load_missing_file(self, context, tmp_path):
        result = run_command(f"load {tmp_path / 'missing.sgc'}", context)
        assert not result.ok
        assert result.output.startswith("error: ")

    def test_save_usage(self, context):
        assert run_command("save", context).output == "error: usage: save PATH"
