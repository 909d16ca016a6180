import pytest

from config.settings import (
    get_calculator_config,
    get_config,
    get_engine_config,
    is_debug_enabled,
    load_config,
    update_config,
    validate_config,
)
from core.exceptions import ConfigurationError
from utils.logger import Logger


@pytest.fixture(autouse=True)
def fresh_config():
    load_config()
    yield
    load_config()


class TestConfig:
    def test_sections(self):
        assert set(get_config()) >= {"engine", "calculator", "logging"}
        assert get_engine_config()["oracle_max_candidates"] > 0
        assert get_engine_config()["oracle_max_options"] >= 1
        assert get_calculator_config()["format"] in ("literal", "pretty")
        assert isinstance(is_debug_enabled(), bool)

    def test_rejects_bad_format(self):
        update_config("calculator", {**get_calculator_config(), "format": "fancy"})
        with pytest.raises(ConfigurationError):
            validate_config()

    def test_rejects_bad_limits(self):
        update_config("engine", {**get_engine_config(), "oracle_max_candidates": 0})
        with pytest.raises(ConfigurationError):
            validate_config()

    def test_missing_section(self):
        get_config().pop("logging")
        with pytest.raises(ConfigurationError) as info:
            validate_config()
        assert "logging" in info.value.message


class TestLogger:
    def test_debug_is_gated(self, capsys):
        log = Logger(debug_mode=False)
        log.debug("hidden {}", 1)
        log.debug_mode = True
        log.debug("shown {}", 2)
        log.warning("careful")
        err = capsys.readouterr().err
        assert "hidden" not in err
        assert "shown 2" in err
        assert "warning: careful" in err
