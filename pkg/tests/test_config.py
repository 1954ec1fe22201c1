"""
Tests for environment-driven settings
"""

import logging
import logging.handlers
import sys
from unittest.mock import patch

import pytest
from pydantic import ValidationError

from ncmod.config import Settings, load_settings, settings
from ncmod.utils.logging import setup_logging


class TestSettings:
    """Test Settings validation"""

    def test_defaults(self, monkeypatch):
        monkeypatch.delenv("NCMOD_SEED", raising=False)
        s = Settings(_env_file=None)
        assert s.seed is None
        assert s.default_trials == 100
        assert s.denominators == [1, 2]
        assert s.log_level == "WARNING"

    def test_environment(self, monkeypatch):
        monkeypatch.setenv("NCMOD_SEED", "2024")
        monkeypatch.setenv("NCMOD_DENOMINATORS", "1, 3,5")
        monkeypatch.setenv("NCMOD_LOG_LEVEL", "debug")
        s = Settings(_env_file=None)
        assert s.seed == 2024
        assert s.denominators == [1, 3, 5]
        assert s.log_level == "DEBUG"

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"workers": 0},
            {"default_trials": 0},
            {"coef_min": 2, "coef_max": 1},
            {"denominators": "0,1"},
            {"denominators": []},
            {"log_level": "chatty"},
        ],
    )
    def test_invalid(self, kwargs):
        with pytest.raises(ValidationError):
            Settings(_env_file=None, **kwargs)

    def test_bad_environment_falls_back_to_defaults(self, monkeypatch):
        monkeypatch.setenv("NCMOD_SEED", "abc")
        with patch("ncmod.config.settings_errors", []) as errors:
            loaded = load_settings()
        assert loaded.seed is None
        assert loaded.default_trials == 100
        assert len(errors) == 1
        assert errors[0].startswith("NCMOD_SEED: ")


class TestLogging:
    """Test logging setup"""

    def test_console_on_stderr(self):
        setup_logging("info")
        root = logging.getLogger()
        assert root.level == logging.INFO
        assert len(root.handlers) == 1
        assert root.handlers[0].stream is sys.stderr

    def test_rotating_file(self, tmp_path):
        log_file = tmp_path / "logs" / "ncmod.log"
        with patch.object(settings, "log_file", str(log_file)):
            setup_logging()
        root = logging.getLogger()
        assert any(isinstance(h, logging.handlers.RotatingFileHandler) for h in root.handlers)
        assert log_file.parent.is_dir()
        for handler in root.handlers:
            handler.close()
        root.handlers.clear()
