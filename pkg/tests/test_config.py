import pytest

from core.config_manager import ConfigManager
from core.constants import CAP_ENV_VAR, DEFAULT_ENUMERATION_CAP
from core.errors import FormatError
from utils.config_validator import ConfigValidator
from utils.helpers import format_duration, parse_digit_string, parse_int_list
from utils.validators import (
    validate_cap,
    validate_circulant_size,
    validate_dimensions,
    validate_exponents,
    validate_file_path,
    validate_message,
    validate_prime,
)


@pytest.fixture
def manager(tmp_path, monkeypatch):
    monkeypatch.delenv(CAP_ENV_VAR, raising=False)
    return ConfigManager(config_dir=tmp_path, env_file=tmp_path / "missing.env")


class TestConfigManager:
    def test_defaults(self, manager):
        config = manager.get_default_config()
        assert config["enumeration_cap"] == DEFAULT_ENUMERATION_CAP
        assert config["variant"] == "c1"
        assert manager.get_enumeration_cap() == DEFAULT_ENUMERATION_CAP

    def test_save_and_load(self, manager, tmp_path):
        path = manager.save_config("run", {**manager.get_default_config(), "chunk_size": 128})
        assert path == tmp_path / "run.json"
        assert manager.list_configs() == ["run"]
        loaded = manager.load_config("run")
        assert loaded["chunk_size"] == 128
        assert manager.get_chunk_size() == 128

    def test_unknown_keys_are_dropped(self, manager, tmp_path):
        (tmp_path / "extra.json").write_text('{"colour": "blue", "chunk_size": 64}', encoding="utf-8")
        loaded = manager.load_config("extra")
        assert "colour" not in loaded
        assert loaded["chunk_size"] == 64

    def test_load_errors(self, manager, tmp_path):
        with pytest.raises(FileNotFoundError):
            manager.load_config("absent")
        (tmp_path / "broken.json").write_text("{not json", encoding="utf-8")
        with pytest.raises(FormatError):
            manager.load_config("broken")
        (tmp_path / "list.json").write_text("[1, 2]", encoding="utf-8")
        with pytest.raises(FormatError):
            manager.load_config("list")

    def test_cap_precedence(self, manager, tmp_path, monkeypatch):
        (tmp_path / "small.json").write_text('{"enumeration_cap": 100}', encoding="utf-8")
        manager.load_config("small")
        assert manager.get_enumeration_cap() == 100
        monkeypatch.setenv(CAP_ENV_VAR, "50")
        assert manager.get_enumeration_cap() == 50
        assert manager.get_enumeration_cap(override=7) == 7

    @pytest.mark.parametrize("value", ["many", "0", "-3"])
    def test_bad_env_cap(self, manager, monkeypatch, value):
        monkeypatch.setenv(CAP_ENV_VAR, value)
        with pytest.raises(FormatError):
            manager.get_enumeration_cap()

    def test_dotenv_file(self, tmp_path, monkeypatch):
        # register the variable so teardown removes what load_dotenv sets
        monkeypatch.setenv(CAP_ENV_VAR, "1")
        monkeypatch.delenv(CAP_ENV_VAR)
        env_file = tmp_path / ".env"
        env_file.write_text(f"{CAP_ENV_VAR}=321\n", encoding="utf-8")
        manager = ConfigManager(config_dir=tmp_path, env_file=env_file)
        assert manager.get_enumeration_cap() == 321


class TestConfigValidator:
    def test_defaults_are_valid(self, manager):
        is_valid, errors, warnings = ConfigValidator().validate_full_config(manager.get_default_config())
        assert is_valid and errors == [] and warnings == []

    def test_errors_and_warnings(self, manager):
        config = {**manager.get_default_config(), "enumeration_cap": 0, "variant": "c3",
                  "log_level": "LOUD", "log_to_file": "yes"}
        is_valid, errors, warnings = ConfigValidator().validate_full_config(config)
        assert not is_valid
        assert len(errors) == 3
        assert warnings == ["log_to_file should be true or false"]

    def test_large_cap_warning(self, manager):
        config = {**manager.get_default_config(), "enumeration_cap": 2 ** 30}
        is_valid, _, warnings = ConfigValidator().validate_full_config(config)
        assert is_valid and len(warnings) == 1

    def test_report(self, manager):
        report = ConfigValidator().generate_validation_report(manager.get_default_config())
        assert "Configuration is valid" in report
        assert f"Enumeration cap: {DEFAULT_ENUMERATION_CAP}" in report


class TestValidators:
    def test_prime(self):
        assert validate_prime(3) == (True, "")
        assert not validate_prime(9)[0]
        assert not validate_prime(1)[0]

    def test_circulant_size(self):
        assert validate_circulant_size(2, 7)[0]
        assert not validate_circulant_size(2, 4)[0]
        assert not validate_circulant_size(2, 1)[0]

    def test_dimensions(self):
        assert validate_dimensions(2, 9, 6, 2)[0]
        ok, message = validate_dimensions(2, 9, 7, 2)
        assert not ok and "m_L=6" in message
        assert not validate_dimensions(2, 9, 3, 4)[0]

    def test_exponents(self):
        assert validate_exponents([0, 1, 2], 7, 3)[0]
        assert not validate_exponents([0, 1], 7, 3)[0]
        assert not validate_exponents([0, 1, 7], 7, 3)[0]
        assert not validate_exponents([0, 1, 1], 7, 3)[0]

    def test_message(self):
        assert validate_message("000001", 2, 6)[0]
        assert not validate_message("00001", 2, 6)[0]
        assert not validate_message("000201", 2, 6)[0]
        assert not validate_message("", 2, 6)[0]

    def test_file_path(self, tmp_path):
        existing = tmp_path / "a.txt"
        existing.write_text("x", encoding="utf-8")
        assert validate_file_path(str(existing))[0]
        assert not validate_file_path(str(tmp_path / "b.txt"))[0]
        assert not validate_file_path(str(tmp_path))[0]
        assert validate_file_path(str(tmp_path / "new.txt"), must_exist=False)[0]
        assert not validate_file_path("  ")[0]

    def test_cap(self):
        assert validate_cap(1)[0]
        assert not validate_cap(0)[0]


class TestHelpers:
    def test_format_duration(self):
        assert format_duration(0.0412) == "41.2ms"
        assert format_duration(5.5) == "5.5s"
        assert format_duration(125.0) == "2m 5.0s"

    def test_parsers(self):
        assert parse_int_list("0, 1,2") == [0, 1, 2]
        assert parse_digit_string("0101") == [0, 1, 0, 1]
        with pytest.raises(FormatError):
            parse_int_list("0,a")
        with pytest.raises(FormatError):
            parse_digit_string("01-1")
