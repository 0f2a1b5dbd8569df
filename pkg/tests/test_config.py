import pytest
from pydantic import ValidationError

from src.core.config import DEFAULT_SEED, AppConfig, Config
from src.core.errors import BranchCutError, DomainError, InvalidGeneratorError, MolnarError
from src.core.report import Finding, Severity, ValidationReport


def test_defaults_without_environment():
    config = Config.load()
    assert config.seed == DEFAULT_SEED
    assert config.log_level == "INFO"
    assert config.log_file is None
    assert config.tolerance == 1e-10


def test_environment_overrides(monkeypatch, tmp_path):
    log_file = tmp_path / "logs" / "molnar.log"
    monkeypatch.setenv("MOLNAR_SEED", "42")
    monkeypatch.setenv("MOLNAR_LOG_LEVEL", "debug")
    monkeypatch.setenv("MOLNAR_LOG_FILE", str(log_file))
    monkeypatch.setenv("MOLNAR_TOLERANCE", "1e-12")

    config = Config.load()
    assert config.seed == 42
    assert config.log_level == "DEBUG"
    assert config.tolerance == 1e-12
    assert log_file.parent.is_dir()


def test_get_caches_until_reset(monkeypatch):
    first = Config.get()
    monkeypatch.setenv("MOLNAR_SEED", "5")
    assert Config.get() is first
    Config.reset()
    assert Config.get().seed == 5


def test_singleton():
    assert Config() is Config()


def test_rejects_bad_values():
    with pytest.raises(ValidationError):
        AppConfig(log_level="LOUD")
    with pytest.raises(ValidationError):
        AppConfig(tolerance=0.0)


def test_error_hierarchy():
    assert issubclass(BranchCutError, DomainError)
    assert issubclass(DomainError, ValueError)
    assert issubclass(InvalidGeneratorError, MolnarError)
    assert not issubclass(InvalidGeneratorError, ValueError)


def test_validation_report_render():
    report = ValidationReport(subject="demo")
    assert report.is_valid
    assert "no violations" in report.render()

    report.add(Finding(check_name="hint", severity=Severity.WARNING, message="close to the bound"))
    assert report.is_valid

    report.add(Finding(check_name="sup_norm", message="too large", witness=1.5))
    assert not report.is_valid
    assert report.violated_checks == ["sup_norm"]
    assert "[sup_norm] too large at 1.5" in report.render()


def test_invalid_generator_error_carries_report():
    report = ValidationReport(subject="generator")
    report.add(Finding(check_name="sup_norm", message="too large"))
    error = InvalidGeneratorError(report)
    assert error.report is report
    assert "sup_norm" in str(error)
