"""Settings and environment overrides."""
from hexlap.config import Settings, get_settings


def test_defaults():
    settings = Settings()
    assert settings.VERTEX_BUDGET == 1_000_000
    assert settings.MERGE_TOLERANCE == 1e-7
    assert settings.LOG_LEVEL == "WARNING"
    assert settings.TAU_EXACT_DIGITS == 4000


def test_environment_override(monkeypatch):
    monkeypatch.setenv("HEXLAP_VERTEX_BUDGET", "42")
    monkeypatch.setenv("HEXLAP_ROOT_GRID_POINTS", "500")
    settings = get_settings()
    assert settings.VERTEX_BUDGET == 42
    assert settings.ROOT_GRID_POINTS == 500


def test_settings_cached():
    assert get_settings() is get_settings()
