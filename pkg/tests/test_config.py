from config import (
    get_cut_node_limit,
    get_default_algorithm,
    get_invalid_env_vars,
    get_log_level,
    get_mem_limit_bytes,
    get_point_limit,
    get_worker_count,
)


class TestPointLimit:
    def test_returns_none_by_default(self):
        assert get_point_limit() is None
        assert get_mem_limit_bytes() is None

    def test_explicit_limit(self, monkeypatch):
        monkeypatch.setenv("POLYHULL_POINT_LIMIT", "500")
        assert get_point_limit() == 500

    def test_derived_from_memory_limit(self, monkeypatch):
        monkeypatch.setenv("POLYHULL_MEM_LIMIT_BYTES", "6400")
        assert get_point_limit() == 100

    def test_explicit_limit_wins(self, monkeypatch):
        monkeypatch.setenv("POLYHULL_MEM_LIMIT_BYTES", "6400")
        monkeypatch.setenv("POLYHULL_POINT_LIMIT", "7")
        assert get_point_limit() == 7

    def test_empty_string_is_unset(self, monkeypatch):
        monkeypatch.setenv("POLYHULL_POINT_LIMIT", "  ")
        assert get_point_limit() is None


class TestDefaults:
    def test_cut_node_limit(self, monkeypatch):
        assert get_cut_node_limit() == 25
        monkeypatch.setenv("POLYHULL_CUT_NODE_LIMIT", "12")
        assert get_cut_node_limit() == 12

    def test_worker_count_at_least_one(self, monkeypatch):
        assert get_worker_count() == 1
        monkeypatch.setenv("POLYHULL_WORKERS", "0")
        assert get_worker_count() == 1
        monkeypatch.setenv("POLYHULL_WORKERS", "4")
        assert get_worker_count() == 4

    def test_log_level_case_insensitive(self, monkeypatch):
        assert get_log_level() == "WARNING"
        monkeypatch.setenv("POLYHULL_LOG_LEVEL", "debug")
        assert get_log_level() == "DEBUG"

    def test_default_algorithm(self, monkeypatch):
        assert get_default_algorithm() == "dd"
        monkeypatch.setenv("POLYHULL_DEFAULT_ALGO", "BB")
        assert get_default_algorithm() == "bb"


class TestGetInvalidEnvVars:
    def test_returns_empty_when_unset(self):
        assert get_invalid_env_vars() == []

    def test_returns_empty_when_all_valid(self, monkeypatch):
        monkeypatch.setenv("POLYHULL_POINT_LIMIT", "1000")
        monkeypatch.setenv("POLYHULL_WORKERS", "2")
        monkeypatch.setenv("POLYHULL_LOG_LEVEL", "info")
        monkeypatch.setenv("POLYHULL_DEFAULT_ALGO", "bb")
        assert get_invalid_env_vars() == []

    def test_includes_non_integer_limit(self, monkeypatch):
        monkeypatch.setenv("POLYHULL_MEM_LIMIT_BYTES", "1GB")
        assert "POLYHULL_MEM_LIMIT_BYTES" in get_invalid_env_vars()

    def test_includes_negative_limit(self, monkeypatch):
        monkeypatch.setenv("POLYHULL_POINT_LIMIT", "-5")
        assert get_invalid_env_vars() == ["POLYHULL_POINT_LIMIT"]

    def test_includes_unknown_algorithm(self, monkeypatch):
        monkeypatch.setenv("POLYHULL_DEFAULT_ALGO", "lrs")
        assert get_invalid_env_vars() == ["POLYHULL_DEFAULT_ALGO"]

    def test_includes_unknown_log_level(self, monkeypatch):
        monkeypatch.setenv("POLYHULL_LOG_LEVEL", "loud")
        assert get_invalid_env_vars() == ["POLYHULL_LOG_LEVEL"]
