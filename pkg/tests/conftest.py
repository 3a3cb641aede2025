import pytest

ENV_VARS = (
    "POLYHULL_MEM_LIMIT_BYTES",
    "POLYHULL_POINT_LIMIT",
    "POLYHULL_CUT_NODE_LIMIT",
    "POLYHULL_WORKERS",
    "POLYHULL_LOG_LEVEL",
    "POLYHULL_DEFAULT_ALGO",
)


@pytest.fixture(autouse=True)
def clean_env(monkeypatch):
    for var in ENV_VARS:
        monkeypatch.delenv(var, raising=False)
