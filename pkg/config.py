import logging
import os

ALGORITHMS = ("dd", "bb")
LOG_LEVELS = ("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL")

DEFAULT_CUT_NODE_LIMIT = 25
DEFAULT_WORKERS = 1
DEFAULT_LOG_LEVEL = "WARNING"
DEFAULT_ALGORITHM = "dd"

# Rough footprint of one enumerated lattice point (tuple of small ints).
BYTES_PER_POINT = 64

INTEGER_ENV_VARS = [
    "POLYHULL_MEM_LIMIT_BYTES",
    "POLYHULL_POINT_LIMIT",
    "POLYHULL_CUT_NODE_LIMIT",
    "POLYHULL_WORKERS",
]


def _get_int(name: str) -> int | None:
    value = os.environ.get(name, "").strip()
    if not value:
        return None
    return int(value)


def get_mem_limit_bytes() -> int | None:
    return _get_int("POLYHULL_MEM_LIMIT_BYTES")


def get_point_limit() -> int | None:
    """Return the cap on enumerated lattice points, if any.

    An explicit POLYHULL_POINT_LIMIT wins; otherwise the cap is derived from
    POLYHULL_MEM_LIMIT_BYTES.
    """
    explicit = _get_int("POLYHULL_POINT_LIMIT")
    if explicit is not None:
        return explicit
    mem = get_mem_limit_bytes()
    if mem is None:
        return None
    return max(mem // BYTES_PER_POINT, 0)


def get_cut_node_limit() -> int:
    value = _get_int("POLYHULL_CUT_NODE_LIMIT")
    return DEFAULT_CUT_NODE_LIMIT if value is None else value


def get_worker_count() -> int:
    value = _get_int("POLYHULL_WORKERS")
    return DEFAULT_WORKERS if value is None else max(value, 1)


def get_log_level() -> str:
    return os.environ.get("POLYHULL_LOG_LEVEL", "").strip().upper() or (
        DEFAULT_LOG_LEVEL
    )


def get_default_algorithm() -> str:
    return os.environ.get("POLYHULL_DEFAULT_ALGO", "").strip().lower() or (
        DEFAULT_ALGORITHM
    )


def get_invalid_env_vars() -> list[str]:
    """Return the list of env vars that are set but cannot be parsed."""
    invalid = []
    for var in INTEGER_ENV_VARS:
        try:
            value = _get_int(var)
        except ValueError:
            invalid.append(var)
            continue
        if value is not None and value < 0:
            invalid.append(var)

    if get_log_level() not in LOG_LEVELS:
        invalid.append("POLYHULL_LOG_LEVEL")

    if get_default_algorithm() not in ALGORITHMS:
        invalid.append("POLYHULL_DEFAULT_ALGO")

    return invalid


def configure_logging() -> None:
    level = get_log_level()
    if level not in LOG_LEVELS:
        level = DEFAULT_LOG_LEVEL
    logging.basicConfig(
        level=level,
        format="%(asctime)s %(levelname)s %(name)s: %(message)s",
    )
