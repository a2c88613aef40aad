from __future__ import annotations

import os
from dataclasses import dataclass
from pathlib import Path

from .errors import InvalidInput


DEFAULT_CATALOG_FILE = "selfdual_catalog.jsonl"
DEFAULT_ORACLE_MAX_DIVISORS = 10**6
DEFAULT_ORACLE_MAX_N = 512
DEFAULT_ENUMERATION_CHECK_LIMIT = 4096
DEFAULT_CATALOG_GENERATOR_LIMIT = 256
ENV_FILE = ".env"

CATALOG_ENV = "SELFDUAL_CATALOG"
ORACLE_MAX_DIVISORS_ENV = "SELFDUAL_ORACLE_MAX_DIVISORS"
ORACLE_MAX_N_ENV = "SELFDUAL_ORACLE_MAX_N"
ENUMERATION_CHECK_LIMIT_ENV = "SELFDUAL_ENUMERATION_CHECK_LIMIT"


@dataclass(frozen=True)
class OracleLimits:
    max_divisors: int = DEFAULT_ORACLE_MAX_DIVISORS
    max_n: int = DEFAULT_ORACLE_MAX_N


def load_env_from_repo_root(filename: str = ENV_FILE, verbose: bool = False) -> str | None:
    cwd = Path.cwd().resolve()
    for parent in [cwd] + list(cwd.parents):
        env_path = parent / filename
        if env_path.exists():
            with env_path.open("r", encoding="utf-8") as f:
                for line in f:
                    line = line.strip()
                    if not line or line.startswith("#") or "=" not in line:
                        continue
                    key, value = line.split("=", 1)
                    os.environ.setdefault(key.strip(), value.strip())

            if verbose:
                print(f"[ENV] Loaded environment variables from: {env_path}")
            return str(env_path)

    if verbose:
        print("[ENV] No .env file found in directory hierarchy.")
    return None


def _env_int(name: str, default: int) -> int:
    raw = os.getenv(name)
    if raw is None or raw.strip() == "":
        return default
    try:
        value = int(raw)
    except ValueError as e:
        raise InvalidInput(f"{name} must be an integer, got {raw!r}") from e
    if value < 1:
        raise InvalidInput(f"{name} must be positive, got {value}")
    return value


def default_catalog_path() -> Path:
    return Path(os.getenv(CATALOG_ENV) or DEFAULT_CATALOG_FILE)


def oracle_limits() -> OracleLimits:
    return OracleLimits(
        max_divisors=_env_int(ORACLE_MAX_DIVISORS_ENV, DEFAULT_ORACLE_MAX_DIVISORS),
        max_n=_env_int(ORACLE_MAX_N_ENV, DEFAULT_ORACLE_MAX_N),
    )


def enumeration_check_limit() -> int:
    return _env_int(ENUMERATION_CHECK_LIMIT_ENV, DEFAULT_ENUMERATION_CHECK_LIMIT)
