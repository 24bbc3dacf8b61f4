from __future__ import annotations

import os
from dataclasses import dataclass
from typing import Optional

from dotenv import load_dotenv

load_dotenv()


@dataclass(frozen=True)
class Settings:
    var_cap: int = 16
    groebner_degree_cap: int = 30
    field_char: int = 0
    max_workers: int = 4
    default_seed: int = 0
    oracle_max_td: int = 12
    verify_groebner: bool = True

    @classmethod
    def from_env(cls) -> "Settings":
        return cls(
            var_cap=_parse_positive_int(os.getenv("SYMCOMB_VAR_CAP"), 16),
            groebner_degree_cap=_parse_positive_int(os.getenv("SYMCOMB_GB_DEGREE_CAP"), 30),
            field_char=_parse_field_char(os.getenv("SYMCOMB_FIELD_CHAR")),
            max_workers=_parse_positive_int(os.getenv("SYMCOMB_MAX_WORKERS"), 4),
            default_seed=_parse_optional_int(os.getenv("SYMCOMB_SEED")) or 0,
            oracle_max_td=_parse_positive_int(os.getenv("SYMCOMB_ORACLE_MAX_TD"), 12),
            verify_groebner=_parse_bool(os.getenv("SYMCOMB_VERIFY_GB"), True),
        )


def _parse_optional_int(value: Optional[str]) -> Optional[int]:
    if value is None or value.strip() == "":
        return None
    try:
        return int(value)
    except ValueError:
        return None


def _parse_positive_int(value: Optional[str], default: int) -> int:
    parsed = _parse_optional_int(value)
    if parsed is None or parsed < 1:
        return default
    return parsed


def _parse_field_char(value: Optional[str]) -> int:
    parsed = _parse_optional_int(value)
    if parsed is None or parsed < 0:
        return 0
    return parsed


def _parse_bool(value: Optional[str], default: bool) -> bool:
    if value is None or value.strip() == "":
        return default
    return value.strip().lower() in {"1", "true", "yes", "on"}


settings = Settings.from_env()

VAR_CAP = settings.var_cap
GROEBNER_DEGREE_CAP = settings.groebner_degree_cap
FIELD_CHAR = settings.field_char
MAX_WORKERS = settings.max_workers
DEFAULT_SEED = settings.default_seed
ORACLE_MAX_TD = settings.oracle_max_td
VERIFY_GROEBNER = settings.verify_groebner
