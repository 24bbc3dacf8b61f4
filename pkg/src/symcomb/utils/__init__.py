from .helpers import (
    complex_from_payload,
    load_complex,
    load_ideal,
    load_json,
    load_polynomials,
    load_weighted_complex,
    parse_int_list,
    write_output,
)
from .logger import set_log_level, setup_logger

__all__ = [
    "setup_logger",
    "set_log_level",
    "load_json",
    "load_complex",
    "load_weighted_complex",
    "load_ideal",
    "load_polynomials",
    "complex_from_payload",
    "parse_int_list",
    "write_output",
]
