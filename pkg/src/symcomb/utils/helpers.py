from __future__ import annotations

import json
from pathlib import Path
from typing import Any, Dict, List, Optional, Tuple, Union

from ..exceptions import InputFormatError
from ..models.complex import SimplicialComplex
from ..models.cover import WeightedComplex
from ..models.monomial import MonomialIdeal
from ..models.polynomial import Polynomial, parse_ideal_text
from .logger import setup_logger

logger = setup_logger(__name__)

PathLike = Union[str, Path]


def read_text(path: PathLike) -> str:
    try:
        return Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InputFormatError(f"cannot read {path}: {exc}") from exc


def load_json(path: PathLike) -> Dict[str, Any]:
    text = read_text(path)
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputFormatError(f"{path} is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise InputFormatError(f"{path} must hold a JSON object")
    return data


def complex_from_payload(data: Dict[str, Any]) -> SimplicialComplex:
    """Facet lists are normalized, so non-maximal members are dropped."""
    from ..simplicial import from_facets

    payload = data.get("complex", data)
    try:
        n = int(payload["n"])
        sets = [[int(v) for v in facet] for facet in payload["facets"]]
    except (KeyError, TypeError, ValueError) as exc:
        raise InputFormatError(f"bad complex payload: {exc}") from exc
    return from_facets(n, sets)


def load_complex(path: PathLike) -> SimplicialComplex:
    return complex_from_payload(load_json(path))


def load_weighted_complex(path: PathLike) -> WeightedComplex:
    """Accepts a bare complex (canonical weights) or {"complex": ..., "weights": ...}."""
    data = load_json(path)
    complex_ = complex_from_payload(data)
    raw = data.get("weights")
    if raw is None:
        return WeightedComplex.canonical(complex_)
    try:
        return WeightedComplex.from_dict({"complex": complex_.to_dict(), "weights": raw})
    except ValueError as exc:
        raise InputFormatError(str(exc)) from exc


def load_ideal(path: PathLike) -> MonomialIdeal:
    data = load_json(path)
    try:
        return MonomialIdeal.from_dict(data)
    except InputFormatError:
        raise
    except ValueError as exc:
        raise InputFormatError(f"bad ideal in {path}: {exc}") from exc


def load_polynomials(path: PathLike, n: Optional[int] = None) -> Tuple[int, List[Polynomial]]:
    """Read a line-separated polynomial file."""
    n, polys = parse_ideal_text(read_text(path), n)
    logger.debug("Loaded %s polynomials in %s variables from %s", len(polys), n, path)
    return n, polys


def parse_int_list(text: Optional[str]) -> List[int]:
    if text is None or not str(text).strip():
        return []
    try:
        return [int(part) for part in str(text).replace(" ", "").split(",") if part]
    except ValueError as exc:
        raise InputFormatError(f"expected comma-separated integers, got {text!r}") from exc


def write_output(path: PathLike, text: str) -> None:
    target = Path(path)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text + ("" if text.endswith("\n") else "\n"), encoding="utf-8")
    logger.info("Report written to [bold]%s[/bold]", target)
