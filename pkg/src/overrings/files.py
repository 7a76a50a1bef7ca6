"""JSON config, system and report files.

Config::

    {"group": {"rank": 1, "torsion": []},
     "kept_classes": [[-1]],
     "inverted_classes": [[2], [3]],
     "finitely_generated": false}            # optional

Classes use the flat encoding: free coordinates first, then torsion residues.

System::

    {"coeffs": [[1, 1, -2]], "row_moduli": [0], "var_domains": ["nonneg", "nonneg", "nonneg"],
     "target": [0]}

Only ``coeffs`` is required (plus ``num_vars`` when there are no rows).
"""
from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .abelian import FgAbelianGroup
from .dedekind import OverringConfig
from .diophantine import FREE_INTEGER, NONNEGATIVE, LinearSystem
from .errors import ConfigError, OverringError

REPORT_MARKER = "--- machine-readable ---"


def load_json(path: str | Path) -> Any:
    text = Path(path).read_text()
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}:{exc.lineno}:{exc.colno}", exc.msg) from None


def _int(value, where: str) -> int:
    if isinstance(value, bool) or not isinstance(value, int):
        raise ConfigError(where, f"expected an integer, got {value!r}")
    return value


def _int_list(value, where: str, length: int | None = None) -> list[int]:
    if not isinstance(value, list):
        raise ConfigError(where, f"expected a list of integers, got {value!r}")
    out = [_int(v, f"{where}[{i}]") for i, v in enumerate(value)]
    if length is not None and len(out) != length:
        raise ConfigError(where, f"expected {length} integers, got {len(out)}")
    return out


def _object(data, where: str) -> dict:
    if not isinstance(data, dict):
        raise ConfigError(where, f"expected an object, got {type(data).__name__}")
    return data


def parse_group(data: Any, where: str = "group") -> FgAbelianGroup:
    data = _object(data, where)
    rank = _int(data.get("rank", 0), f"{where}.rank")
    torsion = _int_list(data.get("torsion", []), f"{where}.torsion")
    try:
        return FgAbelianGroup(rank, tuple(torsion))
    except OverringError as exc:
        raise ConfigError(where, str(exc)) from None


def parse_config(data: Any) -> OverringConfig:
    data = _object(data, "config")
    unknown = set(data) - {"group", "kept_classes", "inverted_classes", "finitely_generated"}
    if unknown:
        raise ConfigError(sorted(unknown)[0], "unknown field")
    if "group" not in data:
        raise ConfigError("group", "missing field")
    G = parse_group(data["group"])
    sides = {}
    for side in ("kept_classes", "inverted_classes"):
        rows = data.get(side, [])
        if not isinstance(rows, list):
            raise ConfigError(side, "expected a list of classes")
        sides[side] = tuple(
            G.element(_int_list(row, f"{side}[{i}]", G.ngens)) for i, row in enumerate(rows)
        )
    fg = data.get("finitely_generated")
    if fg is not None and not isinstance(fg, bool):
        raise ConfigError("finitely_generated", f"expected true/false, got {fg!r}")
    return OverringConfig(G, sides["kept_classes"], sides["inverted_classes"], fg)


def load_config(path: str | Path) -> OverringConfig:
    data = load_json(path)
    try:
        return parse_config(data)
    except ConfigError as exc:
        raise ConfigError(f"{path}: {exc.location}", exc.message) from None


def config_to_json(config: OverringConfig) -> str:
    return json.dumps(config.to_dict())


def parse_system(data: Any) -> LinearSystem:
    data = _object(data, "system")
    if "coeffs" not in data:
        raise ConfigError("coeffs", "missing field")
    rows = data["coeffs"]
    if not isinstance(rows, list):
        raise ConfigError("coeffs", "expected a list of rows")
    num_vars = data.get("num_vars")
    if num_vars is None:
        if not rows:
            raise ConfigError("num_vars", "required when coeffs is empty")
        num_vars = len(rows[0]) if isinstance(rows[0], list) else 0
    num_vars = _int(num_vars, "num_vars")
    coeffs = [_int_list(r, f"coeffs[{i}]", num_vars) for i, r in enumerate(rows)]
    p = len(coeffs)
    moduli = _int_list(data.get("row_moduli", [0] * p), "row_moduli", p)
    for i, d in enumerate(moduli):
        if d != 0 and d < 2:
            raise ConfigError(f"row_moduli[{i}]", f"must be 0 or >= 2, got {d}")
    domains = data.get("var_domains", [NONNEGATIVE] * num_vars)
    if not isinstance(domains, list) or len(domains) != num_vars:
        raise ConfigError("var_domains", f"expected a list of {num_vars} domains")
    for i, dom in enumerate(domains):
        if dom not in (NONNEGATIVE, FREE_INTEGER):
            raise ConfigError(f"var_domains[{i}]", f"expected {NONNEGATIVE!r} or {FREE_INTEGER!r}, got {dom!r}")
    target = _int_list(data.get("target", [0] * p), "target", p)
    return LinearSystem(
        tuple(map(tuple, coeffs)), num_vars, tuple(moduli), tuple(domains), tuple(target)
    )


def load_system(path: str | Path) -> LinearSystem:
    data = load_json(path)
    try:
        return parse_system(data)
    except ConfigError as exc:
        raise ConfigError(f"{path}: {exc.location}", exc.message) from None


def load_report(path: str | Path) -> dict:
    """Report dict from a file holding either bare JSON or full ``analyze`` output."""
    text = Path(path).read_text()
    if REPORT_MARKER in text:
        text = text.split(REPORT_MARKER, 1)[1]
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ConfigError(f"{path}:{exc.lineno}:{exc.colno}", exc.msg) from None
    return _object(data, "report")
