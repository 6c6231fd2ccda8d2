# ##############################################################################
#                                                                              #
#     Copyright (c) 2022 - 2023.                                               #
#     Haixing Hu, Qubit Co. Ltd.                                               #
#                                                                              #
#     All rights reserved.                                                     #
#                                                                              #
# ##############################################################################
import json
import math
from typing import Any, Dict, List

import numpy as np

from ..util.common_utils import complex_to_json
from .run_config import OutputFormat

SCHEMA_VERSION = "1"
"""
The version of the layout of the JSON reports.
"""

INDENT = 2


def to_plain(value: Any) -> Any:
    """
    Converts a report value to plain JSON data.

    Complex numbers become numbers or {"re", "im"} objects, numpy values become
    Python values, and non-finite floats become `None`.
    """
    if isinstance(value, dict):
        return {str(k): to_plain(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [to_plain(v) for v in value]
    if isinstance(value, np.ndarray):
        return to_plain(value.tolist())
    if isinstance(value, (bool, np.bool_)):
        return bool(value)
    if isinstance(value, (int, np.integer)):
        return int(value)
    if isinstance(value, (complex, np.complexfloating)):
        return to_plain(complex_to_json(value))
    if isinstance(value, (float, np.floating)):
        value = float(value)
        return value if math.isfinite(value) else None
    return value


class ReportRenderer:
    """
    Renders a report either as JSON or as aligned text.
    """

    def __init__(self, output_format: OutputFormat = OutputFormat.JSON) -> None:
        self._output_format = output_format

    def render(self, payload: Dict[str, Any]) -> str:
        data = to_plain(payload)
        match self._output_format:
            case OutputFormat.JSON:
                return json.dumps(data, indent=INDENT, ensure_ascii=False,
                                  allow_nan=False) + "\n"
            case OutputFormat.TEXT:
                return "\n".join(_text_lines(data, 0)) + "\n"
            case _:
                raise ValueError(f"Unsupported output format: {self._output_format}")


def _text_lines(data: Dict[str, Any], depth: int) -> List[str]:
    pad = " " * (INDENT * depth)
    width = max((len(k) for k in data), default=0)
    lines = []
    for key, value in data.items():
        if isinstance(value, dict) and value:
            lines.append(f"{pad}{key}:")
            lines.extend(_text_lines(value, depth + 1))
        elif _is_table(value):
            lines.append(f"{pad}{key}:")
            lines.extend(_table_lines(value, pad + " " * INDENT))
        else:
            lines.append(f"{pad}{key.ljust(width)}  {_cell(value)}")
    return lines


def _is_table(value: Any) -> bool:
    return (isinstance(value, list) and len(value) > 0
            and all(isinstance(row, dict) for row in value))


def _table_lines(rows: List[Dict[str, Any]], pad: str) -> List[str]:
    header: List[str] = []
    for row in rows:
        header.extend(k for k in row if k not in header)
    cells = [[_cell(row.get(k, "")) for k in header] for row in rows]
    widths = [max(len(h), *(len(r[i]) for r in cells)) for i, h in enumerate(header)]
    lines = [pad + "  ".join(h.ljust(w) for h, w in zip(header, widths))]
    for r in cells:
        lines.append(pad + "  ".join(c.ljust(w) for c, w in zip(r, widths)))
    return lines


def _cell(value: Any) -> str:
    if value is None:
        return "-"
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, (dict, list)):
        return json.dumps(value, ensure_ascii=False, separators=(",", ":"))
    return str(value)
