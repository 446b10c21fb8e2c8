"""
Report Serialization

Machine-readable reports for every MinRep command. Rationals are written as
"p/q" strings, never floats; objects that know their own JSON shape expose a
``to_json()`` method.

Copyright 2026 MinRep Toolbox contributors

Licensed under the Apache License, Version 2.0
"""

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict

SCHEMA_VERSION = "1.0"

STATUS_PASS = "pass"
STATUS_FAIL = "fail"
STATUS_INFO = "info"

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_VERIFICATION = 2


def format_rational(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(text: str) -> Fraction:
    """Parse "p", "p/q" or a finite decimal such as "2.5" exactly."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as e:
        raise ValueError(f"not a rational number: {text!r}") from e


def to_json_value(obj: Any) -> Any:
    if isinstance(obj, bool) or obj is None or isinstance(obj, str):
        return obj
    if isinstance(obj, int):
        return obj
    if isinstance(obj, Fraction):
        return format_rational(obj)
    if hasattr(obj, "to_json"):
        return to_json_value(obj.to_json())
    if isinstance(obj, dict):
        return {str(k): to_json_value(v) for k, v in obj.items()}
    if isinstance(obj, (set, frozenset)):
        return sorted((to_json_value(v) for v in obj), key=lambda v: json.dumps(v, sort_keys=True))
    if isinstance(obj, (list, tuple)):
        return [to_json_value(v) for v in obj]
    raise TypeError(f"cannot serialize {type(obj).__name__}")


@dataclass
class Report:
    command: str
    parameters: Dict[str, Any]
    status: str
    payload: Dict[str, Any] = field(default_factory=dict)
    schema_version: str = SCHEMA_VERSION

    @property
    def exit_code(self) -> int:
        return EXIT_VERIFICATION if self.status == STATUS_FAIL else EXIT_OK

    def to_json(self):
        return {
            "schema_version": self.schema_version,
            "command": self.command,
            "parameters": self.parameters,
            "status": self.status,
            "payload": self.payload,
        }

    def dumps(self) -> str:
        return json.dumps(to_json_value(self), indent=2, sort_keys=True, ensure_ascii=False)

    def render_text(self) -> str:
        data = to_json_value(self.payload)
        lines = ["=" * 60, f"{self.command}  {_format_params(self.parameters)}", "=" * 60]
        for key in sorted(data):
            lines.append(f"{key}: {_compact(data[key])}")
        mark = {"pass": "✓", "fail": "✗"}.get(self.status, "•")
        lines.append("=" * 60)
        lines.append(f"SUMMARY: {mark} {self.status}")
        return "\n".join(lines)


def _format_params(params: Dict[str, Any]) -> str:
    values = to_json_value(params)
    return " ".join(f"{k}={values[k]}" for k in sorted(values))


def _compact(value) -> str:
    text = json.dumps(value, sort_keys=True, ensure_ascii=False)
    return text if len(text) <= 400 else text[:397] + "..."
