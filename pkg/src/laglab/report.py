"""Byte-stable JSON report emission.

Floats are serialized with 17 significant digits so regression fixtures
can be compared byte for byte; the schema tag is versioned.
"""
from __future__ import annotations

import json

SCHEMA = "lagrangian-lab/1"


def _fmt(obj) -> str:
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, float):
        return format(obj, ".17g")
    if isinstance(obj, int):
        return str(obj)
    if obj is None:
        return "null"
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        items = ", ".join(f"{json.dumps(str(k))}: {_fmt(v)}"
                          for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(_fmt(v) for v in obj) + "]"
    raise TypeError(f"cannot serialize {type(obj)!r}")


def dumps(obj: dict, schema: bool = True) -> str:
    if schema and isinstance(obj, dict) and "schema" not in obj:
        obj = {"schema": SCHEMA, **obj}
    return _fmt(obj) + "\n"
