"""Deterministic JSON serialization helpers shared by the CLI and scripts."""

from __future__ import annotations

import json
from pathlib import Path


def dump_json(data) -> str:
    """Canonical JSON text: sorted keys, two-space indent, trailing newline.

    Floats are rendered by Python's shortest-roundtrip repr, so identical
    inputs always produce byte-identical output."""
    return json.dumps(data, indent=2, sort_keys=True, ensure_ascii=False) + "\n"


def write_json(path: str | Path, data) -> None:
    Path(path).write_text(dump_json(data), encoding="utf-8")


def complex_to_json(z: complex) -> dict:
    return {"re": z.real, "im": z.imag}
