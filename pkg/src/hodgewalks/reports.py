"""Structured result documents.

Reports always serialize with the same top-level keys in the same order:
complex, betti, spectra, signed, orientable, walks, warnings. Checked
numeric results are stored as {"value": ..., "tolerance": ...} pairs so a
reader can see what each number was tested against.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

import numpy as np

from .complexes import SimplicialComplex

__all__ = ["Report", "checked", "complex_summary", "plain"]


def plain(obj):
    """Recursively convert numpy containers and scalars to JSON-safe types."""
    if isinstance(obj, np.ndarray):
        return [plain(x) for x in obj.tolist()]
    if isinstance(obj, (np.floating, np.integer)):
        return obj.item()
    if isinstance(obj, dict):
        return {k: plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [plain(x) for x in obj]
    return obj


def checked(value, tolerance: float) -> dict:
    return {"value": plain(value), "tolerance": tolerance}


@dataclass
class Report:
    complex: dict
    betti: dict | None = None
    spectra: dict | None = None
    signed: dict | None = None
    orientable: dict | None = None
    walks: dict | None = None
    warnings: list[str] = field(default_factory=list)

    def to_dict(self) -> dict:
        return {
            "complex": plain(self.complex),
            "betti": plain(self.betti),
            "spectra": plain(self.spectra),
            "signed": plain(self.signed),
            "orientable": plain(self.orientable),
            "walks": plain(self.walks),
            "warnings": list(self.warnings),
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2) + "\n"

    def to_text(self) -> str:
        lines: list[str] = []
        doc = self.to_dict()
        for key, value in doc.items():
            if value is None or (key == "warnings" and not value):
                continue
            _render(key, value, lines)
        return "\n".join(lines) + "\n"


def _render(prefix: str, value, lines: list[str]) -> None:
    if isinstance(value, dict):
        for k, v in value.items():
            _render(f"{prefix}.{k}", v, lines)
    elif isinstance(value, list) and any(isinstance(v, (dict, list)) for v in value):
        for i, v in enumerate(value):
            _render(f"{prefix}[{i}]", v, lines)
    elif isinstance(value, list):
        lines.append(f"{prefix}: {' '.join(_fmt(v) for v in value)}")
    else:
        lines.append(f"{prefix}: {_fmt(value)}")


def _fmt(v) -> str:
    if isinstance(v, float):
        return repr(v)
    return str(v)


def complex_summary(K: SimplicialComplex, name: str | None = None) -> dict:
    counts = {str(d): K.n_simplices(d) for d in range(K.dim + 1)}
    components = len(K.connected_components(0, "up")) if K.dim >= 1 else K.n_simplices(0)
    info = {
        "dim": K.dim,
        "counts": counts,
        "facets": len(K.facets()),
        "pure": K.is_pure(),
        "components": components,
    }
    if name is not None:
        info = {"name": name, **info}
    return info
