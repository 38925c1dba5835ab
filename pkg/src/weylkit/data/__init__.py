"""Example systems, graph-product specs and their certificates shipped with the package."""
from __future__ import annotations

import json
from importlib import resources


def _load(kind: str) -> dict[str, dict]:
    root = resources.files(__name__) / kind
    out = {}
    for entry in sorted(root.iterdir(), key=lambda p: p.name):
        if entry.name.endswith(".json"):
            out[entry.name[:-5]] = json.loads(entry.read_text(encoding="utf-8"))
    return out


def systems() -> dict[str, dict]:
    return _load("systems")


def graphs() -> dict[str, dict]:
    return _load("graphs")


def certificates() -> dict[str, dict]:
    return _load("certificates")


def certificate_text(name: str) -> str:
    return (resources.files(__name__) / "certificates" / f"{name}.json").read_text(encoding="utf-8")
