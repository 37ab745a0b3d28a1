"""Arrangements shipped with the package, regenerated by scripts/build_corpus.py."""

from __future__ import annotations

import json
from importlib import resources

from ..geometry import Arrangement


def names() -> list[str]:
    return sorted(p.name[:-5] for p in resources.files(__name__).iterdir() if p.name.endswith(".json"))


def path(name: str):
    return resources.files(__name__) / f"{name}.json"


def document(name: str) -> dict:
    return json.loads(path(name).read_text())


def load(name: str) -> Arrangement:
    return Arrangement.from_json(document(name))


def family(fam: str) -> list[str]:
    return [n for n in names() if document(n).get("family") == fam]
