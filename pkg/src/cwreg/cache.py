"""Append-only JSON-lines cache of computed regularities."""
from __future__ import annotations

import hashlib
import json
import os
from pathlib import Path

from . import __version__
from .graph import Graph

CACHE_ENV = "CWREG_CACHE_DIR"
CACHE_FILE = "regularity.jsonl"


def graph_hash(g: Graph) -> str:
    return hashlib.sha256(g.canonical_key().encode()).hexdigest()


def resolve_cache_dir(path: str | None) -> Path | None:
    path = path or os.environ.get(CACHE_ENV)
    return Path(path) if path else None


class RegularityCache:
    """Values keyed by (edge-list hash, s, field characteristic, version, kind).

    Lines are only ever appended; on load the last line for a key wins, and
    lines that fail to parse (for example a torn final write) are ignored.
    """

    def __init__(self, directory: Path, version: str = __version__):
        self.path = Path(directory) / CACHE_FILE
        self.version = version
        self._data: dict[tuple, object] = {}
        if self.path.exists():
            with self.path.open() as fh:
                for line in fh:
                    try:
                        rec = json.loads(line)
                        self._data[self._key(rec["hash"], rec["s"], rec["field_char"], rec["version"], rec["kind"])] = rec["value"]
                    except (ValueError, KeyError):
                        continue

    @staticmethod
    def _key(h, s, field_char, version, kind):
        return (h, int(s), int(field_char), version, kind)

    def get(self, g: Graph, s: int, field_char: int, kind: str = "symbolic"):
        return self._data.get(self._key(graph_hash(g), s, field_char, self.version, kind))

    def put(self, g: Graph, s: int, field_char: int, value, kind: str = "symbolic"):
        h = graph_hash(g)
        key = self._key(h, s, field_char, self.version, kind)
        if self._data.get(key) == value:
            return
        self._data[key] = value
        self.path.parent.mkdir(parents=True, exist_ok=True)
        rec = {"hash": h, "s": s, "field_char": field_char, "version": self.version, "kind": kind, "value": value}
        with self.path.open("a") as fh:
            fh.write(json.dumps(rec, sort_keys=True) + "\n")

    def __len__(self):
        return len(self._data)
